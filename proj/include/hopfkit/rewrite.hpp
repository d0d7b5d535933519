#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "hopfkit/presentation.hpp"
#include "hopfkit/report.hpp"

namespace hopfkit
{

struct EngineConfig
{
  int order = 3;
  int eps_bound = 0;
  int degree_cap = kDefaultDegreeCap;
  long fuel = 1'000'000;

  Truncation truncation() const { return {order, eps_bound}; }
};

/// pattern -> replacement.  Sorting rules have an inverted two-letter
/// pattern; leading-word rules come from extra identities.
struct RewriteRule
{
  Word pattern;
  Element replacement;
  bool leading = false;
  std::string origin;
};

class RuleSet
{
public:
  RuleSet(std::vector<RewriteRule> rules, NameTable names, EngineConfig config);
  RuleSet(const RuleSet &) = delete;
  RuleSet &operator=(const RuleSet &) = delete;

  const std::vector<RewriteRule> &rules() const noexcept { return rules_; }
  const NameTable &names() const noexcept { return names_; }
  const EngineConfig &config() const noexcept { return config_; }
  Truncation truncation() const { return config_.truncation(); }

  /// Leftmost-innermost reduction with a shared memo table.
  Element normal_form(const Element &x) const;
  Tensor normal_form(const Tensor &x) const;
  Element normal_form(const Word &w) const;

  /// Same normal form reached by rewriting at a random redex each step.
  Element normal_form_randomized(const Element &x, std::uint64_t seed) const;

  bool is_normal(const Word &w) const;

  /// Redexes of w as (position, rule index), leftmost first.
  std::vector<std::pair<std::size_t, std::size_t>> redexes(const Word &w) const;

  /// One rewrite step at pos with rule r, no further reduction.
  Element rewrite_once(const Word &w, std::size_t pos, std::size_t r) const;

  /// For a sorted word x u y where x*y is a leading word and u only holds
  /// letters that y can be commuted past, rewrites u*y as y*u' plus
  /// corrections so the leading rule becomes applicable.  Returns false
  /// when no such match exists.
  bool gapped_step(const Word &w, Element &out) const;

  std::string render(const Element &x) const { return hopfkit::render(x, names_); }
  std::string render(const Tensor &x) const { return hopfkit::render(x, names_); }

private:
  struct Memo;

  Element reduce(const Word &w, int budget, long &fuel, Memo *local, std::uint64_t *rng) const;
  void check_length(std::size_t n) const;

  std::vector<RewriteRule> rules_;
  NameTable names_;
  EngineConfig config_;
  std::vector<int> pair_rule_; // letter pair -> rule index or -1
  std::vector<std::size_t> long_rules_;
  mutable std::mutex mutex_;
  mutable std::map<std::pair<Word, int>, Element> cache_;
};

using RuleSetPtr = std::shared_ptr<const RuleSet>;

/// Orients every relation by generator order, adds the commutations implied
/// by central declarations, and turns extra identities into leading-word
/// rules.  Throws malformed_relation on duplicate patterns or a rule that
/// fails the termination certificate.
RuleSetPtr compile_rules(const Presentation &p, const EngineConfig &config = {});

/// Overlap diamonds of every pair of rules, then random words checked for
/// bracketing independence and for agreement with randomized reduction.
Report check_consistency(const RuleSet &rules, int samples = 1000, std::uint64_t seed = 1);

/// Number of pairs i < j with w[i] > w[j].
int inversions(const Word &w);

} // namespace hopfkit
