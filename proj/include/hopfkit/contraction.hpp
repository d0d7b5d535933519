#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hopfkit/algebra.hpp"

namespace hopfkit
{

inline constexpr int kContractionEpsBound = 2;

struct ContractedRelation
{
  std::string left;
  std::string right;
  Element rhs; // over target letters, eps-free
};

struct ContractedHopf
{
  std::vector<Tensor> coproduct; // indexed by target letter
  std::vector<Scalar> counit;
  std::vector<Element> antipode;
};

/// A scaling map instantiated on a source presentation (with its extension
/// generators adjoined) and, optionally, the expected target.
class Contraction
{
public:
  Contraction(const ScalingMap &s, const Presentation &source, std::optional<Presentation> target,
              EngineConfig config = {}, int eps_bound = kContractionEpsBound);

  /// Source and target looked up among the built-ins.
  static Contraction builtin(const ScalingMap &s, bool with_target = true, EngineConfig config = {});

  const ScalingMap &scaling() const noexcept { return scaling_; }
  const Algebra &source() const noexcept { return *source_; }
  const Algebra *target() const noexcept { return target_.get(); }
  const NameTable &target_names() const noexcept { return target_names_; }
  Truncation truncation() const { return {config_.order, 0}; }

  /// Target generator i as an element of the source.
  const Element &forward(Letter target_letter) const { return forward_[target_letter]; }
  /// Source generator j as an eps-Laurent element over target letters.
  const Element &inverse(Letter source_letter) const { return inverse_[source_letter]; }

  /// Rewrites a source element in target letters, keeping eps.
  Element substitute(const Element &x) const;
  Tensor substitute(const Tensor &x) const;

  /// substitute, then eps -> 0.  singular_limit names `what`.
  Element limit(const Element &x, const std::string &what) const;
  Tensor limit(const Tensor &x, const std::string &what) const;
  Scalar limit(const Scalar &x, const std::string &what) const;

  /// [T_i, T_j] for every pair of target generators, i > j in target order.
  std::vector<ContractedRelation> relations() const;
  ContractedHopf hopf() const;
  /// Each extra identity of the source, contracted and made monic in its
  /// largest word; zero limits are dropped.
  std::vector<Element> extras() const;

  /// eps^power * x, then the limit; x is over the source.
  Element contract_element(const Element &x, int power, const std::string &what) const;
  /// Uses the renormalization power registered for `name`.
  Element contract_element(const Element &x, const std::string &name) const;

  /// Normal-form comparison against the target (requires one); target
  /// notes become annotations.
  Report compare() const;

  /// The contracted data as a presentation over the target generators.
  Presentation as_presentation() const;

  std::string render(const Element &x) const { return hopfkit::render(x, target_names_); }
  std::string render(const Tensor &x) const { return hopfkit::render(x, target_names_); }

private:
  void solve_inverse();
  Element word_image(const Word &w) const;
  Element target_nf(const Element &x) const { return target_ ? target_->nf(x) : x; }
  Tensor target_nf(const Tensor &x) const { return target_ ? target_->nf(x) : x; }

  ScalingMap scaling_;
  EngineConfig config_;
  std::unique_ptr<Algebra> source_;
  std::unique_ptr<Algebra> target_;
  std::optional<Presentation> target_pres_;
  NameTable target_names_;
  std::vector<Element> forward_;
  std::vector<Element> inverse_;
};

} // namespace hopfkit
