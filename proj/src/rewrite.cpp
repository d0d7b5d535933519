#include "hopfkit/rewrite.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace hopfkit
{

struct RuleSet::Memo
{
  std::map<std::pair<Word, int>, Element> table;
};

int inversions(const Word &w)
{
  int n = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j)
      n += w[i] > w[j];
  return n;
}

namespace
{

constexpr int kMaxLetters = 256;

bool smaller_measure(const Word &a, const Word &b)
{
  const int ia = inversions(a);
  const int ib = inversions(b);
  if (ia != ib)
    return ia < ib;
  return ShortLex{}(a, b);
}

Element drop_above(Element x, int budget)
{
  x.transform_coefficients([budget](const Scalar &c) { return c.dropped_above(budget); });
  return x;
}

Word splice(const Word &w, std::size_t pos, std::size_t len, const Word &u)
{
  Word out;
  out.reserve(w.size() - len + u.size());
  out.insert(out.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(pos));
  out.insert(out.end(), u.begin(), u.end());
  out.insert(out.end(), w.begin() + static_cast<std::ptrdiff_t>(pos + len), w.end());
  return out;
}

} // namespace

RuleSet::RuleSet(std::vector<RewriteRule> rules, NameTable names, EngineConfig config)
    : rules_(std::move(rules)), names_(std::move(names)), config_(config),
      pair_rule_(static_cast<std::size_t>(kMaxLetters) * kMaxLetters, -1)
{
  for (std::size_t r = 0; r < rules_.size(); ++r)
  {
    const Word &p = rules_[r].pattern;
    if (p.size() == 2)
      pair_rule_[p[0] * kMaxLetters + p[1]] = static_cast<int>(r);
    else
      long_rules_.push_back(r);
  }
}

void RuleSet::check_length(std::size_t n) const
{
  if (n > static_cast<std::size_t>(config_.degree_cap))
    throw Error(Errc::degree_cap_exceeded, "word of length " + std::to_string(n) + " exceeds degree cap " +
                                               std::to_string(config_.degree_cap));
}

std::vector<std::pair<std::size_t, std::size_t>> RuleSet::redexes(const Word &w) const
{
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < w.size(); ++i)
  {
    if (i + 1 < w.size())
      if (int r = pair_rule_[w[i] * kMaxLetters + w[i + 1]]; r >= 0)
        out.emplace_back(i, static_cast<std::size_t>(r));
    for (std::size_t r : long_rules_)
    {
      const Word &p = rules_[r].pattern;
      if (i + p.size() <= w.size() && std::equal(p.begin(), p.end(), w.begin() + static_cast<std::ptrdiff_t>(i)))
        out.emplace_back(i, r);
    }
  }
  return out;
}

bool RuleSet::is_normal(const Word &w) const
{
  return redexes(w).empty();
}

Element RuleSet::rewrite_once(const Word &w, std::size_t pos, std::size_t r) const
{
  const RewriteRule &rule = rules_[r];
  Element out(truncation());
  for (const auto &[u, c] : rule.replacement.terms())
  {
    Word next = splice(w, pos, rule.pattern.size(), u);
    check_length(next.size());
    out.add_term(std::move(next), c);
  }
  out.lower_effective(rule.replacement.effective_order());
  return out;
}

bool RuleSet::gapped_step(const Word &w, Element &out) const
{
  for (std::size_t r = 0; r < rules_.size(); ++r)
  {
    const RewriteRule &rule = rules_[r];
    if (!rule.leading || rule.pattern.size() != 2 || rule.pattern[0] >= rule.pattern[1])
      continue;
    const Letter x = rule.pattern[0];
    const Letter y = rule.pattern[1];
    for (std::size_t j = 0; j < w.size(); ++j)
    {
      if (w[j] != y)
        continue;
      std::size_t i = j;
      bool movable = true;
      while (i > 0 && w[i - 1] != x)
      {
        --i;
        const Letter g = w[i];
        const int pr = pair_rule_[y * kMaxLetters + g];
        if (g == y || pr < 0 || rules_[static_cast<std::size_t>(pr)].leading)
        {
          movable = false;
          break;
        }
      }
      if (!movable || i == 0 || i == j)
        continue;
      const std::size_t xpos = i - 1;

      // u*y = y*u' + corrections, moving y left one letter at a time:
      // g*y = y*g - r where y*g -> g*y + r.
      const Truncation t = truncation();
      Element moved = Element::monomial({y}, Scalar(1, t));
      for (std::size_t k = j; k-- > i;)
      {
        const Letter g = w[k];
        const auto &sort = rules_[static_cast<std::size_t>(pair_rule_[y * kMaxLetters + g])];
        Element correction = sort.replacement - Element::monomial({g, y}, Scalar(1, t));
        // moved currently equals (w[k+1..j) * y) rewritten; prepend g.
        Element next(t);
        for (const auto &[u, c] : moved.terms())
        {
          if (!u.empty() && u.front() == y)
          {
            Word rest(u.begin() + 1, u.end());
            Word swapped{y, g};
            swapped.insert(swapped.end(), rest.begin(), rest.end());
            next.add_term(std::move(swapped), c);
            next -= multiply(correction, Element::monomial(std::move(rest), c), config_.degree_cap);
          }
          else
          {
            Word prefixed{g};
            prefixed.insert(prefixed.end(), u.begin(), u.end());
            next.add_term(std::move(prefixed), c);
          }
        }
        moved = std::move(next);
      }

      out = Element(truncation());
      const Word head(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(xpos + 1));
      const Word rest(w.begin() + static_cast<std::ptrdiff_t>(j + 1), w.end());
      for (const auto &[u, c] : moved.terms())
      {
        Word full = head;
        full.insert(full.end(), u.begin(), u.end());
        full.insert(full.end(), rest.begin(), rest.end());
        check_length(full.size());
        out.add_term(std::move(full), c);
      }
      out.lower_effective(moved.effective_order());
      return true;
    }
  }
  return false;
}

Element RuleSet::reduce(const Word &w, int budget, long &fuel, Memo *local, std::uint64_t *rng) const
{
  const auto key = std::make_pair(w, budget);
  if (local)
  {
    if (auto it = local->table.find(key); it != local->table.end())
      return it->second;
  }
  else
  {
    std::lock_guard lock(mutex_);
    if (auto it = cache_.find(key); it != cache_.end())
      return it->second;
  }

  std::size_t pos = 0;
  std::size_t rule = 0;
  bool found = false;
  if (rng)
  {
    const auto all = redexes(w);
    if (!all.empty())
    {
      *rng = *rng * 6364136223846793005ULL + 1442695040888963407ULL;
      std::tie(pos, rule) = all[(*rng >> 33) % all.size()];
      found = true;
    }
  }
  else
  {
    for (std::size_t i = 0; i < w.size() && !found; ++i)
    {
      if (i + 1 < w.size())
        if (int r = pair_rule_[w[i] * kMaxLetters + w[i + 1]]; r >= 0)
        {
          pos = i;
          rule = static_cast<std::size_t>(r);
          found = true;
          break;
        }
      for (std::size_t r : long_rules_)
      {
        const Word &p = rules_[r].pattern;
        if (i + p.size() <= w.size() &&
            std::equal(p.begin(), p.end(), w.begin() + static_cast<std::ptrdiff_t>(i)))
        {
          pos = i;
          rule = r;
          found = true;
          break;
        }
      }
    }
  }

  Element step(truncation());
  if (found)
    step = rewrite_once(w, pos, rule);
  else
    found = gapped_step(w, step);

  Element result(truncation());
  if (!found)
  {
    result.add_term(w, Scalar(1, truncation()));
  }
  else
  {
    if (--fuel < 0)
      throw Error(Errc::fuel_exhausted, "rewrite fuel of " + std::to_string(config_.fuel) +
                                            " steps exhausted on " + render_word(w, names_));
    for (const auto &[u, c] : step.terms())
    {
      const int v = c.h_valuation();
      if (v > budget)
        continue;
      result += reduce(u, budget - v, fuel, local, rng) * c;
    }
    result.lower_effective(step.effective_order());
    result = drop_above(std::move(result), budget);
  }

  if (local)
    local->table.emplace(key, result);
  else
  {
    std::lock_guard lock(mutex_);
    cache_.emplace(key, result);
  }
  return result;
}

Element RuleSet::normal_form(const Word &w) const
{
  long fuel = config_.fuel;
  return reduce(w, config_.order, fuel, nullptr, nullptr);
}

Element RuleSet::normal_form(const Element &x) const
{
  long fuel = config_.fuel;
  Element out(truncation());
  for (const auto &[w, c] : x.terms())
  {
    const int v = c.h_valuation();
    if (v > config_.order)
      continue;
    out += reduce(w, config_.order - v, fuel, nullptr, nullptr) * c;
  }
  out.lower_effective(x.effective_order());
  return out;
}

Element RuleSet::normal_form_randomized(const Element &x, std::uint64_t seed) const
{
  long fuel = config_.fuel;
  Memo memo;
  std::uint64_t state = seed * 0x9E3779B97F4A7C15ULL + 1;
  Element out(truncation());
  for (const auto &[w, c] : x.terms())
  {
    const int v = c.h_valuation();
    if (v > config_.order)
      continue;
    out += reduce(w, config_.order - v, fuel, &memo, &state) * c;
  }
  out.lower_effective(x.effective_order());
  return out;
}

Tensor RuleSet::normal_form(const Tensor &x) const
{
  long fuel = config_.fuel;
  const int n = x.slots();
  Tensor out(n, truncation());
  for (const auto &[words, c] : x.terms())
  {
    Tensor acc(n, truncation());
    acc.add_term(std::vector<Word>(static_cast<std::size_t>(n)), c);
    for (int s = 0; s < n; ++s)
    {
      Tensor next(n, truncation());
      for (const auto &[partial, d] : acc.terms())
      {
        const int v = d.h_valuation();
        if (v > config_.order)
          continue;
        const Element slot = reduce(words[static_cast<std::size_t>(s)], config_.order - v, fuel, nullptr, nullptr);
        for (const auto &[u, e] : slot.terms())
        {
          auto key = partial;
          key[static_cast<std::size_t>(s)] = u;
          next.add_term(std::move(key), d * e);
        }
      }
      acc = std::move(next);
    }
    out += acc;
  }
  out.lower_effective(x.effective_order());
  return out;
}

RuleSetPtr compile_rules(const Presentation &p, const EngineConfig &config)
{
  const SymbolTable symbols = p.symbols();
  const Truncation t = config.truncation();
  const EvalOptions opts{t, config.degree_cap};
  const NameTable names = p.generators;
  if (names.size() > static_cast<std::size_t>(kMaxLetters))
    throw Error(Errc::malformed_relation, "too many generators");

  std::vector<RewriteRule> rules;
  std::set<Word> patterns;

  auto add_rule = [&](Word pattern, Element replacement, bool leading, std::string origin) {
    if (!patterns.insert(pattern).second)
      throw Error(Errc::malformed_relation, origin + ": a second rule for " + render_word(pattern, names));
    for (const auto &[u, c] : replacement.terms())
      if (c.h_valuation() == 0 && !smaller_measure(u, pattern))
        throw Error(Errc::malformed_relation, origin + ": replacement word " + render_word(u, names) +
                                                  " is not below " + render_word(pattern, names) +
                                                  " at order h^0");
    rules.push_back({std::move(pattern), std::move(replacement), leading, std::move(origin)});
  };

  for (const auto &rel : p.relations)
  {
    const int i = p.index_of(rel.left);
    const int j = p.index_of(rel.right);
    const std::string origin = "[" + rel.left + "," + rel.right + "]";
    if (i < 0 || j < 0)
      throw Error(Errc::malformed_relation, origin + ": unknown generator");
    if (i == j)
      throw Error(Errc::malformed_relation, origin + ": a generator commuted with itself");
    Element rhs = as_element(evaluate(rel.rhs, symbols, opts), t);
    const auto hi = static_cast<Letter>(std::max(i, j));
    const auto lo = static_cast<Letter>(std::min(i, j));
    if (i < j)
      rhs = -rhs;
    add_rule({hi, lo}, Element::monomial({lo, hi}, Scalar(1, t)) + rhs, false, origin);
  }

  for (const auto &g : p.central)
  {
    const int c = p.index_of(g);
    for (int x = 0; x < static_cast<int>(names.size()); ++x)
    {
      if (x == c)
        continue;
      const auto hi = static_cast<Letter>(std::max(c, x));
      const auto lo = static_cast<Letter>(std::min(c, x));
      if (patterns.contains(Word{hi, lo}))
        continue;
      add_rule({hi, lo}, Element::monomial({lo, hi}, Scalar(1, t)), false, "central " + g);
    }
  }

  for (const auto &x : p.extras)
  {
    const std::string origin = "extra " + to_string(x.lhs);
    const Element lhs = as_element(evaluate(x.lhs, symbols, opts), t);
    if (lhs.size() != 1 || !lhs.terms().begin()->second.is_rational() || lhs.terms().begin()->first.size() < 2)
      throw Error(Errc::malformed_relation, origin + ": left side must be one word of length >= 2");
    const auto &[word, coeff] = *lhs.terms().begin();
    Element rhs = as_element(evaluate(x.rhs, symbols, opts), t);
    rhs.scale(Rational(1) / coeff.constant_term());
    add_rule(word, std::move(rhs), true, origin);
  }

  // Inter-reduce replacements so every rule maps straight to normal words.
  auto draft = std::make_shared<RuleSet>(rules, names, config);
  for (auto &r : rules)
    r.replacement = draft->normal_form(r.replacement);
  return std::make_shared<RuleSet>(std::move(rules), names, config);
}

namespace
{

Check compare(const std::string &id, const Element &a, const Element &b, const RuleSet &rs, std::string detail = "")
{
  Check c;
  c.id = id;
  const Element diff = a - b;
  c.pass = diff.is_zero();
  c.order = std::min(a.effective_order(), b.effective_order());
  if (!c.pass)
  {
    c.witness = rs.render(diff);
    c.order = diff.h_valuation();
  }
  c.detail = std::move(detail);
  return c;
}

} // namespace

Report check_consistency(const RuleSet &rs, int samples, std::uint64_t seed)
{
  Report report;
  report.subject = "consistency";
  const auto &rules = rs.rules();
  const Truncation t = rs.truncation();

  // Overlap diamonds: a proper suffix of one pattern equals a prefix of another.
  for (std::size_t r1 = 0; r1 < rules.size(); ++r1)
    for (std::size_t r2 = 0; r2 < rules.size(); ++r2)
    {
      const Word &p1 = rules[r1].pattern;
      const Word &p2 = rules[r2].pattern;
      for (std::size_t k = 1; k < p1.size() && k < p2.size(); ++k)
      {
        if (!std::equal(p1.end() - static_cast<std::ptrdiff_t>(k), p1.end(), p2.begin()))
          continue;
        Word w = p1;
        w.insert(w.end(), p2.begin() + static_cast<std::ptrdiff_t>(k), p2.end());
        const Element left = rs.normal_form(rs.rewrite_once(w, 0, r1));
        const Element right = rs.normal_form(rs.rewrite_once(w, p1.size() - k, r2));
        report.add(compare("consistency.overlap[" + render_word(w, rs.names()) + "]", left, right, rs,
                           rules[r1].origin + " vs " + rules[r2].origin));
      }
    }

  std::mt19937_64 gen(seed);
  const int letters = static_cast<int>(rs.names().size());
  const int max_len = std::min(5, std::max(2, rs.config().degree_cap / 2));
  std::uniform_int_distribution<int> pick(0, letters - 1);
  std::uniform_int_distribution<int> length(2, max_len);

  Check bracketing{"consistency.bracketing", true, "", t.order, ""};
  Check strategy{"consistency.strategy", true, "", t.order, ""};
  for (int s = 0; s < samples; ++s)
  {
    Word w(static_cast<std::size_t>(length(gen)));
    for (auto &l : w)
      l = static_cast<Letter>(pick(gen));
    const Element full = rs.normal_form(w);

    // Every bracketing of w: normal forms of all sub-intervals, combined.
    const std::size_t n = w.size();
    std::vector<std::vector<std::vector<Element>>> nf(n, std::vector<std::vector<Element>>(n + 1));
    for (std::size_t i = 0; i < n; ++i)
      nf[i][i + 1] = {rs.normal_form(Word{w[i]})};
    for (std::size_t len = 2; len <= n; ++len)
      for (std::size_t i = 0; i + len <= n; ++i)
      {
        auto &cell = nf[i][i + len];
        for (std::size_t k = i + 1; k < i + len; ++k)
          for (const auto &x : nf[i][k])
            for (const auto &y : nf[k][i + len])
            {
              Element z = rs.normal_form(multiply(x, y, rs.config().degree_cap));
              if (std::find(cell.begin(), cell.end(), z) == cell.end())
                cell.push_back(std::move(z));
            }
      }
    for (const auto &z : nf[0][n])
      if (bracketing.pass && !(z == full))
      {
        bracketing.pass = false;
        bracketing.witness = rs.render(z - full);
        bracketing.order = (z - full).h_valuation();
        bracketing.detail = "word " + render_word(w, rs.names());
      }

    const Element random = rs.normal_form_randomized(Element::monomial(w, Scalar(1, t)), seed + static_cast<std::uint64_t>(s));
    if (strategy.pass && !(random == full))
    {
      strategy.pass = false;
      strategy.witness = rs.render(random - full);
      strategy.order = (random - full).h_valuation();
      strategy.detail = "word " + render_word(w, rs.names());
    }
  }
  if (bracketing.pass)
    bracketing.detail = std::to_string(samples) + " samples";
  if (strategy.pass)
    strategy.detail = std::to_string(samples) + " samples";
  report.add(std::move(bracketing));
  report.add(std::move(strategy));
  return report;
}

} // namespace hopfkit
