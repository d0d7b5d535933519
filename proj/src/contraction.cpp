#include "hopfkit/contraction.hpp"

#include <algorithm>
#include <cstdlib>

namespace hopfkit
{

namespace
{

Element monic(Element x)
{
  if (x.is_zero())
    return x;
  const Scalar &lead = std::prev(x.terms().end())->second;
  if (lead.is_rational() && !lead.is_zero())
    x.scale(Rational(1) / lead.constant_term());
  return x;
}

} // namespace

Contraction::Contraction(const ScalingMap &s, const Presentation &source, std::optional<Presentation> target,
                         EngineConfig config, int eps_bound)
    : scaling_(s), config_(config), target_pres_(std::move(target))
{
  config_.eps_bound = 0;
  EngineConfig source_config = config;
  source_config.eps_bound = eps_bound;
  source_ = std::make_unique<Algebra>(extended_source(s, source), source_config);

  if (target_pres_)
  {
    target_names_ = target_pres_->generators;
    target_ = std::make_unique<Algebra>(*target_pres_, config_);
    if (s.assignment.size() != target_names_.size())
      throw Error(Errc::validation_error, "scaling " + s.name + " assigns " + std::to_string(s.assignment.size()) +
                                              " generators, " + target_pres_->name + " has " +
                                              std::to_string(target_names_.size()));
  }
  else
  {
    for (const auto &[g, e] : s.assignment)
      target_names_.push_back(g);
  }

  const Truncation ts = source_->truncation();
  forward_.resize(target_names_.size());
  std::vector<bool> assigned(target_names_.size(), false);
  for (const auto &[g, e] : s.assignment)
  {
    int idx = -1;
    if (target_pres_)
      idx = target_pres_->index_of(g);
    else
      idx = static_cast<int>(std::find(target_names_.begin(), target_names_.end(), g) - target_names_.begin());
    if (idx < 0 || idx >= static_cast<int>(target_names_.size()))
      throw Error(Errc::validation_error, "scaling " + s.name + " maps unknown target generator '" + g + "'");
    if (assigned[static_cast<std::size_t>(idx)])
      throw Error(Errc::validation_error, "scaling " + s.name + " maps '" + g + "' twice");
    assigned[static_cast<std::size_t>(idx)] = true;
    forward_[static_cast<std::size_t>(idx)] = source_->nf(as_element(source_->evaluate(e), ts));
  }
  solve_inverse();
}

Contraction Contraction::builtin(const ScalingMap &s, bool with_target, EngineConfig config)
{
  std::optional<Presentation> target;
  if (with_target)
    target = hopfkit::builtin(s.target);
  return Contraction(s, hopfkit::builtin(s.source), std::move(target), config);
}

void Contraction::solve_inverse()
{
  const std::size_t n = target_names_.size();
  const std::size_t m = static_cast<std::size_t>(source_->size());
  if (n != m)
    throw Error(Errc::validation_error, "scaling " + scaling_.name + " maps " + std::to_string(m) +
                                            " source generators onto " + std::to_string(n) + " target generators");
  const Truncation ts = source_->truncation();
  std::vector<std::vector<Scalar>> a(n, std::vector<Scalar>(m, Scalar(ts)));
  std::vector<Element> rhs;
  for (std::size_t i = 0; i < n; ++i)
  {
    rhs.push_back(Element::generator(static_cast<Letter>(i), ts));
    for (const auto &[w, c] : forward_[i].terms())
    {
      if (w.size() != 1)
        throw Error(Errc::validation_error, "scaling " + scaling_.name + ": image of " + target_names_[i] +
                                                " is not linear in the source generators");
      a[i][w[0]] += c;
    }
  }

  std::vector<int> pivot(m, -1);
  std::vector<bool> used(n, false);
  for (std::size_t j = 0; j < m; ++j)
  {
    int best = -1;
    int best_eps = 0;
    for (std::size_t i = 0; i < n; ++i)
    {
      const auto &terms = a[i][j].terms();
      if (used[i] || terms.size() != 1 || terms[0].hpow != 0)
        continue;
      if (best < 0 || std::abs(terms[0].eps) < best_eps)
      {
        best = static_cast<int>(i);
        best_eps = std::abs(terms[0].eps);
      }
    }
    if (best < 0)
      throw Error(Errc::validation_error, "scaling " + scaling_.name + " cannot be inverted for source generator " +
                                              source_->names()[j]);
    const auto p = static_cast<std::size_t>(best);
    const auto &t = a[p][j].terms()[0];
    const Scalar inv = Scalar::monomial(Rational(1) / t.coeff, 0, -t.eps, ts);
    for (auto &x : a[p])
      x = x * inv;
    rhs[p] = rhs[p] * inv;
    for (std::size_t k = 0; k < n; ++k)
    {
      if (k == p || a[k][j].is_zero())
        continue;
      const Scalar f = a[k][j];
      for (std::size_t c = 0; c < m; ++c)
        a[k][c] -= f * a[p][c];
      rhs[k] -= rhs[p] * f;
    }
    used[p] = true;
    pivot[j] = best;
  }
  for (std::size_t j = 0; j < m; ++j)
    inverse_.push_back(rhs[static_cast<std::size_t>(pivot[j])]);
}

Element Contraction::word_image(const Word &w) const
{
  Element out = Element::unit(source_->truncation());
  for (Letter l : w)
    out = multiply(out, inverse_[l], config_.degree_cap);
  return out;
}

Element Contraction::substitute(const Element &x) const
{
  Element out(source_->truncation());
  for (const auto &[w, c] : x.terms())
    out += word_image(w) * c;
  out.lower_effective(x.effective_order());
  return out;
}

Tensor Contraction::substitute(const Tensor &x) const
{
  const int n = x.slots();
  const Truncation ts = source_->truncation();
  Tensor out(n, ts);
  for (const auto &[words, c] : x.terms())
  {
    Tensor acc(n, ts);
    acc.add_term(std::vector<Word>(static_cast<std::size_t>(n)), c);
    for (int s = 0; s < n; ++s)
    {
      const Element img = word_image(words[static_cast<std::size_t>(s)]);
      Tensor next(n, ts);
      for (const auto &[key, d] : acc.terms())
        for (const auto &[u, e] : img.terms())
        {
          auto k = key;
          k[static_cast<std::size_t>(s)] = u;
          next.add_term(std::move(k), d * e);
        }
      acc = std::move(next);
    }
    out += acc;
  }
  out.lower_effective(x.effective_order());
  return out;
}

Element Contraction::limit(const Element &x, const std::string &what) const
{
  try
  {
    return target_nf(with_truncation(limit_epsilon(substitute(x)), truncation()));
  }
  catch (const Error &e)
  {
    if (e.code() != Errc::singular_limit)
      throw;
    throw Error(Errc::singular_limit, what + " diverges as eps -> 0");
  }
}

Tensor Contraction::limit(const Tensor &x, const std::string &what) const
{
  try
  {
    return target_nf(with_truncation(limit_epsilon(substitute(x)), truncation()));
  }
  catch (const Error &e)
  {
    if (e.code() != Errc::singular_limit)
      throw;
    throw Error(Errc::singular_limit, what + " diverges as eps -> 0");
  }
}

Scalar Contraction::limit(const Scalar &x, const std::string &what) const
{
  try
  {
    return limit_epsilon(x).with_eps_bound(0);
  }
  catch (const Error &e)
  {
    if (e.code() != Errc::singular_limit)
      throw;
    throw Error(Errc::singular_limit, what + " diverges as eps -> 0");
  }
}

std::vector<ContractedRelation> Contraction::relations() const
{
  std::vector<ContractedRelation> out;
  const std::size_t n = target_names_.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j)
    {
      const Element c = source_->nf(multiply(forward_[i], forward_[j], config_.degree_cap) -
                                    multiply(forward_[j], forward_[i], config_.degree_cap));
      const std::string what = "[" + target_names_[i] + "," + target_names_[j] + "]";
      out.push_back({target_names_[i], target_names_[j], limit(c, "relation " + what)});
    }
  return out;
}

ContractedHopf Contraction::hopf() const
{
  if (!source_->has_hopf())
    throw Error(Errc::no_hopf_data, source_->name() + " has no coproduct, counit or antipode");
  ContractedHopf out;
  for (std::size_t i = 0; i < target_names_.size(); ++i)
  {
    const std::string &g = target_names_[i];
    out.coproduct.push_back(limit(source_->coproduct(forward_[i]), "coproduct(" + g + ")"));
    out.counit.push_back(limit(source_->counit(forward_[i]), "counit(" + g + ")"));
    out.antipode.push_back(limit(source_->antipode(forward_[i]), "antipode(" + g + ")"));
  }
  return out;
}

std::vector<Element> Contraction::extras() const
{
  std::vector<Element> out;
  const Truncation ts = source_->truncation();
  for (const auto &x : source_->presentation().extras)
  {
    const Element residue = as_element(source_->evaluate(x.lhs), ts) - as_element(source_->evaluate(x.rhs), ts);
    // The identity holds in the source, so any eps power of it may be taken;
    // use the lowest one that leaves a finite, nonzero limit.
    Element img = substitute(residue);
    int lowest = 0;
    for (const auto &[w, c] : img.terms())
      lowest = std::min(lowest, c.min_eps());
    if (lowest < 0)
      img.transform_coefficients([&](const Scalar &c) { return c.shifted(0, -lowest, 1); });
    Element lim = with_truncation(limit_epsilon(img), truncation());
    if (!lim.is_zero())
      out.push_back(monic(std::move(lim)));
  }
  return out;
}

Element Contraction::contract_element(const Element &x, int power, const std::string &what) const
{
  const Truncation ts = source_->truncation();
  Element scaled = with_truncation(x, ts) * Scalar::monomial(1, 0, power, ts);
  return limit(source_->nf(scaled), what);
}

Element Contraction::contract_element(const Element &x, const std::string &name) const
{
  auto it = scaling_.renorm.find(name);
  if (it == scaling_.renorm.end())
    throw Error(Errc::validation_error, "scaling " + scaling_.name + " registers no renormalization for " + name);
  return contract_element(x, it->second, name);
}

Report Contraction::compare() const
{
  if (!target_)
    throw Error(Errc::validation_error, "no target presentation to compare against");
  Report r;
  r.subject = "contract " + scaling_.name + ": " + source_->name() + " -> " + target_->name();
  r.annotations = target_->presentation().notes;

  auto check = [&](std::string id, const auto &computed, const auto &expected) {
    Check c{std::move(id), computed == expected, "", std::min(computed.effective_order(), expected.effective_order()), ""};
    if (!c.pass)
    {
      const auto diff = computed - expected;
      c.order = diff.h_valuation();
      c.witness = "computed " + render(computed) + " ; expected " + render(expected);
    }
    r.add(std::move(c));
  };

  const Truncation t = truncation();
  for (const auto &rel : relations())
  {
    const Letter x = target_->letter(rel.left);
    const Letter y = target_->letter(rel.right);
    const Element expected =
        target_->nf(Element::monomial({x, y}, Scalar(1, t)) - Element::monomial({y, x}, Scalar(1, t)));
    check("relation[" + rel.left + "," + rel.right + "]", rel.rhs, expected);
  }

  const auto computed_extras = extras();
  for (const auto &e : computed_extras)
  {
    const std::string label = render_word(std::prev(e.terms().end())->first, target_names_);
    check("extra[" + label + "]", target_->nf(e), Element(t));
  }
  for (const auto &x : target_->presentation().extras)
  {
    const Element lhs = target_->element(to_string(x.lhs));
    const Element expected = monic(lhs - target_->element(to_string(x.rhs)));
    const bool found = std::any_of(computed_extras.begin(), computed_extras.end(),
                                   [&](const Element &e) { return e == expected; });
    Check c{"extra.derived[" + to_string(x.lhs) + "]", found, "", t.order, ""};
    if (!found)
      c.witness = "not produced by the contraction: " + render(expected);
    r.add(std::move(c));
  }

  if (target_->has_hopf() && source_->has_hopf())
  {
    const ContractedHopf hopf_data = hopf();
    for (int i = 0; i < target_->size(); ++i)
    {
      const auto g = static_cast<Letter>(i);
      const std::string &name = target_names_[g];
      check("coproduct[" + name + "]", hopf_data.coproduct[g], target_->coproduct_of(g));
      const Scalar &cu = hopf_data.counit[g];
      const Scalar &eu = target_->counit_of(g);
      Check c{"counit[" + name + "]", cu == eu, "", t.order, ""};
      if (!c.pass)
        c.witness = "computed " + to_string(cu) + " ; expected " + to_string(eu);
      r.add(std::move(c));
      check("antipode[" + name + "]", hopf_data.antipode[g], target_->antipode_of(g));
    }
  }
  else if (target_->has_hopf())
    r.annotations.push_back("source has no Hopf data; coalgebra not compared");
  return r;
}

Presentation Contraction::as_presentation() const
{
  Presentation p;
  p.name = target_pres_ ? target_pres_->name : scaling_.target;
  p.generators = target_names_;
  if (target_pres_)
  {
    p.aliases = target_pres_->aliases;
    p.central = target_pres_->central;
    p.notes = target_pres_->notes;
  }
  const SymbolTable symbols = p.symbols();
  auto expr = [&](const std::string &text) { return parse_expr(text, symbols); };

  for (const auto &rel : relations())
  {
    Relation out{rel.left, rel.right, nullptr};
    Element rhs = rel.rhs;
    if (target_pres_)
      for (const auto &tr : target_pres_->relations)
        if (tr.left == rel.right && tr.right == rel.left)
        {
          std::swap(out.left, out.right);
          rhs = -rhs;
        }
    out.rhs = expr(render(rhs));
    p.relations.push_back(std::move(out));
  }
  if (!target_pres_)
  {
    for (std::size_t i = 0; i < target_names_.size(); ++i)
    {
      bool central = true;
      for (const auto &rel : p.relations)
        if ((rel.left == target_names_[i] || rel.right == target_names_[i]) && !same_expr(rel.rhs, expr("0")))
          central = false;
      if (central)
        p.central.push_back(target_names_[i]);
    }
  }
  for (const auto &e : extras())
  {
    const auto &lead = std::prev(e.terms().end())->first;
    Element rest = e - Element::monomial(lead, Scalar(1, truncation()));
    p.extras.push_back({expr(render_word(lead, target_names_)), expr(render(-rest))});
  }
  if (source_->has_hopf())
  {
    const ContractedHopf data = hopf();
    HopfSpec spec;
    for (std::size_t i = 0; i < target_names_.size(); ++i)
    {
      spec.coproduct[target_names_[i]] = expr(render(data.coproduct[i]));
      spec.counit[target_names_[i]] = expr(to_string(data.counit[i]));
      spec.antipode[target_names_[i]] = expr(render(data.antipode[i]));
    }
    p.hopf = std::move(spec);
  }
  return p;
}

} // namespace hopfkit
