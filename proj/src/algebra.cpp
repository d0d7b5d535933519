#include "hopfkit/algebra.hpp"

namespace hopfkit
{

Scalar scalar_part(const Element &x, const std::string &what)
{
  Scalar out(x.truncation());
  for (const auto &[w, c] : x.terms())
  {
    if (!w.empty())
      throw Error(Errc::validation_error, what + " is not a scalar");
    out += c;
  }
  return out.with_effective_order(x.effective_order());
}

Algebra::Algebra(Presentation p, EngineConfig config) : pres_(std::move(p)), rules_(compile_rules(pres_, config))
{
  if (!pres_.hopf)
    return;
  HopfImages images;
  const Truncation t = truncation();
  for (const auto &g : pres_.generators)
  {
    const std::string where = " of " + g + " in " + pres_.name;
    auto find = [&](const std::map<std::string, Expr> &m, const char *kind) -> const Expr & {
      auto it = m.find(g);
      if (it == m.end())
        throw Error(Errc::no_hopf_data, std::string(kind) + " missing" + where);
      return it->second;
    };
    images.coproduct.push_back(nf(as_tensor(evaluate(find(pres_.hopf->coproduct, "coproduct")), 2, t)));
    const Value e = evaluate(find(pres_.hopf->counit, "counit"));
    if (auto s = std::get_if<Scalar>(&e))
      images.counit.push_back(*s);
    else
      images.counit.push_back(scalar_part(as_element(e, t), "counit" + where));
    images.antipode.push_back(nf(as_element(evaluate(find(pres_.hopf->antipode, "antipode")), t)));
  }
  hopf_ = std::move(images);
}

Letter Algebra::letter(std::string_view name) const
{
  const int i = pres_.index_of(name);
  if (i < 0)
    throw Error(Errc::unknown_symbol, "'" + std::string(name) + "' is not a generator of " + pres_.name);
  return static_cast<Letter>(i);
}

Element Algebra::generator(Letter g) const
{
  return Element::generator(g, truncation());
}

Value Algebra::evaluate(const Expr &e) const
{
  return hopfkit::evaluate(e, pres_.symbols(), {truncation(), config().degree_cap});
}

Value Algebra::evaluate(std::string_view src) const
{
  return evaluate(parse_expr(src, pres_.symbols()));
}

Element Algebra::element(std::string_view src) const
{
  return as_element(evaluate(src), truncation());
}

Tensor Algebra::tensor(std::string_view src, int slots) const
{
  return as_tensor(evaluate(src), slots, truncation());
}

Element Algebra::nf_product(const Element &x, const Element &y) const
{
  return nf(multiply(x, y, config().degree_cap));
}

Tensor Algebra::nf_product(const Tensor &x, const Tensor &y) const
{
  return nf(multiply(x, y, config().degree_cap));
}

void Algebra::require_hopf() const
{
  if (!hopf_)
    throw Error(Errc::no_hopf_data, pres_.name + " has no coproduct, counit or antipode");
}

const Tensor &Algebra::coproduct_of(Letter g) const
{
  require_hopf();
  return hopf_->coproduct.at(g);
}

const Scalar &Algebra::counit_of(Letter g) const
{
  require_hopf();
  return hopf_->counit.at(g);
}

const Element &Algebra::antipode_of(Letter g) const
{
  require_hopf();
  return hopf_->antipode.at(g);
}

Tensor Algebra::coproduct(const Word &w) const
{
  require_hopf();
  if (w.empty())
    return Tensor::unit(2, truncation());
  if (w.size() == 1)
    return hopf_->coproduct.at(w[0]);
  {
    std::lock_guard lock(mutex_);
    if (auto it = delta_cache_.find(w); it != delta_cache_.end())
      return it->second;
  }
  const Word head(w.begin(), w.end() - 1);
  Tensor out = nf_product(coproduct(head), hopf_->coproduct.at(w.back()));
  std::lock_guard lock(mutex_);
  delta_cache_.emplace(w, out);
  return out;
}

Tensor Algebra::coproduct(const Element &x) const
{
  Tensor out(2, truncation());
  for (const auto &[w, c] : x.terms())
    out += coproduct(w) * c;
  out.lower_effective(x.effective_order());
  return out;
}

Scalar Algebra::counit(const Word &w) const
{
  require_hopf();
  Scalar out(1, truncation());
  for (Letter g : w)
    out *= hopf_->counit.at(g);
  return out;
}

Scalar Algebra::counit(const Element &x) const
{
  Scalar out(truncation());
  for (const auto &[w, c] : x.terms())
    out += counit(w) * c;
  return out.with_effective_order(std::min(out.effective_order(), x.effective_order()));
}

Element Algebra::antipode(const Word &w) const
{
  require_hopf();
  if (w.empty())
    return Element::unit(truncation());
  if (w.size() == 1)
    return hopf_->antipode.at(w[0]);
  {
    std::lock_guard lock(mutex_);
    if (auto it = antipode_cache_.find(w); it != antipode_cache_.end())
      return it->second;
  }
  const Word head(w.begin(), w.end() - 1);
  Element out = nf_product(hopf_->antipode.at(w.back()), antipode(head));
  std::lock_guard lock(mutex_);
  antipode_cache_.emplace(w, out);
  return out;
}

Element Algebra::antipode(const Element &x) const
{
  Element out(truncation());
  for (const auto &[w, c] : x.terms())
    out += antipode(w) * c;
  out.lower_effective(x.effective_order());
  return out;
}

Tensor Algebra::coproduct_in_slot(const Tensor &x, int slot) const
{
  const int n = x.slots();
  Tensor out(n + 1, truncation());
  for (const auto &[words, c] : x.terms())
  {
    const Tensor d = coproduct(words[static_cast<std::size_t>(slot)]);
    for (const auto &[pair, e] : d.terms())
    {
      std::vector<Word> key;
      key.reserve(static_cast<std::size_t>(n + 1));
      for (int s = 0; s < n; ++s)
      {
        if (s == slot)
        {
          key.push_back(pair[0]);
          key.push_back(pair[1]);
        }
        else
          key.push_back(words[static_cast<std::size_t>(s)]);
      }
      out.add_term(std::move(key), c * e);
    }
  }
  out.lower_effective(x.effective_order());
  return out;
}

Element Algebra::counit_in_slot(const Tensor &x, int slot) const
{
  if (x.slots() != 2)
    throw Error(Errc::slot_mismatch, "counit_in_slot expects a 2-tensor");
  Element out(truncation());
  for (const auto &[words, c] : x.terms())
    out.add_term(words[static_cast<std::size_t>(1 - slot)], c * counit(words[static_cast<std::size_t>(slot)]));
  out.lower_effective(x.effective_order());
  return out;
}

Tensor Algebra::antipode_in_slot(const Tensor &x, int slot) const
{
  Tensor out(x.slots(), truncation());
  for (const auto &[words, c] : x.terms())
  {
    const Element s = antipode(words[static_cast<std::size_t>(slot)]);
    for (const auto &[u, e] : s.terms())
    {
      auto key = words;
      key[static_cast<std::size_t>(slot)] = u;
      out.add_term(std::move(key), c * e);
    }
  }
  out.lower_effective(x.effective_order());
  return out;
}

Element Algebra::multiply_slots(const Tensor &x) const
{
  Element out(truncation());
  for (const auto &[words, c] : x.terms())
  {
    Word w;
    for (const auto &part : words)
      w.insert(w.end(), part.begin(), part.end());
    if (w.size() > static_cast<std::size_t>(config().degree_cap))
      throw Error(Errc::degree_cap_exceeded, "product word of length " + std::to_string(w.size()));
    out.add_term(std::move(w), c);
  }
  out.lower_effective(x.effective_order());
  return nf(out);
}

} // namespace hopfkit
