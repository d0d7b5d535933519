#include "hopfkit/scalar.hpp"

#include <algorithm>
#include <cstdlib>

namespace hopfkit
{

std::string render_rational(const Rational &q)
{
  if (q.get_den() == 1)
    return q.get_num().get_str();
  return "(" + q.get_num().get_str() + "/" + q.get_den().get_str() + ")";
}

Scalar::Scalar(const Rational &c, Truncation t) : Scalar(t)
{
  Rational q = c;
  q.canonicalize();
  if (q != 0)
    terms_.push_back({0, 0, std::move(q)});
}

Scalar Scalar::monomial(const Rational &c, int hpow, int eps, Truncation t)
{
  Scalar s(t);
  s.push_checked(hpow, eps, c);
  return s;
}

void Scalar::push_checked(int hpow, int eps, Rational c)
{
  c.canonicalize();
  if (c == 0 || hpow > order_)
    return;
  if (std::abs(eps) > eps_bound_)
    throw Error(Errc::eps_overflow, "eps power " + std::to_string(eps) + " outside bound " +
                                        std::to_string(eps_bound_));
  terms_.push_back({hpow, eps, std::move(c)});
}

int Scalar::min_eps() const noexcept
{
  int m = INT_MAX;
  for (const auto &t : terms_)
    m = std::min(m, t.eps);
  return m;
}

bool Scalar::has_eps() const noexcept
{
  return std::any_of(terms_.begin(), terms_.end(), [](const Term &t) { return t.eps != 0; });
}

Rational Scalar::coefficient(int hpow, int eps) const
{
  for (const auto &t : terms_)
    if (t.hpow == hpow && t.eps == eps)
      return t.coeff;
  return 0;
}

bool Scalar::is_zero_up_to(int up_to) const noexcept
{
  return terms_.empty() || terms_.front().hpow > up_to;
}

void Scalar::adopt(const Scalar &o)
{
  if (o.is_unset())
    return;
  if (is_unset())
  {
    order_ = o.order_;
    eps_bound_ = o.eps_bound_;
    effective_ = o.effective_;
    return;
  }
  if (order_ != o.order_)
    throw Error(Errc::mixed_truncation, "truncation orders " + std::to_string(order_) + " and " +
                                            std::to_string(o.order_));
  eps_bound_ = std::max(eps_bound_, o.eps_bound_);
  effective_ = std::min(effective_, o.effective_);
}

void Scalar::normalize()
{
  std::sort(terms_.begin(), terms_.end(), [](const Term &a, const Term &b) {
    return a.hpow != b.hpow ? a.hpow < b.hpow : a.eps < b.eps;
  });
  std::vector<Term> merged;
  merged.reserve(terms_.size());
  for (auto &t : terms_)
  {
    if (!merged.empty() && merged.back().hpow == t.hpow && merged.back().eps == t.eps)
      merged.back().coeff += t.coeff;
    else
      merged.push_back(std::move(t));
  }
  std::erase_if(merged, [](const Term &t) { return t.coeff == 0; });
  terms_ = std::move(merged);
}

Scalar Scalar::dropped_above(int hpow) const
{
  Scalar out = *this;
  std::erase_if(out.terms_, [hpow](const Term &t) { return t.hpow > hpow; });
  return out;
}

Scalar &Scalar::operator+=(const Scalar &o)
{
  adopt(o);
  if (o.terms_.empty())
    return *this;
  terms_.insert(terms_.end(), o.terms_.begin(), o.terms_.end());
  normalize();
  return *this;
}

Scalar &Scalar::operator-=(const Scalar &o)
{
  adopt(o);
  if (o.terms_.empty())
    return *this;
  for (const auto &t : o.terms_)
    terms_.push_back({t.hpow, t.eps, -t.coeff});
  normalize();
  return *this;
}

Scalar operator*(const Scalar &a, const Scalar &b)
{
  Scalar r = a;
  r.terms_.clear();
  r.adopt(b);
  if (a.terms_.empty() || b.terms_.empty())
    return r;
  for (const auto &x : a.terms_)
    for (const auto &y : b.terms_)
    {
      const int hp = x.hpow + y.hpow;
      if (hp > r.order_)
        break; // b is sorted by hpow
      r.push_checked(hp, x.eps + y.eps, x.coeff * y.coeff);
    }
  r.normalize();
  return r;
}

Scalar &Scalar::operator*=(const Scalar &o)
{
  *this = *this * o;
  return *this;
}

Scalar &Scalar::operator*=(const Rational &q)
{
  if (q == 0)
  {
    terms_.clear();
    return *this;
  }
  for (auto &t : terms_)
    t.coeff *= q;
  return *this;
}

Scalar Scalar::operator-() const
{
  Scalar r = *this;
  for (auto &t : r.terms_)
    t.coeff = -t.coeff;
  return r;
}

Scalar Scalar::truncated_to(int order) const
{
  Scalar r = *this;
  r.order_ = order;
  r.effective_ = std::min(effective_, order);
  std::erase_if(r.terms_, [order](const Term &t) { return t.hpow > order; });
  return r;
}

Scalar Scalar::with_eps_bound(int bound) const
{
  Scalar r = *this;
  r.eps_bound_ = bound;
  for (const auto &t : r.terms_)
    if (std::abs(t.eps) > bound)
      throw Error(Errc::eps_overflow, "eps power " + std::to_string(t.eps) + " outside bound " +
                                          std::to_string(bound));
  return r;
}

Scalar Scalar::with_effective_order(int eff) const
{
  Scalar r = *this;
  r.effective_ = std::min(effective_, eff);
  return r;
}

Scalar Scalar::shifted(int hpow, int eps, const Rational &c) const
{
  Scalar r = *this;
  r.terms_.clear();
  if (c == 0)
    return r;
  for (const auto &t : terms_)
    r.push_checked(t.hpow + hpow, t.eps + eps, t.coeff * c);
  return r;
}

Scalar exact_divide_h(const Scalar &x, int k)
{
  Scalar r = x;
  for (auto &t : r.terms_)
  {
    if (t.hpow < k)
      throw Error(Errc::not_divisible, to_string(x) + " is not divisible by h^" + std::to_string(k));
    t.hpow -= k;
  }
  if (!r.is_unset())
    r.effective_ = std::min(r.effective_, r.order_) - k;
  return r;
}

Scalar limit_epsilon(const Scalar &x)
{
  Scalar r = x;
  for (const auto &t : x.terms_)
    if (t.eps < 0)
      throw Error(Errc::singular_limit, "negative eps power in " + to_string(x));
  std::erase_if(r.terms_, [](const Scalar::Term &t) { return t.eps != 0; });
  return r;
}

Scalar substitute_h(const Scalar &x, HSubstitution mode)
{
  Scalar r(x.truncation());
  for (const auto &t : x.terms())
  {
    if (mode == HSubstitution::zero && t.hpow != 0)
      continue;
    const bool flip = mode == HSubstitution::negate && t.hpow % 2 != 0;
    r += Scalar::monomial(flip ? Rational(-t.coeff) : t.coeff, t.hpow, t.eps, x.truncation());
  }
  return x.is_unset() ? r : r.with_effective_order(x.effective_order());
}

std::string render_term_magnitude(const Scalar::Term &t)
{
  std::string mono;
  auto append = [&mono](const std::string &s) {
    if (!mono.empty())
      mono += "*";
    mono += s;
  };
  if (t.hpow == 1)
    append("h");
  else if (t.hpow > 1)
    append("h^" + std::to_string(t.hpow));
  if (t.eps == 1)
    append("e");
  else if (t.eps != 0)
    append("e^" + std::to_string(t.eps));

  const Rational mag = abs(t.coeff);
  if (mono.empty())
    return render_rational(mag);
  if (mag == 1)
    return mono;
  return render_rational(mag) + "*" + mono;
}

std::string to_string(const Scalar &x)
{
  if (x.is_zero())
    return "0";
  std::string out;
  bool first = true;
  for (const auto &t : x.terms())
  {
    const bool neg = t.coeff < 0;
    if (first)
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    out += render_term_magnitude(t);
    first = false;
  }
  return out;
}

} // namespace hopfkit
