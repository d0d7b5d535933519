#include "hopfkit/element.hpp"

#include <algorithm>

namespace hopfkit
{

namespace
{

[[noreturn]] void cap_exceeded(std::size_t len, int cap)
{
  throw Error(Errc::degree_cap_exceeded,
              "word of length " + std::to_string(len) + " exceeds degree cap " + std::to_string(cap));
}

Truncation merged(Truncation a, Truncation b)
{
  if (a.order != b.order)
    throw Error(Errc::mixed_truncation, "truncation orders " + std::to_string(a.order) + " and " +
                                            std::to_string(b.order));
  return {a.order, std::max(a.eps_bound, b.eps_bound)};
}

} // namespace

Element Element::scalar(const Scalar &c)
{
  Element e(c.is_unset() ? Truncation{} : c.truncation());
  e.add_term(Word{}, c);
  return e;
}

Element Element::generator(Letter g, Truncation t)
{
  Element e(t);
  e.add_term(Word{g}, Scalar(1, t));
  return e;
}

Element Element::monomial(Word w, const Scalar &c)
{
  Element e(c.truncation());
  e.add_term(std::move(w), c);
  return e;
}

Element &Element::operator+=(const Element &o)
{
  trunc_ = merged(trunc_, o.trunc_);
  effective_ = std::min(effective_, o.effective_);
  for (const auto &[w, c] : o.terms_)
    add_term(w, c);
  return *this;
}

Element &Element::operator-=(const Element &o)
{
  trunc_ = merged(trunc_, o.trunc_);
  effective_ = std::min(effective_, o.effective_);
  for (const auto &[w, c] : o.terms_)
    add_term(w, -c);
  return *this;
}

Element Element::operator-() const
{
  Element r = *this;
  r.scale(Rational(-1));
  return r;
}

std::size_t Element::degree() const noexcept
{
  return terms_.empty() ? 0 : terms_.rbegin()->first.size();
}

Element multiply(const Element &x, const Element &y, int degree_cap)
{
  Element r(merged(x.truncation(), y.truncation()));
  r.lower_effective(std::min(x.effective_order(), y.effective_order()));
  const int order = r.truncation().order;
  for (const auto &[wx, cx] : x.terms())
  {
    const int vx = cx.h_valuation();
    for (const auto &[wy, cy] : y.terms())
    {
      if (vx + cy.h_valuation() > order)
        continue;
      Scalar c = cx * cy;
      if (c.is_zero())
        continue;
      if (static_cast<int>(wx.size() + wy.size()) > degree_cap)
        cap_exceeded(wx.size() + wy.size(), degree_cap);
      Word w;
      w.reserve(wx.size() + wy.size());
      w.insert(w.end(), wx.begin(), wx.end());
      w.insert(w.end(), wy.begin(), wy.end());
      r.add_term(std::move(w), c);
    }
  }
  return r;
}

Element operator*(const Element &a, const Element &b) { return multiply(a, b); }

Tensor Tensor::unit(int slots, Truncation t)
{
  Tensor r(slots, t);
  r.add_term(std::vector<Word>(slots), Scalar(1, t));
  return r;
}

Tensor Tensor::monomial(std::vector<Word> words, const Scalar &c)
{
  Tensor r(static_cast<int>(words.size()), c.truncation());
  r.add_term(std::move(words), c);
  return r;
}

Tensor &Tensor::operator+=(const Tensor &o)
{
  if (slots_ != o.slots_)
    throw Error(Errc::slot_mismatch, std::to_string(slots_) + " vs " + std::to_string(o.slots_) + " slots");
  trunc_ = merged(trunc_, o.trunc_);
  effective_ = std::min(effective_, o.effective_);
  for (const auto &[w, c] : o.terms_)
    add_term(w, c);
  return *this;
}

Tensor &Tensor::operator-=(const Tensor &o)
{
  if (slots_ != o.slots_)
    throw Error(Errc::slot_mismatch, std::to_string(slots_) + " vs " + std::to_string(o.slots_) + " slots");
  trunc_ = merged(trunc_, o.trunc_);
  effective_ = std::min(effective_, o.effective_);
  for (const auto &[w, c] : o.terms_)
    add_term(w, -c);
  return *this;
}

Tensor Tensor::operator-() const
{
  Tensor r = *this;
  r.scale(Rational(-1));
  return r;
}

Tensor multiply(const Tensor &x, const Tensor &y, int degree_cap)
{
  if (x.slots() != y.slots())
    throw Error(Errc::slot_mismatch, std::to_string(x.slots()) + " vs " + std::to_string(y.slots()) + " slots");
  Tensor r(x.slots(), merged(x.truncation(), y.truncation()));
  r.lower_effective(std::min(x.effective_order(), y.effective_order()));
  const int order = r.truncation().order;
  for (const auto &[kx, cx] : x.terms())
  {
    const int vx = cx.h_valuation();
    for (const auto &[ky, cy] : y.terms())
    {
      if (vx + cy.h_valuation() > order)
        continue;
      Scalar c = cx * cy;
      if (c.is_zero())
        continue;
      std::vector<Word> key(x.slots());
      for (int s = 0; s < x.slots(); ++s)
      {
        const std::size_t len = kx[s].size() + ky[s].size();
        if (static_cast<int>(len) > degree_cap)
          cap_exceeded(len, degree_cap);
        key[s].reserve(len);
        key[s].insert(key[s].end(), kx[s].begin(), kx[s].end());
        key[s].insert(key[s].end(), ky[s].begin(), ky[s].end());
      }
      r.add_term(std::move(key), c);
    }
  }
  return r;
}

Tensor operator*(const Tensor &a, const Tensor &b) { return multiply(a, b); }

Tensor embed(const Element &x, int slot, int slots)
{
  if (slot < 0 || slot >= slots)
    throw Error(Errc::slot_mismatch, "slot " + std::to_string(slot) + " of " + std::to_string(slots));
  Tensor r(slots, x.truncation());
  r.lower_effective(x.effective_order());
  for (const auto &[w, c] : x.terms())
  {
    std::vector<Word> key(slots);
    key[slot] = w;
    r.add_term(std::move(key), c);
  }
  return r;
}

Tensor tensor(const Element &x, const Element &y)
{
  Tensor r(2, merged(x.truncation(), y.truncation()));
  r.lower_effective(std::min(x.effective_order(), y.effective_order()));
  for (const auto &[wx, cx] : x.terms())
    for (const auto &[wy, cy] : y.terms())
      r.add_term(std::vector<Word>{wx, wy}, cx * cy);
  return r;
}

Tensor tensor(const Tensor &x, const Element &y)
{
  Tensor r(x.slots() + 1, merged(x.truncation(), y.truncation()));
  r.lower_effective(std::min(x.effective_order(), y.effective_order()));
  for (const auto &[kx, cx] : x.terms())
    for (const auto &[wy, cy] : y.terms())
    {
      auto key = kx;
      key.push_back(wy);
      r.add_term(std::move(key), cx * cy);
    }
  return r;
}

Tensor tensor(const Element &x, const Tensor &y)
{
  Tensor r(y.slots() + 1, merged(x.truncation(), y.truncation()));
  r.lower_effective(std::min(x.effective_order(), y.effective_order()));
  for (const auto &[wx, cx] : x.terms())
    for (const auto &[ky, cy] : y.terms())
    {
      std::vector<Word> key;
      key.reserve(ky.size() + 1);
      key.push_back(wx);
      key.insert(key.end(), ky.begin(), ky.end());
      r.add_term(std::move(key), cx * cy);
    }
  return r;
}

Tensor permute(const Tensor &x, std::span<const int> perm)
{
  if (static_cast<int>(perm.size()) != x.slots())
    throw Error(Errc::slot_mismatch, "permutation of length " + std::to_string(perm.size()) + " on " +
                                         std::to_string(x.slots()) + " slots");
  Tensor r(x.slots(), x.truncation());
  r.lower_effective(x.effective_order());
  for (const auto &[k, c] : x.terms())
  {
    std::vector<Word> key(k.size());
    for (std::size_t i = 0; i < perm.size(); ++i)
      key[i] = k[perm[i]];
    r.add_term(std::move(key), c);
  }
  return r;
}

Tensor flip(const Tensor &x)
{
  static constexpr int kSwap[] = {1, 0};
  return permute(x, kSwap);
}

namespace
{

Rational factorial(int n)
{
  mpz_class f = 1;
  for (int i = 2; i <= n; ++i)
    f *= i;
  return Rational(f);
}

/// Coefficient of x^k in the series, zero when the power is absent.
Rational series_coefficient(SeriesKind f, int k)
{
  switch (f)
  {
  case SeriesKind::exp: return 1 / factorial(k);
  case SeriesKind::sinh: return k % 2 ? Rational(1 / factorial(k)) : Rational(0);
  case SeriesKind::cosh: return k % 2 ? Rational(0) : Rational(1 / factorial(k));
  case SeriesKind::sinhc: return k % 2 ? Rational(0) : Rational(1 / factorial(k + 1));
  }
  return 0;
}

const char *series_name(SeriesKind f)
{
  switch (f)
  {
  case SeriesKind::exp: return "exp";
  case SeriesKind::sinh: return "sinh";
  case SeriesKind::cosh: return "cosh";
  case SeriesKind::sinhc: return "sinhc";
  }
  return "?";
}

template <class T, class Mul>
T sum_series(SeriesKind f, const T &x, T one, T zero, Mul mul)
{
  if (!x.is_zero() && x.h_valuation() < 1)
    throw Error(Errc::non_nilpotent_argument,
                std::string(series_name(f)) + " needs an argument of positive h-order");
  const int order = x.truncation().order;
  T result = std::move(zero);
  T power = std::move(one);
  for (int k = 0; k <= order && !power.is_zero(); ++k)
  {
    const Rational a = series_coefficient(f, k);
    if (a != 0)
      result += power * a;
    if (k < order)
      power = mul(power, x);
  }
  return result;
}

template <class T, class Mul>
T geometric_inverse(const T &x, T one, T zero, Mul mul, const Scalar &unit_coeff)
{
  const Rational c = unit_coeff.constant_term();
  if (c == 0 || unit_coeff.has_eps())
    throw Error(Errc::not_invertible, "constant term must be a nonzero rational");
  // x = c (1 + r), r of positive h-order
  T r = x * Rational(1 / c) - one;
  if (!r.is_zero() && r.h_valuation() < 1)
    throw Error(Errc::not_invertible, "non-constant part must have positive h-order");
  const int order = x.truncation().order;
  T result = std::move(zero);
  T power = one;
  for (int k = 0; k <= order && !power.is_zero(); ++k)
  {
    result += (k % 2 ? -power : power);
    if (k < order)
      power = mul(power, r);
  }
  return result * Rational(1 / c);
}

} // namespace

Scalar apply_series(SeriesKind f, const Scalar &x)
{
  const Truncation t = x.is_unset() ? Truncation{} : x.truncation();
  return sum_series(f, x, Scalar(1, t), Scalar(t), [](const Scalar &a, const Scalar &b) { return a * b; });
}

Element apply_series(SeriesKind f, const Element &x, int degree_cap)
{
  return sum_series(f, x, Element::unit(x.truncation()), Element(x.truncation()),
                    [degree_cap](const Element &a, const Element &b) { return multiply(a, b, degree_cap); });
}

Tensor apply_series(SeriesKind f, const Tensor &x, int degree_cap)
{
  return sum_series(f, x, Tensor::unit(x.slots(), x.truncation()), Tensor(x.slots(), x.truncation()),
                    [degree_cap](const Tensor &a, const Tensor &b) { return multiply(a, b, degree_cap); });
}

Scalar series_inverse(const Scalar &x)
{
  const Truncation t = x.is_unset() ? Truncation{} : x.truncation();
  return geometric_inverse(x, Scalar(1, t), Scalar(t), [](const Scalar &a, const Scalar &b) { return a * b; },
                           x);
}

Element series_inverse(const Element &x, int degree_cap)
{
  return geometric_inverse(x, Element::unit(x.truncation()), Element(x.truncation()),
                           [degree_cap](const Element &a, const Element &b) { return multiply(a, b, degree_cap); },
                           x.coefficient(Word{}));
}

Tensor series_inverse(const Tensor &x, int degree_cap)
{
  return geometric_inverse(x, Tensor::unit(x.slots(), x.truncation()), Tensor(x.slots(), x.truncation()),
                           [degree_cap](const Tensor &a, const Tensor &b) { return multiply(a, b, degree_cap); },
                           x.coefficient(std::vector<Word>(x.slots())));
}

Element exact_divide_h(const Element &x, int k)
{
  Element r = x;
  r.transform_coefficients([k](const Scalar &c) { return exact_divide_h(c, k); });
  r.lower_effective(x.truncation().order - k);
  return r;
}

Tensor exact_divide_h(const Tensor &x, int k)
{
  Tensor r = x;
  r.transform_coefficients([k](const Scalar &c) { return exact_divide_h(c, k); });
  r.lower_effective(x.truncation().order - k);
  return r;
}

Element limit_epsilon(const Element &x)
{
  Element r = x;
  r.transform_coefficients([](const Scalar &c) { return limit_epsilon(c); });
  return r;
}

Tensor limit_epsilon(const Tensor &x)
{
  Tensor r = x;
  r.transform_coefficients([](const Scalar &c) { return limit_epsilon(c); });
  return r;
}

Element substitute_h(const Element &x, HSubstitution mode)
{
  Element r = x;
  r.transform_coefficients([mode](const Scalar &c) { return substitute_h(c, mode); });
  return r;
}

Tensor substitute_h(const Tensor &x, HSubstitution mode)
{
  Tensor r = x;
  r.transform_coefficients([mode](const Scalar &c) { return substitute_h(c, mode); });
  return r;
}

Element with_truncation(const Element &x, Truncation t)
{
  Element r(t);
  r.lower_effective(x.effective_order());
  for (const auto &[w, c] : x.terms())
    r.add_term(w, c.truncated_to(t.order).with_eps_bound(t.eps_bound));
  return r;
}

Tensor with_truncation(const Tensor &x, Truncation t)
{
  Tensor r(x.slots(), t);
  r.lower_effective(x.effective_order());
  for (const auto &[k, c] : x.terms())
    r.add_term(k, c.truncated_to(t.order).with_eps_bound(t.eps_bound));
  return r;
}

std::string render_word(const Word &w, const NameTable &names)
{
  std::string out;
  for (std::size_t i = 0; i < w.size();)
  {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i])
      ++j;
    if (!out.empty())
      out += "*";
    out += w[i] < names.size() ? names[w[i]] : "g" + std::to_string(w[i]);
    if (j - i > 1)
      out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

namespace
{

/// Coefficient and leading word of one term; sets negative when the sign
/// should be pulled out front.
std::string render_coefficient_word(const Scalar &c, const std::string &ws, bool &negative)
{
  if (c.terms().size() == 1)
  {
    const auto &t = c.terms().front();
    negative = t.coeff < 0;
    const std::string mag = render_term_magnitude(t);
    if (ws.empty())
      return mag;
    if (mag == "1")
      return ws;
    return mag + "*" + ws;
  }
  negative = false;
  std::string out = "(" + to_string(c) + ")";
  if (!ws.empty())
    out += "*" + ws;
  return out;
}

void append_signed(std::string &out, bool first, bool negative, const std::string &body)
{
  if (first)
    out += negative ? "-" : "";
  else
    out += negative ? " - " : " + ";
  out += body;
}

} // namespace

std::string render(const Element &x, const NameTable &names)
{
  if (x.is_zero())
    return "0";
  std::string out;
  bool first = true;
  for (const auto &[w, c] : x.terms())
  {
    bool negative = false;
    const std::string body = render_coefficient_word(c, render_word(w, names), negative);
    append_signed(out, first, negative, body);
    first = false;
  }
  return out;
}

std::string render(const Tensor &x, const NameTable &names)
{
  if (x.is_zero())
    return "0";
  std::string out;
  bool first = true;
  for (const auto &[key, c] : x.terms())
  {
    bool negative = false;
    std::string body = render_coefficient_word(c, render_word(key[0], names), negative);
    for (std::size_t s = 1; s < key.size(); ++s)
    {
      const std::string ws = render_word(key[s], names);
      body += " @ " + (ws.empty() ? std::string("1") : ws);
    }
    append_signed(out, first, negative, body);
    first = false;
  }
  return out;
}

} // namespace hopfkit
