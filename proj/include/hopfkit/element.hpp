#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "hopfkit/scalar.hpp"

namespace hopfkit
{

/// Position of a generator in its presentation's ordered generator list.
using Letter = std::uint8_t;

/// A monomial in the free algebra; the empty word is the unit.
using Word = std::vector<Letter>;

inline constexpr int kDefaultDegreeCap = 12;

/// (length, lexicographic by generator index)
struct ShortLex
{
  bool operator()(const Word &a, const Word &b) const
  {
    if (a.size() != b.size())
      return a.size() < b.size();
    return a < b;
  }
};

/// Slots compared one after another with ShortLex.
struct SlotLex
{
  bool operator()(const std::vector<Word> &a, const std::vector<Word> &b) const
  {
    ShortLex less;
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i)
    {
      if (less(a[i], b[i]))
        return true;
      if (less(b[i], a[i]))
        return false;
    }
    return a.size() < b.size();
  }
};

/// Finite linear combination of keys with Scalar coefficients.
template <class Key, class Less>
class Combination
{
public:
  using Map = std::map<Key, Scalar, Less>;

  Combination() = default;
  explicit Combination(Truncation t) : trunc_(t), effective_(t.order) {}

  const Map &terms() const noexcept { return terms_; }
  Truncation truncation() const noexcept { return trunc_; }
  int effective_order() const noexcept { return effective_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// True when no coefficient has a term of h-power <= up_to.
  bool is_zero_up_to(int up_to) const noexcept
  {
    for (const auto &[k, c] : terms_)
      if (!c.is_zero_up_to(up_to))
        return false;
    return true;
  }

  /// Lowest h-power among all coefficients, INT_MAX for zero.
  int h_valuation() const noexcept
  {
    int v = INT_MAX;
    for (const auto &[k, c] : terms_)
      v = std::min(v, c.h_valuation());
    return v;
  }

  Scalar coefficient(const Key &k) const
  {
    auto it = terms_.find(k);
    return it == terms_.end() ? Scalar(trunc_) : it->second;
  }

  void add_term(const Key &k, const Scalar &c)
  {
    if (c.is_zero())
    {
      note_effective(c);
      return;
    }
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted)
    {
      it->second += c;
      if (it->second.is_zero())
        terms_.erase(it);
    }
    note_effective(c);
  }

  void add_term(Key &&k, const Scalar &c)
  {
    if (c.is_zero())
    {
      note_effective(c);
      return;
    }
    auto it = terms_.find(k);
    if (it == terms_.end())
      terms_.emplace(std::move(k), c);
    else
    {
      it->second += c;
      if (it->second.is_zero())
        terms_.erase(it);
    }
    note_effective(c);
  }

  void scale(const Scalar &c)
  {
    for (auto it = terms_.begin(); it != terms_.end();)
    {
      it->second = it->second * c;
      it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
    }
    note_effective(c);
  }

  void scale(const Rational &q)
  {
    if (q == 0)
      terms_.clear();
    for (auto &[k, c] : terms_)
      c *= q;
  }

  /// Applies fn to every coefficient, dropping terms that become zero.
  template <class Fn>
  void transform_coefficients(Fn &&fn)
  {
    int eff = effective_;
    for (auto it = terms_.begin(); it != terms_.end();)
    {
      it->second = fn(it->second);
      eff = std::min(eff, it->second.effective_order());
      it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
    }
    effective_ = eff;
  }

  void set_truncation(Truncation t) { trunc_ = t; effective_ = std::min(effective_, t.order); }
  void lower_effective(int e) { effective_ = std::min(effective_, e); }

  friend bool operator==(const Combination &a, const Combination &b) { return a.terms_ == b.terms_; }

protected:
  void note_effective(const Scalar &c)
  {
    if (!c.is_unset())
      effective_ = std::min(effective_, c.effective_order());
  }

  Map terms_;
  Truncation trunc_{};
  int effective_ = 3;
};

class Element : public Combination<Word, ShortLex>
{
public:
  using Combination::Combination;

  static Element unit(Truncation t) { return scalar(Scalar(1, t)); }
  static Element scalar(const Scalar &c);
  static Element generator(Letter g, Truncation t);
  static Element monomial(Word w, const Scalar &c);

  Element &operator+=(const Element &o);
  Element &operator-=(const Element &o);
  Element operator-() const;
  friend Element operator+(Element a, const Element &b) { return a += b; }
  friend Element operator-(Element a, const Element &b) { return a -= b; }
  friend Element operator*(Element a, const Scalar &c) { a.scale(c); return a; }
  friend Element operator*(const Scalar &c, Element a) { a.scale(c); return a; }
  friend Element operator*(Element a, const Rational &q) { a.scale(q); return a; }
  friend Element operator*(const Rational &q, Element a) { a.scale(q); return a; }
  friend Element operator*(const Element &a, const Element &b);

  /// Longest word length present.
  std::size_t degree() const noexcept;
};

/// Element of the n-fold tensor power, n = 2 or 3 in practice.
class Tensor : public Combination<std::vector<Word>, SlotLex>
{
public:
  Tensor() = default;
  Tensor(int slots, Truncation t) : Combination(t), slots_(slots) {}

  static Tensor unit(int slots, Truncation t);
  static Tensor monomial(std::vector<Word> words, const Scalar &c);

  int slots() const noexcept { return slots_; }

  Tensor &operator+=(const Tensor &o);
  Tensor &operator-=(const Tensor &o);
  Tensor operator-() const;
  friend Tensor operator+(Tensor a, const Tensor &b) { return a += b; }
  friend Tensor operator-(Tensor a, const Tensor &b) { return a -= b; }
  friend Tensor operator*(Tensor a, const Scalar &c) { a.scale(c); return a; }
  friend Tensor operator*(const Scalar &c, Tensor a) { a.scale(c); return a; }
  friend Tensor operator*(Tensor a, const Rational &q) { a.scale(q); return a; }
  friend Tensor operator*(const Rational &q, Tensor a) { a.scale(q); return a; }
  friend Tensor operator*(const Tensor &a, const Tensor &b);

private:
  int slots_ = 2;
};

/// Free-algebra product (word concatenation).  Words longer than
/// degree_cap throw degree_cap_exceeded; terms truncated away by h are
/// never formed.
Element multiply(const Element &x, const Element &y, int degree_cap = kDefaultDegreeCap);

/// Slotwise product.
Tensor multiply(const Tensor &x, const Tensor &y, int degree_cap = kDefaultDegreeCap);

/// x placed in `slot` (0-based) of an n-fold tensor, unit elsewhere.
Tensor embed(const Element &x, int slot, int slots);

/// x (x) y.  A Tensor on the left gains one slot.
Tensor tensor(const Element &x, const Element &y);
Tensor tensor(const Tensor &x, const Element &y);
Tensor tensor(const Element &x, const Tensor &y);

/// Output slot i takes input slot perm[i].
Tensor permute(const Tensor &x, std::span<const int> perm);

/// Swaps the two slots of a 2-tensor (R -> R_21, Delta -> Delta^op).
Tensor flip(const Tensor &x);

enum class SeriesKind
{
  exp,
  sinh,
  cosh,
  sinhc, ///< sinh(x)/x
};

/// Taylor series with noncommutative powers of x.  Every coefficient of x
/// must have h-valuation >= 1 so that the series is finite at order N.
Scalar apply_series(SeriesKind f, const Scalar &x);
Element apply_series(SeriesKind f, const Element &x, int degree_cap = kDefaultDegreeCap);
Tensor apply_series(SeriesKind f, const Tensor &x, int degree_cap = kDefaultDegreeCap);

/// Geometric series for (c + r)^{-1}, c a nonzero rational, r of h-valuation >= 1.
Scalar series_inverse(const Scalar &x);
Element series_inverse(const Element &x, int degree_cap = kDefaultDegreeCap);
Tensor series_inverse(const Tensor &x, int degree_cap = kDefaultDegreeCap);

Element exact_divide_h(const Element &x, int k);
Tensor exact_divide_h(const Tensor &x, int k);
Element limit_epsilon(const Element &x);
Tensor limit_epsilon(const Tensor &x);
Element substitute_h(const Element &x, HSubstitution mode);
Tensor substitute_h(const Tensor &x, HSubstitution mode);

/// Re-targets the truncation of every coefficient.
Element with_truncation(const Element &x, Truncation t);
Tensor with_truncation(const Tensor &x, Truncation t);

/// Generator display names indexed by Letter.
using NameTable = std::vector<std::string>;

std::string render_word(const Word &w, const NameTable &names);

/// Canonical text: terms in (word length, lexicographic) order,
/// e.g. "2*J+ + J+*J3 + (1/3)*h^2*J+^3".
std::string render(const Element &x, const NameTable &names);

/// Canonical text with " @ " between slots: "h*J3 @ J+ - h*J+ @ J3".
std::string render(const Tensor &x, const NameTable &names);

} // namespace hopfkit
