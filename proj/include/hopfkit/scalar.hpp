#pragma once

#include <gmpxx.h>

#include <climits>
#include <string>
#include <vector>

#include "hopfkit/error.hpp"

namespace hopfkit
{

using Rational = mpq_class;

/// Renders 2 as "2" and 1/3 as "(1/3)"; the parenthesised form is what the
/// expression parser reads back.
std::string render_rational(const Rational &q);

/// Ground-ring configuration: powers of h above `order` are discarded,
/// powers of eps outside [-eps_bound, eps_bound] are an error.
struct Truncation
{
  int order = 3;
  int eps_bound = 0;

  friend bool operator==(const Truncation &, const Truncation &) = default;
};

/// Element of Q[h]/(h^{N+1}) tensored with Laurent polynomials in eps of
/// bounded degree.  A default constructed Scalar is the zero of every ring
/// and adopts the truncation of whatever it is combined with.
class Scalar
{
public:
  struct Term
  {
    int hpow;
    int eps;
    Rational coeff;

    friend bool operator==(const Term &, const Term &) = default;
  };

  Scalar() = default;
  explicit Scalar(Truncation t) : order_(t.order), eps_bound_(t.eps_bound), effective_(t.order) {}
  Scalar(const Rational &c, Truncation t);

  static Scalar monomial(const Rational &c, int hpow, int eps, Truncation t);
  static Scalar h(Truncation t, int power = 1) { return monomial(1, power, 0, t); }

  bool is_unset() const noexcept { return order_ < 0; }
  int order() const noexcept { return order_; }
  int eps_bound() const noexcept { return eps_bound_; }
  Truncation truncation() const { return {order_, eps_bound_}; }

  /// Highest h-power that is known exactly.  Drops below order() after
  /// exact division by h.
  int effective_order() const noexcept { return effective_; }

  const std::vector<Term> &terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Lowest h-power present, INT_MAX for zero.
  int h_valuation() const noexcept { return terms_.empty() ? INT_MAX : terms_.front().hpow; }
  int min_eps() const noexcept;
  bool has_eps() const noexcept;
  Rational coefficient(int hpow, int eps) const;
  Rational constant_term() const { return coefficient(0, 0); }
  bool is_rational() const noexcept
  {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].hpow == 0 && terms_[0].eps == 0);
  }

  /// True when every term with h-power <= up_to vanishes.
  bool is_zero_up_to(int up_to) const noexcept;

  Scalar &operator+=(const Scalar &o);
  Scalar &operator-=(const Scalar &o);
  Scalar &operator*=(const Scalar &o);
  Scalar &operator*=(const Rational &q);

  friend Scalar operator+(Scalar a, const Scalar &b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar &b) { return a -= b; }
  friend Scalar operator*(const Scalar &a, const Scalar &b);
  friend Scalar operator*(Scalar a, const Rational &q) { return a *= q; }
  friend Scalar operator*(const Rational &q, Scalar a) { return a *= q; }
  Scalar operator-() const;

  friend bool operator==(const Scalar &a, const Scalar &b) { return a.terms_ == b.terms_; }

  /// Re-targets the truncation order.  Raising the order does not add
  /// information, so the effective order never increases.
  Scalar truncated_to(int order) const;
  Scalar with_eps_bound(int bound) const;
  Scalar with_effective_order(int eff) const;

  /// Same ring, terms of h-power above `hpow` removed.
  Scalar dropped_above(int hpow) const;

  /// Multiplies by h^k eps^e without going through a full product.
  Scalar shifted(int hpow, int eps, const Rational &c) const;

private:
  friend Scalar exact_divide_h(const Scalar &x, int k);
  friend Scalar limit_epsilon(const Scalar &x);

  void adopt(const Scalar &o);
  void push_checked(int hpow, int eps, Rational c);
  void normalize();

  std::vector<Term> terms_; // sorted by (hpow, eps), no zero coefficients
  int order_ = -1;
  int eps_bound_ = 0;
  int effective_ = INT_MAX;
};

/// Divides every term by h^k; throws not_divisible when a term has h-power
/// below k.  The effective order of the result drops by k.
Scalar exact_divide_h(const Scalar &x, int k);

/// eps -> 0.  Throws singular_limit when a negative eps power is present.
Scalar limit_epsilon(const Scalar &x);

enum class HSubstitution
{
  zero,
  negate,
};

Scalar substitute_h(const Scalar &x, HSubstitution mode);

/// Canonical text form, terms ordered by (h power, eps power),
/// e.g. "1 - h + (1/3)*h^2*e^-1".
std::string to_string(const Scalar &x);

/// Magnitude of a single term without its sign: "h", "(1/3)*h^2*e^-1", "2".
std::string render_term_magnitude(const Scalar::Term &t);

} // namespace hopfkit
