#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hopfkit/error.hpp"
#include "hopfkit/scalar.hpp"
#include "oracle.hpp"

using namespace hopfkit;

namespace
{

Scalar mono(const Rational &c, int h, int e, Truncation t) { return Scalar::monomial(c, h, e, t); }

oracle::Poly to_poly(const Scalar &x)
{
  oracle::Poly p;
  for (const auto &t : x.terms())
    p[{t.hpow, t.eps}] = t.coeff;
  return p;
}

Scalar random_scalar(oracle::Lcg &rng, Truncation t)
{
  Scalar s(t);
  const int n = rng.below(4);
  for (int i = 0; i < n; ++i)
  {
    const int e = t.eps_bound == 0 ? 0 : rng.below(2 * t.eps_bound + 1) - t.eps_bound;
    s += mono(Rational(rng.below(9) - 4, rng.below(3) + 1), rng.below(t.order + 1), e, t);
  }
  return s;
}

} // namespace

TEST_CASE("truncation discards powers beyond N")
{
  const Truncation t{3, 0};
  CHECK((Scalar::h(t) * Scalar::h(t, 3)).is_zero());
  const Truncation t2{2, 0};
  const Scalar one(1, t2);
  CHECK((one + Scalar::h(t2)) * (one - Scalar::h(t2)) == one - Scalar::h(t2, 2));
}

TEST_CASE("eps powers cancel before the bound is checked")
{
  const Truncation t{3, 1};
  CHECK(mono(1, 1, -1, t) * mono(1, 1, 1, t) == Scalar::h(t, 2));
}

TEST_CASE("products exceeding the eps bound are errors")
{
  const Truncation t{3, 1};
  try
  {
    (void)(mono(1, 0, 1, t) * mono(1, 0, 1, t));
    FAIL("expected EpsOverflow");
  }
  catch (const Error &e)
  {
    CHECK(e.code() == Errc::eps_overflow);
  }
}

TEST_CASE("mixed truncation orders are rejected")
{
  try
  {
    (void)(Scalar(1, {2, 0}) + Scalar(1, {3, 0}));
    FAIL("expected MixedTruncation");
  }
  catch (const Error &e)
  {
    CHECK(e.code() == Errc::mixed_truncation);
  }
}

TEST_CASE("ring operations agree with untruncated multiplication then truncation")
{
  oracle::Lcg rng(7);
  for (int trial = 0; trial < 300; ++trial)
  {
    const Truncation t{1 + rng.below(4), rng.below(3)};
    const Scalar x = random_scalar(rng, t), y = random_scalar(rng, t);
    oracle::Poly expected = oracle::truncate(oracle::mul(to_poly(x), to_poly(y)), t.order);
    bool overflow = false;
    for (const auto &[k, c] : expected)
      overflow = overflow || std::abs(k.second) > t.eps_bound;
    if (overflow)
      continue;
    CHECK(to_poly(x * y) == expected);
    CHECK(to_poly(x + y) == oracle::add(to_poly(x), to_poly(y)));
    CHECK(to_poly(x - y) == oracle::add(to_poly(x), to_poly(y), -1));
  }
}

TEST_CASE("ring axioms on random samples")
{
  oracle::Lcg rng(11);
  for (int trial = 0; trial < 200; ++trial)
  {
    const Truncation t{1 + rng.below(4), 0};
    const Scalar x = random_scalar(rng, t), y = random_scalar(rng, t), z = random_scalar(rng, t);
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
    CHECK(x * y == y * x);
    CHECK(x - x == Scalar(t));
    CHECK(-(-x) == x);
  }
}

TEST_CASE("exact division by h")
{
  const Truncation t{3, 0};
  CHECK(exact_divide_h(Scalar::h(t, 2) + Scalar::h(t, 3), 1) == Scalar::h(t) + Scalar::h(t, 2));
  const Scalar series = 2 * Scalar::h(t) + Rational(1, 3) * Scalar::h(t, 3);
  const Scalar q = exact_divide_h(series, 1);
  CHECK(q == Scalar(2, t) + Rational(1, 3) * Scalar::h(t, 2));
  CHECK(q.effective_order() == 2);
  try
  {
    (void)exact_divide_h(Scalar::h(t), 2);
    FAIL("expected NotDivisible");
  }
  catch (const Error &e)
  {
    CHECK(e.code() == Errc::not_divisible);
  }
}

TEST_CASE("exact division inverts multiplication by h^k with headroom")
{
  oracle::Lcg rng(3);
  for (int trial = 0; trial < 100; ++trial)
  {
    const Truncation t{4, 0};
    const int k = 1 + rng.below(2);
    const Scalar x = random_scalar(rng, t).dropped_above(4 - k);
    Scalar shifted = x * Scalar::h(t, k);
    CHECK(exact_divide_h(shifted, k) == x);
  }
}

TEST_CASE("eps limit")
{
  const Truncation t{3, 2};
  CHECK(limit_epsilon(Scalar(1, t) + mono(1, 1, 1, t)) == Scalar(1, t));
  CHECK(limit_epsilon(Scalar::h(t) - mono(1, 1, 2, t) + mono(2, 0, 1, t)) == Scalar::h(t));
  try
  {
    (void)limit_epsilon(mono(1, 1, -1, t));
    FAIL("expected SingularLimit");
  }
  catch (const Error &e)
  {
    CHECK(e.code() == Errc::singular_limit);
  }
  oracle::Lcg rng(5);
  for (int i = 0; i < 50; ++i)
  {
    Scalar x = random_scalar(rng, t);
    if (x.min_eps() < 0)
      continue;
    CHECK(limit_epsilon(limit_epsilon(x)) == limit_epsilon(x));
  }
}

TEST_CASE("h substitution")
{
  const Truncation t{3, 0};
  const Scalar x = Scalar(1, t) + Scalar::h(t) - Scalar::h(t, 2);
  CHECK(substitute_h(x, HSubstitution::zero) == Scalar(1, t));
  CHECK(substitute_h(x, HSubstitution::negate) == Scalar(1, t) - Scalar::h(t) - Scalar::h(t, 2));
  const Scalar odd = 2 * Scalar::h(t) + Rational(1, 3) * Scalar::h(t, 3);
  CHECK(substitute_h(odd, HSubstitution::negate) == -odd);
  oracle::Lcg rng(9);
  for (int i = 0; i < 50; ++i)
  {
    Scalar y = random_scalar(rng, t);
    CHECK(substitute_h(substitute_h(y, HSubstitution::negate), HSubstitution::negate) == y);
  }
}

TEST_CASE("canonical rendering")
{
  const Truncation t{3, 1};
  CHECK(to_string(Scalar(t)) == "0");
  CHECK(to_string(Scalar(Rational(1, 2), t)) == "(1/2)");
  CHECK(to_string(Scalar(1, t) - Scalar::h(t) + mono(Rational(1, 3), 2, -1, t)) == "1 - h + (1/3)*h^2*e^-1");
}

TEST_CASE("rationals stay in lowest terms")
{
  const Truncation t{1, 0};
  const Scalar x(Rational(2, 4), t);
  CHECK(x.constant_term().get_den() == 2);
  CHECK(x.constant_term().get_num() == 1);
}
