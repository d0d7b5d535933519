#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <chrono>

#include "hopfkit/hopf.hpp"
#include "hopfkit/invariants.hpp"
#include "support.hpp"

using namespace hopfkit;

namespace
{

EngineConfig at(int order)
{
  EngineConfig c;
  c.order = order;
  return c;
}

bool any_failure_with_witness(const Report &r)
{
  for (const auto &c : r.checks)
    if (!c.pass && !c.witness.empty())
      return true;
  return false;
}

} // namespace

TEST_CASE("structure maps on worked examples")
{
  const Algebra g(builtin("fun-ph11"), at(3));
  CHECK(g.coproduct(g.element("beta")) == g.tensor("alpha @ beta + beta @ delta"));
  CHECK(g.antipode(g.element("beta")) == g.element("-beta + h*alpha - h*delta"));

  const Algebra f(builtin("fun-slh2"), at(3));
  CHECK(f.coproduct(Element::unit(f.truncation())) == Tensor::unit(2, f.truncation()));
  CHECK(f.counit(f.element("a*d")) == Scalar(1, f.truncation()));
  CHECK(f.counit(f.element("b*c")).is_zero());
  CHECK(f.antipode(Element::unit(f.truncation())) == Element::unit(f.truncation()));

  const Algebra u(builtin("uh-sl2"), at(3));
  CHECK(u.counit(casimir(u, "casimir-sl2")) == Scalar(Rational(1, 2), u.truncation()));
}

TEST_CASE("antipode of J- at second order")
{
  const Algebra u(builtin("uh-sl2"), at(2));
  const Element s = u.antipode(u.element("J-"));
  CHECK((s - u.element("-J- - h*J3")).h_valuation() == 2);
  const oracle::Fundamental rho(2);
  CHECK(support::represent(s, u.names(), rho) ==
        (rho.exp_h_jp(1) * rho.jm * rho.exp_h_jp(-1)).scaled(oracle::HSeries(2, -1)));
}

TEST_CASE("coproduct of A*A+ in heis3")
{
  const Algebra a(builtin("heis3"), at(2));
  const Tensor expanded = a.nf(multiply(a.tensor("A @ 1 + 1 @ A"), a.tensor("A+ @ exp(h*A) + exp(-h*A) @ A+")));
  CHECK(a.coproduct(a.element("A*A+")) == expanded);
  CHECK(expanded == a.nf(multiply(a.coproduct(a.element("A+")), a.coproduct(a.element("A")))) + a.coproduct(a.element("H")));
}

TEST_CASE("structure maps agree with the fundamental representation")
{
  const Algebra u(builtin("uh-sl2"), at(3));
  const oracle::Fundamental rho(3);
  oracle::Lcg rng(12);
  const oracle::Mat ep = rho.exp_h_jp(1), em = rho.exp_h_jp(-1);
  const std::map<std::string, oracle::Mat> s_image = {
      {"J+", rho.jp.scaled(oracle::HSeries(3, -1))},
      {"J3", (ep * rho.j3 * em).scaled(oracle::HSeries(3, -1))},
      {"J-", (ep * rho.jm * em).scaled(oracle::HSeries(3, -1))},
  };
  for (int i = 0; i < 60; ++i)
  {
    const auto w = support::random_word(rng, {"J+", "J3", "J-"}, 4);
    const Element x = support::word_element(u, w);
    oracle::Mat delta = oracle::Mat::identity(4, 3);
    oracle::Mat anti = oracle::Mat::identity(2, 3);
    for (const auto &g : w)
    {
      delta = delta * rho.coproduct_power(g, 2);
      anti = s_image.at(g) * anti;
    }
    CHECK(support::represent(u.coproduct(x), u.names(), rho) == delta);
    CHECK(support::represent(u.antipode(x), u.names(), rho) == anti);
    CHECK(u.counit(x) == Scalar(w.empty() ? 1 : 0, u.truncation()));
  }
}

TEST_CASE("five presentations satisfy the Hopf axioms")
{
  for (const char *n : {"fun-slh2", "uh-sl2", "fun-ph11", "uh-p11", "heis3"})
  {
    CAPTURE(n);
    const auto start = std::chrono::steady_clock::now();
    const Algebra a(builtin(n), at(3));
    const Report r = verify_hopf(a);
    CHECK(r.pass());
    CHECK(std::chrono::steady_clock::now() - start < std::chrono::seconds(60));
    for (const char *prefix : {"H1.", "H2.", "H3.", "H4."})
    {
      bool present = false;
      for (const auto &c : r.checks)
        present = present || c.id.rfind(prefix, 0) == 0;
      CHECK(present);
    }
  }
  const Algebra f(builtin("fun-slh2"), at(3));
  const Report r = verify_hopf(f);
  CHECK(r.find("H5.grouplike[b*c]") != nullptr);
  CHECK(r.find("H4.left[a]") != nullptr);
}

TEST_CASE("antipode axiom on a by hand")
{
  const Algebra f(builtin("fun-slh2"), at(3));
  CHECK(f.nf(f.element("(d - h*c)*a + (-b + h*a - h*d + h^2*c)*c")) == Element::unit(f.truncation()));
  CHECK(f.nf(f.element("a*d - b*c - h*a*c")) == Element::unit(f.truncation()));
  const Algebra a(builtin("heis3"), at(3));
  CHECK(a.nf(a.element("-exp(h*A)*A+*exp(-h*A)*exp(h*A) + exp(h*A)*A+")).is_zero());
}

TEST_CASE("the oscillator algebra is not a Hopf algebra")
{
  const Algebra a(builtin("osc4"), at(3));
  const Report r = verify_hopf(a);
  CHECK_FALSE(r.pass());
  CHECK(any_failure_with_witness(r));
  const Check *c = r.find("H1.coproduct[N,A+]");
  REQUIRE(c != nullptr);
  CHECK_FALSE(c->pass);
  CHECK(c->order == 1);
}

TEST_CASE("Hopf subalgebras")
{
  const Report an = verify_subalgebra(builtin("osc4"), {"A", "N"}, at(3));
  CHECK(an.pass());
  CHECK(an.find("H1.coproduct[N,A]") != nullptr);

  const Report aa = verify_subalgebra(builtin("osc4"), {"A", "A+"}, at(3));
  CHECK_FALSE(aa.pass());
  const Check *c = aa.find("closure.relation[A,A+]");
  REQUIRE(c != nullptr);
  CHECK_FALSE(c->pass);
  CHECK(c->witness == "H");
  try
  {
    (void)restrict_presentation(builtin("osc4"), {"A", "A+"}, at(3));
    FAIL("expected NotClosed");
  }
  catch (const Error &e)
  {
    CHECK(e.code() == Errc::not_closed);
  }

  CHECK(verify_subalgebra(builtin("uh-sl2"), {"J+"}, at(3)).pass());
}

TEST_CASE("automorphisms of the deformed Poincare algebra")
{
  const Algebra p(builtin("uh-p11"), at(3));
  CHECK(verify_morphism(p, parse_generator_map(p, "K=K,P+=-P+,P-=-P-"), HMode::negate).pass());
  CHECK(verify_morphism(p, parse_generator_map(p, "P+,K,P-"), HMode::keep).pass());
  // cosh is even, so P- may keep its sign as well.
  CHECK(verify_morphism(p, parse_generator_map(p, "K=K,P+=-P+,P-=P-"), HMode::negate).pass());

  const Report wrong = verify_morphism(p, parse_generator_map(p, "K=-K,P+=P+,P-=P-"), HMode::keep);
  CHECK_FALSE(wrong.pass());
  CHECK(any_failure_with_witness(wrong));
  const Report no_h = verify_morphism(p, parse_generator_map(p, "K=K,P+=-P+,P-=-P-"), HMode::keep);
  CHECK_FALSE(no_h.pass());
}

TEST_CASE("generator maps must be total")
{
  const Algebra p(builtin("uh-p11"), at(2));
  try
  {
    (void)parse_generator_map(p, "K=K,P+=-P+");
    FAIL("expected a usage error");
  }
  catch (const Error &e)
  {
    CHECK(e.code() == Errc::usage);
  }
}

TEST_CASE("coproduct is multiplicative and the antipode anti-multiplicative")
{
  for (const auto &n : builtin_names())
  {
    if (n == "osc4")
      continue;
    CAPTURE(n);
    const Algebra a(builtin(n), at(3));
    const auto &gens = a.presentation().generators;
    oracle::Lcg rng(41);
    for (int i = 0; i < 20; ++i)
    {
      const Element x = support::word_element(a, support::random_word(rng, gens, 2));
      const Element y = support::word_element(a, support::random_word(rng, gens, 2));
      const Element xy = a.nf(multiply(x, y));
      CHECK(a.coproduct(xy) == a.nf(multiply(a.coproduct(x), a.coproduct(y))));
      CHECK(a.antipode(xy) == a.nf(multiply(a.antipode(y), a.antipode(x))));
    }
    for (int g = 0; g < a.size(); ++g)
    {
      const Element x = a.generator(static_cast<Letter>(g));
      CHECK(a.counit(a.antipode(x)) == a.counit(x));
    }
  }
}

TEST_CASE("structure maps need Hopf data")
{
  Presentation p = builtin("heis3");
  p.hopf.reset();
  const Algebra a(p, at(2));
  try
  {
    (void)a.coproduct(a.element("A"));
    FAIL("expected NoHopfData");
  }
  catch (const Error &e)
  {
    CHECK(e.code() == Errc::no_hopf_data);
  }
}
