#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hopfkit/algebra.hpp"
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

const RewriteRule *rule_for(const RuleSet &rs, const Algebra &a, std::initializer_list<const char *> pattern)
{
  Word w;
  for (const char *s : pattern)
    w.push_back(a.letter(s));
  for (const auto &r : rs.rules())
    if (r.pattern == w)
      return &r;
  return nullptr;
}

} // namespace

TEST_CASE("relations compile to directed rules")
{
  const Algebra f(builtin("fun-slh2"), at(3));
  const RewriteRule *ca = rule_for(f.rules(), f, {"c", "a"});
  REQUIRE(ca != nullptr);
  CHECK(f.render(ca->replacement) == "a*c + h*c^2");
  const RewriteRule *bc = rule_for(f.rules(), f, {"b", "c"});
  REQUIRE(bc != nullptr);
  CHECK(bc->leading);
  CHECK(bc->replacement == f.nf(f.element("a*d - 1 - h*a*c")));

  const Algebra u(builtin("uh-sl2"), at(3));
  const RewriteRule *mp = rule_for(u.rules(), u, {"J-", "J+"});
  REQUIRE(mp != nullptr);
  CHECK(u.render(mp->replacement) == "-J3 + J+*J-");

  const Algebra g(builtin("fun-ph11"), at(3));
  CHECK(g.render(g.nf(g.element("alpha*delta"))) == "1");
  CHECK(g.render(g.nf(g.element("delta*alpha"))) == "1");
}

TEST_CASE("worked normal forms")
{
  const Algebra f(builtin("fun-slh2"), at(3));
  CHECK(f.nf(f.element("c*a")) == f.element("a*c + h*c^2"));
  CHECK(f.nf(f.element("d*a")) == f.element("a*d - h*a*c + h*c*d - h^2*c^2"));
  const Algebra u(builtin("uh-sl2"), at(3));
  CHECK(u.nf(u.element("J3*J+")) == u.element("J+*J3 + 2*J+ + (1/3)*h^2*J+^3"));
}

TEST_CASE("normal forms agree with a hand-transcribed naive rewriter")
{
  for (int order = 1; order <= 3; ++order)
  {
    const Algebra f(builtin("fun-slh2"), at(order));
    const auto naive_f = oracle::fun_slh2_rules(order);
    const Algebra u(builtin("uh-sl2"), at(order));
    const auto naive_u = oracle::uh_sl2_rules(order);
    oracle::Lcg rng(static_cast<std::uint64_t>(order));
    for (int i = 0; i < 150; ++i)
    {
      const auto wf = support::random_word(rng, {"a", "b", "c", "d"}, 4);
      CHECK(support::to_ncpoly(f.nf(support::word_element(f, wf)), f.names()).terms ==
            naive_f.reduce(support::word_poly(wf)).terms);
      const auto wu = support::random_word(rng, {"J+", "J3", "J-"}, 4);
      CHECK(support::to_ncpoly(u.nf(support::word_element(u, wu)), u.names()).terms ==
            naive_u.reduce(support::word_poly(wu)).terms);
    }
  }
}

TEST_CASE("normal forms preserve the fundamental representation")
{
  const Algebra u(builtin("uh-sl2"), at(3));
  const oracle::Fundamental rho(3);
  oracle::Lcg rng(17);
  for (int i = 0; i < 200; ++i)
  {
    const auto w = support::random_word(rng, {"J+", "J3", "J-"}, 6);
    const Element x = support::word_element(u, w);
    CHECK(support::represent(u.nf(x), u.names(), rho) == support::represent(x, u.names(), rho));
  }
}

TEST_CASE("normal bases")
{
  const Algebra u(builtin("uh-sl2"), at(3));
  const Algebra f(builtin("fun-slh2"), at(3));
  oracle::Lcg rng(2);
  for (int i = 0; i < 100; ++i)
  {
    const Element nu = u.nf(support::word_element(u, support::random_word(rng, {"J+", "J3", "J-"}, 5)));
    for (const auto &[w, c] : nu.terms())
      CHECK(std::is_sorted(w.begin(), w.end()));
    const Element nf = f.nf(support::word_element(f, support::random_word(rng, {"a", "b", "c", "d"}, 5)));
    for (const auto &[w, c] : nf.terms())
    {
      CHECK(std::is_sorted(w.begin(), w.end()));
      const bool has_b = std::count(w.begin(), w.end(), f.letter("b")) > 0;
      const bool has_c = std::count(w.begin(), w.end(), f.letter("c")) > 0;
      CHECK(!(has_b && has_c));
    }
  }
}

TEST_CASE("normal form is idempotent and multiplicative")
{
  for (const auto &name : builtin_names())
  {
    const Algebra a(builtin(name), at(3));
    const auto &gens = a.presentation().generators;
    oracle::Lcg rng(31);
    for (int i = 0; i < 40; ++i)
    {
      const Element x = support::word_element(a, support::random_word(rng, gens, 3));
      const Element y = support::word_element(a, support::random_word(rng, gens, 3));
      const Element nx = a.nf(x);
      CHECK(a.nf(nx) == nx);
      CHECK(a.nf(multiply(x, y)) == a.nf(multiply(nx, a.nf(y))));
      CHECK(a.rules().normal_form_randomized(multiply(x, y), 99 + static_cast<std::uint64_t>(i)) ==
            a.nf(multiply(x, y)));
    }
  }
}

TEST_CASE("consistency of all built-in presentations")
{
  for (const auto &name : builtin_names())
  {
    CAPTURE(name);
    const Algebra a(builtin(name), at(3));
    const Report r = check_consistency(a.rules(), 1000, 1);
    CHECK(r.pass());
    CHECK(r.find("consistency.bracketing") != nullptr);
    CHECK(r.find("consistency.strategy") != nullptr);
  }
}

TEST_CASE("overlap diamond for J-*J3*J+")
{
  const Algebra u(builtin("uh-sl2"), at(3));
  const Word w = support::to_word(u, {"J-", "J3", "J+"});
  const auto redexes = u.rules().redexes(w);
  REQUIRE(redexes.size() == 2);
  const Element first = u.nf(u.rules().rewrite_once(w, redexes[0].first, redexes[0].second));
  const Element second = u.nf(u.rules().rewrite_once(w, redexes[1].first, redexes[1].second));
  CHECK(first == second);
  const Report r = check_consistency(u.rules(), 10, 1);
  const Check *c = r.find("consistency.overlap[J-*J3*J+]");
  REQUIRE(c != nullptr);
  CHECK(c->pass);
}

TEST_CASE("corrupted sign in [c,a] is caught with a witness")
{
  Presentation p = builtin("fun-slh2");
  for (auto &rel : p.relations)
    if (rel.left == "c" && rel.right == "a")
      rel.rhs = parse_expr("-h*c^2", p.symbols());
  const Algebra a(p, at(3));
  const Report r = check_consistency(a.rules(), 200, 1);
  CHECK_FALSE(r.pass());
  bool witnessed = false;
  for (const auto &c : r.checks)
    witnessed = witnessed || (!c.pass && !c.witness.empty());
  CHECK(witnessed);
}

TEST_CASE("every single sign flip is detected")
{
  for (const char *name : {"fun-slh2", "uh-sl2"})
    for (const auto &[label, mutant] : sign_mutations(builtin(name)))
    {
      CAPTURE(label);
      const Algebra a(mutant, at(3));
      bool detected = !check_consistency(a.rules(), 200, 1).pass() || !verify_hopf(a).pass();
      if (!detected && std::string(name) == "uh-sl2")
        detected = !verify_central(a, casimir(a, "casimir-sl2"), "casimir-sl2").pass();
      CHECK(detected);
    }
}

TEST_CASE("rules violating the termination certificate are rejected")
{
  Presentation p = builtin("uh-sl2");
  p.relations.push_back({"J-", "J+", parse_expr("J3", p.symbols())});
  try
  {
    (void)compile_rules(p, at(2));
    FAIL("expected MalformedRelation");
  }
  catch (const Error &e)
  {
    CHECK(e.code() == Errc::malformed_relation);
  }
  Presentation q = builtin("uh-sl2");
  q.relations[2].rhs = parse_expr("J-*J+*J-", q.symbols());
  try
  {
    (void)compile_rules(q, at(2));
    FAIL("expected MalformedRelation");
  }
  catch (const Error &e)
  {
    CHECK(e.code() == Errc::malformed_relation);
  }
}

TEST_CASE("fuel is a hard limit")
{
  const Algebra u(builtin("uh-sl2"), at(3));
  EngineConfig c = at(3);
  c.fuel = 5;
  try
  {
    const Algebra starved(builtin("uh-sl2"), c);
    (void)starved.nf(u.element("J-^3*J3^2*J+^3"));
    FAIL("expected FuelExhausted");
  }
  catch (const Error &e)
  {
    CHECK(e.code() == Errc::fuel_exhausted);
    CHECK(e.is_resource_limit());
  }
}

TEST_CASE("degree cap is enforced during reduction")
{
  const Algebra u(builtin("uh-sl2"), at(3));
  const Element x = u.element("J-*J3*J+");
  EngineConfig c = at(3);
  c.degree_cap = 3;
  try
  {
    const Algebra capped(builtin("uh-sl2"), c);
    (void)capped.nf(x);
    FAIL("expected DegreeCapExceeded");
  }
  catch (const Error &e)
  {
    CHECK(e.code() == Errc::degree_cap_exceeded);
  }
}

TEST_CASE("tensors reduce slotwise")
{
  const Algebra u(builtin("uh-sl2"), at(2));
  const Tensor t = u.tensor("J-*J+ @ J3*J+");
  CHECK(u.nf(t) == u.tensor("(J+*J- - J3) @ (J+*J3 + 2*J+ + h^2*J+^3/3)"));
}
