#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hopfkit/pairing.hpp"
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

struct Fixture
{
  Algebra u{builtin("uh-sl2"), at(3)};
  Algebra f{builtin("fun-slh2"), at(3)};
  PairingEngine engine{u, f};

  Scalar pair(const std::string &x, const std::string &y) const { return engine.pair(u.nf(u.element(x)), f.nf(f.element(y))); }
  Scalar scalar(const std::string &s) const { return as_scalar(u.evaluate(s)); }
};

std::pair<int, int> entry(const std::string &name)
{
  if (name == "a")
    return {0, 0};
  if (name == "b")
    return {0, 1};
  if (name == "c")
    return {1, 0};
  return {1, 1};
}

} // namespace

TEST_CASE("generator values")
{
  const Fixture fx;
  const std::vector<std::string> us = {"J+", "J3", "J-"}, fs = {"a", "b", "c", "d"};
  const int expected[3][4] = {{0, 1, 0, 0}, {1, 0, 0, -1}, {0, 0, 1, 0}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 4; ++j)
    {
      CAPTURE(us[i] + " " + fs[j]);
      CHECK(fx.engine.base(fx.u.letter(us[i]), fx.f.letter(fs[j])) == expected[i][j]);
      CHECK(fx.pair(us[i], fs[j]) == Scalar(expected[i][j], fx.u.truncation()));
    }
}

TEST_CASE("worked values")
{
  const Fixture fx;
  CHECK(fx.pair("J3", "a*b") == fx.scalar("h"));
  CHECK(fx.pair("J3", "b*a") == fx.scalar("-h"));
  CHECK(fx.pair("J3", "h*a^2") == fx.scalar("2*h"));
  CHECK(fx.pair("J3", "b*a - a*b - h + h*a^2").is_zero());
  CHECK(fx.pair("J+*J- - J-*J+ - J3", "a").is_zero());
  CHECK(fx.pair("1", "1") == fx.scalar("1"));
  CHECK(fx.pair("J3", "1").is_zero());
}

TEST_CASE("agreement with the fundamental representation on all words up to degree 3")
{
  const Fixture fx;
  const oracle::Fundamental rho(3);
  const std::vector<std::string> us = {"J+", "J3", "J-"}, fs = {"a", "b", "c", "d"};
  int compared = 0;
  for (const Word &x : words_up_to(3, 3))
  {
    std::vector<std::string> xw;
    for (auto l : x)
      xw.push_back(fx.u.names()[l]);
    std::vector<oracle::Mat> images;
    for (int k = 1; k <= 3; ++k)
      images.push_back(rho.coproduct_image(xw, k));
    const Element xe = Element::monomial(x, Scalar(1, fx.u.truncation()));
    for (const Word &y : words_up_to(4, 3))
    {
      std::vector<std::pair<int, int>> ys;
      for (auto l : y)
        ys.push_back(entry(fx.f.names()[l]));
      const oracle::HSeries want =
          ys.empty() ? rho.pair(xw, ys) : oracle::Fundamental::entry(images[ys.size() - 1], ys);
      const Element ye = Element::monomial(y, Scalar(1, fx.f.truncation()));
      CHECK(support::to_series(fx.engine.pair(xe, ye), 3) == want);
      ++compared;
    }
  }
  CHECK(compared == 40 * 85);
}

TEST_CASE("relations of either side pair to zero")
{
  const Fixture fx;
  const std::vector<std::string> f_relations = {
      "c*a - a*c - h*c^2", "b*a - a*b - h + h*a^2", "a*d - d*a - h*a*c + h*d*c",
      "c*d - d*c - h*c^2", "b*d - d*b - h + h*d^2", "c*b - b*c - h*a*c - h*c*d",
      "a*d - b*c - h*a*c - 1"};
  for (const auto &x : words_up_to(3, 3))
    for (const auto &r : f_relations)
    {
      const Element rf = as_element(fx.f.evaluate(r), fx.f.truncation());
      CHECK(fx.engine.pair(Element::monomial(x, Scalar(1, fx.u.truncation())), rf).is_zero());
    }
  const std::vector<std::string> u_relations = {"J3*J+ - J+*J3 - 2*divh(sinh(h*J+), 1)",
                                                "J3*J- - J-*J3 + J-*cosh(h*J+) + cosh(h*J+)*J-",
                                                "J+*J- - J-*J+ - J3"};
  for (const auto &y : words_up_to(4, 3))
    for (const auto &r : u_relations)
    {
      const Element ru = as_element(fx.u.evaluate(r), fx.u.truncation());
      CHECK(fx.engine.pair(ru, Element::monomial(y, Scalar(1, fx.f.truncation()))).is_zero());
    }
}

TEST_CASE("splitting at either end gives the same value")
{
  const Fixture fx;
  for (const auto &x : words_up_to(3, 2))
    for (const auto &y : words_up_to(4, 3))
      CHECK(fx.engine.pair(x, y) == fx.engine.pair_last(x, y));
}

TEST_CASE("pairing report at degree 3")
{
  const Report r = verify_pairing(3, at(3));
  CHECK(r.pass());
  CHECK(r.find("P3.splitting") != nullptr);
  int p1 = 0, p2 = 0;
  for (const auto &c : r.checks)
  {
    p1 += c.id.rfind("P1[", 0) == 0;
    p2 += c.id.rfind("P2[", 0) == 0;
  }
  CHECK(p1 > 0);
  CHECK(p2 > 0);
}

TEST_CASE("pairing needs the expected generators")
{
  const Algebra u(builtin("uh-p11"), at(2));
  const Algebra f(builtin("fun-slh2"), at(2));
  try
  {
    const PairingEngine e(u, f);
    FAIL("expected an error");
  }
  catch (const Error &e)
  {
    CHECK(e.code() != Errc::parse_error);
  }
}
