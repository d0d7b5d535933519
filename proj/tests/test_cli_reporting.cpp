#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include <json.hpp>

#include "hopfkit/algebra.hpp"
#include "hopfkit/cli.hpp"

using namespace hopfkit;

namespace
{

struct Run
{
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string> &args)
{
  std::ostringstream out, err;
  const int code = run_command(args, out, err);
  return {code, out.str(), err.str()};
}

int count(const std::string &hay, const std::string &needle)
{
  int n = 0;
  for (auto pos = hay.find(needle); pos != std::string::npos; pos = hay.find(needle, pos + 1))
    ++n;
  return n;
}

std::filesystem::path temp_file(const std::string &name, const std::string &content)
{
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << content;
  return path;
}

} // namespace

TEST_CASE("expression grammar")
{
  const Presentation &f = builtin("fun-slh2");
  const Algebra fa(f);
  CHECK(fa.element("c*a") == Element::monomial(Word{fa.letter("c"), fa.letter("a")}, Scalar(1, fa.truncation())));

  const Algebra u(builtin("uh-sl2"));
  CHECK(u.element("-J+^2") == -u.element("J+*J+"));
  CHECK(u.element("2*J+ - J3 + J-") == u.element("(2*J+) + (-J3) + J-"));
  CHECK(u.tensor("J3 @ J+ + J+ @ J3") == u.tensor("(J3 @ J+) + (J+ @ J3)"));
  CHECK(u.tensor("h*J3 @ J+") == u.tensor("(h*J3) @ J+"));

  const Algebra p(builtin("uh-p11"));
  CHECK(p.tensor("K@sinh(h*Pp) - sinh(h*Pp)@K") == p.tensor("K @ sinh(h*P+) - sinh(h*P+) @ K"));
}

TEST_CASE("division by h must be explicit")
{
  const Algebra u(builtin("uh-sl2"));
  try
  {
    (void)u.element("J3^2/2 + sinh(h*Jp)*Jm*(1/h)");
    FAIL("expected ParseError");
  }
  catch (const ParseError &e)
  {
    CHECK(std::string(e.what()).find("divh(sinh(h*Jp),1)*Jm") != std::string::npos);
  }
  try
  {
    (void)u.element("J3 J+");
    FAIL("expected ParseError");
  }
  catch (const ParseError &e)
  {
    CHECK(e.column() == 4);
  }
  try
  {
    (void)u.element("J3*Q");
    FAIL("expected UnknownSymbol");
  }
  catch (const Error &e)
  {
    CHECK(e.code() == Errc::unknown_symbol);
  }
}

TEST_CASE("rendered expressions parse back to themselves")
{
  for (const auto &name : builtin_names())
  {
    const Presentation &p = builtin(name);
    const SymbolTable sym = p.symbols();
    std::vector<Expr> corpus;
    for (const auto &r : p.relations)
      corpus.push_back(r.rhs);
    for (const auto &x : p.extras)
    {
      corpus.push_back(x.lhs);
      corpus.push_back(x.rhs);
    }
    for (const auto *m : {&p.hopf->coproduct, &p.hopf->counit, &p.hopf->antipode})
      for (const auto &[g, e] : *m)
        corpus.push_back(e);
    for (const auto &e : corpus)
    {
      const std::string text = to_string(e);
      CAPTURE(text);
      const Expr back = parse_expr(text, sym);
      CHECK(same_expr(back, e));
      CHECK(to_string(back) == text);
    }
  }
}

TEST_CASE("verify command")
{
  const Run ok = run({"verify", "uh-sl2", "--checks", "hopf", "--order", "3"});
  CHECK(ok.code == 0);
  CHECK(ok.out.rfind("hopfkit-report v1\n", 0) == 0);
  CHECK(ok.out.find("overall: PASS") != std::string::npos);

  const Run bad = run({"verify", "osc4", "--checks", "hopf"});
  CHECK(bad.code == 1);
  CHECK(bad.out.find("FAIL H1.coproduct[N,A+]") != std::string::npos);
  CHECK(bad.out.find("witness: ") != std::string::npos);
  CHECK(bad.err.find("H1.coproduct[N,A+]") != std::string::npos);

  const Run sub = run({"verify", "osc4", "--subalgebra", "A,N"});
  CHECK(sub.code == 0);
  const Run morph = run({"verify", "uh-p11", "--morphism", "K=K,P+=-P+,P-=-P-", "--negate-h"});
  CHECK(morph.code == 0);
}

TEST_CASE("default checks")
{
  CHECK(default_checks(builtin("uh-sl2")) == std::vector<std::string>{"consistency", "hopf", "casimir", "rmatrix", "pairing"});
  CHECK(default_checks(builtin("heis3")) == std::vector<std::string>{"consistency", "hopf"});
  const Run all = run({"verify", "uh-sl2"});
  CHECK(all.code == 0);
  for (const char *subject : {"report consistency of uh-sl2", "report uh-sl2", "report casimir-sl2 in uh-sl2",
                              "report rmatrix-sl2 in uh-sl2", "report pairing"})
    CHECK(all.out.find(subject) != std::string::npos);
}

TEST_CASE("contract command")
{
  const Run r = run({"contract", "--from", "uh-sl2", "--scaling", "poincare", "--target", "uh-p11"});
  CHECK(r.code == 0);
  const std::string compare = r.out.substr(0, r.out.find("report contracted presentation"));
  CHECK(count(compare, "  note: ") == 1);
  CHECK(compare.find("coproduct(P-)") != std::string::npos);

  const Run free = run({"contract", "--from", "fun-slh2", "--scaling", "fun-poincare"});
  CHECK(free.code == 0);
  CHECK(free.out.find("note: extra alpha*delta = 1") != std::string::npos);

  const auto file = temp_file("hopfkit-test-scaling.txt", "scaling lightcone from uh-sl2 to uh-p11\n"
                                                            "map P+ = J+\nmap K = J3/2\nmap P- = eps*J-\nend\n");
  const auto out = std::filesystem::temp_directory_path() / "hopfkit-test-contracted.txt";
  const Run fromfile = run({"contract", "--from", "uh-sl2", "--scaling", file.string(), "--target", "uh-p11",
                            "--output", out.string()});
  CHECK(fromfile.code == 0);
  std::ifstream in(out);
  std::stringstream saved;
  saved << in.rdbuf();
  const Presentation loaded = load_presentation(saved.str());
  CHECK(loaded.generators == builtin("uh-p11").generators);
}

TEST_CASE("normal-form and pair commands")
{
  const Run nf = run({"normal-form", "uh-sl2", "J3*J+"});
  CHECK(nf.code == 0);
  CHECK(nf.out == "2*J+ + J+*J3 + (1/3)*h^2*J+^3\n");
  const Run t = run({"normal-form", "heis3", "A+ @ A"});
  CHECK(t.out == "A+ @ A\n");
  const Run p = run({"pair", "J3", "a*b"});
  CHECK(p.code == 0);
  CHECK(p.out == "h\n");
  CHECK(run({"pair", "J3", "b*a - a*b - h + h*a^2"}).out == "0\n");
  CHECK(run({"pair", "J3", "a*b*c", "--degree", "2"}).code == 3);
}

TEST_CASE("exit codes")
{
  CHECK(run({}).code == 2);
  CHECK(run({"verify"}).code == 2);
  CHECK(run({"verify", "nonexistent"}).code == 2);
  CHECK(run({"verify", "uh-sl2", "--checks", "unknown"}).code == 2);
  CHECK(run({"verify", "heis3", "--checks", "casimir"}).code == 2);
  CHECK(run({"normal-form", "uh-sl2", "J3 J+"}).code == 2);
  CHECK(run({"normal-form", "uh-sl2", "J3*("}).code == 2);
  CHECK(run({"--degree-cap", "3", "normal-form", "uh-sl2", "J-*J3*J+"}).code == 3);
  CHECK(run({"list"}).code == 0);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("reports are deterministic")
{
  const std::vector<std::string> args = {"verify", "uh-sl2", "--seed", "5", "--samples", "300"};
  const Run a = run(args), b = run(args);
  CHECK(a.out == b.out);
  CHECK(a.out.size() > 1000);
  const Run c = run({"verify", "osc4", "--format", "tree"});
  const Run d = run({"verify", "osc4", "--format", "tree"});
  CHECK(c.out == d.out);
}

TEST_CASE("tree format")
{
  const Run r = run({"verify", "osc4", "--checks", "hopf", "--format", "tree"});
  CHECK(r.code == 1);
  REQUIRE(r.out.rfind("hopfkit-report v1\n", 0) == 0);
  const auto doc = nlohmann::json::parse(r.out.substr(r.out.find('\n') + 1));
  CHECK(doc["overall"] == "fail");
  REQUIRE(doc["reports"].size() == 1);
  const auto &rep = doc["reports"][0];
  CHECK(rep["subject"] == "osc4");
  bool found = false;
  for (const auto &c : rep["checks"])
    if (c["id"] == "H1.coproduct[N,A+]")
    {
      found = true;
      CHECK(c["status"] == "fail");
      CHECK(c["order"] == 1);
      CHECK_FALSE(c["witness"].get<std::string>().empty());
    }
  CHECK(found);
}

TEST_CASE("HOPFKIT_ORDER sets the default truncation")
{
  ::setenv("HOPFKIT_ORDER", "2", 1);
  CHECK(default_order() == 2);
  const Run r = run({"verify", "heis3", "--checks", "hopf"});
  CHECK(r.out.find("order=2") != std::string::npos);
  CHECK(r.out.find("order=3") == std::string::npos);
  const Run o = run({"verify", "heis3", "--checks", "hopf", "--order", "3"});
  CHECK(o.out.find("order=3") != std::string::npos);
  ::setenv("HOPFKIT_ORDER", "junk", 1);
  CHECK(default_order() == 3);
  ::unsetenv("HOPFKIT_ORDER");
  CHECK(default_order() == 3);
}

TEST_CASE("the installed executable")
{
  const char *exe = std::getenv("HOPFKIT_CLI");
  if (!exe)
    return;
  auto status = [&](const std::string &args) {
    const int raw = std::system(("\"" + std::string(exe) + "\" " + args + " >/dev/null 2>&1").c_str());
    return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  };
  CHECK(status("verify uh-sl2 --checks hopf --order 3") == 0);
  CHECK(status("verify osc4 --checks hopf") == 1);
  CHECK(status("normal-form uh-sl2 'J3 J+'") == 2);
  CHECK(status("--degree-cap 3 normal-form uh-sl2 'J-*J3*J+'") == 3);
}
