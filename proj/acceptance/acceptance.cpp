// Runs every acceptance criterion and prints one PASS/FAIL line for each.
// The exit status is 0 when the outcomes are exactly the recorded ones:
// all criteria pass except criterion 5, whose only failures are the two
// intertwining checks of rmatrix-p11 as printed (see the line it prints).

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

#include "hopfkit/cli.hpp"
#include "hopfkit/contraction.hpp"
#include "hopfkit/hopf.hpp"
#include "hopfkit/invariants.hpp"
#include "hopfkit/pairing.hpp"

using namespace hopfkit;

namespace
{

EngineConfig at(int order)
{
  EngineConfig c;
  c.order = order;
  c.degree_cap = 12;
  return c;
}

double seconds_since(std::chrono::steady_clock::time_point t)
{
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
}

std::string fixed(double s)
{
  std::ostringstream o;
  o.precision(2);
  o << std::fixed << s << "s";
  return o.str();
}

struct Outcome
{
  bool pass = true;
  std::vector<std::string> notes;

  void require(bool ok, const std::string &what)
  {
    if (!ok)
    {
      pass = false;
      notes.push_back("failed: " + what);
    }
  }
  void note(const std::string &s) { notes.push_back(s); }
};

Outcome hopf_suite()
{
  Outcome o;
  for (const char *n : {"fun-slh2", "uh-sl2", "fun-ph11", "uh-p11", "heis3"})
  {
    const auto t = std::chrono::steady_clock::now();
    const Algebra a(builtin(n), at(3));
    const Report r = verify_hopf(a);
    const double s = seconds_since(t);
    o.require(r.pass(), std::string(n) + " H1-H5");
    o.require(s < 60, std::string(n) + " under 60 s");
    o.note(std::string(n) + " " + std::to_string(r.checks.size()) + " checks in " + fixed(s));
  }
  return o;
}

Outcome oscillator()
{
  Outcome o;
  const Algebra a(builtin("osc4"), at(3));
  const Report r = verify_hopf(a);
  bool witnessed = false;
  for (const auto &c : r.checks)
    witnessed = witnessed || (!c.pass && !c.witness.empty());
  o.require(!r.pass() && witnessed, "osc4 fails with a nonzero witness");
  const auto ids = r.failing_ids();
  o.note("osc4 failing checks: " + std::to_string(ids.size()) + (ids.empty() ? "" : ", first " + ids.front()));
  o.require(verify_subalgebra(builtin("osc4"), {"A", "N"}, at(3)).pass(), "{A,N} is a Hopf subalgebra");
  return o;
}

Outcome contractions()
{
  Outcome o;
  for (const auto &name : builtin_scaling_names())
  {
    const Contraction k = Contraction::builtin(builtin_scaling(name), true, at(3));
    const Report r = k.compare();
    o.require(r.pass(), name + " reproduces its target");
    const std::size_t expected = name == "poincare" ? 1 : 0;
    o.require(r.annotations.size() == expected, name + " has " + std::to_string(expected) + " annotations");
    o.note(name + ": " + std::to_string(r.checks.size()) + " checks, " + std::to_string(r.annotations.size()) +
           " annotations");
  }
  return o;
}

Outcome casimirs()
{
  Outcome o;
  const Algebra u(builtin("uh-sl2"), at(3));
  const Algebra p(builtin("uh-p11"), at(3));
  o.require(verify_central(u, casimir(u, "casimir-sl2"), "casimir-sl2", 3).pass(), "casimir-sl2 central");
  o.require(verify_central(p, casimir(p, "casimir-p11"), "casimir-p11", 3).pass(), "casimir-p11 central");
  const Contraction k = Contraction::builtin(builtin_scaling("poincare"), true, at(3));
  o.require(k.contract_element(casimir(k.source(), "casimir-sl2"), "casimir-sl2") == casimir(*k.target(), "casimir-p11"),
            "eps^1 renormalized contraction of casimir-sl2 equals casimir-p11");
  o.require(verify_casimir(u, "casimir-sl2").find("classical")->pass, "casimir-sl2 classical limit");
  o.require(verify_casimir(p, "casimir-p11").find("classical")->pass, "casimir-p11 classical limit");
  return o;
}

Outcome r_matrices(bool &as_recorded)
{
  Outcome o;
  const auto t = std::chrono::steady_clock::now();
  const Algebra u(builtin("uh-sl2"), at(2));
  const Algebra p(builtin("uh-p11"), at(2));
  const Report ru = verify_rmatrix(u, "rmatrix-sl2");
  const Report rp = verify_rmatrix(p, "rmatrix-p11");
  const double s = seconds_since(t);
  o.require(ru.pass(), "rmatrix-sl2 R1-R3");
  o.require(rp.pass(), "rmatrix-p11 R1-R3 (" + [&] {
    std::string ids;
    for (const auto &id : rp.failing_ids())
      ids += (ids.empty() ? "" : ", ") + id;
    return ids;
  }() + ")");
  o.require(s < 600, "QYBE under 10 min");
  const Algebra u1(builtin("uh-sl2"), at(1));
  const Algebra p1(builtin("uh-p11"), at(1));
  const bool first_order = r_matrix(u1, "rmatrix-sl2") == u1.tensor("1 @ 1 + h*(J3 @ J+ - J+ @ J3)") &&
                           r_matrix(p1, "rmatrix-p11") == p1.tensor("1 @ 1 + h*(K @ P+ - P+ @ K)");
  o.require(first_order, "first-order expansions");
  o.note("R-matrix checks took " + fixed(s));
  if (!rp.pass())
  {
    o.note("with [K,P+] = sinh(hP+)/h and Delta(K) = K@exp(hP+) + exp(-hP+)@K the printed exponent is half of "
           "rmatrix-sl2 under J3 = 2K; the order-h intertwining residue is exactly K@P+ - P+@K");
    for (const auto &a : rp.annotations)
      if (a.find("poincare substitution") != std::string::npos)
        o.note(a);
  }
  as_recorded = ru.pass() && first_order && s < 600 &&
                rp.failing_ids() == std::vector<std::string>{"R3.intertwine[K]", "R3.intertwine[P-]"};
  return o;
}

Outcome duality()
{
  Outcome o;
  const Report r = verify_pairing(3, at(3));
  o.require(r.pass(), "P1-P3 at degree 3");
  const Algebra u(builtin("uh-sl2"), at(3));
  const Algebra f(builtin("fun-slh2"), at(3));
  const PairingEngine e(u, f);
  const int base[3][4] = {{0, 1, 0, 0}, {1, 0, 0, -1}, {0, 0, 1, 0}};
  bool ok = true;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 4; ++j)
      ok = ok && e.base(static_cast<Letter>(i), static_cast<Letter>(j)) == base[i][j];
  o.require(ok, "generator values");
  o.require(e.pair(u.element("J3"), f.element("a*b")) == as_scalar(u.evaluate("h")), "<J3, ab> = h");
  o.require(e.pair(u.element("J3"), f.nf(f.element("b*a - a*b - h + h*a^2"))).is_zero(), "relation annihilated");
  return o;
}

Outcome rewriting()
{
  Outcome o;
  for (const auto &n : builtin_names())
  {
    const Algebra a(builtin(n), at(3));
    o.require(check_consistency(a.rules(), 1000, 1).pass(), n + " consistency");
  }
  int mutants = 0, detected = 0;
  for (const char *n : {"fun-slh2", "uh-sl2"})
    for (const auto &[label, p] : sign_mutations(builtin(n)))
    {
      ++mutants;
      const Algebra a(p, at(3));
      bool caught = !check_consistency(a.rules(), 200, 1).pass() || !verify_hopf(a).pass();
      if (!caught && std::string(n) == "uh-sl2")
        caught = !verify_central(a, casimir(a, "casimir-sl2"), "casimir-sl2").pass();
      detected += caught;
      o.require(caught, std::string(n) + " mutant " + label);
    }
  o.note(std::to_string(detected) + " of " + std::to_string(mutants) + " sign flips detected");
  return o;
}

Outcome determinism()
{
  Outcome o;
  for (const auto &args : std::vector<std::vector<std::string>>{{"verify", "uh-sl2", "--seed", "7"},
                                                                 {"verify", "osc4", "--format", "tree"},
                                                                 {"contract", "--from", "uh-sl2", "--scaling", "oscillator", "--target", "osc4"}})
  {
    std::ostringstream a, b, ea, eb;
    const int ca = run_command(args, a, ea);
    const int cb = run_command(args, b, eb);
    o.require(ca == cb && a.str() == b.str() && a.str().rfind("hopfkit-report v1\n", 0) == 0,
              "byte-identical output for '" + args[0] + " " + args[1] + "'");
  }
  return o;
}

} // namespace

int main()
{
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"Hopf axioms for the five Hopf algebras", hopf_suite},
      {"oscillator algebra fails, {A,N} subalgebra passes", oscillator},
      {"contractions reproduce their targets", contractions},
      {"Casimir centrality, contraction and classical limit", casimirs},
      {"R-matrix triangularity, QYBE and intertwining", {}},
      {"duality pairing", duality},
      {"rewrite soundness and mutation detection", rewriting},
      {"deterministic reports", determinism},
  };
  int passed = 0;
  bool as_recorded = true;
  for (std::size_t i = 0; i < criteria.size(); ++i)
  {
    Outcome o;
    try
    {
      if (i == 4)
      {
        bool recorded = false;
        o = r_matrices(recorded);
        as_recorded = as_recorded && recorded;
      }
      else
      {
        o = criteria[i].second();
        as_recorded = as_recorded && o.pass;
      }
    }
    catch (const std::exception &e)
    {
      o.pass = false;
      o.notes.push_back(std::string("error: ") + e.what());
      as_recorded = false;
    }
    passed += o.pass;
    std::cout << "criterion " << i + 1 << ": " << (o.pass ? "PASS" : "FAIL") << "  " << criteria[i].first << "\n";
    for (const auto &n : o.notes)
      std::cout << "    " << n << "\n";
  }
  std::cout << "summary: " << passed << " of " << criteria.size() << " criteria pass\n";
  return as_recorded ? 0 : 1;
}
