#include "hopfkit/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <new>
#include <sstream>

#include <CLI11.hpp>

#include "hopfkit/algebra.hpp"
#include "hopfkit/contraction.hpp"
#include "hopfkit/hopf.hpp"
#include "hopfkit/invariants.hpp"
#include "hopfkit/pairing.hpp"

namespace hopfkit
{

namespace
{

const std::vector<std::string> kCheckGroups = {"hopf", "casimir", "rmatrix", "consistency", "pairing"};

std::string read_file(const std::string &path)
{
  std::ifstream in(path);
  if (!in)
    throw Error(Errc::usage, "cannot read '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

bool is_builtin(const Presentation &p)
{
  const auto names = builtin_names();
  return std::find(names.begin(), names.end(), p.name) != names.end() && builtin(p.name) == p;
}

std::vector<std::string> distinguished_for(const Presentation &p, const std::string &prefix)
{
  std::vector<std::string> out;
  if (!is_builtin(p))
    return out;
  for (const auto &n : distinguished_names())
    if (n.rfind(prefix, 0) == 0 && distinguished_algebra(n) == p.name)
      out.push_back(n);
  return out;
}

bool pairing_applies(const Presentation &p)
{
  return is_builtin(p) && (p.name == "uh-sl2" || p.name == "fun-slh2");
}

std::vector<std::string> split_list(const std::string &s)
{
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s)
  {
    if (ch == ',')
    {
      if (!cur.empty())
        out.push_back(cur);
      cur.clear();
    }
    else if (ch != ' ')
      cur += ch;
  }
  if (!cur.empty())
    out.push_back(cur);
  return out;
}

int emit(const std::vector<Report> &reports, const RunConfig &config, std::ostream &out, std::ostream &err)
{
  out << format_reports(reports, config.format);
  std::vector<std::string> failing;
  for (const auto &r : reports)
    for (const auto &id : r.failing_ids())
      failing.push_back(r.subject + ": " + id);
  if (failing.empty())
    return 0;
  err << "failing checks:\n";
  for (const auto &f : failing)
    err << "  " << f << "\n";
  return 1;
}

std::vector<std::string> lines_of(const std::string &text)
{
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);)
    if (!line.empty())
      out.push_back(line);
  return out;
}

} // namespace

EngineConfig RunConfig::engine(int at_order) const
{
  EngineConfig c;
  c.order = at_order;
  c.degree_cap = degree_cap;
  return c;
}

int default_order()
{
  if (const char *env = std::getenv("HOPFKIT_ORDER"))
  {
    char *end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0 && v < 1000)
      return static_cast<int>(v);
  }
  return 3;
}

Presentation resolve_presentation(const std::string &name_or_path)
{
  const auto names = builtin_names();
  if (std::find(names.begin(), names.end(), name_or_path) != names.end())
    return builtin(name_or_path);
  std::ifstream probe(name_or_path);
  if (!probe)
    throw Error(Errc::unknown_name, "no built-in presentation or file named '" + name_or_path + "'");
  return load_presentation(read_file(name_or_path));
}

ScalingMap resolve_scaling(const std::string &name_or_path)
{
  const auto names = builtin_scaling_names();
  if (std::find(names.begin(), names.end(), name_or_path) != names.end())
    return builtin_scaling(name_or_path);
  std::ifstream probe(name_or_path);
  if (!probe)
    throw Error(Errc::unknown_name, "no built-in scaling or file named '" + name_or_path + "'");
  Library lib = load_library(read_file(name_or_path));
  if (lib.scalings.size() != 1)
    throw Error(Errc::validation_error, "'" + name_or_path + "' must contain exactly one scaling block");
  return lib.scalings.front();
}

std::vector<std::string> default_checks(const Presentation &p)
{
  std::vector<std::string> out{"consistency"};
  if (p.hopf)
    out.push_back("hopf");
  if (!distinguished_for(p, "casimir").empty())
    out.push_back("casimir");
  if (!distinguished_for(p, "rmatrix").empty())
    out.push_back("rmatrix");
  if (pairing_applies(p))
    out.push_back("pairing");
  return out;
}

std::vector<Report> run_verify(const Presentation &p, const std::vector<std::string> &checks, const RunConfig &config)
{
  for (const auto &c : checks)
    if (std::find(kCheckGroups.begin(), kCheckGroups.end(), c) == kCheckGroups.end())
      throw Error(Errc::usage, "unknown check group '" + c + "' (expected hopf, casimir, rmatrix, consistency, pairing)");

  const Algebra a(p, config.engine());
  std::vector<Report> out;
  for (const auto &c : checks)
  {
    if (c == "consistency")
    {
      Report r = check_consistency(a.rules(), config.samples, config.seed);
      r.subject = "consistency of " + p.name;
      out.push_back(std::move(r));
    }
    else if (c == "hopf")
    {
      if (!p.hopf)
        throw Error(Errc::usage, p.name + " has no Hopf data");
      out.push_back(verify_hopf(a));
    }
    else if (c == "casimir")
    {
      const auto names = distinguished_for(p, "casimir");
      if (names.empty())
        throw Error(Errc::usage, "no Casimir element is registered for " + p.name);
      for (const auto &n : names)
        out.push_back(verify_casimir(a, n));
    }
    else if (c == "rmatrix")
    {
      const auto names = distinguished_for(p, "rmatrix");
      if (names.empty())
        throw Error(Errc::usage, "no R-matrix is registered for " + p.name);
      const Algebra q(p, config.engine(config.qybe_order));
      for (const auto &n : names)
        out.push_back(verify_rmatrix(q, n));
    }
    else if (c == "pairing")
    {
      if (!pairing_applies(p))
        throw Error(Errc::usage, "the pairing is defined between uh-sl2 and fun-slh2 only");
      out.push_back(verify_pairing(config.pairing_degree, config.engine()));
    }
  }
  for (auto &r : out)
    r.sort();
  return out;
}

namespace
{

int run_list(const RunConfig &config, std::ostream &out)
{
  Report presentations;
  presentations.subject = "presentations";
  for (const auto &n : builtin_names())
  {
    const Presentation &p = builtin(n);
    std::string gens;
    for (const auto &g : p.generators)
      gens += (gens.empty() ? "" : ", ") + g;
    presentations.annotations.push_back(n + " {" + gens + "}" + (p.hopf ? " hopf" : ""));
  }
  Report scalings;
  scalings.subject = "scalings";
  for (const auto &n : builtin_scaling_names())
  {
    const ScalingMap &s = builtin_scaling(n);
    scalings.annotations.push_back(n + ": " + s.source + " -> " + s.target);
  }
  Report elements;
  elements.subject = "distinguished elements";
  for (const auto &n : distinguished_names())
    elements.annotations.push_back(n + " in " + distinguished_algebra(n) + ": " + distinguished_expression(n));
  out << format_reports({presentations, scalings, elements}, config.format);
  return 0;
}

int run_contract(const std::string &from, const std::string &scaling, const std::string &target,
                 const std::string &output, const RunConfig &config, std::ostream &out, std::ostream &err)
{
  const ScalingMap s = resolve_scaling(scaling);
  const Presentation source = resolve_presentation(from);
  std::optional<Presentation> expected;
  if (!target.empty())
    expected = resolve_presentation(target);
  const Contraction k(s, source, expected, config.engine());

  const Presentation contracted = k.as_presentation();
  const std::string text = save_presentation(contracted);
  if (!output.empty())
  {
    std::ofstream f(output);
    if (!f)
      throw Error(Errc::usage, "cannot write '" + output + "'");
    f << text;
  }

  std::vector<Report> reports;
  if (expected)
  {
    Report r = k.compare();
    r.sort();
    reports.push_back(std::move(r));
  }
  else
  {
    // No reference: the limit must itself be a consistent Hopf algebra.
    const Algebra a(contracted, config.engine());
    Report r = check_consistency(a.rules(), config.samples, config.seed);
    r.subject = "contraction " + s.name;
    if (a.has_hopf())
      r.merge(verify_hopf(a));
    r.sort();
    reports.push_back(std::move(r));
  }
  Report listing;
  listing.subject = "contracted presentation";
  listing.annotations = lines_of(text);
  reports.push_back(std::move(listing));
  return emit(reports, config, out, err);
}

int run_normal_form(const std::string &name, const std::string &expr, const RunConfig &config, std::ostream &out)
{
  const Algebra a(resolve_presentation(name), config.engine());
  const Value v = a.evaluate(expr);
  if (const auto *t = std::get_if<Tensor>(&v))
    out << a.render(a.nf(*t)) << "\n";
  else
    out << a.render(a.nf(as_element(v, a.truncation()))) << "\n";
  return 0;
}

int run_pair(const std::string &u, const std::string &f, int degree, const RunConfig &config, std::ostream &out)
{
  const Algebra ua(builtin("uh-sl2"), config.engine());
  const Algebra fa(builtin("fun-slh2"), config.engine());
  const Element x = ua.nf(ua.element(u));
  const Element y = fa.nf(fa.element(f));
  for (const Element *e : {&x, &y})
    for (const auto &[w, c] : e->terms())
      if (static_cast<int>(w.size()) > degree)
        throw Error(Errc::degree_cap_exceeded, "word of length " + std::to_string(w.size()) +
                                                    " exceeds the pairing degree " + std::to_string(degree));
  const PairingEngine engine(ua, fa);
  out << to_string(engine.pair(x, y)) << "\n";
  return 0;
}

int run_subalgebra(const std::string &name, const std::string &gens, const RunConfig &config, std::ostream &out,
                   std::ostream &err)
{
  Report r = verify_subalgebra(resolve_presentation(name), split_list(gens), config.engine());
  r.sort();
  return emit({r}, config, out, err);
}

int run_morphism(const std::string &name, const std::string &map, bool negate_h, const RunConfig &config,
                 std::ostream &out, std::ostream &err)
{
  const Algebra a(resolve_presentation(name), config.engine());
  Report r = verify_morphism(a, parse_generator_map(a, map), negate_h ? HMode::negate : HMode::keep);
  r.sort();
  return emit({r}, config, out, err);
}

} // namespace

int run_command(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
  RunConfig config;
  config.order = default_order();
  std::string format = "text";

  CLI::App app{"Symbolic verification of Jordanian quantum algebras", "hopfkit"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--order", config.order, "truncation order N in h (default 3, or HOPFKIT_ORDER)")
      ->check(CLI::Range(1, 64));
  app.add_option("--degree-cap", config.degree_cap, "largest word length kept before failing")
      ->check(CLI::Range(1, 256));
  app.add_option("--qybe-order", config.qybe_order, "truncation order for R-matrix checks")->check(CLI::Range(1, 64));
  app.add_option("--samples", config.samples, "random samples for the consistency check")
      ->check(CLI::Range(1, 1000000));
  app.add_option("--seed", config.seed, "seed for sampled checks");
  app.add_option("--format", format, "report format")->check(CLI::IsMember({"text", "tree"}));

  std::string pres, checks, subalgebra, morphism;
  bool negate_h = false;
  auto *verify = app.add_subcommand("verify", "verify relations, Hopf axioms and invariants of a presentation");
  verify->add_option("presentation", pres, "built-in name or presentation file")->required();
  verify->add_option("--checks", checks, "comma list of hopf,casimir,rmatrix,consistency,pairing");
  verify->add_option("--degree", config.pairing_degree, "word degree bound for the pairing checks")
      ->check(CLI::Range(1, 8));
  verify->add_option("--subalgebra", subalgebra, "check that these generators span a Hopf subalgebra");
  verify->add_option("--morphism", morphism, "check a generator map such as 'K=K,P+=-P+,P-=-P-'");
  verify->add_flag("--negate-h", negate_h, "the morphism also sends h to -h");

  std::string from, scaling, target, output;
  auto *contract = app.add_subcommand("contract", "contract a presentation along a scaling map");
  contract->add_option("--from", from, "source presentation")->required();
  contract->add_option("--scaling", scaling, "built-in scaling name or scaling file")->required();
  contract->add_option("--target", target, "expected target presentation to compare against");
  contract->add_option("--output", output, "write the contracted presentation to this file");

  std::string nf_pres, nf_expr;
  auto *nf = app.add_subcommand("normal-form", "print the normal form of an expression");
  nf->add_option("presentation", nf_pres)->required();
  nf->add_option("expression", nf_expr)->required();

  std::string pu, pf;
  int pair_degree = 12;
  auto *pair = app.add_subcommand("pair", "evaluate the duality pairing between uh-sl2 and fun-slh2");
  pair->add_option("enveloping", pu, "element of uh-sl2")->required();
  pair->add_option("function", pf, "element of fun-slh2")->required();
  pair->add_option("--degree", pair_degree, "largest word length accepted on either side")->check(CLI::Range(1, 64));

  auto *list = app.add_subcommand("list", "list built-in presentations, scalings and distinguished elements");

  try
  {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  }
  catch (const CLI::CallForHelp &)
  {
    out << app.help();
    return 0;
  }
  catch (const CLI::ParseError &e)
  {
    if (e.get_exit_code() == 0)
    {
      out << app.help();
      return 0;
    }
    err << "usage error: " << e.what() << "\n";
    return 2;
  }
  config.format = format == "tree" ? ReportFormat::tree : ReportFormat::text;

  try
  {
    if (*verify)
    {
      if (!subalgebra.empty() && !morphism.empty())
        throw Error(Errc::usage, "--subalgebra and --morphism are exclusive");
      if (!subalgebra.empty())
        return run_subalgebra(pres, subalgebra, config, out, err);
      if (!morphism.empty())
        return run_morphism(pres, morphism, negate_h, config, out, err);
      if (negate_h)
        throw Error(Errc::usage, "--negate-h needs --morphism");
      const Presentation p = resolve_presentation(pres);
      const auto groups = checks.empty() ? default_checks(p) : split_list(checks);
      if (groups.empty())
        throw Error(Errc::usage, "--checks is empty");
      return emit(run_verify(p, groups, config), config, out, err);
    }
    if (*contract)
      return run_contract(from, scaling, target, output, config, out, err);
    if (*nf)
      return run_normal_form(nf_pres, nf_expr, config, out);
    if (*pair)
      return run_pair(pu, pf, pair_degree, config, out);
    if (*list)
      return run_list(config, out);
  }
  catch (const Error &e)
  {
    err << e.what() << "\n";
    return e.is_resource_limit() ? 3 : 2;
  }
  catch (const std::bad_alloc &)
  {
    err << "out of memory\n";
    return 3;
  }
  return 2;
}

} // namespace hopfkit
