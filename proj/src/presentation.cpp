#include "hopfkit/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <mutex>
#include <set>
#include <sstream>

namespace hopfkit
{

namespace detail
{
extern const char *const kBuiltinLibrary;
}

bool Presentation::is_central(std::string_view g) const
{
  return std::find(central.begin(), central.end(), g) != central.end();
}

namespace
{

bool same_spec(const HopfSpec &a, const HopfSpec &b)
{
  auto same_map = [](const std::map<std::string, Expr> &x, const std::map<std::string, Expr> &y) {
    if (x.size() != y.size())
      return false;
    for (const auto &[k, e] : x)
    {
      auto it = y.find(k);
      if (it == y.end() || !same_expr(e, it->second))
        return false;
    }
    return true;
  };
  return same_map(a.coproduct, b.coproduct) && same_map(a.counit, b.counit) && same_map(a.antipode, b.antipode);
}

} // namespace

bool operator==(const Presentation &a, const Presentation &b)
{
  if (a.name != b.name || a.uses_eps != b.uses_eps || a.generators != b.generators || a.aliases != b.aliases ||
      a.central != b.central || a.notes != b.notes || a.relations.size() != b.relations.size() ||
      a.extras.size() != b.extras.size() || a.hopf.has_value() != b.hopf.has_value())
    return false;
  for (std::size_t i = 0; i < a.relations.size(); ++i)
  {
    const auto &x = a.relations[i];
    const auto &y = b.relations[i];
    if (x.left != y.left || x.right != y.right || !same_expr(x.rhs, y.rhs))
      return false;
  }
  for (std::size_t i = 0; i < a.extras.size(); ++i)
    if (!same_expr(a.extras[i].lhs, b.extras[i].lhs) || !same_expr(a.extras[i].rhs, b.extras[i].rhs))
      return false;
  return !a.hopf || same_spec(*a.hopf, *b.hopf);
}

namespace
{

const std::set<std::string> kReserved = {"h", "e", "eps", "exp", "sinh", "cosh", "sinhc", "inv", "divh"};

std::string trim(std::string_view s)
{
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b])))
    ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1])))
    --e;
  return std::string(s.substr(b, e - b));
}

std::vector<std::string> split_ws(std::string_view s)
{
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  std::string w;
  while (in >> w)
    out.push_back(w);
  return out;
}

class LibraryReader
{
public:
  explicit LibraryReader(std::string_view src) : src_(src) {}

  Library run()
  {
    std::size_t start = 0;
    while (start <= src_.size())
    {
      std::size_t nl = src_.find('\n', start);
      if (nl == std::string_view::npos)
        nl = src_.size();
      ++line_no_;
      line(src_.substr(start, nl - start));
      start = nl + 1;
    }
    close_block();
    return std::move(lib_);
  }

private:
  enum class Block
  {
    none,
    algebra,
    scaling,
  };

  [[noreturn]] void syntax(const std::string &msg, int col = 1) const { throw ParseError(msg, line_no_, col); }

  [[noreturn]] void invalid(const std::string &msg) const
  {
    throw Error(Errc::validation_error, msg + " (line " + std::to_string(line_no_) + ")");
  }

  void line(std::string_view raw)
  {
    std::string text(raw);
    if (auto hash = text.find('#'); hash != std::string::npos)
      text.erase(hash);
    const std::string body = trim(text);
    if (body.empty())
      return;
    const std::size_t lead = text.find_first_not_of(" \t");
    const std::size_t kw_end = body.find_first_of(" \t");
    const std::string kw = body.substr(0, kw_end);
    const std::string rest = kw_end == std::string::npos ? "" : trim(body.substr(kw_end));
    // column where `rest` begins, 0-based
    const int rest_col = static_cast<int>(lead + (kw_end == std::string::npos ? body.size() : body.find(rest, kw_end)));

    if (kw == "algebra")
    {
      close_block();
      auto parts = split_ws(rest);
      if (parts.size() != 1)
        syntax("expected 'algebra <name>'");
      block_ = Block::algebra;
      pres_ = Presentation{};
      pres_.name = parts[0];
      return;
    }
    if (kw == "scaling")
    {
      close_block();
      auto parts = split_ws(rest);
      if (parts.size() != 5 || parts[1] != "from" || parts[3] != "to")
        syntax("expected 'scaling <name> from <source> to <target>'");
      block_ = Block::scaling;
      scaling_ = ScalingMap{};
      scaling_.name = parts[0];
      scaling_.source = parts[2];
      scaling_.target = parts[4];
      scaling_symbols_ = scaling_source_symbols();
      return;
    }
    if (kw == "end")
    {
      if (block_ == Block::none)
        syntax("'end' outside a block");
      close_block();
      return;
    }
    if (block_ == Block::algebra)
      algebra_line(kw, rest, rest_col);
    else if (block_ == Block::scaling)
      scaling_line(kw, rest, rest_col);
    else
      syntax("expected 'algebra' or 'scaling' block, got '" + kw + "'");
  }

  // splits "lhs = rhs" and returns the column offset of rhs
  std::pair<std::string, std::string> equation(const std::string &rest, int rest_col, int &rhs_col) const
  {
    const auto eq = rest.find('=');
    if (eq == std::string::npos)
      syntax("expected '='", rest_col + 1);
    std::string rhs = rest.substr(eq + 1);
    const std::size_t skip = rhs.find_first_not_of(" \t");
    rhs_col = rest_col + static_cast<int>(eq + 1 + (skip == std::string::npos ? 0 : skip));
    return {trim(rest.substr(0, eq)), trim(rhs)};
  }

  Expr expression(const std::string &src, int col, const SymbolTable &symbols, const std::string &what) const
  {
    if (src.empty())
      syntax("missing expression for " + what, col + 1);
    try
    {
      return parse_expr(src, symbols, line_no_, col);
    }
    catch (const ParseError &)
    {
      throw;
    }
    catch (const Error &e)
    {
      if (e.code() == Errc::unknown_symbol)
        invalid(what + " uses an undeclared symbol: " + e.what());
      throw;
    }
  }

  void declare_generators(const std::string &rest)
  {
    std::vector<std::string> gens;
    std::size_t pos = 0;
    while (pos <= rest.size())
    {
      std::size_t lt = rest.find('<', pos);
      if (lt == std::string::npos)
        lt = rest.size();
      const std::string g = trim(std::string_view(rest).substr(pos, lt - pos));
      if (g.empty() || !std::isalpha(static_cast<unsigned char>(g[0])) ||
          g.find_first_of(" \t,[]()*/^@=") != std::string::npos)
        syntax("bad generator name '" + g + "'");
      if (kReserved.contains(g))
        invalid("generator name '" + g + "' is reserved");
      if (std::find(gens.begin(), gens.end(), g) != gens.end())
        invalid("generator '" + g + "' declared twice");
      gens.push_back(g);
      pos = lt + 1;
    }
    if (gens.size() > 250)
      invalid("too many generators");
    pres_.generators = std::move(gens);
  }

  void require_generator(const std::string &g, const std::string &what) const
  {
    if (pres_.index_of(g) < 0)
      invalid(what + " names undeclared generator '" + g + "'");
  }

  void algebra_line(const std::string &kw, const std::string &rest, int rest_col)
  {
    const SymbolTable symbols = pres_.symbols();
    if (kw == "params")
    {
      for (const auto &p : split_ws(rest))
      {
        if (p == "eps")
          pres_.uses_eps = true;
        else if (p != "h")
          syntax("unknown parameter '" + p + "'");
      }
      return;
    }
    if (kw == "gens")
      return declare_generators(rest);
    if (pres_.generators.empty())
      syntax("'" + kw + "' before 'gens'");
    if (kw == "alias")
    {
      auto parts = split_ws(rest);
      if (parts.size() != 2)
        syntax("expected 'alias <name> <generator>'");
      require_generator(parts[1], "alias");
      if (kReserved.contains(parts[0]) || pres_.index_of(parts[0]) >= 0)
        invalid("alias '" + parts[0] + "' clashes with an existing name");
      pres_.aliases[parts[0]] = pres_.generators[pres_.index_of(parts[1])];
      return;
    }
    if (kw == "rel")
    {
      int rhs_col = 0;
      auto [lhs, rhs] = equation(rest, rest_col, rhs_col);
      if (lhs.size() < 5 || lhs.front() != '[' || lhs.back() != ']')
        syntax("expected 'rel [x,y] = expression'", rest_col + 1);
      const std::string inner = lhs.substr(1, lhs.size() - 2);
      const auto comma = inner.find(',');
      if (comma == std::string::npos)
        syntax("expected 'rel [x,y] = expression'", rest_col + 1);
      Relation r;
      r.left = trim(inner.substr(0, comma));
      r.right = trim(inner.substr(comma + 1));
      const std::string what = "relation [" + r.left + "," + r.right + "]";
      require_generator(r.left, what);
      require_generator(r.right, what);
      r.left = pres_.generators[pres_.index_of(r.left)];
      r.right = pres_.generators[pres_.index_of(r.right)];
      if (r.left == r.right)
        invalid(what + " is a self-commutator");
      for (const auto &prev : pres_.relations)
        if ((prev.left == r.left && prev.right == r.right) || (prev.left == r.right && prev.right == r.left))
          invalid(what + " repeats an earlier relation");
      r.rhs = expression(rhs, rhs_col, symbols, what);
      pres_.relations.push_back(std::move(r));
      return;
    }
    if (kw == "extra")
    {
      int rhs_col = 0;
      auto [lhs, rhs] = equation(rest, rest_col, rhs_col);
      ExtraIdentity x;
      x.lhs = expression(lhs, rest_col, symbols, "identity " + lhs);
      x.rhs = expression(rhs, rhs_col, symbols, "identity " + lhs);
      pres_.extras.push_back(std::move(x));
      return;
    }
    if (kw == "central")
    {
      for (const auto &g : split_ws(rest))
      {
        require_generator(g, "central declaration");
        pres_.central.push_back(pres_.generators[pres_.index_of(g)]);
      }
      return;
    }
    if (kw == "note")
    {
      pres_.notes.push_back(rest);
      return;
    }
    if (kw == "coproduct" || kw == "counit" || kw == "antipode")
    {
      if (!pres_.hopf)
        pres_.hopf.emplace();
      hopf_line(*pres_.hopf, kw, rest, rest_col, symbols, pres_.generators);
      return;
    }
    syntax("unknown keyword '" + kw + "'");
  }

  void hopf_line(HopfSpec &spec, const std::string &kw, const std::string &rest, int rest_col,
                 const SymbolTable &symbols, const std::vector<std::string> &allowed)
  {
    int rhs_col = 0;
    auto [g, rhs] = equation(rest, rest_col, rhs_col);
    const int idx = symbols.index_of(g);
    if (idx < 0 || std::find(allowed.begin(), allowed.end(), symbols.generators[idx]) == allowed.end())
      invalid(kw + " for undeclared generator '" + g + "'");
    const std::string canonical = symbols.generators[idx];
    auto &slot = kw == "coproduct" ? spec.coproduct : kw == "counit" ? spec.counit : spec.antipode;
    if (slot.contains(canonical))
      invalid(kw + " of '" + canonical + "' given twice");
    slot[canonical] = expression(rhs, rhs_col, symbols, kw + "(" + canonical + ")");
  }

  SymbolTable scaling_source_symbols() const
  {
    for (const auto &p : lib_.presentations)
      if (p.name == scaling_.source)
        return p.symbols();
    for (const auto &name : builtin_names())
      if (name == scaling_.source)
        return builtin(name).symbols();
    invalid("scaling source '" + scaling_.source + "' is not a known presentation");
  }

  void scaling_line(const std::string &kw, const std::string &rest, int rest_col)
  {
    if (kw == "extend")
    {
      for (const auto &g : split_ws(rest))
      {
        if (scaling_symbols_.index_of(g) >= 0 || kReserved.contains(g))
          invalid("extension generator '" + g + "' clashes with an existing name");
        scaling_.extension.push_back(g);
        scaling_symbols_.generators.push_back(g);
      }
      return;
    }
    if (kw == "coproduct" || kw == "counit" || kw == "antipode")
      return hopf_line(scaling_.extension_hopf, kw, rest, rest_col, scaling_symbols_, scaling_.extension);
    if (kw == "map")
    {
      int rhs_col = 0;
      auto [g, rhs] = equation(rest, rest_col, rhs_col);
      if (g.empty())
        syntax("expected 'map <target generator> = expression'");
      scaling_.assignment.emplace_back(g, expression(rhs, rhs_col, scaling_symbols_, "map " + g));
      return;
    }
    if (kw == "renorm")
    {
      auto parts = split_ws(rest);
      if (parts.size() != 2)
        syntax("expected 'renorm <element> <power>'");
      try
      {
        scaling_.renorm[parts[0]] = std::stoi(parts[1]);
      }
      catch (const std::exception &)
      {
        syntax("renorm power must be an integer");
      }
      return;
    }
    syntax("unknown keyword '" + kw + "' in scaling block");
  }

  void close_block()
  {
    if (block_ == Block::algebra)
    {
      if (pres_.generators.empty())
        invalid("algebra '" + pres_.name + "' declares no generators");
      if (pres_.hopf)
      {
        for (const auto &g : pres_.generators)
          if (!pres_.hopf->coproduct.contains(g) || !pres_.hopf->counit.contains(g) ||
              !pres_.hopf->antipode.contains(g))
            invalid("algebra '" + pres_.name + "' has incomplete Hopf data for '" + g + "'");
      }
      lib_.presentations.push_back(std::move(pres_));
    }
    else if (block_ == Block::scaling)
    {
      for (const auto &g : scaling_.extension)
        if (!scaling_.extension_hopf.coproduct.contains(g) || !scaling_.extension_hopf.counit.contains(g) ||
            !scaling_.extension_hopf.antipode.contains(g))
          invalid("scaling '" + scaling_.name + "' has incomplete Hopf data for extension '" + g + "'");
      if (scaling_.assignment.empty())
        invalid("scaling '" + scaling_.name + "' has no map lines");
      lib_.scalings.push_back(std::move(scaling_));
    }
    block_ = Block::none;
  }

  std::string_view src_;
  int line_no_ = 0;
  Block block_ = Block::none;
  Presentation pres_;
  ScalingMap scaling_;
  SymbolTable scaling_symbols_;
  Library lib_;
};

struct BuiltinStore
{
  Library lib;
  bool loading = true;
};

BuiltinStore &store()
{
  // The reader resolves scaling sources against presentations already
  // read from the same text, so loading the built-ins never recurses.
  static BuiltinStore s = [] {
    BuiltinStore b;
    b.lib = load_library(detail::kBuiltinLibrary);
    b.loading = false;
    return b;
  }();
  return s;
}

void save_hopf(std::ostringstream &out, const HopfSpec &spec, const std::vector<std::string> &order)
{
  for (const char *kw : {"coproduct", "counit", "antipode"})
  {
    const auto &m = std::string(kw) == "coproduct" ? spec.coproduct
                    : std::string(kw) == "counit"  ? spec.counit
                                                   : spec.antipode;
    for (const auto &g : order)
      if (auto it = m.find(g); it != m.end())
        out << kw << ' ' << g << " = " << to_string(it->second) << '\n';
  }
}

} // namespace

Library load_library(std::string_view source)
{
  return LibraryReader(source).run();
}

Presentation load_presentation(std::string_view source)
{
  Library lib = load_library(source);
  if (lib.presentations.size() != 1 || !lib.scalings.empty())
    throw Error(Errc::validation_error, "expected exactly one algebra block, found " +
                                            std::to_string(lib.presentations.size()));
  return std::move(lib.presentations.front());
}

std::string save_presentation(const Presentation &p)
{
  std::ostringstream out;
  out << "algebra " << p.name << '\n';
  out << "params h" << (p.uses_eps ? " eps" : "") << '\n';
  out << "gens ";
  for (std::size_t i = 0; i < p.generators.size(); ++i)
    out << (i ? " < " : "") << p.generators[i];
  out << '\n';
  for (const auto &[alias, g] : p.aliases)
    out << "alias " << alias << ' ' << g << '\n';
  for (const auto &r : p.relations)
    out << "rel [" << r.left << ',' << r.right << "] = " << to_string(r.rhs) << '\n';
  for (const auto &x : p.extras)
    out << "extra " << to_string(x.lhs) << " = " << to_string(x.rhs) << '\n';
  if (!p.central.empty())
  {
    out << "central";
    for (const auto &g : p.central)
      out << ' ' << g;
    out << '\n';
  }
  if (p.hopf)
    save_hopf(out, *p.hopf, p.generators);
  for (const auto &n : p.notes)
    out << "note " << n << '\n';
  out << "end\n";
  return out.str();
}

std::string save_scaling(const ScalingMap &s)
{
  std::ostringstream out;
  out << "scaling " << s.name << " from " << s.source << " to " << s.target << '\n';
  if (!s.extension.empty())
  {
    out << "extend";
    for (const auto &g : s.extension)
      out << ' ' << g;
    out << '\n';
    save_hopf(out, s.extension_hopf, s.extension);
  }
  for (const auto &[g, e] : s.assignment)
    out << "map " << g << " = " << to_string(e) << '\n';
  for (const auto &[name, k] : s.renorm)
    out << "renorm " << name << ' ' << k << '\n';
  out << "end\n";
  return out.str();
}

std::vector<std::string> builtin_names()
{
  static const std::vector<std::string> names = {"fun-slh2", "uh-sl2", "fun-ph11", "uh-p11", "heis3", "osc4"};
  return names;
}

const Presentation &builtin(std::string_view name)
{
  for (const auto &p : store().lib.presentations)
    if (p.name == name)
      return p;
  throw Error(Errc::unknown_name, "no built-in presentation '" + std::string(name) + "'");
}

std::vector<std::string> builtin_scaling_names()
{
  std::vector<std::string> out;
  for (const auto &s : store().lib.scalings)
    out.push_back(s.name);
  return out;
}

const ScalingMap &builtin_scaling(std::string_view name)
{
  for (const auto &s : store().lib.scalings)
    if (s.name == name)
      return s;
  throw Error(Errc::unknown_name, "no built-in scaling '" + std::string(name) + "'");
}

Presentation extended_source(const ScalingMap &s, const Presentation &source)
{
  Presentation p = source;
  if (s.extension.empty())
    return p;
  p.name = source.name + "+" + s.extension.front();
  for (const auto &g : s.extension)
  {
    p.generators.push_back(g);
    p.central.push_back(g);
  }
  if (p.hopf)
  {
    for (const auto &[g, e] : s.extension_hopf.coproduct)
      p.hopf->coproduct[g] = e;
    for (const auto &[g, e] : s.extension_hopf.counit)
      p.hopf->counit[g] = e;
    for (const auto &[g, e] : s.extension_hopf.antipode)
      p.hopf->antipode[g] = e;
  }
  return p;
}

Presentation classical_limit(const Presentation &p)
{
  Presentation out = p;
  out.name = p.name + ".classical";
  const SymbolTable symbols = p.symbols();
  const EvalOptions opts{{1, p.uses_eps ? 2 : 0}, kDefaultDegreeCap};
  const NameTable &names = p.generators;

  auto at_zero = [&](const Expr &e) -> Expr {
    const Value v = evaluate(e, symbols, opts);
    std::string text;
    if (auto s = std::get_if<Scalar>(&v))
      text = to_string(substitute_h(*s, HSubstitution::zero));
    else if (auto x = std::get_if<Element>(&v))
      text = render(substitute_h(*x, HSubstitution::zero), names);
    else
      text = render(substitute_h(std::get<Tensor>(v), HSubstitution::zero), names);
    return parse_expr(text, symbols);
  };

  for (auto &r : out.relations)
    r.rhs = at_zero(r.rhs);
  for (auto &x : out.extras)
    x.rhs = at_zero(x.rhs);
  if (out.hopf)
  {
    for (auto *m : {&out.hopf->coproduct, &out.hopf->counit, &out.hopf->antipode})
      for (auto &[g, e] : *m)
        e = at_zero(e);
  }
  return out;
}

std::vector<std::pair<std::string, Presentation>> sign_mutations(const Presentation &p)
{
  std::vector<std::pair<std::string, Presentation>> out;
  for (std::size_t r = 0; r < p.relations.size(); ++r)
  {
    const auto terms = summands(p.relations[r].rhs);
    for (std::size_t i = 0; i < terms.size(); ++i)
    {
      if (terms[i].second->kind == ExprNode::Kind::number && terms[i].second->number == 0)
        continue;
      auto flipped = terms;
      flipped[i].first = !flipped[i].first;
      Presentation m = p;
      m.relations[r].rhs = rebuild_sum(flipped);
      std::string label = "[" + p.relations[r].left + "," + p.relations[r].right + "] term " +
                          std::to_string(i + 1) + " (" + to_string(terms[i].second) + ")";
      out.emplace_back(std::move(label), std::move(m));
    }
  }
  return out;
}

} // namespace hopfkit
