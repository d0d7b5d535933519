#include "hopfkit/hopf.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace hopfkit
{

namespace
{

Check zero_check(std::string id, const Element &residue, const Algebra &a)
{
  Check c{std::move(id), residue.is_zero(), "", residue.effective_order(), ""};
  if (!c.pass)
  {
    c.witness = a.render(residue);
    c.order = residue.h_valuation();
  }
  return c;
}

Check zero_check(std::string id, const Tensor &residue, const Algebra &a)
{
  Check c{std::move(id), residue.is_zero(), "", residue.effective_order(), ""};
  if (!c.pass)
  {
    c.witness = a.render(residue);
    c.order = residue.h_valuation();
  }
  return c;
}

Check zero_check(std::string id, const Scalar &residue)
{
  Check c{std::move(id), residue.is_zero(), "", residue.effective_order(), ""};
  if (!c.pass)
  {
    c.witness = to_string(residue);
    c.order = residue.h_valuation();
  }
  return c;
}

bool uses_only(const Element &x, const std::set<Letter> &allowed)
{
  for (const auto &[w, c] : x.terms())
    for (Letter l : w)
      if (!allowed.contains(l))
        return false;
  return true;
}

bool uses_only(const Tensor &x, const std::set<Letter> &allowed)
{
  for (const auto &[words, c] : x.terms())
    for (const auto &w : words)
      for (Letter l : w)
        if (!allowed.contains(l))
          return false;
  return true;
}

Element escaping(const Element &x, const std::set<Letter> &allowed)
{
  Element out(x.truncation());
  for (const auto &[w, c] : x.terms())
    if (!std::all_of(w.begin(), w.end(), [&](Letter l) { return allowed.contains(l); }))
      out.add_term(w, c);
  return out;
}

Tensor escaping(const Tensor &x, const std::set<Letter> &allowed)
{
  Tensor out(x.slots(), x.truncation());
  for (const auto &[words, c] : x.terms())
    for (const auto &w : words)
      if (!std::all_of(w.begin(), w.end(), [&](Letter l) { return allowed.contains(l); }))
      {
        out.add_term(words, c);
        break;
      }
  return out;
}

bool expr_uses_only(const Expr &e, const std::set<std::string> &names)
{
  if (e->kind == ExprNode::Kind::generator)
    return names.contains(e->name);
  return std::all_of(e->args.begin(), e->args.end(), [&](const Expr &x) { return expr_uses_only(x, names); });
}

std::set<Letter> letters_of(const Algebra &a, const std::vector<std::string> &gens)
{
  std::set<Letter> out;
  for (const auto &g : gens)
    out.insert(a.letter(g));
  return out;
}

Report closure_checks(const Algebra &a, const std::set<Letter> &sub)
{
  Report r;
  const Presentation &p = a.presentation();
  for (const auto &rel : p.relations)
  {
    if (!sub.contains(a.letter(rel.left)) || !sub.contains(a.letter(rel.right)))
      continue;
    const Element rhs = a.nf(as_element(a.evaluate(rel.rhs), a.truncation()));
    Check c{"closure.relation[" + rel.left + "," + rel.right + "]", uses_only(rhs, sub), "", rhs.effective_order(), ""};
    if (!c.pass)
    {
      c.witness = a.render(escaping(rhs, sub));
      c.detail = "leaves the span of the chosen generators";
    }
    r.add(std::move(c));
  }
  if (a.has_hopf())
  {
    for (Letter g : sub)
    {
      const std::string name = a.names()[g];
      const Tensor &d = a.coproduct_of(g);
      Check cd{"closure.coproduct[" + name + "]", uses_only(d, sub), "", d.effective_order(), ""};
      if (!cd.pass)
        cd.witness = a.render(escaping(d, sub));
      r.add(std::move(cd));
      const Element &s = a.antipode_of(g);
      Check cs{"closure.antipode[" + name + "]", uses_only(s, sub), "", s.effective_order(), ""};
      if (!cs.pass)
        cs.witness = a.render(escaping(s, sub));
      r.add(std::move(cs));
    }
  }
  return r;
}

Presentation restricted(const Algebra &a, const std::set<Letter> &sub)
{
  const Presentation &p = a.presentation();
  std::set<std::string> names;
  for (Letter l : sub)
    names.insert(a.names()[l]);

  auto keep = [&](const Expr &e, auto render_value) -> Expr {
    if (expr_uses_only(e, names))
      return e;
    return render_value();
  };

  Presentation out;
  out.name = p.name + "{";
  bool first = true;
  for (const auto &g : p.generators)
    if (names.contains(g))
    {
      out.generators.push_back(g);
      out.name += (first ? "" : ",") + g;
      first = false;
    }
  out.name += "}";
  out.uses_eps = p.uses_eps;
  for (const auto &[alias, g] : p.aliases)
    if (names.contains(g))
      out.aliases[alias] = g;
  const SymbolTable symbols = out.symbols();
  for (const auto &rel : p.relations)
  {
    if (!names.contains(rel.left) || !names.contains(rel.right))
      continue;
    Relation copy = rel;
    copy.rhs = keep(rel.rhs, [&] {
      return parse_expr(a.render(a.nf(as_element(a.evaluate(rel.rhs), a.truncation()))), symbols);
    });
    out.relations.push_back(std::move(copy));
  }
  for (const auto &x : p.extras)
    if (expr_uses_only(x.lhs, names) && expr_uses_only(x.rhs, names))
      out.extras.push_back(x);
  for (const auto &g : p.central)
    if (names.contains(g))
      out.central.push_back(g);
  if (p.hopf)
  {
    HopfSpec spec;
    for (const auto &g : out.generators)
    {
      const Letter l = a.letter(g);
      spec.coproduct[g] = keep(p.hopf->coproduct.at(g), [&] { return parse_expr(a.render(a.coproduct_of(l)), symbols); });
      spec.counit[g] = keep(p.hopf->counit.at(g), [&] { return parse_expr(to_string(a.counit_of(l)), symbols); });
      spec.antipode[g] = keep(p.hopf->antipode.at(g), [&] { return parse_expr(a.render(a.antipode_of(l)), symbols); });
    }
    out.hopf = std::move(spec);
  }
  out.notes = p.notes;
  return out;
}

} // namespace

std::vector<Residue> relation_residues(const Algebra &a)
{
  const Presentation &p = a.presentation();
  const Truncation t = a.truncation();
  std::vector<Residue> out;
  std::set<std::pair<Letter, Letter>> covered;
  for (const auto &rel : p.relations)
  {
    const Letter x = a.letter(rel.left);
    const Letter y = a.letter(rel.right);
    covered.insert({std::min(x, y), std::max(x, y)});
    Element r = Element::monomial({x, y}, Scalar(1, t)) - Element::monomial({y, x}, Scalar(1, t)) -
                as_element(a.evaluate(rel.rhs), t);
    out.push_back({rel.left + "," + rel.right, std::move(r), false});
  }
  for (const auto &g : p.central)
  {
    const Letter c = a.letter(g);
    for (int i = 0; i < a.size(); ++i)
    {
      const auto x = static_cast<Letter>(i);
      if (x == c || covered.contains({std::min(c, x), std::max(c, x)}))
        continue;
      covered.insert({std::min(c, x), std::max(c, x)});
      Element r = Element::monomial({c, x}, Scalar(1, t)) - Element::monomial({x, c}, Scalar(1, t));
      out.push_back({g + "," + a.names()[x], std::move(r), false});
    }
  }
  for (const auto &x : p.extras)
    out.push_back({to_string(x.lhs), as_element(a.evaluate(x.lhs), t) - as_element(a.evaluate(x.rhs), t), true});
  return out;
}

Report verify_hopf(const Algebra &a)
{
  if (!a.has_hopf())
    throw Error(Errc::no_hopf_data, a.name() + " has no coproduct, counit or antipode");
  Report r;
  r.subject = a.name();
  r.annotations = a.presentation().notes;
  const Truncation t = a.truncation();

  for (const auto &res : relation_residues(a))
  {
    const std::string axiom = res.extra ? "H5" : "H1";
    r.add(zero_check(axiom + ".coproduct[" + res.label + "]", a.coproduct(res.value), a));
    r.add(zero_check(axiom + ".counit[" + res.label + "]", a.counit(res.value)));
    r.add(zero_check(axiom + ".antipode[" + res.label + "]", a.antipode(res.value), a));
    if (!res.extra)
      continue;
    // The identity says D = 1 for D = 1 - residue/c; D must be grouplike.
    const Rational c = res.value.coefficient(Word{}).constant_term();
    if (c == 0)
      continue;
    Element d = Element::unit(t) - res.value * (Rational(1) / c);
    const Tensor lhs = a.coproduct(d);
    const Tensor rhs = a.nf(tensor(d, d));
    r.add(zero_check("H5.grouplike[" + res.label + "]", lhs - rhs, a));
  }

  std::vector<Word> words;
  for (int i = 0; i < a.size(); ++i)
    words.push_back({static_cast<Letter>(i)});
  for (int i = 0; i < a.size(); ++i)
    for (int j = 0; j < a.size(); ++j)
      words.push_back({static_cast<Letter>(i), static_cast<Letter>(j)});
  for (const auto &w : words)
  {
    const Tensor d = a.coproduct(w);
    r.add(zero_check("H2.coassoc[" + render_word(w, a.names()) + "]",
                     a.coproduct_in_slot(d, 0) - a.coproduct_in_slot(d, 1), a));
  }

  for (int i = 0; i < a.size(); ++i)
  {
    const auto g = static_cast<Letter>(i);
    const std::string name = a.names()[g];
    const Tensor &d = a.coproduct_of(g);
    const Element x = a.generator(g);
    r.add(zero_check("H3.left[" + name + "]", a.counit_in_slot(d, 0) - x, a));
    r.add(zero_check("H3.right[" + name + "]", a.counit_in_slot(d, 1) - x, a));
    const Element unit = Element::scalar(a.counit_of(g));
    r.add(zero_check("H4.left[" + name + "]", a.multiply_slots(a.antipode_in_slot(d, 0)) - unit, a));
    r.add(zero_check("H4.right[" + name + "]", a.multiply_slots(a.antipode_in_slot(d, 1)) - unit, a));
  }
  return r;
}

Presentation restrict_presentation(const Presentation &p, const std::vector<std::string> &gens,
                                   const EngineConfig &config)
{
  Algebra a(p, config);
  const auto sub = letters_of(a, gens);
  const Report closure = closure_checks(a, sub);
  for (const auto &c : closure.checks)
    if (!c.pass)
      throw Error(Errc::not_closed, c.id + ": " + c.witness);
  return restricted(a, sub);
}

Report verify_subalgebra(const Presentation &p, const std::vector<std::string> &gens, const EngineConfig &config)
{
  Algebra a(p, config);
  const auto sub = letters_of(a, gens);
  Report r = closure_checks(a, sub);
  r.subject = p.name + "{";
  for (Letter l : sub)
    r.subject += (l == *sub.begin() ? "" : ",") + a.names()[l];
  r.subject += "}";
  if (!r.pass())
  {
    r.annotations.push_back("not closed; Hopf axioms not checked on the restriction");
    return r;
  }
  Presentation q = restricted(a, sub);
  if (!q.hopf)
    return r;
  Algebra sa(std::move(q), config);
  r.merge(verify_hopf(sa));
  return r;
}

std::vector<SignedGenerator> parse_generator_map(const Algebra &a, std::string_view text)
{
  auto trim = [](std::string x) {
    x.erase(0, x.find_first_not_of(" \t"));
    x.erase(x.find_last_not_of(" \t") + 1);
    return x;
  };
  auto resolve = [&](const std::string &name) {
    const int idx = a.presentation().index_of(name);
    if (idx < 0)
      throw Error(Errc::usage, "generator map names unknown generator '" + name + "'");
    return static_cast<std::size_t>(idx);
  };

  std::vector<SignedGenerator> out(static_cast<std::size_t>(a.size()));
  std::vector<bool> seen(out.size(), false);
  std::stringstream in{std::string(text)};
  std::string item;
  std::size_t position = 0;
  bool keyed = false;
  bool positional = false;
  while (std::getline(in, item, ','))
  {
    std::size_t slot = position++;
    if (const auto eq = item.find('='); eq != std::string::npos)
    {
      keyed = true;
      slot = resolve(trim(item.substr(0, eq)));
      item = item.substr(eq + 1);
    }
    else
      positional = true;
    item = trim(item);
    SignedGenerator s;
    if (!item.empty() && (item[0] == '-' || item[0] == '+'))
    {
      s.sign = item[0] == '-' ? -1 : 1;
      item = trim(item.substr(1));
    }
    s.name = a.names()[resolve(item)];
    if (keyed && positional)
      throw Error(Errc::usage, "generator map mixes 'g=image' entries with bare images");
    if (slot >= out.size() || seen[slot])
      throw Error(Errc::usage, "generator map assigns a generator twice or has too many entries");
    seen[slot] = true;
    out[slot] = std::move(s);
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end())
    throw Error(Errc::usage, "generator map needs an image for each of the " + std::to_string(a.size()) +
                                 " generators");
  return out;
}

Report verify_morphism(const Algebra &a, const std::vector<SignedGenerator> &image, HMode h_mode)
{
  if (static_cast<int>(image.size()) != a.size())
    throw Error(Errc::usage, "generator map must cover every generator");
  std::vector<std::pair<int, Letter>> map;
  for (const auto &s : image)
    map.emplace_back(s.sign, a.letter(s.name));

  auto coeff = [&](const Scalar &c) { return h_mode == HMode::negate ? substitute_h(c, HSubstitution::negate) : c; };
  auto map_word = [&](const Word &w, int &sign) {
    Word out;
    for (Letter l : w)
    {
      sign *= map[l].first;
      out.push_back(map[l].second);
    }
    return out;
  };
  auto phi = [&](const Element &x) {
    Element out(x.truncation());
    for (const auto &[w, c] : x.terms())
    {
      int sign = 1;
      Word u = map_word(w, sign);
      out.add_term(std::move(u), coeff(c) * Rational(sign));
    }
    return a.nf(out);
  };
  auto phi2 = [&](const Tensor &x) {
    Tensor out(x.slots(), x.truncation());
    for (const auto &[words, c] : x.terms())
    {
      int sign = 1;
      std::vector<Word> key;
      for (const auto &w : words)
        key.push_back(map_word(w, sign));
      out.add_term(std::move(key), coeff(c) * Rational(sign));
    }
    return a.nf(out);
  };

  Report r;
  r.subject = a.name() + " morphism";
  std::string desc;
  for (std::size_t i = 0; i < image.size(); ++i)
    desc += (i ? ", " : "") + a.names()[i] + " -> " + (image[i].sign < 0 ? "-" : "") + image[i].name;
  desc += h_mode == HMode::negate ? ", h -> -h" : ", h -> h";
  r.annotations.push_back(desc);

  for (const auto &res : relation_residues(a))
    r.add(zero_check("morphism.relation[" + res.label + "]", phi(res.value), a));
  if (!a.has_hopf())
    return r;
  for (int i = 0; i < a.size(); ++i)
  {
    const auto g = static_cast<Letter>(i);
    const std::string name = a.names()[g];
    const auto [sign, target] = map[g];
    const Rational s(sign);
    r.add(zero_check("morphism.coproduct[" + name + "]", phi2(a.coproduct_of(g)) - a.coproduct_of(target) * s, a));
    r.add(zero_check("morphism.counit[" + name + "]", coeff(a.counit_of(g)) - a.counit_of(target) * s));
    r.add(zero_check("morphism.antipode[" + name + "]", phi(a.antipode_of(g)) - a.antipode_of(target) * s, a));
  }
  return r;
}

} // namespace hopfkit
