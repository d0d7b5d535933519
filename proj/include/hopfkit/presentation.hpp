#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hopfkit/expression.hpp"

namespace hopfkit
{

/// [left, right] = rhs.  Either orientation is accepted; rule compilation
/// orients it by generator order.
struct Relation
{
  std::string left;
  std::string right;
  Expr rhs;
};

/// lhs = rhs where lhs is a single word (e.g. the determinant b*c = ...).
struct ExtraIdentity
{
  Expr lhs;
  Expr rhs;
};

/// Per-generator structure maps, keyed by generator name.
struct HopfSpec
{
  std::map<std::string, Expr> coproduct;
  std::map<std::string, Expr> counit;
  std::map<std::string, Expr> antipode;
};

/// A finitely presented algebra, kept symbolic so it can be instantiated
/// at any truncation order.
struct Presentation
{
  std::string name;
  bool uses_eps = false;
  std::vector<std::string> generators; // normal-ordering precedence
  std::map<std::string, std::string> aliases;
  std::vector<Relation> relations;
  std::vector<ExtraIdentity> extras;
  std::optional<HopfSpec> hopf;
  std::vector<std::string> central;
  std::vector<std::string> notes; // annotated deviations, surfaced in reports

  SymbolTable symbols() const { return {generators, aliases}; }
  int index_of(std::string_view g) const { return symbols().index_of(g); }
  bool is_central(std::string_view g) const;

  friend bool operator==(const Presentation &a, const Presentation &b);
};

/// Rescaling of target generators in terms of (possibly centrally
/// extended) source generators with Laurent-in-eps coefficients.
struct ScalingMap
{
  std::string name;
  std::string source;
  std::string target;
  std::vector<std::string> extension; // adjoined central generators
  HopfSpec extension_hopf;
  std::vector<std::pair<std::string, Expr>> assignment; // target generator -> source expression
  std::map<std::string, int> renorm;                    // element name -> power of eps
};

struct Library
{
  std::vector<Presentation> presentations;
  std::vector<ScalingMap> scalings;
};

/// Reads any number of "algebra" and "scaling" blocks.
Library load_library(std::string_view source);

/// Exactly one algebra block.
Presentation load_presentation(std::string_view source);
std::string save_presentation(const Presentation &p);
std::string save_scaling(const ScalingMap &s);

std::vector<std::string> builtin_names();
const Presentation &builtin(std::string_view name);
std::vector<std::string> builtin_scaling_names();
const ScalingMap &builtin_scaling(std::string_view name);

/// The source presentation of s with its extension generators adjoined as
/// central generators.
Presentation extended_source(const ScalingMap &s, const Presentation &source);

/// h -> 0 in every relation, identity and structure map.
Presentation classical_limit(const Presentation &p);

/// Copies of p with the sign of exactly one top-level summand of one
/// relation flipped, labelled by what was flipped.
std::vector<std::pair<std::string, Presentation>> sign_mutations(const Presentation &p);

} // namespace hopfkit
