#pragma once

#include <string>
#include <vector>

#include "hopfkit/algebra.hpp"

namespace hopfkit
{

/// H1 relation compatibility, H2 coassociativity, H3 counit, H4 antipode,
/// H5 compatibility of extra identities (grouplike determinant).
Report verify_hopf(const Algebra &a);

/// A residue lhs - rhs of the defining ideal, in the free algebra.
struct Residue
{
  std::string label; // "J3,J+" or "b*c"
  Element value;
  bool extra = false;
};

/// Relations, commutations implied by central declarations, and extra
/// identities, each as an unreduced residue.
std::vector<Residue> relation_residues(const Algebra &a);

/// Closure of relations and structure maps within the span of `gens`, then
/// verify_hopf on the restricted presentation.
Report verify_subalgebra(const Presentation &p, const std::vector<std::string> &gens, const EngineConfig &config = {});

/// The presentation with only `gens`; throws not_closed with a witness
/// when a relation or structure map leaves their span.
Presentation restrict_presentation(const Presentation &p, const std::vector<std::string> &gens,
                                   const EngineConfig &config = {});

struct SignedGenerator
{
  int sign = 1;
  std::string name;
};

enum class HMode
{
  keep,
  negate,
};

/// generator i -> image[i] (a signed generator), h -> +-h.  Checks that
/// the map preserves the relations and commutes with coproduct, counit
/// and antipode.
Report verify_morphism(const Algebra &a, const std::vector<SignedGenerator> &image, HMode h_mode);

/// Parses "K=K,P+=-P+,P-=-P-", or bare images in generator order ("-P+,K,-P-").
std::vector<SignedGenerator> parse_generator_map(const Algebra &a, std::string_view text);

} // namespace hopfkit
