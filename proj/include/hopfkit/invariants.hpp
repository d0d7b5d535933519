#pragma once

#include <string>
#include <vector>

#include "hopfkit/algebra.hpp"

namespace hopfkit
{

/// casimir-sl2, casimir-p11, rmatrix-sl2, rmatrix-p11.
std::vector<std::string> distinguished_names();
/// Built-in presentation the element lives in.
std::string distinguished_algebra(const std::string &name);
/// Defining expression in the expression language.
std::string distinguished_expression(const std::string &name);

Element casimir(const Algebra &a, const std::string &name);

enum class Placement
{
  left,  ///< prefactor series to the left of the bracket, as written
  right, ///< prefactor to the right
};

Tensor r_matrix(const Algebra &a, const std::string &name, Placement placement = Placement::left);

/// [x, w] = 0 for every word w up to `degree` (generators when 1).
Report verify_central(const Algebra &a, const Element &x, const std::string &label, int degree = 1);

/// Centrality, counit and antipode measurements, and agreement of the
/// h -> 0 limit with the Casimir of the classical limit algebra.
Report verify_casimir(const Algebra &a, const std::string &name);

/// R1 triangularity R21 R = 1 (x) 1, R2 QYBE R12 R13 R23 = R23 R13 R12,
/// R3 R Delta(g) = Delta^op(g) R for every generator.
Report verify_rmatrix(const Algebra &a, const Tensor &r, const std::string &label);

/// verify_rmatrix on the as-written reading, plus a note on whether the
/// two prefactor placements give the same element; when they differ and
/// the as-written reading fails, the other reading is checked as well.
Report verify_rmatrix(const Algebra &a, const std::string &name);

/// x in slots (i, j) of a 3-fold tensor, unit in the remaining slot.
Tensor embed_pair(const Tensor &x, int i, int j);

} // namespace hopfkit
