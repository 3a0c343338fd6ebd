#pragma once

#include "hlts/cohomology.hpp"
#include "hlts/truncpoly.hpp"

namespace hlts {

/// A_t = A + t A_1 + ... + t^n A_n, read modulo t^{n+1}.
struct TruncatedDeformation {
  WeightedOOperator op;
  std::vector<QMat> terms;  // A_1..A_n

  int order() const { return static_cast<int>(terms.size()); }
};

TruncatedDeformation make_deformation(WeightedOOperator op, std::vector<QMat> terms);

/// Both defining equations over truncated scalars of the deformation's
/// order, on all basis triples; violations carry the power of t.
ViolationReport check_n_order(const TruncatedDeformation& d);

/// Order-1 check, cross-verified against membership of A_1 in the
/// 1-cocycle space (the two routes must agree).
ViolationReport check_linear_deformation(const WeightedOOperator& op, const QMat& a1);

/// Whether (id + t alpha_g^{-1} L(a,b), id + t alpha_h^{-1} D(a,b)) is a
/// homomorphism from A + t a1 to A + t a1p modulo t^2; when it is,
/// a1 - a1p = Im(a,b) is asserted. Requires regular twists and
/// twist-fixed a, b.
bool check_linear_equivalence(const WeightedOOperator& op, const QMat& a1, const QMat& a1p,
                              const QVec& a, const QVec& b);

/// Obs^n(u1,u2,u3) = sum over i+j+k = n+1 with 0 <= i,j,k <= n of
/// [A_i u1, A_j u2, A_k u3] - A_i(D(A_j u1, A_k u2)u3 - theta(A_j u1, A_k u3)u2
/// + theta(A_j u2, A_k u3)u1). Validates d, asserts the degree-2 constraints
/// and that the coboundary of the result vanishes.
Cochain obstruction(const TruncatedDeformation& d);

/// Obs^n without the validity/cocycle assertions.
Cochain obstruction_raw(const TruncatedDeformation& d, const CochainComplex& cc);

/// A term X with delta X = -Obs^n in the twist-equivariant space, or
/// nullopt when the obstruction class is nonzero.
std::optional<QMat> extend(const TruncatedDeformation& d);

/// A_t applied to a vector over truncated scalars (terms include A_0 = A).
TPVec apply_deformed(const WeightedOOperator& op, const std::vector<QMat>& higher_terms,
                     const TPVec& v);

}  // namespace hlts
