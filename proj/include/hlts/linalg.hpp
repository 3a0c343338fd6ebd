#pragma once

#include <optional>

#include "hlts/matrix.hpp"

namespace hlts {

/// Row rank over the rationals, via fraction-free (Bareiss) elimination on
/// a denominator-cleared integer copy.
int rank(const QMat& m);

struct Rref {
  QMat r;
  std::vector<int> pivot_cols;
};

/// Reduced row echelon form with exact rational pivoting.
Rref rref(const QMat& m);

/// Vectors spanning ker(m); size = cols - rank. Each v satisfies m v = 0.
std::vector<QVec> kernel_basis(const QMat& m);

/// Some x with m x = b, or nullopt when b is outside the column space.
std::optional<QVec> solve(const QMat& m, const QVec& b);

std::optional<QMat> inverse(const QMat& m);

bool column_space_contains(const QMat& m, const QVec& v);

/// Stack matrices vertically (same column count).
QMat vstack(const std::vector<QMat>& blocks);

}  // namespace hlts
