#include "hlts/linalg.hpp"

#include "hlts/error.hpp"

namespace hlts {

int rank(const QMat& m) {
  const int rows = m.rows(), cols = m.cols();
  if (rows == 0 || cols == 0) return 0;

  // Clear denominators row by row; rank is unchanged.
  std::vector<std::vector<mpz_class>> a(static_cast<size_t>(rows),
                                        std::vector<mpz_class>(static_cast<size_t>(cols)));
  for (int i = 0; i < rows; ++i) {
    mpz_class l(1);
    for (int j = 0; j < cols; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.at(i, j).get_den().get_mpz_t());
    for (int j = 0; j < cols; ++j) {
      mpz_class v = m.at(i, j).get_num() * (l / m.at(i, j).get_den());
      a[static_cast<size_t>(i)][static_cast<size_t>(j)] = v;
    }
  }

  // One-step Bareiss: all intermediate divisions are exact.
  mpz_class prev(1);
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pivot = -1;
    for (int i = r; i < rows; ++i)
      if (a[static_cast<size_t>(i)][static_cast<size_t>(c)] != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    std::swap(a[static_cast<size_t>(pivot)], a[static_cast<size_t>(r)]);
    for (int i = r + 1; i < rows; ++i) {
      for (int j = c + 1; j < cols; ++j) {
        mpz_class num = a[static_cast<size_t>(r)][static_cast<size_t>(c)] * a[static_cast<size_t>(i)][static_cast<size_t>(j)] -
                        a[static_cast<size_t>(i)][static_cast<size_t>(c)] * a[static_cast<size_t>(r)][static_cast<size_t>(j)];
        mpz_divexact(a[static_cast<size_t>(i)][static_cast<size_t>(j)].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
      a[static_cast<size_t>(i)][static_cast<size_t>(c)] = 0;
    }
    prev = a[static_cast<size_t>(r)][static_cast<size_t>(c)];
    ++r;
  }
  return r;
}

Rref rref(const QMat& m) {
  Rref out;
  out.r = m;
  QMat& a = out.r;
  const int rows = a.rows(), cols = a.cols();
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pivot = -1;
    for (int i = r; i < rows; ++i)
      if (a.at(i, c) != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != r)
      for (int j = 0; j < cols; ++j) std::swap(a.at(pivot, j), a.at(r, j));
    Rat inv = 1 / a.at(r, c);
    for (int j = c; j < cols; ++j)
      if (a.at(r, j) != 0) a.at(r, j) *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || a.at(i, c) == 0) continue;
      Rat f = a.at(i, c);
      for (int j = c; j < cols; ++j)
        if (a.at(r, j) != 0) a.at(i, j) -= f * a.at(r, j);
    }
    out.pivot_cols.push_back(c);
    ++r;
  }
  return out;
}

std::vector<QVec> kernel_basis(const QMat& m) {
  const int cols = m.cols();
  Rref e = rref(m);
  std::vector<bool> is_pivot(static_cast<size_t>(cols), false);
  for (int c : e.pivot_cols) is_pivot[static_cast<size_t>(c)] = true;
  std::vector<QVec> basis;
  for (int f = 0; f < cols; ++f) {
    if (is_pivot[static_cast<size_t>(f)]) continue;
    QVec v = zero_vec(cols);
    v[static_cast<size_t>(f)] = 1;
    for (size_t r = 0; r < e.pivot_cols.size(); ++r)
      v[static_cast<size_t>(e.pivot_cols[r])] = -e.r.at(static_cast<int>(r), f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<QVec> solve(const QMat& m, const QVec& b) {
  require(static_cast<int>(b.size()) == m.rows(), "solve: right-hand side length mismatch");
  QMat aug(m.rows(), m.cols() + 1);
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols()) = b[static_cast<size_t>(i)];
  }
  Rref e = rref(aug);
  for (int c : e.pivot_cols)
    if (c == m.cols()) return std::nullopt;
  QVec x = zero_vec(m.cols());
  for (size_t r = 0; r < e.pivot_cols.size(); ++r)
    x[static_cast<size_t>(e.pivot_cols[r])] = e.r.at(static_cast<int>(r), m.cols());
  return x;
}

std::optional<QMat> inverse(const QMat& m) {
  if (!m.is_square()) return std::nullopt;
  const int n = m.rows();
  QMat aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = 1;
  }
  Rref e = rref(aug);
  if (static_cast<int>(e.pivot_cols.size()) < n || e.pivot_cols[static_cast<size_t>(n) - 1] != n - 1)
    return std::nullopt;
  QMat inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv.at(i, j) = e.r.at(i, n + j);
  return inv;
}

bool column_space_contains(const QMat& m, const QVec& v) { return solve(m, v).has_value(); }

QMat vstack(const std::vector<QMat>& blocks) {
  int rows = 0, cols = 0;
  for (const QMat& b : blocks) {
    rows += b.rows();
    if (b.cols() > cols) cols = b.cols();
  }
  QMat out(rows, cols);
  int r0 = 0;
  for (const QMat& b : blocks) {
    for (int i = 0; i < b.rows(); ++i)
      for (int j = 0; j < b.cols(); ++j) out.at(r0 + i, j) = b.at(i, j);
    r0 += b.rows();
  }
  return out;
}

}  // namespace hlts
