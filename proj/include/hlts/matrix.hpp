#pragma once

#include <cassert>

#include "hlts/rational.hpp"

namespace hlts {

/// Dense row-major matrix over the rationals.
class QMat {
 public:
  QMat() = default;
  QMat(int rows, int cols) : rows_(rows), cols_(cols), e_(zero_vec(rows * cols)) {}

  static QMat identity(int n);
  static QMat diag(const QVec& d);
  static QMat from_rows(const std::vector<QVec>& rows);
  static QMat block_diag(const QMat& a, const QMat& b);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rat& at(int i, int j) { return e_[static_cast<size_t>(i) * cols_ + j]; }
  const Rat& at(int i, int j) const { return e_[static_cast<size_t>(i) * cols_ + j]; }

  QVec col(int j) const;
  QVec row(int i) const;

  QVec apply(const QVec& v) const;

  /// Matrix times a vector over any commutative ring containing the
  /// rationals (S must support s += s, s *= Rat, copy).
  template <class S>
  std::vector<S> apply_generic(const std::vector<S>& v, const S& zero) const {
    assert(static_cast<int>(v.size()) == cols_);
    std::vector<S> out(static_cast<size_t>(rows_), zero);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) {
        if (at(i, j) == 0) continue;
        S term = v[static_cast<size_t>(j)];
        term *= at(i, j);
        out[static_cast<size_t>(i)] += term;
      }
    return out;
  }

  QMat operator*(const QMat& o) const;
  QMat operator+(const QMat& o) const;
  QMat operator-(const QMat& o) const;
  QMat scaled(const Rat& c) const;
  QMat transpose() const;
  QMat pow(int k) const;

  bool is_zero() const { return hlts::is_zero(e_); }
  bool is_square() const { return rows_ == cols_; }

  bool operator==(const QMat& o) const = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  QVec e_;
};

}  // namespace hlts
