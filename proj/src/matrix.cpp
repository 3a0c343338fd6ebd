#include "hlts/matrix.hpp"

namespace hlts {

QMat QMat::identity(int n) {
  QMat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

QMat QMat::diag(const QVec& d) {
  QMat m(static_cast<int>(d.size()), static_cast<int>(d.size()));
  for (size_t i = 0; i < d.size(); ++i) m.at(static_cast<int>(i), static_cast<int>(i)) = d[i];
  return m;
}

QMat QMat::from_rows(const std::vector<QVec>& rows) {
  if (rows.empty()) return QMat();
  QMat m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (int i = 0; i < m.rows(); ++i) {
    assert(rows[static_cast<size_t>(i)].size() == rows[0].size());
    for (int j = 0; j < m.cols(); ++j) m.at(i, j) = rows[static_cast<size_t>(i)][static_cast<size_t>(j)];
  }
  return m;
}

QMat QMat::block_diag(const QMat& a, const QMat& b) {
  QMat m(a.rows() + b.rows(), a.cols() + b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) m.at(i, j) = a.at(i, j);
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) m.at(a.rows() + i, a.cols() + j) = b.at(i, j);
  return m;
}

QVec QMat::col(int j) const {
  QVec v = zero_vec(rows_);
  for (int i = 0; i < rows_; ++i) v[static_cast<size_t>(i)] = at(i, j);
  return v;
}

QVec QMat::row(int i) const {
  QVec v = zero_vec(cols_);
  for (int j = 0; j < cols_; ++j) v[static_cast<size_t>(j)] = at(i, j);
  return v;
}

QVec QMat::apply(const QVec& v) const {
  assert(static_cast<int>(v.size()) == cols_);
  QVec out = zero_vec(rows_);
  for (int i = 0; i < rows_; ++i) {
    Rat acc(0);
    for (int j = 0; j < cols_; ++j) acc += at(i, j) * v[static_cast<size_t>(j)];
    out[static_cast<size_t>(i)] = acc;
  }
  return out;
}

QMat QMat::operator*(const QMat& o) const {
  assert(cols_ == o.rows_);
  QMat m(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      if (at(i, k) == 0) continue;
      for (int j = 0; j < o.cols_; ++j) m.at(i, j) += at(i, k) * o.at(k, j);
    }
  return m;
}

QMat QMat::operator+(const QMat& o) const {
  assert(rows_ == o.rows_ && cols_ == o.cols_);
  QMat m = *this;
  for (size_t i = 0; i < m.e_.size(); ++i) m.e_[i] += o.e_[i];
  return m;
}

QMat QMat::operator-(const QMat& o) const {
  assert(rows_ == o.rows_ && cols_ == o.cols_);
  QMat m = *this;
  for (size_t i = 0; i < m.e_.size(); ++i) m.e_[i] -= o.e_[i];
  return m;
}

QMat QMat::scaled(const Rat& c) const {
  QMat m = *this;
  for (Rat& x : m.e_) x *= c;
  return m;
}

QMat QMat::transpose() const {
  QMat m(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
  return m;
}

QMat QMat::pow(int k) const {
  assert(is_square() && k >= 0);
  QMat acc = identity(rows_);
  for (int i = 0; i < k; ++i) acc = acc * (*this);
  return acc;
}

}  // namespace hlts
