#pragma once

#include <map>

#include "hlts/error.hpp"
#include "hlts/matrix.hpp"

namespace hlts {

/// Sparse multilinear map K^{d_1} x ... x K^{d_k} -> K^{d_out}, stored as
/// structure constants: key (i_1..i_k, l) -> coefficient. Zero entries are
/// never stored, so operator== is structural equality of maps.
class TensorK {
 public:
  TensorK() = default;
  TensorK(std::vector<int> arg_dims, int out_dim)
      : arg_dims_(std::move(arg_dims)), out_dim_(out_dim) {}

  int arity() const { return static_cast<int>(arg_dims_.size()); }
  const std::vector<int>& arg_dims() const { return arg_dims_; }
  int out_dim() const { return out_dim_; }

  void set(std::vector<int> args, int out, Rat value);
  void add(std::vector<int> args, int out, const Rat& value);
  Rat coeff(const std::vector<int>& args, int out) const;

  /// Output vector on a basis tuple.
  QVec slice(const std::vector<int>& args) const;

  /// Full contraction against vector arguments over a scalar ring S
  /// (S supports +=, *= S, *= Rat).
  template <class S>
  std::vector<S> eval(const std::vector<std::vector<S>>& args, const S& zero) const {
    std::vector<S> out(static_cast<size_t>(out_dim_), zero);
    for (const auto& [key, c] : entries_) {
      S term = args[0][static_cast<size_t>(key[0])];
      for (int j = 1; j < arity(); ++j) term *= args[static_cast<size_t>(j)][static_cast<size_t>(key[static_cast<size_t>(j)])];
      term *= c;
      out[static_cast<size_t>(key.back())] += term;
    }
    return out;
  }

  QVec eval(const std::vector<QVec>& args) const { return eval<Rat>(args, Rat(0)); }

  TensorK operator+(const TensorK& o) const;
  TensorK operator-(const TensorK& o) const;
  TensorK scaled(const Rat& c) const;

  bool is_zero() const { return entries_.empty(); }
  const std::map<std::vector<int>, Rat>& entries() const { return entries_; }

  bool operator==(const TensorK& o) const = default;

  /// All index tuples over arg_dims, in row-major order.
  static std::vector<std::vector<int>> tuples(const std::vector<int>& dims);

 private:
  void check_key(const std::vector<int>& args, int out) const;

  std::vector<int> arg_dims_;
  int out_dim_ = 0;
  std::map<std::vector<int>, Rat> entries_;
};

/// Row-major coordinates of a tensor: index = (tuple row-major) * out_dim + l.
QVec tensor_to_vec(const TensorK& t);
TensorK vec_to_tensor(const QVec& v, std::vector<int> arg_dims, int out_dim);

}  // namespace hlts
