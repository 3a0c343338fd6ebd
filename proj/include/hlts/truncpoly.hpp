#pragma once

#include <cassert>

#include "hlts/rational.hpp"

namespace hlts {

/// Polynomial in t truncated at a fixed order m: coefficients of t^0..t^m,
/// products drop every power above m.
class TruncPoly {
 public:
  explicit TruncPoly(int order) : c_(zero_vec(order + 1)) {}
  TruncPoly(int order, const Rat& constant) : TruncPoly(order) { c_[0] = constant; }

  static TruncPoly t_power(int order, int k) {
    TruncPoly p(order);
    if (k <= order) p.c_[static_cast<size_t>(k)] = 1;
    return p;
  }

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const Rat& coeff(int k) const { return c_[static_cast<size_t>(k)]; }
  Rat& coeff(int k) { return c_[static_cast<size_t>(k)]; }

  TruncPoly& operator+=(const TruncPoly& o) {
    assert(order() == o.order());
    add_into(c_, o.c_);
    return *this;
  }
  TruncPoly& operator-=(const TruncPoly& o) {
    assert(order() == o.order());
    sub_into(c_, o.c_);
    return *this;
  }
  TruncPoly& operator*=(const Rat& s) {
    for (Rat& x : c_) x *= s;
    return *this;
  }
  TruncPoly& operator*=(const TruncPoly& o) {
    assert(order() == o.order());
    QVec out = zero_vec(order() + 1);
    for (int i = 0; i <= order(); ++i) {
      if (c_[static_cast<size_t>(i)] == 0) continue;
      for (int j = 0; i + j <= order(); ++j)
        out[static_cast<size_t>(i + j)] += c_[static_cast<size_t>(i)] * o.c_[static_cast<size_t>(j)];
    }
    c_ = std::move(out);
    return *this;
  }

  friend TruncPoly operator+(TruncPoly a, const TruncPoly& b) { return a += b; }
  friend TruncPoly operator-(TruncPoly a, const TruncPoly& b) { return a -= b; }
  friend TruncPoly operator*(TruncPoly a, const TruncPoly& b) { return a *= b; }
  friend TruncPoly operator*(TruncPoly a, const Rat& s) { return a *= s; }

  bool is_zero() const { return hlts::is_zero(c_); }
  bool operator==(const TruncPoly& o) const = default;

 private:
  QVec c_;
};

using TPVec = std::vector<TruncPoly>;

inline TPVec tp_vec(int n, int order) { return TPVec(static_cast<size_t>(n), TruncPoly(order)); }

/// Lift a rational vector to constant truncated polynomials.
inline TPVec tp_constant(const QVec& v, int order) {
  TPVec out;
  out.reserve(v.size());
  for (const Rat& x : v) out.emplace_back(order, x);
  return out;
}

inline QVec tp_coeff(const TPVec& v, int k) {
  QVec out = zero_vec(static_cast<int>(v.size()));
  for (size_t i = 0; i < v.size(); ++i) out[i] = v[i].coeff(k);
  return out;
}

}  // namespace hlts
