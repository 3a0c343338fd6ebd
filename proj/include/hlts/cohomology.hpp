#pragma once

#include <optional>

#include "hlts/o_operator.hpp"

namespace hlts {

/// Degree-n cochain (n >= 1): a (2n-1)-linear map from the operator's
/// source into its target, subject to twist equivariance and, from arity 3
/// on, skew symmetry in the two slots before the last and a vanishing
/// cyclic sum over the last three slots.
struct Cochain {
  int degree = 1;
  TensorK tensor;  // arity 2*degree-1, inputs dim(h), output dim(g)

  bool operator==(const Cochain&) const = default;
};

/// Degree-0 cochain: an ordered pair of twist-fixed elements of the target.
struct ZeroCochain {
  QVec a, b;
};

struct CohomologyDims {
  int degree = 0;
  int dim_z = 0;
  std::optional<int> dim_b;  // absent when the degree-0 differential needs a missing inverse
  std::optional<int> dim_h;
  bool regular_source = false;
  bool regular_target = false;
};

/// theta_A(u,v)x = [x, Au, Av] + A(theta(x, Av)u - D(x, Au)v), a
/// representation of the descent system on (g, alpha_g).
Representation theta_a_representation(const WeightedOOperator& op);

/// Caches the descent system, theta_A/D_A and twist powers for the cochain
/// complex of one operator. All member functions are const and pure.
class CochainComplex {
 public:
  explicit CochainComplex(WeightedOOperator op, int degree_cap = 2);

  const WeightedOOperator& op() const { return op_; }
  const HomLts& descent() const { return descent_; }
  const TensorK& theta_a() const { return theta_a_; }
  int degree_cap() const { return degree_cap_; }
  void set_degree_cap(int cap) { degree_cap_ = cap; }

  Cochain zero(int degree) const;
  Cochain from_matrix(const QMat& m) const;  // degree 1

  Cochain coboundary(const Cochain& f) const;

  /// Violations of the three constraint families for f's degree.
  ViolationReport check_constraints(const Cochain& f) const;

  /// Basis of the constrained cochain space, as the kernel of the stacked
  /// constraint matrix in row-major tensor coordinates.
  std::vector<Cochain> space_basis(int degree) const;

  /// Columns are the coboundaries of space_basis(degree), in row-major
  /// coordinates of degree+1 tensors.
  QMat delta_matrix(int degree, std::vector<Cochain>* basis_out = nullptr) const;

  /// The degree-0 differential; requires an invertible source twist and
  /// twist-fixed a, b.
  Cochain im(const ZeroCochain& z) const;

  CohomologyDims dims(int degree) const;

 private:
  std::vector<int> arg_dims(int degree) const;
  QMat constraint_matrix(int degree) const;

  WeightedOOperator op_;
  HomLts descent_;
  TensorK theta_a_;
  TensorK d_a_;
  int degree_cap_;
};

/// Phi(f)(v_1,..) = phi_g(f(phi_h^{-1} v_1, ...)); requires invertible
/// phi_h. The pair is expected to pass check_o_homomorphism(op1, op2).
Cochain transport_cochain(const WeightedOOperator& op1, const WeightedOOperator& op2,
                          const QMat& phi_h, const QMat& phi_g, const Cochain& f);

}  // namespace hlts
