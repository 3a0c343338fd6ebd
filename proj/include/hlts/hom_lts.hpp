#pragma once

#include "hlts/tensor.hpp"
#include "hlts/violation.hpp"

namespace hlts {

/// Finite-dimensional Hom-Lie triple system by structure constants:
/// bracket coefficient of e_l in [e_i, e_j, e_k] plus the twist map alpha.
/// Construction validates shapes only; run check_hom_lts for the axioms.
struct HomLts {
  int dim = 0;
  std::vector<std::string> basis_labels;
  TensorK bracket;  // arity 3, all dims = dim
  QMat alpha;

  bool regular() const;  // alpha invertible

  bool operator==(const HomLts&) const = default;
};

HomLts make_hom_lts(int dim, TensorK bracket, QMat alpha, std::vector<std::string> labels = {});

HomLts zero_bracket_lts(int dim, QMat alpha);

/// Skew symmetry in the first two slots, the cyclic identity, twist
/// multiplicativity (basis triples), and the twisted fundamental identity
/// (all basis 5-tuples), each violation tagged with its witness tuple.
ViolationReport check_hom_lts(const HomLts& g);

QVec bracket_eval(const HomLts& g, const QVec& x, const QVec& y, const QVec& z);

/// Matrix of x -> [a, b, x].
QMat l_operator(const HomLts& g, const QVec& a, const QVec& b);

/// Matrix of x -> [x, a, b].
QMat r_operator(const HomLts& g, const QVec& a, const QVec& b);

/// phi: g1 -> g2 intertwines twists and brackets on basis triples.
ViolationReport check_lts_morphism(const HomLts& g1, const HomLts& g2, const QMat& phi);

}  // namespace hlts
