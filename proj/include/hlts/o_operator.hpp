#pragma once

#include "hlts/rep_action.hpp"

namespace hlts {

/// Weighted O-operator candidate: a linear map A from h into g taken
/// against an action of g on h, with rational weight kappa.
struct WeightedOOperator {
  HomLts source;  // h
  HomLts target;  // g
  Action action;  // of target on source
  QMat matrix;    // dim(g) x dim(h)
  Rat kappa;

  bool operator==(const WeightedOOperator&) const = default;
};

WeightedOOperator make_o_operator(HomLts source, HomLts target, Action action, QMat matrix, Rat kappa);

/// Twist intertwining plus the defining identity
/// [Au,Av,Aw] = A(D(Au,Av)w - theta(Au,Aw)v + theta(Av,Aw)u + kappa [u,v,w])
/// on all basis triples of the source. Validates the action first (throws).
ViolationReport check_o_operator(const WeightedOOperator& op);

/// Pair of Hom-Lts endomorphisms (phi_h, phi_g) intertwining the operators
/// and theta; the derived D-compatibility is re-verified.
ViolationReport check_o_homomorphism(const WeightedOOperator& op1, const WeightedOOperator& op2,
                                     const QMat& phi_h, const QMat& phi_g);

/// Whether span{Au + u} is closed under the semidirect bracket and twist,
/// decided by exact column-space membership.
bool graph_is_subalgebra(const WeightedOOperator& cand);

/// (h, {,,}_A, alpha_h); validates the operator and asserts that A is a
/// morphism onto the target.
HomLts descent_lts(const WeightedOOperator& op);

/// The bracket tensor of the descent system, without validating op.
TensorK descent_bracket(const WeightedOOperator& op);

ViolationReport nijenhuis_check(const HomLts& g, const QMat& n);

/// Block matrix [[id, A], [0, 0]] on g (+) h.
QMat n_from_o(const WeightedOOperator& op);

}  // namespace hlts
