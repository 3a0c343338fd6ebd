#pragma once

#include "hlts/hom_lts.hpp"

namespace hlts {

/// Representation of g on a twisted module (V, beta): theta(e_i, e_j)
/// sends module basis f_k to sum_l theta[(i,j,k)->l] f_l.
struct Representation {
  HomLts algebra;  // g
  int module_dim = 0;
  QMat beta;
  TensorK theta;  // dims (dim g, dim g, module_dim) -> module_dim

  bool operator==(const Representation&) const = default;
};

/// Action of g on another Hom-Lie triple system h; the module twist is
/// alpha_h by construction.
struct Action {
  HomLts algebra;  // g
  HomLts module;   // h
  TensorK theta;

  Representation rep() const { return {algebra, module.dim, module.alpha, theta}; }

  bool operator==(const Action&) const = default;
};

Representation make_representation(HomLts g, int module_dim, QMat beta, TensorK theta);
Action make_action(HomLts g, HomLts h, TensorK theta);

/// Matrix of theta(x, y) for vector arguments.
QMat theta_matrix(const TensorK& theta, const QVec& x, const QVec& y);

/// D(x,y) = theta(y,x) - theta(x,y) as a module endomorphism.
QMat d_operator(const Representation& rep, const QVec& x, const QVec& y);

ViolationReport check_representation(const Representation& rep);

/// Representation checks plus the two bracket-compatibility families and
/// their D-operator consequences (the latter re-verified, tagged derived_*).
ViolationReport check_action(const Action& act);

/// theta(a,b) x = [x, a, b]; caller still runs check_action, the vanishing
/// side conditions are not automatic.
Action adjoint_action(const HomLts& g);

/// Hom-Lie triple system on g (+) h with blockwise twist and bracket
/// [x+u, y+v, z+w] = [x,y,z]_g + D(x,y)w - theta(x,z)v + theta(y,z)u
/// + kappa [u,v,w]_h. Validates the action first.
HomLts semidirect_product(const HomLts& g, const HomLts& h, const Action& act, const Rat& kappa);

}  // namespace hlts
