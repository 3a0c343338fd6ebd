#pragma once

#include "hlts/post_lts.hpp"

namespace hlts {

struct HomLieAlgebra {
  int dim = 0;
  TensorK bracket;  // arity 2
  QMat alpha;

  bool operator==(const HomLieAlgebra&) const = default;
};

/// rho(e_i) f_k = sum_l rho[(i,k)->l] f_l, with both g and the module h
/// Hom-Lie algebras.
struct LieAction {
  HomLieAlgebra algebra;  // g
  HomLieAlgebra module;   // h
  TensorK rho;            // dims (dim g, dim h) -> dim h

  bool operator==(const LieAction&) const = default;
};

struct HomPostLieAlgebra {
  int dim = 0;
  TensorK bracket;  // arity 2
  TensorK star;     // arity 2
  QMat alpha;

  bool operator==(const HomPostLieAlgebra&) const = default;
};

HomLieAlgebra make_hom_lie(int dim, TensorK bracket, QMat alpha);
LieAction make_lie_action(HomLieAlgebra g, HomLieAlgebra h, TensorK rho);
HomPostLieAlgebra make_post_lie(int dim, TensorK bracket, TensorK star, QMat alpha);

QVec lie_bracket_eval(const HomLieAlgebra& g, const QVec& x, const QVec& y);
QMat rho_matrix(const TensorK& rho, const QVec& x);

/// Skew symmetry, twist multiplicativity, twisted Jacobi identity.
ViolationReport check_hom_lie(const HomLieAlgebra& g);

/// [x,y,z] = [[x,y], alpha(z)]; validates g.
HomLts lts_from_hom_lie(const HomLieAlgebra& g);

/// Representation conditions plus the two action families.
ViolationReport check_lie_action(const LieAction& act);

/// theta_rho(x,y) = rho(alpha(y)) . rho(x), an action of the induced
/// triple system of g on the induced triple system of h; validates act.
Action theta_from_rho(const LieAction& act);

ViolationReport check_lie_o_operator(const QMat& a, const LieAction& act, const Rat& kappa);

ViolationReport check_post_lie(const HomPostLieAlgebra& p);

/// [u,v]_C = u*v - v*u + [u,v]; validates p.
HomLieAlgebra adjacent_hom_lie(const HomPostLieAlgebra& p);

struct LieOOperatorImage {
  HomPostLieAlgebra post_lie;  // [u,v] = kappa [u,v]_h, u*v = rho(Au)v
  HomLieAlgebra descent;       // [u,v]_A = rho(Au)v - rho(Av)u + kappa [u,v]_h
  LieAction ad;                // of descent on h, ad(u)v = u*v
};

LieOOperatorImage post_lie_from_o(const QMat& a, const LieAction& act, const Rat& kappa);

/// floor(u,v,w) = [[u,v], alpha(w)], {u,v,w} = alpha(w) * (v * u);
/// validates p.
HomPostLts post_lts_from_post_lie(const HomPostLieAlgebra& p);

/// Adjacent-then-triple equals triple-then-adjacent, as exact equality of
/// bracket tensors; validates p.
bool diagram_check(const HomPostLieAlgebra& p);

/// Informational companion to diagram_check: the action induced on the
/// triple-system side matches theta built from the star action.
bool diagram_action_match(const HomPostLieAlgebra& p);

}  // namespace hlts
