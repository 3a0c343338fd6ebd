#pragma once

#include "hlts/o_operator.hpp"

namespace hlts {

/// Hom-Lie triple system with a second trilinear product; the floor
/// bracket with the same twist must itself satisfy the triple-system
/// axioms, and the two products obey three mixed identities built from the
/// derived products C and D.
struct HomPostLts {
  int dim = 0;
  TensorK floor_bracket;
  TensorK curly;
  QMat alpha;

  bool operator==(const HomPostLts&) const = default;
};

HomPostLts make_post_lts(int dim, TensorK floor_bracket, TensorK curly, QMat alpha);

/// (C, D) with {u,v,w}_D = {w,v,u} - {w,u,v} and
/// <u,v,w>_C = {u,v,w}_D + {u,v,w} - {v,u,w} + floor(u,v,w).
std::pair<TensorK, TensorK> derived_products(const HomPostLts& p);

ViolationReport check_post_lts(const HomPostLts& p);

/// (h, floor, alpha) as a plain triple system (not validated).
HomLts floor_lts(const HomPostLts& p);

/// (h, <,,>_C, alpha); validates p.
HomLts adjacent_lts(const HomPostLts& p);

/// theta(u,v)w = {w,u,v}, an action of the adjacent system on the floor
/// system; validates p.
Action r_action(const HomPostLts& p);

/// Whether the identity map is a kappa-weighted operator from the floor
/// system to the adjacent system with respect to r_action; validates p.
bool identity_is_o_operator(const HomPostLts& p, const Rat& kappa);

/// floor = kappa [.,.,.]_h, {u,v,w} = theta(Av, Aw)u; validates op.
HomPostLts post_lts_from_o(const WeightedOOperator& op);

ViolationReport check_post_lts_morphism(const HomPostLts& p1, const HomPostLts& p2, const QMat& phi);

}  // namespace hlts
