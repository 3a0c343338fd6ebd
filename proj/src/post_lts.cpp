#include "hlts/post_lts.hpp"

#include "hlts/config.hpp"

namespace hlts {

namespace {

void require_valid_post(const HomPostLts& p, const char* who) {
  ViolationReport v = check_post_lts(p);
  require(v.pass(), std::string(who) + ": post system fails its checks (first: " +
                        (v.pass() ? "" : v.violations().front().tag) + ")");
}

void require_valid_op(const WeightedOOperator& op, const char* who) {
  ViolationReport v = check_o_operator(op);
  require(v.pass(), std::string(who) + ": operator fails its checks (first: " +
                        (v.pass() ? "" : v.violations().front().tag) + ")");
}

}  // namespace

HomPostLts make_post_lts(int dim, TensorK floor_bracket, TensorK curly, QMat alpha) {
  require(dim >= 0, "post system dimension must be nonnegative");
  for (const TensorK* t : {&floor_bracket, &curly}) {
    require(t->arity() == 3, "post system products must have arity 3");
    for (int d : t->arg_dims()) require(d == dim, "post system product dimension mismatch");
    require(t->out_dim() == dim, "post system product dimension mismatch");
  }
  require(alpha.rows() == dim && alpha.cols() == dim, "post system twist shape mismatch");
  return HomPostLts{dim, std::move(floor_bracket), std::move(curly), std::move(alpha)};
}

std::pair<TensorK, TensorK> derived_products(const HomPostLts& p) {
  TensorK d(p.curly.arg_dims(), p.dim);
  for (const auto& [key, c] : p.curly.entries()) {
    d.add({key[2], key[1], key[0]}, key[3], c);   // {w,v,u}
    d.add({key[1], key[2], key[0]}, key[3], -c);  // -{w,u,v}
  }
  TensorK cten = d + p.floor_bracket;
  for (const auto& [key, c] : p.curly.entries()) {
    cten.add({key[0], key[1], key[2]}, key[3], c);   // {u,v,w}
    cten.add({key[1], key[0], key[2]}, key[3], -c);  // -{v,u,w}
  }
  return {std::move(cten), std::move(d)};
}

HomLts floor_lts(const HomPostLts& p) { return make_hom_lts(p.dim, p.floor_bracket, p.alpha); }

ViolationReport check_post_lts(const HomPostLts& p) {
  require_within_dim_cap(p.dim, "check_post_lts");
  ViolationReport out;
  out.merge(check_hom_lts(floor_lts(p)), "floor_");

  const int d = p.dim;
  std::vector<QVec> acol(static_cast<size_t>(d));
  for (int i = 0; i < d; ++i) acol[static_cast<size_t>(i)] = p.alpha.col(i);

  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k)
        out.check_eq("curly_twist", {i, j, k}, p.alpha.apply(p.curly.slice({i, j, k})),
                     p.curly.eval({acol[static_cast<size_t>(i)], acol[static_cast<size_t>(j)],
                                   acol[static_cast<size_t>(k)]}));

  auto [cten, dten] = derived_products(p);
  for (int u = 0; u < d; ++u)
    for (int v = 0; v < d; ++v)
      for (int w = 0; w < d; ++w)
        for (int s = 0; s < d; ++s)
          for (int t = 0; t < d; ++t) {
            const QVec& au = acol[static_cast<size_t>(u)];
            const QVec& av = acol[static_cast<size_t>(v)];
            const QVec& aw = acol[static_cast<size_t>(w)];
            const QVec& as = acol[static_cast<size_t>(s)];
            const QVec& at = acol[static_cast<size_t>(t)];

            // {au, av, <w,s,t>_C} = {{u,v,w}, as, at} - {{u,v,s}, aw, at}
            //                       + {aw, as, {u,v,t}}_D
            QVec lhs1 = p.curly.eval({au, av, cten.slice({w, s, t})});
            QVec rhs1 = p.curly.eval({p.curly.slice({u, v, w}), as, at});
            sub_into(rhs1, p.curly.eval({p.curly.slice({u, v, s}), aw, at}));
            add_into(rhs1, dten.eval({aw, as, p.curly.slice({u, v, t})}));
            out.check_eq("curly_adjacent_compat", {u, v, w, s, t}, lhs1, rhs1);

            // {au, av, {w,s,t}}_D = {{u,v,w}_D, as, at} + {aw, <u,v,s>_C, at}
            //                       + {aw, as, <u,v,t>_C}
            QVec lhs2 = dten.eval({au, av, p.curly.slice({w, s, t})});
            QVec rhs2 = p.curly.eval({dten.slice({u, v, w}), as, at});
            add_into(rhs2, p.curly.eval({aw, cten.slice({u, v, s}), at}));
            add_into(rhs2, p.curly.eval({aw, as, cten.slice({u, v, t})}));
            out.check_eq("curly_d_compat", {u, v, w, s, t}, lhs2, rhs2);

            // {floor(w,s,t), au, av} = 0 and floor(as, at, {w,u,v}) = 0
            out.check_zero("curly_floor_vanish", {u, v, w, s, t},
                           p.curly.eval({p.floor_bracket.slice({w, s, t}), au, av}));
            out.check_zero("floor_curly_vanish", {u, v, w, s, t},
                           p.floor_bracket.eval({as, at, p.curly.slice({w, u, v})}));
          }
  return out;
}

HomLts adjacent_lts(const HomPostLts& p) {
  require_valid_post(p, "adjacent_lts");
  auto [cten, dten] = derived_products(p);
  return make_hom_lts(p.dim, std::move(cten), p.alpha);
}

Action r_action(const HomPostLts& p) {
  HomLts adj = adjacent_lts(p);  // validates p
  TensorK theta({p.dim, p.dim, p.dim}, p.dim);
  for (const auto& [key, c] : p.curly.entries()) theta.add({key[1], key[2], key[0]}, key[3], c);
  return Action{std::move(adj), floor_lts(p), std::move(theta)};
}

bool identity_is_o_operator(const HomPostLts& p, const Rat& kappa) {
  Action act = r_action(p);
  WeightedOOperator op = make_o_operator(floor_lts(p), act.algebra, act,
                                         QMat::identity(p.dim), kappa);
  return check_o_operator(op).pass();
}

HomPostLts post_lts_from_o(const WeightedOOperator& op) {
  require_valid_op(op, "post_lts_from_o");
  const HomLts& h = op.source;
  TensorK floor = h.bracket.scaled(op.kappa);
  TensorK curly({h.dim, h.dim, h.dim}, h.dim);
  std::vector<QVec> Acol(static_cast<size_t>(h.dim));
  for (int j = 0; j < h.dim; ++j) Acol[static_cast<size_t>(j)] = op.matrix.col(j);
  for (int v = 0; v < h.dim; ++v)
    for (int w = 0; w < h.dim; ++w) {
      QMat m = theta_matrix(op.action.theta, Acol[static_cast<size_t>(v)], Acol[static_cast<size_t>(w)]);
      for (int u = 0; u < h.dim; ++u)
        for (int l = 0; l < h.dim; ++l)
          if (m.at(l, u) != 0) curly.set({u, v, w}, l, m.at(l, u));
    }
  return make_post_lts(h.dim, std::move(floor), std::move(curly), h.alpha);
}

ViolationReport check_post_lts_morphism(const HomPostLts& p1, const HomPostLts& p2, const QMat& phi) {
  require(phi.rows() == p2.dim && phi.cols() == p1.dim, "morphism matrix shape mismatch");
  ViolationReport out;
  QMat lhs = phi * p1.alpha, rhs = p2.alpha * phi;
  for (int j = 0; j < p1.dim; ++j) out.check_eq("twist_intertwine", {j}, lhs.col(j), rhs.col(j));
  for (int i = 0; i < p1.dim; ++i)
    for (int j = 0; j < p1.dim; ++j)
      for (int k = 0; k < p1.dim; ++k) {
        out.check_eq("floor_intertwine", {i, j, k}, phi.apply(p1.floor_bracket.slice({i, j, k})),
                     p2.floor_bracket.eval({phi.col(i), phi.col(j), phi.col(k)}));
        out.check_eq("curly_intertwine", {i, j, k}, phi.apply(p1.curly.slice({i, j, k})),
                     p2.curly.eval({phi.col(i), phi.col(j), phi.col(k)}));
      }
  return out;
}

}  // namespace hlts
