#include "hlts/hom_lie.hpp"

#include "hlts/config.hpp"

namespace hlts {

namespace {

void check_arity2(const TensorK& t, int dim, const char* what) {
  require(t.arity() == 2, std::string(what) + " must have arity 2");
  for (int d : t.arg_dims()) require(d == dim, std::string(what) + " dimension mismatch");
  require(t.out_dim() == dim, std::string(what) + " dimension mismatch");
}

template <class T>
void require_passes(const T& report, const char* who) {
  require(report.pass(), std::string(who) + ": input fails its checks (first: " +
                             (report.pass() ? "" : report.violations().front().tag) + ")");
}

}  // namespace

HomLieAlgebra make_hom_lie(int dim, TensorK bracket, QMat alpha) {
  require(dim >= 0, "algebra dimension must be nonnegative");
  check_arity2(bracket, dim, "binary bracket");
  require(alpha.rows() == dim && alpha.cols() == dim, "twist map shape mismatch");
  return HomLieAlgebra{dim, std::move(bracket), std::move(alpha)};
}

LieAction make_lie_action(HomLieAlgebra g, HomLieAlgebra h, TensorK rho) {
  require(rho.arity() == 2 && rho.arg_dims()[0] == g.dim && rho.arg_dims()[1] == h.dim &&
              rho.out_dim() == h.dim,
          "rho dimension mismatch");
  return LieAction{std::move(g), std::move(h), std::move(rho)};
}

HomPostLieAlgebra make_post_lie(int dim, TensorK bracket, TensorK star, QMat alpha) {
  check_arity2(bracket, dim, "binary bracket");
  check_arity2(star, dim, "star product");
  require(alpha.rows() == dim && alpha.cols() == dim, "twist map shape mismatch");
  return HomPostLieAlgebra{dim, std::move(bracket), std::move(star), std::move(alpha)};
}

QVec lie_bracket_eval(const HomLieAlgebra& g, const QVec& x, const QVec& y) {
  return g.bracket.eval({x, y});
}

QMat rho_matrix(const TensorK& rho, const QVec& x) {
  const int md = rho.out_dim();
  QMat m(md, md);
  for (const auto& [key, c] : rho.entries()) {
    const Rat& f = x[static_cast<size_t>(key[0])];
    if (f == 0) continue;
    m.at(key[2], key[1]) += f * c;
  }
  return m;
}

ViolationReport check_hom_lie(const HomLieAlgebra& g) {
  require_within_dim_cap(g.dim, "check_hom_lie");
  ViolationReport out;
  const int d = g.dim;
  std::vector<QVec> acol(static_cast<size_t>(d));
  for (int i = 0; i < d; ++i) acol[static_cast<size_t>(i)] = g.alpha.col(i);

  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      QVec lhs = g.bracket.slice({i, j});
      out.check_eq("skew", {i, j}, lhs, scaled(g.bracket.slice({j, i}), Rat(-1)));
      out.check_eq("twist_bracket", {i, j}, g.alpha.apply(lhs),
                   g.bracket.eval({acol[static_cast<size_t>(i)], acol[static_cast<size_t>(j)]}));
    }

  for (int x = 0; x < d; ++x)
    for (int y = 0; y < d; ++y)
      for (int z = 0; z < d; ++z) {
        QVec sum = g.bracket.eval({g.bracket.slice({x, y}), acol[static_cast<size_t>(z)]});
        add_into(sum, g.bracket.eval({g.bracket.slice({z, x}), acol[static_cast<size_t>(y)]}));
        add_into(sum, g.bracket.eval({g.bracket.slice({y, z}), acol[static_cast<size_t>(x)]}));
        out.check_zero("hom_jacobi", {x, y, z}, sum);
      }
  return out;
}

HomLts lts_from_hom_lie(const HomLieAlgebra& g) {
  require_passes(check_hom_lie(g), "lts_from_hom_lie");
  TensorK br({g.dim, g.dim, g.dim}, g.dim);
  for (int x = 0; x < g.dim; ++x)
    for (int y = 0; y < g.dim; ++y) {
      QVec inner = g.bracket.slice({x, y});
      if (is_zero(inner)) continue;
      for (int z = 0; z < g.dim; ++z) {
        QVec val = g.bracket.eval({inner, g.alpha.col(z)});
        for (int l = 0; l < g.dim; ++l)
          if (val[static_cast<size_t>(l)] != 0) br.set({x, y, z}, l, val[static_cast<size_t>(l)]);
      }
    }
  return make_hom_lts(g.dim, std::move(br), g.alpha);
}

ViolationReport check_lie_action(const LieAction& act) {
  const HomLieAlgebra& g = act.algebra;
  const HomLieAlgebra& h = act.module;
  require_within_dim_cap(g.dim, "check_lie_action");
  require_within_dim_cap(h.dim, "check_lie_action");
  ViolationReport out;

  std::vector<QMat> r(static_cast<size_t>(g.dim)), ra(static_cast<size_t>(g.dim));
  for (int i = 0; i < g.dim; ++i) {
    r[static_cast<size_t>(i)] = rho_matrix(act.rho, basis_vec(g.dim, i));
    ra[static_cast<size_t>(i)] = rho_matrix(act.rho, g.alpha.col(i));
  }

  // rho(alpha x) . alpha_h = alpha_h . rho(x)
  for (int x = 0; x < g.dim; ++x) {
    QMat lhs = ra[static_cast<size_t>(x)] * h.alpha;
    QMat rhs = h.alpha * r[static_cast<size_t>(x)];
    for (int k = 0; k < h.dim; ++k) out.check_eq("rho_twist", {x, k}, lhs.col(k), rhs.col(k));
  }
  // rho([x,y]) . alpha_h = rho(alpha x) rho(y) - rho(alpha y) rho(x)
  for (int x = 0; x < g.dim; ++x)
    for (int y = 0; y < g.dim; ++y) {
      QMat lhs = rho_matrix(act.rho, g.bracket.slice({x, y})) * h.alpha;
      QMat rhs = ra[static_cast<size_t>(x)] * r[static_cast<size_t>(y)] -
                 ra[static_cast<size_t>(y)] * r[static_cast<size_t>(x)];
      for (int k = 0; k < h.dim; ++k) out.check_eq("rho_bracket", {x, y, k}, lhs.col(k), rhs.col(k));
    }
  // rho(alpha x)[u,v] = [rho(x)u, alpha v] + [alpha u, rho(x)v], and
  // [rho(x)u, alpha v] = 0
  for (int x = 0; x < g.dim; ++x)
    for (int u = 0; u < h.dim; ++u)
      for (int v = 0; v < h.dim; ++v) {
        QVec lhs = ra[static_cast<size_t>(x)].apply(h.bracket.slice({u, v}));
        QVec first = h.bracket.eval({r[static_cast<size_t>(x)].col(u), h.alpha.col(v)});
        QVec rhs = add(first, h.bracket.eval({h.alpha.col(u), r[static_cast<size_t>(x)].col(v)}));
        out.check_eq("rho_derivation", {x, u, v}, lhs, rhs);
        out.check_zero("rho_vanish", {x, u, v}, first);
      }
  return out;
}

Action theta_from_rho(const LieAction& act) {
  require_passes(check_lie_action(act), "theta_from_rho");
  HomLts g3 = lts_from_hom_lie(act.algebra);
  HomLts h3 = lts_from_hom_lie(act.module);
  const int dg = act.algebra.dim, dh = act.module.dim;
  TensorK theta({dg, dg, dh}, dh);
  for (int x = 0; x < dg; ++x)
    for (int y = 0; y < dg; ++y) {
      QMat m = rho_matrix(act.rho, act.algebra.alpha.col(y)) * rho_matrix(act.rho, basis_vec(dg, x));
      for (int k = 0; k < dh; ++k)
        for (int l = 0; l < dh; ++l)
          if (m.at(l, k) != 0) theta.set({x, y, k}, l, m.at(l, k));
    }
  return Action{std::move(g3), std::move(h3), std::move(theta)};
}

ViolationReport check_lie_o_operator(const QMat& a, const LieAction& act, const Rat& kappa) {
  require_passes(check_lie_action(act), "check_lie_o_operator");
  const HomLieAlgebra& g = act.algebra;
  const HomLieAlgebra& h = act.module;
  require(a.rows() == g.dim && a.cols() == h.dim, "operator matrix shape mismatch");
  ViolationReport out;

  QMat lhs = a * h.alpha, rhs = g.alpha * a;
  for (int j = 0; j < h.dim; ++j) out.check_eq("twist_commute", {j}, lhs.col(j), rhs.col(j));

  for (int u = 0; u < h.dim; ++u)
    for (int v = 0; v < h.dim; ++v) {
      QVec left = lie_bracket_eval(g, a.col(u), a.col(v));
      QVec inner = rho_matrix(act.rho, a.col(u)).col(v);
      sub_into(inner, rho_matrix(act.rho, a.col(v)).col(u));
      add_into(inner, scaled(h.bracket.slice({u, v}), kappa));
      out.check_eq("o_identity", {u, v}, left, a.apply(inner));
    }
  return out;
}

ViolationReport check_post_lie(const HomPostLieAlgebra& p) {
  require_within_dim_cap(p.dim, "check_post_lie");
  ViolationReport out;
  out.merge(check_hom_lie(HomLieAlgebra{p.dim, p.bracket, p.alpha}), "lie_");

  const int d = p.dim;
  std::vector<QVec> acol(static_cast<size_t>(d));
  for (int i = 0; i < d; ++i) acol[static_cast<size_t>(i)] = p.alpha.col(i);

  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      out.check_eq("star_twist", {i, j}, p.alpha.apply(p.star.slice({i, j})),
                   p.star.eval({acol[static_cast<size_t>(i)], acol[static_cast<size_t>(j)]}));

  for (int u = 0; u < d; ++u)
    for (int v = 0; v < d; ++v)
      for (int w = 0; w < d; ++w) {
        const QVec& au = acol[static_cast<size_t>(u)];
        const QVec& av = acol[static_cast<size_t>(v)];
        const QVec& aw = acol[static_cast<size_t>(w)];

        // alpha(u) * [v,w] = [u*v, alpha w] + [alpha v, u*w]
        QVec lhs1 = p.star.eval({au, p.bracket.slice({v, w})});
        QVec first = p.bracket.eval({p.star.slice({u, v}), aw});
        QVec rhs1 = add(first, p.bracket.eval({av, p.star.slice({u, w})}));
        out.check_eq("star_derivation", {u, v, w}, lhs1, rhs1);

        // ([u,v] + u*v - v*u) * alpha(w) = alpha(u)*(v*w) - alpha(v)*(u*w)
        QVec comb = p.bracket.slice({u, v});
        add_into(comb, p.star.slice({u, v}));
        sub_into(comb, p.star.slice({v, u}));
        QVec lhs2 = p.star.eval({comb, aw});
        QVec rhs2 = p.star.eval({au, p.star.slice({v, w})});
        sub_into(rhs2, p.star.eval({av, p.star.slice({u, w})}));
        out.check_eq("star_compat", {u, v, w}, lhs2, rhs2);

        // alpha(u) * [v,w] = 0 and [u*v, alpha w] = 0
        out.check_zero("star_bracket_vanish", {u, v, w}, lhs1);
        out.check_zero("bracket_star_vanish", {u, v, w}, first);
      }
  return out;
}

HomLieAlgebra adjacent_hom_lie(const HomPostLieAlgebra& p) {
  require_passes(check_post_lie(p), "adjacent_hom_lie");
  TensorK br = p.bracket + p.star;
  for (const auto& [key, c] : p.star.entries()) br.add({key[1], key[0]}, key[2], -c);
  return make_hom_lie(p.dim, std::move(br), p.alpha);
}

LieOOperatorImage post_lie_from_o(const QMat& a, const LieAction& act, const Rat& kappa) {
  require_passes(check_lie_o_operator(a, act, kappa), "post_lie_from_o");
  const HomLieAlgebra& h = act.module;
  const int d = h.dim;

  TensorK star({d, d}, d);
  for (int u = 0; u < d; ++u) {
    QMat m = rho_matrix(act.rho, a.col(u));
    for (int v = 0; v < d; ++v)
      for (int l = 0; l < d; ++l)
        if (m.at(l, v) != 0) star.set({u, v}, l, m.at(l, v));
  }
  HomPostLieAlgebra post = make_post_lie(d, h.bracket.scaled(kappa), star, h.alpha);

  TensorK desc = star + h.bracket.scaled(kappa);
  for (const auto& [key, c] : star.entries()) desc.add({key[1], key[0]}, key[2], -c);
  HomLieAlgebra descent = make_hom_lie(d, std::move(desc), h.alpha);

  LieAction ad = make_lie_action(descent, h, star);
  return {std::move(post), std::move(descent), std::move(ad)};
}

HomPostLts post_lts_from_post_lie(const HomPostLieAlgebra& p) {
  require_passes(check_post_lie(p), "post_lts_from_post_lie");
  const int d = p.dim;
  TensorK floor({d, d, d}, d);
  TensorK curly({d, d, d}, d);
  for (int u = 0; u < d; ++u)
    for (int v = 0; v < d; ++v) {
      QVec uv = p.bracket.slice({u, v});
      QVec vsu = p.star.slice({v, u});
      for (int w = 0; w < d; ++w) {
        QVec fval = p.bracket.eval({uv, p.alpha.col(w)});
        for (int l = 0; l < d; ++l)
          if (fval[static_cast<size_t>(l)] != 0) floor.set({u, v, w}, l, fval[static_cast<size_t>(l)]);
        QVec cval = p.star.eval({p.alpha.col(w), vsu});
        for (int l = 0; l < d; ++l)
          if (cval[static_cast<size_t>(l)] != 0) curly.set({u, v, w}, l, cval[static_cast<size_t>(l)]);
      }
    }
  return make_post_lts(d, std::move(floor), std::move(curly), p.alpha);
}

bool diagram_check(const HomPostLieAlgebra& p) {
  HomLts via_post = adjacent_lts(post_lts_from_post_lie(p));
  HomLts via_lie = lts_from_hom_lie(adjacent_hom_lie(p));
  return via_post.bracket == via_lie.bracket;
}

bool diagram_action_match(const HomPostLieAlgebra& p) {
  Action via_post = r_action(post_lts_from_post_lie(p));
  LieAction ad = make_lie_action(adjacent_hom_lie(p), HomLieAlgebra{p.dim, p.bracket, p.alpha},
                                 p.star);
  Action via_lie = theta_from_rho(ad);
  return via_post.theta == via_lie.theta;
}

}  // namespace hlts
