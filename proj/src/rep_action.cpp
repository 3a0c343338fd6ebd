#include "hlts/rep_action.hpp"

#include "hlts/config.hpp"

namespace hlts {

namespace {

bool same_structure(const HomLts& a, const HomLts& b) {
  return a.dim == b.dim && a.bracket == b.bracket && a.alpha == b.alpha;
}

std::string first_tag(const ViolationReport& rep) {
  return rep.pass() ? std::string() : rep.violations().front().tag;
}

}  // namespace

Representation make_representation(HomLts g, int module_dim, QMat beta, TensorK theta) {
  require(module_dim >= 0, "module dimension must be nonnegative");
  require(beta.rows() == module_dim && beta.cols() == module_dim, "module twist shape mismatch");
  require(theta.arity() == 3, "theta must have arity 3");
  require(theta.arg_dims()[0] == g.dim && theta.arg_dims()[1] == g.dim, "theta algebra dimensions mismatch");
  require(theta.arg_dims()[2] == module_dim && theta.out_dim() == module_dim, "theta module dimensions mismatch");
  return Representation{std::move(g), module_dim, std::move(beta), std::move(theta)};
}

Action make_action(HomLts g, HomLts h, TensorK theta) {
  make_representation(g, h.dim, h.alpha, theta);
  return Action{std::move(g), std::move(h), std::move(theta)};
}

QMat theta_matrix(const TensorK& theta, const QVec& x, const QVec& y) {
  const int md = theta.out_dim();
  QMat m(md, md);
  for (const auto& [key, c] : theta.entries()) {
    Rat f = x[static_cast<size_t>(key[0])] * y[static_cast<size_t>(key[1])];
    if (f == 0) continue;
    m.at(key[3], key[2]) += f * c;
  }
  return m;
}

QMat d_operator(const Representation& rep, const QVec& x, const QVec& y) {
  require(static_cast<int>(x.size()) == rep.algebra.dim && static_cast<int>(y.size()) == rep.algebra.dim,
          "d_operator: vector length mismatch");
  return theta_matrix(rep.theta, y, x) - theta_matrix(rep.theta, x, y);
}

ViolationReport check_representation(const Representation& rep) {
  const HomLts& g = rep.algebra;
  require_within_dim_cap(g.dim, "check_representation");
  require_within_dim_cap(rep.module_dim, "check_representation");
  const int d = g.dim, md = rep.module_dim;
  ViolationReport out;

  std::vector<QVec> acol(static_cast<size_t>(d));
  for (int i = 0; i < d; ++i) acol[static_cast<size_t>(i)] = g.alpha.col(i);

  auto tm = [&](int i, int j) { return theta_matrix(rep.theta, basis_vec(d, i), basis_vec(d, j)); };
  std::vector<std::vector<QMat>> T(static_cast<size_t>(d), std::vector<QMat>(static_cast<size_t>(d)));
  std::vector<std::vector<QMat>> Ta(static_cast<size_t>(d), std::vector<QMat>(static_cast<size_t>(d)));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      T[static_cast<size_t>(i)][static_cast<size_t>(j)] = tm(i, j);
      Ta[static_cast<size_t>(i)][static_cast<size_t>(j)] =
          theta_matrix(rep.theta, acol[static_cast<size_t>(i)], acol[static_cast<size_t>(j)]);
    }
  auto D = [&](int i, int j) { return T[static_cast<size_t>(j)][static_cast<size_t>(i)] - T[static_cast<size_t>(i)][static_cast<size_t>(j)]; };
  auto Da = [&](int i, int j) { return Ta[static_cast<size_t>(j)][static_cast<size_t>(i)] - Ta[static_cast<size_t>(i)][static_cast<size_t>(j)]; };

  // theta(alpha x, alpha y) . beta = beta . theta(x, y)
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      QMat lhs = Ta[static_cast<size_t>(i)][static_cast<size_t>(j)] * rep.beta;
      QMat rhs = rep.beta * T[static_cast<size_t>(i)][static_cast<size_t>(j)];
      for (int k = 0; k < md; ++k) out.check_eq("theta_twist", {i, j, k}, lhs.col(k), rhs.col(k));
    }

  // theta(aa,ab) theta(x,y) - theta(ay,ab) theta(x,a)
  //   - theta(ax, [y,a,b]) . beta + D(ay,aa) theta(x,b) = 0
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b)
      for (int x = 0; x < d; ++x)
        for (int y = 0; y < d; ++y) {
          QMat m = Ta[static_cast<size_t>(a)][static_cast<size_t>(b)] * T[static_cast<size_t>(x)][static_cast<size_t>(y)] -
                   Ta[static_cast<size_t>(y)][static_cast<size_t>(b)] * T[static_cast<size_t>(x)][static_cast<size_t>(a)] -
                   theta_matrix(rep.theta, acol[static_cast<size_t>(x)], g.bracket.slice({y, a, b})) * rep.beta +
                   Da(y, a) * T[static_cast<size_t>(x)][static_cast<size_t>(b)];
          for (int k = 0; k < md; ++k) out.check_zero("theta_theta", {a, b, x, y, k}, m.col(k));
        }

  // theta(aa,ab) D(x,y) - D(ax,ay) theta(a,b)
  //   + theta([x,y,a], ab) . beta + theta(aa, [x,y,b]) . beta = 0
  for (int x = 0; x < d; ++x)
    for (int y = 0; y < d; ++y)
      for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) {
          QMat m = Ta[static_cast<size_t>(a)][static_cast<size_t>(b)] * D(x, y) -
                   Da(x, y) * T[static_cast<size_t>(a)][static_cast<size_t>(b)] +
                   theta_matrix(rep.theta, g.bracket.slice({x, y, a}), acol[static_cast<size_t>(b)]) * rep.beta +
                   theta_matrix(rep.theta, acol[static_cast<size_t>(a)], g.bracket.slice({x, y, b})) * rep.beta;
          for (int k = 0; k < md; ++k) out.check_zero("theta_d", {x, y, a, b, k}, m.col(k));
        }
  return out;
}

ViolationReport check_action(const Action& act) {
  ViolationReport out = check_representation(act.rep());
  const HomLts& g = act.algebra;
  const HomLts& h = act.module;
  const int dg = g.dim, dh = h.dim;

  std::vector<QVec> agcol(static_cast<size_t>(dg)), ahcol(static_cast<size_t>(dh));
  for (int i = 0; i < dg; ++i) agcol[static_cast<size_t>(i)] = g.alpha.col(i);
  for (int i = 0; i < dh; ++i) ahcol[static_cast<size_t>(i)] = h.alpha.col(i);

  for (int x = 0; x < dg; ++x)
    for (int y = 0; y < dg; ++y) {
      QMat t = theta_matrix(act.theta, basis_vec(dg, x), basis_vec(dg, y));
      QMat ta = theta_matrix(act.theta, agcol[static_cast<size_t>(x)], agcol[static_cast<size_t>(y)]);
      QMat dm = theta_matrix(act.theta, basis_vec(dg, y), basis_vec(dg, x)) - t;
      QMat da = theta_matrix(act.theta, agcol[static_cast<size_t>(y)], agcol[static_cast<size_t>(x)]) - ta;
      for (int u = 0; u < dh; ++u)
        for (int v = 0; v < dh; ++v)
          for (int w = 0; w < dh; ++w) {
            QVec br = h.bracket.slice({u, v, w});
            QVec tb = ta.apply(br);
            QVec rhs = bracket_eval(h, t.col(u), ahcol[static_cast<size_t>(v)], ahcol[static_cast<size_t>(w)]);
            add_into(rhs, bracket_eval(h, ahcol[static_cast<size_t>(u)], t.col(v), ahcol[static_cast<size_t>(w)]));
            add_into(rhs, bracket_eval(h, ahcol[static_cast<size_t>(u)], ahcol[static_cast<size_t>(v)], t.col(w)));
            out.check_eq("theta_on_bracket", {x, y, u, v, w}, tb, rhs);
            out.check_zero("theta_bracket_vanish", {x, y, u, v, w}, tb);
            out.check_zero("bracket_theta_vanish", {x, y, u, v, w},
                           bracket_eval(h, ahcol[static_cast<size_t>(u)], ahcol[static_cast<size_t>(v)], t.col(w)));

            QVec db = da.apply(br);
            QVec drhs = bracket_eval(h, dm.col(u), ahcol[static_cast<size_t>(v)], ahcol[static_cast<size_t>(w)]);
            add_into(drhs, bracket_eval(h, ahcol[static_cast<size_t>(u)], dm.col(v), ahcol[static_cast<size_t>(w)]));
            add_into(drhs, bracket_eval(h, ahcol[static_cast<size_t>(u)], ahcol[static_cast<size_t>(v)], dm.col(w)));
            out.check_eq("derived_d_on_bracket", {x, y, u, v, w}, db, drhs);
            out.check_zero("derived_d_bracket_vanish", {x, y, u, v, w}, db);
            out.check_zero("derived_bracket_d_vanish", {x, y, u, v, w},
                           bracket_eval(h, ahcol[static_cast<size_t>(u)], ahcol[static_cast<size_t>(v)], dm.col(w)));
          }
    }
  return out;
}

Action adjoint_action(const HomLts& g) {
  ViolationReport ax = check_hom_lts(g);
  require(ax.pass(), "adjoint_action: algebra fails its axioms (first: " + first_tag(ax) + ")");
  TensorK theta({g.dim, g.dim, g.dim}, g.dim);
  for (const auto& [key, c] : g.bracket.entries())
    theta.add({key[1], key[2], key[0]}, key[3], c);
  return Action{g, g, std::move(theta)};
}

HomLts semidirect_product(const HomLts& g, const HomLts& h, const Action& act, const Rat& kappa) {
  require(same_structure(act.algebra, g) && same_structure(act.module, h),
          "semidirect_product: action does not match the given algebras");
  ViolationReport av = check_action(act);
  require(av.pass(), "semidirect_product: action fails its checks (first: " + first_tag(av) + ")");

  const int dg = g.dim, dh = h.dim, n = dg + dh;
  TensorK br({n, n, n}, n);
  for (const auto& [key, c] : g.bracket.entries()) br.set({key[0], key[1], key[2]}, key[3], c);
  // D(x,y)w, -theta(x,z)v, +theta(y,z)u, kappa [u,v,w]_h
  for (const auto& [key, c] : act.theta.entries()) {
    const int i = key[0], j = key[1], k = key[2], l = key[3];
    br.add({j, i, dg + k}, dg + l, c);       // theta(y,x)w part of D(x,y)w
    br.add({i, j, dg + k}, dg + l, -c);      // -theta(x,y)w part of D(x,y)w
    br.add({i, dg + k, j}, dg + l, -c);      // -theta(x,z)v
    br.add({dg + k, i, j}, dg + l, c);       // +theta(y,z)u
  }
  if (kappa != 0)
    for (const auto& [key, c] : h.bracket.entries())
      br.set({dg + key[0], dg + key[1], dg + key[2]}, dg + key[3], kappa * c);

  std::vector<std::string> labels;
  if (static_cast<int>(g.basis_labels.size()) == dg && static_cast<int>(h.basis_labels.size()) == dh && n > 0) {
    labels = g.basis_labels;
    labels.insert(labels.end(), h.basis_labels.begin(), h.basis_labels.end());
  }
  return make_hom_lts(n, std::move(br), QMat::block_diag(g.alpha, h.alpha), std::move(labels));
}

}  // namespace hlts
