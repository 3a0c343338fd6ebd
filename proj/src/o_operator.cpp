#include "hlts/o_operator.hpp"

#include "hlts/linalg.hpp"

namespace hlts {

namespace {

bool same_structure(const HomLts& a, const HomLts& b) {
  return a.dim == b.dim && a.bracket == b.bracket && a.alpha == b.alpha;
}

void require_valid_action(const Action& act, const char* who) {
  ViolationReport av = check_action(act);
  require(av.pass(), std::string(who) + ": action fails its checks (first: " +
                         (av.pass() ? "" : av.violations().front().tag) + ")");
}

void require_valid_op(const WeightedOOperator& op, const char* who) {
  ViolationReport v = check_o_operator(op);
  require(v.pass(), std::string(who) + ": operator fails its checks (first: " +
                        (v.pass() ? "" : v.violations().front().tag) + ")");
}

}  // namespace

WeightedOOperator make_o_operator(HomLts source, HomLts target, Action action, QMat matrix, Rat kappa) {
  require(same_structure(action.algebra, target) && same_structure(action.module, source),
          "operator action must act by the target on the source");
  require(matrix.rows() == target.dim && matrix.cols() == source.dim, "operator matrix shape mismatch");
  return WeightedOOperator{std::move(source), std::move(target), std::move(action), std::move(matrix),
                           std::move(kappa)};
}

ViolationReport check_o_operator(const WeightedOOperator& op) {
  require_valid_action(op.action, "check_o_operator");
  const HomLts& h = op.source;
  const HomLts& g = op.target;
  const QMat& A = op.matrix;
  ViolationReport out;

  QMat lhs = A * h.alpha;
  QMat rhs = g.alpha * A;
  for (int j = 0; j < h.dim; ++j) out.check_eq("twist_commute", {j}, lhs.col(j), rhs.col(j));

  std::vector<QVec> Acol(static_cast<size_t>(h.dim));
  for (int j = 0; j < h.dim; ++j) Acol[static_cast<size_t>(j)] = A.col(j);

  for (int u = 0; u < h.dim; ++u)
    for (int v = 0; v < h.dim; ++v) {
      QMat d = theta_matrix(op.action.theta, Acol[static_cast<size_t>(v)], Acol[static_cast<size_t>(u)]) -
               theta_matrix(op.action.theta, Acol[static_cast<size_t>(u)], Acol[static_cast<size_t>(v)]);
      for (int w = 0; w < h.dim; ++w) {
        QVec left = bracket_eval(g, Acol[static_cast<size_t>(u)], Acol[static_cast<size_t>(v)],
                                 Acol[static_cast<size_t>(w)]);
        QVec inner = d.col(w);
        sub_into(inner, theta_matrix(op.action.theta, Acol[static_cast<size_t>(u)],
                                     Acol[static_cast<size_t>(w)]).col(v));
        add_into(inner, theta_matrix(op.action.theta, Acol[static_cast<size_t>(v)],
                                     Acol[static_cast<size_t>(w)]).col(u));
        add_into(inner, scaled(h.bracket.slice({u, v, w}), op.kappa));
        out.check_eq("o_identity", {u, v, w}, left, A.apply(inner));
      }
    }
  return out;
}

ViolationReport check_o_homomorphism(const WeightedOOperator& op1, const WeightedOOperator& op2,
                                     const QMat& phi_h, const QMat& phi_g) {
  require(same_structure(op1.source, op2.source) && same_structure(op1.target, op2.target) &&
              op1.action.theta == op2.action.theta && op1.kappa == op2.kappa,
          "check_o_homomorphism: operators must share algebras, action and weight");
  require_valid_op(op1, "check_o_homomorphism");
  require_valid_op(op2, "check_o_homomorphism");

  const HomLts& h = op1.source;
  const HomLts& g = op1.target;
  ViolationReport out;
  out.merge(check_lts_morphism(h, h, phi_h), "phi_h:");
  out.merge(check_lts_morphism(g, g, phi_g), "phi_g:");

  QMat lhs = phi_g * op1.matrix;
  QMat rhs = op2.matrix * phi_h;
  for (int j = 0; j < h.dim; ++j) out.check_eq("intertwine_map", {j}, lhs.col(j), rhs.col(j));

  for (int x = 0; x < g.dim; ++x)
    for (int y = 0; y < g.dim; ++y) {
      QMat t = theta_matrix(op1.action.theta, basis_vec(g.dim, x), basis_vec(g.dim, y));
      QMat tp = theta_matrix(op1.action.theta, phi_g.col(x), phi_g.col(y));
      QMat dm = theta_matrix(op1.action.theta, basis_vec(g.dim, y), basis_vec(g.dim, x)) - t;
      QMat dp = theta_matrix(op1.action.theta, phi_g.col(y), phi_g.col(x)) - tp;
      QMat le = phi_h * t, re = tp * phi_h;
      QMat ld = phi_h * dm, rd = dp * phi_h;
      for (int u = 0; u < h.dim; ++u) {
        out.check_eq("theta_equivariance", {x, y, u}, le.col(u), re.col(u));
        out.check_eq("derived_d_equivariance", {x, y, u}, ld.col(u), rd.col(u));
      }
    }
  return out;
}

bool graph_is_subalgebra(const WeightedOOperator& cand) {
  const HomLts& h = cand.source;
  const HomLts& g = cand.target;
  HomLts sd = semidirect_product(g, h, cand.action, cand.kappa);

  QMat graph(sd.dim, h.dim);
  for (int j = 0; j < h.dim; ++j) {
    QVec a = cand.matrix.col(j);
    for (int i = 0; i < g.dim; ++i) graph.at(i, j) = a[static_cast<size_t>(i)];
    graph.at(g.dim + j, j) = 1;
  }

  for (int j = 0; j < h.dim; ++j)
    if (!column_space_contains(graph, sd.alpha.apply(graph.col(j)))) return false;
  for (int i = 0; i < h.dim; ++i)
    for (int j = 0; j < h.dim; ++j)
      for (int k = 0; k < h.dim; ++k)
        if (!column_space_contains(graph, bracket_eval(sd, graph.col(i), graph.col(j), graph.col(k))))
          return false;
  return true;
}

TensorK descent_bracket(const WeightedOOperator& op) {
  const HomLts& h = op.source;
  TensorK br({h.dim, h.dim, h.dim}, h.dim);
  std::vector<QVec> Acol(static_cast<size_t>(h.dim));
  for (int j = 0; j < h.dim; ++j) Acol[static_cast<size_t>(j)] = op.matrix.col(j);
  for (int u = 0; u < h.dim; ++u)
    for (int v = 0; v < h.dim; ++v) {
      QMat d = theta_matrix(op.action.theta, Acol[static_cast<size_t>(v)], Acol[static_cast<size_t>(u)]) -
               theta_matrix(op.action.theta, Acol[static_cast<size_t>(u)], Acol[static_cast<size_t>(v)]);
      for (int w = 0; w < h.dim; ++w) {
        QVec val = d.col(w);
        sub_into(val, theta_matrix(op.action.theta, Acol[static_cast<size_t>(u)],
                                   Acol[static_cast<size_t>(w)]).col(v));
        add_into(val, theta_matrix(op.action.theta, Acol[static_cast<size_t>(v)],
                                   Acol[static_cast<size_t>(w)]).col(u));
        add_into(val, scaled(h.bracket.slice({u, v, w}), op.kappa));
        for (int l = 0; l < h.dim; ++l)
          if (val[static_cast<size_t>(l)] != 0) br.set({u, v, w}, l, val[static_cast<size_t>(l)]);
      }
    }
  return br;
}

HomLts descent_lts(const WeightedOOperator& op) {
  require_valid_op(op, "descent_lts");
  HomLts d = make_hom_lts(op.source.dim, descent_bracket(op), op.source.alpha, op.source.basis_labels);
  ViolationReport mv = check_lts_morphism(d, op.target, op.matrix);
  if (!mv.pass())
    throw std::logic_error("descent_lts: A fails to intertwine the descent bracket (internal error)");
  return d;
}

ViolationReport nijenhuis_check(const HomLts& g, const QMat& n) {
  require(n.rows() == g.dim && n.cols() == g.dim, "nijenhuis_check: matrix shape mismatch");
  ViolationReport out;
  QMat lhs = n * g.alpha, rhs = g.alpha * n;
  for (int j = 0; j < g.dim; ++j) out.check_eq("twist_commute", {j}, lhs.col(j), rhs.col(j));

  QMat n2 = n * n, n3 = n2 * n;
  std::vector<QVec> nc(static_cast<size_t>(g.dim));
  for (int j = 0; j < g.dim; ++j) nc[static_cast<size_t>(j)] = n.col(j);
  for (int x = 0; x < g.dim; ++x)
    for (int y = 0; y < g.dim; ++y)
      for (int z = 0; z < g.dim; ++z) {
        QVec ex = basis_vec(g.dim, x), ey = basis_vec(g.dim, y), ez = basis_vec(g.dim, z);
        QVec left = bracket_eval(g, nc[static_cast<size_t>(x)], nc[static_cast<size_t>(y)],
                                 nc[static_cast<size_t>(z)]);
        QVec s1 = bracket_eval(g, ex, nc[static_cast<size_t>(y)], nc[static_cast<size_t>(z)]);
        add_into(s1, bracket_eval(g, nc[static_cast<size_t>(x)], ey, nc[static_cast<size_t>(z)]));
        add_into(s1, bracket_eval(g, nc[static_cast<size_t>(x)], nc[static_cast<size_t>(y)], ez));
        QVec s2 = bracket_eval(g, nc[static_cast<size_t>(x)], ey, ez);
        add_into(s2, bracket_eval(g, ex, nc[static_cast<size_t>(y)], ez));
        add_into(s2, bracket_eval(g, ex, ey, nc[static_cast<size_t>(z)]));
        QVec right = n.apply(s1);
        sub_into(right, n2.apply(s2));
        add_into(right, n3.apply(g.bracket.slice({x, y, z})));
        out.check_eq("nijenhuis_identity", {x, y, z}, left, right);
      }
  return out;
}

QMat n_from_o(const WeightedOOperator& op) {
  const int dg = op.target.dim, dh = op.source.dim;
  QMat n(dg + dh, dg + dh);
  for (int i = 0; i < dg; ++i) {
    n.at(i, i) = 1;
    for (int j = 0; j < dh; ++j) n.at(i, dg + j) = op.matrix.at(i, j);
  }
  return n;
}

}  // namespace hlts
