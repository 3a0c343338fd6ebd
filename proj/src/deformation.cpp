#include "hlts/deformation.hpp"

#include "hlts/linalg.hpp"

namespace hlts {

namespace {

const QMat& term_matrix(const TruncatedDeformation& d, int i) {
  return i == 0 ? d.op.matrix : d.terms[static_cast<size_t>(i) - 1];
}

void require_valid(const TruncatedDeformation& d, const char* who) {
  ViolationReport v = check_n_order(d);
  require(v.pass(), std::string(who) + ": deformation fails its checks (first: " +
                        (v.pass() ? "" : v.violations().front().tag) + ")");
}

}  // namespace

TruncatedDeformation make_deformation(WeightedOOperator op, std::vector<QMat> terms) {
  for (const QMat& t : terms)
    require(t.rows() == op.target.dim && t.cols() == op.source.dim,
            "deformation term shape mismatch");
  return TruncatedDeformation{std::move(op), std::move(terms)};
}

TPVec apply_deformed(const WeightedOOperator& op, const std::vector<QMat>& higher_terms,
                     const TPVec& v) {
  require(static_cast<int>(v.size()) == op.source.dim, "apply_deformed: vector length mismatch");
  const int order = v.empty() ? 0 : v[0].order();
  TPVec out = tp_vec(op.target.dim, order);
  for (int p = 0; p <= order && p <= static_cast<int>(higher_terms.size()); ++p) {
    const QMat& m = p == 0 ? op.matrix : higher_terms[static_cast<size_t>(p) - 1];
    TPVec mv = m.apply_generic(v, TruncPoly(order));
    TruncPoly tp = TruncPoly::t_power(order, p);
    for (size_t i = 0; i < mv.size(); ++i) {
      mv[i] *= tp;
      out[i] += mv[i];
    }
  }
  return out;
}

ViolationReport check_n_order(const TruncatedDeformation& d) {
  const WeightedOOperator& op = d.op;
  const HomLts& h = op.source;
  const HomLts& g = op.target;
  const int n = d.order();
  for (const QMat& t : d.terms)
    require(t.rows() == g.dim && t.cols() == h.dim, "deformation term shape mismatch");
  ViolationReport av = check_action(op.action);
  require(av.pass(), "check_n_order: action fails its checks");

  ViolationReport out;
  for (int i = 0; i <= n; ++i) {
    QMat lhs = term_matrix(d, i) * h.alpha;
    QMat rhs = g.alpha * term_matrix(d, i);
    for (int j = 0; j < h.dim; ++j) out.check_eq("twist_commute", {i, j}, lhs.col(j), rhs.col(j));
  }

  auto deformed_col = [&](int u) {
    TPVec v = tp_vec(g.dim, n);
    for (int p = 0; p <= n; ++p) {
      const QMat& m = term_matrix(d, p);
      for (int r = 0; r < g.dim; ++r) v[static_cast<size_t>(r)].coeff(p) = m.at(r, u);
    }
    return v;
  };
  std::vector<TPVec> At(static_cast<size_t>(h.dim));
  for (int u = 0; u < h.dim; ++u) At[static_cast<size_t>(u)] = deformed_col(u);

  const TruncPoly zero(n);
  const TensorK& theta = op.action.theta;
  for (int u = 0; u < h.dim; ++u)
    for (int v = 0; v < h.dim; ++v)
      for (int w = 0; w < h.dim; ++w) {
        TPVec lhs = g.bracket.eval<TruncPoly>(
            {At[static_cast<size_t>(u)], At[static_cast<size_t>(v)], At[static_cast<size_t>(w)]}, zero);

        TPVec eu = tp_constant(basis_vec(h.dim, u), n);
        TPVec ev = tp_constant(basis_vec(h.dim, v), n);
        TPVec ew = tp_constant(basis_vec(h.dim, w), n);
        TPVec inner = theta.eval<TruncPoly>({At[static_cast<size_t>(v)], At[static_cast<size_t>(u)], ew}, zero);
        TPVec t2 = theta.eval<TruncPoly>({At[static_cast<size_t>(u)], At[static_cast<size_t>(v)], ew}, zero);
        TPVec t3 = theta.eval<TruncPoly>({At[static_cast<size_t>(u)], At[static_cast<size_t>(w)], ev}, zero);
        TPVec t4 = theta.eval<TruncPoly>({At[static_cast<size_t>(v)], At[static_cast<size_t>(w)], eu}, zero);
        for (size_t i = 0; i < inner.size(); ++i) {
          inner[i] -= t2[i];
          inner[i] -= t3[i];
          inner[i] += t4[i];
        }
        QVec hb = scaled(h.bracket.slice({u, v, w}), op.kappa);
        for (size_t i = 0; i < inner.size(); ++i) inner[i] += TruncPoly(n, hb[i]);

        TPVec rhs = apply_deformed(op, d.terms, inner);
        for (int p = 0; p <= n; ++p)
          out.check_eq("o_identity", {u, v, w, p}, tp_coeff(lhs, p), tp_coeff(rhs, p));
      }
  return out;
}

ViolationReport check_linear_deformation(const WeightedOOperator& op, const QMat& a1) {
  ViolationReport route1 = check_n_order(make_deformation(op, {a1}));

  CochainComplex cc(op);
  bool route2 = a1 * op.source.alpha == op.target.alpha * a1;
  if (route2) route2 = cc.coboundary(cc.from_matrix(a1)).tensor.is_zero();
  if (route1.pass() != route2)
    throw std::logic_error("check_linear_deformation: truncated and cocycle routes disagree");
  return route1;
}

bool check_linear_equivalence(const WeightedOOperator& op, const QMat& a1, const QMat& a1p,
                              const QVec& a, const QVec& b) {
  const HomLts& g = op.target;
  const HomLts& h = op.source;
  require(check_linear_deformation(op, a1).pass() && check_linear_deformation(op, a1p).pass(),
          "check_linear_equivalence: both candidates must be linear deformations");
  require(g.alpha.apply(a) == a && g.alpha.apply(b) == b,
          "check_linear_equivalence: pair must be twist-fixed");
  std::optional<QMat> ag_inv = inverse(g.alpha);
  std::optional<QMat> ah_inv = inverse(h.alpha);
  require(ag_inv.has_value() && ah_inv.has_value(), "regularity required: twists must be invertible");

  QMat p1g = *ag_inv * l_operator(g, a, b);
  QMat p1h = *ah_inv * (theta_matrix(op.action.theta, b, a) - theta_matrix(op.action.theta, a, b));

  // endomorphism conditions modulo t^2
  if (!(p1g * g.alpha == g.alpha * p1g)) return false;
  if (!(p1h * h.alpha == h.alpha * p1h)) return false;

  const TruncPoly zero(1);
  auto phi_col = [&](const QMat& p1, int dim, int j) {
    TPVec v = tp_constant(basis_vec(dim, j), 1);
    for (int r = 0; r < dim; ++r) v[static_cast<size_t>(r)].coeff(1) = p1.at(r, j);
    return v;
  };
  auto phi_apply = [&](const QMat& p1, const QVec& x) {
    TPVec v = tp_constant(x, 1);
    QVec px = p1.apply(x);
    for (size_t r = 0; r < v.size(); ++r) v[r].coeff(1) = px[r];
    return v;
  };

  for (int x = 0; x < g.dim; ++x)
    for (int y = 0; y < g.dim; ++y)
      for (int z = 0; z < g.dim; ++z) {
        TPVec lhs = phi_apply(p1g, g.bracket.slice({x, y, z}));
        TPVec rhs = g.bracket.eval<TruncPoly>({phi_col(p1g, g.dim, x), phi_col(p1g, g.dim, y),
                                               phi_col(p1g, g.dim, z)}, zero);
        if (lhs != rhs) return false;
      }
  for (int x = 0; x < h.dim; ++x)
    for (int y = 0; y < h.dim; ++y)
      for (int z = 0; z < h.dim; ++z) {
        TPVec lhs = phi_apply(p1h, h.bracket.slice({x, y, z}));
        TPVec rhs = h.bracket.eval<TruncPoly>({phi_col(p1h, h.dim, x), phi_col(p1h, h.dim, y),
                                               phi_col(p1h, h.dim, z)}, zero);
        if (lhs != rhs) return false;
      }

  // phi_g . A_t = A'_t . phi_h at order 1
  if (!(p1g * op.matrix + a1 == a1p + op.matrix * p1h)) return false;

  // theta equivariance modulo t^2
  for (int x = 0; x < g.dim; ++x)
    for (int y = 0; y < g.dim; ++y) {
      QMat t = theta_matrix(op.action.theta, basis_vec(g.dim, x), basis_vec(g.dim, y));
      for (int u = 0; u < h.dim; ++u) {
        TPVec lhs = phi_apply(p1h, t.col(u));
        TPVec rhs = op.action.theta.eval<TruncPoly>({phi_col(p1g, g.dim, x), phi_col(p1g, g.dim, y),
                                                     phi_col(p1h, h.dim, u)}, zero);
        if (lhs != rhs) return false;
      }
    }

  // bookkeeping: the infinitesimals must differ by the degree-0 image
  CochainComplex cc(op);
  Cochain im = cc.im({a, b});
  QMat im_mat(g.dim, h.dim);
  for (const auto& [key, c] : im.tensor.entries()) im_mat.at(key[1], key[0]) = c;
  if (!(a1 - a1p == im_mat))
    throw std::logic_error("check_linear_equivalence: infinitesimal difference is not Im(a,b)");
  return true;
}

Cochain obstruction_raw(const TruncatedDeformation& d, const CochainComplex& cc) {
  const WeightedOOperator& op = d.op;
  const HomLts& h = op.source;
  const HomLts& g = op.target;
  const TensorK& theta = op.action.theta;
  const int n = d.order();

  std::vector<std::vector<QVec>> cols(static_cast<size_t>(n) + 1,
                                      std::vector<QVec>(static_cast<size_t>(h.dim)));
  for (int i = 0; i <= n; ++i)
    for (int u = 0; u < h.dim; ++u) cols[static_cast<size_t>(i)][static_cast<size_t>(u)] = term_matrix(d, i).col(u);

  Cochain obs = cc.zero(2);
  for (int u1 = 0; u1 < h.dim; ++u1)
    for (int u2 = 0; u2 < h.dim; ++u2)
      for (int u3 = 0; u3 < h.dim; ++u3) {
        QVec val = zero_vec(g.dim);
        for (int i = 0; i <= n; ++i)
          for (int j = 0; j <= n; ++j) {
            int k = n + 1 - i - j;
            if (k < 0 || k > n) continue;
            const QVec& x1 = cols[static_cast<size_t>(i)][static_cast<size_t>(u1)];
            const QVec& ju1 = cols[static_cast<size_t>(j)][static_cast<size_t>(u1)];
            const QVec& ju2 = cols[static_cast<size_t>(j)][static_cast<size_t>(u2)];
            const QVec& ku2 = cols[static_cast<size_t>(k)][static_cast<size_t>(u2)];
            const QVec& ku3 = cols[static_cast<size_t>(k)][static_cast<size_t>(u3)];
            add_into(val, bracket_eval(g, x1, ju2, ku3));
            QVec inner = (theta_matrix(theta, ku2, ju1) - theta_matrix(theta, ju1, ku2)).col(u3);
            sub_into(inner, theta_matrix(theta, ju1, ku3).col(u2));
            add_into(inner, theta_matrix(theta, ju2, ku3).col(u1));
            sub_into(val, term_matrix(d, i).apply(inner));
          }
        for (int l = 0; l < g.dim; ++l)
          if (val[static_cast<size_t>(l)] != 0) obs.tensor.set({u1, u2, u3}, l, val[static_cast<size_t>(l)]);
      }
  return obs;
}

Cochain obstruction(const TruncatedDeformation& d) {
  require_valid(d, "obstruction");
  CochainComplex cc(d.op);
  Cochain obs = obstruction_raw(d, cc);
  if (!cc.check_constraints(obs).pass())
    throw std::logic_error("obstruction: result left the constrained cochain space");
  if (!cc.coboundary(obs).tensor.is_zero())
    throw std::logic_error("obstruction: result is not a cocycle");
  return obs;
}

std::optional<QMat> extend(const TruncatedDeformation& d) {
  require_valid(d, "extend");
  CochainComplex cc(d.op);
  Cochain obs = obstruction_raw(d, cc);

  std::vector<Cochain> basis;
  QMat dm = cc.delta_matrix(1, &basis);
  std::optional<QVec> x = solve(dm, scaled(tensor_to_vec(obs.tensor), Rat(-1)));
  if (!x) return std::nullopt;

  QMat out(d.op.target.dim, d.op.source.dim);
  for (size_t c = 0; c < basis.size(); ++c) {
    if ((*x)[c] == 0) continue;
    for (const auto& [key, v] : basis[c].tensor.entries()) out.at(key[1], key[0]) += (*x)[c] * v;
  }
  return out;
}

}  // namespace hlts
