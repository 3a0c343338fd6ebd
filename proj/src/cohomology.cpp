#include "hlts/cohomology.hpp"

#include "hlts/linalg.hpp"

namespace hlts {

namespace {

TensorK build_theta_a(const WeightedOOperator& op) {
  const HomLts& h = op.source;
  const HomLts& g = op.target;
  const QMat& A = op.matrix;
  TensorK th({h.dim, h.dim, g.dim}, g.dim);
  std::vector<QVec> Acol(static_cast<size_t>(h.dim));
  for (int j = 0; j < h.dim; ++j) Acol[static_cast<size_t>(j)] = A.col(j);
  for (int u = 0; u < h.dim; ++u)
    for (int v = 0; v < h.dim; ++v)
      for (int x = 0; x < g.dim; ++x) {
        QVec ex = basis_vec(g.dim, x);
        QVec val = bracket_eval(g, ex, Acol[static_cast<size_t>(u)], Acol[static_cast<size_t>(v)]);
        QVec inner = theta_matrix(op.action.theta, ex, Acol[static_cast<size_t>(v)]).col(u);
        QMat d = theta_matrix(op.action.theta, Acol[static_cast<size_t>(u)], ex) -
                 theta_matrix(op.action.theta, ex, Acol[static_cast<size_t>(u)]);
        sub_into(inner, d.col(v));
        add_into(val, A.apply(inner));
        for (int l = 0; l < g.dim; ++l)
          if (val[static_cast<size_t>(l)] != 0) th.set({u, v, x}, l, val[static_cast<size_t>(l)]);
      }
  return th;
}

TensorK swap_first_two(const TensorK& t) {
  TensorK out(t.arg_dims(), t.out_dim());
  for (const auto& [key, c] : t.entries()) out.set({key[1], key[0], key[2]}, key[3], c);
  return out;
}

}  // namespace

Representation theta_a_representation(const WeightedOOperator& op) {
  HomLts desc = descent_lts(op);
  return make_representation(std::move(desc), op.target.dim, op.target.alpha, build_theta_a(op));
}

CochainComplex::CochainComplex(WeightedOOperator op, int degree_cap)
    : op_(std::move(op)), degree_cap_(degree_cap) {
  descent_ = descent_lts(op_);
  theta_a_ = build_theta_a(op_);
  d_a_ = swap_first_two(theta_a_) - theta_a_;
}

std::vector<int> CochainComplex::arg_dims(int degree) const {
  return std::vector<int>(static_cast<size_t>(2 * degree - 1), op_.source.dim);
}

Cochain CochainComplex::zero(int degree) const {
  require(degree >= 1, "cochain degree must be at least 1");
  return {degree, TensorK(arg_dims(degree), op_.target.dim)};
}

Cochain CochainComplex::from_matrix(const QMat& m) const {
  require(m.rows() == op_.target.dim && m.cols() == op_.source.dim, "degree-1 cochain shape mismatch");
  Cochain f = zero(1);
  for (int j = 0; j < m.cols(); ++j)
    for (int l = 0; l < m.rows(); ++l)
      if (m.at(l, j) != 0) f.tensor.set({j}, l, m.at(l, j));
  return f;
}

Cochain CochainComplex::coboundary(const Cochain& f) const {
  const int n = f.degree;
  require(n >= 1, "coboundary: degree must be at least 1");
  require(n <= degree_cap_, "coboundary: degree cap exceeded (raise via set_degree_cap)");
  require(f.tensor.arity() == 2 * n - 1 && f.tensor.out_dim() == op_.target.dim,
          "coboundary: cochain shape mismatch");
  const int dh = op_.source.dim, dg = op_.target.dim;
  const int M = 2 * n + 1;

  QMat P = op_.source.alpha.pow(n - 1);
  std::vector<QVec> pcol(static_cast<size_t>(dh)), acol(static_cast<size_t>(dh));
  for (int j = 0; j < dh; ++j) {
    pcol[static_cast<size_t>(j)] = P.col(j);
    acol[static_cast<size_t>(j)] = op_.source.alpha.col(j);
  }

  TensorK out(std::vector<int>(static_cast<size_t>(M), dh), dg);
  for (const auto& b : TensorK::tuples(std::vector<int>(static_cast<size_t>(M), dh))) {
    QVec acc = zero_vec(dg);

    // theta_A(v_{2n}, v_{2n+1}) f(v_1..v_{2n-1}), arguments twisted by alpha^{n-1}
    {
      std::vector<int> args(b.begin(), b.end() - 2);
      QVec fv = f.tensor.slice(args);
      if (!is_zero(fv))
        add_into(acc, theta_a_.eval({pcol[static_cast<size_t>(b[static_cast<size_t>(M - 2)])],
                                     pcol[static_cast<size_t>(b[static_cast<size_t>(M - 1)])], fv}));
    }
    // - theta_A(v_{2n-1}, v_{2n+1}) f(v_1..v_{2n-2}, v_{2n})
    {
      std::vector<int> args(b.begin(), b.end() - 3);
      args.push_back(b[static_cast<size_t>(M - 2)]);
      QVec fv = f.tensor.slice(args);
      if (!is_zero(fv))
        sub_into(acc, theta_a_.eval({pcol[static_cast<size_t>(b[static_cast<size_t>(M - 3)])],
                                     pcol[static_cast<size_t>(b[static_cast<size_t>(M - 1)])], fv}));
    }
    // sum_i (-1)^{i+n} D_A(v_{2i-1}, v_{2i}) f(..v_{2i-2}, v_{2i+1}..)
    for (int i = 1; i <= n; ++i) {
      std::vector<int> args;
      args.reserve(static_cast<size_t>(2 * n - 1));
      for (int p = 0; p <= 2 * i - 3; ++p) args.push_back(b[static_cast<size_t>(p)]);
      for (int p = 2 * i; p <= 2 * n; ++p) args.push_back(b[static_cast<size_t>(p)]);
      QVec fv = f.tensor.slice(args);
      if (is_zero(fv)) continue;
      QVec val = d_a_.eval({pcol[static_cast<size_t>(b[static_cast<size_t>(2 * i - 2)])],
                            pcol[static_cast<size_t>(b[static_cast<size_t>(2 * i - 1)])], fv});
      if ((i + n) % 2 == 0)
        add_into(acc, val);
      else
        sub_into(acc, val);
    }
    // double sum inserting {v_{2i-1}, v_{2i}, v_j}_A, other arguments twisted once
    for (int i = 1; i <= n; ++i)
      for (int j = 2 * i + 1; j <= 2 * n + 1; ++j) {
        QVec br = descent_.bracket.slice({b[static_cast<size_t>(2 * i - 2)],
                                          b[static_cast<size_t>(2 * i - 1)],
                                          b[static_cast<size_t>(j - 1)]});
        if (is_zero(br)) continue;
        std::vector<QVec> args;
        args.reserve(static_cast<size_t>(2 * n - 1));
        auto push = [&](int p) {
          if (p == j - 1)
            args.push_back(br);
          else
            args.push_back(acol[static_cast<size_t>(b[static_cast<size_t>(p)])]);
        };
        for (int p = 0; p <= 2 * i - 3; ++p) push(p);
        for (int p = 2 * i; p <= 2 * n; ++p) push(p);
        QVec val = f.tensor.eval(args);
        if ((i + n + 1) % 2 == 0)
          add_into(acc, val);
        else
          sub_into(acc, val);
      }

    for (int l = 0; l < dg; ++l)
      if (acc[static_cast<size_t>(l)] != 0) out.set(b, l, acc[static_cast<size_t>(l)]);
  }
  return {n + 1, std::move(out)};
}

ViolationReport CochainComplex::check_constraints(const Cochain& f) const {
  const int m = 2 * f.degree - 1;
  const int dh = op_.source.dim;
  const HomLts& g = op_.target;
  ViolationReport out;

  std::vector<QVec> acol(static_cast<size_t>(dh));
  for (int j = 0; j < dh; ++j) acol[static_cast<size_t>(j)] = op_.source.alpha.col(j);

  for (const auto& t : TensorK::tuples(arg_dims(f.degree))) {
    QVec lhs = g.alpha.apply(f.tensor.slice(t));
    std::vector<QVec> args;
    args.reserve(static_cast<size_t>(m));
    for (int p = 0; p < m; ++p) args.push_back(acol[static_cast<size_t>(t[static_cast<size_t>(p)])]);
    out.check_eq("twist_equivariance", t, lhs, f.tensor.eval(args));

    if (m >= 3) {
      std::vector<int> sw = t;
      std::swap(sw[static_cast<size_t>(m - 3)], sw[static_cast<size_t>(m - 2)]);
      out.check_eq("skew_tail", t, f.tensor.slice(t), scaled(f.tensor.slice(sw), Rat(-1)));

      std::vector<int> r1 = t, r2 = t;
      // rotations (u,v,w) -> (w,u,v) -> (v,w,u) in the last three slots
      r1[static_cast<size_t>(m - 3)] = t[static_cast<size_t>(m - 1)];
      r1[static_cast<size_t>(m - 2)] = t[static_cast<size_t>(m - 3)];
      r1[static_cast<size_t>(m - 1)] = t[static_cast<size_t>(m - 2)];
      r2[static_cast<size_t>(m - 3)] = t[static_cast<size_t>(m - 2)];
      r2[static_cast<size_t>(m - 2)] = t[static_cast<size_t>(m - 1)];
      r2[static_cast<size_t>(m - 1)] = t[static_cast<size_t>(m - 3)];
      QVec cyc = f.tensor.slice(t);
      add_into(cyc, f.tensor.slice(r1));
      add_into(cyc, f.tensor.slice(r2));
      out.check_zero("cyclic_tail", t, cyc);
    }
  }
  return out;
}

QMat CochainComplex::constraint_matrix(int degree) const {
  const int m = 2 * degree - 1;
  const int dh = op_.source.dim, dg = op_.target.dim;
  const auto dims = arg_dims(degree);
  const auto tuples = TensorK::tuples(dims);

  size_t ncols = static_cast<size_t>(dg);
  for (int j = 0; j < m; ++j) ncols *= static_cast<size_t>(dh);

  auto coord = [&](const std::vector<int>& t, int l) {
    size_t idx = 0;
    for (int j = 0; j < m; ++j) idx = idx * static_cast<size_t>(dh) + static_cast<size_t>(t[static_cast<size_t>(j)]);
    return static_cast<int>(idx * static_cast<size_t>(dg) + static_cast<size_t>(l));
  };

  const int nrows = static_cast<int>(tuples.size()) * dg * (m >= 3 ? 3 : 1);
  QMat c(nrows, static_cast<int>(ncols));
  int r = 0;

  // alpha_g(f(t)) - f(alpha t_1, ..., alpha t_m) = 0
  for (const auto& t : tuples)
    for (int l = 0; l < dg; ++l, ++r) {
      for (int l2 = 0; l2 < dg; ++l2)
        if (op_.target.alpha.at(l, l2) != 0) c.at(r, coord(t, l2)) += op_.target.alpha.at(l, l2);
      for (const auto& t2 : tuples) {
        Rat prod(1);
        for (int j = 0; j < m && prod != 0; ++j)
          prod *= op_.source.alpha.at(t2[static_cast<size_t>(j)], t[static_cast<size_t>(j)]);
        if (prod != 0) c.at(r, coord(t2, l)) -= prod;
      }
    }

  if (m >= 3) {
    for (const auto& t : tuples)
      for (int l = 0; l < dg; ++l, ++r) {
        std::vector<int> sw = t;
        std::swap(sw[static_cast<size_t>(m - 3)], sw[static_cast<size_t>(m - 2)]);
        c.at(r, coord(t, l)) += 1;
        c.at(r, coord(sw, l)) += 1;
      }
    for (const auto& t : tuples)
      for (int l = 0; l < dg; ++l, ++r) {
        std::vector<int> r1 = t, r2 = t;
        r1[static_cast<size_t>(m - 3)] = t[static_cast<size_t>(m - 1)];
        r1[static_cast<size_t>(m - 2)] = t[static_cast<size_t>(m - 3)];
        r1[static_cast<size_t>(m - 1)] = t[static_cast<size_t>(m - 2)];
        r2[static_cast<size_t>(m - 3)] = t[static_cast<size_t>(m - 2)];
        r2[static_cast<size_t>(m - 2)] = t[static_cast<size_t>(m - 1)];
        r2[static_cast<size_t>(m - 1)] = t[static_cast<size_t>(m - 3)];
        c.at(r, coord(t, l)) += 1;
        c.at(r, coord(r1, l)) += 1;
        c.at(r, coord(r2, l)) += 1;
      }
  }
  return c;
}

std::vector<Cochain> CochainComplex::space_basis(int degree) const {
  require(degree >= 1, "cochain degree must be at least 1");
  require(degree <= degree_cap_, "cochain space degree cap exceeded (raise via set_degree_cap)");
  std::vector<Cochain> basis;
  for (const QVec& v : kernel_basis(constraint_matrix(degree)))
    basis.push_back({degree, vec_to_tensor(v, arg_dims(degree), op_.target.dim)});
  return basis;
}

QMat CochainComplex::delta_matrix(int degree, std::vector<Cochain>* basis_out) const {
  std::vector<Cochain> basis = space_basis(degree);
  size_t nrows = static_cast<size_t>(op_.target.dim);
  for (int j = 0; j < 2 * (degree + 1) - 1; ++j) nrows *= static_cast<size_t>(op_.source.dim);
  QMat m(static_cast<int>(nrows), static_cast<int>(basis.size()));
  for (size_t c = 0; c < basis.size(); ++c) {
    QVec col = tensor_to_vec(coboundary(basis[c]).tensor);
    for (size_t i = 0; i < col.size(); ++i) m.at(static_cast<int>(i), static_cast<int>(c)) = col[i];
  }
  if (basis_out) *basis_out = std::move(basis);
  return m;
}

Cochain CochainComplex::im(const ZeroCochain& z) const {
  const HomLts& g = op_.target;
  const HomLts& h = op_.source;
  require(static_cast<int>(z.a.size()) == g.dim && static_cast<int>(z.b.size()) == g.dim,
          "degree-0 cochain lives in the target algebra");
  require(g.alpha.apply(z.a) == z.a && g.alpha.apply(z.b) == z.b,
          "degree-0 cochain must be twist-fixed");
  std::optional<QMat> ainv = inverse(h.alpha);
  require(ainv.has_value(), "regularity required: source twist is not invertible");

  QMat d = theta_matrix(op_.action.theta, z.b, z.a) - theta_matrix(op_.action.theta, z.a, z.b);
  QMat m(g.dim, h.dim);
  for (int v = 0; v < h.dim; ++v) {
    QVec w = ainv->col(v);
    QVec val = op_.matrix.apply(d.apply(w));
    sub_into(val, bracket_eval(g, z.a, z.b, op_.matrix.apply(w)));
    for (int l = 0; l < g.dim; ++l) m.at(l, v) = val[static_cast<size_t>(l)];
  }
  return from_matrix(m);
}

CohomologyDims CochainComplex::dims(int degree) const {
  require(degree >= 1, "cohomology degree must be at least 1");
  require(degree <= degree_cap_, "cohomology degree cap exceeded (raise via set_degree_cap)");
  CohomologyDims out;
  out.degree = degree;
  out.regular_source = op_.source.regular();
  out.regular_target = op_.target.regular();

  std::vector<Cochain> basis;
  QMat dm = delta_matrix(degree, &basis);
  out.dim_z = static_cast<int>(basis.size()) - rank(dm);

  if (degree >= 2) {
    out.dim_b = rank(delta_matrix(degree - 1));
  } else if (out.regular_source && out.regular_target) {
    std::vector<QVec> fixed = kernel_basis(op_.target.alpha - QMat::identity(op_.target.dim));
    std::vector<QVec> cols;
    for (size_t i = 0; i < fixed.size(); ++i)
      for (size_t j = i + 1; j < fixed.size(); ++j)
        cols.push_back(tensor_to_vec(im({fixed[i], fixed[j]}).tensor));
    QMat m(op_.target.dim * op_.source.dim, static_cast<int>(cols.size()));
    for (size_t c = 0; c < cols.size(); ++c)
      for (size_t i = 0; i < cols[c].size(); ++i) m.at(static_cast<int>(i), static_cast<int>(c)) = cols[c][i];
    out.dim_b = rank(m);
  }
  if (out.dim_b) out.dim_h = out.dim_z - *out.dim_b;
  return out;
}

Cochain transport_cochain(const WeightedOOperator& op1, const WeightedOOperator& op2,
                          const QMat& phi_h, const QMat& phi_g, const Cochain& f) {
  require(phi_h.rows() == op1.source.dim && phi_h.cols() == op1.source.dim &&
              phi_g.rows() == op1.target.dim && phi_g.cols() == op1.target.dim,
          "transport: homomorphism shape mismatch");
  std::optional<QMat> inv = inverse(phi_h);
  require(inv.has_value(), "transport requires invertible phi_h");
  (void)op2;

  const int m = f.tensor.arity();
  TensorK out(f.tensor.arg_dims(), f.tensor.out_dim());
  for (const auto& t : TensorK::tuples(f.tensor.arg_dims())) {
    std::vector<QVec> args;
    args.reserve(static_cast<size_t>(m));
    for (int p = 0; p < m; ++p) args.push_back(inv->col(t[static_cast<size_t>(p)]));
    QVec val = phi_g.apply(f.tensor.eval(args));
    for (int l = 0; l < f.tensor.out_dim(); ++l)
      if (val[static_cast<size_t>(l)] != 0) out.set(t, l, val[static_cast<size_t>(l)]);
  }
  return {f.degree, std::move(out)};
}

}  // namespace hlts
