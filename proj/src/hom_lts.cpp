#include "hlts/hom_lts.hpp"

#include "hlts/config.hpp"
#include "hlts/linalg.hpp"

namespace hlts {

bool HomLts::regular() const { return rank(alpha) == dim; }

HomLts make_hom_lts(int dim, TensorK bracket, QMat alpha, std::vector<std::string> labels) {
  require(dim >= 0, "algebra dimension must be nonnegative");
  require(bracket.arity() == 3, "triple bracket must have arity 3");
  for (int d : bracket.arg_dims()) require(d == dim, "bracket argument dimension mismatch");
  require(bracket.out_dim() == dim, "bracket output dimension mismatch");
  require(alpha.rows() == dim && alpha.cols() == dim, "twist map shape mismatch");
  require(labels.empty() || static_cast<int>(labels.size()) == dim, "basis label count mismatch");
  return HomLts{dim, std::move(labels), std::move(bracket), std::move(alpha)};
}

HomLts zero_bracket_lts(int dim, QMat alpha) {
  return make_hom_lts(dim, TensorK({dim, dim, dim}, dim), std::move(alpha));
}

ViolationReport check_hom_lts(const HomLts& g) {
  require_within_dim_cap(g.dim, "check_hom_lts");
  ViolationReport rep;
  const int d = g.dim;

  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k) {
        QVec lhs = g.bracket.slice({i, j, k});
        rep.check_eq("skew", {i, j, k}, lhs, scaled(g.bracket.slice({j, i, k}), Rat(-1)));
        QVec cyc = lhs;
        add_into(cyc, g.bracket.slice({k, i, j}));
        add_into(cyc, g.bracket.slice({j, k, i}));
        rep.check_zero("cyclic", {i, j, k}, cyc);
        rep.check_eq("twist_bracket", {i, j, k}, g.alpha.apply(lhs),
                     bracket_eval(g, g.alpha.col(i), g.alpha.col(j), g.alpha.col(k)));
      }

  // [alpha(a), alpha(b), [x,y,z]] = [[a,b,x], alpha(y), alpha(z)]
  //   + [alpha(x), [a,b,y], alpha(z)] + [alpha(x), alpha(y), [a,b,z]]
  std::vector<QVec> acol(static_cast<size_t>(d));
  for (int i = 0; i < d; ++i) acol[static_cast<size_t>(i)] = g.alpha.col(i);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b)
      for (int x = 0; x < d; ++x)
        for (int y = 0; y < d; ++y)
          for (int z = 0; z < d; ++z) {
            QVec lhs = bracket_eval(g, acol[static_cast<size_t>(a)], acol[static_cast<size_t>(b)],
                                    g.bracket.slice({x, y, z}));
            QVec rhs = bracket_eval(g, g.bracket.slice({a, b, x}), acol[static_cast<size_t>(y)],
                                    acol[static_cast<size_t>(z)]);
            add_into(rhs, bracket_eval(g, acol[static_cast<size_t>(x)], g.bracket.slice({a, b, y}),
                                       acol[static_cast<size_t>(z)]));
            add_into(rhs, bracket_eval(g, acol[static_cast<size_t>(x)], acol[static_cast<size_t>(y)],
                                       g.bracket.slice({a, b, z})));
            rep.check_eq("fundamental", {a, b, x, y, z}, lhs, rhs);
          }
  return rep;
}

QVec bracket_eval(const HomLts& g, const QVec& x, const QVec& y, const QVec& z) {
  require(static_cast<int>(x.size()) == g.dim && static_cast<int>(y.size()) == g.dim &&
              static_cast<int>(z.size()) == g.dim,
          "bracket_eval: vector length mismatch");
  return g.bracket.eval({x, y, z});
}

QMat l_operator(const HomLts& g, const QVec& a, const QVec& b) {
  require(static_cast<int>(a.size()) == g.dim && static_cast<int>(b.size()) == g.dim,
          "l_operator: vector length mismatch");
  QMat m(g.dim, g.dim);
  for (int k = 0; k < g.dim; ++k) {
    QVec v = bracket_eval(g, a, b, basis_vec(g.dim, k));
    for (int l = 0; l < g.dim; ++l) m.at(l, k) = v[static_cast<size_t>(l)];
  }
  return m;
}

QMat r_operator(const HomLts& g, const QVec& a, const QVec& b) {
  require(static_cast<int>(a.size()) == g.dim && static_cast<int>(b.size()) == g.dim,
          "r_operator: vector length mismatch");
  QMat m(g.dim, g.dim);
  for (int k = 0; k < g.dim; ++k) {
    QVec v = bracket_eval(g, basis_vec(g.dim, k), a, b);
    for (int l = 0; l < g.dim; ++l) m.at(l, k) = v[static_cast<size_t>(l)];
  }
  return m;
}

ViolationReport check_lts_morphism(const HomLts& g1, const HomLts& g2, const QMat& phi) {
  require(phi.rows() == g2.dim && phi.cols() == g1.dim, "morphism matrix shape mismatch");
  ViolationReport rep;
  QMat lhs = phi * g1.alpha;
  QMat rhs = g2.alpha * phi;
  for (int j = 0; j < g1.dim; ++j)
    rep.check_eq("twist_intertwine", {j}, lhs.col(j), rhs.col(j));
  for (int i = 0; i < g1.dim; ++i)
    for (int j = 0; j < g1.dim; ++j)
      for (int k = 0; k < g1.dim; ++k)
        rep.check_eq("bracket_intertwine", {i, j, k}, phi.apply(g1.bracket.slice({i, j, k})),
                     bracket_eval(g2, phi.col(i), phi.col(j), phi.col(k)));
  return rep;
}

}  // namespace hlts
