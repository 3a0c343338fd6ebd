#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hlts/linalg.hpp"
#include "hlts/truncpoly.hpp"
#include "support/generators.hpp"

using namespace hlts;
using hlts::test::Rng;

namespace {

// independent oracle: plain rational row reduction, no normalization
int naive_rank(QMat m) {
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int p = -1;
    for (int i = r; i < m.rows(); ++i)
      if (m.at(i, c) != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    for (int j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(r, j));
    for (int i = r + 1; i < m.rows(); ++i) {
      if (m.at(i, c) == 0) continue;
      Rat f = m.at(i, c) / m.at(r, c);
      for (int j = 0; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
    }
    ++r;
  }
  return r;
}

}  // namespace

TEST_CASE("rational parse and print round-trip") {
  CHECK(to_string(rat(3, 6)) == "1/2");
  CHECK(to_string(rat(-4, 2)) == "-2");
  CHECK(to_string(Rat(0)) == "0");
  CHECK(*parse_rat("3/5") == rat(3, 5));
  CHECK(*parse_rat("-7") == Rat(-7));
  CHECK(*parse_rat("2/4") == rat(1, 2));
  CHECK(!parse_rat("1/0").has_value());
  CHECK(!parse_rat("007").has_value());
  CHECK(!parse_rat("1/-2").has_value());
  CHECK(!parse_rat("+3").has_value());
  CHECK(!parse_rat("").has_value());
  CHECK(!parse_rat("a/b").has_value());

  Rng rng(11);
  for (int t = 0; t < 200; ++t) {
    Rat x = rat(rng.range(-40, 40), rng.range(1, 23));
    CHECK(*parse_rat(to_string(x)) == x);
  }
}

TEST_CASE("rank basics") {
  CHECK(rank(QMat::identity(2)) == 2);
  CHECK(rank(QMat(3, 3)) == 0);
  CHECK(rank(QMat()) == 0);
}

TEST_CASE("rank agrees with naive elimination on random integer matrices") {
  Rng rng(17);
  for (int t = 0; t < 120; ++t) {
    QMat m(4, 4);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) m.at(i, j) = rng.range(-5, 5);
    CHECK(rank(m) == naive_rank(m));
  }
}

TEST_CASE("rank agrees with rref pivots on rational matrices") {
  Rng rng(23);
  for (int t = 0; t < 80; ++t) {
    QMat m = rng.mat(rng.range(1, 5), rng.range(1, 5));
    CHECK(rank(m) == static_cast<int>(rref(m).pivot_cols.size()));
  }
}

TEST_CASE("kernel basis") {
  CHECK(kernel_basis(QMat::identity(3)).empty());

  QMat m(1, 2);
  m.at(0, 0) = 1;
  m.at(0, 1) = -1;
  auto k = kernel_basis(m);
  REQUIRE(k.size() == 1);
  CHECK(k[0] == QVec{Rat(1), Rat(1)});

  Rng rng(31);
  for (int t = 0; t < 60; ++t) {
    QMat r = rng.mat(5, 3);
    auto basis = kernel_basis(r);
    CHECK(static_cast<int>(basis.size()) == 3 - rank(r));
    for (const QVec& v : basis) CHECK(is_zero(r.apply(v)));
  }
}

TEST_CASE("solve") {
  QVec b = {Rat(2), rat(1, 3), Rat(-5)};
  CHECK(*solve(QMat::identity(3), b) == b);
  CHECK(!solve(QMat(2, 2), QVec{Rat(1), Rat(0)}).has_value());

  Rng rng(37);
  for (int t = 0; t < 60; ++t) {
    QMat m = rng.mat(rng.range(1, 4), rng.range(1, 4));
    QVec x0 = rng.vec(m.cols());
    QVec b2 = m.apply(x0);
    auto x = solve(m, b2);
    REQUIRE(x.has_value());
    CHECK(m.apply(*x) == b2);
  }
}

TEST_CASE("inverse") {
  Rng rng(41);
  int found = 0;
  for (int t = 0; t < 60; ++t) {
    QMat m = rng.mat(3, 3);
    auto inv = inverse(m);
    if (rank(m) == 3) {
      REQUIRE(inv.has_value());
      CHECK(*inv * m == QMat::identity(3));
      ++found;
    } else {
      CHECK(!inv.has_value());
    }
  }
  CHECK(found > 10);
}

TEST_CASE("truncated polynomial ring laws") {
  Rng rng(43);
  for (int t = 0; t < 60; ++t) {
    const int order = rng.range(0, 4);
    auto poly = [&] {
      TruncPoly p(order);
      for (int k = 0; k <= order; ++k) p.coeff(k) = rng.small_rat();
      return p;
    };
    TruncPoly p = poly(), q = poly(), r = poly();
    CHECK((p * q) * r == p * (q * r));
    CHECK(p * q == q * p);
    CHECK(p * (q + r) == p * q + p * r);
  }
  // truncation drops high powers
  TruncPoly t1 = TruncPoly::t_power(2, 1);
  CHECK((t1 * t1 * t1).is_zero());
  CHECK(TruncPoly::t_power(2, 3).is_zero());
}

TEST_CASE("tensor storage stays canonical") {
  TensorK t({2, 2}, 2);
  t.set({0, 1}, 1, Rat(3));
  t.add({0, 1}, 1, Rat(-3));
  CHECK(t.is_zero());
  t.set({1, 0}, 0, Rat(2));
  CHECK(t.coeff({1, 0}, 0) == 2);
  CHECK(t.coeff({0, 0}, 0) == 0);
  QVec v = tensor_to_vec(t);
  CHECK(vec_to_tensor(v, {2, 2}, 2) == t);
}

TEST_CASE("generic evaluation matches rational evaluation on constants") {
  Rng rng(47);
  TensorK t({2, 3}, 2);
  for (int reps = 0; reps < 8; ++reps) t.add({rng.below(2), rng.below(3)}, rng.below(2), rng.small_rat());
  QVec x = rng.vec(2), y = rng.vec(3);
  QVec direct = t.eval({x, y});
  TPVec lifted = t.eval<TruncPoly>({tp_constant(x, 2), tp_constant(y, 2)}, TruncPoly(2));
  CHECK(tp_coeff(lifted, 0) == direct);
  CHECK(is_zero(tp_coeff(lifted, 1)));
}
