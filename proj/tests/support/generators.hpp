#pragma once

#include <fstream>
#include <random>
#include <sstream>

#include "hlts/deformation.hpp"
#include "hlts/hom_lie.hpp"
#include "hlts/workspace.hpp"

namespace hlts::test {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline Workspace load_fixture(const std::string& name) {
  return parse_workspace(read_file(std::string(HLTS_FIXTURE_DIR) + "/" + name));
}

inline WeightedOOperator e4_operator(const Rat& kappa = Rat(1)) {
  Workspace ws = load_fixture("e4.json");
  WeightedOOperator op = resolve_map(ws, "A");
  op.kappa = kappa;
  return op;
}

struct Rng {
  std::mt19937_64 g;
  explicit Rng(uint64_t seed) : g(seed) {}
  int below(int n) { return static_cast<int>(g() % static_cast<uint64_t>(n)); }
  int range(int lo, int hi) { return lo + below(hi - lo + 1); }
  bool coin() { return (g() & 1) != 0; }
  Rat small_rat() {
    int num = range(-3, 3);
    int den = coin() ? 1 : range(1, 3);
    return rat(num, den);
  }
  Rat nonzero_rat() {
    Rat r = small_rat();
    return r == 0 ? Rat(1) : r;
  }
  QVec vec(int n) {
    QVec v = zero_vec(n);
    for (int i = 0; i < n; ++i) v[static_cast<size_t>(i)] = small_rat();
    return v;
  }
  QMat mat(int rows, int cols) {
    QMat m(rows, cols);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) m.at(i, j) = small_rat();
    return m;
  }
};

/// Antisymmetrize slots 1,2 then remove the rotation-invariant part, so the
/// result satisfies both the skew and the cyclic-sum constraints exactly.
inline TensorK project_skew_cyclic(const TensorK& t) {
  const int d = t.out_dim();
  TensorK s(t.arg_dims(), d);
  for (const auto& [key, c] : t.entries()) {
    s.add({key[0], key[1], key[2]}, key[3], c / 2);
    s.add({key[1], key[0], key[2]}, key[3], -c / 2);
  }
  TensorK out(t.arg_dims(), d);
  for (const auto& [key, c] : s.entries()) {
    out.add({key[0], key[1], key[2]}, key[3], c);
    Rat third = c / 3;
    out.add({key[0], key[1], key[2]}, key[3], -third);
    out.add({key[2], key[0], key[1]}, key[3], -third);
    out.add({key[1], key[2], key[0]}, key[3], -third);
  }
  return out;
}

/// Triple system whose bracket arguments avoid the designated center, land
/// in the center, and always involve participant 0. The twisted fundamental
/// identity and the adjoint side conditions then hold term by term.
struct CentralLts {
  HomLts g;
  std::vector<int> center;  // output coordinates
  int pivot = 0;            // participant hit by every entry
};

inline CentralLts random_central_lts(int dim, Rng& rng) {
  CentralLts out;
  out.pivot = 0;
  TensorK raw({dim, dim, dim}, dim);
  if (dim >= 3) {
    out.center = {dim - 1};
    const int npart = dim - 1;
    int n_entries = rng.range(0, 3);
    for (int e = 0; e < n_entries; ++e) {
      std::vector<int> args = {0, rng.below(npart), rng.below(npart)};
      std::swap(args[0], args[static_cast<size_t>(rng.below(3))]);
      raw.add(args, dim - 1, rng.nonzero_rat());
    }
  }
  TensorK bracket = project_skew_cyclic(raw);

  // diagonal signs; center signs forced by multiplicativity, conflicting
  // orbits dropped
  QVec signs = zero_vec(dim);
  for (int i = 0; i < dim; ++i) signs[static_cast<size_t>(i)] = rng.coin() ? 1 : -1;
  std::map<int, Rat> needed;
  TensorK kept = bracket;
  for (const auto& [key, c] : bracket.entries()) {
    Rat prod = signs[static_cast<size_t>(key[0])] * signs[static_cast<size_t>(key[1])] *
               signs[static_cast<size_t>(key[2])];
    auto it = needed.find(key[3]);
    if (it == needed.end())
      needed.emplace(key[3], prod);
    else if (it->second != prod)
      kept.set({key[0], key[1], key[2]}, key[3], Rat(0));
  }
  for (const auto& [z, s] : needed) signs[static_cast<size_t>(z)] = s;
  // re-project in case dropped entries broke closure
  kept = project_skew_cyclic(kept);

  out.g = make_hom_lts(dim, std::move(kept), QMat::diag(signs));
  return out;
}

/// Diagonal maps vanishing on the pivot participant and the center are
/// weighted operators for the adjoint action at every weight.
inline QMat central_valid_matrix(const CentralLts& c, Rng& rng) {
  QVec d = zero_vec(c.g.dim);
  for (int i = 0; i < c.g.dim; ++i) {
    bool banned = i == c.pivot;
    for (int z : c.center) banned = banned || i == z;
    if (!banned) d[static_cast<size_t>(i)] = rng.small_rat();
  }
  return QMat::diag(d);
}

inline Rat sample_kappa(Rng& rng) {
  switch (rng.below(4)) {
    case 0: return Rat(0);
    case 1: return Rat(1);
    case 2: return Rat(-2);
    default: return rat(3, 5);
  }
}

/// Candidate operator with a valid action and a mixed-quality matrix:
/// designed-valid, identity (valid only at weight -2 here), or noise.
inline WeightedOOperator random_candidate_op(Rng& rng, int dim_lo = 2, int dim_hi = 4) {
  CentralLts c = random_central_lts(rng.range(dim_lo, dim_hi), rng);
  Action act = adjoint_action(c.g);
  Rat kappa = sample_kappa(rng);
  QMat a;
  switch (rng.below(4)) {
    case 0:
      a = central_valid_matrix(c, rng);
      break;
    case 1:
      a = QMat::identity(c.g.dim);
      break;
    case 2:
      a = rng.mat(c.g.dim, c.g.dim);
      break;
    default: {
      // alpha-commuting noise: diagonal, so only the bracket identity can fail
      QVec d = rng.vec(c.g.dim);
      a = QMat::diag(d);
      break;
    }
  }
  return make_o_operator(c.g, c.g, std::move(act), std::move(a), std::move(kappa));
}

/// Operator passing its checks, with a bias towards nonzero structure.
inline WeightedOOperator random_valid_op(Rng& rng, int dim_lo = 3, int dim_hi = 4) {
  for (int tries = 0; tries < 200; ++tries) {
    CentralLts c = random_central_lts(rng.range(dim_lo, dim_hi), rng);
    if (c.g.bracket.is_zero() && rng.coin()) continue;
    Action act = adjoint_action(c.g);
    WeightedOOperator op = rng.below(4) == 0
                               ? make_o_operator(c.g, c.g, act, QMat::identity(c.g.dim), Rat(-2))
                               : make_o_operator(c.g, c.g, act, central_valid_matrix(c, rng),
                                                 sample_kappa(rng));
    if (check_o_operator(op).pass()) return op;
  }
  throw std::logic_error("random_valid_op: no valid instance found");
}

// ---- Hom-Lie level families ----

inline TensorK project_skew_pair(const TensorK& t) {
  TensorK out(t.arg_dims(), t.out_dim());
  for (const auto& [key, c] : t.entries()) {
    out.add({key[0], key[1]}, key[2], c / 2);
    out.add({key[1], key[0]}, key[2], -c / 2);
  }
  return out;
}

struct CentralLie {
  HomLieAlgebra g;
  std::vector<int> center;
  int pivot = 0;
};

inline CentralLie random_central_lie(int dim, Rng& rng) {
  CentralLie out;
  TensorK raw({dim, dim}, dim);
  if (dim >= 3) {
    out.center = {dim - 1};
    int n_entries = rng.range(0, 2);
    for (int e = 0; e < n_entries; ++e) {
      std::vector<int> args = {0, rng.below(dim - 1)};
      if (rng.coin()) std::swap(args[0], args[1]);
      raw.add(args, dim - 1, rng.nonzero_rat());
    }
  }
  TensorK bracket = project_skew_pair(raw);

  QVec signs = zero_vec(dim);
  for (int i = 0; i < dim; ++i) signs[static_cast<size_t>(i)] = rng.coin() ? 1 : -1;
  std::map<int, Rat> needed;
  TensorK kept = bracket;
  for (const auto& [key, c] : bracket.entries()) {
    Rat prod = signs[static_cast<size_t>(key[0])] * signs[static_cast<size_t>(key[1])];
    auto it = needed.find(key[2]);
    if (it == needed.end())
      needed.emplace(key[2], prod);
    else if (it->second != prod)
      kept.set({key[0], key[1]}, key[2], Rat(0));
  }
  for (const auto& [z, s] : needed) signs[static_cast<size_t>(z)] = s;
  kept = project_skew_pair(kept);

  out.g = make_hom_lie(dim, std::move(kept), QMat::diag(signs));
  return out;
}

/// ad(x)u = [x,u], an action for central-type Hom-Lie algebras.
inline LieAction central_ad_action(const CentralLie& c) {
  TensorK rho({c.g.dim, c.g.dim}, c.g.dim);
  for (const auto& [key, v] : c.g.bracket.entries()) rho.add({key[0], key[1]}, key[2], v);
  return make_lie_action(c.g, c.g, std::move(rho));
}

inline QMat central_lie_valid_matrix(const CentralLie& c, Rng& rng) {
  QVec d = zero_vec(c.g.dim);
  for (int i = 0; i < c.g.dim; ++i) {
    bool banned = i == c.pivot;
    for (int z : c.center) banned = banned || i == z;
    if (!banned) d[static_cast<size_t>(i)] = rng.small_rat();
  }
  return QMat::diag(d);
}

struct LieOpInstance {
  LieAction action;
  QMat matrix;
  Rat kappa;
};

inline LieOpInstance random_valid_lie_op(Rng& rng) {
  for (int tries = 0; tries < 200; ++tries) {
    CentralLie c = random_central_lie(rng.range(3, 3), rng);
    LieAction act = central_ad_action(c);
    LieOpInstance inst{act, QMat(), Rat(0)};
    if (rng.below(4) == 0) {
      inst.matrix = QMat::identity(c.g.dim);
      inst.kappa = Rat(-1);
    } else {
      inst.matrix = central_lie_valid_matrix(c, rng);
      inst.kappa = sample_kappa(rng);
    }
    if (check_lie_o_operator(inst.matrix, inst.action, inst.kappa).pass()) return inst;
  }
  throw std::logic_error("random_valid_lie_op: no valid instance found");
}

// ---- deformation families (dimension 2) ----

/// g: [e1,e2,e1] = e2 with twist diag(1,-1); h: zero bracket, same twist;
/// theta = 0. Base matrix diag(0, c); every diagonal A_1 is then an
/// order-1 term, and a nonzero leading entry obstructs extension.
inline WeightedOOperator dim2_base_op(const Rat& c, const Rat& kappa = Rat(1)) {
  TensorK br({2, 2, 2}, 2);
  br.set({0, 1, 0}, 1, Rat(1));
  br.set({1, 0, 0}, 1, Rat(-1));
  QMat alpha = QMat::diag({Rat(1), Rat(-1)});
  HomLts g = make_hom_lts(2, std::move(br), alpha);
  HomLts h = zero_bracket_lts(2, alpha);
  Action act = make_action(g, h, TensorK({2, 2, 2}, 2));
  return make_o_operator(std::move(h), std::move(g), std::move(act),
                         QMat::diag({Rat(0), c}), kappa);
}

}  // namespace hlts::test
