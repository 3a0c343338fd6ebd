#include "hlts/workspace.hpp"

#include <json.hpp>

namespace hlts {

namespace {

using nlohmann::json;
using ordered = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw error("at " + path + ": " + what);
}

Rat parse_scalar(const json& j, const std::string& path) {
  if (j.is_number_integer()) return Rat(mpz_class(std::to_string(j.get<long long>())));
  if (j.is_string()) {
    auto r = parse_rat(j.get<std::string>());
    if (!r) fail(path, "malformed rational '" + j.get<std::string>() + "'");
    return *r;
  }
  fail(path, "expected an integer or a rational string");
}

int parse_count(const json& j, const std::string& path) {
  if (!j.is_number_integer() || j.get<long long>() < 0) fail(path, "expected a nonnegative integer");
  return static_cast<int>(j.get<long long>());
}

QMat parse_matrix(const json& j, int rows, int cols, const std::string& path) {
  if (!j.is_array() || static_cast<int>(j.size()) != rows) fail(path, "expected " + std::to_string(rows) + " rows");
  QMat m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    const json& row = j[static_cast<size_t>(i)];
    if (!row.is_array() || static_cast<int>(row.size()) != cols)
      fail(path + "[" + std::to_string(i) + "]", "expected " + std::to_string(cols) + " entries");
    for (int c = 0; c < cols; ++c)
      m.at(i, c) = parse_scalar(row[static_cast<size_t>(c)], path + "[" + std::to_string(i) + "][" + std::to_string(c) + "]");
  }
  return m;
}

TensorK parse_tensor(const json& j, std::vector<int> arg_dims, int out_dim, const std::string& path) {
  TensorK t(std::move(arg_dims), out_dim);
  if (j.is_null()) return t;
  if (!j.is_array()) fail(path, "expected an entry list");
  for (size_t e = 0; e < j.size(); ++e) {
    const std::string epath = path + "[" + std::to_string(e) + "]";
    const json& entry = j[e];
    if (!entry.is_object() || !entry.contains("args") || !entry.contains("out"))
      fail(epath, "expected {args, out}");
    const json& args = entry["args"];
    if (!args.is_array() || static_cast<int>(args.size()) != t.arity())
      fail(epath + ".args", "expected " + std::to_string(t.arity()) + " indices");
    std::vector<int> idx;
    for (size_t a = 0; a < args.size(); ++a) {
      int v = parse_count(args[a], epath + ".args[" + std::to_string(a) + "]");
      if (v >= t.arg_dims()[a]) fail(epath + ".args[" + std::to_string(a) + "]", "index out of range");
      idx.push_back(v);
    }
    const json& out = entry["out"];
    if (!out.is_object()) fail(epath + ".out", "expected an index->scalar object");
    for (auto it = out.begin(); it != out.end(); ++it) {
      int l = -1;
      try {
        size_t pos = 0;
        l = std::stoi(it.key(), &pos);
        if (pos != it.key().size()) l = -1;
      } catch (...) {
      }
      if (l < 0 || l >= out_dim) fail(epath + ".out", "output index '" + it.key() + "' out of range");
      Rat v = parse_scalar(it.value(), epath + ".out." + it.key());
      if (t.coeff(idx, l) != 0) fail(epath, "duplicate entry for the same indices");
      t.set(idx, l, std::move(v));
    }
  }
  return t;
}

std::vector<std::string> parse_labels(const json& j, int dim, const std::string& path) {
  if (!j.is_array() || static_cast<int>(j.size()) != dim) fail(path, "expected " + std::to_string(dim) + " labels");
  std::vector<std::string> out;
  for (const auto& s : j) {
    if (!s.is_string()) fail(path, "labels must be strings");
    out.push_back(s.get<std::string>());
  }
  return out;
}

ordered scalar_json(const Rat& x) {
  if (x.get_den() == 1 && x.get_num().fits_slong_p()) return ordered(x.get_num().get_si());
  return ordered(to_string(x));
}

ordered matrix_json(const QMat& m) {
  ordered rows = ordered::array();
  for (int i = 0; i < m.rows(); ++i) {
    ordered row = ordered::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(scalar_json(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

ordered tensor_json(const TensorK& t) {
  ordered entries = ordered::array();
  // group consecutive keys sharing the args part
  std::vector<int> cur_args;
  ordered cur;
  for (const auto& [key, c] : t.entries()) {
    std::vector<int> args(key.begin(), key.end() - 1);
    if (args != cur_args || cur.is_null()) {
      if (!cur.is_null()) entries.push_back(cur);
      cur = ordered::object();
      cur["args"] = args;
      cur["out"] = ordered::object();
      cur_args = args;
    }
    cur["out"][std::to_string(key.back())] = scalar_json(c);
  }
  if (!cur.is_null()) entries.push_back(cur);
  return entries;
}

template <class F>
void parse_section(const json& doc, const std::string& key, const F& f) {
  if (!doc.contains(key)) return;
  const json& sec = doc[key];
  if (!sec.is_object()) fail(key, "expected an object of named entries");
  for (auto it = sec.begin(); it != sec.end(); ++it) f(it.key(), it.value());
}

TensorK complete_triple(const TensorK& in) {
  TensorK t = in;
  const int d = t.out_dim();
  bool changed = true;
  auto present = [&](int i, int j, int k) { return !is_zero(t.slice({i, j, k})); };
  while (changed) {
    changed = false;
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        for (int k = 0; k < d; ++k) {
          if (i != j && present(i, j, k) && !present(j, i, k)) {
            QVec v = t.slice({i, j, k});
            for (int l = 0; l < d; ++l)
              if (v[static_cast<size_t>(l)] != 0) t.set({j, i, k}, l, -v[static_cast<size_t>(l)]);
            changed = true;
          }
          // orbit {(i,j,k), (k,i,j), (j,k,i)}: fill a single absent member
          std::vector<std::vector<int>> orbit = {{i, j, k}, {k, i, j}, {j, k, i}};
          if (orbit[0] == orbit[1] || orbit[0] == orbit[2] || orbit[1] == orbit[2]) continue;
          int absent = -1, n_absent = 0;
          for (int o = 0; o < 3; ++o)
            if (!present(orbit[static_cast<size_t>(o)][0], orbit[static_cast<size_t>(o)][1],
                         orbit[static_cast<size_t>(o)][2])) {
              absent = o;
              ++n_absent;
            }
          if (n_absent != 1) continue;
          QVec sum = zero_vec(d);
          for (int o = 0; o < 3; ++o)
            if (o != absent) add_into(sum, t.slice(orbit[static_cast<size_t>(o)]));
          for (int l = 0; l < d; ++l)
            if (sum[static_cast<size_t>(l)] != 0)
              t.set(orbit[static_cast<size_t>(absent)], l, -sum[static_cast<size_t>(l)]);
          if (!is_zero(sum)) changed = true;
        }
  }
  return t;
}

TensorK complete_pair(const TensorK& in) {
  TensorK t = in;
  const int d = t.out_dim();
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      if (i == j) continue;
      if (!is_zero(t.slice({i, j})) && is_zero(t.slice({j, i}))) {
        QVec v = t.slice({i, j});
        for (int l = 0; l < d; ++l)
          if (v[static_cast<size_t>(l)] != 0) t.set({j, i}, l, -v[static_cast<size_t>(l)]);
      }
    }
  return t;
}

}  // namespace

Workspace parse_workspace(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw error(std::string("parse error: ") + e.what());
  }
  if (doc.is_null()) return {};
  if (!doc.is_object()) throw error("workspace document must be a JSON object");

  Workspace ws;
  parse_section(doc, "algebras", [&](const std::string& name, const json& j) {
    const std::string path = "algebras." + name;
    int dim = parse_count(j.value("dim", json()), path + ".dim");
    QMat alpha = parse_matrix(j.value("alpha", json()), dim, dim, path + ".alpha");
    TensorK br = parse_tensor(j.value("bracket", json()), {dim, dim, dim}, dim, path + ".bracket");
    std::vector<std::string> labels;
    if (j.contains("basis")) labels = parse_labels(j["basis"], dim, path + ".basis");
    try {
      ws.algebras.emplace(name, make_hom_lts(dim, std::move(br), std::move(alpha), std::move(labels)));
    } catch (const error& e) {
      fail(path, e.what());
    }
  });

  parse_section(doc, "lie_algebras", [&](const std::string& name, const json& j) {
    const std::string path = "lie_algebras." + name;
    int dim = parse_count(j.value("dim", json()), path + ".dim");
    QMat alpha = parse_matrix(j.value("alpha", json()), dim, dim, path + ".alpha");
    TensorK br = parse_tensor(j.value("bracket", json()), {dim, dim}, dim, path + ".bracket");
    try {
      ws.lie_algebras.emplace(name, make_hom_lie(dim, std::move(br), std::move(alpha)));
    } catch (const error& e) {
      fail(path, e.what());
    }
  });

  parse_section(doc, "actions", [&](const std::string& name, const json& j) {
    const std::string path = "actions." + name;
    std::string ga = j.value("algebra", std::string());
    std::string mo = j.value("module", std::string());
    auto gi = ws.algebras.find(ga);
    auto mi = ws.algebras.find(mo);
    if (gi == ws.algebras.end()) fail(path + ".algebra", "unknown algebra '" + ga + "'");
    if (mi == ws.algebras.end()) fail(path + ".module", "unknown algebra '" + mo + "'");
    TensorK theta = parse_tensor(j.value("theta", json()),
                                 {gi->second.dim, gi->second.dim, mi->second.dim}, mi->second.dim,
                                 path + ".theta");
    ws.actions.emplace(name, ActionRecord{ga, mo, std::move(theta)});
  });

  parse_section(doc, "lie_actions", [&](const std::string& name, const json& j) {
    const std::string path = "lie_actions." + name;
    std::string ga = j.value("algebra", std::string());
    std::string mo = j.value("module", std::string());
    auto gi = ws.lie_algebras.find(ga);
    auto mi = ws.lie_algebras.find(mo);
    if (gi == ws.lie_algebras.end()) fail(path + ".algebra", "unknown Lie algebra '" + ga + "'");
    if (mi == ws.lie_algebras.end()) fail(path + ".module", "unknown Lie algebra '" + mo + "'");
    TensorK rho = parse_tensor(j.value("rho", json()), {gi->second.dim, mi->second.dim},
                               mi->second.dim, path + ".rho");
    ws.lie_actions.emplace(name, LieActionRecord{ga, mo, std::move(rho)});
  });

  parse_section(doc, "post_lts", [&](const std::string& name, const json& j) {
    const std::string path = "post_lts." + name;
    int dim = parse_count(j.value("dim", json()), path + ".dim");
    QMat alpha = parse_matrix(j.value("alpha", json()), dim, dim, path + ".alpha");
    TensorK floor = parse_tensor(j.value("floor", json()), {dim, dim, dim}, dim, path + ".floor");
    TensorK curly = parse_tensor(j.value("curly", json()), {dim, dim, dim}, dim, path + ".curly");
    try {
      ws.post_lts.emplace(name, make_post_lts(dim, std::move(floor), std::move(curly), std::move(alpha)));
    } catch (const error& e) {
      fail(path, e.what());
    }
  });

  parse_section(doc, "post_lie", [&](const std::string& name, const json& j) {
    const std::string path = "post_lie." + name;
    int dim = parse_count(j.value("dim", json()), path + ".dim");
    QMat alpha = parse_matrix(j.value("alpha", json()), dim, dim, path + ".alpha");
    TensorK br = parse_tensor(j.value("bracket", json()), {dim, dim}, dim, path + ".bracket");
    TensorK star = parse_tensor(j.value("star", json()), {dim, dim}, dim, path + ".star");
    try {
      ws.post_lie.emplace(name, make_post_lie(dim, std::move(br), std::move(star), std::move(alpha)));
    } catch (const error& e) {
      fail(path, e.what());
    }
  });

  parse_section(doc, "maps", [&](const std::string& name, const json& j) {
    const std::string path = "maps." + name;
    MapRecord rec;
    rec.from = j.value("from", std::string());
    rec.to = j.value("to", std::string());
    int from_dim = -1, to_dim = -1;
    if (ws.algebras.count(rec.from) && ws.algebras.count(rec.to)) {
      from_dim = ws.algebras.at(rec.from).dim;
      to_dim = ws.algebras.at(rec.to).dim;
    } else if (ws.post_lts.count(rec.from) && ws.post_lts.count(rec.to)) {
      from_dim = ws.post_lts.at(rec.from).dim;
      to_dim = ws.post_lts.at(rec.to).dim;
    } else {
      fail(path, "'from' and 'to' must both name algebras or both name post systems");
    }
    rec.matrix = parse_matrix(j.value("matrix", json()), to_dim, from_dim, path + ".matrix");
    if (j.contains("kappa")) rec.kappa = parse_scalar(j["kappa"], path + ".kappa");
    if (j.contains("action")) {
      std::string act = j["action"].get<std::string>();
      auto ai = ws.actions.find(act);
      if (ai == ws.actions.end()) fail(path + ".action", "unknown action '" + act + "'");
      if (ai->second.algebra != rec.to || ai->second.module != rec.from)
        fail(path + ".action", "action must act by '" + rec.to + "' on '" + rec.from + "'");
      rec.action = act;
    }
    ws.maps.emplace(name, std::move(rec));
  });

  parse_section(doc, "deformations", [&](const std::string& name, const json& j) {
    const std::string path = "deformations." + name;
    DeformationRecord rec;
    rec.map = j.value("map", std::string());
    auto mi = ws.maps.find(rec.map);
    if (mi == ws.maps.end()) fail(path + ".map", "unknown map '" + rec.map + "'");
    if (!mi->second.action || !mi->second.kappa)
      fail(path + ".map", "deformation base map needs an action and a weight");
    const json& terms = j.value("terms", json());
    if (!terms.is_array()) fail(path + ".terms", "expected a list of matrices");
    for (size_t i = 0; i < terms.size(); ++i)
      rec.terms.push_back(parse_matrix(terms[i], mi->second.matrix.rows(), mi->second.matrix.cols(),
                                       path + ".terms[" + std::to_string(i) + "]"));
    ws.deformations.emplace(name, std::move(rec));
  });

  for (auto it = doc.begin(); it != doc.end(); ++it) {
    static const std::vector<std::string> known = {"algebras",  "lie_algebras", "actions",
                                                   "lie_actions", "maps",        "post_lts",
                                                   "post_lie",  "deformations"};
    bool ok = false;
    for (const auto& k : known) ok = ok || k == it.key();
    if (!ok) fail(it.key(), "unknown workspace section");
  }
  return ws;
}

std::string print_workspace(const Workspace& ws) {
  ordered doc = ordered::object();
  if (!ws.algebras.empty()) {
    ordered sec = ordered::object();
    for (const auto& [name, g] : ws.algebras) {
      ordered j = ordered::object();
      j["dim"] = g.dim;
      if (!g.basis_labels.empty()) j["basis"] = g.basis_labels;
      j["alpha"] = matrix_json(g.alpha);
      j["bracket"] = tensor_json(g.bracket);
      sec[name] = std::move(j);
    }
    doc["algebras"] = std::move(sec);
  }
  if (!ws.lie_algebras.empty()) {
    ordered sec = ordered::object();
    for (const auto& [name, g] : ws.lie_algebras) {
      ordered j = ordered::object();
      j["dim"] = g.dim;
      j["alpha"] = matrix_json(g.alpha);
      j["bracket"] = tensor_json(g.bracket);
      sec[name] = std::move(j);
    }
    doc["lie_algebras"] = std::move(sec);
  }
  if (!ws.actions.empty()) {
    ordered sec = ordered::object();
    for (const auto& [name, a] : ws.actions) {
      ordered j = ordered::object();
      j["algebra"] = a.algebra;
      j["module"] = a.module;
      j["theta"] = tensor_json(a.theta);
      sec[name] = std::move(j);
    }
    doc["actions"] = std::move(sec);
  }
  if (!ws.lie_actions.empty()) {
    ordered sec = ordered::object();
    for (const auto& [name, a] : ws.lie_actions) {
      ordered j = ordered::object();
      j["algebra"] = a.algebra;
      j["module"] = a.module;
      j["rho"] = tensor_json(a.rho);
      sec[name] = std::move(j);
    }
    doc["lie_actions"] = std::move(sec);
  }
  if (!ws.maps.empty()) {
    ordered sec = ordered::object();
    for (const auto& [name, m] : ws.maps) {
      ordered j = ordered::object();
      j["from"] = m.from;
      j["to"] = m.to;
      if (m.action) j["action"] = *m.action;
      if (m.kappa) j["kappa"] = scalar_json(*m.kappa);
      j["matrix"] = matrix_json(m.matrix);
      sec[name] = std::move(j);
    }
    doc["maps"] = std::move(sec);
  }
  if (!ws.post_lts.empty()) {
    ordered sec = ordered::object();
    for (const auto& [name, p] : ws.post_lts) {
      ordered j = ordered::object();
      j["dim"] = p.dim;
      j["alpha"] = matrix_json(p.alpha);
      j["floor"] = tensor_json(p.floor_bracket);
      j["curly"] = tensor_json(p.curly);
      sec[name] = std::move(j);
    }
    doc["post_lts"] = std::move(sec);
  }
  if (!ws.post_lie.empty()) {
    ordered sec = ordered::object();
    for (const auto& [name, p] : ws.post_lie) {
      ordered j = ordered::object();
      j["dim"] = p.dim;
      j["alpha"] = matrix_json(p.alpha);
      j["bracket"] = tensor_json(p.bracket);
      j["star"] = tensor_json(p.star);
      sec[name] = std::move(j);
    }
    doc["post_lie"] = std::move(sec);
  }
  if (!ws.deformations.empty()) {
    ordered sec = ordered::object();
    for (const auto& [name, d] : ws.deformations) {
      ordered j = ordered::object();
      j["map"] = d.map;
      ordered terms = ordered::array();
      for (const QMat& t : d.terms) terms.push_back(matrix_json(t));
      j["terms"] = std::move(terms);
      sec[name] = std::move(j);
    }
    doc["deformations"] = std::move(sec);
  }
  return doc.dump(2) + "\n";
}

Action resolve_action(const Workspace& ws, const std::string& name) {
  auto it = ws.actions.find(name);
  require(it != ws.actions.end(), "unknown action '" + name + "'");
  return make_action(ws.algebras.at(it->second.algebra), ws.algebras.at(it->second.module),
                     it->second.theta);
}

LieAction resolve_lie_action(const Workspace& ws, const std::string& name) {
  auto it = ws.lie_actions.find(name);
  require(it != ws.lie_actions.end(), "unknown Lie action '" + name + "'");
  return make_lie_action(ws.lie_algebras.at(it->second.algebra),
                         ws.lie_algebras.at(it->second.module), it->second.rho);
}

WeightedOOperator resolve_map(const Workspace& ws, const std::string& name) {
  auto it = ws.maps.find(name);
  require(it != ws.maps.end(), "unknown map '" + name + "'");
  const MapRecord& rec = it->second;
  require(rec.action.has_value(), "map '" + name + "' has no action attached");
  require(rec.kappa.has_value(), "map '" + name + "' has no weight attached");
  require(ws.algebras.count(rec.from) && ws.algebras.count(rec.to),
          "map '" + name + "' must connect triple systems");
  return make_o_operator(ws.algebras.at(rec.from), ws.algebras.at(rec.to),
                         resolve_action(ws, *rec.action), rec.matrix, *rec.kappa);
}

TruncatedDeformation resolve_deformation(const Workspace& ws, const std::string& name) {
  auto it = ws.deformations.find(name);
  require(it != ws.deformations.end(), "unknown deformation '" + name + "'");
  return make_deformation(resolve_map(ws, it->second.map), it->second.terms);
}

Workspace lint_complete_skew(const Workspace& ws) {
  Workspace out = ws;
  for (auto& [name, g] : out.algebras) g.bracket = complete_triple(g.bracket);
  for (auto& [name, g] : out.lie_algebras) g.bracket = complete_pair(g.bracket);
  for (auto& [name, p] : out.post_lts) p.floor_bracket = complete_triple(p.floor_bracket);
  for (auto& [name, p] : out.post_lie) p.bracket = complete_pair(p.bracket);
  return out;
}

}  // namespace hlts
