#include "hlts/run.hpp"

#include <json.hpp>

namespace hlts {

namespace {

using ordered = nlohmann::ordered_json;

struct Parsed {
  std::vector<std::string> words;
  std::map<std::string, std::string> options;
};

Parsed parse_args(const std::vector<std::string>& args) {
  Parsed p;
  for (size_t i = 0; i < args.size(); ++i) {
    const std::string& a = args[i];
    if (a.rfind("--", 0) == 0) {
      std::string key = a.substr(2);
      std::string val;
      if (auto eq = key.find('='); eq != std::string::npos) {
        val = key.substr(eq + 1);
        key = key.substr(0, eq);
      } else {
        require(i + 1 < args.size(), "option --" + key + " needs a value");
        val = args[++i];
      }
      require(key == "kappa" || key == "degree" || key == "max-degree" || key == "name" || key == "seed",
              "unknown option --" + key);
      p.options[key] = val;
    } else {
      p.words.push_back(a);
    }
  }
  return p;
}

Rat option_rat(const Parsed& p, const std::string& key) {
  auto r = parse_rat(p.options.at(key));
  require(r.has_value(), "option --" + key + ": malformed rational '" + p.options.at(key) + "'");
  return *r;
}

int option_int(const Parsed& p, const std::string& key) {
  try {
    return std::stoi(p.options.at(key));
  } catch (...) {
    throw error("option --" + key + ": expected an integer");
  }
}

ordered scalar_json(const Rat& x) {
  if (x.get_den() == 1 && x.get_num().fits_slong_p()) return ordered(x.get_num().get_si());
  return ordered(to_string(x));
}

ordered vec_json(const QVec& v) {
  ordered out = ordered::array();
  for (const Rat& x : v) out.push_back(to_string(x));
  return out;
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

ordered tensor_entries_json(const TensorK& t) {
  ordered out = ordered::array();
  for (const auto& [key, c] : t.entries()) {
    ordered e = ordered::object();
    e["args"] = std::vector<int>(key.begin(), key.end() - 1);
    e["out"] = key.back();
    e["value"] = to_string(c);
    out.push_back(std::move(e));
  }
  return out;
}

ordered report_json(const ViolationReport& rep) {
  ordered out = ordered::array();
  for (const Violation& v : rep.violations()) {
    ordered j = ordered::object();
    j["tag"] = v.tag;
    j["witness"] = v.witness;
    j["lhs"] = vec_json(v.lhs);
    j["rhs"] = vec_json(v.rhs);
    out.push_back(std::move(j));
  }
  return out;
}

class ReportBuilder {
 public:
  explicit ReportBuilder(const std::vector<std::string>& args) {
    doc_["command"] = args;
    doc_["checks"] = ordered::array();
    doc_["quantities"] = ordered::object();
    text_ = "command:";
    for (const auto& a : args) text_ += " " + a;
    text_ += "\n";
  }

  void add_check(const std::string& name, const ViolationReport& rep) {
    ordered c = ordered::object();
    c["name"] = name;
    c["pass"] = rep.pass();
    c["violations"] = report_json(rep);
    doc_["checks"].push_back(std::move(c));
    text_ += name + ": " + (rep.pass() ? "PASS" : "FAIL (" + rep.summary() + ")") + "\n";
    if (!rep.pass()) failed_ = true;
  }

  void add_flag(const std::string& name, bool ok, bool counts_as_check = true) {
    doc_["quantities"][name] = ok;
    text_ += name + ": " + (ok ? "true" : "false") + "\n";
    if (counts_as_check && !ok) failed_ = true;
  }

  void add_quantity(const std::string& name, ordered value, const std::string& text_line) {
    doc_["quantities"][name] = std::move(value);
    if (!text_line.empty()) text_ += text_line + "\n";
  }

  /// Builds and pipelines consume the text output directly, so it carries
  /// the bare document instead of the check log.
  void override_text(std::string body) { text_override_ = std::move(body); }

  Report finish() {
    int code = failed_ ? 1 : 0;
    doc_["exit"] = code;
    text_ += "exit: " + std::to_string(code) + "\n";
    return Report{doc_.dump(2) + "\n", text_override_.empty() ? text_ : text_override_, code};
  }

 private:
  ordered doc_ = ordered::object();
  std::string text_;
  std::string text_override_;
  bool failed_ = false;
};

const HomLts& named_algebra(const Workspace& ws, const std::string& name) {
  auto it = ws.algebras.find(name);
  require(it != ws.algebras.end(), "unknown algebra '" + name + "'");
  return it->second;
}

Workspace build_result_algebra(const std::string& name, HomLts g) {
  Workspace out;
  out.algebras.emplace(name, std::move(g));
  return out;
}

Workspace build_result_post(const std::string& name, HomPostLts p) {
  Workspace out;
  out.post_lts.emplace(name, std::move(p));
  return out;
}

Report emit_workspace(ReportBuilder& rb, const Workspace& built) {
  std::string body = print_workspace(built);
  rb.add_quantity("workspace", ordered::parse(body), "");
  rb.override_text(body);
  return rb.finish();
}

}  // namespace

Report run_command(const std::vector<std::string>& args, const Workspace& ws) {
  Parsed p = parse_args(args);
  require(!p.words.empty(), "missing command");
  ReportBuilder rb(args);
  const std::string& cmd = p.words[0];

  if (cmd == "check") {
    require(p.words.size() == 3, "usage: check {lts|lie|rep|action|o-op|post-lts|post-lie|morphism} <name>");
    const std::string& what = p.words[1];
    const std::string& name = p.words[2];
    if (what == "lts") {
      rb.add_check("lts:" + name, check_hom_lts(named_algebra(ws, name)));
    } else if (what == "lie") {
      auto it = ws.lie_algebras.find(name);
      require(it != ws.lie_algebras.end(), "unknown Lie algebra '" + name + "'");
      rb.add_check("lie:" + name, check_hom_lie(it->second));
    } else if (what == "rep") {
      rb.add_check("rep:" + name, check_representation(resolve_action(ws, name).rep()));
    } else if (what == "action") {
      rb.add_check("action:" + name, check_action(resolve_action(ws, name)));
    } else if (what == "o-op") {
      WeightedOOperator op = resolve_map(ws, name);
      if (p.options.count("kappa")) op.kappa = option_rat(p, "kappa");
      rb.add_check("o-op:" + name, check_o_operator(op));
    } else if (what == "post-lts") {
      auto it = ws.post_lts.find(name);
      require(it != ws.post_lts.end(), "unknown post system '" + name + "'");
      rb.add_check("post-lts:" + name, check_post_lts(it->second));
    } else if (what == "post-lie") {
      auto it = ws.post_lie.find(name);
      require(it != ws.post_lie.end(), "unknown post algebra '" + name + "'");
      rb.add_check("post-lie:" + name, check_post_lie(it->second));
    } else if (what == "morphism") {
      auto it = ws.maps.find(name);
      require(it != ws.maps.end(), "unknown map '" + name + "'");
      const MapRecord& rec = it->second;
      if (ws.algebras.count(rec.from)) {
        rb.add_check("morphism:" + name,
                     check_lts_morphism(ws.algebras.at(rec.from), ws.algebras.at(rec.to), rec.matrix));
      } else {
        rb.add_check("morphism:" + name, check_post_lts_morphism(ws.post_lts.at(rec.from),
                                                                 ws.post_lts.at(rec.to), rec.matrix));
      }
    } else {
      throw error("unknown check target '" + what + "'");
    }
    return rb.finish();
  }

  if (cmd == "build") {
    require(p.words.size() == 3, "usage: build {semidirect|descent|adjacent|post-from-o|lts-from-lie|post-lts-from-post-lie} <name>");
    const std::string& what = p.words[1];
    const std::string& name = p.words[2];
    std::string out_name = p.options.count("name") ? p.options.at("name") : name + "_" + what;
    if (what == "semidirect") {
      Action act = resolve_action(ws, name);
      Rat kappa = p.options.count("kappa") ? option_rat(p, "kappa") : Rat(0);
      return emit_workspace(rb, build_result_algebra(out_name, semidirect_product(act.algebra, act.module, act, kappa)));
    }
    if (what == "descent") return emit_workspace(rb, build_result_algebra(out_name, descent_lts(resolve_map(ws, name))));
    if (what == "adjacent") {
      auto it = ws.post_lts.find(name);
      require(it != ws.post_lts.end(), "unknown post system '" + name + "'");
      return emit_workspace(rb, build_result_algebra(out_name, adjacent_lts(it->second)));
    }
    if (what == "post-from-o")
      return emit_workspace(rb, build_result_post(out_name, post_lts_from_o(resolve_map(ws, name))));
    if (what == "lts-from-lie") {
      auto it = ws.lie_algebras.find(name);
      require(it != ws.lie_algebras.end(), "unknown Lie algebra '" + name + "'");
      return emit_workspace(rb, build_result_algebra(out_name, lts_from_hom_lie(it->second)));
    }
    if (what == "post-lts-from-post-lie") {
      auto it = ws.post_lie.find(name);
      require(it != ws.post_lie.end(), "unknown post algebra '" + name + "'");
      return emit_workspace(rb, build_result_post(out_name, post_lts_from_post_lie(it->second)));
    }
    throw error("unknown build target '" + what + "'");
  }

  if (cmd == "cohomology") {
    require(p.words.size() == 2, "usage: cohomology <map> --degree n [--max-degree m]");
    require(p.options.count("degree"), "cohomology requires --degree");
    int degree = option_int(p, "degree");
    int cap = p.options.count("max-degree") ? option_int(p, "max-degree") : 2;
    if (degree > cap) cap = degree;
    CochainComplex cc(resolve_map(ws, p.words[1]), cap);
    CohomologyDims d = cc.dims(degree);
    ordered q = ordered::object();
    q["degree"] = d.degree;
    q["dim_z"] = d.dim_z;
    q["dim_b"] = d.dim_b ? ordered(*d.dim_b) : ordered(nullptr);
    q["dim_h"] = d.dim_h ? ordered(*d.dim_h) : ordered(nullptr);
    q["regular_source"] = d.regular_source;
    q["regular_target"] = d.regular_target;
    std::string line = "degree " + std::to_string(d.degree) + ": dimZ=" + std::to_string(d.dim_z);
    if (d.dim_b) {
      line += " dimB=" + std::to_string(*d.dim_b) + " dimH=" + std::to_string(*d.dim_h);
    } else {
      q["note"] = "no degree-0 differential: regularity required";
      line += " dimB=unavailable (regularity required)";
    }
    rb.add_quantity("cohomology", std::move(q), line);
    return rb.finish();
  }

  if (cmd == "deform") {
    require(p.words.size() == 3, "usage: deform {check|obstruct|extend} <deformation>");
    const std::string& what = p.words[1];
    TruncatedDeformation d = resolve_deformation(ws, p.words[2]);
    if (what == "check") {
      rb.add_check("deform:" + p.words[2], check_n_order(d));
      return rb.finish();
    }
    ViolationReport base = check_n_order(d);
    rb.add_check("deform:" + p.words[2], base);
    if (!base.pass()) return rb.finish();
    if (what == "obstruct") {
      Cochain obs = obstruction(d);
      rb.add_quantity("obstruction", tensor_entries_json(obs.tensor),
                      obs.tensor.is_zero() ? "obstruction: 0" : "obstruction: nonzero");
      rb.add_quantity("obstruction_is_zero", ordered(obs.tensor.is_zero()), "");
      return rb.finish();
    }
    if (what == "extend") {
      std::optional<QMat> x = extend(d);
      if (x) {
        TruncatedDeformation ext = d;
        ext.terms.push_back(*x);
        ViolationReport re = check_n_order(ext);
        rb.add_quantity("extension", matrix_json(*x), "extension found");
        rb.add_check("reverify", re);
      } else {
        rb.add_quantity("extension", ordered(nullptr),
                        "no extension: obstruction class nonzero in the degree-2 cohomology");
      }
      return rb.finish();
    }
    throw error("unknown deform subcommand '" + what + "'");
  }

  if (cmd == "bridge") {
    require(p.words.size() == 3 && p.words[1] == "diagram", "usage: bridge diagram <post-lie>");
    auto it = ws.post_lie.find(p.words[2]);
    require(it != ws.post_lie.end(), "unknown post algebra '" + p.words[2] + "'");
    ViolationReport pv = check_post_lie(it->second);
    rb.add_check("post-lie:" + p.words[2], pv);
    if (pv.pass()) {
      rb.add_flag("diagram_commutes", diagram_check(it->second));
      rb.add_flag("action_level_match", diagram_action_match(it->second), /*counts_as_check=*/false);
    }
    return rb.finish();
  }

  if (cmd == "lint") {
    require(p.words.size() == 2 && p.words[1] == "complete-skew", "usage: lint complete-skew");
    Workspace completed = lint_complete_skew(ws);
    return emit_workspace(rb, completed);
  }

  throw error("unknown command '" + cmd + "'");
}

}  // namespace hlts
