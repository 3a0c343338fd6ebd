#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hlts/run.hpp"
#include "support/generators.hpp"

using namespace hlts;
using namespace hlts::test;

TEST_CASE("fixture document resolves fully") {
  Workspace ws = load_fixture("e4.json");
  CHECK(ws.algebras.size() == 1);
  CHECK(ws.actions.size() == 1);
  CHECK(ws.maps.size() == 1);
  CHECK(ws.deformations.size() == 1);
  CHECK(ws.algebras.at("E4").basis_labels[3] == "eps4");
  WeightedOOperator op = resolve_map(ws, "A");
  CHECK(op.kappa == 1);
  CHECK(check_o_operator(op).pass());
}

TEST_CASE("empty and malformed documents") {
  CHECK(parse_workspace("{}") == Workspace{});
  CHECK(parse_workspace("null") == Workspace{});
  CHECK_THROWS_AS((void)parse_workspace("["), error);
  CHECK_THROWS_AS((void)parse_workspace("[1,2]"), error);
}

TEST_CASE("zero denominator is rejected with its location") {
  std::string doc = R"({"algebras": {"X": {"dim": 1, "alpha": [["1/0"]], "bracket": []}}})";
  try {
    (void)parse_workspace(doc);
    CHECK(false);
  } catch (const error& e) {
    std::string msg = e.what();
    CHECK(msg.find("algebras.X.alpha") != std::string::npos);
    CHECK(msg.find("1/0") != std::string::npos);
  }
}

TEST_CASE("unknown references are named") {
  std::string doc = R"({"actions": {"a": {"algebra": "nope", "module": "nope", "theta": []}}})";
  CHECK_THROWS_WITH_AS((void)parse_workspace(doc),
                       "at actions.a.algebra: unknown algebra 'nope'", error);
}

TEST_CASE("dimension mismatches are rejected") {
  std::string doc = R"({"algebras": {"X": {"dim": 2, "alpha": [[1,0],[0,1]],
    "bracket": [{"args": [0,1,2], "out": {"0": 1}}]}}})";
  CHECK_THROWS_AS((void)parse_workspace(doc), error);
}

TEST_CASE("round-trip through print and parse") {
  for (const char* name : {"e4.json", "example53.json", "unextendable.json"}) {
    Workspace ws = load_fixture(name);
    CHECK(parse_workspace(print_workspace(ws)) == ws);
  }

  // generated workspace with every section populated
  Rng rng(3);
  Workspace ws;
  CentralLts c = random_central_lts(3, rng);
  ws.algebras.emplace("g", c.g);
  ws.algebras.emplace("h", zero_bracket_lts(2, QMat::diag({Rat(1), rat(-1, 2)})));
  Action adj = adjoint_action(c.g);
  ws.actions.emplace("adj", ActionRecord{"g", "g", adj.theta});
  ws.maps.emplace("m", MapRecord{"g", "g", "adj", rat(3, 5), central_valid_matrix(c, rng)});
  ws.deformations.emplace("d", DeformationRecord{"m", {QMat(3, 3)}});
  CentralLie cl = random_central_lie(3, rng);
  ws.lie_algebras.emplace("L", cl.g);
  ws.lie_actions.emplace("r", LieActionRecord{"L", "L", central_ad_action(cl).rho});
  ws.post_lie.emplace("q", make_post_lie(2, TensorK({2, 2}, 2), TensorK({2, 2}, 2), QMat::identity(2)));
  ws.post_lts.emplace("p", load_fixture("example53.json").post_lts.at("Ex53"));
  CHECK(parse_workspace(print_workspace(ws)) == ws);
}

TEST_CASE("reports are byte-identical across runs") {
  Workspace ws = load_fixture("example53.json");
  Report a = run_command({"check", "post-lts", "Ex53"}, ws);
  Report b = run_command({"check", "post-lts", "Ex53"}, ws);
  CHECK(a.machine == b.machine);
  CHECK(a.text == b.text);
  CHECK(a.exit_code == 1);
}

TEST_CASE("command dispatch and exit codes") {
  Workspace ws = load_fixture("e4.json");
  CHECK(run_command({"check", "lts", "E4"}, ws).exit_code == 0);
  CHECK(run_command({"check", "o-op", "A", "--kappa", "3/5"}, ws).exit_code == 0);
  CHECK(run_command({"cohomology", "A", "--degree", "1"}, ws).exit_code == 0);
  CHECK(run_command({"deform", "check", "D1"}, ws).exit_code == 0);
  CHECK(run_command({"build", "descent", "A"}, ws).exit_code == 0);
  CHECK_THROWS_AS((void)run_command({"check", "lts", "missing"}, ws), error);
  CHECK_THROWS_AS((void)run_command({"frobnicate"}, ws), error);
  CHECK_THROWS_AS((void)run_command({"cohomology", "A"}, ws), error);

  // a failing check exits 1
  Workspace bad = ws;
  {
    HomLts broken = bad.algebras.at("E4");
    broken.bracket.set({1, 0, 0}, 3, Rat(0));
    bad.algebras.erase("E4");
    bad.algebras.emplace("E4", broken);
  }
  CHECK(run_command({"check", "lts", "E4"}, bad).exit_code == 1);
}

TEST_CASE("descent build emits a loadable workspace") {
  Workspace ws = load_fixture("e4.json");
  Report r = run_command({"build", "descent", "A", "--name", "D"}, ws);
  // the text body of a build is itself a workspace document
  Workspace built = parse_workspace(r.text);
  CHECK(built.algebras.count("D") == 1);
  CHECK(check_hom_lts(built.algebras.at("D")).pass());
}

TEST_CASE("unextendable deformation reports cleanly") {
  Workspace ws = load_fixture("unextendable.json");
  Report r = run_command({"deform", "extend", "Dbad"}, ws);
  CHECK(r.exit_code == 0);  // the computation succeeded
  CHECK(r.text.find("no extension") != std::string::npos);

  Report o = run_command({"deform", "obstruct", "Dbad"}, ws);
  CHECK(o.exit_code == 0);
  CHECK(o.text.find("obstruction: nonzero") != std::string::npos);
}

TEST_CASE("skew and cyclic completion") {
  // half of the fixture's bracket: completion restores the other half
  std::string doc = R"({"algebras": {"E": {"dim": 4,
    "alpha": [[1,0,0,0],[0,-1,0,0],[0,0,1,0],[0,0,0,-1]],
    "bracket": [{"args": [0,1,0], "out": {"3": 1}}]}}})";
  Workspace ws = parse_workspace(doc);
  Workspace done = lint_complete_skew(ws);
  CHECK(done.algebras.at("E").bracket.coeff({1, 0, 0}, 3) == -1);
  CHECK(check_hom_lts(done.algebras.at("E")).pass());

  // cyclic orbit with one absent member gets filled
  std::string doc2 = R"({"algebras": {"C": {"dim": 3,
    "alpha": [[1,0,0],[0,1,0],[0,0,1]],
    "bracket": [{"args": [0,1,2], "out": {"0": 1}},
                {"args": [2,0,1], "out": {"0": 2}}]}}})";
  Workspace done2 = lint_complete_skew(parse_workspace(doc2));
  const TensorK& t = done2.algebras.at("C").bracket;
  CHECK(t.coeff({1, 2, 0}, 0) == -3);
  CHECK(t.coeff({1, 0, 2}, 0) == -1);  // skew fills too

  // lint through the command surface
  Report r = run_command({"lint", "complete-skew"}, ws);
  CHECK(r.exit_code == 0);
  CHECK(parse_workspace(r.text) == done);
}
