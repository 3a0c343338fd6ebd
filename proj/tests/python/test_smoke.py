import json
import os

import pytest

import hlts

FIXTURES = os.environ.get("HLTS_FIXTURE_DIR", os.path.join(os.path.dirname(__file__), "..", "..", "fixtures"))


@pytest.fixture(scope="module")
def e4():
    return hlts.load(os.path.join(FIXTURES, "e4.json"))


def test_fixture_checks_pass(e4):
    for kappa in ("0", "1", "-2", "3/5"):
        res = hlts.run(["check", "o-op", "A", "--kappa", kappa], e4)
        assert res.exit_code == 0, res.text
    assert hlts.run(["check", "lts", "E4"], e4).exit_code == 0
    assert hlts.run(["check", "action", "adj"], e4).exit_code == 0


def test_cohomology_dims(e4):
    res = hlts.run(["cohomology", "A", "--degree", "1"], e4)
    assert res.exit_code == 0
    q = res.report["quantities"]["cohomology"]
    assert (q["dim_z"], q["dim_b"], q["dim_h"]) == (6, 0, 6)


def test_violations_surface_with_witnesses():
    ws = hlts.load(os.path.join(FIXTURES, "example53.json"))
    res = hlts.run(["check", "post-lts", "Ex53"], ws)
    assert res.exit_code == 1
    violations = res.report["checks"][0]["violations"]
    assert any(v["tag"] == "curly_twist" for v in violations)


def test_build_round_trips(e4):
    res = hlts.run(["build", "descent", "A", "--name", "D"], e4)
    built = hlts.loads(res.text)
    check = hlts.run(["check", "lts", "D"], built)
    assert check.exit_code == 0


def test_deform_extend_unextendable():
    ws = hlts.load(os.path.join(FIXTURES, "unextendable.json"))
    res = hlts.run(["deform", "extend", "Dbad"], ws)
    assert res.exit_code == 0
    assert res.report["quantities"]["extension"] is None


def test_input_errors_raise():
    with pytest.raises(ValueError):
        hlts.loads('{"algebras": {"X": {"dim": 1, "alpha": [["1/0"]], "bracket": []}}}')
    ws = hlts.loads("{}")
    with pytest.raises(ValueError):
        hlts.run(["check", "lts", "missing"], ws)


def test_workspace_equality_round_trip(e4):
    assert hlts.loads(e4.to_json()) == e4


def test_complete_skew():
    ws = hlts.loads(json.dumps({
        "algebras": {
            "E": {
                "dim": 2,
                "alpha": [[1, 0], [0, -1]],
                "bracket": [{"args": [0, 1, 0], "out": {"1": 1}}],
            }
        }
    }))
    done = hlts.complete_skew(ws)
    assert hlts.run(["check", "lts", "E"], done).exit_code == 0
