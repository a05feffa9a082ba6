import io
import json

import pytest

from liestrata.cli import run


def call(*argv, env_seed=None, monkeypatch=None):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def call_json(*argv):
    code, out, err = call(*argv, "--json")
    assert code == 0, err
    return json.loads(out)


def value(fig):
    assert set(fig) == {"value", "exact"}
    return fig["value"]


def walk_numbers(obj, inside_fig=False):
    """Yield (number, exact flag or None) for every number in a report."""
    if isinstance(obj, dict):
        if set(obj) == {"value", "exact"}:
            yield obj["value"], obj["exact"]
            return
        for v in obj.values():
            yield from walk_numbers(v)
    elif isinstance(obj, list):
        for v in obj:
            yield from walk_numbers(v)
    elif isinstance(obj, (int, float)) and not isinstance(obj, bool):
        yield obj, None


def test_analyze_duflo():
    r = call_json("analyze", "--catalog", "duflo", "--point", "0,1,0,0")["result"]
    assert value(r["dim_stabilizer"]) == 2 and value(r["dim_derived"]) == 0
    assert r["stabilizer_type"] == "ABELIAN"


def test_analyze_matrix_point_prints_both_sides():
    r = call_json("analyze", "--catalog", "gl", "--n", "3", "--matrix-point", "diag:1,1,2")["result"]
    assert value(r["dim_stabilizer"]) == 5 and value(r["dim_derived"]) == 3
    assert r["point"]["matrix"] == [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "2"]]
    assert r["point"]["covector"] == ["1", "0", "0", "0", "1", "0", "0", "0", "2"]


def test_analyze_zero_in_sl2():
    r = call_json("analyze", "--catalog", "sl", "--n", "2", "--point", "0,0,0")["result"]
    assert value(r["dim_stabilizer"]) == 3


def test_verify_prop1_eig_curve():
    r = call_json(
        "verify-prop1", "--catalog", "gl", "--n", "3", "--curve", "eig:1+t,1+t,2", "--samples", "0,1/7,1/3"
    )["result"]
    assert r["all_pairings_zero"] and all(r["in_stratum"])
    assert all(value(p["value"]) == "0" for p in r["pairings"])


def test_verify_prop1_coadjoint_curve():
    r = call_json(
        "verify-prop1", "--catalog", "heisenberg", "--n", "3", "--point", "1,2,0",
        "--curve", "coadjoint:1,1,0", "--samples", "1,2",
    )["result"]
    assert r["all_pairings_zero"]


def test_verify_prop1_curve_json(tmp_path):
    path = tmp_path / "c.json"
    path.write_text(json.dumps({"degree": 1, "coeffs": [["0", "1", "0", "0"], ["0", "0", "1", "0"]]}))
    r = call_json("verify-prop1", "--catalog", "duflo", "--curve", f"json:{path}", "--one-sided", "--samples", "1/2")
    assert r["result"]["one_sided"] and r["result"]["all_pairings_zero"]


def test_stratum_exit_is_an_input_error():
    code, _, err = call("verify-prop1", "--catalog", "gl", "--n", "3", "--curve", "eig:1,1+t,2", "--samples", "1/3")
    assert code == 2 and "STRATUM_EXIT" in err


def test_index_heisenberg():
    r = call_json("index", "--catalog", "heisenberg", "--n", "3")["result"]
    assert value(r["ind"]) == 1


def test_sheet_scan_default_rows():
    r = call_json("sheet-scan", "--max-n", "4")["result"]
    assert value(r["row_count"]) == 12 == len(r["rows"])
    assert all(row["sheet_eq"] for row in r["rows"])


def test_sheet_scan_all_types():
    r = call_json("sheet-scan", "--max-n", "3", "--all-types")["result"]
    assert len(r["rows"]) == 3 + 6 and r["all_sheet_eq"]


def test_inequalities_provenance():
    r = call_json("inequalities", "--catalog", "gl", "--n", "3", "--matrix-point", "diag:1,1,2")["result"]
    assert r["stratum_dim_provenance"] == "CLOSED_FORM_SL"
    assert value(r["slack"]) == 0 and r["slack"]["exact"]
    r = call_json("inequalities", "--catalog", "su", "--n", "2", "--point", "1,0,0")["result"]
    assert r["stratum_dim_provenance"] == "SEMISIMPLE"
    r = call_json("inequalities", "--catalog", "duflo", "--point", "0,1,0,0")["result"]
    assert r["stratum_dim_provenance"] == "ESTIMATED"
    assert value(r["slack"]) == 1 and not r["slack"]["exact"]
    assert r["non_linearizable_witness"]


def test_inequalities_given_dimension():
    r = call_json("inequalities", "--catalog", "duflo", "--point", "0,1,0,0", "--stratum-dim", "3")["result"]
    assert r["stratum_dim_provenance"] == "GIVEN" and r["slack"]["exact"]


def test_check_sheeteq_su3():
    # the realified image of i diag(1, 1, -2) has covector coordinates from the trace form
    r = call_json(
        "check-sheeteq", "--catalog", "su", "--n", "3",
        "--matrix-point", "rows:0,0,0,-1,0,0;0,0,0,0,-1,0;0,0,0,0,0,2;1,0,0,0,0,0;0,1,0,0,0,0;0,0,-2,0,0,0",
    )["result"]
    assert r["sheet_eq"] and value(r["dim_derived"]) == 3 and value(r["codim_sheet"]) == 3
    assert r["method"] == "semisimple"


def test_check_sheeteq_jordan():
    r = call_json("check-sheeteq", "--catalog", "sl", "--n", "3", "--matrix-point", "jordan:0:2,1")["result"]
    assert r["sheet_eq"] and r["statements_agree"] and value(r["dim_sheet"]) == 5


def test_nilpotent_table():
    r = call_json("nilpotent-table", "--max-n", "4")["result"]
    assert len(r["rows"]) == 1 + 2 + 3 + 5 and r["all_hold"]


def test_catalog_commands():
    r = call_json("catalog", "list")["result"]
    assert [e["name"] for e in r["entries"]][:2] == ["gl", "sl"]
    r = call_json("catalog", "dump", "--catalog", "aff1")["result"]
    assert r["algebra"]["brackets"] == [{"i": 0, "j": 1, "coeffs": {"1": "1"}}]


def test_algebra_json_input(tmp_path):
    path = tmp_path / "h3.json"
    path.write_text(json.dumps({"dim": 3, "basis": ["x", "y", "z"], "brackets": [{"i": 0, "j": 1, "coeffs": {"2": "1"}}]}))
    r = call_json("index", "--algebra", str(path))["result"]
    assert value(r["ind"]) == 1


def test_non_jacobi_algebra_rejected(tmp_path):
    path = tmp_path / "bad.json"
    bad = {"dim": 3, "brackets": [{"i": 0, "j": 1, "coeffs": {"1": "1"}}, {"i": 1, "j": 2, "coeffs": {"0": "1"}}]}
    path.write_text(json.dumps(bad))
    assert call("index", "--algebra", str(path))[0] == 2


@pytest.mark.parametrize(
    "argv",
    [
        ["analyze", "--catalog", "gl", "--n", "3", "--point", "1.5,0"],
        ["analyze", "--catalog", "sl", "--n", "3", "--matrix-point", "diag:1,1,2"],
        ["analyze", "--catalog", "gl", "--n", "2", "--point", "1,2"],
        ["analyze", "--catalog", "duflo"],
        ["analyze", "--catalog", "bogus", "--point", "1"],
        ["analyze", "--point", "1"],
        ["verify-prop1", "--catalog", "gl", "--n", "2", "--curve", "eig:0.5t,1"],
        ["check-sheeteq", "--catalog", "heisenberg", "--n", "3", "--point", "0,0,1"],
        ["nilpotent-table", "--max-n", "9"],
        ["--seed", "-1", "index", "--catalog", "aff1"],
    ],
)
def test_input_errors_exit_2(argv):
    assert call(*argv)[0] == 2


def test_invariant_violation_exit_3(monkeypatch):
    from liestrata import cli
    from liestrata.errors import InvariantViolation

    def boom(args):
        raise InvariantViolation("forced")

    monkeypatch.setitem(cli.COMMANDS, "index", boom)
    assert call("index", "--catalog", "aff1")[0] == 3


def test_convergence_failure_exit_4(monkeypatch):
    from liestrata import estimator
    from liestrata.errors import ConvergenceError

    def fail(*a, **k):
        raise ConvergenceError("forced")

    monkeypatch.setattr(estimator, "estimate_stratum_dim", fail)
    assert call("inequalities", "--catalog", "duflo", "--point", "0,1,0,0")[0] == 4


def test_seed_is_recorded_and_env_default(monkeypatch):
    assert value(call_json("index", "--catalog", "aff1")["seed"]) == 0
    monkeypatch.setenv("LIESTRATA_SEED", "17")
    assert value(call_json("index", "--catalog", "aff1")["seed"]) == 17
    assert value(call_json("index", "--catalog", "aff1", "--seed", "5")["seed"]) == 5
    assert value(call_json("--seed", "6", "index", "--catalog", "aff1")["seed"]) == 6


def test_json_out_matches_stdout(tmp_path):
    path = tmp_path / "out.json"
    code, out, _ = call("index", "--catalog", "gl", "--n", "2", "--json", "--json-out", str(path))
    assert code == 0 and path.read_text() == out


@pytest.mark.parametrize(
    "argv",
    [
        ["inequalities", "--catalog", "duflo", "--point", "0,1,0,0"],
        ["analyze", "--catalog", "gl", "--n", "3", "--matrix-point", "diag:1,1,2"],
        ["sheet-scan", "--max-n", "3"],
        ["index", "--catalog", "sl", "--n", "3"],
    ],
)
def test_numbers_are_flagged(argv):
    data = call_json(*argv)
    for x, exact in walk_numbers(data):
        assert exact is not None, f"unwrapped number {x!r}"
        if isinstance(x, float):
            assert exact is False


def test_table_mirrors_json_fields():
    code, text, _ = call("analyze", "--catalog", "duflo", "--point", "0,1,0,0")
    assert code == 0
    data = call_json("analyze", "--catalog", "duflo", "--point", "0,1,0,0")
    for key in data["result"]:
        assert f"result.{key}" in text
