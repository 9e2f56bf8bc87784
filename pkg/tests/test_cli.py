import io
import json
import subprocess
import sys

import pytest

from packbound.cli import EXIT_OK, EXIT_USAGE, EXIT_VIOLATED, run


def call(argv, stdin=""):
    out, err = io.StringIO(), io.StringIO()
    code = run(argv, stdin=io.StringIO(stdin), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def test_invariants_k2():
    code, out, _ = call(["invariants", "--k", "2"], "A_\n")
    assert code == EXIT_OK
    assert json.loads(out) == {"rho": 1, "rho_o": 2, "L2": 2, "gamma": 1, "gamma_x2": 2}


def test_invariants_edge_list_and_witness():
    code, out, _ = call(["invariants", "--k", "2", "--witness"], "4 4\n0 1\n1 2\n2 3\n3 0\n")
    row = json.loads(out)
    assert code == EXIT_OK and row["gamma_x2"] == 3 and len(row["witness"]["gamma_x2"]) == 3


def test_invariants_exhaustive_same_values():
    _, a, _ = call(["invariants"], "Cr\nD~{\n")
    _, b, _ = call(["invariants", "--exhaustive"], "Cr\nD~{\n")
    assert a == b and len(a.splitlines()) == 2


def test_invariants_gamma_x2_undefined_with_isolated_vertex():
    _, out, _ = call(["invariants", "--k", "1"], "B?\n")
    assert json.loads(out)["gamma_x2"] is None


def test_verify_all_connected():
    code, out, _ = call(["verify", "--n", "5", "--all-connected"])
    summary = json.loads(out)
    assert code == EXIT_OK
    assert summary["graphs_processed"] == 21 and summary["violations"] == 0


def test_verify_output_is_byte_identical():
    assert call(["verify", "--n", "4", "--all-connected"]) == call(["verify", "--n", "4", "--all-connected"])


def test_verify_reports(tmp_path):
    report, table = tmp_path / "v.jsonl", tmp_path / "t.csv"
    code, _, _ = call(["verify", "--n", "4", "--report", str(report), "--csv", str(table)])
    assert code == EXIT_OK
    lines = report.read_text().splitlines()
    assert len(lines) == 6 * 13 and all(json.loads(ln)["claim"] for ln in lines)
    assert table.read_text().startswith("claim,graph6")


def test_verify_counts_malformed_lines():
    code, out, _ = call(["verify"], "A_\n!!\nBw\n")
    s = json.loads(out)
    assert code == EXIT_OK and s["graphs_processed"] == 2 and s["malformed"] == 1


def test_verify_exit_code_on_violation(monkeypatch):
    import packbound.verifier as ver

    monkeypatch.setattr(ver._Invariants, "rho", lambda self: 99)
    code, _, _ = call(["verify", "--n", "3"])
    assert code == EXIT_VIOLATED


def test_family_recognize_gamma():
    code, out, _ = call(["family", "--recognize", "gamma"], "Cl\n")
    row = json.loads(out)
    assert code == EXIT_OK and row["member"]
    assert row["witness"] == {"family": "gamma", "k": 1, "H": [[0, 1]], "pn": {"0": [3], "1": [2]}}


def test_family_generate_then_recognize():
    code, g6, _ = call(["family", "--generate", "gamma", "--t", "2", "--k", "2", "--seed", "4"])
    assert code == EXIT_OK
    _, out, _ = call(["family", "--recognize", "gamma"], g6)
    assert json.loads(out)["member"]


def test_enumerate_and_hunt():
    _, out, _ = call(["enumerate", "--n", "5"])
    assert len(out.splitlines()) == 21
    _, out, _ = call(["enumerate", "--n", "4", "--upto"])
    assert len(out.splitlines()) == 1 + 1 + 2 + 6
    _, out, _ = call(["hunt", "--claim", "thm3.3", "--n", "4", "--format", "text"])
    assert out.split() == ["Cr", "C~"]


def test_bounds_formats():
    code, out, _ = call(["bounds", "--format", "csv"], "Cr\n")
    assert code == EXIT_OK and out.startswith("graph,bound,")
    code, out, _ = call(["bounds"], "Cr\n")
    rows = [json.loads(ln) for ln in out.splitlines()]
    assert {r["bound"] for r in rows} >= {"l2_pendant", "open_packing_min_degree"}


@pytest.mark.parametrize(
    "argv, stdin",
    [
        (["nonsense"], ""),
        (["invariants"], "A\n"),
        (["invariants", "--input", "/no/such/file"], ""),
        (["enumerate", "--n", "9"], ""),
        (["verify", "--all-connected"], ""),
        (["hunt", "--claim", "bogus", "--n", "3"], ""),
        (["family", "--recognize", "omega"], "A_\n"),
        (["family", "--recognize", "gamma"], "@\n"),
        (["invariants", "--node-limit", "0"], "A_\n"),
    ],
)
def test_usage_errors(argv, stdin):
    code, _, err = call(argv, stdin)
    assert code == EXIT_USAGE and err


def test_malformed_input_reports_line_number():
    _, _, err = call(["invariants"], "A_\nA\n")
    assert "line 2" in err


def test_node_limit_env(monkeypatch):
    monkeypatch.setenv("PACKBOUND_NODE_LIMIT", "1")
    code, _, err = call(["invariants"], "Es\\o\n")
    assert code == EXIT_USAGE and "node limit" in err


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "packbound", "invariants", "--k", "2"],
                         input="A_\n", capture_output=True, text=True, check=True)
    assert json.loads(res.stdout)["L2"] == 2
