import json

import pytest

from sparsedet.cli import figure_series, main


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def by_name(reports):
    return {r["name"]: r for r in reports}


def test_bound_k3_example(capsys):
    code, out = run(capsys, "bound", "--n", "1000", "--k", "3")
    assert code == 0
    r = by_name(json.loads(out))
    assert (r["hadamard"]["mantissa"], r["hadamard"]["exponent"]) == (3.636, 238)
    assert (r["ryser"]["mantissa"], r["ryser"]["exponent"]) == (2.3145, 238)
    assert r["ryser"]["detail"]["lam"] == "2/333"
    assert (r["pair"]["mantissa"], r["pair"]["exponent"]) == (1.0844, 230)
    assert r["construction"]["kind"] == "lower"
    assert r["design_lower_rate"]["kind"] == "lower"


def test_bound_q_row_given(capsys):
    _, out = run(capsys, "bound", "--n", "1000", "--k", "17", "--q", "8")
    r = by_name(json.loads(out))
    assert (r["q_row"]["mantissa"], r["q_row"]["exponent"]) == (9.0074, 613)


def test_bound_rates_only_and_delta(capsys):
    _, out = run(capsys, "bound", "--k", "4", "--delta", "0.01", "--k-tilde", "3.5")
    r = by_name(json.loads(out))
    assert r["perturbed_rate"]["mantissa"] == 1.9892
    assert r["conjectured_rate"]["kind"] == "conjectural-upper"
    assert "hadamard" not in r


def test_json_round_trip_is_byte_identical(capsys):
    for argv in (["bound", "--n", "50", "--k", "5", "--delta", "0.1"],
                 ["schedule", "--n", "200", "--m", "100", "--k", "17"],
                 ["search", "--class", "S", "--n", "5", "--k", "2"]):
        _, out = run(capsys, *argv)
        assert json.dumps(json.loads(out), indent=2) + "\n" == out


def test_cli_is_deterministic(capsys):
    argv = ["search", "--class", "R", "--n", "6", "--k", "3", "--threads", "2"]
    assert run(capsys, *argv) == run(capsys, *argv)


def test_schedule_csv(capsys, tmp_path):
    path = tmp_path / "counts.csv"
    code, out = run(capsys, "schedule", "--n", "1000", "--k", "17", "--csv", str(path))
    assert code == 0 and json.loads(out)["counts"]["1"] == 57
    lines = path.read_text().splitlines()
    assert lines[0] == "i,a_i" and lines[1] == "17,4"


def test_construct(capsys):
    _, out = run(capsys, "construct", "fano", "--t", "2")
    assert out.splitlines()[0] == "14 14"
    _, out = run(capsys, "construct", "s", "--n", "3", "--a", "1", "--k", "2")
    assert out == "3 3\n2 1 1\n1 2 1\n1 1 2\n"
    _, out = run(capsys, "construct", "B10")
    assert out.startswith("10 10\n")


def test_figure_k49(capsys):
    _, out = run(capsys, "figure", "--k", "49")
    rows = [ln.split(",") for ln in out.splitlines()]
    assert rows[0] == ["series", "q", "value", "gap"]
    assert rows[1][1:] == ["1", "7.0000000000", "0.0000000000"]
    peak = rows[-1]
    assert peak[0] == "peak" and peak[1] == "23"
    assert round(float(peak[3]), 4) == 0.0069


def test_figure_series_beta_line_above_peak():
    fs = figure_series(17, with_beta=True)
    assert fs.peak[0] == 8
    assert [q for q, _ in fs.points] == list(range(1, 18))
    assert fs.points[0][1] == 0.0
    assert fs.reference_line > max(g for _, g in fs.points)


def test_verify_subset_exit_codes(capsys, tmp_path):
    summary = tmp_path / "s.json"
    code, out = run(capsys, "verify", "--criteria", "1", "2", "3", "--json", str(summary))
    assert code == 0
    assert "PASS criterion 3" in out
    assert all(s["ok"] for s in json.loads(summary.read_text()))


def test_verify_reports_failure(capsys):
    code, out = run(capsys, "verify", "--criteria", "6")
    assert "computed=" in out and "expected=" in out
    assert code == (1 if "FAIL" in out else 0)


def test_invalid_params_exit_2(capsys):
    assert main(["bound", "--n", "3", "--k", "5"]) == 2
