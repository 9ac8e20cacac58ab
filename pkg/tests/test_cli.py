import json

import pytest
from typer.testing import CliRunner

from rainbow_schur.main import app
from rainbow_schur.utils.report import RunReport
from rainbow_schur.verify import suites

runner = CliRunner()


def invoke_json(*args: str) -> dict:
    result = runner.invoke(app, [*args, "--json"])
    assert result.exit_code == 0, result.output
    return json.loads(result.stdout)


def test_count_c0():
    report = invoke_json("count", "--construction", "c0", "--n", "10")
    assert report["results"]["rainbow"] == 22
    assert report["results"]["total"] == 45
    assert report["results"]["fraction"]["exact"] == "22/45"
    assert report["command"][:2] == ["rainbow-schur", "count"]
    assert "--json" in report["command"]


def test_count_large_c0():
    report = invoke_json("count", "-c", "c0", "--n", "100000")
    assert 0.395 <= report["results"]["fraction"]["decimal"] <= 0.405


def test_count_profiles_and_triangles():
    report = invoke_json("count", "-c", "c0", "--n", "12", "--profiles", "--triangles")
    results = report["results"]
    assert len(results["r_profile"]) == 12
    assert sum(results["r_profile"]) == results["rainbow"]
    assert results["total_triangles"] == 286


def test_count_from_file(tmp_path):
    path = tmp_path / "two.txt"
    path.write_text("2\n1 2\n", encoding="utf-8")
    report = invoke_json("count", "--coloring", str(path))
    assert report["results"]["rainbow"] == 0


def test_report_round_trips():
    result = runner.invoke(app, ["count", "-c", "c0", "--n", "30", "--json"])
    report = RunReport.model_validate_json(result.stdout)
    assert report.model_dump_json(indent=2) == result.stdout.rstrip("\n")


def test_input_digest_is_stable():
    first = invoke_json("count", "-c", "c0", "--n", "20")
    second = invoke_json("count", "-c", "c0", "--n", "20")
    assert first["input_digest"] == second["input_digest"]
    other = invoke_json("count", "-c", "c0", "--n", "21")
    assert other["input_digest"] != first["input_digest"]


@pytest.mark.parametrize(
    "text",
    ["3\n1 2\n", "3\n1 2 9\n", "three\n1 2 3\n"],
)
def test_count_rejects_malformed_files(tmp_path, text):
    path = tmp_path / "bad.txt"
    path.write_text(text, encoding="utf-8")
    result = runner.invoke(app, ["count", "--coloring", str(path)])
    assert result.exit_code == 2


def test_count_argument_errors(tmp_path):
    path = tmp_path / "three.txt"
    path.write_text("3\n1 2 3\n", encoding="utf-8")
    assert runner.invoke(app, ["count", "--coloring", str(path), "--n", "4"]).exit_code == 2
    assert runner.invoke(app, ["count", "-c", "c0"]).exit_code == 2
    assert runner.invoke(app, ["count", "-c", "c0", "-f", str(path)]).exit_code == 2
    assert runner.invoke(app, ["count", "-c", "bogus", "--n", "5"]).exit_code == 2


def test_search_exhaustive():
    report = invoke_json("search", "exhaustive", "--n", "4")
    assert report["results"]["best_count"] == 4
    assert report["results"]["partial"] is False


@pytest.mark.parametrize(
    "args",
    [
        ["search", "exhaustive", "--n", "7"],
        ["search", "anneal", "--n", "30", "--iters", "300", "--restarts", "2"],
    ],
)
def test_search_table_output_with_progress(args):
    result = runner.invoke(app, args)
    assert result.exit_code == 0, result.output
    assert "best count" in result.stdout
    assert "Exhaustive search n=" not in result.stdout


def test_search_exhaustive_thread_independence():
    single = invoke_json("search", "exhaustive", "--n", "8", "--all-optima")
    double = invoke_json("search", "exhaustive", "--n", "8", "--all-optima", "--threads", "2")
    assert single["results"] == double["results"]


def test_search_exhaustive_budget(tmp_path):
    path = tmp_path / "state.json"
    report = invoke_json(
        "search", "exhaustive", "--n", "7", "--checkpoint", str(path), "--node-budget", "1"
    )
    assert report["results"]["partial"] is True
    assert path.exists()
    resumed = invoke_json("search", "exhaustive", "--n", "7", "--checkpoint", str(path), "--resume")
    assert resumed["results"]["partial"] is False


def test_search_exhaustive_corrupt_checkpoint(tmp_path):
    path = tmp_path / "state.json"
    path.write_text("{broken", encoding="utf-8")
    args = ["search", "exhaustive", "--n", "7", "--checkpoint", str(path), "--resume"]
    assert runner.invoke(app, args).exit_code == 3
    assert runner.invoke(app, ["search", "exhaustive", "--n", "7", "--resume"]).exit_code == 2


def test_search_anneal_is_reproducible():
    args = ("search", "anneal", "--n", "40", "--seed", "7", "--iters", "800", "--restarts", "2")
    first = invoke_json(*args)
    second = invoke_json(*args)
    assert first["results"] == second["results"]
    assert first["results"]["seed"] == 7


def test_bounds_simple():
    results = invoke_json("bounds", "--simple")["results"]
    assert results["newton"].startswith("0.56706")
    assert abs(float(results["fraction_bound"]) - 0.678434) < 1e-5


def test_bounds_printed_point():
    results = invoke_json("bounds", "--printed-point")["results"]
    assert abs(float(results["printed"]["fraction"]) - 0.66656) < 1e-4
    assert 0.655 <= results["solver"]["fraction"] <= 0.668


def test_bounds_fixed_gamma_and_region(tmp_path):
    path = tmp_path / "region.csv"
    results = invoke_json(
        "bounds", "--gamma", "0.077102", "--export-region", str(path), "--region-steps", "50"
    )["results"]
    assert results["feasible"] is True
    assert results["binding"]["disjunct"] == "first"
    assert len(path.read_text(encoding="utf-8").splitlines()) == 52


def test_bounds_optimize():
    results = invoke_json("bounds", "--optimize", "--grid-steps", "4000")["results"]
    assert results["best"]["fraction"] <= 0.66656 + 1e-3
    assert 0.05 <= results["best"]["gamma"] <= 0.11


def test_bounds_mode_errors():
    assert runner.invoke(app, ["bounds"]).exit_code == 2
    assert runner.invoke(app, ["bounds", "--simple", "--optimize"]).exit_code == 2
    assert runner.invoke(app, ["bounds", "--gamma", "0.5"]).exit_code == 2


def test_verify_passes():
    results = invoke_json("verify", "--family", "ccs", "--max-n", "5", "--exhaustive")["results"]
    assert results["passed"] is True
    assert results["trials"] == 3 + 9 + 27 + 81 + 243


def test_verify_failure_exits_with_witness(monkeypatch):
    monkeypatch.setattr(suites, "rz_objective", lambda x: -1)
    result = runner.invoke(app, ["verify", "--family", "rzF", "--trials", "3", "--max-n", "4"])
    assert result.exit_code == 1
    assert "Failing case" in result.output


def test_verify_unknown_family():
    assert runner.invoke(app, ["verify", "--family", "nope"]).exit_code == 2


def test_ap_modular():
    results = invoke_json("ap", "--k", "3", "--n", "6", "--construction", "mod")["results"]
    assert (results["rainbow_aps"], results["total_aps"]) == (6, 6)
    assert results["modular_formula"] == 6


def test_ap_totient():
    results = invoke_json("ap", "--k", "6", "--totient")["results"]
    assert results["totient_fraction"]["exact"] == "1/3"


def test_ap_equinumerous():
    results = invoke_json("ap", "--equinumerous-max", "2")["results"]
    assert (results["max_count"], results["formula"]) == (6, 6)


def test_ap_argument_errors():
    assert runner.invoke(app, ["ap", "--totient"]).exit_code == 2
    assert runner.invoke(app, ["ap", "--k", "4", "--n", "8", "-c", "mod:3"]).exit_code == 2


def test_version():
    result = runner.invoke(app, ["version"])
    assert result.exit_code == 0
    assert "Rainbow Schur v" in result.stdout
