"""Command line contract: exit codes, output shapes, determinism."""

import json
import subprocess
import sys

from vfcoho.reports import strip_timing

CLI = [sys.executable, "-m", "vfcoho.cli"]


def run_cli(*args, env_extra=None):
    import os

    env = dict(os.environ)
    if env_extra:
        env.update(env_extra)
    return subprocess.run(CLI + list(args), capture_output=True, text=True,
                          env=env)


def test_verify_passes_on_a_small_suite():
    out = run_cli("verify", "crossed-hom", "--dim", "1")
    assert out.returncode == 0
    assert "all passed" in out.stdout


def test_verify_unknown_suite_is_a_usage_error():
    assert run_cli("verify", "bogus").returncode == 2


def test_dimension_must_be_positive():
    assert run_cli("verify", "crossed-hom", "--dim", "0").returncode == 2


def test_table_weil_golden_rows():
    out = run_cli("table", "weil", "--dim", "1")
    assert out.returncode == 0
    lines = [ln.split() for ln in out.stdout.strip().splitlines()[1:]]
    assert [(int(q), int(d)) for q, d in lines] == [(0, 1), (3, 1)]


def test_table_vey_with_degree_filter():
    out = run_cli("table", "vey", "--dim", "2", "--degree", "5")
    assert out.returncode == 0
    assert "u1 | c1^2" in out.stdout
    assert "u1 | c2" in out.stdout


def test_table_haefliger(golden):
    out = run_cli("table", "haefliger", "--dim", "2")
    assert out.returncode == 0
    for degree, dim in golden["haefliger"]["2"].items():
        assert f"H^{degree}(V_T)" in out.stdout
        assert str(dim) in out.stdout


def test_table_range_guard():
    out = run_cli("table", "weil", "--dim", "6")
    assert out.returncode != 0


def test_report_with_no_suites_is_an_empty_document():
    out = run_cli("report", "--suites", "--dim", "2", "--format", "json")
    assert out.returncode == 0
    doc = json.loads(out.stdout)
    assert doc["checks"] == []
    assert doc["schema_version"]


def test_json_reports_are_deterministic():
    args = ("verify", "crossed-hom", "--dim", "1", "--format", "json")
    first = strip_timing(json.loads(run_cli(*args).stdout))
    second = strip_timing(json.loads(run_cli(*args).stdout))
    assert json.dumps(first, sort_keys=True) == json.dumps(second, sort_keys=True)


def test_environment_variables_provide_defaults():
    out = run_cli("verify", "crossed-hom", "--format", "json",
                  env_extra={"VFCOHO_DIM": "1"})
    doc = json.loads(out.stdout)
    assert doc["config"]["dim"] == 1


def test_flag_overrides_environment():
    out = run_cli("verify", "crossed-hom", "--dim", "2", "--format", "json",
                  env_extra={"VFCOHO_DIM": "1"})
    assert json.loads(out.stdout)["config"]["dim"] == 2


def test_out_flag_writes_the_document(tmp_path):
    target = tmp_path / "report.json"
    out = run_cli("verify", "crossed-hom", "--dim", "1", "--format", "json",
                  "--out", str(target))
    assert out.returncode == 0
    doc = json.loads(target.read_text())
    assert "sections" in doc


def test_planted_defect_fails_the_run_with_witness():
    out = run_cli("report", "--suites", "extensions", "--dim", "2",
                  "--planted", "--format", "json")
    assert out.returncode == 1
    doc = json.loads(out.stdout)
    failed = [c for c in doc["checks"] if c["status"] == "fail"]
    assert [c["name"] for c in failed] == ["extension:jacobi:planted-noncocycle"]
    assert all("witness" in c for c in failed)
