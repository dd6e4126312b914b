"""CLI behavior: formats, exit codes, determinism, output files."""

import json
import os
import subprocess
import sys

import pytest

PKG_ROOT = os.path.join(os.path.dirname(__file__), os.pardir, "src")


def run_cli(*args, env_extra=None):
    env = dict(os.environ)
    env["PYTHONPATH"] = PKG_ROOT + os.pathsep + env.get("PYTHONPATH", "")
    if env_extra:
        env.update(env_extra)
    return subprocess.run(
        [sys.executable, "-m", "kummer_spin.cli", *args],
        capture_output=True, text=True, env=env)


def test_gamma_text_output():
    result = run_cli("verify", "gamma", "--n", "5")
    assert result.returncode == 0
    assert "[PASS] gamma:snf_factors (rem-Z-w)" in result.stdout
    assert "result: ok" in result.stdout


def test_json_format_and_schema():
    result = run_cli("verify", "gamma", "--n", "3", "--format", "json")
    assert result.returncode == 0
    body = json.loads(result.stdout)
    assert body["schema"] == 1
    assert body["ok"] is True
    assert body["suites"][0]["suite"] == "gamma"
    for check in body["suites"][0]["checks"]:
        assert set(check) == {"name", "ref", "status", "detail"}
        assert check["status"] in ("pass", "fail", "skipped")


def test_determinism_same_seed():
    a = run_cli("verify", "modn", "--n", "4", "--seed", "9", "--format", "json")
    b = run_cli("verify", "modn", "--n", "4", "--seed", "9", "--format", "json")
    assert a.stdout == b.stdout
    assert a.returncode == b.returncode == 0


def test_env_seed_override():
    with_env = run_cli("verify", "gamma", env_extra={"KUMMER_SPIN_SEED": "42"})
    explicit = run_cli("verify", "gamma", "--seed", "42")
    assert with_env.stdout == explicit.stdout


def test_out_file(tmp_path):
    target = tmp_path / "report.json"
    result = run_cli("verify", "gamma", "--format", "json", "--out", str(target))
    assert result.returncode == 0
    assert result.stdout == ""
    body = json.loads(target.read_text())
    assert body["schema"] == 1


def test_unknown_subcommand_exits_2():
    result = run_cli("verify", "nonsense")
    assert result.returncode == 2
    result = run_cli("frobnicate")
    assert result.returncode == 2


def test_bad_h_coords_exit_2():
    result = run_cli("verify", "weil", "--h", "1,2,3")
    assert result.returncode == 2


def test_timings_go_to_stderr_only():
    result = run_cli("verify", "gamma")
    assert "elapsed" in result.stderr
    assert "elapsed" not in result.stdout


def test_inadmissible_h_exits_2_cleanly():
    result = run_cli("verify", "weil", "--n", "3", "--h", "1,1,0,0,0,0,1,3")
    assert result.returncode == 2
    assert "admissible" in result.stderr
    assert "Traceback" not in result.stderr


def test_non_degree_two_h_skips_commutant():
    result = run_cli("verify", "weil", "--n", "3", "--h", "1,2,0,0,0,0,2,3")
    assert result.returncode == 0
    assert "[SKIP] weil:commutant_preserves_hermitian" in result.stdout


def test_degenerate_with_h_exits_2():
    result = run_cli("verify", "cayley", "--n", "3", "--with-h", "1,0,0,0,0,0")
    assert result.returncode == 2
