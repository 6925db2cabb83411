"""End-to-end checks of the command line: payloads, formats, exit codes."""

from __future__ import annotations

import json
import os
import subprocess
import sys
from pathlib import Path

import pytest

from volrigid.cli import run

try:
    import jsonschema
except ImportError:  # pragma: no cover
    jsonschema = None

ROOT = Path(__file__).resolve().parents[1]
DATA = Path(__file__).parent / "data"
FIXTURE = str(DATA / "volume_census_sample.csv")


def invoke(capsys, *argv: str) -> tuple[int, str, str]:
    code = run(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def invoke_json(capsys, *argv: str):
    code, out, err = invoke(capsys, *argv)
    assert code == 0, err
    return json.loads(out)


def test_qf_gap_spec_example(capsys):
    payload = invoke_json(
        capsys, "qf", "gap", "--form", "1,1,1", "--q0", "13", "--limit", "100"
    )
    assert payload["gap"] == 6


def test_qf_values(capsys):
    payload = invoke_json(
        capsys, "qf", "values", "--form", "1,0,12", "--limit", "15"
    )
    assert payload["values"] == [1, 12, 13]
    assert payload["count"] == 3


def test_qf_reps_primitive_filter(capsys):
    full = invoke_json(capsys, "qf", "reps", "--form", "1,0,12", "--value", "4")
    assert [r["primitive"] for r in full["representations"]] == [False, False]
    prim = invoke_json(
        capsys, "qf", "reps", "--form", "1,0,12", "--value", "4", "--primitive"
    )
    assert prim["representations"] == []


def test_prime_seq_m004(capsys):
    payload = invoke_json(
        capsys, "prime-seq", "--family", "m004", "-g", "1", "--count", "2",
        "--cap", "10000",
    )
    assert payload["residue"] == 241
    assert payload["modulus"] == 660
    assert [w["value"] for w in payload["witnesses"]] == [241, 2221]
    assert all(w["verified"] for w in payload["witnesses"])


def test_prime_seq_verify_only(capsys):
    payload = invoke_json(
        capsys, "prime-seq", "--family", "m125", "-g", "1", "--avoid", "3,11",
        "--verify-only", "10",
    )
    witness = payload["witnesses"][0]
    assert witness["value"] == 10
    assert witness["representation"] == [1, 2]
    assert witness["verified"]


def test_nz_constants_keys(capsys):
    payload = invoke_json(capsys, "nz", "constants")
    assert abs(payload["v_omega"] - 2.029883) < 1e-6
    assert abs(payload["V8"] - 3.663862) < 1e-6


def test_nz_eval_routes_agree(capsys):
    values = [
        invoke_json(
            capsys, "nz", "eval", "--series", "m004", "-a", "5", "-b", "1",
            "--route", route,
        )["delta_v"]
        for route in ("generic", "explicit", "polar")
    ]
    assert max(values) - min(values) < 1e-10


def test_nz_wl_coeffs(capsys):
    payload = invoke_json(capsys, "nz", "wl-coeffs")
    assert abs(payload["c1"]["re"] + 2) < 1e-8
    assert abs(payload["c1"]["im"] - 2) < 1e-8
    assert abs(payload["c3"]["im"] - 1 / 6) < 1e-8


def test_certify(capsys):
    payload = invoke_json(capsys, "certify", "--manifold", "m125", "-a", "1", "-b", "2")
    assert payload["n_q0"] == 8
    assert payload["bound"] == "2"
    assert payload["valid"] is False


def test_mutant_census_spec_example(capsys):
    payload = invoke_json(capsys, "mutant", "census", "-n", "3")
    assert payload["class_count"] == 4


def test_mutant_graph(capsys):
    payload = invoke_json(capsys, "mutant", "graph", "--word", "00101")
    assert payload["canonical"] == "00101"
    assert payload["cycle_labels"] == [4, 8, 8]
    assert payload["apex_label"] == 5


def test_mutant_classes(capsys):
    payload = invoke_json(capsys, "mutant", "classes", "-n", "4")
    assert payload["classes"] == ["0000", "0001", "0011", "0101", "0111", "1111"]


def test_census_hist_golden_byte_identical(capsys):
    code, out, err = invoke(capsys, "census", "hist", FIXTURE)
    assert code == 0
    golden = (DATA / "volume_census_sample_hist.json").read_text(encoding="utf-8")
    assert out == golden


def test_census_hist_reports_bad_lines_on_stderr(tmp_path, capsys):
    bad = tmp_path / "bad.csv"
    bad.write_text("A,1.5\nB,oops\n", encoding="utf-8")
    code, out, err = invoke(capsys, "census", "hist", str(bad))
    assert code == 0
    assert "line 2" in err
    assert json.loads(out)[0]["names"] == ["A"]


def test_output_determinism(capsys):
    first = invoke(capsys, "mutant", "census", "-n", "10")
    second = invoke(capsys, "mutant", "census", "-n", "10")
    assert first == second


def test_csv_and_table_formats(capsys):
    code, out, _ = invoke(
        capsys, "qf", "gap", "--form", "1,1,1", "--q0", "13", "--limit", "100",
        "--format", "csv",
    )
    assert code == 0
    assert "key,value" in out and "gap,6" in out
    code, out, _ = invoke(
        capsys, "nz", "constants", "--format", "table"
    )
    assert code == 0
    assert "v_omega" in out and "2.02988321282" in out


def test_exit_code_usage_error(capsys):
    code, _, _ = invoke(capsys, "no-such-command")
    assert code == 2
    code, _, _ = invoke(capsys, "qf", "values", "--form", "1,0", "--limit", "5")
    assert code == 2


def test_exit_code_domain_error(capsys):
    code, _, err = invoke(capsys, "qf", "values", "--form", "1,0,-1", "--limit", "5")
    assert code == 1
    assert "error:" in err
    code, _, _ = invoke(capsys, "census", "hist", "/definitely/not/here.csv")
    assert code == 1


def test_env_cap_override(capsys, monkeypatch):
    monkeypatch.setenv("VOLRIGID_CAP", "100")
    payload = invoke_json(
        capsys, "prime-seq", "--family", "m004", "-g", "1", "--count", "1"
    )
    assert payload["cap"] == 100
    assert payload["truncated"] is True
    monkeypatch.setenv("VOLRIGID_CAP", "not-a-number")
    code, _, err = invoke(capsys, "prime-seq", "--family", "m004", "-g", "1")
    assert code == 1
    assert "VOLRIGID_CAP" in err


def test_shards_do_not_change_output(capsys):
    plain = invoke(
        capsys, "prime-seq", "--family", "m004", "-g", "1", "--count", "3",
        "--cap", "10000",
    )
    sharded = invoke(
        capsys, "prime-seq", "--family", "m004", "-g", "1", "--count", "3",
        "--cap", "10000", "--shards", "5",
    )
    assert plain == sharded


@pytest.mark.skipif(jsonschema is None, reason="jsonschema not installed")
def test_json_outputs_validate_against_shipped_schema(capsys):
    schema = json.loads((ROOT / "docs" / "cli-schema.json").read_text())
    validator = jsonschema.Draft202012Validator(schema)
    invocations = [
        ("qf", "values", "--form", "1,0,12", "--limit", "50"),
        ("qf", "gap", "--form", "1,1,1", "--q0", "13", "--limit", "100"),
        ("qf", "reps", "--form", "1,0,1", "--value", "25"),
        ("prime-seq", "--family", "m004", "-g", "1", "--count", "1", "--cap", "1000"),
        ("nz", "eval", "--series", "m129", "-a", "3", "-b", "1"),
        ("nz", "check", "--points", "20"),
        ("nz", "wl-coeffs"),
        ("nz", "constants"),
        ("certify", "--manifold", "m004", "-a", "7", "-b", "4"),
        ("mutant", "census", "-n", "4"),
        ("mutant", "graph", "--word", "111"),
        ("mutant", "classes", "-n", "5"),
        ("census", "hist", FIXTURE),
    ]
    for argv in invocations:
        payload = invoke_json(capsys, *argv)
        errors = list(validator.iter_errors(payload))
        assert errors == [], (argv, [e.message for e in errors])


def test_module_entry_point_subprocess():
    env = os.environ.copy()
    env["PYTHONPATH"] = os.pathsep.join(
        filter(None, [str(ROOT / "src"), env.get("PYTHONPATH", "")])
    )
    completed = subprocess.run(
        [sys.executable, "-m", "volrigid", "nz", "constants"],
        capture_output=True,
        text=True,
        env=env,
    )
    assert completed.returncode == 0
    payload = json.loads(completed.stdout)
    assert set(payload) == {"v_omega", "V8"}
