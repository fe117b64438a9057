"""CLI behaviour: output modes, exit codes, golden structured records."""

from __future__ import annotations

import json
import subprocess
import sys
from pathlib import Path

import pytest

from cliffspin.cli import main

GOLDEN = Path(__file__).parent / "golden"


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_exp_text_mode(capsys):
    code, out, _ = run_cli(capsys, "exp", "--signature", "0,4", "--b", "1,0,0,0,0,0")
    assert code == 0
    assert "ext_exp = 1 + 1 e12" in out
    assert "lambda = 2" in out


def test_exp_default_signature_is_13(capsys):
    code, out, _ = run_cli(capsys, "exp", "--b", "0,0,0,0,0,0", "--format", "json")
    assert code == 0
    record = json.loads(out)
    assert record["signature"] == "1,3"
    assert record["ext_exp"] == "1"
    assert record["lambda"] == 1.0


def test_exp_reports_rho_zero_for_e34(capsys):
    code, out, _ = run_cli(
        capsys, "exp", "--signature", "1,3", "--b", "0,0,0,0,0,1", "--format", "json"
    )
    assert code == 0
    record = json.loads(out)
    assert record["rho"] == 0.0
    assert record["beta"] == -1.0


def test_exp_wrong_coefficient_count(capsys):
    code, _, err = run_cli(capsys, "exp", "--signature", "1,3", "--b", "1,2,3")
    assert code == 2
    assert "6" in err


def test_exp_low_dim_coefficient_count(capsys):
    code, out, _ = run_cli(capsys, "exp", "--signature", "0,3", "--b", "1,0,0", "--format", "json")
    assert code == 0
    record = json.loads(out)
    assert record["lambda"] is None and record["rho"] is None
    assert record["beta"] == -1.0


def test_spin_and_decompose_round_trip_through_cli(capsys):
    code, out, _ = run_cli(
        capsys, "spin", "--signature", "0,4", "--b", "1,0,0,0,0,0", "--format", "json"
    )
    assert code == 0
    spun = json.loads(out)
    code, out, _ = run_cli(
        capsys, "decompose", "--signature", "0,4", "--s", spun["spin"], "--format", "json"
    )
    assert code == 0
    record = json.loads(out)
    assert record["branch"] == "regular"
    assert record["sign"] == 1
    assert abs(record["lambda"] - 2.0) <= 1e-9
    assert max(abs(x - y) for x, y in zip(record["b"], [1, 0, 0, 0, 0, 0])) <= 1e-9


def test_decompose_spec_example(capsys):
    code, out, _ = run_cli(
        capsys,
        "decompose",
        "--signature", "0,4",
        "--s", "0.7071067811865476 + 0.7071067811865476 e12",
        "--format", "json",
    )
    assert code == 0
    record = json.loads(out)
    assert record["branch"] == "regular"
    assert record["sign"] == 1
    assert abs(record["lambda"] - 2.0) <= 1e-9


def test_decompose_low_dim(capsys):
    code, out, _ = run_cli(
        capsys, "decompose", "--signature", "0,3", "--s", "0.5 + 0.8660254037844386 e12",
        "--format", "json",
    )
    assert code == 0
    record = json.loads(out)
    assert record["branch"] == "low"
    assert record["sign"] == 1


def test_rotate_identity(capsys):
    code, out, _ = run_cli(capsys, "rotate", "--s", "1")
    assert code == 0
    rows = out.splitlines()[3:]
    assert rows == ["1 0 0 0", "0 1 0 0", "0 0 1 0", "0 0 0 1"]


def test_rotate_from_bivector(capsys):
    code, out, _ = run_cli(
        capsys, "rotate", "--signature", "1,3", "--b", "0,0,0,0,0,1", "--branch", "adjoint",
        "--format", "json",
    )
    assert code == 0
    record = json.loads(out)
    assert record["matrix"] == [
        [1.0, 0.0, 0.0, 0.0],
        [0.0, 1.0, 0.0, 0.0],
        [0.0, 0.0, -1.0, 0.0],
        [0.0, 0.0, 0.0, -1.0],
    ]


def test_verify_matrix_pass(capsys):
    code, out, _ = run_cli(
        capsys, "verify", "--signature", "1,3", "--p", "1,0,0,0;0,1,0,0;0,0,-1,0;0,0,0,-1"
    )
    assert code == 0
    assert "passed = true" in out


def test_verify_matrix_wrong_component(capsys):
    code, out, _ = run_cli(
        capsys, "verify", "--signature", "1,3", "--p", "-1,0,0,0;0,-1,0,0;0,0,1,0;0,0,0,1",
        "--format", "json",
    )
    assert code == 1
    record = json.loads(out)
    assert record["metric_residual"] == 0.0
    assert record["det_residual"] == 0.0
    assert record["component_positive"] is False


def test_verify_spin(capsys):
    code, out, _ = run_cli(capsys, "verify", "--signature", "2,2", "--s", "e12", "--format", "json")
    assert code == 0
    assert json.loads(out)["passed"] is True
    code, out, _ = run_cli(capsys, "verify", "--signature", "2,2", "--s", "2 e12", "--format", "json")
    assert code == 1


def test_verify_requires_exactly_one_input(capsys):
    code, _, err = run_cli(capsys, "verify")
    assert code == 2
    code, _, err = run_cli(capsys, "verify", "--s", "1", "--p", "1")
    assert code == 2


def test_domain_error_is_machine_readable(capsys):
    code, out, _ = run_cli(
        capsys, "spin", "--signature", "1,3", "--b", "1,0,0,0,0,0", "--format", "json"
    )
    assert code == 1
    record = json.loads(out)
    assert record["error"] == "LambdaNotPositive"

    code, out, _ = run_cli(
        capsys, "spin", "--signature", "1,3", "--b", "0,0,0,0,0,0", "--branch", "adjoint",
        "--format", "json",
    )
    assert code == 1
    assert json.loads(out)["error"] == "RhoNegative"

    code, out, _ = run_cli(
        capsys, "spin", "--signature", "1,3", "--b", "1,0,0,0,0,1", "--branch", "adjoint",
        "--format", "json",
    )
    assert code == 1
    assert json.loads(out)["error"] == "NotSimpleBivector"

    code, out, _ = run_cli(
        capsys, "decompose", "--signature", "1,3", "--s", "2", "--format", "json"
    )
    assert code == 1
    assert json.loads(out)["error"] == "NotSpinElement"


def test_parse_error_is_usage_error(capsys):
    code, _, err = run_cli(capsys, "decompose", "--signature", "1,3", "--s", "e21")
    assert code == 2
    assert "ascending" in err


def test_sample_deterministic(capsys):
    code, first, _ = run_cli(
        capsys, "sample", "--signature", "2,2", "--count", "2", "--seed", "9", "--format", "json"
    )
    assert code == 0
    code, second, _ = run_cli(
        capsys, "sample", "--signature", "2,2", "--count", "2", "--seed", "9", "--format", "json"
    )
    assert first == second
    records = [json.loads(line) for line in first.splitlines()]
    assert [r["index"] for r in records] == [0, 1]


def test_sample_output_passes_verify(capsys):
    code, out, _ = run_cli(
        capsys, "sample", "--signature", "1,3", "--count", "3", "--seed", "4", "--format", "json"
    )
    assert code == 0
    for line in out.splitlines():
        record = json.loads(line)
        code, vout, _ = run_cli(
            capsys, "verify", "--signature", "1,3", "--s", record["spin"], "--format", "json"
        )
        assert code == 0, vout


@pytest.mark.parametrize(
    "name, argv",
    [
        (
            "exp.jsonl",
            [
                ["exp", "--signature", "0,4", "--b", "1,0,0,0,0,0"],
                ["exp", "--signature", "1,3", "--b", "0,0,0,0,0,0"],
                ["exp", "--signature", "1,3", "--b", "0,0,0,0,0,1"],
                ["exp", "--signature", "2,2", "--b", "1,0,0,0,0,0"],
            ],
        ),
        (
            "spin.jsonl",
            [
                ["spin", "--signature", "0,4", "--b", "1,0,0,0,0,0"],
                ["spin", "--signature", "1,3", "--b", "0,0,0,0,0,1", "--branch", "adjoint"],
                ["spin", "--signature", "0,3", "--b", "0.8660254037844386,0,0"],
            ],
        ),
        (
            "rotate.jsonl",
            [
                ["rotate", "--signature", "1,3", "--s", "1"],
                ["rotate", "--signature", "0,4", "--b", "1,0,0,0,0,0"],
            ],
        ),
        (
            "decompose.jsonl",
            [
                ["decompose", "--signature", "0,4", "--s", "0.7071067811865476 + 0.7071067811865476 e12"],
                ["decompose", "--signature", "1,3", "--s", "e34"],
                ["decompose", "--signature", "2,2", "--s", "e12"],
            ],
        ),
        (
            "verify.jsonl",
            [
                ["verify", "--signature", "1,3", "--p", "1,0,0,0;0,1,0,0;0,0,-1,0;0,0,0,-1"],
                ["verify", "--signature", "2,2", "--s", "e12"],
            ],
        ),
        (
            "sample.jsonl",
            [
                ["sample", "--signature", "1,3", "--count", "2", "--seed", "0"],
            ],
        ),
    ],
)
def test_golden_structured_output(capsys, name, argv):
    lines = []
    for args in argv:
        main(args + ["--format", "json"])
        lines.append(capsys.readouterr().out)
    got = "".join(lines)
    expected = (GOLDEN / name).read_text()
    assert got == expected


def test_module_entry_point():
    result = subprocess.run(
        [sys.executable, "-m", "cliffspin", "exp", "--signature", "0,4", "--b", "1,0,0,0,0,0"],
        capture_output=True,
        text=True,
        timeout=60,
    )
    assert result.returncode == 0
    assert "lambda = 2" in result.stdout


def test_usage_error_exit_code():
    result = subprocess.run(
        [sys.executable, "-m", "cliffspin", "exp"],
        capture_output=True,
        text=True,
        timeout=60,
    )
    assert result.returncode == 2
