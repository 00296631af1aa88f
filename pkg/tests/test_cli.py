"""End-to-end tests of the command-line interface."""

import json

import numpy as np
import pytest

from discordkit.cli import main

REF_A_FLAGS = ["--r", "0,0,0", "--s", "0.1,0.2,0.2", "--c", "0.3,0.3,0.3"]
REF_B_FLAGS = ["--r", "0.1,0.2,0", "--s", "0,0,0", "--c", "0.3,0.3,0"]


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_compute_json_report(capsys):
    code, out, _ = run_cli(capsys, "compute", *REF_A_FLAGS, "--label", "ref-a")
    assert code == 0
    payload = json.loads(out)
    assert payload["label"] == "ref-a"
    assert payload["method"] == "r0-isotropic"
    assert payload["params"]["s"] == [0.1, 0.2, 0.2]
    assert len(payload["spectrum"]) == 4
    assert len(payload["argmax_axis"]) == 3
    assert payload["discord"] == pytest.approx(
        payload["mutual_info"] - payload["classical_corr"], abs=1e-12
    )
    np.testing.assert_allclose(
        sorted(payload["spectrum"], reverse=True),
        [0.4, 0.3427, 0.25, 0.0073],
        atol=5e-4,
    )


def test_compute_json_round_trips(capsys):
    code, out, _ = run_cli(capsys, "compute", *REF_A_FLAGS)
    assert code == 0
    rendered = json.dumps(json.loads(out), indent=2, sort_keys=True) + "\n"
    assert rendered == out


def test_compute_is_deterministic(capsys):
    _, first, _ = run_cli(capsys, "compute", *REF_B_FLAGS)
    _, second, _ = run_cli(capsys, "compute", *REF_B_FLAGS)
    assert first == second


def test_compute_csv_format(capsys):
    code, out, _ = run_cli(capsys, "compute", *REF_B_FLAGS, "--format", "csv")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "mutual_info,classical_corr,discord,method"
    fields = lines[1].split(",")
    assert fields[3] == "s0-planar"
    assert float(fields[2]) == pytest.approx(
        float(fields[0]) - float(fields[1]), abs=1e-12
    )


def test_compute_numeric_flag_forces_path(capsys):
    code, out, _ = run_cli(capsys, "compute", *REF_B_FLAGS, "--numeric")
    assert code == 0
    assert json.loads(out)["method"] == "numeric"


def test_compute_trivial_state(capsys):
    code, out, _ = run_cli(
        capsys, "compute", "--r", "0,0,0", "--s", "0,0,0", "--c", "0,0,0"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["mutual_info"] == pytest.approx(0.0, abs=1e-12)
    assert payload["classical_corr"] == pytest.approx(0.0, abs=1e-12)
    assert payload["discord"] == pytest.approx(0.0, abs=1e-12)


def test_compute_state_file_and_flag_precedence(tmp_path, capsys):
    state = tmp_path / "state.json"
    state.write_text(
        json.dumps({"r": [0, 0, 0], "s": [0, 0, 0], "c": [0.25, 0.25, 0.25],
                    "label": "from-file"})
    )
    code, out, _ = run_cli(capsys, "compute", "--state", str(state))
    assert code == 0
    payload = json.loads(out)
    assert payload["label"] == "from-file"
    assert payload["method"] == "werner"
    # explicit flag overrides the file entry
    code, out, _ = run_cli(
        capsys, "compute", "--state", str(state), "--c", "0,0,0"
    )
    assert json.loads(out)["discord"] == pytest.approx(0.0, abs=1e-12)


def test_compute_malformed_triple_exits_2(capsys):
    code, _, err = run_cli(capsys, "compute", "--r", "0.1,0.2", "--s", "0,0,0",
                           "--c", "0,0,0")
    assert code == 2
    assert "expected 3 comma-separated reals" in err


def test_compute_non_numeric_component_exits_2(capsys):
    code, _, err = run_cli(capsys, "compute", "--r", "0.1,x,0.2", "--s", "0,0,0",
                           "--c", "0,0,0")
    assert code == 2
    assert "component 2" in err


def test_compute_unphysical_exits_1(capsys):
    code, _, err = run_cli(capsys, "compute", "--r", "0,0,0", "--s", "0,0,0",
                           "--c", "1,1,1")
    assert code == 1
    assert "unphysical" in err


def test_curve_uniform_c_shape(capsys):
    code, out, _ = run_cli(capsys, "curve", *REF_A_FLAGS, "--samples", "101")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "theta,G"
    rows = np.array([[float(v) for v in line.split(",")] for line in lines[1:]])
    assert rows.shape == (101, 2)
    theta, g = rows[:, 0], rows[:, 1]
    assert np.all(np.diff(theta) > 0)
    # interior minimum at |r|^2 + c^2 = 0.09, decreasing then increasing
    k = int(np.argmin(g))
    assert theta[k] == pytest.approx(0.09, abs=2e-3)
    assert np.all(np.diff(g[: k + 1]) <= 1e-15)
    assert np.all(np.diff(g[k:]) >= -1e-15)


def test_curve_zero_c_single_row(capsys):
    code, out, _ = run_cli(
        capsys, "curve", "--r", "0,0,0.4", "--s", "0,0,0", "--c", "0,0,0"
    )
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 2
    theta, _ = (float(v) for v in lines[1].split(","))
    assert theta == pytest.approx(0.16, abs=1e-15)


def test_curve_planar_family_maximum(capsys):
    code, out, _ = run_cli(capsys, "curve", *REF_B_FLAGS, "--samples", "400")
    assert code == 0
    rows = np.array(
        [[float(v) for v in line.split(",")] for line in out.splitlines()[1:]]
    )
    # the curve maximum is the sphere maximum of the objective
    assert rows[:, 1].max() == pytest.approx(0.10609271271085241, abs=1e-5)


def test_curve_rejects_general_state(capsys):
    code, _, err = run_cli(
        capsys, "curve", "--r", "0,0,0", "--s", "0.1,0,0", "--c", "0.1,0.2,0.3"
    )
    assert code == 2
    assert "correlation diagonal" in err


def test_damp_werner_monotone_gap(capsys):
    code, out, _ = run_cli(
        capsys, "damp", "--r", "0,0,0", "--s", "0,0,0", "--c", "0.25,0.25,0.25",
        "--gamma-grid", "0:1:0.1"
    )
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "gamma,Q_damped,Q_gap"
    rows = np.array([[float(v) for v in line.split(",")] for line in lines[1:]])
    assert rows.shape == (11, 3)
    gaps = rows[:, 2]
    assert gaps[0] == pytest.approx(0.0, abs=1e-10)
    assert np.all(np.diff(gaps) >= -1e-9)


def test_damp_invariant_family(capsys):
    code, out, _ = run_cli(
        capsys, "damp", "--r", "0.3,0,0.2", "--s", "0,0,0", "--c", "0,0,0.4",
        "--gamma-grid", "0:0.9:0.3"
    )
    assert code == 0
    rows = np.array(
        [[float(v) for v in line.split(",")] for line in out.splitlines()[1:]]
    )
    assert np.all(np.abs(rows[:, 2]) <= 1e-9)


def test_damp_bad_grid_exits_2(capsys):
    code, _, err = run_cli(
        capsys, "damp", *REF_B_FLAGS, "--gamma-grid", "0.5:0.2:0.1"
    )
    assert code == 2
    assert "start" in err


def test_damp_output_uses_17_digit_floats(capsys):
    _, out, _ = run_cli(
        capsys, "damp", "--r", "0,0,0", "--s", "0,0,0", "--c", "0.2,0.2,0.2",
        "--gamma-grid", "0.3:0.3:0.1"
    )
    value = out.splitlines()[1].split(",")[1]
    assert value == format(float(value), ".17g")
    assert "," not in value.replace(",", "", 0) or "." in value


def test_spectrum_command(capsys):
    code, out, _ = run_cli(capsys, "spectrum", "--r=0,0,0", "--s=0,0,0",
                           "--c=-1,-1,-1")
    assert code == 0
    payload = json.loads(out)
    np.testing.assert_allclose(payload["eigenvalues"], [1, 0, 0, 0], atol=1e-12)
    top = np.array(payload["eigenvectors"][0]["re"]) + 1j * np.array(
        payload["eigenvectors"][0]["im"]
    )
    expected = np.array([0, 1, -1, 0]) / np.sqrt(2)
    np.testing.assert_allclose(top, expected, atol=1e-12)


def test_verify_passes_on_default_families(capsys):
    code, out, _ = run_cli(capsys, "verify", "--draws", "5")
    assert code == 0
    assert "s0-isotropic" in out
    assert "FAIL" not in out


def test_verify_deterministic(capsys):
    _, first, _ = run_cli(capsys, "verify", "--draws", "3")
    _, second, _ = run_cli(capsys, "verify", "--draws", "3")
    assert first == second


def test_verify_reports_expected_failure_entry(capsys):
    code, out, _ = run_cli(
        capsys, "verify", "--draws", "3", "--families", "axial-formula"
    )
    assert code == 0
    assert "expected failure" in out
    assert "counterexample" in out
    assert "formula gives 1" in out


def test_verify_fails_on_impossible_tolerance(capsys):
    code, out, _ = run_cli(
        capsys, "verify", "--draws", "3", "--tolerance", "0",
        "--families", "s0-isotropic"
    )
    assert code == 3
    assert "FAIL" in out
