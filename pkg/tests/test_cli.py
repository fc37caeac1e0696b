import json
import math

from qutritbraid.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_verify_passes(capsys):
    code, out, _ = run_cli(capsys, "verify", "--tol", "1e-10", "--seed", "42")
    assert code == 0
    rep = json.loads(out)
    assert rep["overall_pass"] is True
    assert all(c["residual"] < 1e-10 for c in rep["checks"])
    assert rep["metadata"]["seed"] == 42


def test_verify_impossible_tolerance_fails(capsys):
    code, out, _ = run_cli(capsys, "verify", "--tol", "1e-30", "--seed", "42")
    assert code == 1
    assert json.loads(out)["overall_pass"] is False


def test_verify_deterministic(capsys):
    _, out1, _ = run_cli(capsys, "verify", "--seed", "7")
    _, out2, _ = run_cli(capsys, "verify", "--seed", "7")
    r1, r2 = json.loads(out1), json.loads(out2)
    del r1["metadata"]["timestamp"], r2["metadata"]["timestamp"]
    assert r1 == r2


def test_scan_writes_csv_and_extrema(capsys, tmp_path):
    out_file = tmp_path / "sweep.csv"
    code, out, _ = run_cli(capsys, "scan", "--min", "0", "--max", str(math.pi),
                           "--steps", "101", "--out", str(out_file))
    assert code == 0
    lines = out_file.read_text().split("\n")
    assert lines[0] == "theta,l1_norm,entropy"
    assert len(lines) == 103  # header + 101 rows + trailing newline
    summary = json.loads(out)
    maxima = [e for e in summary["entropy_extrema"] if e["kind"] == "max"]
    assert any(abs(e["theta"] - math.pi / 3) < 1e-9 for e in maxima)
    assert any(abs(e["theta"] - 2 * math.pi / 3) < 1e-9 for e in maxima)


def test_scan_three_rows(capsys, tmp_path):
    out_file = tmp_path / "s.csv"
    code, _, _ = run_cli(capsys, "scan", "--min", "0", "--max", str(math.pi),
                         "--steps", "3", "--out", str(out_file))
    assert code == 0
    rows = [r for r in out_file.read_text().split("\n")[1:] if r]
    assert len(rows) == 3
    assert float(rows[0].split(",")[2]) == 0.0
    # sin(pi) is ~1e-16 in floats, so the endpoint entropy is zero to rounding
    assert abs(float(rows[2].split(",")[2])) < 1e-12


def test_scan_invalid_range(capsys, tmp_path):
    code, _, err = run_cli(capsys, "scan", "--min", "1", "--max", "0.5",
                           "--steps", "10", "--out", str(tmp_path / "x.csv"))
    assert code == 2
    assert "min" in err


def test_scan_unwritable_path(capsys):
    code, _, err = run_cli(capsys, "scan", "--min", "0", "--max", "1",
                           "--steps", "5", "--out", "/nonexistent/dir/x.csv")
    assert code == 2


def test_ybe_check(capsys):
    code, out, _ = run_cli(capsys, "ybe-check", "--theta1", "0.3", "--theta3", "0.7")
    assert code == 0
    rep = json.loads(out)
    assert rep["residual_full"] < 1e-10
    assert rep["residual_sector"] < 1e-10


def test_ybe_check_braid_point(capsys):
    code, out, _ = run_cli(capsys, "ybe-check",
                           "--theta1", str(math.pi / 3), "--theta3", str(math.pi / 3))
    assert code == 0
    rep = json.loads(out)
    assert abs(rep["theta2"] - math.pi / 3) < 1e-10
    assert rep["residual_full"] < 1e-12


def test_ybe_check_degenerate(capsys):
    code, _, err = run_cli(capsys, "ybe-check",
                           "--theta1", str(math.pi / 2), "--theta3", "0.1")
    assert code == 2
    assert "pi/2" in err


def test_sectors_numeric(capsys):
    code, out, _ = run_cli(capsys, "sectors", "--op", "R12", "--theta", "0.5")
    assert code == 0
    rep = json.loads(out)
    m = rep["blocks"]["omega2"]["matrix"]
    assert abs(m[0][0][0] - math.cos(0.5)) < 1e-10
    assert abs(m[0][0][1] + math.sin(0.5)) < 1e-10


def test_sectors_exact_snapping(capsys):
    code, out, _ = run_cli(capsys, "sectors", "--op", "T", "--theta", "0",
                           "--exact")
    assert code == 0
    rep = json.loads(out)
    assert rep["blocks"]["one"]["basis"] == ["|12>", "|21>", "|33>"]
    flattened = [z for row in rep["blocks"]["one"]["matrix"] for z in row]
    assert set(flattened) <= {"0", "1/sqrt3", "w/sqrt3", "w^2/sqrt3"}


def test_jones_command(capsys):
    code, out, _ = run_cli(capsys, "jones")
    assert code == 0
    rep = json.loads(out)
    assert rep["overall_pass"] is True
    assert len(rep["results"]) == 6
    for r in rep["results"]:
        assert r["frobenius_distance"] < 1e-12
        assert r["leakage"] < 1e-12


def test_state_command(capsys):
    code, out, _ = run_cli(capsys, "state", "--theta", str(math.pi / 3))
    assert code == 0
    rep = json.loads(out)
    assert abs(rep["l1_norm"] - math.sqrt(3)) < 1e-9
    assert abs(rep["entropy_nats"] - math.log(3)) < 1e-9
    assert abs(rep["entropy_base3"] - 1.0) < 1e-9
    amps = rep["amplitudes"]
    assert set(amps) == {"|11>", "|23>", "|32>"}
    for re_im in amps.values():
        assert abs(math.hypot(*re_im) - 1 / math.sqrt(3)) < 1e-9
