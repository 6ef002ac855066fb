import numpy as np
import pytest

from equifd.cli import main
from equifd.io import format_value, read_csv, write_csv


def test_float_formatting_roundtrips():
    rng = np.random.default_rng(99)
    values = np.concatenate([
        rng.uniform(-1e6, 1e6, 50),
        rng.uniform(-1e-12, 1e-12, 50),
        [0.0, 1.0, np.pi, 4.539993e-5],
    ])
    for v in values:
        assert float(format_value(float(v))) == float(v)


def test_csv_roundtrip_exact(tmp_path):
    rng = np.random.default_rng(1)
    a = rng.standard_normal(20)
    b = rng.uniform(1e-15, 1e15, 20)
    path = tmp_path / "data.csv"
    write_csv(path, ["a", "b"], [a, b])
    data = read_csv(path)
    assert np.array_equal(data["a"], a)
    assert np.array_equal(data["b"], b)


def test_solve_analytic_quarter(tmp_path, capsys):
    out = tmp_path / "sol.csv"
    rc = main(["solve", "--lambda", "10", "--ell", "1", "--n", "80",
               "--grid", "analytic", "--beta", "0.25", "--out", str(out)])
    assert rc == 0
    data = read_csv(out)
    assert np.max(data["abs_error"]) == pytest.approx(0.342e-8, rel=0.05)
    assert "max error" in capsys.readouterr().out


def test_solve_uniform(tmp_path):
    out = tmp_path / "sol.csv"
    rc = main(["solve", "--lambda", "10", "--n", "80", "--grid", "uniform",
               "--out", str(out)])
    assert rc == 0
    assert np.max(read_csv(out)["abs_error"]) == pytest.approx(0.239e-3, rel=0.02)


def test_solve_rejects_lambda_zero(tmp_path, capsys):
    rc = main(["solve", "--lambda", "0.0", "--out", str(tmp_path / "x.csv")])
    assert rc == 2
    assert "lam" in capsys.readouterr().err


def test_solve_equidistributed_mode(tmp_path):
    out = tmp_path / "sol.csv"
    rc = main(["solve", "--grid", "equidistributed", "--beta", "0.25",
               "--n", "20", "--out", str(out)])
    assert rc == 0
    # the numerically equidistributed grid carries an O(h^2) gap to the
    # closed-form one, so the error lands near (not at) the analytic value
    assert np.max(read_csv(out)["abs_error"]) <= 2.0 * 0.883e-6


def test_convergence_command(tmp_path, capsys):
    out = tmp_path / "conv.csv"
    rc = main(["convergence", "--grid", "analytic", "--beta", "0.25",
               "--n-ladder", "10,20,40", "--out", str(out)])
    assert rc == 0
    data = read_csv(out)
    assert list(data["N"].astype(int)) == [10, 20, 40]
    assert data["p"][-1] == pytest.approx(4.0, abs=0.1)
    assert "beta=0.25" in capsys.readouterr().out


def test_convergence_rejects_bad_ladder(tmp_path, capsys):
    for ladder in ("20,10", "10,30"):
        rc = main(["convergence", "--n-ladder", ladder, "--out", str(tmp_path / "c.csv")])
        assert rc == 2
        assert "ladder" in capsys.readouterr().err


def test_adapt_command_with_trace(tmp_path):
    out = tmp_path / "sol.csv"
    trace = tmp_path / "trace.csv"
    rc = main(["adapt", "--alpha", "10", "--beta", "0.25", "--n", "20",
               "--out", str(out), "--trace", str(trace)])
    assert rc == 0
    assert np.max(read_csv(out)["abs_error"]) == pytest.approx(0.824e-4, rel=0.15)
    tr = read_csv(trace)
    assert list(tr) == ["n", "error_norm", "solution_change", "grid_change"]


def test_adapt_nonconverged_exit_code(tmp_path):
    rc = main(["adapt", "--alpha", "10", "--beta", "0.5", "--n", "20",
               "--max-outer", "2", "--out", str(tmp_path / "s.csv")])
    assert rc == 1


def test_table1_command(tmp_path, capsys):
    out = tmp_path / "table1.csv"
    rc = main(["table1", "--out", str(out)])
    assert rc == 0
    data = read_csv(out)
    assert "error_uniform" in data and "error_b0_25" in data
    assert data["error_uniform"][1] == pytest.approx(0.375e-2, rel=0.02)
    # the finest fourth-order entry sits near the double-precision floor
    assert 0.5 * 0.836e-12 <= data["error_b0_25"][-1] <= 2.0 * 0.836e-12
    assert "uniform" in capsys.readouterr().out


def test_table2_command(tmp_path):
    out = tmp_path / "table2.csv"
    rc = main(["table2", "--out", str(out)])
    assert rc == 0
    data = read_csv(out)
    assert len(data["alpha"]) == 45
    assert np.all(data["converged"] == 1.0)


def test_error_profile_command(tmp_path):
    out = tmp_path / "profile.csv"
    rc = main(["error-profile", "--n", "80", "--out", str(out)])
    assert rc == 0
    data = read_csv(out)
    labels = data["monitor_label"]
    x = data["x"]
    err = data["abs_error"]

    def profile(tag):
        mask = labels == tag
        return x[mask], err[mask]

    # uniform error peaks in the layer; beta=2 starves the left part of
    # the domain of nodes, so its error peaks at the first interior node
    xu, eu = profile("uniform")
    assert xu[np.argmax(eu)] > 0.8
    x2, e2 = profile("beta=2")
    assert np.argmax(e2) == 1
    # the quarter-power grid beats every other family's peak error pointwise
    _, eq = profile("beta=0.25")
    for tag in ("uniform", "beta=0.5", "beta=2"):
        assert np.max(eq) <= np.max(profile(tag)[1])


def test_output_dir_env(tmp_path, monkeypatch):
    monkeypatch.setenv("EQUIFD_OUTDIR", str(tmp_path))
    rc = main(["solve", "--n", "10"])
    assert rc == 0
    assert (tmp_path / "solution.csv").exists()


def test_config_file_prepopulates_flags(tmp_path):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("# reference run\nlambda = 10\nn = 80\ngrid = analytic\nbeta = 0.25\n")
    out = tmp_path / "sol.csv"
    rc = main(["solve", "--config", str(cfg), "--out", str(out)])
    assert rc == 0
    assert np.max(read_csv(out)["abs_error"]) == pytest.approx(0.342e-8, rel=0.05)


def test_config_file_flags_take_precedence(tmp_path):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("n = 80\n")
    out = tmp_path / "sol.csv"
    rc = main(["solve", "--config", str(cfg), "--n", "10", "--grid", "uniform",
               "--out", str(out)])
    assert rc == 0
    assert len(read_csv(out)["x"]) == 11


def test_config_file_error_reports_line(tmp_path, capsys):
    cfg = tmp_path / "bad.cfg"
    cfg.write_text("n = 20\nnot a pair\n")
    rc = main(["solve", "--config", str(cfg), "--out", str(tmp_path / "s.csv")])
    assert rc == 2
    assert ":2:" in capsys.readouterr().err


def test_config_file_unknown_key(tmp_path, capsys):
    cfg = tmp_path / "bad.cfg"
    cfg.write_text("frobnicate = 1\n")
    rc = main(["solve", "--config", str(cfg), "--out", str(tmp_path / "s.csv")])
    assert rc == 2
    assert "frobnicate" in capsys.readouterr().err
