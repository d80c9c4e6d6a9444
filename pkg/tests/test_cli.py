import csv
import os
import subprocess
import sys

import pytest

from liftrs import cli, finite_field
from liftrs.finite_field import FieldSpec
from liftrs.spectral import redundancy_exponent


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_lambda_table(capsys, tmp_path):
    path = tmp_path / "t.csv"
    code, out, _ = run(capsys, "lambda-table", "--m", "9", "--out", str(path))
    assert code == 0
    rows = {int(r[0]): r for r in (line.split() for line in out.splitlines()[1:])}
    assert rows[4][1:] == ["15.5436", "4.1747e-02", "2.8233e-03"]
    assert rows[6][1] == "63.9217"
    assert rows[2][2] == rows[2][3] == "4.1504e-01"
    data = list(csv.DictReader(path.open()))
    assert [int(r["m"]) for r in data] == list(range(2, 10))
    assert run(capsys, "lambda-table", "--m", "13")[0] == 2


@pytest.mark.parametrize("m,ell,r", [(2, 2, 1), (3, 3, 2), (2, 4, 2)])
def test_count_paths_agree(capsys, m, ell, r):
    _, rec, _ = run(capsys, "count", "--m", str(m), "--ell", str(ell), "--r", str(r))
    _, ora, _ = run(capsys, "count", "--m", str(m), "--ell", str(ell), "--r", str(r), "--oracle")
    assert "recurrence" in rec.splitlines()[0] and "enumeration" in ora.splitlines()[0]
    assert rec.splitlines()[1:] == ora.splitlines()[1:]


def test_count_example(capsys):
    _, out, _ = run(capsys, "count", "--m", "2", "--ell", "2", "--r", "1")
    assert "s_0 9" in out.splitlines()


def test_count_large_ell_by_recurrence(capsys):
    code, out, _ = run(capsys, "count", "--m", "3", "--ell", "16", "--r", "2")
    assert code == 0
    assert run(capsys, "count", "--m", "3", "--ell", "16", "--r", "2", "--oracle")[0] == 2


def test_figure_data(capsys, tmp_path):
    path = tmp_path / "fig.csv"
    assert run(capsys, "figure-data", "--out", str(path))[0] == 0
    rows = list(csv.DictReader(path.open()))
    assert list(rows[0]) == ["series", "eps", "exponent"]
    series = {}
    for r in rows:
        series.setdefault(r["series"], []).append((float(r["eps"]), float(r["exponent"])))
    m2 = series["m=2"]
    assert m2[0][0] == 0.0 and m2[-1][0] == 0.5 and len(m2) == 501
    assert m2[-1][1] == pytest.approx(redundancy_exponent(2, 0.5), abs=1e-12)
    lin = series["(3eps+1)/2"]
    assert lin[0][0] == 0.0 and lin[-1][0] == 0.269
    for name in ("m=2", "m=3", "m=4"):
        ys = [y for _, y in series[name]]
        assert all(b >= a for a, b in zip(ys, ys[1:]))
    for pts in series.values():
        assert all(0 <= x <= 1 and 0 <= y <= 1.5 for x, y in pts)


def test_unwritable_path(capsys, tmp_path):
    assert run(capsys, "figure-data", "--out", str(tmp_path / "missing" / "x.csv"))[0] == 2


@pytest.mark.parametrize("args", [("2", "4", "2", "2", "7"), ("3", "3", "2", "16", "1")])
def test_batch_demo_pass(capsys, args):
    m, ell, r, k, seed = args
    code, out, _ = run(capsys, "batch-demo", "--m", m, "--ell", ell, "--r", r, "--k", k, "--seed", seed)
    assert code == 0 and out.splitlines()[-1] == "PASS"
    assert sum(line.startswith("set ") for line in out.splitlines()) == int(k)


def test_batch_demo_capacity(capsys):
    code, _, err = run(capsys, "batch-demo", "--m", "3", "--ell", "3", "--r", "2", "--k", "17")
    assert code == 2 and "capacity" in err


def test_batch_demo_deterministic(capsys, tmp_path):
    a = run(capsys, "batch-demo", "--m", "2", "--ell", "4", "--r", "4", "--seed", "5", "--out", str(tmp_path / "a"))
    b = run(capsys, "batch-demo", "--m", "2", "--ell", "4", "--r", "4", "--seed", "5", "--out", str(tmp_path / "b"))
    assert a == b
    assert (tmp_path / "a").read_bytes() == (tmp_path / "b").read_bytes()


def test_build_code(capsys, tmp_path):
    code, out, _ = run(capsys, "build-code", "--m", "2", "--ell", "2", "--d", "3")
    assert code == 0 and out.startswith("lifted-rs v1 m=2 ell=2 d=3")
    assert run(capsys, "build-code", "--m", "2", "--ell", "2", "--d", "4")[0] == 2


def test_usage_errors(capsys):
    assert run(capsys, "count", "--m", "2", "--bogus", "1")[0] == 2
    assert run(capsys, "count", "--m", "2")[0] == 2
    assert run(capsys)[0] == 2
    assert run(capsys, "verify", "--level", "medium")[0] == 2


def test_verify_quick(capsys):
    code, out, _ = run(capsys, "verify", "--level", "quick")
    assert code == 0
    lines = out.splitlines()
    assert all(line.startswith("ok") for line in lines[1:])
    assert "q = 16" not in out and "m = 3" not in out


def _corrupt_field(ell):
    # bypass validation: x^2 + 1 = (x + 1)^2 is reducible
    f = object.__new__(FieldSpec)
    object.__setattr__(f, "ell", 2)
    object.__setattr__(f, "modulus", 0b101)
    return f


def test_verify_fails_on_corrupted_modulus(capsys, monkeypatch):
    monkeypatch.setattr(finite_field, "make_field", _corrupt_field)
    code, out, _ = run(capsys, "verify", "--level", "quick")
    assert code == 1
    assert "FAIL" in out.splitlines()[1]


def test_module_entry_and_python_backend():
    env = dict(os.environ, LIFTRS_KERNELS="python")
    proc = subprocess.run([sys.executable, "-m", "liftrs", "verify", "--level", "quick"], capture_output=True, text=True, env=env)
    assert proc.returncode == 0, proc.stdout
    assert "kernels=python" in proc.stdout.splitlines()[0]
