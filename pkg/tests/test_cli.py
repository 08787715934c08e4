import json
import subprocess
import sys

import numpy as np
import pytest

from unitary_order.cli import main
from unitary_order.io import read_matrix, write_matrix


@pytest.fixture
def mats(tmp_path):
    paths = {}
    for name, M in {
        "A": np.diag([3.0, 1.0]),
        "B": np.diag([2.0, 4.0]),
        "C": np.eye(3),
        "P": np.diag([4.0, 9.0]),
        "S": np.diag([0.0, 1.0]),
        "X": np.array([[1.0, 1.0], [1.0, 1.0]]) / 3,
        "Y": np.array([[2.0, 1.0], [1.0, 1.0]]) / 3,
    }.items():
        paths[name] = str(tmp_path / f"{name}.json")
        write_matrix(paths[name], M)
    return paths


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, (json.loads(out) if out.strip() else None)


class TestCheck:
    def test_lequ_pair(self, capsys, mats):
        code, out = run_cli(capsys, "check", "lequ", mats["A"], mats["B"], "--tol", "1e-9")
        assert code == 0 and out["verdict"] is True
        np.testing.assert_allclose(np.abs(np.array(out["witness"]["re"])), [[0, 1], [1, 0]])

    def test_equal_files(self, capsys, mats):
        code, out = run_cli(capsys, "check", "lequ", mats["A"], mats["A"])
        assert code == 0
        np.testing.assert_allclose(out["witness"]["re"], np.eye(2))

    def test_mismatched_dims(self, capsys, mats):
        assert main(["check", "lequ", mats["A"], mats["C"]]) == 2

    def test_loewner(self, capsys, mats):
        code, out = run_cli(capsys, "check", "loewner", mats["A"], mats["B"])
        assert code == 1 and out["holds"] is False
        assert run_cli(capsys, "check", "loewner", mats["X"], mats["Y"])[0] == 0

    def test_olson(self, capsys, mats):
        code, out = run_cli(capsys, "check", "olson", mats["X"], mats["Y"])
        assert code == 1
        assert out["first_power_failure"] == 2 and out["cell"] == "agree"

    def test_family(self, capsys, mats):
        code, out = run_cli(capsys, "check", "family", mats["S"], mats["P"])
        assert code == 0 and all(out["per_lambda"])

    def test_malformed(self, tmp_path, capsys, mats):
        bad = tmp_path / "bad.json"
        bad.write_text("{nope")
        assert main(["check", "lequ", str(bad), mats["A"]]) == 2
        assert main(["check", "lequ", str(tmp_path / "missing.json"), mats["A"]]) == 2
        nonherm = tmp_path / "nh.json"
        nonherm.write_text(json.dumps({"n": 2, "re": [[1, 2], [0, 1]]}))
        assert main(["check", "lequ", str(nonherm), mats["A"]]) == 2


class TestWitnessApply:
    def test_witness(self, capsys, mats):
        code, out = run_cli(capsys, "witness", mats["A"], mats["B"])
        assert code == 0 and out["n"] == 2
        code, out = run_cli(capsys, "witness", mats["B"], mats["A"])
        assert code == 1 and out["violation_index"] == 2

    def test_apply_power(self, capsys, mats):
        code, out = run_cli(capsys, "apply", '{"kind": "power", "alpha": 0.5}', mats["P"])
        assert code == 0
        np.testing.assert_allclose(out["re"], np.diag([2, 3]))

    def test_apply_log_singular(self, capsys, mats):
        assert main(["apply", '{"kind": "log"}', mats["S"]]) == 2

    def test_apply_oc_file(self, tmp_path, capsys):
        fn = tmp_path / "f.json"
        fn.write_text(json.dumps({"f0": 0, "beta": 0, "gamma": 0, "atoms": [[1, 1]]}))
        one = tmp_path / "one.json"
        write_matrix(one, np.eye(1))
        code, out = run_cli(capsys, "apply", str(fn), str(one))
        assert code == 0 and out["re"] == [[0.5]]

    def test_spectral_family(self, capsys, tmp_path):
        p = tmp_path / "m.json"
        write_matrix(p, np.diag([1.0, 2.0, 2.0, 5.0]))
        code, out = run_cli(capsys, "spectral-family", str(p))
        assert out == {"thresholds": [1.0, 2.0, 5.0], "ranks": [1, 3, 4]}
        code, out = run_cli(capsys, "spectral-family", str(p), "--verbose")
        assert len(out["projections"]) == 3


class TestGen:
    def test_gen_to_file(self, tmp_path, capsys):
        out = tmp_path / "u.json"
        assert main(["gen", "unitary_finite_order", "--dim", "3", "--n0", "2", "--seed", "4", "--out", str(out)]) == 0
        U = read_matrix(out)
        np.testing.assert_allclose(U @ U, np.eye(3), atol=1e-12)

    def test_gen_pair(self, capsys):
        code, out = run_cli(capsys, "gen", "dominance_pair", "--dim", "3")
        assert code == 0 and set(out) == {"A", "B"}

    def test_gen_shift(self, capsys):
        code, out = run_cli(capsys, "gen", "truncated_shift", "--dim", "3", "--weights", "1", "1")
        assert out["re"] == [[0, 0, 0], [1, 0, 0], [0, 1, 0]]

    def test_gen_bad(self, capsys):
        assert main(["gen", "projection", "--dim", "2", "--rank", "5"]) == 2
        assert main(["gen", "nosuch"]) == 2


class TestSuiteCommand:
    def test_unknown_theorem(self, capsys):
        assert main(["suite", "--theorem", "nosuch"]) == 2

    def test_single(self, tmp_path, capsys):
        out = tmp_path / "r.json"
        code = main(["suite", "--theorem", "uv6", "--dim", "6", "--trials", "20", "--seed", "42", "--out", str(out)])
        assert code == 0
        rep = json.loads(out.read_text())
        assert rep[0]["theorem"] == "uv6" and rep[0]["failures"] == []
        assert set(rep[0]) >= {"theorem", "trials", "premise_hits", "failures", "gray", "seconds"}

    def test_all(self, capsys):
        code, out = run_cli(capsys, "suite", "--theorem", "all", "--dim", "4", "--trials", "5", "--seed", "7")
        assert code == 0 and len(out) == 9


def test_module_entry_point(mats):
    proc = subprocess.run(
        [sys.executable, "-m", "unitary_order.cli", "check", "lequ", mats["A"], mats["B"]],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0 and json.loads(proc.stdout)["verdict"] is True
