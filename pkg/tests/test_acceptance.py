"""Exit criteria for the toolkit, each at its pinned tolerance.

Run with ``pytest tests/test_acceptance.py``; a summary line per criterion is
printed at the end of the session.
"""

import json

import numpy as np
import pytest

from unitary_order.calculus import OMFunction, mlog, mpower
from unitary_order.cli import main
from unitary_order.core import conjugate, scale
from unitary_order.family import HARD_FAILURE, olson_consistency
from unitary_order.generators import commuting_pair, dominance_pair, random_hermitian, random_positive
from unitary_order.order import leq_u
from unitary_order.suite import G_CATALOG, R_GRID, TrialConfig, run

pytestmark = pytest.mark.acceptance

ACCEPT = TrialConfig(dim=8, min_dim=2, trials=200, seed=2024, n_max=12, n_functions=50)


def _summary(rep) -> str:
    arms = ", ".join(f"{k}: {v.hits} hits/{v.failed} fail/{v.gray} gray" for k, v in rep.arms.items())
    return f"{rep.trials} trials, {len(rep.failures)} failures, {rep.gray} gray ({arms})"


def test_1_certificate_soundness(criterion):
    rng = np.random.default_rng(1)
    uncertified = bad = n_true = 0
    for i in range(500):
        d = int(rng.integers(2, 9))
        if i % 2:
            A, B = dominance_pair(d, rng, positive=False)
        else:
            A, B = random_hermitian(d, rng), random_hermitian(d, rng)
        cert = leq_u(A, B)
        s = scale(A, B)
        if cert.verdict:
            n_true += 1
            if cert.witness is None:
                uncertified += 1
            elif np.linalg.eigvalsh(conjugate(cert.witness, B) - A.data)[0] < -1e-8 * s:
                bad += 1
        else:
            j = cert.violation_index
            if j is None:
                uncertified += 1
                continue
            la = np.linalg.eigvalsh(A.data)[::-1]
            lb = np.linalg.eigvalsh(B.data)[::-1]
            if not la[j - 1] - lb[j - 1] > 1e-8 * s:
                bad += 1
    ok = uncertified == 0 and bad == 0 and 0 < n_true < 500
    criterion(1, ok, f"500 pairs, {n_true} true verdicts, {bad} unsound, {uncertified} uncertified")
    assert ok


def test_2_uv6_chain(criterion):
    rep = run("uv6", ACCEPT)
    assert ACCEPT.tol_chain == 1e-7
    assert [g.to_json() for g in G_CATALOG] == [
        OMFunction.power(a).to_json() for a in (0.25, 0.5, 1.0)
    ] + [{"kind": "log"}]
    assert R_GRID == (0.5, 1.0, 2.0, 3.0)
    ok = rep.status == "pass" and rep.gray == 0 and rep.flags.get("log-shifted", 0) > 0
    criterion(2, ok, f"UV6 chain: {_summary(rep)}, log-shifted {rep.flags.get('log-shifted', 0)}")
    assert ok, rep.failures[:1]


def test_3_kosaki(criterion):
    rep = run("kosaki", ACCEPT)
    ok = rep.status == "pass" and rep.gray == 0 and rep.premise_hits == 200
    criterion(3, ok, f"exp preserves <=_u: {_summary(rep)}")
    assert ok, rep.failures[:1]


def test_4_loewner_heinz_and_log(criterion):
    rng = np.random.default_rng(4)
    lh_worst, log_worst = np.inf, np.inf
    for _ in range(200):
        d = int(rng.integers(2, 9))
        S = random_positive(d, rng).data
        T = S + random_positive(d, rng).data
        for alpha in (0.25, 0.5, 0.75, 1.0):
            gap = mpower(T, alpha).data - mpower(S, alpha).data
            lh_worst = min(lh_worst, np.linalg.eigvalsh(gap)[0] / scale(T))
    for _ in range(200):
        d = int(rng.integers(2, 9))
        A = random_positive(d, rng).data + 1e-2 * np.eye(d)
        B = A + random_positive(d, rng).data
        lA, lB = mlog(A).data, mlog(B).data
        log_worst = min(log_worst, np.linalg.eigvalsh(lB - lA)[0] / scale(lA, lB))
    ok = lh_worst >= -1e-8 and log_worst >= -1e-8
    criterion(4, ok, f"Loewner-Heinz worst {lh_worst:.2e}, log worst {log_worst:.2e} (>= -1e-8 scale)")
    assert ok


def test_5_uv5_forward(criterion):
    rep = run("uv5", ACCEPT)
    ok = rep.status == "pass" and rep.gray == 0 and rep.arms["forward"].hits == 200
    criterion(5, ok, f"B^2 <= A^2 => f(B) <= f(A): {_summary(rep)}")
    assert ok, rep.failures[:1]


def test_6_olson(criterion):
    rng = np.random.default_rng(6)
    agree = dominated = 0
    for i in range(300):
        d = int(rng.integers(2, 9))
        A, B = commuting_pair(d, rng, dominated=bool(i % 2))
        rep = olson_consistency(A, B)
        agree += rep.power_holds == rep.family_holds
        dominated += rep.family_holds
    hard = suspect = 0
    for _ in range(300):
        d = int(rng.integers(2, 9))
        cell = olson_consistency(random_positive(d, rng), random_positive(d, rng)).cell
        hard += cell == HARD_FAILURE
        suspect += cell == "truncation-suspect"
    A = np.array([[1.0, 1.0], [1.0, 1.0]])
    B = np.array([[2.0, 1.0], [1.0, 1.0]])
    det = np.linalg.det(B @ B - A @ A)
    known = olson_consistency(A / 3, B / 3)
    known_ok = det < 0 and not known.power_holds and known.first_power_failure == 2 and not known.family_holds
    ok = agree == 300 and 0 < dominated < 300 and hard == 0 and known_ok
    criterion(
        6, ok,
        f"commuting agreement {agree}/300 ({dominated} dominated), noncommuting HARD FAILURE {hard}/300 "
        f"({suspect} truncation-suspect), known pair det {det:.3f}, breaks at n={known.first_power_failure}",
    )
    assert ok


def test_7_rigidity(criterion):
    lines, ok = [], True
    for name in ("uv3", "u11", "pp"):
        rep = run(name, ACCEPT)
        com, non = rep.arms["commuting"], rep.arms["noncommuting"]
        this = (
            rep.status == "pass"
            and rep.gray == 0
            and com.hits == 200 and com.passed == 200
            and non.hits > 0 and non.failed == 0 and non.gray == 0
        )
        ok &= this
        lines.append(f"{name}: commuting {com.passed}/200, noncommuting {non.passed}/{non.hits}")
    criterion(7, ok, "; ".join(lines))
    assert ok


def test_8_theorem_ss(criterion):
    rep = run("ss", ACCEPT)
    ok = rep.status == "pass" and rep.gray == 0 and rep.premise_hits == 200 and ACCEPT.n_max == 12
    criterion(8, ok, f"single witness for n = 1..12: {_summary(rep)}")
    assert ok, rep.failures[:1]


def test_9_hyponormal_shadow(criterion):
    cfg = TrialConfig(dim=8, min_dim=2, trials=500, seed=2024)
    assert cfg.tol_hyponormal == 1e-10 and cfg.tol_normal == 1e-8
    rep = run("uv1", cfg)
    ok = rep.status == "pass" and rep.gray == 0 and rep.arms["construction"].hits == 500
    criterion(9, ok, f"hyponormal => normal: {_summary(rep)}")
    assert ok, rep.failures[:1]


def test_10_determinism(criterion, tmp_path, capsys):
    outs = []
    for k in range(2):
        path = tmp_path / f"run{k}.json"
        code = main(["suite", "--theorem", "all", "--seed", "42", "--out", str(path)])
        capsys.readouterr()
        reports = json.loads(path.read_text())
        for r in reports:
            r.pop("seconds")
        outs.append((code, reports))
    ok = outs[0] == outs[1] and outs[0][0] == 0 and len(outs[0][1]) == 9
    criterion(10, ok, f"two seeded runs of all 9 verifiers identical: {outs[0] == outs[1]}, exit {outs[0][0]}")
    assert ok
