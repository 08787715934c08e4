"""Seeded verification of operator inequalities for the unitary-orbit order.

Each verifier draws ``cfg.trials`` independent trials. A trial derives its own
generator from ``(cfg.seed, theorem id, trial index)``, so results do not
depend on execution order or on ``cfg.jobs``. Every trial records, per arm,
whether the premise was met and how each check came out; checks missing their
threshold by less than ``GRAY_FACTOR`` times the tolerance are counted as
gray, not as failures.
"""

from __future__ import annotations

import math
import time
import zlib
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field

import numpy as np

from .calculus import OCFunction, OMFunction, apply_oc, apply_scalar_fn, compose_chain, log_shift, mexp
from .core import (
    GRAY_FACTOR,
    HermitianMatrix,
    UnitaryMatrix,
    commutator_norm,
    conjugate,
    hyponormal_defect,
    max_norm,
    normality_defect,
    polar,
    scale,
)
from .family import family_conjugation_covariance, projection_leq, spectral_family
from .generators import (
    dominance_pair,
    finite_order_unitary,
    ginibre,
    haar_unitary,
    random_hermitian,
    random_positive,
    random_projection,
    truncated_shift,
)
from .io import matrix_to_json
from .order import k_membership, leq_u, loewner_leq, nested_K_property, witness

MAX_SUITE_DIM = 16
R_GRID = (0.5, 1.0, 2.0, 3.0)
G_CATALOG = (
    OMFunction.power(0.25),
    OMFunction.power(0.5),
    OMFunction.power(1.0),
    OMFunction.log(),
)
# Minimum commutator (relative to scale) for a noncommuting arm to count.
COMMUTATOR_FLOOR = 0.01


@dataclass(frozen=True)
class TrialConfig:
    """Suite parameters.

    ``dim`` is the matrix size; with ``min_dim`` set, each trial draws its size
    uniformly from ``[min_dim, dim]``.
    """

    dim: int = 4
    trials: int = 200
    seed: int = 0
    n_max: int = 12
    min_dim: int | None = None
    n_functions: int = 50
    jobs: int = 1
    tol_chain: float = 1e-7
    tol_order: float = 1e-8
    tol_equal: float = 1e-9
    tol_hyponormal: float = 1e-10
    tol_normal: float = 1e-8

    def __post_init__(self):
        if not 1 <= self.dim <= MAX_SUITE_DIM:
            raise ValueError(f"suite dim must lie in [1, {MAX_SUITE_DIM}], got {self.dim}")
        if self.min_dim is not None and not 1 <= self.min_dim <= self.dim:
            raise ValueError(f"min_dim must lie in [1, dim], got {self.min_dim}")
        if self.trials < 1:
            raise ValueError("trials must be >= 1")
        if self.n_max < 1:
            raise ValueError("n_max must be >= 1")
        if self.jobs < 1:
            raise ValueError("jobs must be >= 1")


def theorem_key(theorem: str) -> int:
    return zlib.crc32(theorem.encode())


def trial_rng(seed: int, theorem: str, index: int) -> np.random.Generator:
    """The generator used by trial ``index`` of ``theorem``; use it to replay a failure."""
    ss = np.random.SeedSequence(entropy=seed, spawn_key=(theorem_key(theorem), index))
    return np.random.default_rng(ss)


class Trial:
    """Recorder for one trial: premise hits, check outcomes, flags and inputs."""

    def __init__(self, index: int):
        self.index = index
        self.hits: dict[str, bool] = {}
        self.checks: list[dict] = []
        self.flags: list[str] = []
        self.inputs: dict = {}

    def hit(self, arm: str) -> None:
        self.hits[arm] = True

    def miss(self, arm: str) -> None:
        self.hits.setdefault(arm, False)

    def flag(self, name: str) -> None:
        self.flags.append(name)

    def record(self, **mats) -> None:
        self.inputs.update(mats)

    def check(self, arm: str, label: str, ok: bool, residual: float, gray: bool = False, extra=None) -> bool:
        status = "pass" if ok else ("gray" if gray else "fail")
        self.checks.append(
            {"arm": arm, "label": label, "status": status, "residual": float(residual), "extra": extra}
        )
        return ok

    def psd(self, arm: str, label: str, min_eig: float, scale_: float, tol: float, extra=None) -> bool:
        """Check ``min_eig >= -tol * scale_`` with a gray band below it."""
        threshold = -tol * scale_
        ok = min_eig >= threshold
        gray = not ok and min_eig >= GRAY_FACTOR * threshold
        return self.check(arm, label, ok, min_eig / scale_, gray, extra)

    def small(self, arm: str, label: str, value: float, bound: float, extra=None) -> bool:
        """Check ``value <= bound`` with a gray band above it."""
        ok = value <= bound
        gray = not ok and value <= GRAY_FACTOR * bound
        return self.check(arm, label, ok, value, gray, extra)

    @property
    def status(self) -> str:
        states = {c["status"] for c in self.checks}
        if "fail" in states:
            return "fail"
        if "gray" in states:
            return "gray"
        return "pass" if any(self.hits.values()) else "vacuous"

    def summary(self) -> dict:
        failing = [c for c in self.checks if c["status"] != "pass"]
        return {
            "index": self.index,
            "status": self.status,
            "hits": dict(self.hits),
            "flags": list(self.flags),
            "checks": len(self.checks),
            "failing": failing,
            "worst": min((c["residual"] for c in self.checks), default=0.0),
            "inputs": _inputs_json(self.inputs) if failing else None,
            "arm_status": _arm_status(self.checks),
        }


def _arm_status(checks) -> dict:
    out: dict[str, str] = {}
    rank = {"pass": 0, "gray": 1, "fail": 2}
    for c in checks:
        prev = out.get(c["arm"], "pass")
        out[c["arm"]] = c["status"] if rank[c["status"]] > rank[prev] else prev
    return out


def _inputs_json(inputs: dict) -> dict:
    out = {}
    for name, value in inputs.items():
        if isinstance(value, (OCFunction, OMFunction)):
            out[name] = value.to_json()
        elif isinstance(value, (int, float, str)):
            out[name] = value
        else:
            out[name] = matrix_to_json(np.asarray(value))
    return out


@dataclass
class ArmStats:
    hits: int = 0
    passed: int = 0
    failed: int = 0
    gray: int = 0


@dataclass
class SuiteReport:
    """Aggregate of one verifier run. ``failures`` is empty iff no check failed."""

    theorem: str
    trials: int
    premise_hits: int
    failures: list = field(default_factory=list)
    gray: int = 0
    seconds: float = 0.0
    arms: dict = field(default_factory=dict)
    flags: dict = field(default_factory=dict)
    seed: int = 0

    @property
    def vacuous(self) -> bool:
        """Some arm never had its premise met."""
        return self.premise_hits == 0 or any(a.hits == 0 for a in self.arms.values())

    @property
    def passed(self) -> bool:
        return not self.failures and not self.vacuous

    @property
    def status(self) -> str:
        if self.failures:
            return "fail"
        return "vacuous" if self.vacuous else "pass"

    def verdicts(self) -> dict:
        """Everything but timing; equal for equal configs."""
        d = self.to_json()
        d.pop("seconds")
        return d

    def to_json(self) -> dict:
        return {
            "theorem": self.theorem,
            "status": self.status,
            "seed": self.seed,
            "trials": self.trials,
            "premise_hits": self.premise_hits,
            "failures": self.failures,
            "gray": self.gray,
            "seconds": self.seconds,
            "arms": {k: asdict(v) for k, v in self.arms.items()},
            "flags": dict(self.flags),
        }


def _dim(rng: np.random.Generator, cfg: TrialConfig) -> int:
    if cfg.min_dim is None:
        return cfg.dim
    return int(rng.integers(cfg.min_dim, cfg.dim + 1))


def _min_eig(M) -> float:
    return float(np.linalg.eigvalsh(np.asarray(M))[0])


def traceless_bound(M) -> float:
    """``-||M||_F / ((d - 1) sqrt(d))``, an upper bound on ``min eig(M)`` for
    nonzero traceless Hermitian ``M`` of size ``d >= 2``."""
    M = np.asarray(M)
    d = M.shape[0]
    return -float(np.linalg.norm(M, "fro")) / ((d - 1) * math.sqrt(d))


def _degenerate_spectrum(d: int, rng) -> np.ndarray:
    k = int(rng.integers(1, d + 1))
    levels = np.sort(rng.uniform(0.0, 2.0, size=k))
    return rng.choice(levels, size=d)


def _block_unitary(values: np.ndarray, W: np.ndarray, rng, n0: int | None) -> np.ndarray:
    """``W diag(U_1, ..., U_k) W*`` with one block per distinct value of ``values``
    (in the order of ``values``); blocks have order ``n0`` or are Haar."""
    d = len(values)
    inner = np.zeros((d, d), dtype=complex)
    for v in np.unique(values):
        idx = np.flatnonzero(values == v)
        m = len(idx)
        blk = haar_unitary(m, rng).data if n0 is None else finite_order_unitary(m, n0, rng).data
        inner[np.ix_(idx, idx)] = blk
    return W @ inner @ W.conj().T


def _traceless_arm(t: Trial, arm: str, M, s: float, cfg: TrialConfig) -> None:
    bound = traceless_bound(M)
    m = _min_eig(M)
    t.check(arm, "traceless bound", m <= bound + cfg.tol_equal * s, m - bound, extra={"bound": bound})


# -- verifiers ---------------------------------------------------------------


def trial_kosaki(rng, cfg: TrialConfig, t: Trial) -> None:
    d = _dim(rng, cfg)
    A, B = dominance_pair(d, rng, positive=False)
    t.record(A=A.data, B=B.data)
    if not leq_u(A, B, cfg.tol_order):
        t.miss("main")
        return
    t.hit("main")
    cert = leq_u(mexp(A), mexp(B), cfg.tol_chain)
    if cert.witness is None:
        t.check("main", "exp dominance", False, cert.margin / cert.scale, extra={"violation_index": cert.violation_index})
        return
    t.psd("main", "exp witness", cert.residual_min_eig, cert.scale, cfg.tol_chain)


def trial_uv6(rng, cfg: TrialConfig, t: Trial) -> None:
    d = _dim(rng, cfg)
    A, B = dominance_pair(d, rng, positive=True)
    t.record(A=A.data, B=B.data)
    base = leq_u(A, B, cfg.tol_order)
    # converse direction: f = id, g = id, r = 1 recovers the premise
    t.check("converse", "identity chain", base.verdict, base.margin / base.scale)
    if not base:
        t.miss("main")
        return
    t.hit("converse")
    t.hit("main")
    g = G_CATALOG[int(rng.integers(len(G_CATALOG)))]
    r = float(R_GRID[int(rng.integers(len(R_GRID)))])
    Ax, Bx = A.data, B.data
    if g.kind == "log":
        c = log_shift(A, B)
        Ax = Ax + c * np.eye(d)
        Bx = Bx + c * np.eye(d)
        t.flag("log-shifted")
    t.record(g=g, r=r)
    for k in range(cfg.n_functions):
        f = OCFunction.sample(rng)
        h = compose_chain(f, g, r)
        hA, hB = apply_scalar_fn(h, Ax), apply_scalar_fn(h, Bx)
        cert = leq_u(hA, hB, cfg.tol_chain)
        extra = {"f": f.to_json(), "g": g.to_json(), "r": r}
        if cert.witness is None:
            t.check("main", f"chain {k}", False, cert.margin / cert.scale, extra=extra)
        else:
            t.psd("main", f"chain {k}", cert.residual_min_eig, cert.scale, cfg.tol_chain, extra=extra)


def trial_uv5(rng, cfg: TrialConfig, t: Trial) -> None:
    d = _dim(rng, cfg)
    B = random_positive(d, rng).data
    D = random_positive(d, rng, rank=int(rng.integers(0, d + 1))).data * rng.uniform(0.0, 1.0)
    A = apply_scalar_fn(lambda x: np.sqrt(x), B @ B + D, tol=1e-9).data
    t.record(A=A, B=B, D=D)
    premise = loewner_leq(B @ B, A @ A, cfg.tol_order)
    if not premise:
        t.miss("forward")
        return
    t.hit("forward")
    for k in range(cfg.n_functions):
        f = OCFunction.sample(rng)
        fA, fB = apply_oc(f, A).data, apply_oc(f, B).data
        t.psd("forward", f"f{k}", _min_eig(fA - fB), scale(fA, fB), cfg.tol_order, extra={"f": f.to_json()})
    # f(t) = t^2 instance of the converse: f(B) <= f(A) must give back B^2 <= A^2
    sq = OCFunction.square()
    fA, fB = apply_oc(sq, A).data, apply_oc(sq, B).data
    t.hit("converse")
    t.psd("converse", "square", _min_eig(fA - fB), scale(fA, fB), cfg.tol_order)


def trial_uv3(rng, cfg: TrialConfig, t: Trial) -> None:
    d = _dim(rng, cfg)
    n0 = int(rng.integers(2, 5))
    # commuting arm: U of order n0 acting inside the eigenspaces of B, A = B
    b = _degenerate_spectrum(d, rng) - 1.0
    W = haar_unitary(d, rng).data
    B = (W * b) @ W.conj().T
    B = (B + B.conj().T) / 2
    U = _block_unitary(b, W, rng, n0)
    s = scale(B)
    A = B
    t.record(B_commuting=B, U_commuting=U)
    t.small("commuting", "U^n0 = I", max_norm(np.linalg.matrix_power(U, n0) - np.eye(d)), cfg.tol_equal * n0)
    UBU = conjugate(U, B)
    if loewner_leq(B, A, cfg.tol_order) and loewner_leq(A, UBU, cfg.tol_order):
        t.hit("commuting")
        t.small("commuting", "U*BU = B", max_norm(UBU - B), cfg.tol_equal * s)
    else:
        t.miss("commuting")
    # noncommuting arm: the premise B <= U*BU must fail with a certified margin
    B2 = random_hermitian(d, rng).data
    U2 = finite_order_unitary(d, n0, rng).data
    s2 = scale(B2)
    t.record(B=B2, U=U2)
    if d < 2 or commutator_norm(U2, B2) < COMMUTATOR_FLOOR * s2:
        t.miss("noncommuting")
        return
    t.hit("noncommuting")
    M = conjugate(U2, B2) - B2
    rep = loewner_leq(B2, conjugate(U2, B2), cfg.tol_equal)
    t.check("noncommuting", "premise fails", not rep.holds and not rep.gray, rep.min_eig / s2)
    _traceless_arm(t, "noncommuting", M, s2, cfg)


def trial_u11(rng, cfg: TrialConfig, t: Trial) -> None:
    d = _dim(rng, cfg)
    # commuting arm: U block diagonal with respect to ran P
    k = int(rng.integers(0, d + 1))
    W = haar_unitary(d, rng).data
    marks = np.array([1.0] * k + [0.0] * (d - k))
    P = (W * marks) @ W.conj().T
    P = (P + P.conj().T) / 2
    U = _block_unitary(marks, W, rng, None)
    t.record(P_commuting=P, U_commuting=U)
    UPU = conjugate(U, P)
    if projection_leq(P, UPU):
        t.hit("commuting")
        t.small("commuting", "U*PU = P", max_norm(UPU - P), cfg.tol_equal)
    else:
        t.miss("commuting")
    # noncommuting arm
    if d < 2:
        t.miss("noncommuting")
        return
    k2 = int(rng.integers(1, d))
    P2 = random_projection(d, k2, rng)
    U2 = haar_unitary(d, rng).data
    t.record(P=P2, U=U2)
    if commutator_norm(U2, P2) < COMMUTATOR_FLOOR:
        t.miss("noncommuting")
        return
    t.hit("noncommuting")
    UPU2 = conjugate(U2, P2)
    t.check("noncommuting", "P <= U*PU fails", not projection_leq(P2, UPU2), 0.0)
    _traceless_arm(t, "noncommuting", UPU2 - P2, 1.0, cfg)


def trial_pp(rng, cfg: TrialConfig, t: Trial) -> None:
    d = _dim(rng, cfg)
    # commuting arm
    a = _degenerate_spectrum(d, rng)
    W = haar_unitary(d, rng).data
    A = (W * a) @ W.conj().T
    A = (A + A.conj().T) / 2
    U = _block_unitary(a, W, rng, None)
    s = scale(A)
    t.record(A_commuting=A, U_commuting=U)
    if nested_K_property(U, A, A, cfg.n_max, cfg.tol_equal) is None:
        t.hit("commuting")
        t.small("commuting", "U*AU = A", max_norm(conjugate(U, A) - A), cfg.tol_equal * s)
        # proof path: E(A) <= E(U*AU) = U* E(A) U forces U* E(A) U = E(A)
        t.small("commuting", "family covariance", family_conjugation_covariance(A, U), 1e-8)
        worst = 0.0
        for E in spectral_family(A).projections:
            UEU = conjugate(U, E)
            if not projection_leq(E, UEU):
                t.check("commuting", "E <= U*EU", False, max_norm(UEU - E))
            worst = max(worst, max_norm(UEU - E))
        t.small("commuting", "U*EU = E", worst, cfg.tol_equal * d)
    else:
        t.miss("commuting")
    # noncommuting arm
    A2 = random_positive(d, rng).data
    U2 = haar_unitary(d, rng).data
    s2 = scale(A2)
    t.record(A=A2, U=U2)
    c = commutator_norm(U2, A2)
    if d < 2 or c == 0:
        t.miss("noncommuting")
        return
    first = nested_K_property(U2, A2, A2, cfg.n_max, cfg.tol_equal)
    if c < COMMUTATOR_FLOOR * s2:
        if first is None:
            t.flag("truncation-suspect")
        t.miss("noncommuting")
        return
    t.hit("noncommuting")
    t.check("noncommuting", "power premise breaks", first is not None, float(first or 0))
    _traceless_arm(t, "noncommuting", conjugate(U2, A2) - A2, s2, cfg)


def trial_ss(rng, cfg: TrialConfig, t: Trial) -> None:
    d = _dim(rng, cfg)
    A, B = dominance_pair(d, rng, positive=True)
    t.record(A=A.data, B=B.data)
    if not leq_u(A, B, cfg.tol_order):
        t.miss("main")
        return
    t.hit("main")
    U = witness(A, B, cfg.tol_order)
    for n in range(1, cfg.n_max + 1):
        rep = k_membership(U, A, B, n, cfg.tol_order)
        t.psd("main", f"n={n}", rep.min_eig, rep.scale, cfg.tol_order)


_UV1_KINDS = ("ginibre", "normal", "near-normal", "hermitian", "shift")


def trial_uv1(rng, cfg: TrialConfig, t: Trial) -> None:
    d = _dim(rng, cfg)
    kind = _UV1_KINDS[t.index % len(_UV1_KINDS)]
    if kind == "ginibre":
        T = ginibre(d, rng)
    elif kind in ("normal", "near-normal"):
        W = haar_unitary(d, rng).data
        z = rng.standard_normal(d) + 1j * rng.standard_normal(d)
        T = (W * z) @ W.conj().T
        if kind == "near-normal":
            T = T + 1e-12 * ginibre(d, rng)
    elif kind == "hermitian":
        T = random_hermitian(d, rng).data
    else:
        T = truncated_shift(rng.uniform(0.0, 1.0, size=d - 1)) if d > 1 else np.zeros((1, 1), complex)
    s = scale(T)
    t.record(T=T)
    if hyponormal_defect(T) >= -cfg.tol_hyponormal * s:
        t.hit("shadow")
        t.small("shadow", "normal", normality_defect(T), cfg.tol_normal * s)
    else:
        t.miss("shadow")
    # construction T = (B + lam)^(1/2) U: T*T - TT* = U*(B + lam)U - (B + lam)
    B = random_hermitian(d, rng).data
    lam = 1.0 + max(0.0, -_min_eig(B))
    shifted = B + lam * np.eye(d)
    root = apply_scalar_fn(np.sqrt, shifted).data
    n0 = int(rng.integers(2, 5))
    U = finite_order_unitary(d, n0, rng).data
    T2 = root @ U
    s2 = scale(shifted)
    t.record(B=B, U=U)
    t.hit("construction")
    gap = T2.conj().T @ T2 - T2 @ T2.conj().T
    t.small("construction", "display identity", max_norm(gap - (conjugate(U, shifted) - shifted)), cfg.tol_hyponormal * s2)
    V = polar(T2).unitary.data
    t.small("construction", "polar factor is U", max_norm(V - U), cfg.tol_order * s2)
    # with U acting inside the eigenspaces of B the premise holds and T is normal
    b = _degenerate_spectrum(d, rng) - 1.0
    W = haar_unitary(d, rng).data
    Bc = (W * b) @ W.conj().T
    Bc = (Bc + Bc.conj().T) / 2
    lam_c = 1.0 + max(0.0, -float(b.min()))
    Uc = _block_unitary(b, W, rng, n0)
    Tc = apply_scalar_fn(np.sqrt, Bc + lam_c * np.eye(d)).data @ Uc
    sc = scale(Tc)
    if hyponormal_defect(Tc) >= -cfg.tol_hyponormal * sc:
        t.hit("commuting")
        t.small("commuting", "T normal", normality_defect(Tc), cfg.tol_normal * sc)
        t.small("commuting", "U*BU = B", max_norm(conjugate(Uc, Bc) - Bc), cfg.tol_equal * scale(Bc))
    else:
        t.miss("commuting")


def trial_uv2(rng, cfg: TrialConfig, t: Trial) -> None:
    d = _dim(rng, cfg)
    p, q = (int(x) for x in rng.integers(1, 7, size=2))
    W = haar_unitary(d, rng).data
    U = finite_order_unitary(d, p, rng, basis=W).data
    if t.index % 5 == 0:
        V, q = U.conj().T, p
    else:
        V = finite_order_unitary(d, q, rng, basis=W).data
    t.record(U=U, V=V, p=p, q=q)
    if commutator_norm(U, V) > 1e-10:
        t.miss("main")
        return
    t.hit("main")
    L = math.lcm(p, q)
    t.small("main", f"(UV)^{L} = I", max_norm(np.linalg.matrix_power(U @ V, L) - np.eye(d)), cfg.tol_equal * L)


VERIFIERS = {
    "kosaki": trial_kosaki,
    "uv6": trial_uv6,
    "uv5": trial_uv5,
    "uv3": trial_uv3,
    "u11": trial_u11,
    "pp": trial_pp,
    "ss": trial_ss,
    "uv1": trial_uv1,
    "uv2": trial_uv2,
}


def _run_trial(theorem: str, cfg: TrialConfig, index: int) -> dict:
    t = Trial(index)
    VERIFIERS[theorem](trial_rng(cfg.seed, theorem, index), cfg, t)
    return t.summary()


def _run_chunk(args) -> list[dict]:
    theorem, cfg, indices = args
    return [_run_trial(theorem, cfg, i) for i in indices]


def run(theorem: str, cfg: TrialConfig) -> SuiteReport:
    """Run one verifier and aggregate its trials in index order."""
    if theorem not in VERIFIERS:
        raise KeyError(f"unknown theorem id {theorem!r}; choose from {', '.join(VERIFIERS)}")
    start = time.perf_counter()
    if cfg.jobs > 1 and cfg.trials > 1:
        chunks = [list(range(cfg.trials))[j :: cfg.jobs] for j in range(cfg.jobs)]
        with ProcessPoolExecutor(max_workers=cfg.jobs) as pool:
            parts = pool.map(_run_chunk, [(theorem, cfg, c) for c in chunks if c])
            summaries = sorted((s for part in parts for s in part), key=lambda s: s["index"])
    else:
        summaries = [_run_trial(theorem, cfg, i) for i in range(cfg.trials)]
    return _aggregate(theorem, cfg, summaries, time.perf_counter() - start)


def _aggregate(theorem: str, cfg: TrialConfig, summaries: list[dict], seconds: float) -> SuiteReport:
    arms: dict[str, ArmStats] = {}
    flags: dict[str, int] = {}
    failures = []
    gray = 0
    hits = 0
    for s in summaries:
        for arm, hit in s["hits"].items():
            st = arms.setdefault(arm, ArmStats())
            st.hits += int(hit)
        for arm, status in s["arm_status"].items():
            st = arms.setdefault(arm, ArmStats())
            if status == "pass":
                st.passed += 1
            elif status == "gray":
                st.gray += 1
            else:
                st.failed += 1
        for name in s["flags"]:
            flags[name] = flags.get(name, 0) + 1
        hits += int(any(s["hits"].values()))
        if s["status"] == "gray":
            gray += 1
        if s["status"] == "fail":
            failures.append(
                {
                    "seed": cfg.seed,
                    "trial": s["index"],
                    "residual": s["worst"],
                    "checks": [c for c in s["failing"] if c["status"] == "fail"],
                    "payload": s["inputs"],
                }
            )
    return SuiteReport(theorem, len(summaries), hits, failures, gray, seconds, arms, flags, cfg.seed)


def run_all(cfg: TrialConfig, theorems=None) -> list[SuiteReport]:
    """Run every verifier (or the selected ones); never stops early."""
    return [run(name, cfg) for name in (theorems or VERIFIERS)]
