"""Spectral families ``E_lambda(A)`` and the spectral (power) order.

``E_lambda(A)`` projects onto the eigenvectors of ``A`` with eigenvalue
``<= lambda``. Eigenvalues closer than ``tol_cluster * scale`` are merged into
one threshold before projections are formed.

Orientation. For positive ``A, B`` the comparison used here is

    A^n <= B^n for all n   iff   E_lambda(B) <= E_lambda(A) for all lambda,

which is what the diagonal case forces: a larger operator crosses each
threshold later, so its spectral projections are smaller.
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass, field

import numpy as np

from .core import (
    TOL,
    DimensionMismatchError,
    HermitianMatrix,
    as_array,
    as_hermitian,
    as_positive,
    as_unitary,
    check_same_dim,
    conjugate,
    eig,
    is_psd,
    max_norm,
    scale,
)


class ProjectionError(TypeError):
    """Input fails the orthogonal-projection invariants."""


class Projection:
    """An orthogonal projection: Hermitian, idempotent, spectrum in ``{0, 1}``."""

    def __init__(self, entries, tol: float | None = None):
        tol = TOL.proj if tol is None else tol
        try:
            base = as_hermitian(entries, tol=tol)
        except ValueError as exc:
            raise ProjectionError(str(exc)) from exc
        P = base.data
        idem = max_norm(P @ P - P)
        if idem > tol:
            raise ProjectionError(f"not idempotent: max|P^2 - P| = {idem:.3e}")
        self.base = base
        self.rank = int(round(float(np.trace(P).real)))

    @property
    def data(self) -> np.ndarray:
        return self.base.data

    @property
    def dim(self) -> int:
        return self.base.dim

    def __array__(self, dtype=None, copy=None):
        return self.base.__array__(dtype)

    def __repr__(self):
        return f"Projection(dim={self.dim}, rank={self.rank})"

    @classmethod
    def onto(cls, vectors) -> "Projection":
        """Orthogonal projection onto the column span of ``vectors``."""
        X = np.asarray(vectors, dtype=complex)
        if X.ndim == 1:
            X = X[:, None]
        if X.shape[1] == 0:
            raise ValueError("need at least one vector")
        Q, R = np.linalg.qr(X)
        keep = np.abs(np.diag(R)) > 1e-12 * max(1.0, np.abs(R).max())
        Q = Q[:, keep]
        return cls(Q @ Q.conj().T)


def _cluster(values: np.ndarray, width: float) -> list[list[int]]:
    groups: list[list[int]] = []
    for i, v in enumerate(values):
        if groups and v - values[groups[-1][-1]] <= width:
            groups[-1].append(i)
        else:
            groups.append([i])
    return groups


@dataclass(frozen=True)
class SpectralFamily:
    """Cumulative spectral projections at the distinct (clustered) eigenvalues.

    ``projections[k]`` is ``E`` at ``thresholds[k]``; the last one is the identity.
    """

    thresholds: tuple[float, ...]
    projections: tuple[np.ndarray, ...]
    ranks: tuple[int, ...]
    dim: int
    increments: tuple[np.ndarray, ...] = field(repr=False, default=())

    def at(self, lam: float) -> np.ndarray:
        """``E_lam``: projection for the largest threshold ``<= lam``, else zero."""
        k = bisect_right(self.thresholds, lam)
        if k == 0:
            return np.zeros((self.dim, self.dim), dtype=complex)
        return self.projections[k - 1]

    def rank_at(self, lam: float) -> int:
        k = bisect_right(self.thresholds, lam)
        return 0 if k == 0 else self.ranks[k - 1]

    def reconstruct(self) -> np.ndarray:
        """``sum_k t_k (E_k - E_{k-1})``."""
        out = np.zeros((self.dim, self.dim), dtype=complex)
        for t, dP in zip(self.thresholds, self.increments):
            out += t * dP
        return out

    def to_json(self, verbose: bool = False) -> dict:
        obj = {"thresholds": list(self.thresholds), "ranks": list(self.ranks)}
        if verbose:
            from .io import matrix_to_json

            obj["projections"] = [matrix_to_json(P) for P in self.projections]
        return obj


def spectral_family(A, tol: float | None = None) -> SpectralFamily:
    """Spectral family of a Hermitian matrix.

    Thresholds are cluster means; a cluster is a maximal run of ascending
    eigenvalues whose consecutive gaps are at most ``tol * scale(A)``.
    """
    tol = TOL.cluster if tol is None else tol
    A = as_hermitian(A)
    dec = eig(A)
    w, V = dec.eigenvalues, dec.eigenbasis.data
    groups = _cluster(w, tol * scale(A))
    thresholds, projections, ranks, increments = [], [], [], []
    P = np.zeros((A.dim, A.dim), dtype=complex)
    count = 0
    for g in groups:
        Vg = V[:, g]
        dP = Vg @ Vg.conj().T
        P = P + dP
        count += len(g)
        thresholds.append(float(np.mean(w[g])))
        projections.append((P + P.conj().T) / 2)
        ranks.append(count)
        increments.append(dP)
    return SpectralFamily(tuple(thresholds), tuple(projections), tuple(ranks), A.dim, tuple(increments))


def _proj_array(P) -> np.ndarray:
    if isinstance(P, Projection):
        return P.data
    return Projection(as_array(P)).data


def projection_leq(P, Q, tol: float | None = None) -> bool:
    """``P <= Q`` for orthogonal projections, tested as ``ran P`` inside ``ran Q``.

    Raises
    ------
    ProjectionError
        If either input is not an orthogonal projection.
    """
    tol = TOL.proj if tol is None else tol
    P, Q = _proj_array(P), _proj_array(Q)
    if P.shape != Q.shape:
        raise DimensionMismatchError(f"dimension mismatch: {P.shape[0]} vs {Q.shape[0]}")
    return bool(max_norm((np.eye(P.shape[0]) - Q) @ P) <= tol)


def comparison_grid(*families: SpectralFamily, tol: float | None = None) -> list[float]:
    """Midpoints between consecutive merged thresholds, one point below the
    minimum and one above the maximum."""
    tol = TOL.cluster if tol is None else tol
    values = np.sort(np.concatenate([np.asarray(F.thresholds) for F in families]))
    s = max(1.0, float(np.max(np.abs(values))))
    merged = [float(np.mean(values[g])) for g in _cluster(values, tol * s)]
    grid = [merged[0] - 1.0]
    grid += [(a + b) / 2 for a, b in zip(merged, merged[1:])]
    grid.append(merged[-1] + 1.0)
    return grid


@dataclass(frozen=True)
class FamilyComparison:
    holds: bool
    grid: tuple[float, ...]
    per_lambda: tuple[bool, ...]

    def __bool__(self):
        return self.holds

    @property
    def first_failure(self) -> float | None:
        for lam, ok in zip(self.grid, self.per_lambda):
            if not ok:
                return lam
        return None


def family_leq(FA: SpectralFamily, FB: SpectralFamily, grid=None, tol: float | None = None) -> FamilyComparison:
    """``E_lambda(B) <= E_lambda(A)`` at every grid point.

    This is the spectral order "A below B" (see module docstring for the
    orientation). The default grid is :func:`comparison_grid`.
    """
    if FA.dim != FB.dim:
        raise DimensionMismatchError(f"dimension mismatch: {FA.dim} vs {FB.dim}")
    grid = comparison_grid(FA, FB) if grid is None else list(grid)
    results = tuple(projection_leq(FB.at(lam), FA.at(lam), tol) for lam in grid)
    return FamilyComparison(all(results), tuple(grid), results)


def _power_order(A, B, n_max: int, tol: float | None) -> int | None:
    """First ``n`` with ``A^n <= B^n`` failing, on commonly normalized inputs."""
    a, b = eig(A), eig(B)
    s = max(abs(a.eigenvalues).max(), abs(b.eigenvalues).max())
    if s == 0:
        return None
    ea = np.clip(a.eigenvalues / s, 0.0, None)
    eb = np.clip(b.eigenvalues / s, 0.0, None)
    for n in range(1, n_max + 1):
        if not is_psd(b.apply(eb**n) - a.apply(ea**n), tol).holds:
            return n
    return None


@dataclass(frozen=True)
class OlsonForward:
    family_holds: bool
    first_failure: int | None

    @property
    def ok(self) -> bool:
        """False only when the family order holds and a power comparison fails."""
        return not (self.family_holds and self.first_failure is not None)

    def __bool__(self):
        return self.ok


def olson_forward(A, B, n_max: int = 12, tol: float | None = None) -> OlsonForward:
    """Check that family order forces ``A^n <= B^n`` for ``n = 1..n_max``.

    The first failing power is reported whether or not the family order holds.
    """
    check_same_dim(A, B)
    A, B = as_positive(A), as_positive(B)
    fam = bool(family_leq(spectral_family(A), spectral_family(B)))
    return OlsonForward(fam, _power_order(A, B, n_max, tol))


AGREE = "agree"
TRUNCATION_SUSPECT = "truncation-suspect"
HARD_FAILURE = "HARD FAILURE"


@dataclass(frozen=True)
class OlsonReport:
    power_holds: bool
    family_holds: bool
    first_power_failure: int | None

    @property
    def cell(self) -> str:
        if self.power_holds == self.family_holds:
            return AGREE
        if self.power_holds:
            return TRUNCATION_SUSPECT
        return HARD_FAILURE


def olson_consistency(A, B, n_max: int = 12, tol: float | None = None) -> OlsonReport:
    """Cross-tabulate power order (``n <= n_max``) against family order.

    ``(power, not family)`` is flagged as truncation-suspect since only finitely
    many powers are checked; ``(not power, family)`` contradicts the equivalence.
    """
    fwd = olson_forward(A, B, n_max, tol)
    return OlsonReport(fwd.first_failure is None, fwd.family_holds, fwd.first_failure)


def family_conjugation_covariance(A, U) -> float:
    """``max_k max|E_k(U*AU) - U* E_k(A) U|`` over matched thresholds."""
    A = as_hermitian(A)
    U = as_unitary(U)
    FA = spectral_family(A)
    FC = spectral_family(HermitianMatrix(conjugate(U, A)))
    if FA.ranks != FC.ranks:
        # clustering split differently; compare on the joint grid instead
        grid = comparison_grid(FA, FC)
        return max(max_norm(FC.at(lam) - conjugate(U, FA.at(lam))) for lam in grid)
    return max(max_norm(PC - conjugate(U, PA)) for PA, PC in zip(FA.projections, FC.projections))
