"""Loewner order, the unitary-orbit order and its witnesses.

``A <=_u B`` means ``A <= U* B U`` for some unitary ``U``. For matrices this
is decided by comparing sorted eigenvalues: if ``lambda_j(A) <= lambda_j(B)``
for every ``j`` then ``U = V_B V_A*`` (ascending eigenbases) is a witness,
since ``U* B U - A = V_A (Lambda_B - Lambda_A) V_A*``. Conversely, Weyl
monotonicity rules out any witness once a single index is violated.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import (
    TOL,
    PSDReport,
    UnitaryMatrix,
    as_hermitian,
    as_positive,
    as_unitary,
    check_same_dim,
    conjugate,
    eig,
    is_psd,
    psd_report,
    scale,
)


class NoWitnessError(ValueError):
    """No unitary can satisfy ``A <= U* B U``."""

    def __init__(self, message, violation_index=None):
        super().__init__(message)
        self.violation_index = violation_index


@dataclass(frozen=True)
class OrderCertificate:
    """Verdict of ``A <=_u B`` with its proof.

    A true verdict carries the witness and the smallest eigenvalue of
    ``U* B U - A``. A false verdict carries ``violation_index``, a 1-based index
    ``j`` in the descending convention with ``lambda_j(A) > lambda_j(B) + tol``.
    """

    verdict: bool
    witness: UnitaryMatrix | None
    residual_min_eig: float
    violation_index: int | None = None
    margin: float = 0.0
    scale: float = 1.0
    gray: bool = False

    def __bool__(self):
        return self.verdict

    def to_json(self) -> dict:
        from .io import matrix_to_json

        return {
            "verdict": self.verdict,
            "witness": None if self.witness is None else matrix_to_json(self.witness.data),
            "residual_min_eig": self.residual_min_eig,
            "violation_index": self.violation_index,
        }


def loewner_leq(A, B, tol: float | None = None) -> PSDReport:
    """``A <= B`` in the Loewner order, i.e. ``B - A`` positive semidefinite."""
    check_same_dim(A, B)
    A, B = as_hermitian(A), as_hermitian(B)
    tol = TOL.psd if tol is None else tol
    D = B.data - A.data
    return psd_report(float(np.linalg.eigvalsh(D)[0]), scale(A, B), tol)


def canonical_witness(A, B) -> UnitaryMatrix:
    """``V_B V_A*`` from the ascending eigenbases, regardless of dominance."""
    VA = eig(A).eigenbasis.data
    VB = eig(B).eigenbasis.data
    return UnitaryMatrix(VB @ VA.conj().T)


def leq_u(A, B, tol: float | None = None) -> OrderCertificate:
    """Decide ``A <=_u B`` and certify the answer.

    Parameters
    ----------
    A, B : array_like or HermitianMatrix
    tol : float, optional
        Relative eigenvalue tolerance; defaults to ``tol_eig``. The witness
        residual is checked against the same tolerance.
    """
    check_same_dim(A, B)
    A, B = as_hermitian(A), as_hermitian(B)
    tol = TOL.eig if tol is None else tol
    s = scale(A, B)
    da, db = eig(A), eig(B)
    gaps = db.eigenvalues - da.eigenvalues
    worst = int(np.argmin(gaps))
    margin = float(gaps[worst])
    n = A.dim
    if margin < -tol * s:
        # ascending index i is descending index n - i (1-based)
        return OrderCertificate(
            verdict=False,
            witness=None,
            residual_min_eig=margin,
            violation_index=n - worst,
            margin=margin,
            scale=s,
        )
    U = UnitaryMatrix(db.eigenbasis.data @ da.eigenbasis.data.conj().T)
    resid = float(np.linalg.eigvalsh(conjugate(U, B) - A.data)[0])
    report = psd_report(resid, s, tol)
    return OrderCertificate(
        verdict=report.holds,
        witness=U,
        residual_min_eig=resid,
        violation_index=None,
        margin=margin,
        scale=s,
        gray=not report.holds,
    )


def witness(A, B, tol: float | None = None) -> UnitaryMatrix:
    """A unitary ``U`` with ``A <= U* B U``.

    Raises
    ------
    NoWitnessError
        If eigenvalue dominance fails; carries the violating index.
    """
    cert = leq_u(A, B, tol)
    if not cert.verdict:
        raise NoWitnessError(
            f"A is not <=_u B: lambda_{cert.violation_index}(A) exceeds lambda_{cert.violation_index}(B)",
            violation_index=cert.violation_index,
        )
    return cert.witness


def _normalized_power_gap(U, A, B, n: int) -> tuple[np.ndarray, float]:
    """``U* (B/s)^n U - (A/s)^n`` with ``s = max(||A||, ||B||)``."""
    a = eig(A)
    b = eig(B)
    s = max(abs(a.eigenvalues).max(), abs(b.eigenvalues).max())
    if s == 0:
        return np.zeros((A.dim, A.dim), dtype=complex), 1.0
    Bn = b.apply(np.clip(b.eigenvalues / s, 0.0, None) ** n)
    An = a.apply(np.clip(a.eigenvalues / s, 0.0, None) ** n)
    return conjugate(U, Bn) - An, s


def k_membership(U, A, B, n: int, tol: float | None = None) -> PSDReport:
    """PSD report for ``A^n <= U* B^n U`` on normalized inputs."""
    check_same_dim(U, A, B)
    if n < 1:
        raise ValueError(f"n must be a positive integer, got {n}")
    U = as_unitary(U)
    A, B = as_positive(A), as_positive(B)
    tol = TOL.psd if tol is None else tol
    gap, _ = _normalized_power_gap(U, A, B, n)
    return is_psd(gap, tol)


def in_K_n(U, A, B, n: int, tol: float | None = None) -> bool:
    """Membership of ``U`` in ``{U : A^n <= U* B^n U}`` for positive ``A, B``.

    Powers are taken after dividing both matrices by a common
    ``s = max(||A||, ||B||)``, which leaves the verdict unchanged.
    """
    return k_membership(U, A, B, n, tol).holds


def nested_K_property(U, A, B, n_max: int, tol: float | None = None) -> int | None:
    """First ``n <= n_max`` with ``U`` outside the n-th witness set, else ``None``.

    The witness sets shrink as ``n`` grows, so membership holds on a prefix
    ``{1, ..., k}`` and the returned break point is ``k + 1``. Past the break
    the normalized violation decays geometrically in ``n``, so for large ``n``
    it can fall under ``tol`` and a later membership test may pass again;
    only the first failure is meaningful.
    """
    for n in range(1, n_max + 1):
        if not in_K_n(U, A, B, n, tol):
            return n
    return None


def unitarily_equivalent(A, B, tol: float | None = None) -> bool:
    """Sorted spectra agree within ``tol_eig * scale``."""
    check_same_dim(A, B)
    tol = TOL.eig if tol is None else tol
    a = eig(A).eigenvalues
    b = eig(B).eigenvalues
    return bool(np.max(np.abs(a - b)) <= tol * scale(A, B))
