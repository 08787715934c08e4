"""Hermitian, positive and unitary matrix types with an explicit tolerance policy.

Every check in the package is relative to ``scale(M) = max(1, ||M||_2)``.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, replace

import numpy as np

TOL_ENV_VAR = "UNITARY_ORDER_TOL"

# Gray-zone width, as a multiple of the tolerance.
GRAY_FACTOR = 10.0


class DecompositionError(np.linalg.LinAlgError):
    """Raised when an eigensolver or factorization does not converge."""


class SingularMatrixError(np.linalg.LinAlgError):
    """Raised when an operation needs an invertible matrix and does not get one."""


class DimensionMismatchError(ValueError):
    pass


class DomainError(ValueError):
    """A spectrum falls outside the domain of a scalar function."""

    def __init__(self, message, eigenvalue=None):
        super().__init__(message)
        self.eigenvalue = eigenvalue


@dataclass(frozen=True)
class Tolerances:
    """Relative tolerances, each multiplied by ``scale(.)`` at the point of use."""

    sym: float = 1e-10
    unitary: float = 1e-10
    psd: float = 1e-9
    recon: float = 1e-9
    eig: float = 1e-8
    cluster: float = 1e-7
    proj: float = 1e-8
    normal: float = 1e-8
    condition_cap: float = 1e12

    def scaled(self, factor: float) -> "Tolerances":
        """Multiply every tolerance (not the condition cap) by ``factor``."""
        if factor <= 0:
            raise ValueError(f"tolerance scale must be positive, got {factor}")
        return replace(
            self,
            sym=self.sym * factor,
            unitary=self.unitary * factor,
            psd=self.psd * factor,
            recon=self.recon * factor,
            eig=self.eig * factor,
            cluster=self.cluster * factor,
            proj=self.proj * factor,
            normal=self.normal * factor,
        )


def default_tolerances() -> Tolerances:
    """Defaults, rescaled by the ``UNITARY_ORDER_TOL`` environment variable if set."""
    raw = os.environ.get(TOL_ENV_VAR)
    if not raw:
        return Tolerances()
    return Tolerances().scaled(float(raw))


TOL = default_tolerances()


def _array(M) -> np.ndarray:
    if isinstance(M, (HermitianMatrix, UnitaryMatrix)):
        return M.data
    if isinstance(M, PositiveMatrix):
        return M.base.data
    a = np.asarray(M, dtype=complex)
    if a.ndim == 0:
        a = a.reshape(1, 1)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    return a


def as_array(M) -> np.ndarray:
    """Return the complex square ndarray behind any matrix-like input."""
    return _array(M)


def dagger(M) -> np.ndarray:
    return _array(M).conj().T


def max_norm(M) -> float:
    a = np.asarray(M)
    return float(np.max(np.abs(a))) if a.size else 0.0


def spectral_norm(M) -> float:
    return float(np.linalg.norm(_array(M), 2))


def scale(*mats) -> float:
    """``max(1, ||M||_2)`` over all arguments."""
    return max([1.0] + [spectral_norm(M) for M in mats])


def check_same_dim(*mats) -> int:
    dims = {_array(M).shape[0] for M in mats}
    if len(dims) != 1:
        raise DimensionMismatchError(f"dimension mismatch: {sorted(dims)}")
    return dims.pop()


class HermitianMatrix:
    """A complex self-adjoint matrix, stored in symmetrized form.

    Parameters
    ----------
    entries : array_like
        Square matrix. Must satisfy ``max|M - M*| <= tol_sym * max(1, max|M|)``.
    """

    __array_priority__ = 10

    def __init__(self, entries, tol: float | None = None):
        a = np.array(entries, dtype=complex)
        if a.ndim == 0:
            a = a.reshape(1, 1)
        if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] < 1:
            raise ValueError(f"expected a non-empty square matrix, got shape {a.shape}")
        tol = TOL.sym if tol is None else tol
        asym = max_norm(a - a.conj().T)
        if asym > tol * max(1.0, max_norm(a)):
            raise ValueError(f"matrix is not Hermitian: max|M - M*| = {asym:.3e}")
        self.data = (a + a.conj().T) / 2
        self.data.setflags(write=False)

    @property
    def dim(self) -> int:
        return self.data.shape[0]

    def __array__(self, dtype=None, copy=None):
        return self.data if dtype is None else self.data.astype(dtype)

    def __repr__(self):
        return f"HermitianMatrix(dim={self.dim})"

    def __eq__(self, other):
        return isinstance(other, HermitianMatrix) and np.array_equal(self.data, other.data)

    __hash__ = None


class PositiveMatrix:
    """A Hermitian matrix with ``min eig >= -tol_psd * scale``."""

    def __init__(self, base, tol: float | None = None):
        base = as_hermitian(base)
        tol = TOL.psd if tol is None else tol
        lo = float(np.linalg.eigvalsh(base.data)[0])
        if lo < -tol * scale(base):
            raise ValueError(f"matrix is not positive semidefinite: min eigenvalue {lo:.3e}")
        self.base = base
        self.min_eig = lo

    @property
    def dim(self) -> int:
        return self.base.dim

    @property
    def data(self) -> np.ndarray:
        return self.base.data

    def __array__(self, dtype=None, copy=None):
        return self.base.__array__(dtype)

    def __repr__(self):
        return f"PositiveMatrix(dim={self.dim}, min_eig={self.min_eig:.3g})"


class UnitaryMatrix:
    """A square matrix with ``max|U*U - I| <= tol_unitary``."""

    __array_priority__ = 10

    def __init__(self, entries, tol: float | None = None):
        a = np.array(entries, dtype=complex)
        if a.ndim == 0:
            a = a.reshape(1, 1)
        if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] < 1:
            raise ValueError(f"expected a non-empty square matrix, got shape {a.shape}")
        tol = TOL.unitary if tol is None else tol
        err = max_norm(a.conj().T @ a - np.eye(a.shape[0]))
        if err > tol:
            raise ValueError(f"matrix is not unitary: max|U*U - I| = {err:.3e}")
        self.data = a
        self.data.setflags(write=False)

    @property
    def dim(self) -> int:
        return self.data.shape[0]

    @property
    def H(self) -> np.ndarray:
        return self.data.conj().T

    def __array__(self, dtype=None, copy=None):
        return self.data if dtype is None else self.data.astype(dtype)

    def __repr__(self):
        return f"UnitaryMatrix(dim={self.dim})"


def as_hermitian(M, tol: float | None = None) -> HermitianMatrix:
    if isinstance(M, HermitianMatrix):
        return M
    if isinstance(M, PositiveMatrix):
        return M.base
    return HermitianMatrix(_array(M), tol=tol)


def as_positive(M, tol: float | None = None) -> PositiveMatrix:
    if isinstance(M, PositiveMatrix):
        return M
    return PositiveMatrix(M, tol=tol)


def as_unitary(U, tol: float | None = None) -> UnitaryMatrix:
    if isinstance(U, UnitaryMatrix):
        return U
    return UnitaryMatrix(_array(U), tol=tol)


@dataclass(frozen=True)
class SpectralDecomposition:
    """Ascending eigenvalues and a unitary basis of matching eigenvectors (columns)."""

    eigenvalues: np.ndarray
    eigenbasis: UnitaryMatrix

    @property
    def descending(self) -> np.ndarray:
        """Eigenvalues in the ``lambda_1 >= ... >= lambda_n`` convention."""
        return self.eigenvalues[::-1]

    def reconstruct(self) -> np.ndarray:
        V = self.eigenbasis.data
        return (V * self.eigenvalues) @ V.conj().T

    def apply(self, values) -> np.ndarray:
        """``V diag(values) V*`` for per-eigenvalue ``values``."""
        V = self.eigenbasis.data
        M = (V * np.asarray(values)) @ V.conj().T
        return (M + M.conj().T) / 2


def eig(A, tol: Tolerances | None = None) -> SpectralDecomposition:
    """Eigendecomposition of a Hermitian matrix, eigenvalues ascending."""
    tol = tol or TOL
    A = as_hermitian(A)
    try:
        w, V = np.linalg.eigh(A.data)
    except np.linalg.LinAlgError as exc:
        raise DecompositionError(f"eigensolver failed: {exc}") from exc
    dec = SpectralDecomposition(w, UnitaryMatrix(V, tol=tol.unitary))
    resid = max_norm(A.data - dec.reconstruct())
    if resid > tol.recon * scale(A):
        raise DecompositionError(f"eigendecomposition residual {resid:.3e} too large")
    return dec


def eigvalsh(A) -> np.ndarray:
    return np.linalg.eigvalsh(_array(A))


@dataclass(frozen=True)
class PSDReport:
    """Outcome of a positive semidefiniteness test.

    ``holds`` is the public verdict; ``gray`` marks a failing verdict that missed
    the threshold by less than ``GRAY_FACTOR`` times the tolerance.
    """

    holds: bool
    min_eig: float
    scale: float
    tol: float
    gray: bool = False

    def __bool__(self):
        return self.holds

    @property
    def state(self) -> str:
        if self.holds:
            return "true"
        return "gray" if self.gray else "false"


def psd_report(min_eig: float, scale_: float, tol: float) -> PSDReport:
    threshold = -tol * scale_
    holds = min_eig >= threshold
    gray = (not holds) and min_eig >= GRAY_FACTOR * threshold
    return PSDReport(bool(holds), float(min_eig), float(scale_), float(tol), bool(gray))


def is_psd(A, tol: float | None = None) -> PSDReport:
    """Test ``A >= 0`` as ``min eig(A) >= -tol * scale(A)``."""
    tol = TOL.psd if tol is None else tol
    A = as_hermitian(A)
    return psd_report(float(np.linalg.eigvalsh(A.data)[0]), scale(A), tol)


@dataclass(frozen=True)
class PolarDecomposition:
    """``T = unitary @ modulus`` with ``modulus = (T*T)^(1/2)``."""

    unitary: UnitaryMatrix
    modulus: PositiveMatrix


def polar(T, tol: Tolerances | None = None) -> PolarDecomposition:
    """Polar decomposition of an invertible square matrix.

    The modulus is ``|T| = (T*T)^(1/2)`` computed spectrally, and the unitary
    factor is ``T |T|^(-1)``, which is unique for invertible ``T``.

    Raises
    ------
    SingularMatrixError
        If the condition number of ``T`` exceeds ``tol.condition_cap``.
    """
    tol = tol or TOL
    T = _array(T)
    s = np.linalg.svd(T, compute_uv=False)
    if s[-1] == 0 or s[0] / s[-1] > tol.condition_cap:
        cond = np.inf if s[-1] == 0 else s[0] / s[-1]
        raise SingularMatrixError(f"polar decomposition needs invertible T (cond = {cond:.3e})")
    gram = T.conj().T @ T
    w, V = np.linalg.eigh((gram + gram.conj().T) / 2)
    root = np.sqrt(np.clip(w, 0.0, None))
    modulus = (V * root) @ V.conj().T
    unitary = T @ ((V / root) @ V.conj().T)
    # One Newton step U <- (U + U^-*)/2 removes drift from the inverse root.
    unitary = (unitary + np.linalg.inv(unitary).conj().T) / 2
    return PolarDecomposition(
        UnitaryMatrix(unitary, tol=tol.unitary),
        PositiveMatrix(HermitianMatrix(modulus, tol=1e-8)),
    )


def hyponormal_defect(T) -> float:
    """Smallest eigenvalue of ``T*T - TT*``; ``T`` is hyponormal iff this is >= 0."""
    T = _array(T)
    return float(eigvalsh(T.conj().T @ T - T @ T.conj().T)[0])


def normality_defect(T) -> float:
    """``max|T*T - TT*|``, zero exactly for normal ``T``."""
    T = _array(T)
    return max_norm(T.conj().T @ T - T @ T.conj().T)


def commutator_norm(X, Y) -> float:
    """Frobenius norm of ``XY - YX``."""
    check_same_dim(X, Y)
    X, Y = _array(X), _array(Y)
    return float(np.linalg.norm(X @ Y - Y @ X, "fro"))


def conjugate(U, M) -> np.ndarray:
    """``U* M U`` for Hermitian ``M``, re-symmetrized."""
    U, M = _array(U), _array(M)
    R = U.conj().T @ M @ U
    return (R + R.conj().T) / 2
