"""Seeded random matrices for property tests and the verification suite."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .core import HermitianMatrix, PositiveMatrix, UnitaryMatrix

KINDS = (
    "hermitian",
    "positive",
    "unitary_haar",
    "unitary_finite_order",
    "projection",
    "dominance_pair",
    "commuting_pair",
    "truncated_shift",
)


def _rng(rng) -> np.random.Generator:
    return rng if isinstance(rng, np.random.Generator) else np.random.default_rng(rng)


def ginibre(dim: int, rng) -> np.ndarray:
    rng = _rng(rng)
    return (rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))) / np.sqrt(2)


def random_hermitian(dim: int, rng) -> HermitianMatrix:
    """GUE-like sample with spectrum of order one."""
    Z = ginibre(dim, rng)
    return HermitianMatrix((Z + Z.conj().T) / (2 * np.sqrt(dim)))


def random_positive(dim: int, rng, rank: int | None = None) -> PositiveMatrix:
    """Wishart-type ``Z Z* / dim``; ``rank`` < dim gives a singular sample."""
    rng = _rng(rng)
    k = dim if rank is None else rank
    Z = (rng.standard_normal((dim, k)) + 1j * rng.standard_normal((dim, k))) / np.sqrt(2)
    return PositiveMatrix(HermitianMatrix(Z @ Z.conj().T / dim))


def haar_unitary(dim: int, rng) -> UnitaryMatrix:
    """Haar-distributed unitary: QR of a Ginibre matrix, columns rephased by
    the phases of ``diag(R)``."""
    Q, R = np.linalg.qr(ginibre(dim, rng))
    d = np.diag(R)
    ph = d / np.abs(d)
    return UnitaryMatrix(Q * ph)


def finite_order_unitary(dim: int, n0: int, rng, basis=None) -> UnitaryMatrix:
    """``W diag(z) W*`` with ``z_i`` uniform among the n0-th roots of unity,
    so that ``U^n0 = I``. ``basis`` fixes ``W`` (default Haar)."""
    if n0 < 1:
        raise ValueError(f"order n0 must be >= 1, got {n0}")
    rng = _rng(rng)
    W = haar_unitary(dim, rng).data if basis is None else np.asarray(basis)
    z = np.exp(2j * np.pi * rng.integers(0, n0, size=dim) / n0)
    return UnitaryMatrix((W * z) @ W.conj().T)


def random_projection(dim: int, rank: int, rng) -> np.ndarray:
    if not 0 <= rank <= dim:
        raise ValueError(f"rank must lie in [0, {dim}], got {rank}")
    W = haar_unitary(dim, rng).data[:, :rank]
    P = W @ W.conj().T
    return (P + P.conj().T) / 2


def with_spectrum(values, rng) -> HermitianMatrix:
    """Hermitian matrix with prescribed eigenvalues in a Haar-random basis."""
    W = haar_unitary(len(values), rng).data
    return HermitianMatrix((W * np.asarray(values, dtype=float)) @ W.conj().T)


def dominance_pair(dim: int, rng, positive: bool = True) -> tuple[HermitianMatrix, HermitianMatrix]:
    """A pair with ``lambda_j(A) <= lambda_j(B)`` for every ``j``.

    ``B`` is random; ``A`` gets eigenvalues ``s_i * b_i`` with ``s_i`` uniform
    in ``[0, 1]`` (positive case) or ``b_i - d_i`` with ``d_i`` exponential
    (Hermitian case), placed in a fresh Haar basis. Coordinatewise domination
    implies sorted domination.
    """
    rng = _rng(rng)
    B = random_positive(dim, rng).base if positive else random_hermitian(dim, rng)
    b = np.linalg.eigvalsh(B.data)
    if positive:
        a = rng.uniform(0.0, 1.0, size=dim) * np.clip(b, 0.0, None)
    else:
        a = b - rng.exponential(0.5, size=dim)
    return with_spectrum(a, rng), B


def commuting_pair(dim: int, rng, dominated: bool | None = None) -> tuple[HermitianMatrix, HermitianMatrix]:
    """Positive ``A = W diag(a) W*``, ``B = W diag(b) W*`` sharing a Haar basis.

    ``dominated=True`` forces ``a_i <= b_i``; ``False`` forces at least one
    ``a_i > b_i``; ``None`` draws independently.
    """
    rng = _rng(rng)
    W = haar_unitary(dim, rng).data
    b = rng.uniform(0.05, 1.0, size=dim)
    if dominated is None:
        a = rng.uniform(0.05, 1.0, size=dim)
    else:
        a = b * rng.uniform(0.0, 1.0, size=dim)
        if dominated is False:
            i = int(rng.integers(dim))
            a[i] = b[i] * rng.uniform(1.05, 2.0)
    A = HermitianMatrix((W * a) @ W.conj().T)
    B = HermitianMatrix((W * b) @ W.conj().T)
    return A, B


def truncated_shift(weights) -> np.ndarray:
    """Weighted shift with ``weights`` on the subdiagonal."""
    w = np.asarray(weights, dtype=float)
    if np.any(w < 0):
        raise ValueError("shift weights must be nonnegative")
    n = len(w) + 1
    T = np.zeros((n, n), dtype=complex)
    T[np.arange(1, n), np.arange(n - 1)] = w
    return T


@dataclass(frozen=True)
class GeneratorSpec:
    kind: str
    dim: int
    seed: int = 0
    n0: int = 2
    rank: int = 1
    weights: tuple[float, ...] = field(default=())

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown generator kind {self.kind!r}; choose from {', '.join(KINDS)}")
        if self.dim < 1:
            raise ValueError(f"dim must be >= 1, got {self.dim}")
        if self.n0 < 1:
            raise ValueError(f"n0 must be >= 1, got {self.n0}")
        if not 0 <= self.rank <= self.dim:
            raise ValueError(f"rank must lie in [0, dim], got {self.rank}")
        if self.kind == "truncated_shift":
            if len(self.weights) != self.dim - 1:
                raise ValueError(f"truncated_shift needs dim - 1 = {self.dim - 1} weights")
            if any(w < 0 for w in self.weights):
                raise ValueError("shift weights must be nonnegative")


def generate(spec: GeneratorSpec):
    """Sample the matrix (or pair of matrices) described by ``spec``."""
    rng = np.random.default_rng(spec.seed)
    d = spec.dim
    if spec.kind == "hermitian":
        return random_hermitian(d, rng)
    if spec.kind == "positive":
        return random_positive(d, rng)
    if spec.kind == "unitary_haar":
        return haar_unitary(d, rng)
    if spec.kind == "unitary_finite_order":
        return finite_order_unitary(d, spec.n0, rng)
    if spec.kind == "projection":
        return random_projection(d, spec.rank, rng)
    if spec.kind == "dominance_pair":
        return dominance_pair(d, rng)
    if spec.kind == "commuting_pair":
        return commuting_pair(d, rng)
    return truncated_shift(spec.weights)
