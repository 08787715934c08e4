"""Spectral calculus on Hermitian matrices.

Scalar functions are lifted through the eigendecomposition,
``f(A) = V diag(f(lambda_i)) V*``. Two function families get first-class
types: operator monotone functions (:class:`OMFunction`) and increasing
operator convex functions on ``[0, inf)`` in integral-representation form
(:class:`OCFunction`), with the measure restricted to finitely many atoms.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np

from .core import (
    TOL,
    DomainError,
    HermitianMatrix,
    as_array,
    as_hermitian,
    as_positive,
    as_unitary,
    conjugate,
    eig,
    max_norm,
    scale,
)


@dataclass(frozen=True)
class Interval:
    """A real interval; ``None`` endpoints are infinite."""

    lo: float | None = None
    hi: float | None = None
    lo_open: bool = False
    hi_open: bool = False

    def __str__(self):
        left = "(" if self.lo is None or self.lo_open else "["
        right = ")" if self.hi is None or self.hi_open else "]"
        lo = "-inf" if self.lo is None else f"{self.lo:g}"
        hi = "inf" if self.hi is None else f"{self.hi:g}"
        return f"{left}{lo}, {hi}{right}"

    def admit(self, values: np.ndarray, slack: float = 0.0) -> np.ndarray:
        """Validate ``values`` against the interval and clip roundoff into it.

        Closed endpoints tolerate ``slack`` of overshoot, which is clipped
        away. Open endpoints require values strictly beyond ``slack``.
        """
        v = np.asarray(values, dtype=float).copy()
        if self.lo is not None:
            if self.lo_open:
                bad = v <= self.lo + slack
            else:
                bad = v < self.lo - slack
            if np.any(bad):
                x = float(v[bad][0])
                raise DomainError(f"eigenvalue {x:.6g} outside domain {self}", eigenvalue=x)
            if not self.lo_open:
                v = np.maximum(v, self.lo)
        if self.hi is not None:
            if self.hi_open:
                bad = v >= self.hi - slack
            else:
                bad = v > self.hi + slack
            if np.any(bad):
                x = float(v[bad][0])
                raise DomainError(f"eigenvalue {x:.6g} outside domain {self}", eigenvalue=x)
            if not self.hi_open:
                v = np.minimum(v, self.hi)
        return v


REAL_LINE = Interval()
NONNEGATIVE = Interval(0.0)
POSITIVE = Interval(0.0, lo_open=True)


@dataclass(frozen=True)
class ScalarFunction:
    """A vectorized real function together with the interval it is defined on."""

    fn: Callable[[np.ndarray], np.ndarray]
    domain: Interval = REAL_LINE
    name: str = "f"

    def __call__(self, t):
        return self.fn(np.asarray(t, dtype=float))


def _handle(f, domain: Interval | None) -> ScalarFunction:
    if isinstance(f, ScalarFunction):
        return f if domain is None else ScalarFunction(f.fn, domain, f.name)
    if isinstance(f, (OMFunction, OCFunction)):
        return f.handle() if domain is None else ScalarFunction(f, domain, repr(f))
    return ScalarFunction(f, domain or REAL_LINE, getattr(f, "__name__", "f"))


def apply_scalar_fn(f, A, domain: Interval | None = None, tol: float | None = None) -> HermitianMatrix:
    """Apply a real scalar function to a Hermitian matrix through its spectrum.

    Parameters
    ----------
    f : callable or ScalarFunction
        Vectorized real function. A :class:`ScalarFunction` carries its own domain.
    A : array_like or HermitianMatrix
    domain : Interval, optional
        Overrides the domain carried by ``f``.
    tol : float, optional
        Relative slack at domain endpoints; defaults to ``tol_psd``.

    Raises
    ------
    DomainError
        If an eigenvalue of ``A`` lies outside the domain.
    """
    h = _handle(f, domain)
    A = as_hermitian(A)
    dec = eig(A)
    slack = (TOL.psd if tol is None else tol) * scale(A)
    lam = h.domain.admit(dec.eigenvalues, slack)
    values = np.asarray(h(lam), dtype=float)
    if not np.all(np.isfinite(values)):
        raise DomainError(f"{h.name} is not finite on the spectrum of A")
    return HermitianMatrix(dec.apply(values))


def mexp(A) -> HermitianMatrix:
    return apply_scalar_fn(np.exp, A)


def mlog(A) -> HermitianMatrix:
    return apply_scalar_fn(ScalarFunction(np.log, POSITIVE, "log"), A)


def mpower(A, p: float) -> HermitianMatrix:
    """``A**p`` for positive ``A``; integer powers accept any Hermitian ``A``."""
    if float(p).is_integer() and p >= 0:
        return apply_scalar_fn(lambda t: t ** int(p), A)
    return apply_scalar_fn(ScalarFunction(lambda t: t**p, NONNEGATIVE, f"t^{p}"), A)


def msqrt(A) -> HermitianMatrix:
    return mpower(A, 0.5)


# -- operator monotone functions ---------------------------------------------

_OM_KINDS = ("power", "log", "affine", "compose")


@dataclass(frozen=True)
class OMFunction:
    """An operator monotone function from a closed catalog.

    ``power`` (``t**alpha``, ``0 <= alpha <= 1``) and ``log`` are the
    Loewner-Heinz and logarithmic cases; ``affine`` is ``a*t + b`` with
    ``a >= 0``; ``compose`` is ``outer(inner(t))``.
    """

    kind: str
    alpha: float | None = None
    a: float | None = None
    b: float | None = None
    outer: "OMFunction | None" = None
    inner: "OMFunction | None" = None

    def __post_init__(self):
        if self.kind not in _OM_KINDS:
            raise ValueError(f"unknown operator monotone kind {self.kind!r}")
        if self.kind == "power":
            if self.alpha is None or not 0.0 <= self.alpha <= 1.0:
                raise ValueError(f"power exponent must lie in [0, 1], got {self.alpha}")
        elif self.kind == "affine":
            if self.a is None or self.a < 0 or self.b is None:
                raise ValueError("affine needs a >= 0 and real b")
        elif self.kind == "compose":
            if self.outer is None or self.inner is None:
                raise ValueError("compose needs outer and inner functions")

    @classmethod
    def power(cls, alpha: float) -> "OMFunction":
        return cls("power", alpha=float(alpha))

    @classmethod
    def log(cls) -> "OMFunction":
        return cls("log")

    @classmethod
    def affine(cls, a: float, b: float = 0.0) -> "OMFunction":
        return cls("affine", a=float(a), b=float(b))

    @classmethod
    def compose(cls, outer: "OMFunction", inner: "OMFunction") -> "OMFunction":
        return cls("compose", outer=outer, inner=inner)

    @property
    def domain(self) -> Interval:
        if self.kind == "power":
            return NONNEGATIVE
        if self.kind == "log":
            return POSITIVE
        if self.kind == "affine":
            return REAL_LINE
        return self.inner.domain

    def __call__(self, t):
        t = np.asarray(t, dtype=float)
        if self.kind == "power":
            return t**self.alpha
        if self.kind == "log":
            return np.log(t)
        if self.kind == "affine":
            return self.a * t + self.b
        inner = self.inner(t)
        self.outer.domain.admit(inner)
        return self.outer(inner)

    def handle(self) -> ScalarFunction:
        return ScalarFunction(self, self.domain, repr(self))

    def __repr__(self):
        if self.kind == "power":
            return f"power({self.alpha:g})"
        if self.kind == "log":
            return "log"
        if self.kind == "affine":
            return f"affine({self.a:g}, {self.b:g})"
        return f"{self.outer!r}∘{self.inner!r}"

    def to_json(self) -> dict:
        if self.kind == "power":
            return {"kind": "power", "alpha": self.alpha}
        if self.kind == "log":
            return {"kind": "log"}
        if self.kind == "affine":
            return {"kind": "affine", "a": self.a, "b": self.b}
        return {"kind": "compose", "outer": self.outer.to_json(), "inner": self.inner.to_json()}

    @classmethod
    def from_json(cls, obj: dict) -> "OMFunction":
        kind = obj.get("kind")
        if kind == "power":
            return cls.power(obj["alpha"])
        if kind == "log":
            return cls.log()
        if kind == "affine":
            return cls.affine(obj["a"], obj.get("b", 0.0))
        if kind == "compose":
            return cls.compose(cls.from_json(obj["outer"]), cls.from_json(obj["inner"]))
        raise ValueError(f"unknown operator monotone kind {kind!r}")


def apply_om(g: OMFunction, A) -> HermitianMatrix:
    """Apply an operator monotone function to a positive matrix.

    ``log`` additionally requires ``min eig(A) > tol_psd * scale(A)``.
    """
    A = as_positive(A)
    return apply_scalar_fn(g.handle(), A)


# -- increasing operator convex functions ------------------------------------


@dataclass(frozen=True)
class OCFunction:
    """Increasing operator convex function on ``[0, inf)``.

    ``f(t) = f0 + beta*t + gamma*t**2 + sum_k w_k * lam_k * t**2 / (lam_k + t)``
    with ``beta, gamma, w_k >= 0`` and ``lam_k > 0``. ``beta`` is the right
    derivative at zero.
    """

    f0: float = 0.0
    beta: float = 0.0
    gamma: float = 0.0
    atoms: tuple[tuple[float, float], ...] = field(default_factory=tuple)

    def __post_init__(self):
        atoms = tuple((float(lam), float(w)) for lam, w in self.atoms)
        object.__setattr__(self, "atoms", atoms)
        if self.beta < 0:
            raise ValueError(f"beta must be >= 0 (f must be increasing), got {self.beta}")
        if self.gamma < 0:
            raise ValueError(f"gamma must be >= 0, got {self.gamma}")
        for lam, w in atoms:
            if not lam > 0:
                raise ValueError(f"atom location must be > 0, got {lam}")
            if w < 0:
                raise ValueError(f"atom weight must be >= 0, got {w}")

    def __call__(self, t):
        t = np.asarray(t, dtype=float)
        out = self.f0 + self.beta * t + self.gamma * t * t
        for lam, w in self.atoms:
            out = out + w * lam * t * t / (lam + t)
        return out

    def derivative(self, t):
        t = np.asarray(t, dtype=float)
        out = self.beta + 2 * self.gamma * t
        for lam, w in self.atoms:
            out = out + w * (2 * lam * lam * t + lam * t * t) / (lam + t) ** 2
        return out

    def handle(self) -> ScalarFunction:
        return ScalarFunction(self, NONNEGATIVE, repr(self))

    def to_json(self) -> dict:
        return {
            "f0": self.f0,
            "beta": self.beta,
            "gamma": self.gamma,
            "atoms": [[lam, w] for lam, w in self.atoms],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "OCFunction":
        return cls(
            float(obj.get("f0", 0.0)),
            float(obj.get("beta", 0.0)),
            float(obj.get("gamma", 0.0)),
            tuple(tuple(a) for a in obj.get("atoms", ())),
        )

    @classmethod
    def identity(cls) -> "OCFunction":
        return cls(0.0, 1.0, 0.0)

    @classmethod
    def square(cls) -> "OCFunction":
        return cls(0.0, 0.0, 1.0)

    @classmethod
    def sample(cls, rng: np.random.Generator) -> "OCFunction":
        """Draw f0 ~ U[-1,1], beta, gamma ~ U[0,1], 0-3 atoms with
        lam ~ loguniform[0.1, 10] and w ~ U[0,1]."""
        f0 = rng.uniform(-1.0, 1.0)
        beta, gamma = rng.uniform(0.0, 1.0, size=2)
        k = int(rng.integers(0, 4))
        lams = 10.0 ** rng.uniform(-1.0, 1.0, size=k)
        ws = rng.uniform(0.0, 1.0, size=k)
        return cls(float(f0), float(beta), float(gamma), tuple(zip(lams.tolist(), ws.tolist())))


def apply_oc(f: OCFunction, A) -> HermitianMatrix:
    A = as_positive(A)
    return apply_scalar_fn(f.handle(), A)


def oc_derivative_at_zero(f: OCFunction) -> float:
    return f.beta


def compose_chain(f: OCFunction, g: OMFunction, r: float) -> ScalarFunction:
    """The scalar map ``t -> f(g(t)**r)``.

    ``g(t)**r`` needs ``g(t) >= 0``, so for ``g = log`` the chain is only
    defined on ``[1, inf)``; shift inputs with :func:`log_shift` first.

    Raises
    ------
    DomainError
        If ``r <= 0`` or ``g`` can take negative values on ``[0, inf)``
        in a way that cannot be restricted.
    """
    if not r > 0:
        raise DomainError(f"exponent r must be positive, got {r}")
    if g.kind == "log":
        domain = Interval(1.0)
    elif g.kind == "compose" and g.inner.kind == "log":
        domain = Interval(1.0)
    elif g.kind == "affine" and g.b < 0:
        if g.a == 0:
            raise DomainError(f"{g!r} is negative everywhere")
        domain = Interval(-g.b / g.a)
    else:
        domain = g.domain if g.domain.lo is not None else NONNEGATIVE

    def chain(t):
        inner = np.maximum(g(t), 0.0)
        return f(inner**r)

    return ScalarFunction(chain, domain, f"{f!r}({g!r}(t)^{r:g})")


def log_shift(*mats) -> float:
    """Common shift ``c = 1 + max |min eig|`` moving every spectrum to ``[1, inf)``."""
    lows = [float(np.linalg.eigvalsh(as_array(M))[0]) for M in mats]
    return 1.0 + max(abs(x) for x in lows)


def verify_conjugation_covariance(f, A, U) -> float:
    """``max|f(U*AU) - U* f(A) U|``."""
    A = as_hermitian(A)
    U = as_unitary(U)
    lhs = apply_scalar_fn(f, conjugate(U, A))
    rhs = conjugate(U, apply_scalar_fn(f, A))
    return max_norm(lhs.data - rhs)


def spectral_mapping_error(f, A) -> float:
    """Max relative gap between ``eig(f(A))`` and ``sorted(f(eig(A)))``."""
    h = _handle(f, None)
    A = as_hermitian(A)
    fa = apply_scalar_fn(h, A)
    lam = h.domain.admit(np.linalg.eigvalsh(A.data), TOL.psd * scale(A))
    want = np.sort(np.asarray(h(lam), dtype=float))
    got = np.linalg.eigvalsh(fa.data)
    return float(np.max(np.abs(got - want)) / max(1.0, np.max(np.abs(want))))


def om_catalog() -> Sequence[OMFunction]:
    """The catalog sampled by the verification suite."""
    return (OMFunction.power(0.25), OMFunction.power(0.5), OMFunction.power(1.0), OMFunction.log())
