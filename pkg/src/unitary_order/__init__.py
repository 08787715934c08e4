"""Numerical toolkit for the unitary-orbit order on Hermitian matrices."""

from .calculus import (
    Interval,
    OCFunction,
    OMFunction,
    ScalarFunction,
    apply_oc,
    apply_om,
    apply_scalar_fn,
    compose_chain,
    log_shift,
    mexp,
    mlog,
    mpower,
    msqrt,
    oc_derivative_at_zero,
    verify_conjugation_covariance,
)
from .core import (
    TOL,
    DecompositionError,
    DimensionMismatchError,
    DomainError,
    HermitianMatrix,
    PolarDecomposition,
    PositiveMatrix,
    PSDReport,
    SingularMatrixError,
    SpectralDecomposition,
    Tolerances,
    UnitaryMatrix,
    commutator_norm,
    eig,
    hyponormal_defect,
    is_psd,
    normality_defect,
    polar,
    scale,
)
from .family import (
    Projection,
    SpectralFamily,
    family_conjugation_covariance,
    family_leq,
    olson_consistency,
    olson_forward,
    projection_leq,
    spectral_family,
)
from .order import (
    NoWitnessError,
    OrderCertificate,
    in_K_n,
    leq_u,
    loewner_leq,
    nested_K_property,
    unitarily_equivalent,
    witness,
)

__version__ = "0.1.0"
