"""Comparing Hermitian matrices up to unitary conjugation.

A <=_u B means some unitary U gives A <= U*BU in the Loewner order. The test
reduces to sorted eigenvalues, and a passing verdict comes with the witness.
"""

import numpy as np

from unitary_order import leq_u, loewner_leq, witness
from unitary_order.core import conjugate
from unitary_order.generators import dominance_pair

rng = np.random.default_rng(7)

A = np.diag([3.0, 1.0])
B = np.array([[2.0, 1.0], [1.0, 2.0]])
print("A <= B in the Loewner order?", bool(loewner_leq(A, B)))
cert = leq_u(A, B)
print("A <=_u B?", cert.verdict)
U = witness(A, B)
print("min eigenvalue of U*BU - A:", np.linalg.eigvalsh(conjugate(U, B) - A)[0])

# a failing pair reports where the sorted spectra cross
cert = leq_u(B, np.diag([2.5, 0.5]))
print("B <=_u diag(2.5, 0.5)?", cert.verdict, "violation at index", cert.violation_index)

A, B = dominance_pair(5, rng)
print("random dominance pair:", leq_u(A, B).verdict)
