"""Spectral families and the power order.

For positive A, B the powers satisfy A^n <= B^n for every n exactly when each
spectral projection E_lambda(B) sits below E_lambda(A).
"""

import numpy as np

from unitary_order import olson_consistency, spectral_family
from unitary_order.generators import commuting_pair

rng = np.random.default_rng(3)
A, B = commuting_pair(4, rng, dominated=True)
F = spectral_family(A)
print("thresholds:", np.round(F.thresholds, 4), "ranks:", F.ranks)
print("reconstruction error:", np.abs(F.reconstruct() - A.data).max())

rep = olson_consistency(A, B)
print("commuting dominated pair:", rep.cell, "power order", rep.power_holds)

A = np.array([[1.0, 1.0], [1.0, 1.0]]) / 3
B = np.array([[2.0, 1.0], [1.0, 1.0]]) / 3
rep = olson_consistency(A, B)
print("A <= B but squares fail at n =", rep.first_power_failure, "family order", rep.family_holds)
