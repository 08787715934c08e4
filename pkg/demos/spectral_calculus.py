"""Matrix functions through the spectral theorem.

Operator monotone functions keep the Loewner order; the exponential does not,
but it still keeps the unitary-orbit order.
"""

import numpy as np

from unitary_order import OCFunction, OMFunction, apply_oc, apply_om, leq_u, loewner_leq, mexp
from unitary_order.generators import random_positive

rng = np.random.default_rng(11)
A = random_positive(4, rng).data
B = A + random_positive(4, rng).data

sqrt = OMFunction.power(0.5)
print("A <= B:", bool(loewner_leq(A, B)))
print("sqrt(A) <= sqrt(B):", bool(loewner_leq(apply_om(sqrt, A), apply_om(sqrt, B))))

A2 = np.array([[1.0, 1.0], [1.0, 1.0]])
B2 = np.array([[2.0, 1.0], [1.0, 1.0]])
print("A2 <= B2:", bool(loewner_leq(A2, B2)), " A2^2 <= B2^2:", bool(loewner_leq(A2 @ A2, B2 @ B2)))
print("exp(A2) <= exp(B2):", bool(loewner_leq(mexp(A2), mexp(B2))))
print("exp(A2) <=_u exp(B2):", leq_u(mexp(A2), mexp(B2)).verdict)

f = OCFunction.sample(rng)
print("random operator convex function:", f.to_json())
print("f(A) computed, trace =", float(np.trace(apply_oc(f, A).data).real))
