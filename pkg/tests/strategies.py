"""Hypothesis strategies shared across test modules."""

import numpy as np
from hypothesis import strategies as st

from unitary_order.generators import haar_unitary, random_hermitian, random_positive


@st.composite
def seeds(draw):
    return draw(st.integers(min_value=0, max_value=2**32 - 1))


@st.composite
def hermitian_and_unitary(draw, max_dim=6):
    d = draw(st.integers(1, max_dim))
    rng = np.random.default_rng(draw(seeds()))
    return random_hermitian(d, rng), haar_unitary(d, rng)


@st.composite
def positive_pair(draw, max_dim=6):
    d = draw(st.integers(1, max_dim))
    rng = np.random.default_rng(draw(seeds()))
    return random_positive(d, rng), random_positive(d, rng)
