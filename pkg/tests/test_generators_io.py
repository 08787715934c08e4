import json

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from unitary_order.core import HermitianMatrix, PositiveMatrix, UnitaryMatrix, max_norm
from unitary_order.family import Projection
from unitary_order.generators import KINDS, GeneratorSpec, commuting_pair, generate, haar_unitary
from unitary_order.io import MatrixFormatError, dumps_matrix, loads_matrix, matrix_from_json, matrix_to_json
from unitary_order.order import leq_u

from strategies import seeds


class TestGenerate:
    def test_finite_order(self):
        U = generate(GeneratorSpec("unitary_finite_order", 3, seed=1, n0=2)).data
        assert max_norm(U @ U - np.eye(3)) < 1e-12

    def test_projection(self):
        P = generate(GeneratorSpec("projection", 2, seed=1, rank=1))
        assert Projection(P).rank == 1

    def test_shift(self):
        T = generate(GeneratorSpec("truncated_shift", 3, weights=(1.0, 1.0)))
        np.testing.assert_array_equal(T, [[0, 0, 0], [1, 0, 0], [0, 1, 0]])

    def test_invalid_specs(self):
        for kw in (dict(kind="nope", dim=2), dict(kind="hermitian", dim=0), dict(kind="projection", dim=2, rank=3),
                   dict(kind="unitary_finite_order", dim=2, n0=0), dict(kind="truncated_shift", dim=3, weights=(1.0,)),
                   dict(kind="truncated_shift", dim=2, weights=(-1.0,))):
            with pytest.raises(ValueError):
                GeneratorSpec(**kw)

    @pytest.mark.parametrize("kind", KINDS)
    def test_invariants_1000_seeds(self, kind):
        for seed in range(1000):
            d = 1 + seed % 6
            spec = GeneratorSpec(kind, d, seed=seed, n0=1 + seed % 4, rank=seed % (d + 1),
                                 weights=tuple(np.linspace(0, 1, d - 1)))
            out = generate(spec)
            if kind == "hermitian":
                assert isinstance(out, HermitianMatrix)
            elif kind == "positive":
                assert isinstance(out, PositiveMatrix)
            elif kind == "unitary_haar":
                assert isinstance(out, UnitaryMatrix)
            elif kind == "unitary_finite_order":
                assert max_norm(np.linalg.matrix_power(out.data, spec.n0) - np.eye(d)) < 1e-10
            elif kind == "projection":
                assert Projection(out).rank == spec.rank
            elif kind == "dominance_pair":
                assert leq_u(*out)
                PositiveMatrix(out[0]), PositiveMatrix(out[1])
            elif kind == "commuting_pair":
                A, B = out
                assert max_norm(A.data @ B.data - B.data @ A.data) < 1e-12
            else:
                assert out.shape == (d, d)

    def test_deterministic(self):
        a = generate(GeneratorSpec("hermitian", 4, seed=7)).data
        b = generate(GeneratorSpec("hermitian", 4, seed=7)).data
        np.testing.assert_array_equal(a, b)

    def test_haar_phases(self):
        # Haar first-column entries have E|u_11|^2 = 1/d; phases of the diagonal are uniform
        rng = np.random.default_rng(0)
        diag = np.array([haar_unitary(3, rng).data[0, 0] for _ in range(4000)])
        assert abs(np.mean(np.abs(diag) ** 2) - 1 / 3) < 0.02
        assert abs(np.mean(diag)) < 0.03

    def test_commuting_pair_dominance(self, rng):
        A, B = commuting_pair(4, rng, dominated=True)
        assert np.linalg.eigvalsh(B.data - A.data)[0] >= -1e-12
        A, B = commuting_pair(4, rng, dominated=False)
        assert np.linalg.eigvalsh(B.data - A.data)[0] < 0


class TestMatrixJson:
    def test_real_omits_im(self):
        obj = matrix_to_json(np.eye(2))
        assert obj == {"n": 2, "re": [[1.0, 0.0], [0.0, 1.0]]}
        np.testing.assert_array_equal(matrix_from_json(obj), np.eye(2))

    @settings(max_examples=50, deadline=None)
    @given(seeds(), st.sampled_from(KINDS[:5]))
    def test_roundtrip(self, seed, kind):
        M = np.asarray(generate(GeneratorSpec(kind, 1 + seed % 7, seed=seed)))
        back = loads_matrix(dumps_matrix(M))
        assert np.max(np.abs(back - M)) <= 1e-15 * max(1.0, np.max(np.abs(M)))

    @pytest.mark.parametrize(
        "text",
        ["not json", '{"re": [[1]]}', '{"n": 2, "re": [[1, 2]]}', '{"n": 0, "re": []}', '{"n": 1, "re": [["x"]]}'],
    )
    def test_malformed(self, text):
        with pytest.raises(MatrixFormatError):
            loads_matrix(text)

    def test_non_square(self):
        with pytest.raises(MatrixFormatError):
            matrix_to_json(np.zeros((2, 3)))
        assert json.loads(dumps_matrix(1j * np.eye(1)))["im"] == [[1.0]]
