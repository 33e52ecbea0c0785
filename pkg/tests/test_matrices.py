import random

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from generators import hypergraphs, leibniz, random_hypergraph
from ohcoeff.errors import InternalNonIntegral, NotSquare, ResourceLimitExceeded
from ohcoeff.hypergraph import build
from ohcoeff.limits import Limits
from ohcoeff.matrices import (
    IntMatrix,
    IntPolynomial,
    adjacency_matrix,
    charpoly_det_oracle,
    charpoly_perm_oracle,
    degree_matrix,
    det_exact,
    incidence_matrix,
    interpolate,
    laplacian,
    perm_exact,
    weak_walk_matrix,
)

small_square = st.integers(0, 5).flatmap(
    lambda n: st.lists(st.lists(st.integers(-3, 3), min_size=n, max_size=n), min_size=n, max_size=n)
)


class TestBuilders:
    def test_t3(self, T3):
        assert incidence_matrix(T3).tolist() == [[1, 1, 0], [-1, 0, 1], [0, -1, 1]]
        assert adjacency_matrix(T3).tolist() == [[0, 1, 1], [1, 0, -1], [1, -1, 0]]
        assert degree_matrix(T3).tolist() == [[2, 0, 0], [0, 2, 0], [0, 0, 2]]
        assert laplacian(T3).tolist() == [[2, -1, -1], [-1, 2, 1], [-1, 1, 2]]

    def test_x3(self, X3):
        assert incidence_matrix(X3).tolist() == [[1], [1], [1]]
        assert adjacency_matrix(X3).tolist() == [[0, -1, -1], [-1, 0, -1], [-1, -1, 0]]
        assert laplacian(X3).tolist() == [[1] * 3] * 3

    def test_labels(self, T3):
        H = incidence_matrix(T3)
        assert H.row_labels == T3.vertices
        assert H.col_labels == T3.edges

    def test_opposite_parallel_incidences_cancel(self):
        G = build(["v"], ["e"], [("v", "e", 1), ("v", "e", -1)])
        assert incidence_matrix(G).tolist() == [[0]]
        assert adjacency_matrix(G).tolist() == [[2]]
        assert laplacian(G).tolist() == [[0]]

    def test_equal_parallel_incidences(self):
        G = build(["v"], ["e"], [("v", "e", 1), ("v", "e", 1)])
        assert adjacency_matrix(G).tolist() == [[-2]]
        assert laplacian(G).tolist() == [[4]]

    @given(hypergraphs())
    def test_laplacian_identities(self, G):
        H = incidence_matrix(G)
        A = adjacency_matrix(G)
        L = laplacian(G)
        assert L == H @ H.transpose() == degree_matrix(G) - A
        assert A.is_symmetric() and L.is_symmetric()

    @settings(max_examples=30, deadline=None)
    @given(hypergraphs(max_v=4, max_i=8), st.integers(0, 3))
    def test_weak_walk_matrix(self, G, k):
        assert weak_walk_matrix(G, k) == (-laplacian(G)) ** k


class TestIntMatrix:
    def test_arithmetic(self):
        M = IntMatrix.from_rows([[1, 2], [3, 4]])
        assert (M @ M).tolist() == [[7, 10], [15, 22]]
        assert (M ** 0) == IntMatrix.identity(M.row_labels)
        assert (M + M - M) == M
        assert M.trace() == 5
        assert M.transpose().tolist() == [[1, 3], [2, 4]]

    def test_shape_mismatch(self):
        with pytest.raises(ValueError):
            IntMatrix(("a",), ("b",), ((1, 2),))


class TestPolynomial:
    def test_trim_and_str(self):
        p = IntPolynomial((-4, 9, -6, 1, 0, 0))
        assert p.tolist() == [-4, 9, -6, 1]
        assert str(p) == "x^3 - 6x^2 + 9x - 4"
        assert p.degree == 3 and p.leading == 1
        assert p(1) == 0 and p(4) == 0

    def test_zero(self):
        assert str(IntPolynomial(())) == "0"
        assert IntPolynomial((0,)).coefficient(3) == 0

    def test_negative_leading(self):
        assert str(IntPolynomial((0, 1, -1))) == "-x^2 + x"


class TestDetPerm:
    def test_examples(self, T3):
        assert det_exact(laplacian(T3)) == 4
        assert perm_exact(laplacian(T3)) == 16
        assert det_exact(adjacency_matrix(T3)) == -2
        assert perm_exact(adjacency_matrix(T3)) == -2
        assert perm_exact([[1] * 3] * 3) == 6
        assert det_exact([[1] * 3] * 3) == 0

    def test_empty(self):
        assert det_exact([]) == 1
        assert perm_exact([]) == 1

    def test_needs_pivot(self):
        assert det_exact([[0, 1], [1, 0]]) == -1
        assert det_exact([[0, 0, 1], [0, 1, 0], [1, 0, 0]]) == -1

    def test_not_square(self):
        with pytest.raises(NotSquare):
            det_exact([[1, 2]])
        with pytest.raises(NotSquare):
            perm_exact([[1, 2]])

    def test_perm_cap(self):
        with pytest.raises(ResourceLimitExceeded):
            perm_exact([[1] * 3] * 3, Limits(max_permanent_size=2))

    @given(small_square)
    def test_against_leibniz(self, rows):
        assert det_exact(rows) == leibniz(rows, signed=True)
        assert perm_exact(rows) == leibniz(rows, signed=False)

    @given(small_square)
    def test_det_matches_numpy(self, rows):
        if rows:
            assert det_exact(rows) == round(np.linalg.det(np.array(rows, dtype=float)))


class TestCharpoly:
    def test_t3(self, T3):
        assert charpoly_det_oracle(laplacian(T3)).tolist() == [-4, 9, -6, 1]
        assert charpoly_det_oracle(adjacency_matrix(T3)).tolist() == [2, -3, 0, 1]

    def test_x3(self, X3):
        assert charpoly_det_oracle(laplacian(X3)).tolist() == [0, 0, -3, 1]

    def test_perm_of_ones(self):
        # perm(xI - J) for n = 2: (x-1)^2 + 1
        assert charpoly_perm_oracle([[1, 1], [1, 1]]).tolist() == [2, -2, 1]

    @given(small_square)
    def test_constant_term_and_trace(self, rows):
        n = len(rows)
        p = charpoly_det_oracle(rows)
        q = charpoly_perm_oracle(rows)
        assert p.coefficient(0) == (-1) ** n * det_exact(rows)
        assert q.coefficient(0) == (-1) ** n * perm_exact(rows)
        if n:
            trace = sum(rows[k][k] for k in range(n))
            assert p.coefficient(n - 1) == q.coefficient(n - 1) == -trace

    @given(small_square)
    def test_det_matches_numpy(self, rows):
        if rows:
            expected = np.poly(np.array(rows, dtype=float))[::-1]
            assert np.allclose(charpoly_det_oracle(rows).tolist(), expected, atol=1e-6)

    def test_random_hypergraphs_monic(self):
        rng = random.Random(3)
        for _ in range(30):
            G = random_hypergraph(rng, max_contributors=5000)
            p = charpoly_det_oracle(laplacian(G))
            assert p.degree == G.n_vertices and p.leading == 1


class TestInterpolate:
    def test_cubic(self):
        f = lambda x: 2 * x ** 3 - x + 7
        assert interpolate([f(x) for x in range(4)]).tolist() == [7, -1, 0, 2]

    def test_non_integral(self):
        # x(x-1)/2 has half-integer coefficients
        with pytest.raises(InternalNonIntegral):
            interpolate([0, 0, 1])
