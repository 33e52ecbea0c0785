"""Oriented hypergraphic matrices and exact integer linear algebra.

Entries are Python ints throughout.  Determinants use fraction-free
(Bareiss) elimination and permanents use inclusion-exclusion over column
subsets; characteristic polynomials come from exact interpolation.  Nothing in this module looks at contributors, so
it serves as the independent oracle for the combinatorial side.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Sequence

from .errors import InternalNonIntegral, NotSquare, ResourceLimitExceeded, VerificationError
from .hypergraph import OrientedHypergraph, adjacencies, adjacency_sign, iter_weak_walks
from .limits import DEFAULT_LIMITS, Limits


@dataclass(frozen=True)
class IntMatrix:
    row_labels: tuple[str, ...]
    col_labels: tuple[str, ...]
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.rows) != len(self.row_labels):
            raise ValueError("row count does not match row labels")
        for r in self.rows:
            if len(r) != len(self.col_labels):
                raise ValueError("column count does not match column labels")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], row_labels=None, col_labels=None) -> "IntMatrix":
        rows = tuple(tuple(int(x) for x in r) for r in rows)
        n_cols = len(rows[0]) if rows else 0
        if row_labels is None:
            row_labels = tuple(str(k) for k in range(len(rows)))
        if col_labels is None:
            col_labels = tuple(str(k) for k in range(n_cols))
        return cls(tuple(row_labels), tuple(col_labels), rows)

    @classmethod
    def identity(cls, labels: Sequence[str]) -> "IntMatrix":
        n = len(labels)
        return cls(tuple(labels), tuple(labels),
                   tuple(tuple(int(r == c) for c in range(n)) for r in range(n)))

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.row_labels), len(self.col_labels)

    @property
    def is_square(self) -> bool:
        return len(self.row_labels) == len(self.col_labels)

    def __getitem__(self, rc: tuple[int, int]) -> int:
        r, c = rc
        return self.rows[r][c]

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self.rows]

    def transpose(self) -> "IntMatrix":
        return IntMatrix(self.col_labels, self.row_labels, tuple(zip(*self.rows)) if self.rows
                         else tuple(() for _ in self.col_labels))

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if len(self.col_labels) != len(other.row_labels):
            raise ValueError("inner dimensions differ")
        cols = list(zip(*other.rows)) if other.rows else [() for _ in other.col_labels]
        return IntMatrix(self.row_labels, other.col_labels, tuple(
            tuple(sum(a * b for a, b in zip(r, c)) for c in cols) for r in self.rows
        ))

    def _combine(self, other: "IntMatrix", op) -> "IntMatrix":
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return IntMatrix(self.row_labels, self.col_labels, tuple(
            tuple(op(a, b) for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows)
        ))

    def __add__(self, other: "IntMatrix") -> "IntMatrix":
        return self._combine(other, lambda a, b: a + b)

    def __sub__(self, other: "IntMatrix") -> "IntMatrix":
        return self._combine(other, lambda a, b: a - b)

    def __neg__(self) -> "IntMatrix":
        return IntMatrix(self.row_labels, self.col_labels,
                         tuple(tuple(-a for a in r) for r in self.rows))

    def __pow__(self, k: int) -> "IntMatrix":
        if not self.is_square:
            raise NotSquare("power of a non-square matrix")
        out = IntMatrix.identity(self.row_labels)
        for _ in range(k):
            out = out @ self
        return out

    def trace(self) -> int:
        return sum(self.rows[k][k] for k in range(min(self.shape)))

    def is_symmetric(self) -> bool:
        return self.is_square and all(
            self.rows[r][c] == self.rows[c][r]
            for r in range(len(self.rows)) for c in range(r)
        )


@dataclass(frozen=True)
class IntPolynomial:
    """Exact integer polynomial; ``coeffs[k]`` multiplies ``x**k``."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        c = list(self.coeffs)
        while len(c) > 1 and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(int(x) for x in c) or (0,))

    @property
    def degree(self) -> int:
        return -1 if self.coeffs == (0,) else len(self.coeffs) - 1

    @property
    def leading(self) -> int:
        return self.coeffs[-1]

    def coefficient(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def tolist(self) -> list[int]:
        return list(self.coeffs)

    def __str__(self) -> str:
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            mag = abs(c)
            body = "" if (mag == 1 and k) else str(mag)
            if k:
                body += "x" if k == 1 else f"x^{k}"
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        if not terms:
            return "0"
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


def incidence_matrix(G: OrientedHypergraph) -> IntMatrix:
    rows = [[0] * G.n_edges for _ in G.vertices]
    for inc in G.incidences:
        rows[inc.vertex][inc.edge] += inc.sign
    return IntMatrix.from_rows(rows, G.vertices, G.edges)


def adjacency_matrix(G: OrientedHypergraph) -> IntMatrix:
    n = G.n_vertices
    rows = [[0] * n for _ in range(n)]
    for v in range(n):
        for adj in adjacencies(G, v):
            rows[v][adj.head_vertex] += adjacency_sign(G, adj)
    return IntMatrix.from_rows(rows, G.vertices, G.vertices)


def degree_matrix(G: OrientedHypergraph) -> IntMatrix:
    n = G.n_vertices
    return IntMatrix.from_rows(
        [[len(G.at_vertex[r]) if r == c else 0 for c in range(n)] for r in range(n)],
        G.vertices, G.vertices,
    )


def laplacian(G: OrientedHypergraph) -> IntMatrix:
    """``D - A``, checked against ``H @ H.T``."""
    L = degree_matrix(G) - adjacency_matrix(G)
    H = incidence_matrix(G)
    if L != H @ H.transpose():
        raise VerificationError("D - A differs from H H^T")
    return L


def weak_walk_matrix(G: OrientedHypergraph, k: int, limits: Limits = DEFAULT_LIMITS) -> IntMatrix:
    """Signed weak-walk counts of length ``k``, by enumeration, checked against ``(-L)**k``."""
    n = G.n_vertices
    rows = [[0] * n for _ in range(n)]
    # one enumeration per start vertex, bucketed by end vertex
    for v in range(n):
        for walk in iter_weak_walks(G, v, k, limits):
            rows[v][walk.vertices[-1]] += walk.sign
    W = IntMatrix.from_rows(rows, G.vertices, G.vertices)
    if W != (-laplacian(G)) ** k:
        raise VerificationError(f"weak walk matrix of length {k} differs from (-L)^{k}")
    return W


def _square_rows(M) -> list[list[int]]:
    rows = M.tolist() if isinstance(M, IntMatrix) else [list(r) for r in M]
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise NotSquare(f"matrix is not square")
    return rows


def det_exact(M) -> int:
    """Bareiss fraction-free elimination with row pivoting."""
    a = _square_rows(M)
    n = len(a)
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        piv = a[k][k]
        for r in range(k + 1, n):
            ark = a[r][k]
            row_r, row_k = a[r], a[k]
            for c in range(k + 1, n):
                # exact division is guaranteed by Sylvester's identity
                row_r[c] = (row_r[c] * piv - ark * row_k[c]) // prev
            row_r[k] = 0
        prev = piv
    return sign * a[n - 1][n - 1] if n else 1


def perm_exact(M, limits: Limits = DEFAULT_LIMITS) -> int:
    """Permanent by inclusion-exclusion over column subsets, in Gray-code order."""
    a = _square_rows(M)
    n = len(a)
    if n > limits.max_permanent_size:
        raise ResourceLimitExceeded(f"permanent of size {n} exceeds cap {limits.max_permanent_size}")
    if n == 0:
        return 1
    row_sums = [0] * n
    total = 0
    subset = 0
    for g in range(1, 1 << n):
        c = (g & -g).bit_length() - 1
        subset ^= 1 << c
        d = 1 if subset >> c & 1 else -1
        prod = 1
        for r in range(n):
            row_sums[r] += d * a[r][c]
            prod *= row_sums[r]
        if (n - bin(subset).count("1")) % 2:
            total -= prod
        else:
            total += prod
    return total


def _shifted_rows(rows: list[list[int]], x: int) -> list[list[int]]:
    """Rows of ``x I - M``."""
    n = len(rows)
    return [[(x if r == c else 0) - rows[r][c] for c in range(n)] for r in range(n)]


def interpolate(values: Sequence[int]) -> IntPolynomial:
    """Integer polynomial of degree < len(values) through (m, values[m]), m = 0, 1, ...

    Uses Newton's forward differences.  Raises :class:`InternalNonIntegral`
    if the interpolant does not have integer coefficients.
    """
    diffs = [Fraction(v) for v in values]
    newton = []
    for j in range(len(values)):
        newton.append(diffs[0] / factorial(j))
        diffs = [b - a for a, b in zip(diffs, diffs[1:])]
    # expand sum_j newton[j] * x(x-1)...(x-j+1)
    coeffs = [Fraction(0)] * len(values)
    basis = [1]
    for j, c in enumerate(newton):
        for k, b in enumerate(basis):
            coeffs[k] += c * b
        nxt = [0] * (len(basis) + 1)
        for k, b in enumerate(basis):
            nxt[k + 1] += b
            nxt[k] -= j * b
        basis = nxt
    if any(c.denominator != 1 for c in coeffs):
        raise InternalNonIntegral(f"interpolated coefficients not integral: {coeffs}")
    return IntPolynomial(tuple(int(c) for c in coeffs))


def _charpoly_by_interpolation(M, evaluate) -> IntPolynomial:
    rows = _square_rows(M)
    n = len(rows)
    poly = interpolate([evaluate(_shifted_rows(rows, x)) for x in range(n + 1)])
    if poly.degree != n or poly.leading != 1:
        raise InternalNonIntegral(f"characteristic polynomial {poly.coeffs} is not monic of degree {n}")
    return poly


def charpoly_det_oracle(M) -> IntPolynomial:
    """``det(x I - M)`` as ascending integer coefficients."""
    return _charpoly_by_interpolation(M, det_exact)


def charpoly_perm_oracle(M, limits: Limits = DEFAULT_LIMITS) -> IntPolynomial:
    """``perm(x I - M)`` as ascending integer coefficients."""
    return _charpoly_by_interpolation(M, lambda rows: perm_exact(rows, limits))
