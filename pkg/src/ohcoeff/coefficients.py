"""det and perm of A and L, and of ``xI - M``, as signed contributor counts.

Scalars::

    perm(L) = sum over all contributors        (-1)^(oc + nc)
    det(L)  = sum over all contributors        (-1)^pc
    perm(A) = sum over backstep-free ones      (-1)^nc
    det(A)  = sum over backstep-free ones      (-1)^(ec + nc)

Coefficient of x^k::

    perm(xI - A): distinct subs, exactly k backsteps deleted     (-1)^(oc + nc)
    det(xI - A):  same set                                       (-1)^pc
    perm(xI - L): distinct subs, any k of >= k backsteps deleted (-1)^(nc + bs)
    det(xI - L):  same set                                       (-1)^(ec + nc + bs)

where ``bs`` of a sub-contributor counts the backsteps it still has.

Sub-contributors are counted by value.  A sub-contributor with isolated
set K is produced by every contributor that agrees with it off K and
backsteps on K, and exactly one of those backsteps along the lowest-id
incidence at each vertex of K.  Counting only that representative counts
each value once, so a contributor with ``b`` such canonical backsteps
stands for ``C(b, k)`` distinct elements of the x^k set.
"""

from __future__ import annotations

from collections import Counter
from math import comb
from typing import Callable

from . import matrices
from .contributors import enumerate_hat_eq, enumerate_hat_geq, profile, stats
from .errors import VerificationError
from .hypergraph import OrientedHypergraph
from .limits import DEFAULT_LIMITS, Limits
from .matrices import IntPolynomial

MATRICES = ("A", "L")
KINDS = ("det", "perm")


def _par(p: int) -> int:
    return -1 if p % 2 else 1


# arguments: ec, oc, pc, nc
_SCALAR_SIGN: dict[tuple[str, str], Callable[[int, int, int, int], int]] = {
    ("L", "perm"): lambda ec, oc, pc, nc: _par(oc + nc),
    ("L", "det"): lambda ec, oc, pc, nc: _par(pc),
    ("A", "perm"): lambda ec, oc, pc, nc: _par(nc),
    ("A", "det"): lambda ec, oc, pc, nc: _par(ec + nc),
}

# arguments: remaining backsteps, ec, oc, pc, nc
_COEFF_SIGN: dict[tuple[str, str], Callable[[int, int, int, int, int], int]] = {
    ("A", "perm"): lambda bs, ec, oc, pc, nc: _par(oc + nc),
    ("A", "det"): lambda bs, ec, oc, pc, nc: _par(pc),
    ("L", "perm"): lambda bs, ec, oc, pc, nc: _par(nc + bs),
    ("L", "det"): lambda bs, ec, oc, pc, nc: _par(ec + nc + bs),
}


def _check(matrix: str, kind: str) -> None:
    if matrix not in MATRICES or kind not in KINDS:
        raise ValueError(f"unknown matrix/kind {matrix!r}/{kind!r}")


def oracle_matrix(G: OrientedHypergraph, matrix: str) -> matrices.IntMatrix:
    return matrices.adjacency_matrix(G) if matrix == "A" else matrices.laplacian(G)


def oracle_scalar(G: OrientedHypergraph, matrix: str, kind: str, limits: Limits = DEFAULT_LIMITS) -> int:
    _check(matrix, kind)
    M = oracle_matrix(G, matrix)
    return matrices.det_exact(M) if kind == "det" else matrices.perm_exact(M, limits)


def oracle_charpoly(G: OrientedHypergraph, matrix: str, kind: str, limits: Limits = DEFAULT_LIMITS) -> IntPolynomial:
    _check(matrix, kind)
    M = oracle_matrix(G, matrix)
    if kind == "det":
        return matrices.charpoly_det_oracle(M)
    return matrices.charpoly_perm_oracle(M, limits)


def scalar_from_profile(hist: Counter, matrix: str, kind: str) -> int:
    _check(matrix, kind)
    sign = _SCALAR_SIGN[matrix, kind]
    total = 0
    for (bs, _, ec, oc, pc, nc), mult in hist.items():
        if matrix == "A" and bs:
            continue
        total += mult * sign(ec, oc, pc, nc)
    return total


def charpoly_from_profile(hist: Counter, n: int, matrix: str, kind: str) -> IntPolynomial:
    _check(matrix, kind)
    sign = _COEFF_SIGN[matrix, kind]
    coeffs = [0] * (n + 1)
    for (bs, cb, ec, oc, pc, nc), mult in hist.items():
        if matrix == "A":
            # exactly bs deleted: the representative must have all of them canonical
            if cb == bs:
                coeffs[bs] += mult * sign(0, ec, oc, pc, nc)
        else:
            for k in range(cb + 1):
                coeffs[k] += mult * comb(cb, k) * sign(bs - k, ec, oc, pc, nc)
    return IntPolynomial(tuple(coeffs))


def scalar(G: OrientedHypergraph, matrix: str, kind: str, limits: Limits = DEFAULT_LIMITS, verify: bool = False) -> int:
    """det or perm of A or L as a signed contributor count."""
    total = scalar_from_profile(profile(G, limits), matrix, kind)
    if verify:
        expected = oracle_scalar(G, matrix, kind, limits)
        if total != expected:
            raise VerificationError(f"{kind}({matrix}): contributors give {total}, oracle {expected}")
    return total


def charpoly(G: OrientedHypergraph, matrix: str, kind: str, limits: Limits = DEFAULT_LIMITS, verify: bool = False) -> IntPolynomial:
    """det or perm of ``xI - M`` from signed counts of distinct sub-contributors."""
    poly = charpoly_from_profile(profile(G, limits), G.n_vertices, matrix, kind)
    if verify:
        expected = oracle_charpoly(G, matrix, kind, limits)
        if poly != expected:
            raise VerificationError(
                f"charpoly {kind}({matrix}): contributors give {poly.tolist()}, oracle {expected.tolist()}"
            )
    return poly


def charpoly_from_hat_sets(G: OrientedHypergraph, matrix: str, kind: str, limits: Limits = DEFAULT_LIMITS) -> IntPolynomial:
    """Same polynomial, summed over the materialized, hash-deduplicated hat sets.

    Slow; exists to check :func:`charpoly` against the literal definition.
    """
    _check(matrix, kind)
    sign = _COEFF_SIGN[matrix, kind]
    enum = enumerate_hat_eq if matrix == "A" else enumerate_hat_geq
    coeffs = []
    for k in range(G.n_vertices + 1):
        total = 0
        for sub in enum(G, k, limits):
            st = stats(G, sub)
            total += sign(st.bs, st.ec, st.oc, st.pc, st.nc)
        coeffs.append(total)
    return IntPolynomial(tuple(coeffs))


def summary(G: OrientedHypergraph, limits: Limits = DEFAULT_LIMITS) -> dict[str, object]:
    """All four scalars and all four polynomials from one traversal."""
    hist = profile(G, limits)
    out: dict[str, object] = {"contributors": sum(hist.values())}
    for matrix in MATRICES:
        for kind in KINDS:
            out[f"{kind}_{matrix}"] = scalar_from_profile(hist, matrix, kind)
            out[f"charpoly_{kind}_{matrix}"] = charpoly_from_profile(hist, G.n_vertices, matrix, kind)
    return out


def perm_L(G, limits=DEFAULT_LIMITS, verify=False) -> int:
    return scalar(G, "L", "perm", limits, verify)


def det_L(G, limits=DEFAULT_LIMITS, verify=False) -> int:
    return scalar(G, "L", "det", limits, verify)


def perm_A(G, limits=DEFAULT_LIMITS, verify=False) -> int:
    return scalar(G, "A", "perm", limits, verify)


def det_A(G, limits=DEFAULT_LIMITS, verify=False) -> int:
    return scalar(G, "A", "det", limits, verify)


def charpoly_perm_A(G, limits=DEFAULT_LIMITS, verify=False) -> IntPolynomial:
    return charpoly(G, "A", "perm", limits, verify)


def charpoly_det_A(G, limits=DEFAULT_LIMITS, verify=False) -> IntPolynomial:
    return charpoly(G, "A", "det", limits, verify)


def charpoly_perm_L(G, limits=DEFAULT_LIMITS, verify=False) -> IntPolynomial:
    return charpoly(G, "L", "perm", limits, verify)


def charpoly_det_L(G, limits=DEFAULT_LIMITS, verify=False) -> IntPolynomial:
    return charpoly(G, "L", "det", limits, verify)
