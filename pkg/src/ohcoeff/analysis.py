"""Contributor bounds over orientations, plus the Sachs basic-figure oracle.

Orientation sweeps rely on one observation.  Under the orientation given
by a bitmask, a circle's sign is ``(-1)^(length + popcount(mask & X))``
with ``X`` the XOR of the bits of the incidences it uses.  Every objective
therefore has the form ``sum_c w_c * (-1)^popcount(mask & X_c)``, which is
the Walsh-Hadamard transform of the weight vector indexed by ``X_c``.
Contributors do not depend on the orientation, so one enumeration serves
all ``2^|I|`` orientations.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from . import coefficients
from .contributors import profile
from .errors import NotAPlainGraph, PreconditionViolated, ResourceLimitExceeded, VerificationError
from .hypergraph import OrientedHypergraph, Orientation, require_signed_graph, is_balanced_signed_graph, is_constant_orientation
from .limits import DEFAULT_LIMITS, Limits
from .matrices import IntPolynomial

OBJECTIVES = ("perm_L", "det_L", "perm_A", "det_A")


@dataclass(frozen=True)
class BoundsReport:
    contributor_count: int
    perm_L: int
    det_L: int
    lower_strict_ok: bool
    upper_perm_attained: bool
    upper_det_attained: bool
    constant_orientation: bool
    bouquet_family: bool
    notes: tuple[str, ...] = ()

    @property
    def bounds_hold(self) -> bool:
        c = self.contributor_count
        return -c < self.perm_L <= c and -c < self.det_L <= c


@dataclass(frozen=True)
class OrientationSweepResult:
    objective: str
    n_incidences: int
    contributor_count: int
    values: tuple[int, ...]
    max_value: int
    argmax: tuple[int, ...]
    min_value: int

    def mask_string(self, mask: int) -> str:
        """Character ``b`` is 1 when incidence ``b`` is oriented -1."""
        return "".join("1" if mask >> b & 1 else "0" for b in range(self.n_incidences))


def _require_sweepable(G: OrientedHypergraph) -> None:
    if G.isolated_vertices():
        raise PreconditionViolated("hypergraph has isolated vertices")
    if G.empty_edges():
        raise PreconditionViolated("hypergraph has 0-edges")


def is_bouquet_family(G: OrientedHypergraph) -> bool:
    """Every edge sits at a single vertex with one sign on all its incidences."""
    for incs in G.on_edge:
        if not incs:
            continue
        first = G.incidences[incs[0]]
        for i in incs[1:]:
            inc = G.incidences[i]
            if inc.vertex != first.vertex or inc.sign != first.sign:
                return False
    return True


def bounds_report(G: OrientedHypergraph, limits: Limits = DEFAULT_LIMITS) -> BoundsReport:
    _require_sweepable(G)
    hist = profile(G, limits)
    count = sum(hist.values())
    perm = coefficients.scalar_from_profile(hist, "L", "perm")
    det = coefficients.scalar_from_profile(hist, "L", "det")
    constant = is_constant_orientation(G) is not Orientation.NEITHER
    bouquet = is_bouquet_family(G)
    notes = []
    if not (-count < perm <= count):
        notes.append(f"perm(L)={perm} outside (-{count}, {count}]")
    if not (-count < det <= count):
        notes.append(f"det(L)={det} outside (-{count}, {count}]")
    if perm == count and not constant:
        notes.append("perm(L) maximum attained by a non-constant orientation that yields the signless Laplacian")
    if constant and perm != count:
        notes.append("constant orientation misses the perm(L) maximum")
    if (det == count) != bouquet:
        notes.append("det(L) sharpness disagrees with the bouquet predicate")
    return BoundsReport(
        contributor_count=count,
        perm_L=perm,
        det_L=det,
        lower_strict_ok=perm > -count and det > -count,
        upper_perm_attained=perm == count,
        upper_det_attained=det == count,
        constant_orientation=constant,
        bouquet_family=bouquet,
        notes=tuple(notes),
    )


def _walsh_hadamard(a: np.ndarray) -> np.ndarray:
    a = a.copy()
    n = a.shape[0]
    h = 1
    while h < n:
        view = a.reshape(-1, 2, h)
        lo = view[:, 0, :].copy()
        hi = view[:, 1, :]
        view[:, 0, :] = lo + hi
        view[:, 1, :] = lo - hi
        h *= 2
    return a


def orientation_sweep(G: OrientedHypergraph, objective: str, limits: Limits = DEFAULT_LIMITS) -> OrientationSweepResult:
    """Evaluate ``objective`` for every orientation of G's underlying hypergraph.

    ``values[mask]`` is the objective under the orientation whose bit ``b``
    is set exactly when incidence ``b`` is -1.  G's own signs are ignored.
    """
    if objective not in OBJECTIVES:
        raise ValueError(f"unknown objective {objective!r}")
    n_inc = G.n_incidences
    if n_inc > limits.max_incidences_sweep:
        raise ResourceLimitExceeded(
            f"{n_inc} incidences exceed the sweep cap {limits.max_incidences_sweep}"
        )
    _require_sweepable(G)
    adjacency_only = objective.endswith("_A")
    weights = np.zeros(1 << n_inc, dtype=np.int64)
    hist = profile(G, limits, with_mask=True)
    for (bs, _, ec, oc, _, _, x), mult in hist.items():
        if adjacency_only and bs:
            continue
        parity = {"perm_L": 0, "det_L": ec, "perm_A": oc, "det_A": ec + oc}[objective]
        weights[x] += -mult if parity % 2 else mult
    values = tuple(int(v) for v in _walsh_hadamard(weights))
    best = max(values)
    return OrientationSweepResult(
        objective=objective,
        n_incidences=n_inc,
        contributor_count=sum(hist.values()),
        values=values,
        max_value=best,
        argmax=tuple(m for m, v in enumerate(values) if v == best),
        min_value=min(values),
    )


def balanced_perm_A_check(G: OrientedHypergraph, limits: Limits = DEFAULT_LIMITS) -> bool:
    """Whether perm(A) equals the number of backstep-free contributors.

    For a balanced signed graph this must hold, and a failure raises
    :class:`VerificationError`.  Unbalanced graphs just report the comparison.
    """
    require_signed_graph(G)
    value = coefficients.perm_A(G, limits)
    cover_count = sum(m for key, m in profile(G, limits).items() if key[0] == 0)
    if is_balanced_signed_graph(G) and value != cover_count:
        raise VerificationError(f"balanced signed graph with perm(A)={value} != {cover_count}")
    return value == cover_count


def _plain_edges(G: OrientedHypergraph) -> list[tuple[int, int]]:
    out = []
    for e, incs in enumerate(G.on_edge):
        if len(incs) != 2:
            raise NotAPlainGraph(f"edge {G.edges[e]!r} has size {len(incs)}")
        a, b = (G.incidences[i] for i in incs)
        if a.sign * b.sign != -1:
            raise NotAPlainGraph(f"edge {G.edges[e]!r} has a negative adjacency")
        out.append((a.vertex, b.vertex))
    return out


def _figure_weight(n: int, chosen: Sequence[tuple[int, int]], deg: Sequence[int]) -> tuple[int, int] | None:
    """(uncovered vertices, (-1)^p 2^c) for an edge set, or None if it is not a basic figure."""
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, w in chosen:
        parent[find(u)] = find(w)
    comp_edges: dict[int, int] = {}
    for u, _ in chosen:
        r = find(u)
        comp_edges[r] = comp_edges.get(r, 0) + 1
    comp_verts: dict[int, int] = {}
    comp_has_leaf: dict[int, bool] = {}
    for v in range(n):
        if deg[v]:
            r = find(v)
            comp_verts[r] = comp_verts.get(r, 0) + 1
            comp_has_leaf[r] = comp_has_leaf.get(r, False) or deg[v] == 1
    p = c = 0
    for r, ne in comp_edges.items():
        if comp_has_leaf[r]:
            if ne != 1 or comp_verts[r] != 2:
                return None
        else:
            c += 1
        p += 1
    uncovered = sum(1 for v in range(n) if not deg[v])
    return uncovered, (-1) ** p * 2**c


def sachs_coefficients(G: OrientedHypergraph) -> IntPolynomial:
    """Characteristic polynomial of a plain graph's adjacency matrix via basic figures.

    A basic figure is a set of vertex-disjoint components, each a single
    edge or a cycle (loops and pairs of parallel edges count as cycles).
    The x^k coefficient sums ``(-1)^components * 2^cycles`` over figures
    leaving ``k`` vertices uncovered.
    """
    edges = _plain_edges(G)
    n = G.n_vertices
    coeffs = [0] * (n + 1)
    deg = [0] * n
    chosen: list[tuple[int, int]] = []

    def rec(k: int) -> None:
        if k == len(edges):
            res = _figure_weight(n, chosen, deg)
            if res is not None:
                coeffs[res[0]] += res[1]
            return
        rec(k + 1)
        u, w = edges[k]
        deg[u] += 1
        deg[w] += 1
        if deg[u] <= 2 and deg[w] <= 2:
            chosen.append((u, w))
            rec(k + 1)
            chosen.pop()
        deg[u] -= 1
        deg[w] -= 1

    rec(0)
    return IntPolynomial(tuple(coeffs))
