"""Contributors: generalized cycle covers of an oriented hypergraph.

A contributor picks, for every vertex ``v``, an arc ``(tail, head)`` of two
incidence ids on one edge with ``tail`` at ``v``; the head vertices must
form a permutation of ``V``.  ``tail == head`` is a backstep, a fixed point
with ``tail != head`` is a loop.

A sub-contributor is the same object with some vertices *isolated* (arc
``None``).  They come from deleting backsteps, and they are compared by
value: two contributors that differ only in which backstep an isolated
vertex used collapse to one sub-contributor.
"""

from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Optional

from .errors import InvalidContributor, IsolatedVertex, ResourceLimitExceeded
from .hypergraph import OrientedHypergraph
from .limits import DEFAULT_LIMITS, Limits

Arc = tuple[int, int]


@dataclass(frozen=True)
class Contributor:
    """Per-vertex arcs in vertex order; ``None`` marks an isolated vertex."""

    arcs: tuple[Optional[Arc], ...]

    @property
    def isolated(self) -> frozenset[int]:
        return frozenset(v for v, a in enumerate(self.arcs) if a is None)

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(v for v, a in enumerate(self.arcs) if a is not None)

    def tails(self) -> tuple[Optional[int], ...]:
        return tuple(None if a is None else a[0] for a in self.arcs)

    def heads(self) -> tuple[Optional[int], ...]:
        return tuple(None if a is None else a[1] for a in self.arcs)

    def head_map(self, G: OrientedHypergraph) -> dict[int, int]:
        return {v: G.incidences[a[1]].vertex for v, a in enumerate(self.arcs) if a is not None}

    def backstep_vertices(self) -> tuple[int, ...]:
        return tuple(v for v, a in enumerate(self.arcs) if a is not None and a[0] == a[1])

    def delete(self, vertices: Iterable[int]) -> "Contributor":
        drop = set(vertices)
        return Contributor(tuple(None if v in drop else a for v, a in enumerate(self.arcs)))


# Sub-contributors share the representation; the alias documents intent.
SubContributor = Contributor


@dataclass(frozen=True)
class Circle:
    vertices: tuple[int, ...]
    sign: int
    degenerate: bool = False

    @property
    def length(self) -> int:
        return len(self.vertices)


@dataclass(frozen=True)
class ContributorStats:
    bs: int
    circles: tuple[Circle, ...]
    permutation: tuple[tuple[int, ...], ...]

    @property
    def ec(self) -> int:
        return sum(1 for c in self.circles if c.length % 2 == 0)

    @property
    def oc(self) -> int:
        return sum(1 for c in self.circles if c.length % 2)

    @property
    def pc(self) -> int:
        return sum(1 for c in self.circles if c.sign > 0)

    @property
    def nc(self) -> int:
        return sum(1 for c in self.circles if c.sign < 0)

    def tally(self) -> tuple[int, int, int, int, int]:
        return self.bs, self.ec, self.oc, self.pc, self.nc


def _check_no_isolated(G: OrientedHypergraph) -> None:
    iso = G.isolated_vertices()
    if iso:
        names = ", ".join(G.vertices[v] for v in iso)
        raise IsolatedVertex(f"isolated vertices have no contributors: {names}")


def enumerate_contributors(G: OrientedHypergraph, limits: Limits = DEFAULT_LIMITS) -> Iterator[Contributor]:
    """Lazily yield every contributor of ``G`` in canonical order.

    Backtracks vertex by vertex; at each vertex the tail runs over its
    incidences in id order and the head over the tail edge's incidences in
    id order.  Heads already used by earlier vertices are pruned.
    """
    _check_no_isolated(G)
    n = G.n_vertices
    incs = G.incidences
    choices = [
        [(i, j, incs[j].vertex) for i in G.at_vertex[v] for j in G.on_edge[incs[i].edge]]
        for v in range(n)
    ]
    used = [False] * n
    arcs: list[Arc] = []
    count = 0
    cap = limits.max_contributors

    def rec(v: int) -> Iterator[Contributor]:
        nonlocal count
        if v == n:
            count += 1
            if count > cap:
                raise ResourceLimitExceeded(f"more than {cap} contributors")
            yield Contributor(tuple(arcs))
            return
        for i, j, w in choices[v]:
            if used[w]:
                continue
            used[w] = True
            arcs.append((i, j))
            yield from rec(v + 1)
            arcs.pop()
            used[w] = False

    yield from rec(0)


def count_contributors(G: OrientedHypergraph, limits: Limits = DEFAULT_LIMITS) -> int:
    return sum(1 for _ in enumerate_contributors(G, limits))


Tally = tuple[int, int, int, int, int, int]


def profile(G: OrientedHypergraph, limits: Limits = DEFAULT_LIMITS, with_mask: bool = False) -> Counter:
    """Histogram of contributor tallies ``(bs, canonical_bs, ec, oc, pc, nc)``.

    ``canonical_bs`` counts backsteps taken along the vertex's lowest-id
    incidence.  Every signed sum over contributors or over deduplicated
    sub-contributors depends only on these tallies, so this single
    traversal feeds all the coefficient formulas.  Same enumeration order
    and cap as :func:`enumerate_contributors`.

    With ``with_mask`` each key gains a seventh entry: the XOR over all arcs
    of ``(1 << tail) ^ (1 << head)``, which orientation sweeps need.
    """
    _check_no_isolated(G)
    n = G.n_vertices
    incs = G.incidences
    # per choice: head vertex, arc sign, backstep flag, canonical-backstep flag, arc bits
    choices = []
    for v in range(n):
        first = G.at_vertex[v][0]
        row = []
        for i in G.at_vertex[v]:
            for j in G.on_edge[incs[i].edge]:
                row.append((incs[j].vertex, -incs[i].sign * incs[j].sign, i == j,
                            i == j == first, (1 << i) ^ (1 << j)))
        choices.append(row)
    used = [False] * n
    head = [0] * n
    sgn = [0] * n
    back = [False] * n
    canon = [False] * n
    bits = [0] * n
    hist: Counter = Counter()
    count = 0
    cap = limits.max_contributors

    def leaf() -> None:
        bs = cb = ec = oc = pc = nc = 0
        seen = [False] * n
        for start in range(n):
            if seen[start]:
                continue
            if head[start] == start:
                seen[start] = True
                if back[start]:
                    bs += 1
                    cb += canon[start]
                    continue
                length, sign = 1, sgn[start]
            else:
                length, sign, w = 0, 1, start
                while not seen[w]:
                    seen[w] = True
                    sign *= sgn[w]
                    length += 1
                    w = head[w]
            if length % 2:
                oc += 1
            else:
                ec += 1
            if sign > 0:
                pc += 1
            else:
                nc += 1
        if with_mask:
            x = 0
            for b in bits:
                x ^= b
            hist[bs, cb, ec, oc, pc, nc, x] += 1
        else:
            hist[bs, cb, ec, oc, pc, nc] += 1

    def rec(v: int) -> None:
        nonlocal count
        if v == n:
            count += 1
            if count > cap:
                raise ResourceLimitExceeded(f"more than {cap} contributors")
            leaf()
            return
        for w, s, b, cbk, xb in choices[v]:
            if used[w]:
                continue
            used[w] = True
            head[v], sgn[v], back[v], canon[v], bits[v] = w, s, b, cbk, xb
            rec(v + 1)
            used[w] = False

    rec(0)
    return hist


def stats(G: OrientedHypergraph, c: Contributor) -> ContributorStats:
    """Backsteps and circles of ``c``, plus its head-map cycle decomposition.

    Isolated vertices of a sub-contributor are skipped entirely.
    """
    incs = G.incidences
    n = G.n_vertices
    if len(c.arcs) != n:
        raise InvalidContributor("arc count differs from vertex count")
    head_of: dict[int, int] = {}
    for v, arc in enumerate(c.arcs):
        if arc is None:
            continue
        t, h = arc
        if not (0 <= t < len(incs) and 0 <= h < len(incs)):
            raise InvalidContributor(f"arc {arc} names unknown incidences")
        if incs[t].vertex != v:
            raise InvalidContributor(f"tail {t} does not sit at vertex {G.vertices[v]!r}")
        if incs[t].edge != incs[h].edge:
            raise InvalidContributor(f"arc {arc} spans two edges")
        head_of[v] = incs[h].vertex
    if sorted(head_of.values()) != sorted(head_of):
        raise InvalidContributor("head map is not a permutation of the supported vertices")

    bs = 0
    circles = []
    cycles = []
    seen = set()
    for start in head_of:
        if start in seen:
            continue
        cyc = [start]
        seen.add(start)
        w = head_of[start]
        while w != start:
            cyc.append(w)
            seen.add(w)
            w = head_of[w]
        if len(cyc) > 1:
            cycles.append(tuple(cyc))
        if len(cyc) == 1 and c.arcs[start][0] == c.arcs[start][1]:
            bs += 1
            continue
        sign = 1
        for u in cyc:
            t, h = c.arcs[u]
            sign *= -incs[t].sign * incs[h].sign
        degenerate = len(cyc) == 2 and c.arcs[cyc[1]] == c.arcs[cyc[0]][::-1]
        circles.append(Circle(tuple(cyc), sign, degenerate))
    return ContributorStats(bs, tuple(circles), tuple(cycles))


def group_by_permutomorphism(G: OrientedHypergraph, contributors: Iterable[Contributor]) -> dict[tuple[int, ...], list[Contributor]]:
    """Partition contributors by the exact permutation they induce.

    Keys are head maps as tuples (``key[v]`` is the image of vertex ``v``),
    in order of first appearance.
    """
    classes: dict[tuple[int, ...], list[Contributor]] = defaultdict(list)
    for c in contributors:
        hm = c.head_map(G)
        classes[tuple(hm[v] for v in sorted(hm))].append(c)
    return dict(classes)


def _check_k(G: OrientedHypergraph, k: int) -> None:
    if not 0 <= k <= G.n_vertices:
        raise ValueError(f"k={k} outside 0..{G.n_vertices}")


def enumerate_hat_eq(G: OrientedHypergraph, k: int, limits: Limits = DEFAULT_LIMITS) -> list[Contributor]:
    """Distinct sub-contributors from contributors with exactly ``k`` backsteps, all deleted."""
    _check_k(G, k)
    out: dict[Contributor, None] = {}
    for c in enumerate_contributors(G, limits):
        bsv = c.backstep_vertices()
        if len(bsv) == k:
            out.setdefault(c.delete(bsv))
    return list(out)


def enumerate_hat_geq(G: OrientedHypergraph, k: int, limits: Limits = DEFAULT_LIMITS) -> list[Contributor]:
    """Distinct sub-contributors from deleting any ``k`` backsteps of a contributor.

    The backsteps that are not deleted stay in the sub-contributor.
    """
    _check_k(G, k)
    out: dict[Contributor, None] = {}
    for c in enumerate_contributors(G, limits):
        bsv = c.backstep_vertices()
        for drop in combinations(bsv, k):
            out.setdefault(c.delete(drop))
    return list(out)


def extension_count(G: OrientedHypergraph, sub: Contributor) -> int:
    """How many full contributors restore ``sub`` by adding backsteps at its isolated vertices."""
    out = 1
    for v in sub.isolated:
        out *= len(G.at_vertex[v])
    return out


def cycle_notation(G: OrientedHypergraph, st: ContributorStats) -> str:
    if not st.permutation:
        return "()"
    return "".join("(" + " ".join(G.vertices[v] for v in cyc) + ")" for cyc in st.permutation)


def arc_count_matrix(G: OrientedHypergraph) -> list[list[int]]:
    """``N[v][w]`` = number of arcs from ``v`` to ``w``; its permanent is the contributor count."""
    n = G.n_vertices
    N = [[0] * n for _ in range(n)]
    for inc in G.incidences:
        for j in G.on_edge[inc.edge]:
            N[inc.vertex][G.incidences[j].vertex] += 1
    return N
