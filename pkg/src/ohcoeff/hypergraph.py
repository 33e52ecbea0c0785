"""Oriented hypergraphs and their local signed-graphic operations.

An oriented hypergraph joins vertices to edges through a list of signed
incidences, each tying one vertex to one edge.  Input order fixes
the total orderings used as matrix row/column labels, and an incidence is
identified by its position (its id), never by its (vertex, edge) image, so
parallel incidences stay distinct.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Sequence

from .errors import (
    DanglingReference,
    DuplicateName,
    InvalidSign,
    NotASignedGraph,
    ResourceLimitExceeded,
    UnknownElement,
)
from .limits import DEFAULT_LIMITS, Limits


@dataclass(frozen=True)
class Incidence:
    id: int
    vertex: int
    edge: int
    sign: int


@dataclass(frozen=True)
class DirectedAdjacency:
    tail_vertex: int
    tail_incidence: int
    edge: int
    head_incidence: int
    head_vertex: int

    def reversed(self) -> "DirectedAdjacency":
        return DirectedAdjacency(
            self.head_vertex, self.head_incidence, self.edge,
            self.tail_incidence, self.tail_vertex,
        )

    @property
    def is_loop(self) -> bool:
        return self.tail_vertex == self.head_vertex


@dataclass(frozen=True)
class WeakWalk:
    """A directed vertex weak walk.

    ``incidences`` holds the 2k incidence ids in traversal order; step h
    leaves ``vertices[h]`` along ``incidences[2h]`` into ``edges[h]`` and
    arrives at ``vertices[h + 1]`` along ``incidences[2h + 1]``.
    """

    vertices: tuple[int, ...]
    edges: tuple[int, ...]
    incidences: tuple[int, ...]
    sign: int

    @property
    def length(self) -> int:
        return len(self.incidences) // 2

    def backsteps(self) -> int:
        inc = self.incidences
        return sum(inc[2 * h] == inc[2 * h + 1] for h in range(self.length))


class Orientation(enum.Enum):
    EXTROVERTED = "extroverted"
    INTROVERTED = "introverted"
    NEITHER = "neither"


@dataclass(frozen=True)
class OrientedHypergraph:
    vertices: tuple[str, ...]
    edges: tuple[str, ...]
    incidences: tuple[Incidence, ...]

    @property
    def n_vertices(self) -> int:
        return len(self.vertices)

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    @property
    def n_incidences(self) -> int:
        return len(self.incidences)

    @cached_property
    def vertex_index(self) -> dict[str, int]:
        return {name: k for k, name in enumerate(self.vertices)}

    @cached_property
    def edge_index(self) -> dict[str, int]:
        return {name: k for k, name in enumerate(self.edges)}

    @cached_property
    def at_vertex(self) -> tuple[tuple[int, ...], ...]:
        """Incidence ids at each vertex, in id order."""
        buckets: list[list[int]] = [[] for _ in self.vertices]
        for inc in self.incidences:
            buckets[inc.vertex].append(inc.id)
        return tuple(tuple(b) for b in buckets)

    @cached_property
    def on_edge(self) -> tuple[tuple[int, ...], ...]:
        """Incidence ids on each edge, in id order."""
        buckets: list[list[int]] = [[] for _ in self.edges]
        for inc in self.incidences:
            buckets[inc.edge].append(inc.id)
        return tuple(tuple(b) for b in buckets)

    @cached_property
    def signs(self) -> tuple[int, ...]:
        return tuple(inc.sign for inc in self.incidences)

    def vertex_id(self, v) -> int:
        """Resolve a vertex name or ordinal."""
        if isinstance(v, str):
            try:
                return self.vertex_index[v]
            except KeyError:
                raise UnknownElement(f"unknown vertex {v!r}") from None
        if not 0 <= v < self.n_vertices:
            raise UnknownElement(f"vertex ordinal {v} out of range")
        return v

    def edge_id(self, e) -> int:
        """Resolve an edge name or ordinal."""
        if isinstance(e, str):
            try:
                return self.edge_index[e]
            except KeyError:
                raise UnknownElement(f"unknown edge {e!r}") from None
        if not 0 <= e < self.n_edges:
            raise UnknownElement(f"edge ordinal {e} out of range")
        return e

    def isolated_vertices(self) -> list[int]:
        return [v for v, incs in enumerate(self.at_vertex) if not incs]

    def empty_edges(self) -> list[int]:
        return [e for e, incs in enumerate(self.on_edge) if not incs]

    def with_signs(self, signs: Sequence[int]) -> "OrientedHypergraph":
        """Same underlying hypergraph, new orientation (one sign per incidence)."""
        if len(signs) != self.n_incidences:
            raise ValueError("need exactly one sign per incidence")
        for s in signs:
            if s not in (1, -1):
                raise InvalidSign(f"sign {s!r} is not +1 or -1")
        incs = tuple(
            Incidence(inc.id, inc.vertex, inc.edge, s)
            for inc, s in zip(self.incidences, signs)
        )
        return OrientedHypergraph(self.vertices, self.edges, incs)

    def with_mask(self, mask: int) -> "OrientedHypergraph":
        """Orientation from a bitmask: bit b set means incidence b is -1."""
        return self.with_signs([-1 if mask >> b & 1 else 1 for b in range(self.n_incidences)])

    def mask(self) -> int:
        return sum(1 << inc.id for inc in self.incidences if inc.sign < 0)

    def negated(self) -> "OrientedHypergraph":
        return self.with_signs([-s for s in self.signs])


def _parse_sign(sign) -> int:
    if sign in ("+", "+1"):
        return 1
    if sign in ("-", "-1"):
        return -1
    if isinstance(sign, bool) or sign not in (1, -1):
        raise InvalidSign(f"sign {sign!r} is not +1 or -1")
    return int(sign)


def build(
    vertices: Iterable[str],
    edges: Iterable[str],
    incidences: Iterable[tuple[str, str, object]],
) -> OrientedHypergraph:
    """Validate raw element lists into an :class:`OrientedHypergraph`.

    ``incidences`` are ``(vertex_name, edge_name, sign)`` triples; the sign may
    be ``+1``/``-1`` or ``"+"``/``"-"``.  Orderings follow input order.
    """
    vertices = tuple(vertices)
    edges = tuple(edges)
    for kind, names in (("vertex", vertices), ("edge", edges)):
        seen = set()
        for name in names:
            if name in seen:
                raise DuplicateName(f"duplicate {kind} name {name!r}")
            seen.add(name)
    vidx = {name: k for k, name in enumerate(vertices)}
    eidx = {name: k for k, name in enumerate(edges)}
    incs = []
    for k, (v, e, s) in enumerate(incidences):
        if v not in vidx:
            raise DanglingReference(f"incidence {k} names unknown vertex {v!r}")
        if e not in eidx:
            raise DanglingReference(f"incidence {k} names unknown edge {e!r}")
        incs.append(Incidence(k, vidx[v], eidx[e], _parse_sign(s)))
    return OrientedHypergraph(vertices, edges, tuple(incs))


def degree(G: OrientedHypergraph, v) -> int:
    return len(G.at_vertex[G.vertex_id(v)])


def size(G: OrientedHypergraph, e) -> int:
    return len(G.on_edge[G.edge_id(e)])


def adjacencies(G: OrientedHypergraph, v) -> list[DirectedAdjacency]:
    """All directed adjacencies with tail ``v``, loops included, backsteps excluded."""
    v = G.vertex_id(v)
    out = []
    for i in G.at_vertex[v]:
        e = G.incidences[i].edge
        for j in G.on_edge[e]:
            if j != i:
                out.append(DirectedAdjacency(v, i, e, j, G.incidences[j].vertex))
    return out


def adjacency_sign(G: OrientedHypergraph, adj: DirectedAdjacency) -> int:
    i, j = G.incidences[adj.tail_incidence], G.incidences[adj.head_incidence]
    if adj.tail_incidence == adj.head_incidence or i.edge != j.edge or i.edge != adj.edge:
        raise ValueError(f"{adj} is not an adjacency of this hypergraph")
    return -i.sign * j.sign


def weak_delete(G: OrientedHypergraph, S: Iterable, drop_empty_edges: bool = False) -> OrientedHypergraph:
    """Remove the vertices in ``S`` and every incidence touching them.

    Edges survive unless ``drop_empty_edges`` is set, in which case edges
    left with no incidences are removed too.  Surviving incidences are
    renumbered in their original relative order.
    """
    gone = {G.vertex_id(v) for v in S}
    kept_incs = [inc for inc in G.incidences if inc.vertex not in gone]
    used_edges = {inc.edge for inc in kept_incs}
    edges = [
        name for k, name in enumerate(G.edges)
        if not drop_empty_edges or k in used_edges
    ]
    return build(
        [name for k, name in enumerate(G.vertices) if k not in gone],
        edges,
        [(G.vertices[inc.vertex], G.edges[inc.edge], inc.sign) for inc in kept_incs],
    )


def iter_weak_walks(G: OrientedHypergraph, v, k: int, limits: Limits = DEFAULT_LIMITS) -> Iterator[WeakWalk]:
    """Every directed weak walk of length ``k`` starting at ``v``.

    Depth-first over incidence choices in id order.  A step may reuse its
    incoming incidence (a backstep).
    """
    if k < 0:
        raise ValueError("walk length must be non-negative")
    if k > limits.max_walk_length:
        raise ResourceLimitExceeded(f"walk length {k} exceeds cap {limits.max_walk_length}")
    v = G.vertex_id(v)
    incs = G.incidences
    verts = [v]
    edges: list[int] = []
    path: list[int] = []
    count = 0

    def rec(cur: int, sign: int) -> Iterator[WeakWalk]:
        nonlocal count
        if len(edges) == k:
            count += 1
            if count > limits.max_walks:
                raise ResourceLimitExceeded(f"more than {limits.max_walks} weak walks")
            yield WeakWalk(tuple(verts), tuple(edges), tuple(path), sign)
            return
        for i in G.at_vertex[cur]:
            e = incs[i].edge
            for j in G.on_edge[e]:
                w = incs[j].vertex
                verts.append(w)
                edges.append(e)
                path.extend((i, j))
                yield from rec(w, sign * incs[i].sign * incs[j].sign)
                del path[-2:]
                edges.pop()
                verts.pop()

    # the (-1)^floor(n/2) factor with n = 2k incidences
    yield from rec(v, -1 if k % 2 else 1)


def enumerate_weak_walks(G: OrientedHypergraph, v, w, k: int, limits: Limits = DEFAULT_LIMITS) -> list[WeakWalk]:
    w = G.vertex_id(w)
    return [W for W in iter_weak_walks(G, v, k, limits) if W.vertices[-1] == w]


def signed_walk_count(G: OrientedHypergraph, v, w, k: int, limits: Limits = DEFAULT_LIMITS) -> int:
    """Positive minus negative weak walks of length ``k`` from ``v`` to ``w``."""
    w = G.vertex_id(w)
    return sum(W.sign for W in iter_weak_walks(G, v, k, limits) if W.vertices[-1] == w)


def is_constant_orientation(G: OrientedHypergraph) -> Orientation:
    """Extroverted means every sign is +1, introverted every sign is -1.

    A hypergraph without incidences counts as extroverted.
    """
    signs = set(G.signs)
    if signs <= {1}:
        return Orientation.EXTROVERTED
    if signs == {-1}:
        return Orientation.INTROVERTED
    return Orientation.NEITHER


def require_signed_graph(G: OrientedHypergraph) -> None:
    for e, incs in enumerate(G.on_edge):
        if len(incs) > 2:
            raise NotASignedGraph(f"edge {G.edges[e]!r} has size {len(incs)}")


def is_balanced_signed_graph(G: OrientedHypergraph) -> bool:
    """True iff every circle of the signed graph is positive.

    Tries to give each vertex a mark in {+1, -1} so that every 2-edge's
    adjacency sign equals the product of its endpoint marks.  1-edges carry
    no circle and are skipped.
    """
    require_signed_graph(G)
    adj: list[list[tuple[int, int]]] = [[] for _ in G.vertices]
    for incs in G.on_edge:
        if len(incs) != 2:
            continue
        a, b = (G.incidences[i] for i in incs)
        s = -a.sign * b.sign
        if a.vertex == b.vertex:
            if s < 0:
                return False
            continue
        adj[a.vertex].append((b.vertex, s))
        adj[b.vertex].append((a.vertex, s))
    mark = [0] * G.n_vertices
    for root in range(G.n_vertices):
        if mark[root]:
            continue
        mark[root] = 1
        stack = [root]
        while stack:
            u = stack.pop()
            for w, s in adj[u]:
                want = mark[u] * s
                if not mark[w]:
                    mark[w] = want
                    stack.append(w)
                elif mark[w] != want:
                    return False
    return True


def from_signed_graph(vertices: Sequence[str], edges: Iterable[tuple[str, str, int]]) -> OrientedHypergraph:
    """Encode a signed graph: each edge ``(u, w, s)`` becomes a 2-edge with adjacency sign ``s``.

    The incidence at ``u`` is +1 and the one at ``w`` is ``-s``.  Edge names
    are ``e0, e1, ...``.
    """
    names, incs = [], []
    for k, (u, w, s) in enumerate(edges):
        name = f"e{k}"
        names.append(name)
        incs += [(u, name, 1), (w, name, -_parse_sign(s))]
    return build(vertices, names, incs)


def from_graph(vertices: Sequence[str], edges: Iterable[tuple[str, str]]) -> OrientedHypergraph:
    """Plain-graph encoding: every edge oriented (+1, -1), so every adjacency is positive."""
    return from_signed_graph(vertices, ((u, w, 1) for u, w in edges))
