import pytest
from hypothesis import given, settings

from generators import hypergraphs, x3
from ohcoeff.errors import (
    DanglingReference,
    DuplicateName,
    InvalidSign,
    NotASignedGraph,
    ResourceLimitExceeded,
    UnknownElement,
)
from ohcoeff.hypergraph import (
    DirectedAdjacency,
    Orientation,
    adjacencies,
    adjacency_sign,
    build,
    degree,
    enumerate_weak_walks,
    from_graph,
    from_signed_graph,
    is_balanced_signed_graph,
    is_constant_orientation,
    signed_walk_count,
    size,
    weak_delete,
)
from ohcoeff.limits import Limits
from ohcoeff.matrices import laplacian


def parallel_pair(s1=1, s2=-1):
    return build(["v"], ["e"], [("v", "e", s1), ("v", "e", s2)])


class TestBuild:
    def test_fixtures_valid(self, T3, X3):
        assert T3.vertices == ("v1", "v2", "v3")
        assert T3.edges == ("e12", "e13", "e23")
        assert [i.id for i in T3.incidences] == list(range(6))
        assert X3.n_incidences == 3

    def test_dangling_vertex(self):
        with pytest.raises(DanglingReference):
            build(["a"], ["e"], [("b", "e", 1)])

    def test_dangling_edge(self):
        with pytest.raises(DanglingReference):
            build(["a"], ["e"], [("a", "f", 1)])

    @pytest.mark.parametrize("names", [["a", "a"], ["a", "b", "a"]])
    def test_duplicate_vertex(self, names):
        with pytest.raises(DuplicateName):
            build(names, [], [])

    def test_duplicate_edge(self):
        with pytest.raises(DuplicateName):
            build(["a"], ["e", "e"], [])

    @pytest.mark.parametrize("bad", [0, 2, "x", True, None])
    def test_invalid_sign(self, bad):
        with pytest.raises(InvalidSign):
            build(["a"], ["e"], [("a", "e", bad)])

    def test_string_signs(self):
        G = build(["a"], ["e"], [("a", "e", "+"), ("a", "e", "-")])
        assert G.signs == (1, -1)

    def test_isolated_vertices_and_empty_edges_allowed(self):
        G = build(["a", "b"], ["e", "f"], [("a", "e", 1)])
        assert G.isolated_vertices() == [1]
        assert G.empty_edges() == [1]


class TestDegreeSize:
    def test_t3(self, T3):
        assert degree(T3, "v1") == 2
        assert size(T3, "e12") == 2

    def test_x3(self, X3):
        assert degree(X3, "v1") == 1
        assert size(X3, "e") == 3

    def test_parallel_multiplicity(self):
        assert degree(parallel_pair(), "v") == 2

    def test_unknown(self, T3):
        with pytest.raises(UnknownElement):
            degree(T3, "zz")
        with pytest.raises(UnknownElement):
            size(T3, "zz")

    @given(hypergraphs())
    def test_handshake(self, G):
        assert sum(degree(G, v) for v in G.vertices) == sum(size(G, e) for e in G.edges) == G.n_incidences


class TestAdjacencies:
    def test_x3(self, X3):
        adj = adjacencies(X3, "v1")
        assert [a.head_vertex for a in adj] == [1, 2]
        assert all(adjacency_sign(X3, a) == -1 for a in adj)

    def test_t3(self, T3):
        adj = adjacencies(T3, "v1")
        assert len(adj) == 2
        assert {a.edge for a in adj} == {0, 1}

    def test_t3_signs(self, T3):
        v1v2 = DirectedAdjacency(0, 0, 0, 1, 1)
        v2v3 = DirectedAdjacency(1, 4, 2, 5, 2)
        assert adjacency_sign(T3, v1v2) == 1
        assert adjacency_sign(T3, v2v3) == -1

    def test_extroverted_pair_is_negative(self):
        G = build(["a", "b"], ["e"], [("a", "e", 1), ("b", "e", 1)])
        assert adjacency_sign(G, adjacencies(G, "a")[0]) == -1

    def test_parallel_loops(self):
        adj = adjacencies(parallel_pair(), "v")
        assert [(a.tail_incidence, a.head_incidence) for a in adj] == [(0, 1), (1, 0)]
        assert all(a.is_loop for a in adj)

    @pytest.mark.parametrize("s1,s2,expected", [(1, 1, -1), (-1, -1, -1), (1, -1, 1)])
    def test_loop_sign(self, s1, s2, expected):
        G = parallel_pair(s1, s2)
        assert {adjacency_sign(G, a) for a in adjacencies(G, "v")} == {expected}

    def test_backstep_is_not_an_adjacency(self, T3):
        with pytest.raises(ValueError):
            adjacency_sign(T3, DirectedAdjacency(0, 0, 0, 0, 0))

    @given(hypergraphs())
    def test_opposites_exist_with_equal_sign(self, G):
        for v in range(G.n_vertices):
            for a in adjacencies(G, v):
                assert a.reversed() in adjacencies(G, a.head_vertex)
                assert adjacency_sign(G, a.reversed()) == adjacency_sign(G, a)


class TestWeakDelete:
    def test_x3(self, X3):
        H = weak_delete(X3, {"v1"})
        assert H.vertices == ("v2", "v3")
        assert size(H, "e") == 2

    def test_t3_drop(self, T3):
        H = weak_delete(T3, {"v1", "v2"}, drop_empty_edges=True)
        assert H.vertices == ("v3",)
        assert H.edges == ("e13", "e23")
        assert [i.sign for i in H.incidences] == [-1, 1]

    def test_t3_keep(self, T3):
        H = weak_delete(T3, {"v1", "v2"})
        assert H.edges == T3.edges
        assert H.empty_edges() == [0]

    def test_empty_set_is_identity(self, T3):
        assert weak_delete(T3, set()) == T3

    def test_unknown(self, T3):
        with pytest.raises(UnknownElement):
            weak_delete(T3, {"nope"})

    @given(hypergraphs(max_v=5))
    def test_composition(self, G):
        names = list(G.vertices)
        S1, S2 = set(names[::2]), set(names[1::3])
        assert weak_delete(weak_delete(G, S1), S2 - S1) == weak_delete(G, S1 | S2)


class TestWalks:
    def test_t3_backsteps(self, T3):
        walks = enumerate_weak_walks(T3, "v1", "v1", 1)
        assert len(walks) == 2
        assert all(W.backsteps() == 1 and W.sign == -1 for W in walks)
        assert signed_walk_count(T3, "v1", "v1", 1) == -2

    def test_t3_step(self, T3):
        walks = enumerate_weak_walks(T3, "v1", "v2", 1)
        assert [W.incidences for W in walks] == [(0, 1)]
        assert signed_walk_count(T3, "v1", "v2", 1) == 1

    @pytest.mark.parametrize("v,w,expected", [("v1", "v1", 1), ("v1", "v2", 0)])
    def test_empty_walk(self, T3, v, w, expected):
        assert signed_walk_count(T3, v, w, 0) == expected

    def test_deterministic_order(self, T3):
        a = enumerate_weak_walks(T3, "v1", "v3", 3)
        b = enumerate_weak_walks(T3, "v1", "v3", 3)
        assert a == b
        assert [W.incidences for W in a] == sorted(W.incidences for W in a)

    def test_walk_structure(self, X3):
        for W in enumerate_weak_walks(X3, "v1", "v2", 2):
            assert W.length == 2
            assert W.vertices[0] == 0 and W.vertices[-1] == 1
            for h in range(W.length):
                a, b = X3.incidences[W.incidences[2 * h]], X3.incidences[W.incidences[2 * h + 1]]
                assert (a.vertex, a.edge) == (W.vertices[h], W.edges[h])
                assert (b.vertex, b.edge) == (W.vertices[h + 1], W.edges[h])

    def test_length_cap(self, T3):
        with pytest.raises(ResourceLimitExceeded):
            signed_walk_count(T3, "v1", "v1", 5)

    def test_walk_count_cap(self, T3):
        with pytest.raises(ResourceLimitExceeded):
            signed_walk_count(T3, "v1", "v1", 3, Limits(max_walks=10))

    @settings(max_examples=40, deadline=None)
    @given(hypergraphs(max_v=4, max_i=8))
    def test_matches_laplacian_powers(self, G):
        minus_L = -laplacian(G)
        for k in range(4):
            P = minus_L ** k
            for v in range(G.n_vertices):
                for w in range(G.n_vertices):
                    assert signed_walk_count(G, v, w, k) == P[v, w]


class TestOrientation:
    def test_x3(self, X3):
        assert is_constant_orientation(X3) is Orientation.EXTROVERTED

    def test_x3_negated(self, X3):
        assert is_constant_orientation(X3.negated()) is Orientation.INTROVERTED

    def test_t3(self, T3):
        assert is_constant_orientation(T3) is Orientation.NEITHER

    def test_mask_round_trip(self, T3):
        assert T3.with_mask(T3.mask()) == T3
        assert T3.mask() == 0b001010


class TestBalance:
    def test_plain_graph_balanced(self):
        G = from_graph(["a", "b", "c", "d"], [("a", "b"), ("b", "c"), ("c", "a"), ("c", "d")])
        assert is_balanced_signed_graph(G)

    def test_t3_unbalanced(self, T3):
        assert not is_balanced_signed_graph(T3)

    def test_x3_not_signed_graph(self, X3):
        with pytest.raises(NotASignedGraph):
            is_balanced_signed_graph(X3)

    def test_negative_loop_unbalanced(self):
        assert not is_balanced_signed_graph(parallel_pair(1, 1))
        assert is_balanced_signed_graph(parallel_pair(1, -1))

    def test_half_edges_ignored(self):
        G = build(["a", "b"], ["h", "e"], [("a", "h", 1), ("a", "e", 1), ("b", "e", 1)])
        assert is_balanced_signed_graph(G)

    def test_switched_even_cycle(self):
        G = from_signed_graph(["a", "b", "c", "d"], [("a", "b", -1), ("b", "c", -1), ("c", "d", 1), ("d", "a", 1)])
        assert is_balanced_signed_graph(G)
        G = from_signed_graph(["a", "b", "c", "d"], [("a", "b", -1), ("b", "c", 1), ("c", "d", 1), ("d", "a", 1)])
        assert not is_balanced_signed_graph(G)
