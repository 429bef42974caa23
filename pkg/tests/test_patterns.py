import pytest

from oghx import (
    CYCLIC,
    LINEAR,
    crossing_matching_pattern,
    crossing_path_pattern,
    custom_pattern,
)
from oghx.errors import IsolatedVertex, NotStrictlyIncreasing, ParamOutOfRange
from oghx.patterns import parse_pattern, path_vertex_positions, serialize_pattern


def path_edges_in_path_order(r, k):
    """Edges of the crossing path as position sets, indexed by path edge."""
    pos = path_vertex_positions(r, k)
    return [tuple(sorted(pos[t] for t in range(i, i + r))) for i in range(k)]


class TestCrossingPath:
    def test_three_edge_segment_path(self):
        # 0-based form of the classic path on 1<2<3<4 with edges {13, 32, 24}
        p = crossing_path_pattern(2, 3, LINEAR)
        assert p.m == 4
        assert p.edge_set == {(0, 2), (1, 2), (1, 3)}

    def test_two_edge_triple_path(self):
        # order v0 < v3 < v1 < v2, derived by applying the interleaving rules
        p = crossing_path_pattern(3, 2, LINEAR)
        assert path_vertex_positions(3, 2) == [0, 2, 3, 1]
        assert p.edge_set == {(0, 2, 3), (1, 2, 3)}

    def test_five_edge_triple_path_cyclic(self):
        # residue blocks: v0 v3 v6 | v1 v4 | v2 v5
        pos = path_vertex_positions(3, 5)
        order_of_vertices = sorted(range(7), key=lambda t: pos[t])
        assert order_of_vertices == [0, 3, 6, 1, 4, 2, 5]
        p = crossing_path_pattern(3, 5, CYCLIC)
        assert p.order is CYCLIC and p.m == 7 and len(p.edges) == 5

    @pytest.mark.parametrize("r,k", [(2, 1), (2, 4), (3, 3), (3, 7), (4, 5), (5, 6)])
    def test_interleaving_conditions(self, r, k):
        pos = path_vertex_positions(r, k)
        m = r + k - 1
        assert sorted(pos) == list(range(m))
        assert all(pos[t] < pos[t + 1] for t in range(r - 1))
        for j in range(r - 1):
            chain = list(range(j, m, r)) + [j + 1]
            assert all(pos[a] < pos[b] for a, b in zip(chain, chain[1:]))

    @pytest.mark.parametrize("r,k", [(3, 2), (3, 3), (4, 2), (4, 4), (5, 5)])
    def test_short_path_listing(self, r, k):
        # v0 < vr < v1 < v_{r+1} < ... < v_{k-2} < v_{r+k-2} < v_{k-1} < ... < v_{r-1}
        assert k <= r
        pos = path_vertex_positions(r, k)
        listing = []
        for t in range(k - 1):
            listing += [t, t + r]
        listing += list(range(k - 1, r))
        assert [pos[t] for t in listing] == list(range(r + k - 1))

    @pytest.mark.parametrize("r,k,kp", [(2, 4, 2), (3, 5, 3), (3, 4, 1), (4, 5, 4)])
    def test_prefix_restriction(self, r, k, kp):
        # dropping the last k-kp edges and squashing the order gives the short path
        edges = path_edges_in_path_order(r, k)[:kp]
        support = sorted({q for e in edges for q in e})
        rank = {q: i for i, q in enumerate(support)}
        squashed = {tuple(rank[q] for q in e) for e in edges}
        assert squashed == set(crossing_path_pattern(r, kp, LINEAR).edges)

    @pytest.mark.parametrize("r,k", [(2, 5), (3, 7), (4, 9)])
    def test_every_rth_edge_is_a_matching(self, r, k):
        edges = path_edges_in_path_order(r, k)[::r]
        support = sorted({q for e in edges for q in e})
        assert len(support) == r * len(edges)  # vertex-disjoint
        rank = {q: i for i, q in enumerate(support)}
        squashed = {tuple(rank[q] for q in e) for e in edges}
        expected = crossing_matching_pattern(r, len(edges), LINEAR)
        assert squashed == set(expected.edges)

    def test_validation(self):
        with pytest.raises(ParamOutOfRange):
            crossing_path_pattern(1, 2, LINEAR)
        with pytest.raises(ParamOutOfRange):
            crossing_path_pattern(2, 0, LINEAR)


class TestCrossingMatching:
    def test_segments(self):
        p = crossing_matching_pattern(2, 2, LINEAR)
        assert p.edge_set == {(0, 2), (1, 3)}

    def test_triples(self):
        p = crossing_matching_pattern(3, 2, LINEAR)
        assert p.edge_set == {(0, 2, 4), (1, 3, 5)}

    def test_three_chords_cyclic(self):
        p = crossing_matching_pattern(2, 3, CYCLIC)
        assert p.m == 6
        assert p.edge_set == {(0, 3), (1, 4), (2, 5)}

    def test_stride_rule(self):
        for r, k in [(3, 3), (4, 2), (2, 4)]:
            p = crossing_matching_pattern(r, k, LINEAR)
            for i in range(k):
                assert tuple(range(i, r * k, k)) in p.edge_set


class TestCustomPattern:
    def test_equals_matching(self):
        p = custom_pattern(4, LINEAR, [[0, 2], [1, 3]])
        assert p == crossing_matching_pattern(2, 2, LINEAR)

    def test_isolated_vertex(self):
        with pytest.raises(IsolatedVertex):
            custom_pattern(3, LINEAR, [[0, 1]])

    def test_cyclic_tight_path(self):
        p = custom_pattern(5, CYCLIC, [[0, 1, 2], [1, 2, 3], [2, 3, 4]])
        assert p.m == 5 and len(p.edges) == 3

    def test_edge_validation_surfaces(self):
        with pytest.raises(NotStrictlyIncreasing):
            custom_pattern(4, LINEAR, [[2, 0], [1, 3]])


def test_pattern_file_round_trip():
    p = crossing_path_pattern(3, 2, CYCLIC)
    text = serialize_pattern(p)
    assert text.startswith("oghx v1\n# pattern: crossing-path-r3-k2\n")
    q = parse_pattern(text)
    assert q == p and q.name == p.name
