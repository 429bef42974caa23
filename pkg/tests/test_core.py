import itertools
import random

import pytest

from oghx import (
    CYCLIC,
    LINEAR,
    edge_sum_mod,
    make_hypergraph,
    parse,
    rotate,
    serialize,
    shadow,
    with_order,
)
from oghx.errors import (
    ArityMismatch,
    ArityTooSmall,
    DuplicateEdge,
    NotCyclic,
    NotStrictlyIncreasing,
    ParamOutOfRange,
    ParseError,
    VertexOutOfRange,
)


def complete(n, r, order=LINEAR):
    return make_hypergraph(n, r, order, itertools.combinations(range(n), r))


class TestMakeHypergraph:
    def test_basic(self):
        h = make_hypergraph(4, 2, LINEAR, [[0, 2], [1, 3]])
        assert h.edge_count == 2
        assert h.edges == ((0, 2), (1, 3))

    def test_duplicate_rejected(self):
        with pytest.raises(DuplicateEdge):
            make_hypergraph(4, 2, LINEAR, [[0, 2], [0, 2]])

    def test_cyclic(self):
        h = make_hypergraph(5, 3, CYCLIC, [[0, 1, 4]])
        assert h.edge_count == 1 and h.order is CYCLIC

    def test_arity(self):
        with pytest.raises(ArityMismatch):
            make_hypergraph(4, 2, LINEAR, [[0, 1, 2]])

    def test_range(self):
        with pytest.raises(VertexOutOfRange):
            make_hypergraph(4, 2, LINEAR, [[0, 4]])

    def test_monotone(self):
        with pytest.raises(NotStrictlyIncreasing):
            make_hypergraph(4, 2, LINEAR, [[2, 0]])
        with pytest.raises(NotStrictlyIncreasing):
            make_hypergraph(4, 2, LINEAR, [[1, 1]])

    def test_params(self):
        with pytest.raises(ParamOutOfRange):
            make_hypergraph(0, 1, LINEAR, [])
        with pytest.raises(ParamOutOfRange):
            make_hypergraph(3, 4, LINEAR, [])

    def test_edges_sorted_canonically(self):
        a = make_hypergraph(5, 2, LINEAR, [[1, 3], [0, 2]])
        b = make_hypergraph(5, 2, LINEAR, [[0, 2], [1, 3]])
        assert a == b


class TestShadow:
    def test_single_edge(self):
        h = make_hypergraph(5, 3, LINEAR, [[0, 1, 2]])
        assert shadow(h) == {(0, 1), (0, 2), (1, 2)}

    def test_complete(self):
        assert len(shadow(complete(6, 3))) == 15

    def test_consecutive_family_against_bruteforce(self):
        # frozen from brute-force pair enumeration over gen_consecutive(6,3,2)
        from oghx import gen_consecutive

        g = gen_consecutive(6, 3, 2)
        brute = {
            pair
            for pair in itertools.combinations(range(6), 2)
            if any(set(pair) <= set(e) for e in g.edges)
        }
        assert len(brute) == 15
        assert shadow(g) == brute

    def test_arity_too_small(self):
        with pytest.raises(ArityTooSmall):
            shadow(make_hypergraph(3, 1, LINEAR, [[0]]))

    def test_size_envelope_random(self):
        rng = random.Random(0)
        for _ in range(50):
            n = rng.randint(3, 8)
            r = rng.randint(2, min(4, n))
            edges = [e for e in itertools.combinations(range(n), r) if rng.random() < 0.4]
            h = make_hypergraph(n, r, LINEAR, edges)
            if not edges:
                continue
            s = len(shadow(h))
            from math import comb

            assert s <= min(r * h.edge_count, comb(n, r - 1))
            single = make_hypergraph(n, r, LINEAR, [edges[0]])
            assert len(shadow(single)) == r


class TestRotate:
    def test_identity(self):
        h = make_hypergraph(5, 3, CYCLIC, [[0, 1, 2], [1, 3, 4]])
        assert rotate(h, 0) == h

    def test_wraparound(self):
        h = make_hypergraph(5, 3, CYCLIC, [[0, 1, 2]])
        assert rotate(h, 4).edges == ((0, 1, 4),)

    def test_inverse(self):
        rng = random.Random(1)
        for _ in range(25):
            n = rng.randint(3, 8)
            edges = [e for e in itertools.combinations(range(n), 2) if rng.random() < 0.5]
            h = make_hypergraph(n, 2, CYCLIC, edges)
            s = rng.randrange(n)
            assert rotate(rotate(h, s), n - s) == h

    def test_not_cyclic(self):
        with pytest.raises(NotCyclic):
            rotate(make_hypergraph(4, 2, LINEAR, [[0, 1]]), 1)

    def test_edge_count_preserved(self):
        h = complete(6, 3, CYCLIC)
        assert rotate(h, 2).edge_count == h.edge_count


def test_edge_sum_mod():
    assert edge_sum_mod((0, 1, 2), 3) == 0
    assert edge_sum_mod((1, 4, 7), 6) == 0
    assert edge_sum_mod((2, 3), 4) == 1
    with pytest.raises(ParamOutOfRange):
        edge_sum_mod((0, 1), 0)


class TestFormat:
    def test_parse_minimal(self):
        h = parse("oghx v1\nn=4 r=2 order=linear\n0 2\n")
        assert h.n == 4 and h.r == 2 and h.edges == ((0, 2),)

    def test_round_trip_identity(self):
        rng = random.Random(2)
        for _ in range(25):
            n = rng.randint(2, 9)
            r = rng.randint(1, min(3, n))
            order = rng.choice([LINEAR, CYCLIC])
            edges = [e for e in itertools.combinations(range(n), r) if rng.random() < 0.5]
            h = make_hypergraph(n, r, order, edges)
            text = serialize(h)
            assert parse(text) == h
            assert serialize(parse(text)) == text

    def test_canonical_bytes(self):
        a = make_hypergraph(5, 2, LINEAR, [[1, 3], [0, 2]])
        b = make_hypergraph(5, 2, LINEAR, [[0, 2], [1, 3]])
        assert serialize(a) == serialize(b)

    def test_comments_and_blanks_ignored(self):
        text = "oghx v1\n# a comment\n\nn=4 r=2 order=cyclic\n# more\n0 2\n\n1 3\n"
        h = parse(text)
        assert h.order is CYCLIC and h.edge_count == 2

    def test_decreasing_line_reports_position(self):
        with pytest.raises(NotStrictlyIncreasing, match="line 3"):
            parse("oghx v1\nn=4 r=2 order=linear\n2 0\n")

    def test_trailing_newline_required(self):
        with pytest.raises(ParseError):
            parse("oghx v1\nn=4 r=2 order=linear\n0 2")

    def test_bad_magic(self):
        with pytest.raises(ParseError):
            parse("oghx v2\nn=4 r=2 order=linear\n")

    def test_bad_header(self):
        with pytest.raises(ParseError, match="line 2"):
            parse("oghx v1\nn=4 r=banana order=linear\n")

    def test_duplicate_edge_line(self):
        with pytest.raises(DuplicateEdge, match="line 4"):
            parse("oghx v1\nn=4 r=2 order=linear\n0 2\n0 2\n")

    def test_non_integer_token(self):
        with pytest.raises(ParseError, match="line 3"):
            parse("oghx v1\nn=4 r=2 order=linear\n0 x\n")


def test_with_order():
    h = make_hypergraph(4, 2, LINEAR, [[0, 2]])
    c = with_order(h, CYCLIC)
    assert c.order is CYCLIC and c.edges == h.edges
    assert with_order(c, LINEAR) == h
