import itertools
from math import comb

import pytest

from oghx import (
    CYCLIC,
    LINEAR,
    build_conflicts,
    crossing_matching_pattern,
    crossing_path_pattern,
    gen_consecutive,
    is_free,
    make_hypergraph,
    rotate,
    solve_exact,
    solve_interval,
    verify_witness,
)
from oghx.errors import ArityMismatch, OrderKindMismatch, ParamOutOfRange, PatternTooLarge


def complete(n, r, order=LINEAR):
    return make_hypergraph(n, r, order, itertools.combinations(range(n), r))


class TestBuildConflicts:
    def test_unique_matching_copy(self):
        inst = build_conflicts(4, 2, LINEAR, crossing_matching_pattern(2, 2, LINEAR))
        assert len(inst.ground) == 6 and len(inst.copies) == 1

    def test_unique_triple_path_copy(self):
        inst = build_conflicts(4, 3, LINEAR, crossing_path_pattern(3, 2, LINEAR))
        assert len(inst.ground) == 4 and len(inst.copies) == 1

    def test_one_copy_per_four_subset(self):
        inst = build_conflicts(5, 2, LINEAR, crossing_path_pattern(2, 3, LINEAR))
        assert len(inst.ground) == 10 and len(inst.copies) == comb(5, 4)

    def test_pattern_too_large(self):
        with pytest.raises(PatternTooLarge):
            build_conflicts(3, 2, LINEAR, crossing_matching_pattern(2, 2, LINEAR))


class TestSolveExact:
    def test_segment_path_n5(self):
        res = solve_exact(5, 2, LINEAR, crossing_path_pattern(2, 3, LINEAR))
        assert res.optimum == 7 and res.status == "proven"

    def test_short_path_n4(self):
        res = solve_exact(4, 2, LINEAR, crossing_path_pattern(2, 2, LINEAR))
        assert res.optimum == 3

    def test_cyclic_matching_n5(self):
        res = solve_exact(5, 2, CYCLIC, crossing_matching_pattern(2, 2, CYCLIC))
        assert res.optimum == 7

    def test_witness_certified(self):
        res = solve_exact(6, 3, LINEAR, crossing_path_pattern(3, 2, LINEAR))
        p = crossing_path_pattern(3, 2, LINEAR)
        assert verify_witness(res.witness, p)
        assert res.witness.edge_count == res.optimum

    def test_witness_rotation_stays_free(self):
        p = crossing_matching_pattern(2, 2, CYCLIC)
        res = solve_exact(6, 2, CYCLIC, p)
        for s in range(6):
            assert is_free(rotate(res.witness, s), p)

    def test_single_edge_pattern(self):
        res = solve_exact(5, 2, LINEAR, crossing_path_pattern(2, 1, LINEAR))
        assert res.optimum == 0

    def test_deterministic_reproducibility(self):
        p = crossing_path_pattern(2, 3, LINEAR)
        a = solve_exact(7, 2, LINEAR, p)
        b = solve_exact(7, 2, LINEAR, p)
        assert (a.optimum, a.nodes, a.witness) == (b.optimum, b.nodes, b.witness)

    def test_optimum_dominates_construction(self):
        for n, r, k in [(6, 2, 2), (7, 2, 3), (6, 3, 2), (7, 3, 3)]:
            res = solve_exact(n, r, LINEAR, crossing_path_pattern(r, k, LINEAR))
            assert res.optimum >= gen_consecutive(n, r, k).edge_count

    def test_timeout_reports_best_known(self):
        p = crossing_path_pattern(2, 3, LINEAR)
        res = solve_exact(8, 2, LINEAR, p, max_nodes=2)
        assert res.status == "timeout"
        assert verify_witness(res.witness, p)
        assert res.optimum <= 13  # cannot exceed the true value

    def test_parallel_same_optimum(self):
        for n, r, k, order in [(6, 2, 3, LINEAR), (6, 2, 2, CYCLIC)]:
            if order is LINEAR:
                p = crossing_path_pattern(r, k, order)
            else:
                p = crossing_matching_pattern(r, k, order)
            seq = solve_exact(n, r, order, p)
            par = solve_exact(n, r, order, p, parallel=True)
            assert par.optimum == seq.optimum and par.status == "proven"

    def test_mismatches(self):
        with pytest.raises(OrderKindMismatch):
            solve_exact(5, 2, CYCLIC, crossing_path_pattern(2, 2, LINEAR))
        with pytest.raises(ArityMismatch):
            solve_exact(5, 2, LINEAR, crossing_path_pattern(3, 2, LINEAR))


class TestSolveInterval:
    def test_unit_parts(self):
        res = solve_interval((1, 1, 1), crossing_path_pattern(3, 2, LINEAR))
        assert res.optimum == 1  # single candidate edge, pattern needs two
        res1 = solve_interval((1, 1, 1), crossing_path_pattern(3, 1, LINEAR))
        assert res1.optimum == 0  # forbidding the edge itself

    def test_transversal_ground_only(self):
        res = solve_interval((2, 2, 2), crossing_path_pattern(3, 2, LINEAR))
        assert res.optimum == 4  # frozen: exact solve over the 8 transversal triples
        for e in res.witness.edges:
            assert e[0] < 2 <= e[1] < 4 <= e[2]

    def test_dominated_by_unrestricted(self):
        z = solve_interval((2, 2, 2), crossing_path_pattern(3, 2, LINEAR))
        full = solve_exact(6, 3, LINEAR, crossing_path_pattern(3, 2, LINEAR))
        assert z.optimum <= full.optimum

    def test_pattern_must_be_linear(self):
        with pytest.raises(OrderKindMismatch):
            solve_interval((2, 2), crossing_path_pattern(2, 2, CYCLIC))

    def test_part_count_must_match(self):
        with pytest.raises(ArityMismatch):
            solve_interval((2, 2), crossing_path_pattern(3, 2, LINEAR))
        with pytest.raises(ParamOutOfRange):
            solve_interval((2, 0, 2), crossing_path_pattern(3, 2, LINEAR))
