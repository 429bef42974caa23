"""Pattern containment in ordered/cyclic hosts.

Containment is order-preserving: an embedding maps pattern positions to
host vertices so that position order is preserved (after rotating the
host, in the cyclic case) and every pattern edge lands on a host edge.
Only this non-induced notion exists here.

Cyclic embeddings are enumerated by cutting the host at every vertex h0
and pinning pattern position 0 to the cut vertex; each order-preserving
injection is then found exactly once (its cut is the image of position 0).
A cyclic *copy* is the pair (image set, pattern-edge -> host-edge map);
re-derivations of the same pair through host rotations coincide under this
pinning, and copies of rotation-symmetric patterns that differ only in the
edge map are counted separately, as distinct pairs.

The ending-edge dynamic program (cyclic hosts, k <= r) tracks the states
(edge, start vertex): reading the edge clockwise from the start vertex
gives the last r path vertices in subscript order.  Level 1 holds all r
rotations of every edge; a level step replaces the start vertex u by any
vertex x strictly inside the clockwise arc from u to the next edge vertex
w, provided edge - u + x is again a host edge, and designates w as the new
start.  Level k is empty iff the host has no crossing k-path.
"""

from __future__ import annotations

from bisect import insort
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Optional

from .core import CYCLIC, LINEAR, Edge, Hypergraph, OrderKind, edge_mask
from .errors import (
    ArityMismatch,
    NotCyclic,
    OrderKindMismatch,
    ParamOutOfRange,
    PatternTooLarge,
    PhaseOutOfRange,
)
from .patterns import Pattern


@dataclass(frozen=True)
class Embedding:
    """Host vertex per pattern position; rotation is the host cut (cyclic only)."""

    vertex_map: tuple[int, ...]
    rotation: int = 0


def _check_compat(h: Hypergraph, p: Pattern) -> None:
    if h.order != p.order:
        raise OrderKindMismatch(f"host is {h.order}, pattern is {p.order}")
    if h.r != p.r:
        raise ArityMismatch(f"host has r={h.r}, pattern has r={p.r}")


class _PatternPlan:
    """Per-position check lists for the backtracking matcher."""

    def __init__(self, p: Pattern):
        self.m = p.m
        # at position q: edges whose largest position is q (full membership test)
        self.full: list[list[Edge]] = [[] for _ in range(p.m)]
        # at position q: (edge, members <= q) for prefix pruning, proper prefixes only
        self.prefix: list[list[Edge]] = [[] for _ in range(p.m)]
        for e in p.edges:
            self.full[e[-1]].append(e)
            for q in e[:-1]:
                self.prefix[q].append(tuple(v for v in e if v <= q))


class _HostIndex:
    """Edge masks plus all sub-masks of edges, for O(1) feasibility tests."""

    def __init__(self, edges: tuple[Edge, ...]):
        self.edge_masks = frozenset(edge_mask(e) for e in edges)
        subs: set[int] = set()
        for e in edges:
            k = len(e)
            for t in range(1, 1 << k):
                mask = 0
                for i in range(k):
                    if t >> i & 1:
                        mask |= 1 << e[i]
                subs.add(mask)
        self.subset_masks = subs


def _match(
    plan: _PatternPlan,
    index: _HostIndex,
    n: int,
    pin_first_to_zero: bool,
) -> Iterator[tuple[int, ...]]:
    """Yield order-preserving assignments (host vertex per position), lexicographically."""
    m = plan.m
    assign = [0] * m
    edge_masks = index.edge_masks
    subset_masks = index.subset_masks

    def feasible(q: int) -> bool:
        for e in plan.full[q]:
            mask = 0
            for t in e:
                mask |= 1 << assign[t]
            if mask not in edge_masks:
                return False
        for e in plan.prefix[q]:
            mask = 0
            for t in e:
                mask |= 1 << assign[t]
            if mask not in subset_masks:
                return False
        return True

    def extend(q: int, lo: int) -> Iterator[tuple[int, ...]]:
        if q == m:
            yield tuple(assign)
            return
        # host must still have room for the remaining m-q positions
        for v in range(lo, n - (m - q) + 1):
            assign[q] = v
            if feasible(q):
                yield from extend(q + 1, v + 1)

    if pin_first_to_zero:
        assign[0] = 0
        if m == 1:
            if feasible(0):
                yield tuple(assign)
        elif feasible(0):
            yield from extend(1, 1)
    else:
        yield from extend(0, 0)


def _relabel_edges(h: Hypergraph, h0: int) -> tuple[Edge, ...]:
    return tuple(tuple(sorted((v - h0) % h.n for v in e)) for e in h.edges)


def _iter_embeddings(h: Hypergraph, p: Pattern) -> Iterator[Embedding]:
    if p.m > h.n or not h.edges:
        return
    plan = _PatternPlan(p)
    if h.order is LINEAR:
        index = _HostIndex(h.edges)
        for assign in _match(plan, index, h.n, pin_first_to_zero=False):
            yield Embedding(vertex_map=assign, rotation=0)
    else:
        for h0 in range(h.n):
            index = _HostIndex(_relabel_edges(h, h0))
            for assign in _match(plan, index, h.n, pin_first_to_zero=True):
                orig = tuple((v + h0) % h.n for v in assign)
                yield Embedding(vertex_map=orig, rotation=h0)


def find_embedding(h: Hypergraph, p: Pattern) -> Optional[Embedding]:
    """A witness embedding, or None iff the host does not contain the pattern."""
    _check_compat(h, p)
    return next(_iter_embeddings(h, p), None)


def is_free(h: Hypergraph, p: Pattern) -> bool:
    return find_embedding(h, p) is None


def _edge_map_key(p: Pattern, vertex_map: tuple[int, ...]) -> tuple[Edge, ...]:
    return tuple(tuple(sorted(vertex_map[q] for q in e)) for e in p.edges)


def count_copies(h: Hypergraph, p: Pattern) -> int:
    """Number of distinct copies; cyclic copies are (image set, edge map) pairs."""
    _check_compat(h, p)
    if h.order is LINEAR:
        return sum(1 for _ in _iter_embeddings(h, p))
    keys = {_edge_map_key(p, emb.vertex_map) for emb in _iter_embeddings(h, p)}
    return len(keys)


def enumerate_copies_complete(
    n: int, r: int, order: OrderKind, p: Pattern
) -> tuple[tuple[Edge, ...], ...]:
    """Every copy of p in the complete r-graph on n vertices, as sorted edge-sets.

    In the complete host every order-preserving injection is edge-valid, so
    copies are enumerated by vertex subsets (and host cuts, cyclically)
    rather than by backtracking.  Output is deduplicated and sorted.
    """
    if p.order != order:
        raise OrderKindMismatch(f"pattern is {p.order}, requested host is {order}")
    if p.r != r:
        raise ArityMismatch(f"pattern has r={p.r}, requested host has r={r}")
    if p.m > n:
        raise PatternTooLarge(f"pattern has m={p.m} > n={n} vertices")
    out: set[tuple[Edge, ...]] = set()
    if order is LINEAR:
        for sub in combinations(range(n), p.m):
            out.add(tuple(sorted(_edge_map_key(p, sub))))
    else:
        for h0 in range(n):
            for rest in combinations(range(1, n), p.m - 1):
                rel = (0,) + rest
                orig = tuple((v + h0) % n for v in rel)
                out.add(tuple(sorted(_edge_map_key(p, orig))))
    return tuple(sorted(out))


def crossing_path_end_states(h: Hypergraph, k: int) -> frozenset[tuple[Edge, int]]:
    """All (ending edge, start vertex) states of crossing k-paths, k <= r, cyclic host."""
    if h.order is not CYCLIC:
        raise NotCyclic("ending-edge states are defined on cyclic hosts only")
    if k < 1:
        raise ParamOutOfRange(f"k={k} must be >= 1")
    if k > h.r:
        raise PhaseOutOfRange(
            f"k={k} > r={h.r}: fall back to the generic matcher"
        )
    n = h.n
    edge_set = h.edge_set
    states: set[tuple[Edge, int]] = {(e, v) for e in h.edges for v in e}
    for _ in range(k - 1):
        nxt: set[tuple[Edge, int]] = set()
        for e, u in states:
            i = e.index(u)
            w = e[(i + 1) % len(e)]
            # candidates strictly inside the clockwise arc (u, w)
            gap = [(u + d) % n for d in range(1, (w - u) % n)]
            rest = list(e[:i] + e[i + 1 :])
            for x in gap:
                cand = rest.copy()
                insort(cand, x)
                ne = tuple(cand)
                if ne in edge_set:
                    nxt.add((ne, w))
        states = nxt
        if not states:
            break
    return frozenset(states)


def contains_crossing_path_fast(h: Hypergraph, k: int) -> bool:
    """True iff the cyclic host contains a crossing k-path (k <= r), via the DP."""
    return bool(crossing_path_end_states(h, k))
