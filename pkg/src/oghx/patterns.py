"""Fixed ordered/cyclic patterns: crossing paths, crossing matchings, custom.

A pattern is a small hypergraph on positions 0..m-1 (the positions ARE the
order: position i precedes position j iff i < j, cyclically for cyclic
patterns).  The crossing k-path on path vertices v_0..v_{k+r-2} has tight
edges {v_i,...,v_{i+r-1}} and the interleaved order in which the residue
classes of the path subscripts mod r appear as consecutive blocks, class
0 first, increasing within each block:

    r=2, k=3:  v0 < v2 < v1 < v3            (edges 13, 32, 24 on 1<2<3<4)
    r=3, k=2:  v0 < v3 < v1 < v2
    r=3, k=5:  v0 < v3 < v6 < v1 < v4 < v2 < v5

For k <= r this is exactly the interleaving
v_0 < v_r < v_1 < v_{r+1} < ... < v_{k-2} < v_{r+k-2} < v_{k-1} < ... < v_{r-1}.
The constructor re-checks both characterizations on every call.

Cyclic patterns are stored cut immediately before v_0's block; containment
treats all rotations of the host as equal, so the cut is only a canonical
representative.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

from .core import Edge, OrderKind, parse_with_comments, serialize, validate_edge
from .core import Hypergraph
from .errors import IsolatedVertex, ParamOutOfRange


@dataclass(frozen=True)
class Pattern:
    """An ordered/cyclic pattern: m positions, edges over [0, m), a label."""

    m: int
    order: OrderKind
    edges: tuple[Edge, ...]  # lexicographically sorted, like Hypergraph
    name: str = "custom"

    @cached_property
    def r(self) -> int:
        return len(self.edges[0]) if self.edges else 0

    @cached_property
    def edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Pattern):
            return NotImplemented
        return (self.m, self.order, self.edges) == (other.m, other.order, other.edges)

    def __hash__(self) -> int:
        return hash((self.m, self.order, self.edges))


def _validate_path_spec(r: int, k: int) -> None:
    if r < 2:
        raise ParamOutOfRange(f"crossing path needs r >= 2, got r={r}")
    if k < 1:
        raise ParamOutOfRange(f"crossing path needs k >= 1, got k={k}")


def path_vertex_positions(r: int, k: int) -> list[int]:
    """Position of path vertex v_t (t = 0..r+k-2) under the residue-block order."""
    _validate_path_spec(r, k)
    m = r + k - 1
    pos = [0] * m
    p = 0
    for cls in range(r):
        for t in range(cls, m, r):
            pos[t] = p
            p += 1
    _check_crossing_order(r, k, pos)
    return pos


def _check_crossing_order(r: int, k: int, pos: list[int]) -> None:
    # (i) v_0 < v_1 < ... < v_{r-1}
    assert all(pos[t] < pos[t + 1] for t in range(r - 1))
    # (ii) v_j < v_{j+r} < v_{j+2r} < ... < v_{j+1} for j < r-1
    m = r + k - 1
    for j in range(r - 1):
        chain = list(range(j, m, r)) + [j + 1]
        assert all(pos[a] < pos[b] for a, b in zip(chain, chain[1:]))
    # last class increases within its block: v_{r-1} < v_{2r-1} < ...
    chain = list(range(r - 1, m, r))
    assert all(pos[a] < pos[b] for a, b in zip(chain, chain[1:]))
    if k <= r:
        # explicit interleaved listing for short paths
        listing = []
        for t in range(k - 1):
            listing += [t, t + r]
        listing += list(range(k - 1, r))
        assert [pos[t] for t in listing] == list(range(m))


def crossing_path_pattern(r: int, k: int, order: OrderKind) -> Pattern:
    """The r-uniform crossing k-path as a pattern on r+k-1 positions."""
    pos = path_vertex_positions(r, k)
    edges = sorted(
        tuple(sorted(pos[t] for t in range(i, i + r))) for i in range(k)
    )
    return Pattern(
        m=r + k - 1,
        order=order,
        edges=tuple(edges),
        name=f"crossing-path-r{r}-k{k}",
    )


def crossing_matching_pattern(r: int, k: int, order: OrderKind) -> Pattern:
    """The r-uniform crossing k-matching: edge i takes positions i, i+k, ..., i+(r-1)k."""
    if r < 2:
        raise ParamOutOfRange(f"crossing matching needs r >= 2, got r={r}")
    if k < 1:
        raise ParamOutOfRange(f"crossing matching needs k >= 1, got k={k}")
    edges = sorted(tuple(range(i, r * k, k)) for i in range(k))
    return Pattern(
        m=r * k,
        order=order,
        edges=tuple(edges),
        name=f"crossing-matching-r{r}-k{k}",
    )


def custom_pattern(
    m: int, order: OrderKind, edges: Iterable[Sequence[int]], name: str = "custom"
) -> Pattern:
    """A user-defined pattern; every position must occur in some edge."""
    if m < 1:
        raise ParamOutOfRange(f"pattern needs m >= 1, got m={m}")
    edge_list = [list(e) for e in edges]
    if not edge_list:
        raise ParamOutOfRange("pattern needs at least one edge")
    r = len(edge_list[0])
    host = _as_hypergraph_edges(m, r, edge_list)
    used = {v for e in host for v in e}
    for v in range(m):
        if v not in used:
            raise IsolatedVertex(f"pattern position {v} occurs in no edge")
    return Pattern(m=m, order=order, edges=host, name=name)


def _as_hypergraph_edges(m: int, r: int, edges: list[list[int]]) -> tuple[Edge, ...]:
    from .core import make_hypergraph

    return make_hypergraph(m, r, OrderKind.LINEAR, edges).edges


def pattern_to_hypergraph(p: Pattern) -> Hypergraph:
    """View a pattern as the hypergraph of its positions (for serialization)."""
    return Hypergraph(n=p.m, r=p.r, order=p.order, edges=p.edges)


def serialize_pattern(p: Pattern) -> str:
    return serialize(pattern_to_hypergraph(p), comments=[f"pattern: {p.name}"])


def parse_pattern(text: str) -> Pattern:
    h, comments = parse_with_comments(text)
    name = "custom"
    for c in comments:
        if c.startswith("pattern:"):
            name = c[len("pattern:") :].strip()
            break
    return custom_pattern(h.n, h.order, h.edges, name=name)
