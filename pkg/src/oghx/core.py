"""Vertex-ordered r-uniform hypergraphs and their bit-exact file format.

Conventions used throughout the package:

- Vertices are the integers 0..n-1.  A *linear* order is the natural order
  0 < 1 < ... < n-1.  A *cyclic* order is the clockwise cycle
  0, 1, ..., n-1, 0; "convex position" is modelled purely by this cyclic
  order, never by coordinates.
- An edge is a strictly increasing r-tuple of vertices.  Hypergraphs store
  their edges lexicographically sorted, so equal hypergraphs serialize to
  identical bytes.
- Every value here is immutable after construction; all operations return
  fresh objects and are safe to share across threads.

Edges also carry an int bitmask (bit v set iff vertex v is in the edge).
Python ints are arbitrary-width, so the mask fast path has no size cap.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from typing import Iterable, Sequence

from .errors import (
    ArityMismatch,
    ArityTooSmall,
    DuplicateEdge,
    NotCyclic,
    NotStrictlyIncreasing,
    ParamOutOfRange,
    ParseError,
    VertexOutOfRange,
)

Edge = tuple[int, ...]

_EDGE_ERRORS = (ArityMismatch, VertexOutOfRange, NotStrictlyIncreasing)

FORMAT_MAGIC = "oghx v1"

_HEADER_RE = re.compile(r"^n=(\d+) r=(\d+) order=(linear|cyclic)$")


class OrderKind(Enum):
    """Kind of vertex order: linear 0<1<...<n-1 or the clockwise cycle."""

    LINEAR = "linear"
    CYCLIC = "cyclic"

    def __str__(self) -> str:
        return self.value


LINEAR = OrderKind.LINEAR
CYCLIC = OrderKind.CYCLIC


def validate_edge(vertices: Sequence[int], n: int, r: int) -> Edge:
    """Check one edge against arity, range and monotonicity; return it as a tuple."""
    e = tuple(int(v) for v in vertices)
    if len(e) != r:
        raise ArityMismatch(f"edge {e} has {len(e)} vertices, expected r={r}")
    for v in e:
        if not 0 <= v < n:
            raise VertexOutOfRange(f"vertex {v} outside [0, {n}) in edge {e}")
    if any(a >= b for a, b in zip(e, e[1:])):
        raise NotStrictlyIncreasing(f"edge {e} is not strictly increasing")
    return e


def edge_mask(e: Edge) -> int:
    mask = 0
    for v in e:
        mask |= 1 << v
    return mask


@dataclass(frozen=True)
class Hypergraph:
    """An n-vertex r-uniform hypergraph under a linear or cyclic vertex order.

    Use make_hypergraph() to build validated instances; the constructor
    trusts its arguments.
    """

    n: int
    r: int
    order: OrderKind
    edges: tuple[Edge, ...] = field(default=())

    @cached_property
    def edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges)

    @cached_property
    def edge_masks(self) -> tuple[int, ...]:
        return tuple(edge_mask(e) for e in self.edges)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def __contains__(self, e: Edge) -> bool:
        return tuple(e) in self.edge_set


def make_hypergraph(
    n: int, r: int, order: OrderKind, edges: Iterable[Sequence[int]]
) -> Hypergraph:
    """Build a validated hypergraph; duplicate edges are an error, not merged."""
    if n < 1:
        raise ParamOutOfRange(f"n={n} must be >= 1")
    if not 1 <= r <= n:
        raise ParamOutOfRange(f"r={r} must satisfy 1 <= r <= n={n}")
    seen: set[Edge] = set()
    validated: list[Edge] = []
    for raw in edges:
        e = validate_edge(raw, n, r)
        if e in seen:
            raise DuplicateEdge(f"edge {e} supplied twice")
        seen.add(e)
        validated.append(e)
    validated.sort()
    return Hypergraph(n=n, r=r, order=order, edges=tuple(validated))


def with_order(h: Hypergraph, order: OrderKind) -> Hypergraph:
    """Reinterpret the same vertex set and edges under the other order kind."""
    if h.order == order:
        return h
    return Hypergraph(n=h.n, r=h.r, order=order, edges=h.edges)


def shadow(h: Hypergraph) -> frozenset[Edge]:
    """All (r-1)-subsets contained in at least one edge."""
    if h.r < 2:
        raise ArityTooSmall(f"shadow needs r >= 2, got r={h.r}")
    out: set[Edge] = set()
    for e in h.edges:
        for i in range(h.r):
            out.add(e[:i] + e[i + 1 :])
    return frozenset(out)


def rotate(h: Hypergraph, s: int) -> Hypergraph:
    """Relabel every vertex v of a cyclic hypergraph to (v+s) mod n."""
    if h.order is not CYCLIC:
        raise NotCyclic("rotate is defined only for cyclic hypergraphs")
    s %= h.n
    edges = tuple(sorted(tuple(sorted((v + s) % h.n for v in e)) for e in h.edges))
    return Hypergraph(n=h.n, r=h.r, order=CYCLIC, edges=edges)


def edge_sum_mod(e: Sequence[int], m: int) -> int:
    """Sum of the edge's vertex labels, reduced mod m."""
    if m < 1:
        raise ParamOutOfRange(f"modulus m={m} must be >= 1")
    return sum(e) % m


def serialize(h: Hypergraph, comments: Sequence[str] = ()) -> str:
    """Canonical v1 text: magic, header, then edges in lexicographic order."""
    lines = [FORMAT_MAGIC]
    lines.extend(f"# {c}" for c in comments)
    lines.append(f"n={h.n} r={h.r} order={h.order.value}")
    lines.extend(" ".join(str(v) for v in e) for e in h.edges)
    return "\n".join(lines) + "\n"


def parse(text: str) -> Hypergraph:
    """Parse the v1 format; raises ParseError / edge validation errors with line numbers."""
    h, _ = parse_with_comments(text)
    return h


def parse_with_comments(text: str) -> tuple[Hypergraph, list[str]]:
    """Like parse(), additionally returning the stripped '#' comment lines."""
    if not text.endswith("\n"):
        raise ParseError("missing required trailing newline")
    comments: list[str] = []
    content: list[tuple[int, str]] = []
    for lineno, line in enumerate(text.split("\n")[:-1], start=1):
        stripped = line.strip()
        if not stripped:
            continue
        if stripped.startswith("#"):
            comments.append(stripped[1:].strip())
            continue
        content.append((lineno, stripped))
    if not content:
        raise ParseError("empty file: missing magic line")
    magic_no, magic = content[0]
    if magic != FORMAT_MAGIC:
        raise ParseError(f"expected magic {FORMAT_MAGIC!r}, got {magic!r}", magic_no)
    if len(content) < 2:
        raise ParseError("missing header line after magic", magic_no)
    header_no, header = content[1]
    m = _HEADER_RE.match(header)
    if m is None:
        raise ParseError(f"malformed header {header!r}", header_no)
    n, r = int(m.group(1)), int(m.group(2))
    order = OrderKind(m.group(3))
    edges: list[list[int]] = []
    seen: set[Edge] = set()
    for lineno, line in content[2:]:
        try:
            vertices = [int(tok) for tok in line.split()]
        except ValueError:
            raise ParseError(f"non-integer token in edge line {line!r}", lineno)
        try:
            e = validate_edge(vertices, n, r)
        except _EDGE_ERRORS as exc:
            raise type(exc)(f"line {lineno}: {exc}") from exc
        if e in seen:
            raise DuplicateEdge(f"line {lineno}: edge {e} supplied twice")
        seen.add(e)
        edges.append(vertices)
    return make_hypergraph(n, r, order, edges), comments
