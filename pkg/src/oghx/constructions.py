"""Generators for the explicit extremal families.

Each generator enumerates the r-subsets of [0, n) against the family's
defining predicate, so counts are exact by construction and every family
is reproducible edge-for-edge.  Vertices are 0-based; families whose
source states 1-based labels are translated by -1.  Freeness of a family
from its forbidden pattern is never assumed anywhere in this package: the
containment engine re-verifies it in the test suite.

Families:

- consecutive(n, r, k):  linear; r-sets with a consecutive pair among the
  first k-1 adjacent positions; for k = r+1 additionally every r-set whose
  maximum is the last vertex.  Count is C(n,r) - C(n-k+1,r) exactly.
- pow2_gap(n, r):  r-sets whose second-minus-first difference is a power
  of two 2^p with 4*2^p <= n.
- gap_free(n, r, k, m):  cyclic; r-sets with no run of k-1 cyclically
  consecutive gaps all exceeding m.
- modular_slice(n, r, k):  cyclic; the densest residue class (by vertex
  sum mod m) of gap_free on n' = t*floor(n/t) vertices, t = t(r,k),
  m = n'/t; at least a 1/m fraction of gap_free survives.
- interior_consecutive(n, r):  cyclic; r-sets avoiding vertices 0 and n-1
  with a consecutive pair somewhere before the last position.
- matching_lower(n, r, k):  cyclic; r-sets meeting {0..k-2} or having some
  cyclic gap at most k-1.
- star(n, r):  all r-sets through vertex 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .core import CYCLIC, LINEAR, Edge, Hypergraph, OrderKind, edge_sum_mod
from .errors import ParamOutOfRange
from .thresholds import t_param


@dataclass(frozen=True)
class GapParams:
    """Parameters chosen by the modular slice: divisor t, modulus m, residue class."""

    k: int
    m: int
    t: int
    residue: int

    def __post_init__(self):
        if self.m < 1 or self.t < 1 or not 0 <= self.residue < self.m:
            raise ParamOutOfRange(f"invalid gap parameters {self}")


def _from_predicate(n: int, r: int, order: OrderKind, pred) -> Hypergraph:
    edges = tuple(e for e in combinations(range(n), r) if pred(e))
    return Hypergraph(n=n, r=r, order=order, edges=edges)


def gen_consecutive(n: int, r: int, k: int, order: OrderKind = LINEAR) -> Hypergraph:
    """r-sets with a_{i+1} = a_i + 1 for some i < k-1 (k = r+1 adds the max = n-1 sets)."""
    if not 1 <= k <= r + 1 or not r + 1 <= n:
        raise ParamOutOfRange(f"need 1 <= k <= r+1 <= n, got n={n}, r={r}, k={k}")
    pairs = min(k - 1, r - 1)

    def pred(e: Edge) -> bool:
        if any(e[i + 1] == e[i] + 1 for i in range(pairs)):
            return True
        return k == r + 1 and e[-1] == n - 1

    return _from_predicate(n, r, order, pred)


def gen_pow2_gap(n: int, r: int, order: OrderKind = LINEAR) -> Hypergraph:
    """r-sets whose first gap e[1]-e[0] is an exact power of two 2^p, 4*2^p <= n."""
    if r < 2 or n < 8:
        raise ParamOutOfRange(f"need r >= 2 and n >= 8, got n={n}, r={r}")
    allowed = set()
    p = 0
    while 4 * (1 << p) <= n:
        allowed.add(1 << p)
        p += 1
    return _from_predicate(n, r, order, lambda e: e[1] - e[0] in allowed)


def has_km_gaps(edge: Edge, n: int, k: int, m: int) -> bool:
    """True iff some k-1 cyclically consecutive gaps of the set all exceed m."""
    r = len(edge)
    gaps = [(edge[(i + 1) % r] - edge[i]) % n for i in range(r)]
    return any(
        all(gaps[(i + t) % r] > m for t in range(k - 1)) for i in range(r)
    )


def gen_gap_free(n: int, r: int, k: int, m: int) -> Hypergraph:
    """Cyclic family of the r-sets without (k, m)-gaps."""
    if not n > r >= k >= 2:
        raise ParamOutOfRange(f"need n > r >= k >= 2, got n={n}, r={r}, k={k}")
    if m < 0:
        raise ParamOutOfRange(f"need m >= 0, got m={m}")
    return _from_predicate(n, r, CYCLIC, lambda e: not has_km_gaps(e, n, k, m))


def gen_modular_slice(n: int, r: int, k: int) -> tuple[Hypergraph, GapParams]:
    """Densest mod-m residue class of the gap-free family on n' = t*floor(n/t) vertices.

    Ties break to the smallest residue.  The class has at least a 1/m share
    of the gap-free family by pigeonhole.  Edges live on 0..n'-1 but the
    returned host keeps all n vertices, so it witnesses n-vertex bounds.
    """
    if r < 2 or not 2 <= k <= r:
        raise ParamOutOfRange(f"need r >= 2 and 2 <= k <= r, got r={r}, k={k}")
    t = t_param(r, k)
    m = n // t
    n_prime = t * m
    if m < 1 or n_prime <= r:
        raise ParamOutOfRange(
            f"n={n} too small for t({r},{k})={t}: slice host has n'={n_prime} vertices"
        )
    base = gen_gap_free(n_prime, r, k, m)
    counts = [0] * m
    for e in base.edges:
        counts[edge_sum_mod(e, m)] += 1
    residue = max(range(m), key=lambda c: (counts[c], -c))
    edges = tuple(e for e in base.edges if edge_sum_mod(e, m) == residue)
    host = Hypergraph(n=n, r=r, order=CYCLIC, edges=edges)
    return host, GapParams(k=k, m=m, t=t, residue=residue)


def gen_interior_consecutive(n: int, r: int) -> Hypergraph:
    """Cyclic r-sets inside 1..n-2 with a consecutive pair before the last position."""
    if r < 3 or n < r + 2:
        raise ParamOutOfRange(f"need r >= 3 and n >= r+2, got n={n}, r={r}")

    def pred(e: Edge) -> bool:
        if e[0] == 0 or e[-1] == n - 1:
            return False
        return any(e[j + 1] == e[j] + 1 for j in range(r - 2))

    return _from_predicate(n, r, CYCLIC, pred)


def gen_matching_lower(n: int, r: int, k: int) -> Hypergraph:
    """Cyclic r-sets meeting the fixed set {0..k-2} or having a cyclic gap <= k-1."""
    if not n > r >= 2 or k < 2:
        raise ParamOutOfRange(f"need n > r >= 2 and k >= 2, got n={n}, r={r}, k={k}")

    def pred(e: Edge) -> bool:
        if e[0] <= k - 2:
            return True
        return any((e[(i + 1) % r] - e[i]) % n <= k - 1 for i in range(r))

    return _from_predicate(n, r, CYCLIC, pred)


def gen_star(n: int, r: int, order: OrderKind = LINEAR) -> Hypergraph:
    """All r-sets containing vertex 0; count C(n-1, r-1)."""
    if not n >= r >= 2:
        raise ParamOutOfRange(f"need n >= r >= 2, got n={n}, r={r}")
    return _from_predicate(n, r, order, lambda e: e[0] == 0)
