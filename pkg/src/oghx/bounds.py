"""Closed-form values, recurrences and inequality certificates.

Numeric lower bounds in reports always come from materialized construction
counts, never from asymptotic clauses; order-of-growth statements are
carried verbatim in the textual note and are deliberately not numerified.
Fractional upper bounds are floored (extremal values are integers).
Closed forms are only returned inside their stated validity range;
outside it the exact solver is the authority.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Sequence

from .containment import contains_crossing_path_fast, crossing_path_end_states
from .constructions import (
    gen_interior_consecutive,
    gen_matching_lower,
    gen_modular_slice,
    gen_pow2_gap,
    gen_star,
)
from .core import CYCLIC, Hypergraph, OrderKind, shadow
from .errors import (
    EmptySizes,
    NotCyclic,
    OutOfTheoremRange,
    ParamOutOfRange,
    PreconditionViolated,
)
from .thresholds import gap_threshold, meets_gap_threshold, t_param

__all__ = [
    "BoundReport",
    "ex_ordered_path_exact",
    "ex_ordered_path_recurrence_ub",
    "interval_bound",
    "ex_cg_path_report",
    "ex_cg_matching_report",
    "zigzag_certificate",
    "tk_count",
    "p2_injectivity_check",
    "t_param",
    "gap_threshold",
    "meets_gap_threshold",
]

comb = math.comb


@dataclass(frozen=True)
class BoundReport:
    """Exact value and/or numeric bounds for one extremal instance, with sources."""

    family: str  # "path" | "matching"
    n: int
    r: int
    k: int
    order: OrderKind
    exact: Optional[int] = None
    lower: Optional[int] = None
    lower_source: Optional[str] = None
    upper: Optional[int] = None
    upper_source: Optional[str] = None
    asymptotic_note: str = ""

    def __post_init__(self):
        if self.exact is not None:
            if self.lower != self.exact or self.upper != self.exact:
                raise ValueError("exact reports must have lower = upper = exact")
        if self.lower is not None and self.upper is not None:
            if self.lower > self.upper:
                raise ValueError(f"lower {self.lower} exceeds upper {self.upper}")

    def to_dict(self) -> dict:
        return {
            "family": self.family,
            "n": self.n,
            "r": self.r,
            "k": self.k,
            "order": self.order.value,
            "exact": self.exact,
            "lower": self.lower,
            "lower_source": self.lower_source,
            "upper": self.upper,
            "upper_source": self.upper_source,
            "asymptotic_note": self.asymptotic_note,
        }


def _exact_report(family, n, r, k, order, value, source, note="") -> BoundReport:
    return BoundReport(
        family=family,
        n=n,
        r=r,
        k=k,
        order=order,
        exact=value,
        lower=value,
        lower_source=source,
        upper=value,
        upper_source=source,
        asymptotic_note=note,
    )


def ex_ordered_path_exact(n: int, r: int, k: int) -> int:
    """C(n,r) - C(n-k+1,r): max edges of a linear host with no crossing k-path."""
    if r < 2 or k < 1:
        raise ParamOutOfRange(f"need r >= 2 and k >= 1, got r={r}, k={k}")
    if k >= r + 2:
        raise OutOfTheoremRange(f"no closed form for k={k} >= r+2 (r={r})")
    if n < r + k:
        raise OutOfTheoremRange(f"closed form needs n >= r+k, got n={n} < {r + k}")
    return comb(n, r) - comb(n - k + 1, r)


@lru_cache(maxsize=None)
def _rec(n: int, r: int, k: int) -> int:
    if k == 1:
        return 0
    if r == 1:
        # crossing 2-path of singletons: at most one edge
        return 1
    if n < r + k - 1:
        return comb(n, r)  # host too small to carry the pattern
    return comb(n - 2, r - 2) + _rec(n - 2, r - 1, k - 1) + _rec(n - 1, r, k)


def ex_ordered_path_recurrence_ub(n: int, r: int, k: int) -> int:
    """Upper bound by the two-vertex-gluing recurrence, evaluated recursively."""
    if not 2 <= k <= r + 1:
        raise ParamOutOfRange(f"recurrence needs 2 <= k <= r+1, got k={k}, r={r}")
    if n < r + k:
        raise ParamOutOfRange(f"recurrence needs n >= r+k, got n={n}")
    return _rec(n, r, k)


def interval_bound(sizes: Sequence[int], k: int) -> int:
    """k * (prod sizes) * (sum 1/size), exactly in rationals, then ceiled."""
    if len(sizes) == 0:
        raise EmptySizes("need at least one interval size")
    if len(sizes) < 2 or any(s < 1 for s in sizes) or k < 1:
        raise ParamOutOfRange(f"need r >= 2 positive sizes and k >= 1, got {sizes}, k={k}")
    prod = math.prod(sizes)
    total = sum(Fraction(1, s) for s in sizes)
    return math.ceil(k * prod * total)


def ex_cg_path_report(n: int, r: int, k: int) -> BoundReport:
    """Assemble exact value / numeric bounds for cyclic crossing k-paths."""
    if r < 2 or k < 1 or n < r:
        raise ParamOutOfRange(f"need n >= r >= 2 and k >= 1, got n={n}, r={r}, k={k}")
    if k == 1:
        return _exact_report("path", n, r, k, CYCLIC, 0, "single-edge")
    if n < r + k - 1:
        return _exact_report(
            "path", n, r, k, CYCLIC, comb(n, r), "complete-host",
            note="host smaller than the pattern; every host is free",
        )
    if k == r + 1:
        if n >= 2 * r + 1:
            value = comb(n, r) - comb(n - r, r)
            return _exact_report("path", n, r, k, CYCLIC, value, "binomial-difference")
        return BoundReport(
            family="path", n=n, r=r, k=k, order=CYCLIC,
            asymptotic_note="closed form applies for n >= 2r+1; use the exact solver here",
        )
    if 2 <= k <= r:
        uppers = [
            (math.floor(Fraction((k - 1) * (r - 1), r) * comb(n, r - 1)), "shadow-ratio")
        ]
        if k == 2:
            uppers.append((comb(n, r - 1) // 2, "end-label-pairs"))
        upper, upper_source = min(uppers, key=lambda t: t[0])
        lowers = []
        try:
            slice_host, _ = gen_modular_slice(n, r, k)
            lowers.append((slice_host.edge_count, "modular-slice"))
        except ParamOutOfRange:
            pass
        if k == r and r >= 3 and n >= r + 2:
            lowers.append((gen_interior_consecutive(n, r).edge_count, "interior-consecutive"))
        lower, lower_source = max(lowers, key=lambda t: t[0]) if lowers else (None, None)
        if lower is not None and lower > upper:
            raise AssertionError(
                f"construction count {lower} exceeds proven bound {upper} at {(n, r, k)}"
            )
        return BoundReport(
            family="path", n=n, r=r, k=k, order=CYCLIC,
            lower=lower, lower_source=lower_source,
            upper=upper, upper_source=upper_source,
            asymptotic_note="order n^(r-1) as n grows",
        )
    # k >= r+2: no numeric upper at desk scale
    lowers = []
    # every star edge shares the center, a tight k-path with k >= r+1 has no
    # common vertex, so the star is free in any vertex order
    lowers.append((gen_star(n, r).edge_count, "star"))
    note = "order n^(r-1) as n grows"
    if k >= 2 * r:
        if n >= 8:
            lowers.append((gen_pow2_gap(n, r).edge_count, "pow2-gaps"))
        note = "order n^(r-1) log n as n grows"
    lower, lower_source = max(lowers, key=lambda t: t[0])
    return BoundReport(
        family="path", n=n, r=r, k=k, order=CYCLIC,
        lower=lower, lower_source=lower_source,
        asymptotic_note=note,
    )


def ex_cg_matching_report(n: int, r: int, k: int) -> BoundReport:
    """Assemble exact value / numeric bounds for crossing k-matchings."""
    if k < 2 or r < 2:
        raise ParamOutOfRange(f"need k >= 2 and r >= 2, got k={k}, r={r}")
    if n < max(r * k, 2 * k - 1):
        raise ParamOutOfRange(
            f"need n >= max(rk, 2k-1) = {max(r * k, 2 * k - 1)}, got n={n}"
        )
    if k == 2:
        value = comb(n, r) - comb(n - r, r)
        return _exact_report("matching", n, r, k, CYCLIC, value, "binomial-difference")
    if r == 2:
        value = 2 * (k - 1) * n - comb(2 * k - 1, 2)
        return _exact_report("matching", n, r, k, CYCLIC, value, "crossing-segments")
    lower = gen_matching_lower(n, r, k).edge_count
    upper = 2 * (k - 1) * (r - 1) * comb(n, r - 1)
    return BoundReport(
        family="matching", n=n, r=r, k=k, order=CYCLIC,
        lower=lower, lower_source="matching-union",
        upper=upper, upper_source="types-times-segments",
        asymptotic_note="order n^(r-1) as n grows",
    )


def zigzag_certificate(h: Hypergraph, k: int) -> tuple[int, Fraction, bool]:
    """(e(H), (k-1)(r-1)/r * |shadow|, e <= bound).  Failing it forces a k-path."""
    if h.order is not CYCLIC:
        raise NotCyclic("zigzag certificate is defined on cyclic hosts")
    if not 1 <= k <= h.r:
        raise ParamOutOfRange(f"need 1 <= k <= r, got k={k}, r={h.r}")
    e = h.edge_count
    bound = Fraction((k - 1) * (h.r - 1), h.r) * len(shadow(h)) if h.r >= 2 else Fraction(0)
    return e, bound, e <= bound


def tk_count(h: Hypergraph, k: int) -> int:
    """Exact number of ending r-tuples of crossing k-paths, by level enumeration."""
    if h.order is not CYCLIC:
        raise NotCyclic("ending-edge counts are defined on cyclic hosts")
    if not 1 <= k <= h.r:
        raise ParamOutOfRange(f"need 1 <= k <= r, got k={k}, r={h.r}")
    return len(crossing_path_end_states(h, k))


def p2_injectivity_check(h: Hypergraph) -> bool:
    """For an engine-verified 2-path-free cyclic host, are all 2e(H) end labels distinct?

    Each edge (a_1 < ... < a_r in cut labels) contributes the labels
    edge - {a_1} and edge - {a_r}; pairwise distinctness certifies
    e(H) <= C(n, r-1) / 2.
    """
    if h.order is not CYCLIC:
        raise NotCyclic("the end-label check is defined on cyclic hosts")
    if h.r < 2:
        raise ParamOutOfRange(f"need r >= 2, got r={h.r}")
    if contains_crossing_path_fast(h, 2):
        raise PreconditionViolated("host contains a crossing 2-path")
    labels = []
    for e in h.edges:
        labels.append(e[1:])
        labels.append(e[:-1])
    return len(set(labels)) == 2 * h.edge_count
