"""Exact extremal values at desk scale, by branch and bound.

The search formulation: ground items are the candidate host edges (all
r-sets, or all transversal r-sets in the interval variant); every pattern
copy contributes the set of its edges as a conflict.  A feasible family is
a subset of the ground containing no conflict completely, and the solver
maximizes its size -- equivalently, the excluded items form a minimum
hitting set of the conflicts.

Search scheme: branch on the lexicographically minimal violated copy, one
child per excluded edge of that copy; the i-th child also commits the
copy's earlier edges to the family, so child subtrees never overlap.
Exactness-preserving accelerators on top of that scheme:

- unit propagation: a violated copy with a single undecided edge forces
  that edge out;
- pure moves: an undecided edge in no violated copy joins the family;
- component decomposition: violated copies touching disjoint undecided
  edges are independent subproblems, solved separately and summed;
- incumbents: each subproblem seeds itself by a greedy completion, and the
  whole solve is seeded by engine-verified construction families when the
  pattern matches one;
- bound: undecided count minus a greedy packing of disjoint violated
  copies.

Deterministic mode (default) fixes every iteration order, so optimum,
witness and node count reproduce bit-for-bit.  Parallel mode farms the
root branches out to worker processes: the optimum is unchanged, the
witness and node count may differ from the deterministic ones.
"""

from __future__ import annotations

import os
import time
from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Optional, Sequence

from .containment import enumerate_copies_complete, is_free
from .constructions import (
    gen_consecutive,
    gen_interior_consecutive,
    gen_matching_lower,
    gen_modular_slice,
    gen_pow2_gap,
    gen_star,
)
from .core import Edge, Hypergraph, LINEAR, OrderKind, with_order
from .errors import (
    ArityMismatch,
    OrderKindMismatch,
    OutOfMemory,
    ParamOutOfRange,
    PatternTooLarge,
)
from .patterns import Pattern, crossing_matching_pattern, crossing_path_pattern

# combinatorial explosion guard: ground items are materialized r-sets
MAX_GROUND = 200_000


@dataclass(frozen=True)
class ConflictInstance:
    """Indexed ground edges plus the copies, each a sorted tuple of ground indices."""

    n: int
    r: int
    order: OrderKind
    ground: tuple[Edge, ...]
    copies: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class SolveResult:
    optimum: int
    witness: Hypergraph
    nodes: int
    status: str  # "proven" | "timeout"


class _BudgetExhausted(Exception):
    pass


def build_conflicts(n: int, r: int, order: OrderKind, p: Pattern) -> ConflictInstance:
    """Conflict instance of forbidding p inside the complete r-graph on n vertices."""
    if comb(n, r) > MAX_GROUND:
        raise OutOfMemory(f"ground of C({n},{r}) = {comb(n, r)} r-sets exceeds guard")
    ground = tuple(combinations(range(n), r))
    return _conflicts_over(n, r, order, ground, p)


def _conflicts_over(
    n: int, r: int, order: OrderKind, ground: tuple[Edge, ...], p: Pattern
) -> ConflictInstance:
    index = {e: i for i, e in enumerate(ground)}
    copies = set()
    for edge_set in enumerate_copies_complete(n, r, order, p):
        try:
            copy = tuple(sorted(index[e] for e in edge_set))
        except KeyError:
            continue  # copy uses an edge outside the restricted ground
        copies.add(copy)
    return ConflictInstance(
        n=n, r=r, order=order, ground=ground, copies=tuple(sorted(copies))
    )


def _greedy_completion(free: int, cons: list[tuple[int, int]]) -> int:
    """Drop one edge (lowest bit) from each still-complete conflict, in copy order."""
    mask = free
    for _, c in cons:
        if c & mask == c:
            mask &= ~(c & -c)
    return mask


def _packing(cons: list[tuple[int, int]]) -> int:
    """Greedy number of pairwise-disjoint violated copies: each forces an exclusion."""
    used = 0
    count = 0
    for _, c in cons:
        if c & used == 0:
            used |= c
            count += 1
    return count


class _Engine:
    """Deterministic exact search over (free mask, violated conflict masks)."""

    def __init__(
        self,
        copy_list: Sequence[tuple[int, int]],
        max_nodes: Optional[int] = None,
        deadline: Optional[float] = None,
    ):
        self.max_nodes = max_nodes
        self.deadline = deadline
        self.nodes = 0
        self.copy_list = list(copy_list)

    def _tick(self) -> None:
        self.nodes += 1
        if self.max_nodes is not None and self.nodes > self.max_nodes:
            raise _BudgetExhausted("node budget exhausted")
        if self.deadline is not None and self.nodes % 256 == 0:
            if time.monotonic() > self.deadline:
                raise _BudgetExhausted("wall-clock budget exhausted")

    def solve(self, free: int, cons: list[tuple[int, int]]) -> tuple[int, int]:
        """Exact (max included count, included mask) over `free`; (-1, 0) if infeasible."""
        self._tick()
        # propagate units until fixpoint
        out = 0
        while True:
            forced = 0
            live: list[tuple[int, int]] = []
            for cid, c in cons:
                if c & out:
                    continue
                c &= free
                if c == 0:
                    return -1, 0
                if c & (c - 1) == 0:
                    forced |= c
                else:
                    live.append((cid, c))
            if forced == 0:
                cons = live
                break
            out |= forced
            free &= ~forced
            cons = live
        if not cons:
            return free.bit_count(), free
        covered = 0
        for _, c in cons:
            covered |= c
        pure = free & ~covered
        active = free & covered
        # split into connected components of the conflict structure
        comps: list[tuple[int, list[tuple[int, int]]]] = []
        for cid, c in cons:
            merged_mask = c
            merged_cons = [(cid, c)]
            rest = []
            for cm, clist in comps:
                if cm & merged_mask:
                    merged_mask |= cm
                    merged_cons.extend(clist)
                else:
                    rest.append((cm, clist))
            rest.append((merged_mask, merged_cons))
            comps = rest
        total_value = pure.bit_count()
        total_mask = pure
        if len(comps) == 1:
            value, mask = self._branch(active, cons)
            if value < 0:
                return -1, 0
            return total_value + value, total_mask | mask
        for cm, clist in comps:
            clist.sort(key=lambda t: t[0])
            value, mask = self.solve(cm, clist)
            if value < 0:
                return -1, 0
            total_value += value
            total_mask |= mask
        return total_value, total_mask

    def _branch(self, free: int, cons: list[tuple[int, int]]) -> tuple[int, int]:
        """Enumerate children of the lexicographically minimal violated copy."""
        best_mask = _greedy_completion(free, cons)
        best = best_mask.bit_count()
        head = cons[0][1]
        fs = []
        b = head
        while b:
            low = b & -b
            fs.append(low)
            b &= ~low
        commit = 0
        for fbit in fs:
            child_free = free & ~commit & ~fbit
            child_cons: list[tuple[int, int]] = []
            feasible = True
            for cid, c in cons:
                if c & fbit:
                    continue
                c &= ~commit
                if c == 0:
                    feasible = False
                    break
                child_cons.append((cid, c))
            if feasible:
                ub = commit.bit_count() + child_free.bit_count() - _packing(child_cons)
                if ub > best:
                    value, mask = self.solve(child_free, child_cons)
                    if value >= 0:
                        total = value + commit.bit_count()
                        if total > best:
                            best = total
                            best_mask = mask | commit
            commit |= fbit
        return best, best_mask


def _pattern_kind(p: Pattern) -> tuple[str, int] | None:
    """Recognize p as a crossing path or matching; returns (kind, k) or None."""
    r = p.r
    if r >= 2 and p.m >= r:
        k = p.m - r + 1
        if crossing_path_pattern(r, k, p.order) == p:
            return "path", k
    if r >= 2 and p.m % r == 0:
        k = p.m // r
        if k >= 1 and crossing_matching_pattern(r, k, p.order) == p:
            return "matching", k
    return None


def _construction_seed(
    n: int, r: int, order: OrderKind, p: Pattern
) -> Optional[Hypergraph]:
    """Largest engine-verified pattern-free construction, if the pattern is known."""
    kind = _pattern_kind(p)
    if kind is None:
        return None
    family, k = kind
    candidates: list[Hypergraph] = []

    def add(builder):
        try:
            candidates.append(builder())
        except ParamOutOfRange:
            pass

    if family == "path":
        if k <= r + 1:
            add(lambda: gen_consecutive(n, r, k, order=order))
        if order is not LINEAR and 2 <= k <= r:
            add(lambda: gen_modular_slice(n, r, k)[0])
            if k == r and r >= 3:
                add(lambda: gen_interior_consecutive(n, r))
        if k >= 3:
            add(lambda: gen_star(n, r, order=order))
        if k >= r + 2:
            add(lambda: gen_pow2_gap(n, r, order=order))
    else:
        add(lambda: gen_consecutive(n, r, r + 1, order=order))
        add(lambda: gen_star(n, r, order=order))
        if k >= 3:
            add(lambda: with_order(gen_matching_lower(n, r, k), order))
    best: Optional[Hypergraph] = None
    for cand in candidates:
        cand = with_order(cand, order)
        if best is not None and cand.edge_count <= best.edge_count:
            continue
        if is_free(cand, p):
            best = cand
    return best


def _result_from_masks(
    inst: ConflictInstance, value: int, mask: int, nodes: int, status: str
) -> SolveResult:
    edges = tuple(inst.ground[i] for i in range(len(inst.ground)) if mask >> i & 1)
    witness = Hypergraph(n=inst.n, r=inst.r, order=inst.order, edges=edges)
    assert len(edges) == value
    return SolveResult(optimum=value, witness=witness, nodes=nodes, status=status)


def _solve_instance(
    inst: ConflictInstance,
    p: Pattern,
    max_nodes: Optional[int],
    max_seconds: Optional[float],
    seed: Optional[Hypergraph],
) -> SolveResult:
    g = len(inst.ground)
    all_mask = (1 << g) - 1
    copy_list = [(i, _copy_mask(c)) for i, c in enumerate(inst.copies)]
    seed_value, seed_mask = -1, 0
    if seed is not None:
        index = {e: i for i, e in enumerate(inst.ground)}
        if all(e in index for e in seed.edges):
            seed_value = seed.edge_count
            for e in seed.edges:
                seed_mask |= 1 << index[e]
    baseline = _greedy_completion(all_mask, copy_list)
    if baseline.bit_count() > seed_value:
        seed_value, seed_mask = baseline.bit_count(), baseline
    deadline = time.monotonic() + max_seconds if max_seconds is not None else None
    engine = _Engine(copy_list, max_nodes=max_nodes, deadline=deadline)
    try:
        value, mask = engine.solve(all_mask, copy_list)
        status = "proven"
    except _BudgetExhausted:
        return _result_from_masks(
            inst, seed_value, seed_mask, engine.nodes, status="timeout"
        )
    # prefer the seed witness when it already achieves the optimum: it was found first
    if value == seed_value:
        mask = seed_mask
    result = _result_from_masks(inst, value, mask, engine.nodes, status)
    if not verify_witness(result.witness, p):
        raise AssertionError("internal error: solver witness contains the pattern")
    return result


def _copy_mask(copy: tuple[int, ...]) -> int:
    mask = 0
    for i in copy:
        mask |= 1 << i
    return mask


def solve_exact(
    n: int,
    r: int,
    order: OrderKind,
    p: Pattern,
    max_nodes: Optional[int] = None,
    max_seconds: Optional[float] = None,
    parallel: bool = False,
) -> SolveResult:
    """Maximum number of edges of an n-vertex host (given order) containing no copy of p."""
    if p.order != order:
        raise OrderKindMismatch(f"pattern is {p.order}, requested host is {order}")
    if p.r != r:
        raise ArityMismatch(f"pattern has r={p.r}, requested host has r={r}")
    if p.m > n:
        raise PatternTooLarge(f"pattern has m={p.m} > n={n} vertices")
    inst = build_conflicts(n, r, order, p)
    seed = _construction_seed(n, r, order, p)
    if parallel:
        return _solve_parallel(inst, p, max_nodes, max_seconds, seed)
    return _solve_instance(inst, p, max_nodes, max_seconds, seed)


def solve_interval(
    sizes: Sequence[int],
    p: Pattern,
    max_nodes: Optional[int] = None,
    max_seconds: Optional[float] = None,
) -> SolveResult:
    """Like solve_exact but the host is interval-r-partite: one vertex per part."""
    if p.order is not LINEAR:
        raise OrderKindMismatch("interval hosts are linearly ordered")
    if len(sizes) != p.r:
        raise ArityMismatch(f"{len(sizes)} parts for an r={p.r} pattern")
    if any(s < 1 for s in sizes):
        raise ParamOutOfRange(f"part sizes must be positive, got {sizes}")
    n = sum(sizes)
    starts = []
    acc = 0
    for s in sizes:
        starts.append(acc)
        acc += s
    parts = [range(b, b + s) for b, s in zip(starts, sizes)]
    ground_list: list[Edge] = []
    _cross_product(parts, (), ground_list)
    ground = tuple(sorted(ground_list))
    if len(ground) > MAX_GROUND:
        raise OutOfMemory(f"transversal ground of {len(ground)} r-sets exceeds guard")
    if p.m > n:
        # pattern cannot embed at all: every transversal family is feasible
        inst = ConflictInstance(n=n, r=p.r, order=LINEAR, ground=ground, copies=())
    else:
        inst = _conflicts_over(n, p.r, LINEAR, ground, p)
    return _solve_instance(inst, p, max_nodes, max_seconds, seed=None)


def _cross_product(parts, prefix, out):
    if not parts:
        out.append(prefix)
        return
    for v in parts[0]:
        _cross_product(parts[1:], prefix + (v,), out)


def verify_witness(w: Hypergraph, p: Pattern) -> bool:
    """Certify a solver witness: true iff the witness is pattern-free."""
    return is_free(w, p)


# ---------------------------------------------------------------------------
# parallel mode: root branches distributed over processes

def _worker_solve(args):
    copy_list, free, cons, max_nodes, deadline_delta = args
    deadline = time.monotonic() + deadline_delta if deadline_delta is not None else None
    engine = _Engine(copy_list, max_nodes=max_nodes, deadline=deadline)
    try:
        value, mask = engine.solve(free, cons)
        return value, mask, engine.nodes, True
    except _BudgetExhausted:
        return -1, 0, engine.nodes, False


def _solve_parallel(
    inst: ConflictInstance,
    p: Pattern,
    max_nodes: Optional[int],
    max_seconds: Optional[float],
    seed: Optional[Hypergraph],
) -> SolveResult:
    from concurrent.futures import ProcessPoolExecutor

    g = len(inst.ground)
    all_mask = (1 << g) - 1
    copy_list = [(i, _copy_mask(c)) for i, c in enumerate(inst.copies)]
    if not copy_list:
        return _solve_instance(inst, p, max_nodes, max_seconds, seed)
    head = copy_list[0][1]
    tasks = []
    commit = 0
    fs = []
    b = head
    while b:
        low = b & -b
        fs.append(low)
        b &= ~low
    for fbit in fs:
        child_free = all_mask & ~commit & ~fbit
        child_cons = []
        feasible = True
        for cid, c in copy_list:
            if c & fbit:
                continue
            c &= ~commit
            if c == 0:
                feasible = False
                break
            child_cons.append((cid, c))
        if feasible:
            tasks.append((commit, child_free, child_cons))
        commit |= fbit
    workers = max(1, int(os.environ.get("OGHX_THREADS", "0")) or (os.cpu_count() or 1))
    best_value, best_mask = -1, 0
    total_nodes = 1
    ok = True
    with ProcessPoolExecutor(max_workers=min(workers, len(tasks) or 1)) as pool:
        results = pool.map(
            _worker_solve,
            [(copy_list, free, cons, max_nodes, max_seconds) for _, free, cons in tasks],
        )
        for (commit, _, _), (value, mask, nodes, proven) in zip(tasks, results):
            total_nodes += nodes
            if not proven:
                ok = False
                continue
            if value >= 0 and value + commit.bit_count() > best_value:
                best_value = value + commit.bit_count()
                best_mask = mask | commit
    seed_value, seed_mask = -1, 0
    if seed is not None:
        index = {e: i for i, e in enumerate(inst.ground)}
        seed_value = seed.edge_count
        for e in seed.edges:
            seed_mask |= 1 << index[e]
    if seed_value > best_value:
        best_value, best_mask = seed_value, seed_mask
    if not ok:
        return _result_from_masks(inst, best_value, best_mask, total_nodes, "timeout")
    result = _result_from_masks(inst, best_value, best_mask, total_nodes, "proven")
    if not verify_witness(result.witness, p):
        raise AssertionError("internal error: solver witness contains the pattern")
    return result
