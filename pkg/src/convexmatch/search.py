"""Exhaustive exploration of matchings and colorings at desk scale.

A perfect matching of a coloring assigns each red point a blue point, so
the n! assignments can be enumerated by depth-first search: red points
are processed in clockwise order, and each tries the unused blue points
in clockwise order.  That fixed order makes every reported witness
deterministic.  Crossing counts are maintained incrementally through a
precomputed crossing-mask table (one machine-word bitmask per candidate
edge), and subtrees are cut with an interval bound: a partial assignment
with d edges, c crossings so far, and r = n - d reds left can finish
anywhere in [c, c + C(r,2) + r*d] and nowhere else.

``minmax_sweep`` closes the loop with the closed-form bound: it computes
the minimum over all colorings (one canonical representative per
symmetry orbit) of the maximum crossing number and insists the two
routes agree, raising a falsification alarm otherwise.

Default size limits keep accidental combinatorial explosions out of
interactive use; raise them through ``SearchBudget`` or the environment
variables ``CONVEXMATCH_MAX_N`` and ``CONVEXMATCH_SWEEP_MAX_N``.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from multiprocessing import Pool

from .construct import balanced_fourblock_bound
from .core import (
    BLUE,
    RED,
    Coloring,
    Matching,
    edges_cross,
    is_canonical,
)
from .errors import BudgetExceeded, OutOfRange, SizeLimitExceeded, SweepMismatch

DEFAULT_SEARCH_LIMIT = 10
DEFAULT_SWEEP_LIMIT = 8


@dataclass(frozen=True)
class SearchBudget:
    """Resource knobs for searches.

    ``max_nodes`` caps visited assignment nodes (None = unlimited),
    ``jobs`` is the worker count for sweeps, and ``max_n`` overrides the
    default instance-size limit.
    """

    max_nodes: int | None = None
    jobs: int = 1
    max_n: int | None = None


def _search_limit(budget: SearchBudget | None) -> int:
    if budget is not None and budget.max_n is not None:
        return budget.max_n
    return int(os.environ.get("CONVEXMATCH_MAX_N", DEFAULT_SEARCH_LIMIT))


def _sweep_limit(budget: SearchBudget | None) -> int:
    if budget is not None and budget.max_n is not None:
        return budget.max_n
    return int(os.environ.get("CONVEXMATCH_SWEEP_MAX_N", DEFAULT_SWEEP_LIMIT))


def _check_size(coloring: Coloring, budget: SearchBudget | None):
    limit = _search_limit(budget)
    if coloring.n > limit:
        raise SizeLimitExceeded(
            f"n={coloring.n} exceeds search limit {limit}; raise it via "
            "SearchBudget(max_n=...) or CONVEXMATCH_MAX_N"
        )


@dataclass(frozen=True)
class Spectrum:
    """Achievable crossing numbers of a coloring, with one witness each."""

    n: int
    achievable: tuple[int, ...]
    witnesses: dict[int, Matching] = field(compare=False)
    complete: bool = True

    @property
    def missing(self) -> tuple[int, ...]:
        present = set(self.achievable)
        return tuple(
            k for k in range(comb(self.n, 2) + 1) if k not in present
        )


class _Tables:
    """Candidate edges of a coloring and their pairwise crossing masks."""

    def __init__(self, coloring: Coloring):
        self.size = coloring.size
        self.reds = coloring.positions_of(RED)
        self.blues = coloring.positions_of(BLUE)
        n = len(self.reds)
        self.n = n
        self.edges = [
            (r, b) for r in self.reds for b in self.blues
        ]
        count = len(self.edges)
        self.masks = [0] * count
        for x, y in combinations(range(count), 2):
            a = self.edges[x]
            b = self.edges[y]
            if {a[0], a[1]} & {b[0], b[1]}:
                continue
            if edges_cross(a, b, self.size):
                self.masks[x] |= 1 << y
                self.masks[y] |= 1 << x
        # most crossings any completion can still add, by depth
        self.room = [
            comb(n - d, 2) + (n - d) * d for d in range(n + 1)
        ]

    def edge_id(self, red_index: int, blue_index: int) -> int:
        return red_index * self.n + blue_index

    def matching(self, blue_of_red: list[int]) -> Matching:
        return Matching.from_pairs(
            (self.reds[i], self.blues[j]) for i, j in enumerate(blue_of_red)
        )


class _NodeBudget:
    def __init__(self, max_nodes: int | None):
        self.left = max_nodes

    def spend(self) -> bool:
        if self.left is None:
            return True
        if self.left == 0:
            return False
        self.left -= 1
        return True


def spectrum(coloring: Coloring, budget: SearchBudget | None = None) -> Spectrum:
    """Every achievable crossing number, with a first-found witness each.

    A subtree is pruned when no still-unseen value fits in its completion
    interval, which cannot discard an unseen value.  Exhausting the node
    budget raises with the incomplete spectrum attached.
    """
    _check_size(coloring, budget)
    tables = _Tables(coloring)
    n = tables.n
    nodes = _NodeBudget(budget.max_nodes if budget else None)
    top = comb(n, 2)
    unseen = (1 << (top + 1)) - 1
    witnesses: dict[int, Matching] = {}
    assigned: list[int] = []

    def dive(depth: int, used: int, chosen: int, current: int):
        nonlocal unseen
        if not nodes.spend():
            raise _OutOfNodes
        if depth == n:
            bit = 1 << current
            if unseen & bit:
                unseen &= ~bit
                witnesses[current] = tables.matching(assigned)
            return
        room = tables.room[depth]
        window = ((1 << (room + 1)) - 1) << current
        if not unseen & window:
            return
        base = depth * n
        for j in range(n):
            jbit = 1 << j
            if used & jbit:
                continue
            e = base + j
            delta = (tables.masks[e] & chosen).bit_count()
            assigned.append(j)
            dive(depth + 1, used | jbit, chosen | (1 << e), current + delta)
            assigned.pop()

    try:
        dive(0, 0, 0, 0)
    except _OutOfNodes:
        partial = Spectrum(
            n,
            tuple(k for k in range(top + 1) if not unseen & (1 << k)),
            witnesses,
            complete=False,
        )
        raise BudgetExceeded("node budget exhausted", partial=partial)
    achievable = tuple(k for k in range(top + 1) if not unseen & (1 << k))
    return Spectrum(n, achievable, witnesses)


class _OutOfNodes(Exception):
    pass


def _max_search(
    tables: _Tables, cap: int | None, nodes: _NodeBudget
) -> tuple[int, list[int]] | None:
    """Exact maximum via branch and bound, or None once it exceeds ``cap``.

    The bound prunes subtrees that cannot beat the incumbent; with a cap,
    the search aborts as soon as any matching surpasses it, which is all
    a min-over-orbits caller needs to discard the orbit.
    """
    n = tables.n
    best = -1
    best_assigned: list[int] = []
    assigned: list[int] = []

    def dive(depth: int, used: int, chosen: int, current: int):
        nonlocal best, best_assigned
        if not nodes.spend():
            raise _OutOfNodes
        if depth == n:
            if current > best:
                best = current
                best_assigned = assigned.copy()
                if cap is not None and best > cap:
                    raise _CapHit
            return
        if current + tables.room[depth] <= best:
            return
        base = depth * n
        for j in range(n):
            jbit = 1 << j
            if used & jbit:
                continue
            e = base + j
            delta = (tables.masks[e] & chosen).bit_count()
            assigned.append(j)
            dive(depth + 1, used | jbit, chosen | (1 << e), current + delta)
            assigned.pop()

    try:
        dive(0, 0, 0, 0)
    except _CapHit:
        return None
    return best, best_assigned


class _CapHit(Exception):
    pass


def max_crossing(
    coloring: Coloring, budget: SearchBudget | None = None
) -> tuple[int, Matching]:
    """Exhaustive maximum crossing number and its first witness."""
    _check_size(coloring, budget)
    tables = _Tables(coloring)
    nodes = _NodeBudget(budget.max_nodes if budget else None)
    try:
        result = _max_search(tables, None, nodes)
    except _OutOfNodes:
        raise BudgetExceeded("node budget exhausted")
    assert result is not None
    value, assigned = result
    return value, tables.matching(assigned)


def find_with_k(
    coloring: Coloring, k: int, budget: SearchBudget | None = None
) -> Matching | None:
    """First matching with exactly k crossings, or None if none exists.

    None is a verified answer: the pruned search is exhaustive, so it
    proves no matching of the coloring has exactly k crossings.
    """
    _check_size(coloring, budget)
    if k < 0:
        return None
    tables = _Tables(coloring)
    n = tables.n
    nodes = _NodeBudget(budget.max_nodes if budget else None)
    assigned: list[int] = []
    found: list[int] | None = None

    def dive(depth: int, used: int, chosen: int, current: int) -> bool:
        nonlocal found
        if not nodes.spend():
            raise _OutOfNodes
        if depth == n:
            if current == k:
                found = assigned.copy()
                return True
            return False
        if current > k or current + tables.room[depth] < k:
            return False
        base = depth * n
        for j in range(n):
            jbit = 1 << j
            if used & jbit:
                continue
            e = base + j
            delta = (tables.masks[e] & chosen).bit_count()
            assigned.append(j)
            hit = dive(depth + 1, used | jbit, chosen | (1 << e),
                       current + delta)
            assigned.pop()
            if hit:
                return True
        return False

    try:
        hit = dive(0, 0, 0, 0)
    except _OutOfNodes:
        raise BudgetExceeded("node budget exhausted")
    if not hit:
        return None
    assert found is not None
    return tables.matching(found)


def enumerate_colorings(n: int) -> list[Coloring]:
    """One canonical representative per symmetry orbit, sorted.

    Filters all C(2n, n) balanced color strings down to those equal to
    their own canonical form; the list length is the orbit count.
    """
    if n < 1:
        raise OutOfRange(f"need n >= 1, got {n}")
    size = 2 * n
    reps = []
    for red_positions in combinations(range(size), n):
        chars = [BLUE] * size
        for p in red_positions:
            chars[p] = RED
        colors = "".join(chars)
        if is_canonical(colors):
            reps.append(colors)
    reps.sort()
    return [Coloring(c) for c in reps]


def _orbit_max_capped(colors: str, cap: int) -> int | None:
    """Exact maximum of one coloring if it is at most ``cap``, else None."""
    result = _max_search(_Tables(Coloring(colors)), cap, _NodeBudget(None))
    if result is None:
        return None
    return result[0]


def _sweep_job(args: tuple[str, int]) -> tuple[str, int | None]:
    colors, cap = args
    return colors, _orbit_max_capped(colors, cap)


def minmax_sweep(
    n: int, budget: SearchBudget | None = None
) -> tuple[int, list[Coloring]]:
    """Minimum over all orbits of the maximum crossing number.

    Returns the value and every canonical coloring attaining it, and
    cross-checks the value against ``balanced_fourblock_bound``; any
    disagreement raises a falsification alarm.  Orbits are searched with
    a cap: once a matching beats the running threshold the orbit cannot
    attain the minimum and is dropped, which never affects the result.
    With ``budget.jobs > 1`` orbits are sharded across processes (the cap
    is then the closed-form value itself, keeping results identical).
    """
    limit = _sweep_limit(budget)
    if n > limit:
        raise SizeLimitExceeded(
            f"n={n} exceeds sweep limit {limit}; raise it via "
            "SearchBudget(max_n=...) or CONVEXMATCH_SWEEP_MAX_N"
        )
    bound = balanced_fourblock_bound(n).value
    reps = enumerate_colorings(n)
    jobs = budget.jobs if budget else 1
    results: list[tuple[str, int | None]] = []
    if jobs > 1:
        with Pool(jobs) as pool:
            chunk = max(1, len(reps) // (4 * jobs))
            results = pool.map(
                _sweep_job, [(c.colors, bound) for c in reps], chunk
            )
    else:
        running = bound
        for rep in reps:
            value = _orbit_max_capped(rep.colors, min(bound, running))
            results.append((rep.colors, value))
            if value is not None and value < running:
                running = value

    exact = [(c, v) for c, v in results if v is not None]
    if not exact:
        raise SweepMismatch(
            f"every orbit at n={n} exceeds the closed-form value {bound}"
        )
    low = min(v for _, v in exact)
    minimizers = [Coloring(c) for c, v in exact if v == low]
    if low != bound:
        raise SweepMismatch(
            f"sweep minimum {low} at n={n} contradicts closed form {bound} "
            f"(minimizers: {[m.colors for m in minimizers]})"
        )
    return low, minimizers
