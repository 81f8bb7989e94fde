"""Assembling a matching with any prescribed crossing number.

Every balanced coloring with n >= 7 admits, for every k in
{0} union [3, 15*floor(n/7)], a perfect matching with exactly k
crossings.  The construction cuts the point set into disjoint 14-point
windows plus a small remainder, gives each window a per-window target
from the menu {0} union [3, 15] (every 14-point coloring realizes that
whole menu), and matches the remainder without crossings.  Windows are
contiguous in the residual cyclic sequence, so edges from different
windows never cross and the total is the sum of the targets.

The existence of a balanced window at every step follows from a parity
walk: sliding a 14-point window one step changes its color surplus by
-2, 0, or +2, and the surpluses sum to zero around the cycle, so a zero
crossing exists.  Violations raise falsification alarms.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import RED, Coloring, Matching, crossing_number
from .construct import plane_matching
from .errors import (
    CrossWindowCrossing,
    NoBalancedWindow,
    TooSmall,
    Unachievable,
    WindowSpectrumGap,
)
from .search import find_with_k

WINDOW_POINTS = 14
WINDOW_MAX = 15


@dataclass(frozen=True)
class CompositionPlan:
    """Windows, their crossing targets, and the crossing-free remainder."""

    windows: tuple[tuple[int, ...], ...]
    remainder: tuple[int, ...]
    targets: tuple[int, ...] | None = None

    @property
    def ell(self) -> int:
        return len(self.windows)


@dataclass(frozen=True)
class AchievableRange:
    """The guaranteed-achievable crossing numbers {0} union [3, 15*ell]."""

    n: int
    ell: int

    @property
    def max_k(self) -> int:
        return WINDOW_MAX * self.ell

    def __contains__(self, k: int) -> bool:
        return k == 0 or 3 <= k <= self.max_k

    def to_set(self) -> set[int]:
        return {0} | set(range(3, self.max_k + 1))


def window_partition(coloring: Coloring) -> CompositionPlan:
    """Disjoint balanced 14-point windows plus a balanced remainder.

    Repeatedly scans the residual cyclic sequence, anchored at its
    smallest remaining position, and excises the first balanced window of
    14 consecutive residual points.  Stops once fewer than 14 points
    remain.
    """
    if coloring.n < 7:
        raise TooSmall(f"need n >= 7 to cut a window, got n={coloring.n}")
    colors = coloring.colors
    residual = list(range(coloring.size))
    windows = []
    while len(residual) >= WINDOW_POINTS:
        m = len(residual)
        window = None
        for t in range(m):
            picked = [residual[(t + i) % m] for i in range(WINDOW_POINTS)]
            reds = sum(1 for p in picked if colors[p] == RED)
            if 2 * reds == WINDOW_POINTS:
                window = picked
                break
        if window is None:
            raise NoBalancedWindow(
                f"residual of {m} points has no balanced window: {coloring}"
            )
        windows.append(tuple(window))
        gone = set(window)
        residual = [p for p in residual if p not in gone]
    return CompositionPlan(tuple(windows), tuple(residual))


def allocate(k: int, ell: int) -> tuple[int, ...]:
    """Split k into ell per-window targets from {0} union [3, 15].

    Larger targets come first.  Writing k = 15q + r: r = 0 uses q
    fifteens; r >= 3 appends one window of r; r in {1, 2} borrows from a
    fifteen to form 13 + 3 or 14 + 3.  Exactly k in {1, 2} (and k < 0 or
    k > 15*ell) is unachievable.
    """
    if k == 0:
        return (0,) * ell
    if k < 0 or k in (1, 2) or k > WINDOW_MAX * ell:
        raise Unachievable(
            f"k={k} outside {{0}} union [3, {WINDOW_MAX * ell}] "
            f"for {ell} windows"
        )
    q, r = divmod(k, WINDOW_MAX)
    if r == 0:
        head = [WINDOW_MAX] * q
    elif r >= 3:
        head = [WINDOW_MAX] * q + [r]
    else:
        # k = 15(q-1) + (r + 12) + 3, and k >= 16 guarantees q >= 1
        head = [WINDOW_MAX] * (q - 1) + [r + 12, 3]
    head += [0] * (ell - len(head))
    return tuple(head)


def achievable_range(coloring: Coloring) -> AchievableRange:
    """Crossing numbers guaranteed achievable for this coloring."""
    plan = window_partition(coloring)
    # the remainder keeps at most 12 points, so 7*ell >= n - 6
    assert 7 * plan.ell >= coloring.n - 6
    return AchievableRange(coloring.n, plan.ell)


def _relabeled(coloring: Coloring, positions) -> Coloring:
    return Coloring("".join(coloring.colors[p] for p in positions))


def compose(coloring: Coloring, k: int) -> tuple[Matching, CompositionPlan]:
    """Perfect matching with exactly k crossings, k in the achievable set.

    Each window is solved independently for its target (the window keeps
    the cyclic order of its points, so window-local crossing counts equal
    global ones), the remainder is matched crossing-free, and the union
    is recounted; any discrepancy raises a falsification alarm.
    """
    plan = window_partition(coloring)
    targets = allocate(k, plan.ell)
    pairs = []
    for window, target in zip(plan.windows, targets):
        sub = _relabeled(coloring, window)
        local = find_with_k(sub, target)
        if local is None:
            raise WindowSpectrumGap(
                f"window {window} of {coloring} misses target {target}"
            )
        pairs += [(window[a], window[b]) for a, b in local.sorted_edges]
    if plan.remainder:
        sub = _relabeled(coloring, plan.remainder)
        for a, b in plane_matching(sub).sorted_edges:
            pairs.append((plan.remainder[a], plan.remainder[b]))
    matching = Matching.from_pairs(pairs)
    total = crossing_number(coloring, matching)
    if total != k:
        raise CrossWindowCrossing(
            f"composed matching recounts to {total}, wanted {k}"
        )
    return matching, CompositionPlan(plan.windows, plan.remainder, targets)
