"""Constructions with prescribed crossing counts, and the closed-form bound.

The centerpiece is the minimum over all balanced colorings of the maximum
crossing number, attained by the balanced 4-block coloring.  The closed
form ``balanced_fourblock_bound`` is exact integer arithmetic split by
n mod 4; the constructions below realize the matchings behind it:

* ``plane_matching``: zero crossings, for any coloring;
* ``alternating_max_matching``: C(n,2) - n/2 crossings on the alternating
  coloring (n even), the overall maximum;
* ``fourblock_max_matching``: the exact maximum C(n,2) - h on any 4-block
  coloring, where ``h_value`` minimizes the non-crossing pair count;
* ``sixblock_witness``: a 6-block family needed when 4-block reasoning
  falls one crossing short;
* ``lemma3_witness``: for every coloring, a matching whose crossing count
  is at least ``balanced_fourblock_bound(n)``, certifying that no
  coloring can force fewer crossings than the balanced 4-block one.

Every constructed matching is recounted with the core crossing counter
before it is returned; a construction that misses its guaranteed count
raises a falsification alarm instead of returning quietly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import ceil, comb, floor

from .core import (
    BLUE,
    RED,
    BlockProfile,
    Coloring,
    Matching,
    _crossing_count,
    antipodal_profile,
    block_profile,
)
from .errors import (
    ColorMismatch,
    EmptyAntipodalCore,
    NoBalancedCuts,
    NotFourBlock,
    OddN,
    OutOfRange,
    SizeMismatch,
    WitnessBelowBound,
)


def plane_matching(coloring: Coloring) -> Matching:
    """Crossing-free perfect matching, built by one clockwise stack pass.

    Unmatched positions are stacked; the stack is always monochromatic,
    so any arriving point of the other color pops and matches the top.
    Balance guarantees the stack drains by the end of the pass, and the
    nesting discipline makes the result crossing-free.
    """
    stack: list[int] = []
    pairs = []
    colors = coloring.colors
    for p in range(coloring.size):
        if stack and colors[stack[-1]] != colors[p]:
            pairs.append((stack.pop(), p))
        else:
            stack.append(p)
    assert not stack, "balanced coloring left unmatched points"
    return Matching.from_pairs(pairs)


def alternating_coloring(n: int) -> Coloring:
    """The coloring whose colors alternate at every step."""
    if n < 1:
        raise OutOfRange("need at least one pair")
    return Coloring((RED + BLUE) * n)


def alternating_max_matching(n: int) -> tuple[Coloring, Matching]:
    """Matching with C(n,2) - n/2 crossings on the alternating coloring.

    Even positions are matched n+1 steps ahead, odd positions n-1 steps
    ahead.  Each edge then crosses all but one of the others, which is the
    most the alternating coloring admits, and no coloring admits more
    than C(n,2) overall.  Requires even n.
    """
    if n < 2 or n % 2:
        raise OddN(f"construction needs even n >= 2, got {n}")
    coloring = alternating_coloring(n)
    pairs = []
    for i in range(n):
        step = n + 1 if i % 2 == 0 else n - 1
        pairs.append((i, (i + step) % (2 * n)))
    return coloring, Matching.from_pairs(pairs)


def balanced_fourblock_coloring(n: int) -> Coloring:
    """Four blocks with sizes as equal as possible, small blocks first."""
    if n < 2:
        raise OutOfRange("need n >= 2 for four nonempty blocks")
    lo, hi = n // 2, n - n // 2
    return Coloring(RED * lo + BLUE * lo + RED * hi + BLUE * hi)


@dataclass(frozen=True)
class FourBlockPlan:
    """Split choice minimizing non-crossing pairs on a 4-block coloring.

    For first-block sizes r1, b1 (both at most n/2 after normalization),
    a maximum matching sends x red points of the first red block into the
    first blue block; the non-crossing pair count is then

        f(x) = (n - 2*r1 - 2*b1) * x + 2*x**2 + r1*b1.

    ``x_star`` is the rational minimizer of f, ``x`` the best integer in
    the feasible interval [max(0, r1+b1-n), min(r1, b1)], and ``h_value``
    equals f(x).  When both integer neighbors of ``x_star`` tie, the
    smaller one is chosen.
    """

    n: int
    r1: int
    b1: int
    x_star: Fraction
    x: int
    h_value: int


def h_value(n: int, r1: int, b1: int) -> FourBlockPlan:
    """Minimum non-crossing pair count over 4-block maximum matchings."""
    if n < 2:
        raise OutOfRange(f"need n >= 2, got {n}")
    for name, v in (("r1", r1), ("b1", b1)):
        if not 1 <= v <= n - 1:
            raise OutOfRange(f"{name}={v} outside 1..{n - 1}")
        if 2 * v > n:
            raise OutOfRange(
                f"{name}={v} not normalized: relabel so blocks are <= n/2"
            )

    def f(x: int) -> int:
        return (n - 2 * r1 - 2 * b1) * x + 2 * x * x + r1 * b1

    lo = max(0, r1 + b1 - n)
    hi = min(r1, b1)
    x_star = Fraction(2 * (r1 + b1) - n, 4)
    candidates = {
        min(max(floor(x_star), lo), hi),
        min(max(ceil(x_star), lo), hi),
    }
    # f is convex, so the better clamped neighbor of x_star is the integer
    # minimum over the interval; ties resolve to the smaller x.
    x = min(candidates, key=lambda c: (f(c), c))
    return FourBlockPlan(n, r1, b1, x_star, x, f(x))


def crossing_family_join(
    coloring: Coloring,
    x_arc: tuple[int, ...] | list[int],
    y_arc: tuple[int, ...] | list[int],
) -> tuple[tuple[int, int], ...]:
    """Match two disjoint arcs index-by-index, in matching orientation.

    Joining the i-th point of one arc to the i-th point of the other
    (both read in the same rotational direction) makes the resulting
    edges pairwise crossing whenever the arcs are disjoint.
    """
    if len(x_arc) != len(y_arc):
        raise SizeMismatch(f"arc sizes {len(x_arc)} vs {len(y_arc)}")
    for a, b in zip(x_arc, y_arc):
        if coloring.color(a) == coloring.color(b):
            raise ColorMismatch(f"join would pair {a} and {b}, same color")
    return tuple(zip(x_arc, y_arc))


def _fourblock_frames(profile: BlockProfile):
    """The four relabelings of a 4-block profile that start at a red run.

    Each frame lists the four blocks as position tuples in a consistent
    rotational direction (reversed tuples for the reflected frames), so
    downstream joins can speak of the first or last points of a block
    without caring about the original orientation.
    """
    blocks = profile.block_positions()
    red_idx = [i for i, (color, _) in enumerate(profile.runs) if color == RED]
    for j in red_idx:
        for direction in (1, -1):
            frame = []
            for t in range(4):
                positions = blocks[(j + t * direction) % 4]
                frame.append(positions if direction == 1 else positions[::-1])
            yield frame


def fourblock_max_matching(profile: BlockProfile) -> tuple[Matching, int]:
    """Maximum-crossing matching on a coloring with exactly four blocks.

    The construction pairs the four blocks through four index-by-index
    arc joins governed by the split ``x`` from ``h_value``; the crossing
    count is exactly C(n,2) minus the plan's minimum non-crossing count.
    """
    if len(profile.runs) != 4:
        raise NotFourBlock(f"{len(profile.runs)} runs, need exactly 4")
    coloring = profile.to_coloring()
    n = coloring.n
    frame = None
    for candidate in _fourblock_frames(profile):
        if 2 * len(candidate[0]) <= n and 2 * len(candidate[1]) <= n:
            frame = candidate
            break
    assert frame is not None, "some relabeling has both lead blocks <= n/2"
    a1, a2, a3, a4 = frame
    r1, b1, r2 = len(a1), len(a2), len(a3)
    plan = h_value(n, r1, b1)
    x = plan.x
    pairs = []
    pairs += crossing_family_join(coloring, a1[:x], a2[b1 - x:])
    pairs += crossing_family_join(coloring, a1[x:], a4[:r1 - x])
    pairs += crossing_family_join(coloring, a2[:b1 - x], a3[r2 - (b1 - x):])
    pairs += crossing_family_join(coloring, a3[:n - r1 - b1 + x], a4[r1 - x:])
    matching = Matching.from_pairs(pairs)
    count = _crossing_count(matching.sorted_edges, coloring.size)
    expected = comb(n, 2) - plan.h_value
    if count != expected:
        raise WitnessBelowBound(
            f"4-block construction counted {count}, expected {expected}"
        )
    return matching, count


@dataclass(frozen=True)
class BoundBreakdown:
    """Closed-form minimum of the maximum crossing number, by n mod 4."""

    n: int
    m: int
    residue: int
    value: int


def balanced_fourblock_bound(n: int) -> BoundBreakdown:
    """Fewest crossings any coloring can force, met by balanced 4 blocks.

    With m = n // 4 the value is one of four quadratics in m chosen by
    n mod 4; equivalently (3n^2 - 4n + t) / 8 with t in {0, 1, -4, 1}.
    """
    if n < 1:
        raise OutOfRange(f"need n >= 1, got {n}")
    m, residue = divmod(n, 4)
    value = {
        0: 6 * m * m - 2 * m,
        1: 6 * m * m + m,
        2: 6 * m * m + 4 * m,
        3: 6 * m * m + 7 * m + 2,
    }[residue]
    return BoundBreakdown(n, m, residue, value)


def _sixblock_joins(blocks, m: int, y1: int, y2: int):
    """Arc joins of the six-block construction, given the six blocks in
    frame order (alternating colors, sizes 2m+1+y1, 2m+1, y2, y1, 2m+1,
    2m+1+y2)."""
    b0, b1, b2, b3, b4, b5 = blocks
    joins = [
        (b0[:m], b1[m + 1:]),             # lead block into its neighbor
        (b0[m:m + y1], b3),               # middle of lead block across
        (b0[m + y1:], b5[:m + 1]),        # tail of lead block to far side
        (b2, b5[m + 1:m + 1 + y2]),
        (b4[:m], b5[m + 1 + y2:]),
        (b1[:m + 1], b4[m:]),
    ]
    pairs = []
    for xs, ys in joins:
        assert len(xs) == len(ys)
        pairs += list(zip(xs, ys))
    return pairs


def sixblock_sizes(m: int, y1: int, y2: int) -> tuple[int, ...]:
    return (2 * m + 1 + y1, 2 * m + 1, y2, y1, 2 * m + 1, 2 * m + 1 + y2)


def sixblock_crossing_count(m: int, y1: int, y2: int) -> int:
    """Closed-form crossing count of the six-block construction.

    Equals 6m^2 + 10m + 5 at y1 = y2 = 1 and 6m^2 + 13m + 9 at
    y1 = 1, y2 = 2.
    """
    return (
        2 * comb(m, 2)
        + 2 * comb(m + 1, 2)
        + comb(y1, 2)
        + comb(y2, 2)
        + 4 * m * m
        + 4 * m
        + 2 * y1 * (m + 1)
        + 2 * y2 * (m + 1)
        + m * y1
        + m * y2
        + y1 * y2
    )


def sixblock_witness(m: int, y1: int, y2: int) -> tuple[Coloring, Matching]:
    """Six-block coloring and matching realizing ``sixblock_crossing_count``.

    The coloring has n = 4m + 2 + y1 + y2 and block sizes
    (2m+1+y1, 2m+1, y2, y1, 2m+1, 2m+1+y2), colors alternating by block.
    """
    if m < 0:
        raise OutOfRange(f"need m >= 0, got {m}")
    if y1 < 1 or y2 < 1:
        raise OutOfRange(f"need y1, y2 >= 1, got {y1}, {y2}")
    sizes = sixblock_sizes(m, y1, y2)
    colors = "".join(
        (RED if i % 2 == 0 else BLUE) * s for i, s in enumerate(sizes)
    )
    coloring = Coloring(colors)
    blocks = []
    at = 0
    for s in sizes:
        blocks.append(tuple(range(at, at + s)))
        at += s
    matching = Matching.from_pairs(_sixblock_joins(blocks, m, y1, y2))
    count = _crossing_count(matching.sorted_edges, coloring.size)
    expected = sixblock_crossing_count(m, y1, y2)
    if count != expected:
        raise WitnessBelowBound(
            f"6-block construction counted {count}, expected {expected}"
        )
    return coloring, matching


def _sixblock_frame(profile: BlockProfile):
    """Fit a 6-run profile to the six-block pattern, if possible.

    Tries all rotations and both directions; on success returns the six
    blocks as position tuples in frame order plus (m, y1, y2).
    """
    if len(profile.runs) != 6:
        return None
    blocks = profile.block_positions()
    sizes = [len(b) for b in blocks]
    for j in range(6):
        for direction in (1, -1):
            s = [sizes[(j + t * direction) % 6] for t in range(6)]
            if s[1] != s[4] or s[1] % 2 == 0:
                continue
            m = (s[1] - 1) // 2
            y1, y2 = s[3], s[2]
            if y1 < 1 or y2 < 1:
                continue
            if s[0] != s[1] + y1 or s[5] != s[4] + y2:
                continue
            frame = []
            for t in range(6):
                positions = blocks[(j + t * direction) % 6]
                frame.append(positions if direction == 1 else positions[::-1])
            return frame, m, y1, y2
    return None


@dataclass(frozen=True)
class GroupPartition:
    """Four arcs cut by two antipodal gap pairs, color-balanced on the core.

    ``cuts`` holds gap positions c1 <= c2; a gap g sits just before
    position g, and the four arcs are [c1,c2), [c2,c1+n), and their
    antipodes (c1 = c2 leaves the first and third arcs empty).  Within
    each arc, the monochromatic-antipodal core contributes equally many
    red and blue points, and the cuts halve the core as evenly as
    possible, so consecutive arcs carry m and m (or m and m+1) core
    points of each color.  ``b_counts`` gives the (red, blue) counts of
    bichromatic-antipodal points in the first arc and in its clockwise
    predecessor (the arc antipodal to the second).
    """

    cuts: tuple[int, int]
    groups: tuple[tuple[int, ...], ...]
    b_counts: tuple[tuple[int, int], tuple[int, int]]


def group_partition(coloring: Coloring) -> GroupPartition:
    """First antipodal cut pair splitting the core into balanced quarters.

    Core pairs are antipodal and monochromatic, so every half [c, c+n)
    automatically contains exactly half the core's red points and half
    its blue points.  What the scan must find is a second cut that
    splits one such half into two arcs that are each color-balanced on
    the core and as close in core size as possible (the two arcs of a
    half get m and m, or m and m+1, core points per color).  Cut gaps
    (c1, c2) are scanned in lexicographic order, c1 in [0, n) and c2 in
    [c1, c1+n).  Existence is guaranteed whenever the core is nonempty;
    exhausting the scan raises a falsification alarm.
    """
    n = coloring.n
    size = coloring.size
    profile = antipodal_profile(coloring)
    if not profile.s_positions:
        raise EmptyAntipodalCore("every antipodal pair is bichromatic")
    in_core = set(profile.s_positions)

    # prefix balances/counts of core points before each position; both
    # scanned arcs stay inside [0, 2n), so no wraparound case
    prefix = [0] * (size + 1)
    red_prefix = [0] * (size + 1)
    for p in range(size):
        red = p in in_core and coloring.colors[p] == RED
        blue = p in in_core and coloring.colors[p] == BLUE
        prefix[p + 1] = prefix[p] + red - blue
        red_prefix[p + 1] = red_prefix[p] + red

    def core_balance(start: int, stop: int) -> int:
        return prefix[stop] - prefix[start]

    # core reds per half; the first arc must take half of them, rounded
    # either way, so group core sizes follow the m / m+1 pattern
    per_half = red_prefix[size] // 2
    want = {per_half // 2, (per_half + 1) // 2}

    for c1 in range(n):
        for c2 in range(c1, c1 + n):
            if (
                core_balance(c1, c2) == 0
                and core_balance(c2, c1 + n) == 0
                and red_prefix[c2] - red_prefix[c1] in want
            ):
                groups = tuple(
                    tuple((lo + ofs) % size for ofs in range((hi - lo) % size))
                    for lo, hi in (
                        (c1, c2),
                        (c2, c1 + n),
                        (c1 + n, c2 + n),
                        (c2 + n, c1 + 2 * n),
                    )
                )

                def b_count(arc) -> tuple[int, int]:
                    reds = sum(
                        1
                        for p in arc
                        if p not in in_core and coloring.colors[p] == RED
                    )
                    blues = sum(
                        1
                        for p in arc
                        if p not in in_core and coloring.colors[p] == BLUE
                    )
                    return reds, blues

                return GroupPartition(
                    (c1, c2), groups, (b_count(groups[0]), b_count(groups[3]))
                )
    raise NoBalancedCuts(f"no balanced antipodal cuts for {coloring}")


def _group_partition_matching(coloring: Coloring, groups):
    """Match each arc to its antipode so same-colored bundles cross."""
    rt, rb, lb, lt = groups
    colors = coloring.colors
    pairs = []
    for x_arc, y_arc in ((rt, lb), (rb, lt)):
        for color in (RED, BLUE):
            xs = [p for p in x_arc if colors[p] == color]
            ys = [p for p in y_arc if colors[p] != color]
            pairs += crossing_family_join(coloring, xs, ys)
    return pairs


def _pair_count(pairs) -> int:
    """Crossing count for disjoint chords given as unordered pairs.

    Leaner than the validating counter; the witness search calls this
    once per candidate partition.
    """
    norm = sorted((a, b) if a < b else (b, a) for a, b in pairs)
    total = 0
    for i, (a, b) in enumerate(norm):
        for c, d in norm[i + 1:]:
            if c >= b:
                break
            total += d > b
    return total


def _balanced_cut_partitions(coloring: Coloring):
    """All arc quadruples from balanced antipodal cut pairs.

    Core pairs are antipodal with matching colors, so an arc and its
    antipode have identical core composition; checking the two arcs of
    one half suffices.  Each unordered cut set {c1, c2, c1+n, c2+n} is
    produced exactly once via 0 <= c1 <= c2 < n.  Unlike
    ``group_partition`` this imposes no size constraint on the split:
    the witness search wants every shape, not just the evenly halved
    one.
    """
    n = coloring.n
    size = coloring.size
    in_core = set(antipodal_profile(coloring).s_positions)
    prefix = [0] * (size + 1)
    for p in range(size):
        step = 0
        if p in in_core:
            step = 1 if coloring.colors[p] == RED else -1
        prefix[p + 1] = prefix[p] + step
    for c1 in range(n):
        for c2 in range(c1, n):
            if prefix[c2] - prefix[c1] != 0:
                continue
            if prefix[c1 + n] - prefix[c2] != 0:
                continue
            yield tuple(
                tuple((lo + ofs) % size for ofs in range((hi - lo) % size))
                for lo, hi in (
                    (c1, c2),
                    (c2, c1 + n),
                    (c1 + n, c2 + n),
                    (c2 + n, c1 + 2 * n),
                )
            )


def lemma3_witness(coloring: Coloring) -> tuple[Matching, int]:
    """Matching certifying the coloring's maximum is at least the bound.

    Builds every applicable candidate and keeps the best:

    * empty core: match every antipodal pair, all C(n,2) pairs cross;
    * nonempty core: arc-to-antipodal-arc joins for every balanced
      antipodal cut partition, not just the one ``group_partition``
      picks -- where the cuts fall relative to the bichromatic pairs
      can swing the count by more than the slack in the bound;
    * exactly four blocks: the exact 4-block maximum construction;
    * six blocks fitting the special pattern: its dedicated witness.

    If even the best candidate counts below ``balanced_fourblock_bound``,
    a falsification alarm is raised.
    """
    n = coloring.n
    profile = antipodal_profile(coloring)
    candidates: list[tuple[tuple[int, int], ...]] = []
    if not profile.s_positions:
        candidates.append(tuple((i, i + n) for i in range(n)))
    else:
        for groups in _balanced_cut_partitions(coloring):
            candidates.append(
                tuple(_group_partition_matching(coloring, groups)))
    blocks = block_profile(coloring)
    if len(blocks.runs) == 4:
        matching, _ = fourblock_max_matching(blocks)
        candidates.append(matching.sorted_edges)
    fitted = _sixblock_frame(blocks)
    if fitted is not None:
        frame, m, y1, y2 = fitted
        candidates.append(tuple(_sixblock_joins(frame, m, y1, y2)))

    best_pairs = None
    best_count = -1
    for pairs in candidates:
        count = _pair_count(pairs)
        if count > best_count:
            best_pairs, best_count = pairs, count
    assert best_pairs is not None
    bound = balanced_fourblock_bound(n).value
    if best_count < bound:
        raise WitnessBelowBound(
            f"best witness for {coloring} has {best_count} crossings, "
            f"bound is {bound}"
        )
    return Matching.from_pairs(best_pairs), best_count
