"""Colorings, matchings, and crossing counts on convex point sets.

Everything in this package lives on 2n points in convex position, labeled
0..2n-1 clockwise and colored with n red and n blue.  For straight-line
segments between points in convex position, whether two segments cross
depends only on the cyclic order of their four endpoints: they cross
exactly when the endpoint pairs interleave.  All geometry therefore
reduces to arithmetic mod 2n, and every quantity here is an exact integer.

A coloring is the cyclic color sequence; a matching is a perfect matching
of red points to blue points by straight segments.  Two colorings that
differ by rotation, reflection, or swapping the color classes behave
identically, so colorings are compared through a canonical form that is
minimal over that symmetry group.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import (
    InvalidMatching,
    OutOfRange,
    ParseError,
    SharedEndpoint,
    UnbalancedColors,
)

RED = "R"
BLUE = "B"

# Canonical forms are lexicographic minima, so the color order is fixed
# once and for all: BLUE sorts before RED.
_SWAP = str.maketrans(RED + BLUE, BLUE + RED)


def opposite(color: str) -> str:
    return BLUE if color == RED else RED


@dataclass(frozen=True)
class Coloring:
    """Cyclic two-coloring of 2n convex-position points, n of each color."""

    colors: str

    def __post_init__(self):
        normalized = self.colors.upper()
        if normalized != self.colors:
            object.__setattr__(self, "colors", normalized)
        if not self.colors:
            raise ParseError("empty coloring")
        bad = set(self.colors) - {RED, BLUE}
        if bad:
            raise ParseError(f"invalid color characters: {sorted(bad)!r}")
        reds = self.colors.count(RED)
        if reds * 2 != len(self.colors):
            raise UnbalancedColors(
                f"{reds} red vs {len(self.colors) - reds} blue points"
            )

    @property
    def size(self) -> int:
        return len(self.colors)

    @property
    def n(self) -> int:
        return len(self.colors) // 2

    def color(self, position: int) -> str:
        return self.colors[position % self.size]

    def positions_of(self, color: str) -> tuple[int, ...]:
        return tuple(i for i, c in enumerate(self.colors) if c == color)

    def __str__(self) -> str:
        return self.colors


def edge(a: int, b: int) -> tuple[int, int]:
    """Normalized edge: endpoint pair with the smaller position first."""
    if a == b:
        raise SharedEndpoint(f"degenerate edge at position {a}")
    return (a, b) if a < b else (b, a)


@dataclass(frozen=True)
class Matching:
    """Set of pairwise disjoint edges on positions 0..2n-1."""

    edges: frozenset[tuple[int, int]]

    @classmethod
    def from_pairs(cls, pairs) -> "Matching":
        return cls(frozenset(edge(a, b) for a, b in pairs))

    @property
    def sorted_edges(self) -> tuple[tuple[int, int], ...]:
        return tuple(sorted(self.edges))

    def __len__(self) -> int:
        return len(self.edges)

    def __iter__(self):
        return iter(self.sorted_edges)

    def __contains__(self, pair) -> bool:
        return edge(*pair) in self.edges


def _strictly_inside(p: int, a: int, b: int, size: int) -> bool:
    # open clockwise arc from a to b
    return 0 < (p - a) % size < (b - a) % size


def edges_cross(e1: tuple[int, int], e2: tuple[int, int], size: int) -> bool:
    """Whether two segments on the convex cycle of ``size`` points cross.

    They cross exactly when the endpoints interleave, i.e. exactly one
    endpoint of ``e2`` lies on the open clockwise arc between the
    endpoints of ``e1``.  Sharing an endpoint is an error, not a crossing.
    """
    a, b = e1
    c, d = e2
    for p in (a, b, c, d):
        if not 0 <= p < size:
            raise OutOfRange(f"position {p} outside 0..{size - 1}")
    if a == b or c == d:
        raise SharedEndpoint("edge with two equal endpoints")
    if {a, b} & {c, d}:
        raise SharedEndpoint(f"edges {e1} and {e2} share an endpoint")
    return _strictly_inside(c, a, b, size) != _strictly_inside(d, a, b, size)


def _crossing_count(edges_seq, size: int) -> int:
    """Crossing count of pairwise disjoint edges, no validation."""
    return sum(
        edges_cross(e, f, size) for e, f in combinations(edges_seq, 2)
    )


def validate(coloring: Coloring, matching: Matching) -> list[str]:
    """All reasons the matching is not a perfect bichromatic matching."""
    problems = []
    size = coloring.size
    if len(matching.edges) != coloring.n:
        problems.append(
            f"expected {coloring.n} edges, got {len(matching.edges)}"
        )
    seen: set[int] = set()
    for a, b in matching.sorted_edges:
        for p in (a, b):
            if not 0 <= p < size:
                problems.append(f"position {p} outside 0..{size - 1}")
            elif p in seen:
                problems.append(f"position {p} used twice")
            else:
                seen.add(p)
        if 0 <= a < size and 0 <= b < size:
            if coloring.colors[a] == coloring.colors[b]:
                problems.append(f"monochromatic edge {a}-{b}")
    return problems


def crossing_number(coloring: Coloring, matching: Matching) -> int:
    """Number of crossing edge pairs of a valid perfect matching."""
    problems = validate(coloring, matching)
    if problems:
        raise InvalidMatching("; ".join(problems))
    return _crossing_count(matching.sorted_edges, coloring.size)


@dataclass(frozen=True)
class Symmetry:
    """Element of the symmetry group: dihedral relabeling plus color swap.

    Acts on positions by i -> rotation + i (or rotation - i when
    reflected), mod the cycle size, and optionally swaps the two colors.
    """

    rotation: int
    reflected: bool
    swapped: bool

    def position(self, i: int, size: int) -> int:
        if self.reflected:
            return (self.rotation - i) % size
        return (self.rotation + i) % size

    def apply(self, coloring: Coloring) -> Coloring:
        size = coloring.size
        out = [""] * size
        src = coloring.colors.translate(_SWAP) if self.swapped else coloring.colors
        for i in range(size):
            out[self.position(i, size)] = src[i]
        return Coloring("".join(out))

    def apply_to_matching(self, matching: Matching, size: int) -> Matching:
        return Matching.from_pairs(
            (self.position(a, size), self.position(b, size))
            for a, b in matching.edges
        )

    def inverse(self, size: int) -> "Symmetry":
        # a reflection is its own positional inverse
        if self.reflected:
            return self
        return Symmetry((-self.rotation) % size, False, self.swapped)


IDENTITY = Symmetry(0, False, False)


def all_symmetries(size: int):
    """The 8n symmetries, in the fixed scan order used for tie-breaking."""
    for swapped in (False, True):
        for reflected in (False, True):
            for rotation in range(size):
                yield Symmetry(rotation, reflected, swapped)


def canonicalize(coloring: Coloring) -> tuple[Coloring, Symmetry]:
    """Lexicographically smallest image of the coloring under the group.

    Returns the canonical coloring together with a symmetry mapping the
    input onto it (the first such symmetry in scan order).  The canonical
    form is constant on orbits and idempotent.
    """
    size = coloring.size
    best: str | None = None
    best_sym = IDENTITY
    for sym in all_symmetries(size):
        candidate = sym.apply(coloring).colors
        if best is None or candidate < best:
            best = candidate
            best_sym = sym
    assert best is not None
    return Coloring(best), best_sym


def is_canonical(colors: str) -> bool:
    """Fast test that a color string equals its own canonical form."""
    size = len(colors)
    swapped = colors.translate(_SWAP)
    for base in (colors, colors[::-1], swapped, swapped[::-1]):
        doubled = base + base
        for r in range(size):
            if doubled[r:r + size] < colors:
                return False
    return True


@dataclass(frozen=True)
class AntipodalProfile:
    """Classification of the n antipodal pairs (i, i+n) of a coloring.

    A pair is monochromatic when both points share a color, bichromatic
    otherwise.  ``s_positions`` lists every position belonging to a
    monochromatic pair; this core set drives the witness constructions.
    """

    n: int
    mono: tuple[bool, ...]
    s_positions: tuple[int, ...]

    def is_mono(self, position: int) -> bool:
        return self.mono[position % self.n]


def antipodal_profile(coloring: Coloring) -> AntipodalProfile:
    n = coloring.n
    mono = tuple(
        coloring.colors[i] == coloring.colors[i + n] for i in range(n)
    )
    s_positions = tuple(
        p for p in range(2 * n) if mono[p % n]
    )
    return AntipodalProfile(n, mono, s_positions)


@dataclass(frozen=True)
class BlockProfile:
    """Run-length view of a coloring: maximal single-color arcs.

    ``start`` is the first position at or after 0 that begins a run, so
    the runs tile the cycle starting there.  ``s`` is half the number of
    runs, i.e. the number of red runs.
    """

    size: int
    start: int
    runs: tuple[tuple[str, int], ...]

    @property
    def s(self) -> int:
        return len(self.runs) // 2

    def block_positions(self) -> tuple[tuple[int, ...], ...]:
        """Positions of each run, clockwise, in run order."""
        out = []
        at = self.start
        for _, length in self.runs:
            out.append(tuple((at + i) % self.size for i in range(length)))
            at += length
        return tuple(out)

    def to_coloring(self) -> Coloring:
        """The unique coloring with these runs at these positions."""
        out = [""] * self.size
        at = self.start
        for color, length in self.runs:
            for i in range(length):
                out[(at + i) % self.size] = color
            at += length
        return Coloring("".join(out))


def block_profile(coloring: Coloring) -> BlockProfile:
    size = coloring.size
    colors = coloring.colors
    start = 0
    while start < size and colors[start] == colors[start - 1]:
        start += 1
    if start == size:
        # single-color cycle; unreachable for a balanced coloring
        raise UnbalancedColors("coloring has a single run")
    runs = []
    i = start
    while i < start + size:
        color = colors[i % size]
        length = 1
        while length < size and colors[(i + length) % size] == color:
            length += 1
        runs.append((color, length))
        i += length
    return BlockProfile(size, start, tuple(runs))
