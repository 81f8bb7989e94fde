"""Tests for window partitioning, target allocation, and composition."""

import random

import pytest

from convexmatch import (
    Coloring,
    achievable_range,
    allocate,
    compose,
    crossing_number,
    window_partition,
)
from convexmatch.errors import TooSmall, Unachievable


def test_window_partition_frozen():
    plan = window_partition(Coloring("R" * 8 + "B" * 8))
    assert plan.windows == (tuple(range(1, 15)),)
    assert plan.remainder == (0, 15)
    assert plan.ell == 1


def test_window_partition_rejects_small():
    with pytest.raises(TooSmall):
        window_partition(Coloring("RB" * 6))


def test_window_partition_structure():
    rng = random.Random(11)
    for _ in range(40):
        n = rng.randint(7, 40)
        colors = ["R"] * n + ["B"] * n
        rng.shuffle(colors)
        col = Coloring("".join(colors))
        plan = window_partition(col)
        assert len(plan.windows) == n // 7
        seen = set()
        for window in plan.windows:
            assert len(window) == 14
            assert sum(1 for p in window if colors[p] == "R") == 7
            assert not seen & set(window)
            seen |= set(window)
        assert seen | set(plan.remainder) == set(range(col.size))
        assert len(plan.remainder) == col.size - 14 * (n // 7)


def test_achievable_range():
    r = achievable_range(Coloring("RB" * 7))
    assert r.ell == 1
    assert r.max_k == 15
    assert 0 in r and 3 in r and 15 in r
    assert 1 not in r and 2 not in r and 16 not in r
    assert r.to_set() == {0} | set(range(3, 16))
    assert achievable_range(Coloring("RB" * 40)).ell == 5


def test_allocate_frozen():
    assert allocate(16, 2) == (13, 3)
    assert allocate(17, 2) == (14, 3)
    assert allocate(0, 3) == (0, 0, 0)
    assert allocate(45, 3) == (15, 15, 15)
    assert allocate(18, 2) == (15, 3)
    assert allocate(7, 1) == (7,)
    assert allocate(29, 2) == (15, 14)


def test_allocate_covers_every_k():
    for ell in range(1, 6):
        for k in [0] + list(range(3, 15 * ell + 1)):
            targets = allocate(k, ell)
            assert len(targets) == ell
            assert sum(targets) == k
            for t in targets:
                assert t == 0 or 3 <= t <= 15


def test_allocate_rejects_impossible():
    for k, ell in ((1, 1), (2, 3), (-1, 2), (16, 1), (31, 2)):
        with pytest.raises(Unachievable):
            allocate(k, ell)


def test_compose_hits_exact_counts():
    col = Coloring("RB" * 7)
    for k in (0, 3, 9, 15):
        matching, plan = compose(col, k)
        assert crossing_number(col, matching) == k
        assert sum(plan.targets) == k
    with pytest.raises(Unachievable):
        compose(col, 2)


def test_compose_random_colorings():
    rng = random.Random(23)
    for _ in range(15):
        n = rng.randint(7, 24)
        colors = ["R"] * n + ["B"] * n
        rng.shuffle(colors)
        col = Coloring("".join(colors))
        top = 15 * (n // 7)
        for k in {0, 3, top, rng.randint(3, top)}:
            matching, plan = compose(col, k)
            assert crossing_number(col, matching) == k
            assert len(plan.targets) == len(plan.windows)
