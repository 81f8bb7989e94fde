"""Tests for the exhaustive searches and the minmax sweep."""

import pytest

import oracle
from convexmatch import (
    Coloring,
    SearchBudget,
    balanced_fourblock_bound,
    canonicalize,
    crossing_number,
    enumerate_colorings,
    find_with_k,
    max_crossing,
    minmax_sweep,
    spectrum,
)
from convexmatch.errors import (
    BudgetExceeded,
    OutOfRange,
    SizeLimitExceeded,
)


def test_spectrum_frozen_small():
    assert spectrum(Coloring("RRBB")).achievable == (0, 1)
    assert spectrum(Coloring("RBRB")).achievable == (0,)
    assert spectrum(Coloring("RBRRBB")).achievable == (0, 1, 2)


def test_spectrum_matches_oracle():
    for n in range(1, 5):
        for rep in oracle.canonical_reps(n):
            spec = spectrum(Coloring(rep))
            assert list(spec.achievable) == oracle.spectrum(rep)
            assert spec.complete


def test_spectrum_witnesses_verify():
    for rep in oracle.canonical_reps(4):
        col = Coloring(rep)
        spec = spectrum(col)
        for k in spec.achievable:
            assert crossing_number(col, spec.witnesses[k]) == k


def test_spectrum_alternating_seven_frozen():
    spec = spectrum(Coloring("RB" * 7))
    assert spec.achievable == (0, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14,
                               15, 17, 18, 21)
    assert spec.missing == (1, 2, 16, 19, 20)


def test_spectrum_is_deterministic():
    first = spectrum(Coloring("RRBRBBRB"))
    second = spectrum(Coloring("RRBRBBRB"))
    assert first.achievable == second.achievable
    assert {k: m.sorted_edges for k, m in first.witnesses.items()} == \
        {k: m.sorted_edges for k, m in second.witnesses.items()}


def test_spectrum_budget_partial():
    with pytest.raises(BudgetExceeded) as info:
        spectrum(Coloring("RB" * 8), SearchBudget(max_nodes=50))
    partial = info.value.partial
    assert partial is not None
    assert not partial.complete
    # whatever was reached is still correct
    full = set(oracle.spectrum("RB" * 5))
    spec = spectrum(Coloring("RB" * 5))
    assert set(spec.achievable) == full


def test_max_crossing_frozen():
    value, matching = max_crossing(Coloring("RB" + "R" * 7 + "B" * 7))
    assert value == 27
    value, _ = max_crossing(Coloring("RRBB"))
    assert value == 1


def test_max_crossing_matches_oracle():
    for n in range(1, 5):
        for rep in oracle.canonical_reps(n):
            col = Coloring(rep)
            value, matching = max_crossing(col)
            assert value == oracle.maximum(rep)
            assert crossing_number(col, matching) == value


def test_find_with_k():
    col = Coloring("RBRRBB")
    m = find_with_k(col, 2)
    assert m is not None and m.sorted_edges == ((0, 4), (1, 3), (2, 5))
    assert crossing_number(col, m) == 2
    assert find_with_k(Coloring("RBRB"), 1) is None
    assert find_with_k(col, -1) is None
    assert find_with_k(col, 50) is None


def test_find_with_k_agrees_with_spectrum():
    for rep in oracle.canonical_reps(4):
        col = Coloring(rep)
        achievable = set(oracle.spectrum(rep))
        for k in range(8):
            m = find_with_k(col, k)
            if k in achievable:
                assert m is not None
                assert crossing_number(col, m) == k
            else:
                assert m is None


def test_enumerate_colorings():
    counts = [len(enumerate_colorings(n)) for n in range(1, 7)]
    assert counts == [1, 2, 3, 7, 13, 35]
    reps = enumerate_colorings(4)
    assert [str(c) for c in reps] == oracle.canonical_reps(4)
    assert reps == sorted(reps, key=str)
    with pytest.raises(OutOfRange):
        enumerate_colorings(0)


def test_minmax_sweep_frozen():
    expected = {
        2: (0, ["BRBR"]),
        3: (2, ["BBRBRR"]),
        4: (4, ["BBBRRBRR", "BBRRBBRR", "BRBRBRBR"]),
        5: (7, ["BBBRRBBRRR"]),
        6: (10, ["BBBRRRBBBRRR"]),
    }
    for n, (value, minimizers) in expected.items():
        got_value, got_cols = minmax_sweep(n)
        assert got_value == value == balanced_fourblock_bound(n).value
        assert [str(c) for c in got_cols] == minimizers


def test_minmax_sweep_matches_oracle():
    for n in (2, 3, 4):
        value, cols = minmax_sweep(n)
        expected_value, expected_min = oracle.min_max(n)
        assert value == expected_value
        assert [str(c) for c in cols] == expected_min


def test_minmax_sweep_contains_balanced_fourblock():
    from convexmatch import balanced_fourblock_coloring

    for n in range(2, 7):
        _, cols = minmax_sweep(n)
        canon, _ = canonicalize(balanced_fourblock_coloring(n))
        assert str(canon) in {str(c) for c in cols}


def test_minmax_sweep_parallel_equals_sequential():
    seq_value, seq_cols = minmax_sweep(4)
    par_value, par_cols = minmax_sweep(4, SearchBudget(jobs=2))
    assert (seq_value, [str(c) for c in seq_cols]) == \
        (par_value, [str(c) for c in par_cols])


def test_size_limits():
    with pytest.raises(SizeLimitExceeded):
        spectrum(Coloring("RB" * 11))
    with pytest.raises(SizeLimitExceeded):
        minmax_sweep(9)
    # explicit budget lifts the gate; the node cap then fires instead,
    # which proves the size check ran first and was satisfied
    with pytest.raises(BudgetExceeded):
        spectrum(Coloring("RB" * 11), SearchBudget(max_nodes=10, max_n=12))


def test_size_limit_env_override(monkeypatch):
    monkeypatch.setenv("CONVEXMATCH_MAX_N", "12")
    with pytest.raises(BudgetExceeded):
        spectrum(Coloring("RB" * 11), SearchBudget(max_nodes=10))
    monkeypatch.setenv("CONVEXMATCH_MAX_N", "5")
    with pytest.raises(SizeLimitExceeded):
        spectrum(Coloring("RB" * 6))
