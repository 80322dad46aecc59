"""Enumeration order, ranking, budgets, and the signature census."""

import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cutglue.boundary import signature
from cutglue.enumeration import (
    DEFAULT_BUDGET,
    BudgetExceededError,
    check_budget,
    enumerate_pairings,
    enumeration_report,
    pairing_from_rank,
    pairing_rank,
    perm_from_rank,
    perm_rank,
    signature_census,
)
from cutglue.surface import SurfaceSpec

from _oracle import signature_histogram

S3 = SurfaceSpec((3,))


def test_lexicographic_order_and_count():
    got = [p.canonical_string() for p in enumerate_pairings(S3)]
    assert got == [
        "1-2,3-4,5-6",
        "1-2,3-6,5-4",
        "1-4,3-2,5-6",
        "1-4,3-6,5-2",
        "1-6,3-2,5-4",
        "1-6,3-4,5-2",
    ]


def test_enumeration_counts_are_factorials():
    for sizes, m in [((1,), 1), ((3,), 3), ((1, 1), 2), ((2, 2), 4)]:
        n = sum(1 for _ in enumerate_pairings(SurfaceSpec(sizes)))
        assert n == _factorial(m)


def _factorial(m):
    out = 1
    for k in range(2, m + 1):
        out *= k
    return out


def test_perm_rank_round_trip():
    for m in range(1, 6):
        for i, perm in enumerate(itertools.permutations(range(m))):
            assert perm_rank(perm) == i
            assert perm_from_rank(m, i) == perm


def test_pairing_rank_round_trip():
    for i, p in enumerate(enumerate_pairings(S3)):
        assert pairing_rank(p) == i
        assert pairing_from_rank(S3, i) == p
    with pytest.raises(ValueError):
        pairing_from_rank(S3, 6)
    with pytest.raises(ValueError):
        pairing_from_rank(S3, -1)


@given(st.integers(min_value=0, max_value=5039))
def test_rank_is_enumeration_position(rank):
    s = SurfaceSpec((7,))
    p = pairing_from_rank(s, rank)
    assert pairing_rank(p) == rank


def test_budget_enforcement():
    big = SurfaceSpec((11,))
    with pytest.raises(BudgetExceededError) as info:
        check_budget(big, budget=10_000)
    assert info.value.total == 39_916_800
    # the default budget refuses [11] as well
    with pytest.raises(BudgetExceededError):
        check_budget(big, DEFAULT_BUDGET)
    check_budget(SurfaceSpec((9,)), DEFAULT_BUDGET)


@pytest.mark.parametrize("sizes", [(3,), (5,), (1, 3), (2, 2)])
def test_census_matches_python_walk(sizes):
    s = SurfaceSpec(sizes)
    sig = signature_census(s)
    for rank, p in enumerate(enumerate_pairings(s)):
        assert int(sig[rank]) == signature(p)


@pytest.mark.parametrize("sizes", [(3,), (5,), (1, 1), (1, 3), (2, 2), (1, 1, 1)])
def test_report_matches_oracle_histogram(sizes):
    s = SurfaceSpec(sizes)
    report = enumeration_report(s)
    want = signature_histogram(list(sizes))
    assert dict(report.counts_by_signature) == want
    assert report.balanced_count == want.get(0, 0)
    assert report.total_pairings == sum(want.values())


def test_report_sorted_by_descending_signature():
    report = enumeration_report(SurfaceSpec((5,)))
    sigs = list(report.counts_by_signature)
    assert sigs == sorted(sigs, reverse=True)
    assert sigs == [4, 2, 0, -2, -4]
    assert report.counts_by_signature[0] == 68


def test_histogram_is_symmetric():
    report = enumeration_report(SurfaceSpec((7,)))
    counts = report.counts_by_signature
    for s, c in counts.items():
        assert counts[-s] == c
