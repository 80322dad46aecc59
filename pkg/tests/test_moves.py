"""Move normalization, verdicts, application, reversibility."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cutglue.boundary import boundary_profile, signature
from cutglue.moves import (
    IllegalMoveError,
    Move,
    apply_move,
    classify_move,
    legal_moves,
    raw_swap,
)
from cutglue.surface import MissingPairError, Pairing, SurfaceSpec

from _oracle import distinct_boundaries_of_move

S3 = SurfaceSpec((3,))
S5 = SurfaceSpec((5,))


def _pairing(text, surface=S3):
    pairs = [tuple(int(v) for v in c.split("-")) for c in text.split(",")]
    return Pairing(surface, tuple(pairs))


def test_move_normalization():
    # any orientation of either pair, any pair order
    m = Move((4, 5), (2, 1))
    assert m.pair_a == (1, 2)
    assert m.pair_b == (5, 4)
    assert m.vertices == (1, 2, 5, 4)
    assert Move((5, 4), (1, 2)) == m


def test_move_rejects_bad_pairs():
    with pytest.raises(ValueError):
        Move((1, 3), (2, 4))  # same parity inside a pair
    with pytest.raises(ValueError):
        Move((1, 2), (1, 4))  # same strip twice


def test_classify_requires_membership():
    p = _pairing("1-2,3-6,5-4")
    with pytest.raises(MissingPairError):
        classify_move(p, Move((1, 6), (3, 2)))


@pytest.mark.parametrize(
    "text,pair_a,pair_b,distinct,kind",
    [
        ("1-2,3-4,5-6", (1, 2), (3, 4), 3, "forbidden"),
        ("1-2,3-6,5-4", (1, 2), (5, 4), 4, "merge"),
        ("1-4,3-6,5-2", (1, 4), (3, 6), 2, "split"),
        ("1-4,3-6,5-2", (1, 4), (5, 2), 2, "split"),
    ],
)
def test_verdicts(text, pair_a, pair_b, distinct, kind):
    p = _pairing(text)
    verdict = classify_move(p, Move(pair_a, pair_b))
    assert verdict.distinct_boundaries == distinct
    assert verdict.kind == kind
    assert verdict.legal == (distinct != 3)


def test_apply_move_merge():
    p = _pairing("1-2,3-6,5-4")
    q = apply_move(p, Move((1, 2), (5, 4)))
    assert q.pairs == ((1, 4), (3, 6), (5, 2))


def test_apply_refuses_forbidden():
    p = _pairing("1-2,3-4,5-6")
    with pytest.raises(IllegalMoveError) as info:
        apply_move(p, Move((1, 2), (3, 4)))
    assert info.value.distinct_boundaries == 3


def test_raw_swap_breaks_signature_on_forbidden():
    # the escape hatch really does change the signature here: 2 -> 0
    p = _pairing("1-2,3-4,5-6")
    q = raw_swap(p, Move((1, 2), (3, 4)))
    assert q.pairs == ((1, 4), (3, 2), (5, 6))
    assert signature(p) == 2
    assert signature(q) == 0


def test_legal_moves_canonical_order():
    p = _pairing("1-4,3-6,5-2")
    moves = [m.vertices for m, _ in legal_moves(p)]
    assert moves == [(1, 4, 3, 6), (1, 4, 5, 2), (3, 6, 5, 2)]
    everything = legal_moves(p, include_forbidden=True)
    assert len(everything) == 3  # C(3,2) candidates, all legal here


def test_no_legal_moves_from_extremal_pairing():
    assert legal_moves(_pairing("1-2,3-4,5-6")) == []
    assert legal_moves(_pairing("1-6,3-2,5-4")) == []


def test_split_and_merge_boundary_accounting():
    p = _pairing("1-4,3-6,5-2")
    before = boundary_profile(p)
    for move, verdict in legal_moves(p):
        after = boundary_profile(apply_move(p, move))
        dpos = len(after.positive_cycles) - len(before.positive_cycles)
        dneg = len(after.negative_cycles) - len(before.negative_cycles)
        if verdict.kind == "split":
            assert (dpos, dneg) == (1, 1)
        else:
            assert (dpos, dneg) == (-1, -1)


@st.composite
def pairing_with_move(draw):
    sizes = draw(
        st.lists(st.integers(min_value=1, max_value=3), min_size=1, max_size=3)
    )
    if len(sizes) == 1 and sizes[0] % 2 == 0:
        sizes = sizes + [1]
    s = SurfaceSpec(tuple(sizes))
    if s.total_pairs < 2:
        sizes = sizes + [1]
        s = SurfaceSpec(tuple(sizes))
    perm = draw(st.permutations(list(range(s.total_pairs))))
    p = Pairing.from_permutation(s, tuple(perm))
    i, j = draw(
        st.tuples(
            st.integers(0, s.total_pairs - 1), st.integers(0, s.total_pairs - 1)
        ).filter(lambda t: t[0] != t[1])
    )
    return p, Move(p.pairs[i], p.pairs[j])


@settings(max_examples=300, deadline=None)
@given(pairing_with_move())
def test_verdict_matches_oracle(case):
    p, move = case
    verdict = classify_move(p, move)
    oracle_count = distinct_boundaries_of_move(
        list(p.surface.component_sizes), list(p.pairs), move.pair_a, move.pair_b
    )
    assert verdict.distinct_boundaries == oracle_count


@settings(max_examples=300, deadline=None)
@given(pairing_with_move())
def test_legal_moves_preserve_signature_and_reverse(case):
    p, move = case
    verdict = classify_move(p, move)
    if not verdict.legal:
        with pytest.raises(IllegalMoveError):
            apply_move(p, move)
        return
    q = apply_move(p, move)
    assert signature(q) == signature(p)
    o1, e1, o2, e2 = move.vertices
    back = Move((o1, e2), (o2, e1))
    assert apply_move(q, back) == p
    # the inverse has the complementary kind
    assert classify_move(q, back).distinct_boundaries + \
        verdict.distinct_boundaries == 6
