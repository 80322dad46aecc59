"""Boundary cycle extraction against hand-checked tables and the
independent corner-graph oracle."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cutglue.boundary import (
    boundary_of_strip_side,
    boundary_profile,
    is_balanced,
    signature,
)
from cutglue.surface import Pairing, SurfaceSpec

from _oracle import boundary_counts, cycle_vertex_sets, oracle_signature

S3 = SurfaceSpec((3,))

# the six pairings on one component of size 3, in lexicographic order,
# with their hand-checked signatures
N3_TABLE = [
    ("1-2,3-4,5-6", 2),
    ("1-2,3-6,5-4", 0),
    ("1-4,3-2,5-6", 0),
    ("1-4,3-6,5-2", 0),
    ("1-6,3-2,5-4", -2),
    ("1-6,3-4,5-2", 0),
]


def _pairing(text: str, surface=S3) -> Pairing:
    pairs = [tuple(int(v) for v in chunk.split("-")) for chunk in text.split(",")]
    return Pairing(surface, tuple(pairs))


@pytest.mark.parametrize("text,sig", N3_TABLE)
def test_n3_signature_table(text, sig):
    p = _pairing(text)
    assert signature(p) == sig
    assert is_balanced(p) == (sig == 0)


def test_identity_pairing_cycles():
    # 1-2,3-4,5-6: each odd vertex closes its own positive circle,
    # the evens chain into one negative circle
    prof = boundary_profile(_pairing("1-2,3-4,5-6"))
    assert prof.positive_cycles == ((1,), (3,), (5,))
    assert prof.negative_cycles == ((2, 4, 6),)
    assert prof.boundary_count == 4
    assert prof.signature == 2


def test_staircase_pairing_single_cycles():
    prof = boundary_profile(_pairing("1-4,3-6,5-2"))
    assert prof.positive_cycles == ((1, 5, 3),)
    assert prof.negative_cycles == ((2, 6, 4),)
    assert prof.euler_characteristic == -2
    assert prof.genus == 1


def test_cycles_partition_vertices():
    for text, _ in N3_TABLE:
        prof = boundary_profile(_pairing(text))
        odds = sorted(v for c in prof.positive_cycles for v in c)
        evens = sorted(v for c in prof.negative_cycles for v in c)
        assert odds == [1, 3, 5]
        assert evens == [2, 4, 6]


def test_genus_formula_single_component():
    # connected boundary, n odd: d is even and g = (n + 1 - d)/2
    for n in (3, 5):
        s = SurfaceSpec((n,))
        from cutglue.enumeration import enumerate_pairings

        for p in enumerate_pairings(s):
            prof = boundary_profile(p)
            d = prof.boundary_count
            assert d % 2 == 0
            assert prof.genus == (n + 1 - d) // 2
            assert prof.genus >= 0


def test_cycle_containing():
    prof = boundary_profile(_pairing("1-2,3-6,5-4"))
    assert prof.cycle_containing(1) == ("+", 1)
    assert prof.cycle_containing(3) == ("+", 3)
    assert prof.cycle_containing(5) == ("+", 3)
    assert prof.cycle_containing(4) == ("-", 4)
    with pytest.raises(ValueError):
        prof.cycle_containing(7)


def test_boundary_of_strip_side():
    p = _pairing("1-2,3-6,5-4")
    assert boundary_of_strip_side(p, (1, 2), "plus") == ("+", 1)
    assert boundary_of_strip_side(p, (1, 2), "minus") == ("-", 2)
    assert boundary_of_strip_side(p, (5, 4), "plus") == ("+", 3)
    with pytest.raises(ValueError):
        boundary_of_strip_side(p, (1, 2), "sideways")
    with pytest.raises(ValueError):
        boundary_of_strip_side(p, (1, 6), "plus")


def test_multi_component_profile():
    s = SurfaceSpec((1, 1))
    p = Pairing(s, ((1, 2), (3, 4)))
    prof = boundary_profile(p)
    assert prof.positive_cycles == ((1,), (3,))
    assert prof.negative_cycles == ((2,), (4,))
    assert prof.signature == 0
    # cross-component pairing fuses the circles
    q = Pairing(s, ((1, 4), (3, 2)))
    qrof = boundary_profile(q)
    assert qrof.positive_cycles == ((1, 3),)
    assert qrof.negative_cycles == ((2, 4),)


def test_genus_hint_shifts_euler_characteristic():
    flat = boundary_profile(Pairing(SurfaceSpec((3,)), ((1, 2), (3, 4), (5, 6))))
    bumpy = boundary_profile(
        Pairing(SurfaceSpec((3,), genus_hint=1), ((1, 2), (3, 4), (5, 6)))
    )
    assert bumpy.euler_characteristic == flat.euler_characteristic - 2
    assert bumpy.genus == flat.genus + 1


def test_one_layer_extremal_signatures():
    # both one-layer shapes peg |signature| at n - 1
    for n in (1, 3, 5, 7, 9):
        s = SurfaceSpec((n,))
        nested = Pairing(s, tuple((2 * i + 1, 2 * i + 2) for i in range(n)))
        assert abs(signature(nested)) == n - 1
        shifted = [(1, 2 * n)] + [(2 * i + 1, 2 * i) for i in range(1, n)]
        prof = boundary_profile(Pairing(s, tuple(shifted)))
        assert abs(prof.signature) == n - 1


def _rotate_by_two(p: Pairing) -> Pairing:
    two_n = 2 * p.surface.total_pairs

    def relabel(v: int) -> int:
        return (v + 1) % two_n + 1

    pairs = sorted((relabel(o), relabel(e)) for o, e in p.pairs)
    return Pairing(p.surface, tuple(pairs))


def test_rotation_by_two_preserves_profile():
    for text, _ in N3_TABLE:
        p = _pairing(text)
        q = _rotate_by_two(p)
        a, b = boundary_profile(p), boundary_profile(q)
        assert (a.signature, a.boundary_count, a.genus) == (
            b.signature,
            b.boundary_count,
            b.genus,
        )


@settings(max_examples=100, deadline=None)
@given(st.sampled_from([3, 5]), st.randoms(use_true_random=False))
def test_rotation_equivariance_random(n, rng):
    s = SurfaceSpec((n,))
    perm = list(range(n))
    rng.shuffle(perm)
    p = Pairing.from_permutation(s, tuple(perm))
    q = _rotate_by_two(p)
    a, b = boundary_profile(p), boundary_profile(q)
    assert a.signature == b.signature
    assert a.boundary_count == b.boundary_count
    assert a.genus == b.genus


@st.composite
def random_pairing(draw):
    sizes = draw(
        st.lists(st.integers(min_value=1, max_value=4), min_size=1, max_size=3)
    )
    if len(sizes) == 1 and sizes[0] % 2 == 0:
        sizes = sizes + [1]
    s = SurfaceSpec(tuple(sizes))
    m = s.total_pairs
    perm = draw(st.permutations(list(range(m))))
    return Pairing.from_permutation(s, tuple(perm))


@settings(max_examples=200, deadline=None)
@given(random_pairing())
def test_profile_matches_corner_graph_oracle(p):
    """The permutation walk and the corner-graph union-find must agree
    on every cycle, not just the counts."""
    sizes = list(p.surface.component_sizes)
    pos, neg = boundary_counts(sizes, list(p.pairs))
    prof = boundary_profile(p)
    assert len(prof.positive_cycles) == pos
    assert len(prof.negative_cycles) == neg
    assert oracle_signature(sizes, list(p.pairs)) == prof.signature

    opos, oneg = cycle_vertex_sets(sizes, list(p.pairs))
    assert {frozenset(c) for c in prof.positive_cycles} == opos
    assert {frozenset(c) for c in prof.negative_cycles} == oneg


@settings(max_examples=200, deadline=None)
@given(random_pairing())
def test_boundary_count_parity(p):
    # d == s + m (mod 2), a consequence of permutation parity
    prof = boundary_profile(p)
    s = p.surface.component_count
    m = p.surface.total_pairs
    assert (prof.boundary_count - s - m) % 2 == 0
