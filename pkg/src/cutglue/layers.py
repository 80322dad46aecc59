"""Planarity, layer counts, and complexity reduction on the disk.

Pairings on a single-component surface draw as chord diagrams. Cutting
the circle at the gap between the last vertex and vertex 1 gives a
canonical linear diagram; x[l] counts the arcs spanning gap l and their
sum c measures complexity. Non-planar means two chords cross.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .boundary import is_balanced
from .moves import Move, classify_move, raw_swap
from .surface import Pairing


def tau(n: int, i: int, j: int) -> int:
    """Clockwise position of vertex j when counting starts at vertex i."""
    if not (1 <= i <= 2 * n and 1 <= j <= 2 * n):
        raise ValueError(f"vertices must lie in 1..{2 * n}, got {i}, {j}")
    return j - i + 1 if i <= j else 2 * n - (i - j) + 1


def _require_disk(p: Pairing, what: str) -> None:
    if p.surface.component_count != 1:
        raise ValueError(f"{what} is defined only on a single boundary component")


def is_planar(p: Pairing) -> bool:
    """No two chords cross, tested with the tau quantifier."""
    _require_disk(p, "planarity")
    n = p.surface.total_pairs
    for pa, pb in combinations(p.pairs, 2):
        for i, k in (pa, pa[::-1]):
            for j, l in (pb, pb[::-1]):
                if tau(n, i, j) < tau(n, i, k) < tau(n, i, l):
                    return False
    return True


def is_planar_by_nesting(p: Pairing) -> bool:
    """Crossing test via bracket nesting on the cut-open diagram.

    Independent of the tau formulation: scan vertices in linear order,
    push a chord at its first endpoint, and require every chord to close
    while on top of the stack.
    """
    _require_disk(p, "planarity")
    opens = {min(o, e): max(o, e) for o, e in p.pairs}
    stack: list[int] = []
    for v in range(1, p.surface.vertex_count + 1):
        if v in opens:
            stack.append(opens[v])
        else:
            if not stack or stack[-1] != v:
                return False
            stack.pop()
    return not stack


@dataclass(frozen=True)
class LayerProfile:
    x: tuple[int, ...]  # x[l-1] = arcs over gap l; gap 2n is the cut, so x[-1] = 0
    complexity: int

    @property
    def max_layer(self) -> int:
        return max(self.x)


def layer_profile(p: Pairing) -> LayerProfile:
    """Layer count over every gap of the cut-open diagram."""
    _require_disk(p, "the layer profile")
    V = p.surface.vertex_count
    x = [0] * V
    for o, e in p.pairs:
        u, v = min(o, e), max(o, e)
        for l in range(u, v):
            x[l - 1] += 1
    return LayerProfile(x=tuple(x), complexity=sum(x))


class StuckReductionError(RuntimeError):
    """No prescribed two-move route around a deep gap was legal."""

    def __init__(self, pairing: Pairing, gap: int, arcs: tuple) -> None:
        super().__init__(
            f"reduction stuck on {pairing.canonical_string()} at gap {gap}; "
            f"outermost arcs {arcs}"
        )
        self.pairing = pairing
        self.gap = gap
        self.arcs = arcs


def _arcs_over_gap(p: Pairing, l: int) -> list[tuple[int, int]]:
    arcs = sorted(
        (min(o, e), max(o, e)) for o, e in p.pairs if min(o, e) <= l < max(o, e)
    )
    # planar arcs over one gap always nest, so lefts ascend and rights descend
    rights = [v for _, v in arcs]
    assert rights == sorted(rights, reverse=True), (p.pairs, l, arcs)
    return arcs


def _pair_of(p: Pairing, v: int) -> tuple[int, int]:
    return (v, p.partner(v))


def _try_route(
    p: Pairing, anchors1: tuple[int, int], anchors2: tuple[int, int]
) -> tuple[Move, Move, Pairing] | None:
    m1 = Move(_pair_of(p, anchors1[0]), _pair_of(p, anchors1[1]))
    if not classify_move(p, m1).legal:
        return None
    mid = raw_swap(p, m1)
    m2 = Move(_pair_of(mid, anchors2[0]), _pair_of(mid, anchors2[1]))
    if not classify_move(mid, m2).legal:
        return None
    return m1, m2, raw_swap(mid, m2)


def reduce_layers(p: Pairing) -> tuple[Pairing, list[Move]]:
    """Drive every layer count down to at most 2 by legal moves.

    While some gap carries three or more arcs, rearrange the three
    outermost arcs around the deepest-nested endpoints, two cut-and-glue
    moves per step. Four two-move routes reach the two admissible
    rearrangements; the first legal one is taken. Complexity strictly
    decreases each step, which bounds the loop.
    """
    _require_disk(p, "layer reduction")
    if not is_planar(p):
        raise ValueError("layer reduction needs a planar pairing")
    if not is_balanced(p):
        raise ValueError("layer reduction needs a balanced pairing")
    current = p
    steps: list[Move] = []
    while True:
        prof = layer_profile(current)
        deep = [l for l in range(1, len(prof.x) + 1) if prof.x[l - 1] >= 3]
        if not deep:
            break
        gap = deep[0]
        (i, a), (j, b), (k, c) = _arcs_over_gap(current, gap)[:3]
        seq = (i, j, k, c, b, a)
        if any(u % 2 == v % 2 for u, v in zip(seq, seq[1:])):
            raise StuckReductionError(current, gap, ((i, a), (j, b), (k, c)))
        routes = (
            ((j, k), (i, c)),  # -> (i,c),(j,k),(b,a)
            ((i, k), (k, j)),  # -> same target, other order
            ((i, j), (a, k)),  # -> (i,j),(k,a),(b,c)
            ((j, k), (j, i)),  # -> same target, other order
        )
        outcome = None
        for anchors1, anchors2 in routes:
            outcome = _try_route(current, anchors1, anchors2)
            if outcome is not None:
                break
        if outcome is None:
            raise StuckReductionError(current, gap, ((i, a), (j, b), (k, c)))
        m1, m2, nxt = outcome
        nxt_prof = layer_profile(nxt)
        assert nxt_prof.complexity < prof.complexity
        assert nxt_prof.x[gap - 1] < prof.x[gap - 1]
        steps.extend((m1, m2))
        current = nxt
    return current, steps
