"""Boundary structure of the strip-attached surface.

Attaching a strip along each pair turns the marked surface into a new
surface whose boundary circles split into positive ones (carrying the
plus-arcs and the plus sides of strips) and negative ones. The signature
of a pairing is the positive count minus the negative count.
"""

from __future__ import annotations

from dataclasses import dataclass

from .surface import MissingPairError, Pairing, successor

# (sign, minimal vertex on the cycle); sign is "+" or "-"
CycleId = tuple[str, int]


@dataclass(frozen=True)
class BoundaryProfile:
    positive_cycles: tuple[tuple[int, ...], ...]
    negative_cycles: tuple[tuple[int, ...], ...]
    signature: int
    euler_characteristic: int
    boundary_count: int
    genus: int

    def cycle_containing(self, v: int) -> CycleId:
        """Identifier of the boundary cycle this vertex is traversed on."""
        cycles = self.positive_cycles if v % 2 == 1 else self.negative_cycles
        for cycle in cycles:
            if v in cycle:
                return ("+" if v % 2 == 1 else "-", cycle[0])
        raise ValueError(f"vertex {v} not on any cycle")


def boundary_profile(p: Pairing) -> BoundaryProfile:
    """Decompose the boundary of the strip-attached surface.

    Walking one boundary circle alternates between a boundary arc and a
    strip side; in vertex terms a full step is v -> partner(successor(v)).
    Starting from odd vertices traces the circles made of plus-arcs,
    starting from even vertices the ones made of minus-arcs.
    """
    surface = p.surface
    pos = _cycles(p, surface.odd_vertices())
    neg = _cycles(p, surface.even_vertices())
    d = len(pos) + len(neg)
    chi = surface.euler_characteristic - p.size  # each strip lowers chi by one
    g2 = 2 - chi - d
    assert g2 % 2 == 0 and g2 >= 0, (p.pairs, chi, d)
    return BoundaryProfile(
        positive_cycles=pos,
        negative_cycles=neg,
        signature=len(pos) - len(neg),
        euler_characteristic=chi,
        boundary_count=d,
        genus=g2 // 2,
    )


def _cycles(p: Pairing, starts: range) -> tuple[tuple[int, ...], ...]:
    surface = p.surface
    seen: set[int] = set()
    cycles: list[tuple[int, ...]] = []
    for v0 in starts:  # ascending, so each cycle begins at its smallest vertex
        if v0 in seen:
            continue
        cycle = []
        v = v0
        while v not in seen:
            seen.add(v)
            cycle.append(v)
            v = p.partner(successor(surface, v))
        cycles.append(tuple(cycle))
    return tuple(cycles)


def signature(p: Pairing) -> int:
    return boundary_profile(p).signature


def is_balanced(p: Pairing) -> bool:
    return boundary_profile(p).signature == 0


def boundary_of_strip_side(p: Pairing, pair: tuple[int, int], side: str) -> CycleId:
    """Identify the boundary cycle carrying one long side of a strip.

    side is "plus" or "minus". The plus side runs along the cycle that
    traverses the pair's odd vertex, the minus side along the one through
    its even vertex.
    """
    if side not in ("plus", "minus"):
        raise ValueError(f"side must be 'plus' or 'minus', got {side!r}")
    a, b = pair
    if not p.contains_pair((a, b)):
        raise MissingPairError((a, b))
    o, e = (a, b) if a % 2 == 1 else (b, a)
    prof = boundary_profile(p)
    return prof.cycle_containing(o if side == "plus" else e)
