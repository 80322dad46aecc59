"""Cut-and-glue moves: classification, application, candidate generation.

A move picks two strips and exchanges their even endpoints. It is allowed
only when the four long strip sides lie on exactly 2 or exactly 4 distinct
boundary cycles; the 3-cycle configuration would merge a positive circle
with a negative one and is refused.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from .boundary import BoundaryProfile, boundary_profile
from .surface import MissingPairError, Pairing


@dataclass(frozen=True)
class Move:
    """Two pairs to act on, kept in canonical order.

    Each pair is stored (odd, even) and pair_a holds the smaller odd
    vertex; any orientation may be passed in.
    """

    pair_a: tuple[int, int]
    pair_b: tuple[int, int]

    def __post_init__(self) -> None:
        a = _orient(self.pair_a)
        b = _orient(self.pair_b)
        if a[0] == b[0]:
            raise ValueError(f"move needs two distinct pairs, got {a} and {b}")
        if a[0] > b[0]:
            a, b = b, a
        object.__setattr__(self, "pair_a", a)
        object.__setattr__(self, "pair_b", b)

    @property
    def vertices(self) -> tuple[int, int, int, int]:
        """(o1, e1, o2, e2) in canonical order."""
        return (*self.pair_a, *self.pair_b)


def _orient(pair: Sequence[int]) -> tuple[int, int]:
    a, b = (int(v) for v in pair)
    if a % 2 == b % 2:
        raise ValueError(f"pair {(a, b)} joins two vertices of the same parity")
    return (a, b) if a % 2 == 1 else (b, a)


@dataclass(frozen=True)
class MoveVerdict:
    distinct_boundaries: int  # 2, 3 or 4
    legal: bool
    kind: str  # "split" | "merge" | "forbidden"


_VERDICT = {
    2: MoveVerdict(2, True, "split"),
    3: MoveVerdict(3, False, "forbidden"),
    4: MoveVerdict(4, True, "merge"),
}


class IllegalMoveError(ValueError):
    def __init__(self, move: Move, distinct_boundaries: int) -> None:
        super().__init__(
            f"move on {move.pair_a} and {move.pair_b} touches "
            f"{distinct_boundaries} distinct boundary cycles and is forbidden"
        )
        self.move = move
        self.distinct_boundaries = distinct_boundaries


def _side_ids(prof: BoundaryProfile) -> tuple[dict[int, int], dict[int, int]]:
    # cycle index per odd vertex (plus sides) and per even vertex (minus sides)
    pos = {v: i for i, cycle in enumerate(prof.positive_cycles) for v in cycle}
    neg = {v: i for i, cycle in enumerate(prof.negative_cycles) for v in cycle}
    return pos, neg


def _classify(move: Move, pos: dict[int, int], neg: dict[int, int]) -> MoveVerdict:
    o1, e1, o2, e2 = move.vertices
    distinct = len({pos[o1], pos[o2]}) + len({neg[e1], neg[e2]})
    return _VERDICT[distinct]


def classify_move(p: Pairing, move: Move) -> MoveVerdict:
    """Count the distinct boundary cycles under the four strip sides."""
    for pair in (move.pair_a, move.pair_b):
        if not p.contains_pair(pair):
            raise MissingPairError(pair)
    pos, neg = _side_ids(boundary_profile(p))
    return _classify(move, pos, neg)


def raw_swap(p: Pairing, move: Move) -> Pairing:
    """Exchange the even endpoints of two pairs with no legality check.

    Diagnostic escape hatch: the result is a valid pairing but its
    signature is not protected when the move is forbidden.
    """
    for pair in (move.pair_a, move.pair_b):
        if not p.contains_pair(pair):
            raise MissingPairError(pair)
    o1, e1, o2, e2 = move.vertices
    swapped = {o1: e2, o2: e1}
    pairs = tuple((o, swapped.get(o, e)) for o, e in p.pairs)
    return Pairing(p.surface, pairs)


def apply_move(p: Pairing, move: Move) -> Pairing:
    """Apply a legal move; refuse the forbidden 3-cycle configuration."""
    verdict = classify_move(p, move)
    if not verdict.legal:
        raise IllegalMoveError(move, verdict.distinct_boundaries)
    return raw_swap(p, move)


def legal_moves(
    p: Pairing, include_forbidden: bool = False
) -> list[tuple[Move, MoveVerdict]]:
    """All candidate moves over pair choices, in canonical order.

    By default only the legal ones are returned; include_forbidden=True
    keeps all C(n, 2) candidates with their verdicts.
    """
    pos, neg = _side_ids(boundary_profile(p))
    out = []
    for pair_a, pair_b in combinations(p.pairs, 2):
        move = Move(pair_a, pair_b)
        verdict = _classify(move, pos, neg)
        if verdict.legal or include_forbidden:
            out.append((move, verdict))
    return out
