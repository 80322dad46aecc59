"""Marked surfaces and strip pairings.

A surface is described by its boundary components; component i carries
2*n_i marked vertices. Vertices are numbered 1..V globally, component by
component, so every component starts at an odd index and ends at an even
one. The arc from a vertex to its cyclic successor is a plus-arc when the
vertex is odd and a minus-arc when it is even.

A pairing matches every odd vertex with an even vertex; each pair stands
for one attached strip.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence


class PairingError(ValueError):
    """A pair list is not a valid strip attachment plan."""


class VertexRangeError(PairingError):
    def __init__(self, vertex: int, vertex_count: int) -> None:
        super().__init__(f"vertex {vertex} outside 1..{vertex_count}")
        self.vertex = vertex
        self.vertex_count = vertex_count


class DuplicateVertexError(PairingError):
    def __init__(self, vertex: int) -> None:
        super().__init__(f"vertex {vertex} appears in more than one pair")
        self.vertex = vertex


class UncoveredVertexError(PairingError):
    def __init__(self, vertex: int) -> None:
        super().__init__(f"vertex {vertex} is not covered by any pair")
        self.vertex = vertex


class SameParityPairError(PairingError):
    def __init__(self, pair: tuple[int, int]) -> None:
        super().__init__(f"pair {pair} joins two vertices of the same parity")
        self.pair = pair


class MissingPairError(ValueError):
    def __init__(self, pair: tuple[int, int]) -> None:
        super().__init__(f"pair {pair} is not part of the pairing")
        self.pair = pair


@dataclass(frozen=True)
class SurfaceSpec:
    """A compact surface with marked boundary vertices.

    component_sizes[i] is n_i, so boundary component i carries 2*n_i
    vertices. genus_hint is the genus of the bare surface and only feeds
    Euler characteristic bookkeeping.
    """

    component_sizes: tuple[int, ...]
    genus_hint: int = 0

    def __post_init__(self) -> None:
        sizes = tuple(int(n) for n in self.component_sizes)
        object.__setattr__(self, "component_sizes", sizes)
        if not sizes:
            raise ValueError("surface needs at least one boundary component")
        if any(n < 1 for n in sizes):
            raise ValueError(f"component sizes must be positive: {sizes}")
        if len(sizes) == 1 and sizes[0] % 2 == 0:
            raise ValueError(
                "a single boundary component must carry an odd number of pairs"
            )
        if self.genus_hint < 0:
            raise ValueError("genus_hint must be nonnegative")

    @property
    def component_count(self) -> int:
        return len(self.component_sizes)

    @property
    def total_pairs(self) -> int:
        """Number of strips a pairing attaches."""
        return sum(self.component_sizes)

    @property
    def vertex_count(self) -> int:
        return 2 * self.total_pairs

    @property
    def euler_characteristic(self) -> int:
        """Euler characteristic of the bare surface, before strips."""
        return 2 - 2 * self.genus_hint - self.component_count

    def component_ranges(self) -> tuple[tuple[int, int], ...]:
        """Inclusive (first, last) vertex index per boundary component."""
        ranges = []
        start = 1
        for n in self.component_sizes:
            ranges.append((start, start + 2 * n - 1))
            start += 2 * n
        return tuple(ranges)

    def component_of(self, v: int) -> int:
        self.check_vertex(v)
        for i, (start, end) in enumerate(self.component_ranges()):
            if v <= end:
                return i
        raise AssertionError("unreachable")

    def check_vertex(self, v: int) -> None:
        if not isinstance(v, int) or not 1 <= v <= self.vertex_count:
            raise VertexRangeError(v, self.vertex_count)

    def odd_vertices(self) -> range:
        return range(1, self.vertex_count, 2)

    def even_vertices(self) -> range:
        return range(2, self.vertex_count + 1, 2)


def successor(surface: SurfaceSpec, v: int) -> int:
    """Next vertex in the cyclic order of v's own boundary component."""
    start, end = surface.component_ranges()[surface.component_of(v)]
    return start if v == end else v + 1


def balanced_existence_parity(surface: SurfaceSpec) -> bool:
    """Whether balanced pairings can exist at all on this surface.

    Balanced pairings exist only when the component count plus the total
    pair count is even; on the failing parity every signature is odd.
    """
    return (surface.component_count + surface.total_pairs) % 2 == 0


@dataclass(frozen=True)
class Pairing:
    """A parity-respecting perfect matching of the marked vertices.

    pairs is canonical: every pair is (odd, even) and pairs are sorted by
    their odd vertex. Build instances through validate_pairing (detailed
    error reporting) or from_permutation (trusted fast path); direct
    construction still re-checks the canonical form.
    """

    surface: SurfaceSpec
    pairs: tuple[tuple[int, int], ...]
    _partner: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        pairs = tuple((int(a), int(b)) for a, b in self.pairs)
        object.__setattr__(self, "pairs", pairs)
        object.__setattr__(self, "_partner", _partner_table(self.surface, pairs))

    def partner(self, v: int) -> int:
        self.surface.check_vertex(v)
        return self._partner[v]

    @property
    def size(self) -> int:
        """Number of attached strips."""
        return len(self.pairs)

    def contains_pair(self, pair: Sequence[int]) -> bool:
        a, b = pair
        return (
            1 <= a <= self.surface.vertex_count
            and 1 <= b <= self.surface.vertex_count
            and self._partner[a] == b
        )

    def as_permutation(self) -> tuple[int, ...]:
        """Slot form: entry i is the even slot paired with odd slot i.

        Odd vertex 2i+1 sits in odd slot i, even vertex 2j+2 in even slot j.
        """
        return tuple((e - 2) // 2 for _, e in self.pairs)

    @classmethod
    def from_permutation(cls, surface: SurfaceSpec, perm: Sequence[int]) -> "Pairing":
        pairs = tuple((2 * i + 1, 2 * int(p) + 2) for i, p in enumerate(perm))
        return cls(surface, pairs)

    def canonical_string(self) -> str:
        return ",".join(f"{o}-{e}" for o, e in self.pairs)

    def __str__(self) -> str:
        return self.canonical_string()


def _partner_table(surface: SurfaceSpec, pairs: tuple[tuple[int, int], ...]) -> tuple[int, ...]:
    # guards the canonical-form invariant for directly built instances
    m = surface.total_pairs
    if len(pairs) != m:
        raise ValueError(f"expected {m} pairs, got {len(pairs)}")
    table = [0] * (surface.vertex_count + 1)
    for i, (o, e) in enumerate(pairs):
        if o != 2 * i + 1:
            raise ValueError(f"pairs not canonical: pair {i} starts with {o}")
        if not (e % 2 == 0 and 2 <= e <= surface.vertex_count):
            raise ValueError(f"pairs not canonical: {o} paired with {e}")
        if table[e]:
            raise ValueError(f"pairs not canonical: even vertex {e} reused")
        table[o] = e
        table[e] = o
    return tuple(table)


def validate_pairing(surface: SurfaceSpec, pairs: Iterable[Sequence[int]]) -> Pairing:
    """Validate a pair list and return it in canonical form.

    Pairs may come in any order and either orientation. Failures are
    reported by kind: vertex out of range, duplicate vertex, same-parity
    pair, uncovered vertex.
    """
    V = surface.vertex_count
    seen: set[int] = set()
    oriented: list[tuple[int, int]] = []
    for pair in pairs:
        try:
            a, b = (int(v) for v in pair)
        except (TypeError, ValueError) as exc:
            raise PairingError(f"malformed pair {pair!r}") from exc
        for v in (a, b):
            if not 1 <= v <= V:
                raise VertexRangeError(v, V)
            if v in seen:
                raise DuplicateVertexError(v)
            seen.add(v)
        if a % 2 == b % 2:
            raise SameParityPairError((a, b))
        oriented.append((a, b) if a % 2 == 1 else (b, a))
    for v in range(1, V + 1):
        if v not in seen:
            raise UncoveredVertexError(v)
    return Pairing(surface, tuple(sorted(oriented)))
