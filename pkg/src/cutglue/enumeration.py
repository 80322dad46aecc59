"""Exhaustive enumeration of pairings and signature censuses.

Pairings on a surface with n total pairs biject with permutations of n
even slots, so there are n! of them. Enumeration order is lexicographic
in the slot permutation, which is also lexicographic in the canonical
pair list; ranks index that order through the factorial number system.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import permutations
from typing import Iterator, Sequence

import numpy as np

from . import _kernels
from ._kernels.common import even_slot_successor
from .surface import Pairing, SurfaceSpec

DEFAULT_BUDGET = 3_628_800  # 10!


class BudgetExceededError(RuntimeError):
    def __init__(self, total: int, budget: int) -> None:
        super().__init__(f"{total} pairings exceed the configured budget {budget}")
        self.total = total
        self.budget = budget


def check_budget(surface: SurfaceSpec, budget: int) -> int:
    total = math.factorial(surface.total_pairs)
    if total > budget:
        raise BudgetExceededError(total, budget)
    return total


def enumerate_pairings(surface: SurfaceSpec) -> Iterator[Pairing]:
    """All pairings in rank order, streamed with constant memory."""
    for perm in permutations(range(surface.total_pairs)):
        yield Pairing.from_permutation(surface, perm)


def perm_rank(perm: Sequence[int]) -> int:
    m = len(perm)
    rank = 0
    for i in range(m):
        smaller = sum(1 for j in range(i + 1, m) if perm[j] < perm[i])
        rank += smaller * math.factorial(m - 1 - i)
    return rank


def perm_from_rank(m: int, rank: int) -> tuple[int, ...]:
    avail = list(range(m))
    out = []
    rest = rank
    for i in range(m):
        f = math.factorial(m - 1 - i)
        digit, rest = divmod(rest, f)
        out.append(avail.pop(digit))
    return tuple(out)


def pairing_rank(p: Pairing) -> int:
    """Position of p in enumeration order."""
    return perm_rank(p.as_permutation())


def pairing_from_rank(surface: SurfaceSpec, rank: int) -> Pairing:
    total = math.factorial(surface.total_pairs)
    if not 0 <= rank < total:
        raise ValueError(f"rank {rank} outside 0..{total - 1}")
    return Pairing.from_permutation(surface, perm_from_rank(surface.total_pairs, rank))


@dataclass(frozen=True)
class EnumerationReport:
    surface: SurfaceSpec
    total_pairings: int
    counts_by_signature: dict[int, int]
    balanced_count: int


def signature_census(surface: SurfaceSpec) -> np.ndarray:
    """Signature of every pairing, indexed by rank."""
    backend = _kernels.get_backend()
    rho = even_slot_successor(surface.component_sizes)
    cpos, cneg = backend.boundary_counts_by_rank(surface.total_pairs, rho)
    return cpos.astype(np.int64) - cneg.astype(np.int64)


def enumeration_report(
    surface: SurfaceSpec, budget: int = DEFAULT_BUDGET
) -> EnumerationReport:
    """Signature histogram over all pairings of the surface."""
    total = check_budget(surface, budget)
    sig = signature_census(surface)
    values, counts = np.unique(sig, return_counts=True)
    by_sig = {
        int(v): int(c) for v, c in sorted(zip(values, counts), reverse=True)
    }
    return EnumerationReport(
        surface=surface,
        total_pairings=total,
        counts_by_signature=by_sig,
        balanced_count=by_sig.get(0, 0),
    )
