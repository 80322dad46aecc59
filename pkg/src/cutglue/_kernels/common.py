"""Shared helpers for the kernel backends.

Bulk work runs on the slot form of a pairing: the permutation perm with
perm[i] = even slot paired with odd slot i. Positive boundary cycles are
the cycles of perm; negative ones are the cycles of j -> perm[rho[j]]
where rho advances an even slot to the odd slot of its cyclic successor.
Pairings are indexed by the rank of perm in lexicographic order.
"""

from __future__ import annotations

import math

import numpy as np


def even_slot_successor(component_sizes: tuple[int, ...]) -> np.ndarray:
    """rho[j]: odd slot of the cyclic successor of even slot j."""
    m = sum(component_sizes)
    rho = np.empty(m, dtype=np.int64)
    start = 0
    for n in component_sizes:
        for j in range(start, start + n):
            rho[j] = j + 1 if j + 1 < start + n else start
        start += n
    return rho


def factorial_table(m: int) -> np.ndarray:
    return np.array([math.factorial(i) for i in range(m + 1)], dtype=np.int64)


def total_pairings(m: int) -> int:
    return math.factorial(m)


def strip_pair_columns(m: int) -> np.ndarray:
    """Column c of a neighbor table acts on odd slots (out[c, 0], out[c, 1])."""
    out = np.array(
        [(a, b) for a in range(m) for b in range(a + 1, m)], dtype=np.int64
    )
    return out.reshape(-1, 2)


def canonical_labels(raw: np.ndarray) -> np.ndarray:
    """Relabel components 0,1,... by order of first appearance."""
    if raw.size == 0:
        return raw.astype(np.int64)
    uniq, first = np.unique(raw, return_index=True)
    order = np.argsort(np.argsort(first))
    return order[np.searchsorted(uniq, raw)].astype(np.int64)
