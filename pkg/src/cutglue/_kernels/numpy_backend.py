"""Pure-numpy kernel backend.

Vectorized over blocks of ranks; no JIT anywhere, so this is the fallback
when numba is unavailable (or CUTGLUE_BACKEND=numpy forces it). Cycle
counts come from an orbit-minimum computed by pointer doubling; ranking
and unranking use the factorial number system.
"""

from __future__ import annotations

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from .common import factorial_table, strip_pair_columns, total_pairings

_BLOCK = 1 << 15

name = "numpy"


def _unrank_block(ranks: np.ndarray, m: int, fact: np.ndarray) -> np.ndarray:
    """Decode ranks into permutation rows, lexicographic order."""
    k = ranks.shape[0]
    out = np.empty((k, m), dtype=np.int64)
    avail = np.tile(np.arange(m, dtype=np.int64), (k, 1))
    rest = ranks.astype(np.int64).copy()
    for i in range(m):
        digit, rest = np.divmod(rest, fact[m - 1 - i])
        out[:, i] = np.take_along_axis(avail, digit[:, None], axis=1)[:, 0]
        width = m - 1 - i
        if width:
            cols = np.arange(width, dtype=np.int64)
            keep = cols[None, :] + (cols[None, :] >= digit[:, None])
            avail = np.take_along_axis(avail, keep, axis=1)
    return out


def _rank_block(perms: np.ndarray, fact: np.ndarray) -> np.ndarray:
    m = perms.shape[1]
    ranks = np.zeros(perms.shape[0], dtype=np.int64)
    for i in range(m - 1):
        smaller = (perms[:, i + 1 :] < perms[:, i : i + 1]).sum(axis=1)
        ranks += smaller.astype(np.int64) * fact[m - 1 - i]
    return ranks


def _orbit_min(perms: np.ndarray) -> np.ndarray:
    """Per row: minimum element of each slot's cycle, by pointer doubling."""
    k, m = perms.shape
    om = np.tile(np.arange(m, dtype=np.int64), (k, 1))
    ptr = perms.copy()
    steps = 0 if m <= 1 else int(np.ceil(np.log2(m)))
    for _ in range(steps):
        om = np.minimum(om, np.take_along_axis(om, ptr, axis=1))
        ptr = np.take_along_axis(ptr, ptr, axis=1)
    return om


def _cycle_counts(perms: np.ndarray) -> np.ndarray:
    om = _orbit_min(perms)
    return (om == np.arange(perms.shape[1])).sum(axis=1)


def boundary_counts_by_rank(m: int, rho: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Positive and negative cycle counts for every pairing, by rank."""
    total = total_pairings(m)
    fact = factorial_table(m)
    cpos = np.empty(total, dtype=np.int8)
    cneg = np.empty(total, dtype=np.int8)
    for lo in range(0, total, _BLOCK):
        hi = min(lo + _BLOCK, total)
        perms = _unrank_block(np.arange(lo, hi, dtype=np.int64), m, fact)
        cpos[lo:hi] = _cycle_counts(perms)
        cneg[lo:hi] = _cycle_counts(perms[:, rho])
    return cpos, cneg


def move_neighbor_table(
    m: int, rho: np.ndarray, ranks: np.ndarray
) -> tuple[np.ndarray, np.ndarray]:
    """Classify every candidate move of every listed pairing.

    Returns (nbr, verdict), both (len(ranks), m*(m-1)/2). verdict holds the
    distinct-boundary count 2/3/4; nbr holds the rank of the swapped
    pairing for legal moves and -1 where the move is forbidden.
    """
    fact = factorial_table(m)
    cols = strip_pair_columns(m)
    k = ranks.shape[0]
    nbr = np.full((k, cols.shape[0]), -1, dtype=np.int64)
    verdict = np.empty((k, cols.shape[0]), dtype=np.int8)
    for lo in range(0, k, _BLOCK):
        hi = min(lo + _BLOCK, k)
        perms = _unrank_block(ranks[lo:hi], m, fact)
        pos = _orbit_min(perms)  # labels odd slots: orbits of perm
        neg = _orbit_min(perms[:, rho])  # labels even slots
        for c, (a, b) in enumerate(cols):
            same_pos = pos[:, a] == pos[:, b]
            neg_a = np.take_along_axis(neg, perms[:, a : a + 1], axis=1)[:, 0]
            neg_b = np.take_along_axis(neg, perms[:, b : b + 1], axis=1)[:, 0]
            same_neg = neg_a == neg_b
            v = np.where(same_pos & same_neg, 2, np.where(same_pos | same_neg, 3, 4))
            verdict[lo:hi, c] = v
            swapped = perms.copy()
            swapped[:, [a, b]] = perms[:, [b, a]]
            swapped_ranks = _rank_block(swapped, fact)
            nbr[lo:hi, c] = np.where(v == 3, -1, swapped_ranks)
    return nbr, verdict


def connected_component_labels(
    n_vertices: int, src: np.ndarray, dst: np.ndarray
) -> np.ndarray:
    if n_vertices == 0:
        return np.empty(0, dtype=np.int64)
    ones = np.ones(src.shape[0], dtype=np.int8)
    graph = coo_matrix((ones, (src, dst)), shape=(n_vertices, n_vertices))
    _, labels = connected_components(graph, directed=False)
    return labels.astype(np.int64)
