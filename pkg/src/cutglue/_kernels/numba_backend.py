"""Numba kernel backend.

Same contract as the numpy backend; hot loops are @njit compiled and the
move table is generated in parallel over pairings. cache=True keeps the
compiled kernels on disk across runs.
"""

from __future__ import annotations

import numpy as np
from numba import njit, prange

from .common import factorial_table, total_pairings

name = "numba"


@njit(cache=True)
def _unrank_into(rank, m, fact, avail, out):
    for i in range(m):
        avail[i] = i
    rest = rank
    width = m
    for i in range(m):
        f = fact[m - 1 - i]
        digit = rest // f
        rest -= digit * f
        out[i] = avail[digit]
        for j in range(digit, width - 1):
            avail[j] = avail[j + 1]
        width -= 1


@njit(cache=True)
def _rank_of(perm, m, fact):
    rank = 0
    for i in range(m):
        smaller = 0
        for j in range(i + 1, m):
            if perm[j] < perm[i]:
                smaller += 1
        rank += smaller * fact[m - 1 - i]
    return rank


@njit(cache=True)
def _orbit_min_into(perm, out):
    # out[i] = smallest slot on i's cycle
    m = perm.shape[0]
    for i in range(m):
        out[i] = -1
    for i in range(m):
        if out[i] >= 0:
            continue
        j = i
        while out[j] < 0:  # i is the smallest unseen slot, hence its cycle min
            out[j] = i
            j = perm[j]


@njit(cache=True)
def _census(m, rho, fact, total, cpos, cneg):
    perm = np.empty(m, dtype=np.int64)
    avail = np.empty(m, dtype=np.int64)
    comp = np.empty(m, dtype=np.int64)
    orbit = np.empty(m, dtype=np.int64)
    for r in range(total):
        _unrank_into(r, m, fact, avail, perm)
        _orbit_min_into(perm, orbit)
        npos = 0
        for i in range(m):
            if orbit[i] == i:
                npos += 1
        for j in range(m):
            comp[j] = perm[rho[j]]
        _orbit_min_into(comp, orbit)
        nneg = 0
        for i in range(m):
            if orbit[i] == i:
                nneg += 1
        cpos[r] = npos
        cneg[r] = nneg


def boundary_counts_by_rank(m: int, rho: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Positive and negative cycle counts for every pairing, by rank."""
    total = total_pairings(m)
    fact = factorial_table(m)
    cpos = np.empty(total, dtype=np.int8)
    cneg = np.empty(total, dtype=np.int8)
    _census(m, rho, fact, total, cpos, cneg)
    return cpos, cneg


@njit(cache=True, parallel=True)
def _neighbor_table(m, rho, fact, ranks, nbr, verdict):
    for t in prange(ranks.shape[0]):
        perm = np.empty(m, dtype=np.int64)
        avail = np.empty(m, dtype=np.int64)
        comp = np.empty(m, dtype=np.int64)
        pos = np.empty(m, dtype=np.int64)
        neg = np.empty(m, dtype=np.int64)
        _unrank_into(ranks[t], m, fact, avail, perm)
        _orbit_min_into(perm, pos)
        for j in range(m):
            comp[j] = perm[rho[j]]
        _orbit_min_into(comp, neg)
        c = 0
        for a in range(m):
            for b in range(a + 1, m):
                same_pos = pos[a] == pos[b]
                same_neg = neg[perm[a]] == neg[perm[b]]
                if same_pos and same_neg:
                    v = 2
                elif same_pos or same_neg:
                    v = 3
                else:
                    v = 4
                verdict[t, c] = v
                if v == 3:
                    nbr[t, c] = -1
                else:
                    tmp = perm[a]
                    perm[a] = perm[b]
                    perm[b] = tmp
                    nbr[t, c] = _rank_of(perm, m, fact)
                    tmp = perm[a]
                    perm[a] = perm[b]
                    perm[b] = tmp
                c += 1


def move_neighbor_table(
    m: int, rho: np.ndarray, ranks: np.ndarray
) -> tuple[np.ndarray, np.ndarray]:
    """Classify every candidate move of every listed pairing.

    Same contract as the numpy backend; rows are processed in parallel.
    """
    fact = factorial_table(m)
    n_cols = m * (m - 1) // 2
    nbr = np.empty((ranks.shape[0], n_cols), dtype=np.int64)
    verdict = np.empty((ranks.shape[0], n_cols), dtype=np.int8)
    _neighbor_table(m, rho, fact, np.ascontiguousarray(ranks, dtype=np.int64), nbr, verdict)
    return nbr, verdict


@njit(cache=True)
def _union_find_labels(n, src, dst):
    parent = np.arange(n, dtype=np.int64)
    for k in range(src.shape[0]):
        a = src[k]
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        b = dst[k]
        while parent[b] != b:
            parent[b] = parent[parent[b]]
            b = parent[b]
        if a < b:
            parent[b] = a
        elif b < a:
            parent[a] = b
    labels = np.empty(n, dtype=np.int64)
    for i in range(n):
        r = i
        while parent[r] != r:
            r = parent[r]
        labels[i] = r
    return labels


def connected_component_labels(
    n_vertices: int, src: np.ndarray, dst: np.ndarray
) -> np.ndarray:
    if n_vertices == 0:
        return np.empty(0, dtype=np.int64)
    return _union_find_labels(
        n_vertices,
        np.ascontiguousarray(src, dtype=np.int64),
        np.ascontiguousarray(dst, dtype=np.int64),
    )
