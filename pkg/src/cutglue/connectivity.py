"""Move graphs on signature classes: components, paths, class scans.

Vertices of a move graph are all pairings of one signature; edges are
legal moves. Legal moves never change the signature, so edges stay inside
the class; that is asserted defensively on every generated edge.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass

import numpy as np

from . import _kernels
from ._kernels.common import canonical_labels, even_slot_successor
from .boundary import signature
from .enumeration import (
    DEFAULT_BUDGET,
    check_budget,
    pairing_from_rank,
    pairing_rank,
    signature_census,
)
from .moves import Move, apply_move, legal_moves
from .surface import Pairing, SurfaceSpec


class NotConnectedError(RuntimeError):
    """The two pairings lie in distinct move-graph components."""


class SignatureMismatchError(ValueError):
    """No move path can ever join pairings of different signatures."""


@dataclass(frozen=True)
class MoveGraph:
    surface: SurfaceSpec
    signature_class: int
    class_ranks: np.ndarray  # sorted enumeration ranks of the class members
    component_labels: np.ndarray  # one label per class member, 0,1,... stable
    edge_count: int
    edges: tuple[tuple[int, int], ...] | None = None  # class-index pairs, on request

    @property
    def vertex_count(self) -> int:
        return int(self.class_ranks.shape[0])

    @property
    def component_count(self) -> int:
        if self.component_labels.size == 0:
            return 0
        return int(self.component_labels.max()) + 1

    def rank_index(self, rank: int) -> int:
        i = int(np.searchsorted(self.class_ranks, rank))
        if i == self.vertex_count or self.class_ranks[i] != rank:
            raise KeyError(f"rank {rank} not in signature class {self.signature_class}")
        return i

    def component_of(self, p: Pairing) -> int:
        return int(self.component_labels[self.rank_index(pairing_rank(p))])

    def member(self, index: int) -> Pairing:
        return pairing_from_rank(self.surface, int(self.class_ranks[index]))


def _class_components(
    surface: SurfaceSpec, class_ranks: np.ndarray, keep_edges: bool
) -> tuple[np.ndarray, int, tuple[tuple[int, int], ...] | None]:
    backend = _kernels.get_backend()
    rho = even_slot_successor(surface.component_sizes)
    nbr, _ = backend.move_neighbor_table(surface.total_pairs, rho, class_ranks)

    total = math.factorial(surface.total_pairs)
    rank_to_index = np.full(total, -1, dtype=np.int64)
    rank_to_index[class_ranks] = np.arange(class_ranks.shape[0], dtype=np.int64)

    src_rows, _ = np.nonzero(nbr >= 0)
    dst_ranks = nbr[nbr >= 0]
    dst_rows = rank_to_index[dst_ranks]
    if np.any(dst_rows < 0):
        raise AssertionError("legal move left its signature class")

    labels = canonical_labels(
        backend.connected_component_labels(class_ranks.shape[0], src_rows, dst_rows)
    )
    k = max(class_ranks.shape[0], 1)
    edge_key = np.minimum(src_rows, dst_rows) * k + np.maximum(src_rows, dst_rows)
    unique_keys = np.unique(edge_key)
    edges = None
    if keep_edges:
        edges = tuple((int(key // k), int(key % k)) for key in unique_keys)
    return labels, int(unique_keys.shape[0]), edges


def build_move_graph(
    surface: SurfaceSpec,
    signature_class: int,
    keep_edges: bool = False,
    budget: int = DEFAULT_BUDGET,
) -> MoveGraph:
    """Assemble the move graph of one signature class."""
    check_budget(surface, budget)
    sig = signature_census(surface)
    class_ranks = np.flatnonzero(sig == signature_class).astype(np.int64)
    labels, edge_count, edges = _class_components(surface, class_ranks, keep_edges)
    return MoveGraph(
        surface=surface,
        signature_class=signature_class,
        class_ranks=class_ranks,
        component_labels=labels,
        edge_count=edge_count,
        edges=edges,
    )


def conjecture_scan(
    surface: SurfaceSpec, budget: int = DEFAULT_BUDGET
) -> dict[int, int]:
    """Component count of every nonempty signature class, largest first."""
    check_budget(surface, budget)
    sig = signature_census(surface)
    out: dict[int, int] = {}
    for value in sorted(np.unique(sig), reverse=True):
        class_ranks = np.flatnonzero(sig == value).astype(np.int64)
        labels, _, _ = _class_components(surface, class_ranks, keep_edges=False)
        out[int(value)] = int(labels.max()) + 1 if labels.size else 0
    return out


@dataclass(frozen=True)
class MovePath:
    start: Pairing
    steps: tuple[Move, ...]
    end: Pairing

    def replay(self) -> Pairing:
        """Re-apply every step from the start; must land on the end."""
        p = self.start
        for move in self.steps:
            p = apply_move(p, move)
        return p


def find_path(a: Pairing, b: Pairing) -> MovePath:
    """Shortest legal-move path from a to b, by breadth-first search."""
    if a.surface != b.surface:
        raise ValueError("pairings live on different surfaces")
    sig_a, sig_b = signature(a), signature(b)
    if sig_a != sig_b:
        raise SignatureMismatchError(
            f"signature {sig_a} cannot reach signature {sig_b}"
        )
    parent: dict[tuple, tuple] = {a.pairs: ()}
    queue = deque([a])
    while queue:
        p = queue.popleft()
        if p.pairs == b.pairs:
            steps = []
            key = p.pairs
            while parent[key]:
                prev_key, move = parent[key]
                steps.append(move)
                key = prev_key
            path = MovePath(start=a, steps=tuple(reversed(steps)), end=b)
            assert path.replay().pairs == b.pairs
            return path
        for move, _ in legal_moves(p):
            q = apply_move(p, move)
            if q.pairs not in parent:
                parent[q.pairs] = (p.pairs, move)
                queue.append(q)
    raise NotConnectedError(
        f"no move path joins {a.canonical_string()} and {b.canonical_string()}"
    )


def export_dot(graph: MoveGraph) -> str:
    """Render a move graph in DOT syntax, one line per vertex and edge."""
    if graph.edges is None:
        raise ValueError("build the graph with keep_edges=True to export it")
    lines = ["graph {"]
    in_edge = set()
    for i, j in graph.edges:
        in_edge.add(i)
        in_edge.add(j)
    for i in range(graph.vertex_count):
        if i not in in_edge:
            lines.append(f'  "{graph.member(i).canonical_string()}";')
    for i, j in graph.edges:
        lines.append(
            f'  "{graph.member(i).canonical_string()}" -- '
            f'"{graph.member(j).canonical_string()}";'
        )
    lines.append("}")
    return "\n".join(lines) + "\n"
