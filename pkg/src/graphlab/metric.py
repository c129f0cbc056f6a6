"""Distances, transmissions, diameter, and Mostar edge counts.

For Gamma_k there is a constant-time distance rule: distinct divisors are at
distance 1 when comparable and 2 otherwise, because 1 and n are adjacent to
everything.  A breadth-first oracle valid for any connected graph backs that
rule up and serves the general divisor graphs.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterator

from .graphs import DprimeGraph, _comparable


class DisconnectedGraphError(ValueError):
    """Raised when a distance query meets an unreachable vertex pair."""


@dataclass
class DistanceMatrix:
    """Symmetric all-pairs distance matrix in canonical vertex order."""

    labels: list[str]
    rows: list[list[int]]

    def entry(self, i: int, j: int) -> int:
        return self.rows[i][j]

    def __getitem__(self, i: int) -> list[int]:
        return self.rows[i]

    def to_csv(self) -> str:
        """Header row of vertex labels, then one numeric row per vertex."""
        lines = [",".join(self.labels)]
        lines.extend(",".join(str(d) for d in row) for row in self.rows)
        return "\n".join(lines) + "\n"


def distance_fast(g: DprimeGraph, i: int, j: int) -> int:
    """Distance in Gamma_k: 0, 1 if comparable, else 2."""
    if i == j:
        return 0
    return 1 if _comparable(g.mask(i), g.mask(j)) else 2


def _fast_row(g: DprimeGraph, i: int) -> list[int]:
    mi = g.mask(i)
    row = [1 if _comparable(mi, m) else 2 for m in g.masks()]
    row[i] = 0
    return row


def _label_of(g, i: int) -> str:
    try:
        return g.labels()[i]
    except (AttributeError, IndexError):
        return str(i)


def bfs_row(g, source: int) -> list[int]:
    """Distances from one vertex by breadth-first search (any graph shape
    exposing order and neighbors); raises if some vertex is unreachable."""
    dist = [-1] * g.order
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in g.neighbors(u):
            if dist[w] < 0:
                dist[w] = dist[u] + 1
                queue.append(w)
    for w, d in enumerate(dist):
        if d < 0:
            raise DisconnectedGraphError(
                f"no path from {_label_of(g, source)!r} to {_label_of(g, w)!r}"
            )
    return dist


def distance_rows(g) -> Iterator[list[int]]:
    """Stream the distance matrix row by row: the Gamma_k rule for
    DprimeGraph, breadth-first search for anything else."""
    if isinstance(g, DprimeGraph):
        for i in range(g.order):
            yield _fast_row(g, i)
    else:
        for i in range(g.order):
            yield bfs_row(g, i)


def distance_matrix(g) -> DistanceMatrix:
    """Full matrix via distance_rows."""
    return DistanceMatrix(g.labels(), list(distance_rows(g)))


def distance_matrix_bfs(g) -> DistanceMatrix:
    """Full matrix via the breadth-first oracle only (cross-check path)."""
    return DistanceMatrix(g.labels(), [bfs_row(g, i) for i in range(g.order)])


def transmission(g, i: int) -> int:
    """Sum of distances from vertex i to every vertex."""
    if isinstance(g, DprimeGraph):
        return sum(_fast_row(g, i))
    return sum(bfs_row(g, i))


def transmissions(g) -> list[int]:
    return [sum(row) for row in distance_rows(g)]


def diameter(g) -> int:
    """Largest distance over all pairs."""
    return max(max(row) for row in distance_rows(g))


@dataclass
class EdgeCloserCounts:
    """For an edge (u, v): how many vertices sit strictly closer to each end.

    Each endpoint counts itself, so n_u >= 1, n_v >= 1; equidistant vertices
    count for neither side.
    """

    n_u: int
    n_v: int


def mostar_counts(g, edge: tuple[int, int]) -> EdgeCloserCounts:
    """Closer-vertex counts for one edge, from two distance rows."""
    i, j = edge
    if not g.adjacent(i, j):
        raise ValueError(f"({i}, {j}) is not an edge")
    if isinstance(g, DprimeGraph):
        ri, rj = _fast_row(g, i), _fast_row(g, j)
    else:
        ri, rj = bfs_row(g, i), bfs_row(g, j)
    n_u = sum(1 for a, b in zip(ri, rj) if a < b)
    n_v = sum(1 for a, b in zip(ri, rj) if b < a)
    return EdgeCloserCounts(n_u, n_v)
