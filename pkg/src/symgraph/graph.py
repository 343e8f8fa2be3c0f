"""Immutable simple undirected graph on vertices 0..n-1."""

from __future__ import annotations

import warnings
from collections import deque
from functools import cached_property
from typing import Iterable, Sequence, Tuple

import numpy as np

from .errors import (
    DegreeZeroError,
    DuplicateEdgeWarning,
    LengthMismatchError,
    NotRegularError,
    SelfLoopError,
    VertexOutOfRangeError,
)

Edge = Tuple[int, int]


class Graph:
    """A simple undirected graph with dense integer vertices.

    Vertices are ``0..n-1``. ``adjacency[x]`` is the sorted tuple of
    neighbours of ``x``. ``degree`` is the common degree when the graph is
    regular and ``None`` otherwise.

    Instances are immutable; build them with :func:`from_edge_list` or the
    generators in :mod:`symgraph.generators`.
    """

    def __init__(self, n: int, adjacency: Sequence[Iterable[int]]):
        if n < 1:
            raise ValueError("a graph needs at least one vertex")
        if len(adjacency) != n:
            raise ValueError(f"adjacency has {len(adjacency)} rows, expected {n}")
        adj = tuple(tuple(sorted(set(nbrs))) for nbrs in adjacency)
        half = 0
        for x, nbrs in enumerate(adj):
            for y in nbrs:
                if not 0 <= y < n:
                    raise VertexOutOfRangeError(y, n)
                if y == x:
                    raise SelfLoopError(x)
            half += len(nbrs)
        nbr_sets = [frozenset(nbrs) for nbrs in adj]
        for x, nbrs in enumerate(adj):
            for y in nbrs:
                if x not in nbr_sets[y]:
                    raise ValueError(f"adjacency is not symmetric at ({x}, {y})")
        degrees = {len(nbrs) for nbrs in adj}
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "adjacency", adj)
        object.__setattr__(self, "edge_count", half // 2)
        object.__setattr__(self, "degree", degrees.pop() if len(degrees) == 1 else None)
        object.__setattr__(self, "_nbr_sets", tuple(nbr_sets))

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adjacency == other.adjacency

    def __hash__(self):
        return hash((self.n, self.adjacency))

    def __repr__(self):
        d = "irregular" if self.degree is None else f"d={self.degree}"
        return f"Graph(n={self.n}, edges={self.edge_count}, {d})"

    @property
    def is_regular(self) -> bool:
        return self.degree is not None

    @property
    def is_complete(self) -> bool:
        return self.edge_count == self.n * (self.n - 1) // 2

    def neighbors(self, x: int) -> Tuple[int, ...]:
        return self.adjacency[x]

    def has_edge(self, x: int, y: int) -> bool:
        return y in self._nbr_sets[x]

    def degrees(self) -> Tuple[int, ...]:
        return tuple(len(nbrs) for nbrs in self.adjacency)

    @cached_property
    def edges(self) -> Tuple[Edge, ...]:
        """Edges as ``(min, max)`` pairs in ascending order."""
        return tuple((x, y) for x in range(self.n) for y in self.adjacency[x] if x < y)

    @cached_property
    def edge_array(self) -> np.ndarray:
        """``(#E, 2)`` integer array of :attr:`edges`."""
        arr = np.array(self.edges, dtype=np.intp).reshape(-1, 2)
        arr.flags.writeable = False
        return arr

    @cached_property
    def arcs(self) -> Tuple[Edge, ...]:
        """All ordered adjacent pairs, sorted lexicographically."""
        return tuple((x, y) for x in range(self.n) for y in self.adjacency[x])

    def adjacency_matrix(self) -> np.ndarray:
        a = np.zeros((self.n, self.n))
        e = self.edge_array
        a[e[:, 0], e[:, 1]] = 1.0
        a[e[:, 1], e[:, 0]] = 1.0
        return a

    def edge_set(self) -> frozenset:
        return frozenset(self.edges)


def from_edge_list(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    """Build a graph from vertex pairs.

    Pairs are symmetrized. A pair listed twice (in either orientation) is
    stored once and reported with a :class:`DuplicateEdgeWarning`.
    """
    if n < 1:
        raise ValueError("a graph needs at least one vertex")
    adj = [set() for _ in range(n)]
    duplicates = []
    for pair in edges:
        u, v = (int(w) for w in pair)
        for w in (u, v):
            if not 0 <= w < n:
                raise VertexOutOfRangeError(w, n)
        if u == v:
            raise SelfLoopError(u)
        if v in adj[u]:
            duplicates.append((min(u, v), max(u, v)))
            continue
        adj[u].add(v)
        adj[v].add(u)
    if duplicates:
        warnings.warn(
            f"{len(duplicates)} duplicate edge(s) ignored, first {duplicates[0]}",
            DuplicateEdgeWarning,
            stacklevel=2,
        )
    return Graph(n, adj)


def is_connected(g: Graph) -> bool:
    seen = bytearray(g.n)
    seen[0] = 1
    queue = deque([0])
    count = 1
    while queue:
        x = queue.popleft()
        for y in g.adjacency[x]:
            if not seen[y]:
                seen[y] = 1
                count += 1
                queue.append(y)
    return count == g.n


def bfs_order(g: Graph, roots: Sequence[int]) -> list:
    """Vertices in breadth-first order from ``roots``; unreachable ones appended."""
    seen = bytearray(g.n)
    order = []
    queue: deque = deque()
    for r in roots:
        if not seen[r]:
            seen[r] = 1
            queue.append(r)
    while True:
        while queue:
            x = queue.popleft()
            order.append(x)
            for y in g.adjacency[x]:
                if not seen[y]:
                    seen[y] = 1
                    queue.append(y)
        rest = next((v for v in range(g.n) if not seen[v]), None)
        if rest is None:
            return order
        seen[rest] = 1
        queue.append(rest)


def distances_from(g: Graph, source: int) -> np.ndarray:
    """Hop distances from ``source``; -1 marks unreachable vertices."""
    dist = np.full(g.n, -1, dtype=np.int64)
    dist[source] = 0
    queue = deque([source])
    while queue:
        x = queue.popleft()
        for y in g.adjacency[x]:
            if dist[y] < 0:
                dist[y] = dist[x] + 1
                queue.append(y)
    return dist


def require_length(g: Graph, *functions) -> None:
    for u in functions:
        if len(u) != g.n:
            raise LengthMismatchError(len(u), g.n)


def regular_degree(g: Graph) -> int:
    """The degree of a regular graph with ``d >= 1``; raises otherwise."""
    if g.degree is None:
        raise NotRegularError(f"graph is not regular (degrees {sorted(set(g.degrees()))})")
    if g.degree == 0:
        raise DegreeZeroError("graph has no edges")
    return g.degree


__all__ = [
    "Edge",
    "Graph",
    "bfs_order",
    "distances_from",
    "from_edge_list",
    "is_connected",
    "regular_degree",
    "require_length",
]
