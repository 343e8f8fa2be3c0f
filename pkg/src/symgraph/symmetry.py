"""Automorphism search and vertex/arc-transitivity classification."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, List, Optional, Sequence, Tuple

import numpy as np

from .errors import SearchBudgetExceeded
from .graph import Graph, bfs_order, distances_from, is_connected, require_length

DEFAULT_NODE_LIMIT = 10**7

Permutation = Tuple[int, ...]


def is_automorphism(g: Graph, images: Sequence[int]) -> bool:
    """Check bijectivity and adjacency preservation edge by edge."""
    if len(images) != g.n or sorted(images) != list(range(g.n)):
        return False
    return all(g.has_edge(images[x], images[y]) for x, y in g.edges)


class _Search:
    """Backtracking over vertex images.

    Vertices are assigned in BFS order from the constrained sources. A
    candidate image must match degree, keep hop distances to every
    constrained source, and be consistent with adjacency to every vertex
    assigned so far.
    """

    def __init__(self, g: Graph, constraints, node_limit: int):
        if node_limit < 1:
            raise ValueError("node_limit must be >= 1")
        sources = [s for s, _ in constraints]
        if len(set(sources)) != len(sources):
            raise ValueError("constraint sources must be distinct")
        for s, t in constraints:
            for w in (s, t):
                if not 0 <= w < g.n:
                    raise ValueError(f"constraint vertex {w} out of range")
        self.g = g
        self.node_limit = node_limit
        self.nodes = 0
        self.fixed = dict(constraints)
        self.order = bfs_order(g, sources if sources else [0])
        self.masks = [sum(1 << y for y in nbrs) for nbrs in g.adjacency]
        self.degrees = g.degrees()
        self.anchor_dist = [
            (distances_from(g, s), distances_from(g, t)) for s, t in constraints
        ]
        # earliest-ordered neighbour already assigned when x is reached
        position = {x: i for i, x in enumerate(self.order)}
        self.parent = []
        for x in self.order:
            earlier = [y for y in g.adjacency[x] if position[y] < position[x]]
            self.parent.append(min(earlier, key=position.__getitem__) if earlier else None)

    def _candidates(self, depth, image, used_mask):
        x = self.order[depth]
        if x in self.fixed:
            pool = [self.fixed[x]]
        elif self.parent[depth] is not None:
            pool = self.g.adjacency[image[self.parent[depth]]]
        else:
            pool = range(self.g.n)
        nbr_images = 0
        for y in self.g.adjacency[x]:
            if image[y] >= 0:
                nbr_images |= 1 << image[y]
        out = []
        for c in pool:
            if used_mask >> c & 1 or self.degrees[c] != self.degrees[x]:
                continue
            if any(ds[x] != dt[c] for ds, dt in self.anchor_dist):
                continue
            if self.masks[c] & used_mask != nbr_images:
                continue
            out.append(c)
        return out

    def run(self) -> Iterator[Permutation]:
        n = self.g.n
        image = [-1] * n
        used = 0
        stack = [iter(self._candidates(0, image, used))]
        while stack:
            depth = len(stack) - 1
            x = self.order[depth]
            if image[x] >= 0:
                used &= ~(1 << image[x])
                image[x] = -1
            c = next(stack[-1], None)
            if c is None:
                stack.pop()
                continue
            self.nodes += 1
            if self.nodes > self.node_limit:
                raise SearchBudgetExceeded(self.node_limit)
            image[x] = c
            used |= 1 << c
            if depth + 1 == n:
                yield tuple(image)
                continue
            stack.append(iter(self._candidates(depth + 1, image, used)))


def iter_automorphisms(
    g: Graph, constraints=(), node_limit: int = DEFAULT_NODE_LIMIT
) -> Iterator[Permutation]:
    """Yield every automorphism satisfying ``gamma(s) == t`` for each constraint."""
    return _Search(g, list(constraints), node_limit).run()


def find_automorphism(
    g: Graph, constraints=(), node_limit: int = DEFAULT_NODE_LIMIT
) -> Optional[Permutation]:
    """First automorphism meeting the constraints, or ``None`` if there is none.

    Raises :class:`SearchBudgetExceeded` when the search visits more than
    ``node_limit`` nodes; the answer is then unknown.
    """
    return next(iter_automorphisms(g, constraints, node_limit), None)


def _search_count(g, constraints, node_limit):
    search = _Search(g, list(constraints), node_limit)
    found = next(search.run(), None)
    return found, search.nodes


@dataclass(frozen=True)
class SymmetryReport:
    """Outcome of transitivity tests.

    ``None`` in a flag means unknown (search truncated or not attempted).
    ``witness`` is the first pair that no automorphism connects.
    """

    vertex_transitive: Optional[bool]
    arc_transitive: Optional[bool]
    witness: Optional[tuple] = None
    search_nodes: int = 0
    truncated: bool = False


def _orbit(start, generators, act):
    seen = {start}
    frontier = [start]
    while frontier:
        item = frontier.pop()
        for gamma in generators:
            nxt = act(gamma, item)
            if nxt not in seen:
                seen.add(nxt)
                frontier.append(nxt)
    return seen


def is_vertex_transitive(g: Graph, node_limit: int = DEFAULT_NODE_LIMIT) -> SymmetryReport:
    """Search for ``gamma(0) = v`` for every ``v``; stops at the first failure.

    Vertices already in the orbit of 0 under the automorphisms found so far
    are skipped.
    """
    if g.degree is None:
        degs = g.degrees()
        v = next(v for v in range(g.n) if degs[v] != degs[0])
        return SymmetryReport(False, False, witness=(0, v))
    generators: List[Permutation] = []
    orbit = {0}
    nodes = 0
    for v in range(1, g.n):
        if v in orbit:
            continue
        try:
            gamma, used = _search_count(g, [(0, v)], node_limit)
        except SearchBudgetExceeded:
            return SymmetryReport(None, None, search_nodes=nodes + node_limit, truncated=True)
        nodes += used
        if gamma is None:
            return SymmetryReport(False, False, witness=(0, v), search_nodes=nodes)
        generators.append(gamma)
        orbit = _orbit(0, generators, lambda p, x: p[x])
    return SymmetryReport(True, None, search_nodes=nodes)


def is_arc_transitive(g: Graph, node_limit: int = DEFAULT_NODE_LIMIT) -> SymmetryReport:
    """Classify ``g`` as vertex- and arc-transitive.

    A fixed reference arc ``(x0, y0)`` is mapped onto every ordered arc in
    turn; arcs already in its orbit under the automorphisms found so far are
    skipped. Requires a connected graph with at least one edge.
    """
    if g.edge_count == 0:
        raise ValueError("arc-transitivity needs at least one edge")
    if not is_connected(g):
        raise ValueError("arc-transitivity is only classified for connected graphs")
    vt = is_vertex_transitive(g, node_limit)
    if vt.vertex_transitive is not True:
        return vt
    x0, y0 = g.arcs[0]
    generators: List[Permutation] = []
    orbit = {(x0, y0)}
    nodes = vt.search_nodes
    for arc in g.arcs:
        if arc in orbit:
            continue
        try:
            gamma, used = _search_count(g, [(x0, arc[0]), (y0, arc[1])], node_limit)
        except SearchBudgetExceeded:
            return SymmetryReport(True, None, search_nodes=nodes + node_limit, truncated=True)
        nodes += used
        if gamma is None:
            return SymmetryReport(True, False, witness=((x0, y0), arc), search_nodes=nodes)
        generators.append(gamma)
        orbit = _orbit((x0, y0), generators, lambda p, a: (p[a[0]], p[a[1]]))
    return SymmetryReport(True, True, search_nodes=nodes)


classify = is_arc_transitive


def pull_back(g: Graph, gamma: Sequence[int], u) -> np.ndarray:
    """``(gamma u)(x) = u(gamma(x))``."""
    u = np.asarray(u, dtype=float)
    require_length(g, u, gamma)
    return u[np.asarray(gamma, dtype=np.intp)]


__all__ = [
    "DEFAULT_NODE_LIMIT",
    "Permutation",
    "SymmetryReport",
    "classify",
    "find_automorphism",
    "is_arc_transitive",
    "is_automorphism",
    "is_vertex_transitive",
    "iter_automorphisms",
    "pull_back",
]
