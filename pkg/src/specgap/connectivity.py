"""Vertex connectivity and internally vertex-disjoint paths.

Both are computed by unit-capacity max-flow on the standard vertex-split
digraph: every vertex v becomes an arc v_in -> v_out of capacity 1 (the
endpoints s, t are not constrained), and every edge uv becomes the arcs
u_out -> v_in and v_out -> u_in.  The max-flow value then equals the
maximum number of internally vertex-disjoint s-t paths, and (for
non-adjacent s, t) the minimum s-t vertex cut.

Augmenting paths are found by BFS, so each augmentation is a shortest one;
flow values are at most n, which keeps this exact and fast at the scales
the package targets.
"""

from __future__ import annotations

from collections import deque

from .graphs import Graph, GraphError, is_connected

__all__ = [
    "max_vertex_disjoint_paths",
    "disjoint_paths",
    "vertex_connectivity",
    "is_k_connected",
]


class _SplitFlow:
    """Unit-capacity max-flow instance on the vertex-split digraph."""

    def __init__(self, g: Graph, s: int, t: int):
        # Node ids: in(v) = 2v, out(v) = 2v + 1.
        self.source = 2 * s + 1
        self.sink = 2 * t
        self.residual: dict[tuple[int, int], int] = {}
        self.arcs: list[tuple[int, int]] = []
        nbrs: list[set[int]] = [set() for _ in range(2 * g.n)]

        def add_arc(a: int, b: int) -> None:
            self.residual[(a, b)] = 1
            self.residual.setdefault((b, a), 0)
            self.arcs.append((a, b))
            nbrs[a].add(b)
            nbrs[b].add(a)

        for v in range(g.n):
            if v != s and v != t:
                add_arc(2 * v, 2 * v + 1)
        for u, v in g.edges():
            add_arc(2 * u + 1, 2 * v)
            add_arc(2 * v + 1, 2 * u)
        self.nbrs = [sorted(ns) for ns in nbrs]

    def _augment_once(self) -> bool:
        """One BFS augmentation; returns False when no path remains."""
        parent: dict[int, int] = {self.source: self.source}
        queue = deque([self.source])
        while queue:
            a = queue.popleft()
            if a == self.sink:
                break
            for b in self.nbrs[a]:
                if b not in parent and self.residual.get((a, b), 0) > 0:
                    parent[b] = a
                    queue.append(b)
        if self.sink not in parent:
            return False
        b = self.sink
        while b != self.source:
            a = parent[b]
            self.residual[(a, b)] -= 1
            self.residual[(b, a)] += 1
            b = a
        return True

    def max_flow(self) -> int:
        value = 0
        while self._augment_once():
            value += 1
        return value

    def path_decomposition(self) -> list[list[int]]:
        """Original-vertex paths carrying the current flow, one per unit."""
        out_flow: dict[int, list[int]] = {}
        for a, b in self.arcs:
            if self.residual[(a, b)] == 0:  # saturated: carries one unit
                out_flow.setdefault(a, []).append(b)
        for targets in out_flow.values():
            targets.sort()
        paths: list[list[int]] = []
        while out_flow.get(self.source):
            node = self.source
            node_path = [node]
            while node != self.sink:
                nxt = out_flow[node].pop(0)
                node_path.append(nxt)
                node = nxt
            # Node ids alternate out(v)/in(v); original vertices are the
            # source plus every in-node on the walk.
            vertices = [self.source // 2]
            vertices.extend(p // 2 for p in node_path if p % 2 == 0)
            paths.append(vertices)
        return paths


def _check_pair(g: Graph, s: int, t: int) -> None:
    if not (0 <= s < g.n and 0 <= t < g.n):
        raise GraphError(f"vertices ({s}, {t}) out of range for n={g.n}")
    if s == t:
        raise GraphError("source and sink must differ")


def max_vertex_disjoint_paths(g: Graph, s: int, t: int) -> int:
    """Maximum number of internally vertex-disjoint s-t paths.

    A direct s-t edge counts as one path.  For non-adjacent s, t this equals
    the minimum vertex cut separating them.
    """
    _check_pair(g, s, t)
    return _SplitFlow(g, s, t).max_flow()


def disjoint_paths(g: Graph, s: int, t: int) -> list[list[int]]:
    """A maximum system of internally vertex-disjoint s-t paths.

    Each path is a vertex list starting at s and ending at t; internal
    vertices are pairwise disjoint across paths.
    """
    _check_pair(g, s, t)
    network = _SplitFlow(g, s, t)
    network.max_flow()
    return network.path_decomposition()


def vertex_connectivity(g: Graph) -> int:
    """Vertex connectivity: by convention n-1 for complete graphs, 0 when
    disconnected (or on fewer than two vertices).

    Uses the standard pair schedule: fix a minimum-degree vertex v, take
    flows to all non-neighbors of v and between non-adjacent pairs of
    neighbors of v.  Every minimum cut misses one of those pairs, so the
    minimum over the schedule is exact.
    """
    if g.n <= 1:
        return 0
    if not is_connected(g):
        return 0
    if g.m == g.n * (g.n - 1) // 2:
        return g.n - 1
    degrees = g.degrees()
    v = min(range(g.n), key=lambda u: degrees[u])
    best = g.n - 1
    neighborhood = set(g.adj[v]) | {v}
    for u in range(g.n):
        if u not in neighborhood:
            best = min(best, max_vertex_disjoint_paths(g, v, u))
    nbrs = g.adj[v]
    for i, x in enumerate(nbrs):
        for y in nbrs[i + 1:]:
            if not g.has_edge(x, y):
                best = min(best, max_vertex_disjoint_paths(g, x, y))
    return best


def is_k_connected(g: Graph, k: int) -> bool:
    """Whether the vertex connectivity is at least k (k must be >= 1)."""
    if k < 1:
        raise GraphError("k must be at least 1")
    return vertex_connectivity(g) >= k
