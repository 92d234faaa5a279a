"""Simple undirected graphs on vertex set {0, ..., n-1}.

The :class:`Graph` type is immutable (frozen dataclass over neighbor tuples),
which keeps derived quantities safe to cache at call sites and makes graphs
usable as dict keys during isomorphism bucketing.  Construction goes through
:func:`build_graph`, which validates vertex ranges and rejects loops and
duplicate edges.

Two text formats are supported: the graph6 ASCII encoding and a plain
edge-list format (first non-comment line is the vertex count, every following
line one ``u v`` pair, ``#`` starts a comment).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence


class GraphError(ValueError):
    """Invalid graph data or an operation applied to an unsuitable graph."""


class DisconnectedGraphError(GraphError):
    """An operation that needs a connected graph was given a disconnected one."""


@dataclass(frozen=True)
class Graph:
    """Immutable simple undirected graph.

    Attributes:
        n: number of vertices; vertices are the integers ``0..n-1``.
        adj: per-vertex sorted tuples of neighbors.
    """

    n: int
    adj: tuple[tuple[int, ...], ...]

    @property
    def m(self) -> int:
        """Number of edges."""
        return sum(len(nbrs) for nbrs in self.adj) // 2

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def degrees(self) -> list[int]:
        return [len(nbrs) for nbrs in self.adj]

    def max_degree(self) -> int:
        if self.n == 0:
            raise GraphError("max_degree is undefined for the empty graph")
        return max(self.degrees())

    def min_degree(self) -> int:
        if self.n == 0:
            raise GraphError("min_degree is undefined for the empty graph")
        return min(self.degrees())

    def is_regular(self) -> bool:
        degs = self.degrees()
        return self.n == 0 or min(degs) == max(degs)

    def has_edge(self, u: int, v: int) -> bool:
        if not (0 <= u < self.n and 0 <= v < self.n):
            return False
        # Neighbor tuples are sorted but short in practice; linear scan is fine.
        return v in self.adj[u]

    def edges(self) -> list[tuple[int, int]]:
        """All edges as sorted ``(u, v)`` pairs with ``u < v``, in order."""
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    def vertices(self) -> range:
        return range(self.n)

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"Graph(n={self.n}, m={self.m})"


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Create a validated :class:`Graph` from a vertex count and edge pairs."""
    if n < 0:
        raise GraphError(f"vertex count must be nonnegative, got {n}")
    nbrs: list[set[int]] = [set() for _ in range(n)]
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
        if u == v:
            raise GraphError(f"loop at vertex {u} is not allowed")
        # Duplicate pairs (in either order) collapse: edges have set semantics.
        nbrs[u].add(v)
        nbrs[v].add(u)
    return Graph(n, tuple(tuple(sorted(s)) for s in nbrs))


def delete_edge(g: Graph, edge: tuple[int, int]) -> Graph:
    """Return a copy of ``g`` with one edge removed."""
    u, v = edge
    if not g.has_edge(u, v):
        raise GraphError(f"edge ({u}, {v}) not present")
    adj = list(g.adj)
    adj[u] = tuple(w for w in adj[u] if w != v)
    adj[v] = tuple(w for w in adj[v] if w != u)
    return Graph(g.n, tuple(adj))


def induced_subgraph(g: Graph, vertices: Sequence[int]) -> Graph:
    """Subgraph induced on ``vertices``, relabeled to ``0..len(vertices)-1``."""
    keep = sorted(set(vertices))
    index = {v: i for i, v in enumerate(keep)}
    edges = [
        (index[u], index[v])
        for u in keep
        for v in g.adj[u]
        if u < v and v in index
    ]
    return build_graph(len(keep), edges)


def bfs_distances(g: Graph, source: int) -> list[int]:
    """Unweighted distances from ``source``; ``-1`` marks unreachable vertices."""
    dist = [-1] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in g.adj[u]:
            if dist[w] < 0:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def connected_components(g: Graph) -> list[list[int]]:
    """Vertex sets of the connected components, each sorted, ordered by minimum."""
    seen = [False] * g.n
    comps: list[list[int]] = []
    for s in range(g.n):
        if seen[s]:
            continue
        comp = []
        stack = [s]
        seen[s] = True
        while stack:
            u = stack.pop()
            comp.append(u)
            for w in g.adj[u]:
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
        comps.append(sorted(comp))
    return comps


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    return bfs_distances(g, 0).count(-1) == 0


def diameter(g: Graph) -> int:
    """Largest BFS eccentricity; raises on disconnected input."""
    if g.n == 0:
        raise GraphError("diameter is undefined for the empty graph")
    best = 0
    for v in range(g.n):
        dist = bfs_distances(g, v)
        ecc = max(dist)
        if min(dist) < 0:
            raise DisconnectedGraphError("diameter is infinite: graph is disconnected")
        best = max(best, ecc)
    return best


def is_bipartite(g: Graph) -> bool:
    """Two-colorability check by BFS over every component."""
    color = [-1] * g.n
    for s in range(g.n):
        if color[s] >= 0:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.adj[u]:
                if color[w] < 0:
                    color[w] = 1 - color[u]
                    queue.append(w)
                elif color[w] == color[u]:
                    return False
    return True


@dataclass(frozen=True)
class BoundContext:
    """The graph parameters that the eigenvalue-gap bounds consume."""

    n: int
    max_degree: int
    min_degree: int
    diameter: int
    connectivity: int
    m: int


def bound_context(g: Graph) -> BoundContext:
    """Measure the parameters of a connected graph on at least two vertices."""
    if g.n < 2:
        raise GraphError("bound parameters need at least two vertices")
    if not is_connected(g):
        raise DisconnectedGraphError("bound parameters need a connected graph")
    from .connectivity import vertex_connectivity  # deferred: avoids import cycle

    return BoundContext(
        n=g.n,
        max_degree=g.max_degree(),
        min_degree=g.min_degree(),
        diameter=diameter(g),
        connectivity=vertex_connectivity(g),
        m=g.m,
    )


# ---------------------------------------------------------------------------
# graph6 encoding
# ---------------------------------------------------------------------------

_G6_HEADER = ">>graph6<<"


def _g6_encode_size(n: int) -> str:
    if n < 0:
        raise GraphError("graph6 cannot encode a negative vertex count")
    if n <= 62:
        return chr(63 + n)
    if n <= 258047:
        chunks = [(n >> 12) & 63, (n >> 6) & 63, n & 63]
        return "~" + "".join(chr(63 + c) for c in chunks)
    if n <= 68719476735:
        chunks = [(n >> shift) & 63 for shift in (30, 24, 18, 12, 6, 0)]
        return "~~" + "".join(chr(63 + c) for c in chunks)
    raise GraphError(f"vertex count {n} exceeds the graph6 limit")


def _g6_decode_size(data: str) -> tuple[int, str]:
    if not data:
        raise GraphError("empty graph6 string")
    if data[0] != "~":
        return ord(data[0]) - 63, data[1:]
    if len(data) >= 2 and data[1] != "~":
        if len(data) < 4:
            raise GraphError("truncated graph6 size field")
        n = 0
        for c in data[1:4]:
            n = (n << 6) | (ord(c) - 63)
        return n, data[4:]
    if len(data) < 8:
        raise GraphError("truncated graph6 size field")
    n = 0
    for c in data[2:8]:
        n = (n << 6) | (ord(c) - 63)
    return n, data[8:]


def graph6_dumps(g: Graph) -> str:
    """Encode a graph in graph6 format (single line, no header)."""
    out = [_g6_encode_size(g.n)]
    buf = 0
    nbits = 0
    for col in range(1, g.n):
        col_adj = set(g.adj[col])
        for row in range(col):
            buf = (buf << 1) | (1 if row in col_adj else 0)
            nbits += 1
            if nbits == 6:
                out.append(chr(63 + buf))
                buf = 0
                nbits = 0
    if nbits:
        buf <<= 6 - nbits
        out.append(chr(63 + buf))
    return "".join(out)


def graph6_loads(text: str) -> Graph:
    """Decode one graph6 line (an optional ``>>graph6<<`` header is accepted)."""
    data = text.strip()
    if data.startswith(_G6_HEADER):
        data = data[len(_G6_HEADER):]
    if not data:
        raise GraphError("empty graph6 string")
    for c in data:
        if not 63 <= ord(c) <= 126:
            raise GraphError(f"invalid graph6 character {c!r}")
    n, rest = _g6_decode_size(data)
    nbits_needed = n * (n - 1) // 2
    nchars_needed = (nbits_needed + 5) // 6
    if len(rest) != nchars_needed:
        raise GraphError(
            f"graph6 body for n={n} needs {nchars_needed} characters, got {len(rest)}"
        )
    bits: list[int] = []
    for c in rest:
        val = ord(c) - 63
        bits.extend((val >> shift) & 1 for shift in (5, 4, 3, 2, 1, 0))
    if any(bits[nbits_needed:]):
        raise GraphError("nonzero padding bits in graph6 body")
    edges = []
    i = 0
    for col in range(1, n):
        for row in range(col):
            if bits[i]:
                edges.append((row, col))
            i += 1
    return build_graph(n, edges)


# ---------------------------------------------------------------------------
# edge-list encoding
# ---------------------------------------------------------------------------


def edgelist_loads(text: str) -> Graph:
    """Parse the edge-list format: vertex count line, then ``u v`` lines."""
    n: int | None = None
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        try:
            values = [int(f) for f in fields]
        except ValueError:
            raise GraphError(f"line {lineno}: expected integers, got {line!r}") from None
        if n is None:
            if len(values) != 1:
                raise GraphError(f"line {lineno}: first line must be the vertex count")
            n = values[0]
        else:
            if len(values) != 2:
                raise GraphError(f"line {lineno}: expected 'u v', got {line!r}")
            edges.append((values[0], values[1]))
    if n is None:
        raise GraphError("edge-list input contains no data")
    return build_graph(n, edges)


def edgelist_dumps(g: Graph) -> str:
    """Serialize to the edge-list format (vertex count line, then edge lines)."""
    lines = [str(g.n)]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"
