"""Graph family generators and small-order cubic enumeration.

Family specs follow the grammar ``kind:param[,param][;seed=S]`` — e.g.
``cycle:12``, ``complete_bipartite:3,3``, ``random_regular:10,3;seed=7`` —
and generation is referentially transparent: the same spec (seed included)
always yields the identical adjacency structure.

Random regular graphs come from the configuration model with rejection:
shuffle degree stubs, pair them up, reject pairings with loops or repeated
edges, and retry until the result is simple and connected.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

from .graphs import (
    Graph,
    GraphError,
    bfs_distances,
    build_graph,
    delete_edge,
    diameter,
    is_connected,
)

FAMILY_KINDS = (
    "cycle",
    "path",
    "complete",
    "complete_bipartite",
    "circulant",
    "hypercube",
    "petersen",
    "random_regular",
)

_RANDOM_REGULAR_TRIES = 10_000


class FamilyError(ValueError):
    """Malformed family spec or infeasible generation parameters."""


@dataclass(frozen=True)
class FamilySpec:
    """A parsed family description: kind, integer parameters, optional seed."""

    kind: str
    params: tuple[int, ...] = ()
    seed: int | None = None

    def __str__(self) -> str:
        text = self.kind
        if self.params:
            text += ":" + ",".join(str(p) for p in self.params)
        if self.seed is not None:
            text += f";seed={self.seed}"
        return text


def parse_family_spec(text: str) -> FamilySpec:
    """Parse ``kind:param[,param][;seed=S]`` into a :class:`FamilySpec`."""
    segments = [seg.strip() for seg in text.strip().split(";")]
    main = segments[0]
    seed: int | None = None
    for extra in segments[1:]:
        key, sep, value = extra.partition("=")
        if key.strip() != "seed" or not sep:
            raise FamilyError(f"unknown spec option {extra!r} in {text!r}")
        try:
            seed = int(value)
        except ValueError:
            raise FamilyError(f"seed must be an integer, got {value!r}") from None
    kind, sep, param_text = main.partition(":")
    kind = kind.strip()
    if kind not in FAMILY_KINDS:
        raise FamilyError(
            f"unknown family kind {kind!r}; expected one of {', '.join(FAMILY_KINDS)}"
        )
    params: tuple[int, ...] = ()
    if sep:
        try:
            params = tuple(int(p) for p in param_text.split(","))
        except ValueError:
            raise FamilyError(f"parameters must be integers in {text!r}") from None
    return FamilySpec(kind, params, seed)


def _cycle(n: int) -> Graph:
    if n < 3:
        raise FamilyError(f"cycle needs n >= 3, got {n}")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def _path(n: int) -> Graph:
    if n < 1:
        raise FamilyError(f"path needs n >= 1, got {n}")
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def _complete(n: int) -> Graph:
    if n < 1:
        raise FamilyError(f"complete needs n >= 1, got {n}")
    return build_graph(n, itertools.combinations(range(n), 2))


def _complete_bipartite(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise FamilyError(f"complete_bipartite needs positive parts, got {a},{b}")
    return build_graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def _circulant(n: int, *offsets: int) -> Graph:
    if n < 3:
        raise FamilyError(f"circulant needs n >= 3, got {n}")
    if not offsets:
        raise FamilyError("circulant needs at least one offset")
    for s in offsets:
        if not 1 <= s <= n // 2:
            raise FamilyError(f"circulant offset {s} outside 1..{n // 2}")
    edges = [(i, (i + s) % n) for s in offsets for i in range(n)]
    return build_graph(n, edges)


def _hypercube(d: int) -> Graph:
    if not 1 <= d <= 16:
        raise FamilyError(f"hypercube dimension must be in 1..16, got {d}")
    n = 1 << d
    edges = [(i, i ^ (1 << b)) for i in range(n) for b in range(d) if i < i ^ (1 << b)]
    return build_graph(n, edges)


def _petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return build_graph(10, outer + spokes + inner)


def _random_regular(n: int, d: int, seed: int | None) -> Graph:
    if n < 1:
        raise FamilyError(f"random_regular needs n >= 1, got {n}")
    if not 0 <= d < n:
        raise FamilyError(f"degree must satisfy 0 <= d < n, got d={d}, n={n}")
    if (n * d) % 2:
        raise FamilyError(f"n*d must be even, got n={n}, d={d}")
    if seed is None:
        raise FamilyError("random_regular requires a seed (append ';seed=S')")
    if n >= 3 and d < 2:
        raise FamilyError(f"no connected {d}-regular graph exists on {n} vertices")
    rng = random.Random(seed)
    stubs = [v for v in range(n) for _ in range(d)]
    for _ in range(_RANDOM_REGULAR_TRIES):
        rng.shuffle(stubs)
        edges = set()
        for u, v in zip(stubs[0::2], stubs[1::2]):
            if u == v or (min(u, v), max(u, v)) in edges:
                break
            edges.add((min(u, v), max(u, v)))
        else:
            g = build_graph(n, edges)
            if is_connected(g):
                return g
    raise FamilyError(
        f"random_regular:{n},{d};seed={seed} produced no simple connected "
        f"graph in {_RANDOM_REGULAR_TRIES} attempts"
    )


def _expect_params(spec: FamilySpec, count: int) -> None:
    if len(spec.params) != count:
        raise FamilyError(
            f"{spec.kind} takes {count} parameter(s), got {len(spec.params)}"
        )


def generate(spec: FamilySpec) -> Graph:
    """Build the graph a :class:`FamilySpec` describes."""
    kind = spec.kind
    if kind == "cycle":
        _expect_params(spec, 1)
        return _cycle(*spec.params)
    if kind == "path":
        _expect_params(spec, 1)
        return _path(*spec.params)
    if kind == "complete":
        _expect_params(spec, 1)
        return _complete(*spec.params)
    if kind == "complete_bipartite":
        _expect_params(spec, 2)
        return _complete_bipartite(*spec.params)
    if kind == "circulant":
        if len(spec.params) < 2:
            raise FamilyError("circulant takes n plus at least one offset")
        return _circulant(*spec.params)
    if kind == "hypercube":
        _expect_params(spec, 1)
        return _hypercube(*spec.params)
    if kind == "petersen":
        _expect_params(spec, 0)
        return _petersen()
    if kind == "random_regular":
        _expect_params(spec, 2)
        return _random_regular(spec.params[0], spec.params[1], spec.seed)
    raise FamilyError(f"unknown family kind {kind!r}")


def maximal_subgraphs(g: Graph) -> list[tuple[tuple[int, int], Graph]]:
    """All single-edge deletions of ``g`` as (deleted edge, subgraph) pairs."""
    edges = g.edges()
    if not edges:
        raise GraphError("graph has no edges to delete")
    return [(e, delete_edge(g, e)) for e in edges]


# ---------------------------------------------------------------------------
# Isomorphism and small cubic enumeration
# ---------------------------------------------------------------------------


def isomorphic(g: Graph, h: Graph) -> bool:
    """Exact isomorphism test by degree-pruned backtracking.

    Exponential in the worst case; intended for the small orders the
    enumeration below works with.
    """
    if g.n != h.n or g.m != h.m:
        return False
    if sorted(g.degrees()) != sorted(h.degrees()):
        return False
    order = sorted(range(g.n), key=lambda v: -g.degree(v))
    mapping: list[int | None] = [None] * g.n
    used = [False] * h.n

    def place(idx: int) -> bool:
        if idx == g.n:
            return True
        gu = order[idx]
        for hu in range(h.n):
            if used[hu] or h.degree(hu) != g.degree(gu):
                continue
            if all(
                g.has_edge(gu, gv) == h.has_edge(hu, mapping[gv])
                for gv in order[:idx]
            ):
                mapping[gu] = hu
                used[hu] = True
                if place(idx + 1):
                    return True
                mapping[gu] = None
                used[hu] = False
        return False

    return place(0)


def _invariant(g: Graph) -> tuple:
    """Cheap isomorphism invariant used to bucket graphs before exact tests."""
    triangles = []
    for v in range(g.n):
        nbrs = g.adj[v]
        triangles.append(
            sum(1 for i, x in enumerate(nbrs) for y in nbrs[i + 1:] if g.has_edge(x, y))
        )
    distances: list[int] = []
    for v in range(g.n):
        distances.extend(bfs_distances(g, v))
    return (g.n, g.m, tuple(sorted(triangles)), tuple(sorted(distances)))


def cubic_graphs(n: int) -> list[Graph]:
    """All connected 3-regular graphs on n vertices, up to isomorphism.

    Enumerates completions with vertex 0 adjacent to 1, 2, 3 (every cubic
    graph has such a labeling) and deduplicates by invariant bucketing plus
    exact isomorphism.  Kept to n <= 10, where this is fast.
    """
    if n % 2 or not 4 <= n <= 10:
        raise FamilyError(f"cubic enumeration supports even n in 4..10, got {n}")
    found: list[Graph] = []
    adj: list[set[int]] = [set() for _ in range(n)]
    for w in (1, 2, 3):
        adj[0].add(w)
        adj[w].add(0)

    def extend() -> None:
        v = next((u for u in range(n) if len(adj[u]) < 3), None)
        if v is None:
            g = Graph(n, tuple(tuple(sorted(s)) for s in adj))
            if is_connected(g):
                found.append(g)
            return
        need = 3 - len(adj[v])
        free = [w for w in range(v + 1, n) if len(adj[w]) < 3 and w not in adj[v]]
        for combo in itertools.combinations(free, need):
            for w in combo:
                adj[v].add(w)
                adj[w].add(v)
            extend()
            for w in combo:
                adj[v].remove(w)
                adj[w].remove(v)

    extend()
    classes: dict[tuple, list[Graph]] = {}
    result: list[Graph] = []
    for g in found:
        key = _invariant(g)
        bucket = classes.setdefault(key, [])
        if not any(isomorphic(g, seen) for seen in bucket):
            bucket.append(g)
            result.append(g)
    return result


def diameter2_cubic_candidates() -> dict[int, list[Graph]]:
    """Connected cubic graphs of diameter 2, keyed by order (6 and 8).

    These are the parameter classes matching the diameter-form bound values
    1/(6*1.75) and 1/(8*1.75); there are exactly two candidates of each
    order.
    """
    return {
        n: [g for g in cubic_graphs(n) if diameter(g) == 2] for n in (6, 8)
    }
