"""Immutable simple graphs with bitset adjacency rows.

Vertices are always 0..n-1 and each adjacency row is a single Python int
used as a bitmask, so neighborhood intersections, twin detection and the
connectivity searches below are plain integer arithmetic.  Everything in
this module is deterministic; ties are broken by ascending vertex id.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator

DEFAULT_MAX_VERTICES = 64

__all__ = [
    "DEFAULT_MAX_VERTICES",
    "Graph",
    "GraphError",
    "DisconnectedError",
    "NotCubicError",
    "Bipartition",
    "OddClosedWalk",
    "TwinPartition",
    "max_vertices",
    "from_edges",
    "bipartition",
    "is_bipartite",
    "is_connected",
    "induced_subgraph",
    "delete_vertex",
    "delete_edge",
    "add_edge",
    "twin_classes",
    "twin_quotient",
    "girth",
    "vertex_connectivity",
    "two_cuts",
]


class GraphError(ValueError):
    """Malformed graph input or an operation applied outside its domain."""


class DisconnectedError(GraphError):
    """Raised by operations that require a connected graph."""


class NotCubicError(GraphError):
    """Raised by operations that require a 3-regular graph."""


def max_vertices() -> int:
    """Vertex cap for the isomorphism and enumeration machinery.

    Defaults to 64 (adjacency rows of such graphs fit a machine word in
    compiled ports, and everything at desk scale fits well below it).  The
    environment variable BALGRAPH_MAX_VERTICES lowers the cap, e.g. to make
    CI runs refuse accidentally large enumerations; it never raises it.
    """
    raw = os.environ.get("BALGRAPH_MAX_VERTICES")
    if raw is None:
        return DEFAULT_MAX_VERTICES
    try:
        value = int(raw)
    except ValueError as exc:
        raise GraphError(f"BALGRAPH_MAX_VERTICES is not an integer: {raw!r}") from exc
    if value < 1:
        raise GraphError(f"BALGRAPH_MAX_VERTICES must be positive: {raw!r}")
    return min(value, DEFAULT_MAX_VERTICES)


def _bits(mask: int) -> Iterator[int]:
    """Indices of set bits, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """Simple undirected graph on vertices 0..n-1.

    ``adj[v]`` is the neighborhood of v as a bitmask.  Instances are
    immutable; all "mutations" below return new graphs.
    """

    __slots__ = ("n", "adj")

    n: int
    adj: tuple[int, ...]

    def __init__(self, n: int, adj: Iterable[int]):
        rows = tuple(adj)
        if n < 0:
            raise GraphError(f"vertex count must be nonnegative, got {n}")
        if len(rows) != n:
            raise GraphError(f"expected {n} adjacency rows, got {len(rows)}")
        full = (1 << n) - 1
        for v, row in enumerate(rows):
            if row & ~full:
                raise GraphError(f"adjacency row of vertex {v} mentions vertices >= {n}")
            if (row >> v) & 1:
                raise GraphError(f"self-loop at vertex {v}")
        for v, row in enumerate(rows):
            for u in _bits(row):
                if not (rows[u] >> v) & 1:
                    raise GraphError(f"asymmetric adjacency between {v} and {u}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "adj", rows)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("Graph is immutable")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count()})"

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> tuple[int, ...]:
        return tuple(row.bit_count() for row in self.adj)

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.adj[u] >> v) & 1)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(_bits(self.adj[v]))

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            for v in _bits(self.adj[u] >> (u + 1)):
                yield (u, u + 1 + v)

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def is_regular(self, k: int | None = None) -> bool:
        degs = set(self.degrees())
        if len(degs) > 1:
            return False
        if k is None:
            return True
        return not degs or degs == {k}


def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from an edge list; repeated edges are harmless."""
    rows = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, rows)


@dataclass(frozen=True)
class Bipartition:
    """2-coloring of a connected bipartite graph; vertex 0 is on side 0."""

    side: tuple[int, ...]

    def side_vertices(self, s: int) -> tuple[int, ...]:
        return tuple(v for v, sv in enumerate(self.side) if sv == s)


@dataclass(frozen=True)
class OddClosedWalk:
    """Witness that a graph is not bipartite.

    ``vertices`` lists a closed walk with the start vertex repeated at the
    end; consecutive entries are edges and the edge count is odd.
    """

    vertices: tuple[int, ...]


@dataclass(frozen=True)
class TwinPartition:
    """Partition of the vertex set into maximal twin classes.

    Two vertices are twins when their neighborhoods are identical (twins
    are necessarily non-adjacent in a simple graph).  Classes are sorted by
    their minimum member and each class is sorted ascending.
    """

    classes: tuple[tuple[int, ...], ...]

    def has_nontrivial(self) -> bool:
        return any(len(c) > 1 for c in self.classes)

    def class_of(self, v: int) -> tuple[int, ...]:
        for c in self.classes:
            if v in c:
                return c
        raise GraphError(f"vertex {v} not in partition")


def _component_mask(g: Graph, start: int, allowed: int) -> int:
    """Vertices reachable from start inside the ``allowed`` mask."""
    seen = 1 << start
    frontier = seen
    while frontier:
        reach = 0
        for u in _bits(frontier):
            reach |= g.adj[u]
        frontier = reach & allowed & ~seen
        seen |= frontier
    return seen


def is_connected(g: Graph) -> bool:
    """True when g has a single component (vacuously for n <= 1)."""
    if g.n <= 1:
        return True
    full = (1 << g.n) - 1
    return _component_mask(g, 0, full) == full


def bipartition(g: Graph) -> Bipartition | OddClosedWalk:
    """2-color a connected graph, or produce an odd closed walk witness.

    Raises DisconnectedError on disconnected input: a bipartition of a
    disconnected graph is not canonical, and every caller here works with
    connected graphs anyway.
    """
    if g.n == 0:
        return Bipartition(side=())
    if not is_connected(g):
        raise DisconnectedError("bipartition requires a connected graph")
    side = [-1] * g.n
    parent = [-1] * g.n
    side[0] = 0
    queue = [0]
    head = 0
    while head < len(queue):
        u = queue[head]
        head += 1
        for v in _bits(g.adj[u]):
            if side[v] == -1:
                side[v] = side[u] ^ 1
                parent[v] = u
                queue.append(v)
            elif side[v] == side[u]:
                up_u = _root_path(parent, u)
                up_v = _root_path(parent, v)
                # u -> root -> v -> u; the BFS-tree legs have even total
                # length (equal side means equal depth parity), so the
                # closing edge makes the walk odd.
                walk = up_u + list(reversed(up_v))[1:] + [u]
                return OddClosedWalk(vertices=tuple(walk))
    return Bipartition(side=tuple(side))


def _root_path(parent: list[int], v: int) -> list[int]:
    path = [v]
    while parent[path[-1]] != -1:
        path.append(parent[path[-1]])
    return path


def is_bipartite(g: Graph) -> bool:
    """Bipartiteness of an arbitrary (possibly disconnected) graph."""
    side = [-1] * g.n
    for start in range(g.n):
        if side[start] != -1:
            continue
        side[start] = 0
        stack = [start]
        while stack:
            u = stack.pop()
            for v in _bits(g.adj[u]):
                if side[v] == -1:
                    side[v] = side[u] ^ 1
                    stack.append(v)
                elif side[v] == side[u]:
                    return False
    return True


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Induced subgraph plus the relabeling map.

    Returns (h, keep) where keep is sorted ascending and vertex i of h is
    vertex keep[i] of g.
    """
    keep = sorted(set(vertices))
    for v in keep:
        if not 0 <= v < g.n:
            raise GraphError(f"vertex {v} out of range")
    pos = {v: i for i, v in enumerate(keep)}
    rows = []
    for v in keep:
        row = 0
        for u in _bits(g.adj[v]):
            j = pos.get(u)
            if j is not None:
                row |= 1 << j
        rows.append(row)
    return Graph(len(keep), rows), tuple(keep)


def delete_vertex(g: Graph, v: int) -> Graph:
    """Delete v; vertices above v shift down by one."""
    if not 0 <= v < g.n:
        raise GraphError(f"vertex {v} out of range")
    h, _ = induced_subgraph(g, (u for u in range(g.n) if u != v))
    return h


def delete_edge(g: Graph, u: int, v: int) -> Graph:
    """Delete the edge {u, v}; labels are kept."""
    if not g.has_edge(u, v):
        raise GraphError(f"no edge ({u}, {v}) to delete")
    rows = list(g.adj)
    rows[u] &= ~(1 << v)
    rows[v] &= ~(1 << u)
    return Graph(g.n, rows)


def add_edge(g: Graph, u: int, v: int) -> Graph:
    """Add the edge {u, v}; labels are kept."""
    if u == v:
        raise GraphError(f"self-loop at vertex {u}")
    if g.has_edge(u, v):
        raise GraphError(f"edge ({u}, {v}) already present")
    rows = list(g.adj)
    rows[u] |= 1 << v
    rows[v] |= 1 << u
    return Graph(g.n, rows)


def twin_classes(g: Graph) -> TwinPartition:
    """Group vertices by identical neighborhoods."""
    by_row: dict[int, list[int]] = {}
    for v in range(g.n):
        by_row.setdefault(g.adj[v], []).append(v)
    classes = sorted((tuple(sorted(vs)) for vs in by_row.values()), key=lambda c: c[0])
    return TwinPartition(classes=tuple(classes))


def twin_quotient(g: Graph) -> tuple[Graph, TwinPartition]:
    """Quotient by the twin partition.

    Class A is adjacent to class B exactly when some (equivalently, by
    twin-ness, every) cross pair is an edge.
    """
    part = twin_classes(g)
    classes = part.classes
    masks = []
    for c in classes:
        m = 0
        for v in c:
            m |= 1 << v
        masks.append(m)
    k = len(classes)
    rows = [0] * k
    for i in range(k):
        rep_adj = g.adj[classes[i][0]]
        for j in range(k):
            if i != j and rep_adj & masks[j]:
                rows[i] |= 1 << j
    return Graph(k, rows), part


def girth(g: Graph) -> int | None:
    """Length of a shortest cycle, or None for a forest.

    BFS from every vertex; a non-tree edge seen from root r at depths
    (d(u), d(v)) closes a cycle of length d(u) + d(v) + 1, and scanning all
    roots makes the minimum exact.
    """
    best: int | None = None
    for start in range(g.n):
        dist = [-1] * g.n
        parent = [-1] * g.n
        dist[start] = 0
        queue = [start]
        head = 0
        while head < len(queue):
            u = queue[head]
            head += 1
            if best is not None and 2 * dist[u] + 1 >= best:
                break
            for v in _bits(g.adj[u]):
                if dist[v] == -1:
                    dist[v] = dist[u] + 1
                    parent[v] = u
                    queue.append(v)
                elif v != parent[u]:
                    length = dist[u] + dist[v] + 1
                    if best is None or length < best:
                        best = length
    return best


def vertex_connectivity(g: Graph) -> int:
    """Minimum vertex-cut size; n-1 for complete graphs, 0 if disconnected.

    Brute force over small vertex subsets.  The cap is min-degree, which
    always bounds the connectivity, so this is fine at desk scale.
    """
    n = g.n
    if n <= 1:
        return 0
    if not is_connected(g):
        return 0
    delta = min(g.degrees())
    for size in range(0, min(delta, n - 2) + 1):
        for cut in combinations(range(n), size):
            if _disconnects(g, cut):
                return size
    return n - 1


def _disconnects(g: Graph, cut: tuple[int, ...]) -> bool:
    removed = 0
    for v in cut:
        removed |= 1 << v
    remaining = ((1 << g.n) - 1) & ~removed
    if remaining.bit_count() <= 1:
        return False
    start = (remaining & -remaining).bit_length() - 1
    return _component_mask(g, start, remaining) != remaining


def two_cuts(g: Graph) -> list[tuple[int, int]]:
    """All vertex pairs whose removal disconnects the rest, sorted."""
    if g.n < 4 or not is_connected(g):
        return []
    return [pair for pair in combinations(range(g.n), 2) if _disconnects(g, pair)]
