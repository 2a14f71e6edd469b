"""Plane embeddings of cubic graphs via rotation systems.

An embedding is stored as a rotation system: for every vertex, a cyclic
order of its neighbors.  Tracing faces through the rotations and counting
them against Euler's formula certifies that the rotation describes a
sphere embedding, so an ``EmbeddedGraph`` instance is itself a checked
planarity certificate, independent of whatever algorithm produced it.

On top of the embeddings sit two local expansions that preserve the class
of 3-connected cubic bipartite planar graphs:

* ``diamond_inflation`` replaces a vertex by a seven-vertex gadget (a
  hexagon with a center attached to alternate corners),
* ``a1_subdivision`` subdivides two co-facial, endpoint-disjoint edges
  twice each and joins the four new vertices crosswise.

``batagelj_enumerate`` closes the cube under both operations.  For every
member of the family, ``s_v_subgraph`` extracts the union of the three
face boundaries at a vertex; these subgraphs are induced, each contains a
chordless cycle of length 2 mod 4, and no single edge lies in all of
them, which is why every member stays unbalanced even after deleting any
one edge.  ``two_cut_decompose`` handles connectivity 2 by locating a
component that one extra edge turns back into a 3-connected member.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator

import networkx as nx

from .balance import is_balanced
from .canon import CanonicalForm, canonical_form
from .graphs import (
    Bipartition,
    DisconnectedError,
    Graph,
    GraphError,
    NotCubicError,
    add_edge,
    bipartition,
    delete_edge,
    from_edges,
    induced_subgraph,
    is_bipartite,
    is_connected,
    max_vertices,
    two_cuts,
    vertex_connectivity,
)

__all__ = [
    "EmbeddedGraph",
    "FaceWalk",
    "SvSubgraph",
    "SvReport",
    "TwoCutDecomposition",
    "cube_seed",
    "diamond_inflation",
    "a1_subdivision",
    "faces",
    "batagelj_enumerate",
    "s_v_subgraph",
    "verify_sv_claims",
    "planarity_test",
    "two_cut_decompose",
    "embedding_to_text",
    "embedding_from_text",
]


@dataclass(frozen=True)
class FaceWalk:
    """One face boundary as a closed cyclic sequence of darts.

    A dart is a directed edge (tail, head); consecutive darts share the
    vertex between them and the last dart closes back onto the first.
    """

    darts: tuple[tuple[int, int], ...]

    @property
    def length(self) -> int:
        return len(self.darts)

    @property
    def vertices(self) -> tuple[int, ...]:
        """Tails of the darts, in walk order."""
        return tuple(d[0] for d in self.darts)

    def edges(self) -> tuple[tuple[int, int], ...]:
        """Undirected edges along the walk, each as a sorted pair."""
        return tuple((min(u, v), max(u, v)) for u, v in self.darts)


class EmbeddedGraph:
    """A connected graph together with a certified spherical rotation system.

    ``rotation[v]`` lists the neighbors of v in cyclic order.  The
    constructor checks that every rotation is a permutation of the
    adjacency, traces all faces (the dart after (u, v) is (v, w) where w
    follows u in the rotation at v), and insists on V - E + F = 2.  A
    rotation system of a connected graph satisfies Euler's formula
    exactly when it comes from a sphere drawing, so instances double as
    planarity certificates.
    """

    __slots__ = ("graph", "rotation", "_faces", "_face_index")

    graph: Graph
    rotation: tuple[tuple[int, ...], ...]

    def __init__(self, graph: Graph, rotation: tuple[tuple[int, ...], ...]):
        n = graph.n
        if n == 0:
            raise GraphError("an embedding needs at least one vertex")
        if not is_connected(graph):
            raise DisconnectedError("embeddings are defined here for connected graphs")
        rows = tuple(tuple(r) for r in rotation)
        if len(rows) != n:
            raise GraphError(f"expected {n} rotation rows, got {len(rows)}")
        for v, row in enumerate(rows):
            if len(row) != graph.degree(v) or set(row) != set(graph.neighbors(v)):
                raise GraphError(f"rotation at vertex {v} does not list its neighborhood")
        object.__setattr__(self, "graph", graph)
        object.__setattr__(self, "rotation", rows)
        walks, index = _trace_faces(graph, rows)
        if n - graph.edge_count() + len(walks) != 2:
            raise GraphError(
                "rotation system is not spherical: "
                f"V-E+F = {n - graph.edge_count() + len(walks)}"
            )
        object.__setattr__(self, "_faces", walks)
        object.__setattr__(self, "_face_index", index)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("EmbeddedGraph is immutable")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, EmbeddedGraph):
            return NotImplemented
        return self.graph == other.graph and self.rotation == other.rotation

    def __hash__(self) -> int:
        return hash((self.graph, self.rotation))

    def __repr__(self) -> str:
        return (
            f"EmbeddedGraph(n={self.graph.n}, edges={self.graph.edge_count()}, "
            f"faces={len(self._faces)})"
        )

    def faces(self) -> tuple[FaceWalk, ...]:
        """All face walks; together they use every dart exactly once."""
        return self._faces

    def face_at(self, tail: int, head: int) -> FaceWalk:
        """The unique face whose walk contains the dart (tail, head)."""
        try:
            return self._faces[self._face_index[(tail, head)]]
        except KeyError:
            raise GraphError(f"({tail}, {head}) is not a dart of this graph") from None

    def face_indices_of_edge(self, u: int, v: int) -> tuple[int, ...]:
        """Indices of the faces bordered by the edge uv (one or two)."""
        if not self.graph.has_edge(u, v):
            raise GraphError(f"({u}, {v}) is not an edge")
        return tuple(sorted({self._face_index[(u, v)], self._face_index[(v, u)]}))


def _trace_faces(
    g: Graph, rotation: tuple[tuple[int, ...], ...]
) -> tuple[tuple[FaceWalk, ...], dict[tuple[int, int], int]]:
    """Partition the darts into closed face walks.

    The successor of dart (u, v) is (v, w) with w the neighbor after u in
    the rotation at v.  The successor map is a permutation of the darts,
    so its cycles are the faces.
    """
    if g.n == 1:
        # A lone vertex on the sphere bounds a single empty face.
        return (FaceWalk(darts=()),), {}
    where = [{u: i for i, u in enumerate(row)} for row in rotation]
    darts = sorted((u, v) for u in range(g.n) for v in g.neighbors(u))
    seen: set[tuple[int, int]] = set()
    walks: list[FaceWalk] = []
    index: dict[tuple[int, int], int] = {}
    for start in darts:
        if start in seen:
            continue
        walk: list[tuple[int, int]] = []
        dart = start
        while dart not in seen:
            seen.add(dart)
            index[dart] = len(walks)
            walk.append(dart)
            u, v = dart
            row = rotation[v]
            dart = (v, row[(where[v][u] + 1) % len(row)])
        if dart != start:
            raise GraphError("face tracing failed to close; rotation rows repeat a neighbor")
        walks.append(FaceWalk(darts=tuple(walk)))
    return tuple(walks), index


def faces(emb: EmbeddedGraph) -> tuple[FaceWalk, ...]:
    """Face walks of the embedding (already certified against Euler)."""
    return emb.faces()


def embedding_to_text(emb: EmbeddedGraph) -> str:
    """One line per vertex: ``v: n1 n2 ...`` with neighbors in cyclic order."""
    lines = []
    for v, row in enumerate(emb.rotation):
        lines.append(f"{v}: {' '.join(str(u) for u in row)}".rstrip())
    return "\n".join(lines) + "\n"


def embedding_from_text(text: str) -> EmbeddedGraph:
    """Parse the ``v: n1 n2 ...`` format back into a certified embedding."""
    rows: dict[int, tuple[int, ...]] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        head, sep, tail = line.partition(":")
        if not sep:
            raise GraphError(f"line {lineno}: expected 'vertex: neighbors'")
        try:
            v = int(head)
            nbrs = tuple(int(tok) for tok in tail.split())
        except ValueError as exc:
            raise GraphError(f"line {lineno}: {exc}") from None
        if v in rows:
            raise GraphError(f"line {lineno}: vertex {v} listed twice")
        rows[v] = nbrs
    n = len(rows)
    if sorted(rows) != list(range(n)):
        raise GraphError("vertex ids must be exactly 0..n-1")
    rotation = tuple(rows[v] for v in range(n))
    masks = [0] * n
    for v, row in enumerate(rotation):
        for u in row:
            if not 0 <= u < n:
                raise GraphError(f"vertex {v} lists unknown neighbor {u}")
            masks[v] |= 1 << u
    return EmbeddedGraph(Graph(n, masks), rotation)


def cube_seed() -> EmbeddedGraph:
    """The cube with its standard plane rotation (outer square 0..3, inner 4..7)."""
    rotation = (
        (1, 3, 4),
        (0, 5, 2),
        (1, 6, 3),
        (2, 7, 0),
        (5, 0, 7),
        (1, 4, 6),
        (5, 7, 2),
        (6, 4, 3),
    )
    edges = {(min(v, u), max(v, u)) for v, row in enumerate(rotation) for u in row}
    return EmbeddedGraph(from_edges(8, sorted(edges)), rotation)


def diamond_inflation(emb: EmbeddedGraph, v: int) -> EmbeddedGraph:
    """Replace a degree-3 vertex by the hexagon-with-center gadget.

    The gadget has three ports x0, x1, x2 (taking over the edges to the
    old neighbors of v, in rotation order), three intermediate corners
    y0, y1, y2 alternating with the ports around a hexagon, and a center
    adjacent to the three y's.  Ports and center land on v's color class,
    so bipartiteness is preserved; the whole gadget sits inside the three
    faces that met at v, so the rotation extends without crossings.
    Vertex count grows by 6.
    """
    g = emb.graph
    if not 0 <= v < g.n:
        raise GraphError(f"vertex {v} out of range")
    if g.degree(v) != 3:
        raise NotCubicError(f"diamond inflation needs a degree-3 vertex, got degree {g.degree(v)}")
    w = emb.rotation[v]

    def relabel(u: int) -> int:
        return u if u < v else u - 1

    base = g.n - 1
    center = base
    x = (base + 1, base + 3, base + 5)
    y = (base + 2, base + 4, base + 6)
    port_of = {w[i]: x[i] for i in range(3)}

    rotation: list[tuple[int, ...]] = [()] * (g.n + 6)
    edges: list[tuple[int, int]] = []
    for u in range(g.n):
        if u == v:
            continue
        row = tuple(
            port_of[u] if t == v else relabel(t) for t in emb.rotation[u]
        )
        rotation[relabel(u)] = row
        for t in g.neighbors(u):
            if t != v and u < t:
                edges.append((relabel(u), relabel(t)))
    for i in range(3):
        edges.append((x[i], relabel(w[i])))
        edges.append((min(x[i], y[i]), max(x[i], y[i])))
        edges.append((min(y[i], x[(i + 1) % 3]), max(y[i], x[(i + 1) % 3])))
        edges.append((center, y[i]))
        rotation[x[i]] = (relabel(w[i]), y[i], y[(i - 1) % 3])
        rotation[y[i]] = (x[i], x[(i + 1) % 3], center)
    rotation[center] = y
    return EmbeddedGraph(from_edges(g.n + 6, edges), tuple(rotation))


def _edge_in_graph(g: Graph, e: tuple[int, int]) -> tuple[int, int]:
    u, v = e
    if not g.has_edge(u, v):
        raise GraphError(f"({u}, {v}) is not an edge")
    return (min(u, v), max(u, v))


def _apply_a1(
    emb: EmbeddedGraph,
    walk: FaceWalk,
    i: int,
    j: int,
) -> EmbeddedGraph:
    """Subdivide the walk's darts i and j twice each and join crosswise.

    With the two edges oriented along the face walk, u -> v and w -> z,
    the new path u - a1 - a2 - v replaces the first edge, w - b1 - b2 - z
    the second, and the cross edges are a1-b2 and a2-b1.  The crossing
    pattern is what keeps both colors balanced: a1 and b1 land opposite
    their tails, so the a1-b2 and a2-b1 edges join opposite classes
    exactly when u and w share a color.
    """
    g = emb.graph
    u, v = walk.darts[i]
    w, z = walk.darts[j]
    a1, a2, b1, b2 = g.n, g.n + 1, g.n + 2, g.n + 3

    replacements = {u: (v, a1), v: (u, a2), w: (z, b1), z: (w, b2)}
    rotation: list[tuple[int, ...]] = []
    for t in range(g.n):
        if t in replacements:
            old, new = replacements[t]
            rotation.append(tuple(new if s == old else s for s in emb.rotation[t]))
        else:
            rotation.append(emb.rotation[t])
    rotation.extend(
        [
            (a2, u, b2),
            (v, a1, b1),
            (w, a2, b2),
            (b1, a1, z),
        ]
    )
    edges = [e for e in g.edges() if e not in {(min(u, v), max(u, v)), (min(w, z), max(w, z))}]
    edges += [
        (u, a1),
        (a1, a2),
        (a2, v),
        (w, b1),
        (b1, b2),
        (b2, z),
        (a1, b2),
        (a2, b1),
    ]
    return EmbeddedGraph(from_edges(g.n + 4, edges), tuple(rotation))


def a1_subdivision(
    emb: EmbeddedGraph,
    e1: tuple[int, int],
    e2: tuple[int, int],
    *,
    face_index: int | None = None,
) -> EmbeddedGraph:
    """Double-subdivide two co-facial disjoint edges and join crosswise.

    Both edges must lie on a common face (that is what keeps the result
    planar) and share no endpoint.  When the graph is bipartite, the
    operation additionally requires the walk-leading endpoints of the two
    edges to lie in the same color class; otherwise the cross edges would
    close odd cycles.  Vertex count grows by 4.  If the edges bound two
    common faces, ``face_index`` picks one (default: the lowest index).
    """
    g = emb.graph
    p1 = _edge_in_graph(g, e1)
    p2 = _edge_in_graph(g, e2)
    if set(p1) & set(p2):
        raise GraphError("the two edges must not share an endpoint")
    shared = sorted(set(emb.face_indices_of_edge(*p1)) & set(emb.face_indices_of_edge(*p2)))
    if not shared:
        raise GraphError("the two edges do not bound a common face")
    if face_index is None:
        face_index = shared[0]
    elif face_index not in shared:
        raise GraphError(f"face {face_index} is not a common face of the two edges")
    walk = emb.faces()[face_index]
    positions: dict[tuple[int, int], int] = {}
    for pos, (s, t) in enumerate(walk.darts):
        key = (min(s, t), max(s, t))
        if key in (p1, p2):
            if key in positions:
                raise GraphError("an edge bounds the chosen face on both sides")
            positions[key] = pos
    i, j = sorted(positions.values())
    side = bipartition(g)
    if isinstance(side, Bipartition):
        if side.side[walk.darts[i][0]] != side.side[walk.darts[j][0]]:
            raise GraphError(
                "subdividing this pair would destroy the 2-coloring; "
                "the edges sit at odd distance along the face"
            )
    return _apply_a1(emb, walk, i, j)


def _a1_sites(emb: EmbeddedGraph) -> Iterator[tuple[FaceWalk, int, int]]:
    """All (face walk, dart position, dart position) triples worth trying.

    A site is a pair of endpoint-disjoint edges on one face whose
    walk-leading endpoints share a color.  The same unordered edge pair
    reappears once per common face; downstream canonical deduplication
    absorbs any collisions.
    """
    side = bipartition(emb.graph)
    assert isinstance(side, Bipartition)
    for walk in emb.faces():
        n_darts = len(walk.darts)
        for i in range(n_darts):
            u, v = walk.darts[i]
            for j in range(i + 1, n_darts):
                w, z = walk.darts[j]
                if len({u, v, w, z}) != 4:
                    continue
                if side.side[u] != side.side[w]:
                    continue
                yield walk, i, j


def batagelj_enumerate(max_vertex_count: int) -> Iterator[EmbeddedGraph]:
    """Close the cube under both expansions, by increasing vertex count.

    Every emitted graph is certified cubic, bipartite, 3-connected, and
    embedded on the sphere (the constructor enforces Euler's formula).
    Children that lose 3-connectivity are discarded; isomorphic children
    are deduplicated by canonical form.  Since one operation adds 4
    vertices and the other 6, the reachable orders are 8, 12, 14, 16, ...
    """
    cap = max_vertices()
    if max_vertex_count > cap:
        raise GraphError(f"bound {max_vertex_count} exceeds the {cap}-vertex cap")
    seed = cube_seed()
    if max_vertex_count < seed.graph.n:
        return
    seen: set[CanonicalForm] = {canonical_form(seed.graph)}
    by_size: dict[int, list[EmbeddedGraph]] = {seed.graph.n: [seed]}
    size = seed.graph.n
    while size <= max_vertex_count:
        for emb in by_size.get(size, ()):
            yield emb
            children: list[EmbeddedGraph] = []
            if size + 6 <= max_vertex_count:
                children.extend(diamond_inflation(emb, v) for v in range(size))
            if size + 4 <= max_vertex_count:
                children.extend(_apply_a1(emb, walk, i, j) for walk, i, j in _a1_sites(emb))
            for child in children:
                cg = child.graph
                assert cg.is_regular(3) and is_bipartite(cg)
                if vertex_connectivity(cg) < 3:
                    continue
                form = canonical_form(cg)
                if form in seen:
                    continue
                seen.add(form)
                by_size.setdefault(cg.n, []).append(child)
        size += 1


@dataclass(frozen=True)
class SvSubgraph:
    """The union of the three face boundaries meeting at a center vertex.

    ``vertices`` and ``edges`` use the host graph's labels; ``graph`` is
    the same subgraph relabeled to 0..k-1 following ``vertices``.  The
    defining edge set is the three spokes at the center plus the three
    boundary paths joining consecutive neighbors, so ``is_induced_in``
    asks whether the host has any further edge inside the vertex set.
    """

    center: int
    vertices: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]
    graph: Graph

    def is_induced_in(self, host: Graph) -> bool:
        allowed = set(self.edges)
        for a, b in combinations(self.vertices, 2):
            if host.has_edge(a, b) and (a, b) not in allowed:
                return False
        return True


def s_v_subgraph(emb: EmbeddedGraph, v: int) -> SvSubgraph:
    """Spokes at v plus the three face-boundary paths between its neighbors.

    Needs degree(v) = 3 and three pairwise distinct simple faces at v,
    which 3-connectivity guarantees.
    """
    g = emb.graph
    if not 0 <= v < g.n:
        raise GraphError(f"vertex {v} out of range")
    if g.degree(v) != 3:
        raise NotCubicError(f"the witness subgraph needs a degree-3 vertex, got {g.degree(v)}")
    walks = [emb.face_at(v, w) for w in emb.rotation[v]]
    if len({id(w) for w in walks}) != 3:
        raise GraphError("the three faces at the vertex must be distinct (3-connectivity)")
    vertices = {v}
    edges: set[tuple[int, int]] = set()
    for w, walk in zip(emb.rotation[v], walks):
        k = walk.darts.index((v, w))
        cyc = walk.darts[k:] + walk.darts[:k]
        boundary = [d[0] for d in cyc]
        if len(set(boundary)) != len(boundary):
            raise GraphError("a face at the vertex is not a simple cycle (3-connectivity)")
        vertices.update(boundary)
        for a, b in cyc:
            edges.add((min(a, b), max(a, b)))
    kept = tuple(sorted(vertices))
    pos = {u: i for i, u in enumerate(kept)}
    local = [(pos[a], pos[b]) for a, b in edges]
    return SvSubgraph(
        center=v,
        vertices=kept,
        edges=tuple(sorted(edges)),
        graph=from_edges(len(kept), local),
    )


@dataclass(frozen=True)
class SvReport:
    """Outcome of the per-vertex witness checks on one embedded graph.

    All four failure fields empty and ``graph_balanced`` false is the
    expected state; ``ok`` summarizes it.
    """

    vertex_count: int
    non_induced: tuple[int, ...]
    balanced_centers: tuple[int, ...]
    shared_edges: tuple[tuple[int, int], ...]
    graph_balanced: bool
    balanced_after_deletion: tuple[tuple[int, int], ...]

    @property
    def ok(self) -> bool:
        return (
            not self.non_induced
            and not self.balanced_centers
            and not self.shared_edges
            and not self.graph_balanced
            and not self.balanced_after_deletion
        )


def verify_sv_claims(emb: EmbeddedGraph) -> SvReport:
    """Check the witness-subgraph story on one 3-connected cubic member.

    For every vertex v: the witness subgraph at v is induced and
    unbalanced.  No edge lies in every witness.  The graph itself is
    unbalanced, and so is every single-edge deletion: pick a vertex whose
    witness avoids the deleted edge, and that witness survives induced.
    """
    g = emb.graph
    if not g.is_regular(3):
        raise NotCubicError("the witness checks are for cubic graphs")
    if not is_bipartite(g):
        raise GraphError("the witness checks are for bipartite graphs")
    if vertex_connectivity(g) < 3:
        raise GraphError("the witness checks need a 3-connected graph")
    non_induced: list[int] = []
    balanced_centers: list[int] = []
    shared: set[tuple[int, int]] | None = None
    for v in range(g.n):
        sv = s_v_subgraph(emb, v)
        if not sv.is_induced_in(g):
            non_induced.append(v)
        if is_balanced(sv.graph):
            balanced_centers.append(v)
        shared = set(sv.edges) if shared is None else shared & set(sv.edges)
    balanced_after_deletion = [
        (u, w) for u, w in g.edges() if is_balanced(delete_edge(g, u, w))
    ]
    return SvReport(
        vertex_count=g.n,
        non_induced=tuple(non_induced),
        balanced_centers=tuple(balanced_centers),
        shared_edges=tuple(sorted(shared or ())),
        graph_balanced=is_balanced(g),
        balanced_after_deletion=tuple(balanced_after_deletion),
    )


def planarity_test(g: Graph) -> EmbeddedGraph | None:
    """A certified embedding of g, or None when g is not planar.

    The rotation comes from networkx's combinatorial embedding, but the
    returned object re-verifies it from scratch (rotation = adjacency,
    face tracing, Euler), so a wrong certificate cannot slip through.
    """
    cap = max_vertices()
    if g.n > cap:
        raise GraphError(f"graph has {g.n} vertices; planarity machinery is capped at {cap}")
    if g.n == 0:
        raise GraphError("planarity needs at least one vertex")
    if not is_connected(g):
        raise DisconnectedError("planarity is tested here for connected graphs")
    host = nx.Graph()
    host.add_nodes_from(range(g.n))
    host.add_edges_from(g.edges())
    ok, emb = nx.check_planarity(host)
    if not ok:
        return None
    rotation = tuple(tuple(emb.neighbors_cw_order(v)) for v in range(g.n))
    return EmbeddedGraph(g, rotation)


@dataclass(frozen=True)
class TwoCutDecomposition:
    """A 2-cut together with a component that one extra edge completes.

    ``component`` lists the vertices of the found component Y (host
    labels), ``bridge`` the two nonadjacent degree-2 vertices of Y whose
    joining edge turns Y into the cubic 3-connected bipartite planar
    graph ``completed`` (relabeled to 0..k-1 following ``component``).
    """

    cut: tuple[int, int]
    component: tuple[int, ...]
    bridge: tuple[int, int]
    completed: Graph
    embedding: EmbeddedGraph


def _components_without(g: Graph, banned: tuple[int, ...]) -> list[tuple[int, ...]]:
    banned_mask = 0
    for v in banned:
        banned_mask |= 1 << v
    left = ((1 << g.n) - 1) & ~banned_mask
    out: list[tuple[int, ...]] = []
    while left:
        start = (left & -left).bit_length() - 1
        mask = 1 << start
        frontier = [start]
        while frontier:
            x = frontier.pop()
            fresh = g.adj[x] & left & ~mask
            while fresh:
                y = (fresh & -fresh).bit_length() - 1
                fresh &= fresh - 1
                mask |= 1 << y
                frontier.append(y)
        out.append(tuple(v for v in range(g.n) if (mask >> v) & 1))
        left &= ~mask
    return out


def two_cut_decompose(g: Graph) -> TwoCutDecomposition | None:
    """Find a 2-cut whose component plus one edge is 3-connected again.

    Applies to cubic bipartite planar graphs of connectivity exactly 2;
    anything 3-connected (or worse than 2-connected) returns None.  The
    search sweeps every 2-cut, every component, and every nonadjacent
    pair of degree-2 vertices, and certifies the completed piece as
    cubic, bipartite, 3-connected, and planar.  For qualifying inputs a
    decomposition always exists, so exhausting the search raises.
    """
    if not g.is_regular(3):
        raise NotCubicError("the decomposition is for cubic graphs")
    if not is_bipartite(g):
        raise GraphError("the decomposition is for bipartite graphs")
    if vertex_connectivity(g) != 2:
        return None
    if planarity_test(g) is None:
        raise GraphError("the decomposition is for planar graphs")
    for cut in two_cuts(g):
        for comp in _components_without(g, cut):
            sub, kept = induced_subgraph(g, comp)
            degs = sub.degrees()
            low = [i for i, d in enumerate(degs) if d == 2]
            if len(low) != 2 or any(d not in (2, 3) for d in degs):
                continue
            a, b = low
            if sub.has_edge(a, b):
                continue
            completed = add_edge(sub, a, b)
            if not is_bipartite(completed):
                continue
            if vertex_connectivity(completed) != 3:
                continue
            embedding = planarity_test(completed)
            if embedding is None:
                continue
            return TwoCutDecomposition(
                cut=cut,
                component=kept,
                bridge=(kept[a], kept[b]),
                completed=completed,
                embedding=embedding,
            )
    raise GraphError("no completable component found behind any 2-cut")
