"""Canonical labeling, isomorphism and automorphisms via refinement.

The engine is the classic individualization-refinement scheme: refine an
ordered partition to an equitable one (neighbor counts against every cell
are uniform inside each cell), then branch on the vertices of the first
smallest non-singleton cell, individualizing one vertex at a time.  Leaves
of the search tree are discrete partitions, i.e. labelings; the canonical
labeling is the leaf minimizing (refinement-trace path, packed adjacency
bytes).  Both components are isomorphism-invariant, so equal canonical
byte strings characterize isomorphic graphs.

Two standard prunings keep the tree small: subtrees whose trace deviates
from the best known path cannot contain the canonical leaf (or any
automorphic image of it) and are cut; and branch candidates lying in one
orbit of the already-discovered automorphisms that fix the individualized
prefix lead to mirror-image subtrees, so only the first per orbit is
explored.  Ties are broken by ascending vertex id throughout.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .graphs import Graph, GraphError, max_vertices

__all__ = [
    "CanonicalForm",
    "canonical_form",
    "canonical_labeling",
    "is_isomorphic",
    "automorphism_generators",
    "vertex_orbits",
    "is_vertex_transitive",
]


@dataclass(frozen=True)
class CanonicalForm:
    """Packed adjacency bytes of the canonically relabeled graph.

    data = one byte holding n, then the n*n adjacency bits of the
    relabeled graph in row-major order, most significant bit first, zero
    padded to a byte boundary.  Equal data <=> isomorphic graphs.
    """

    data: bytes

    def __lt__(self, other: "CanonicalForm") -> bool:
        return self.data < other.data


def _check_size(g: Graph) -> None:
    cap = max_vertices()
    if g.n > cap:
        raise GraphError(f"graph has {g.n} vertices; isomorphism machinery is capped at {cap}")


def _initial_cells(n: int, colors: Sequence[int] | None) -> list[tuple[int, ...]]:
    if colors is None:
        return [tuple(range(n))] if n else []
    if len(colors) != n:
        raise GraphError(f"expected {n} colors, got {len(colors)}")
    buckets: dict[int, list[int]] = {}
    for v, c in enumerate(colors):
        buckets.setdefault(c, []).append(v)
    return [tuple(buckets[c]) for c in sorted(buckets)]


def _refine(adj: Sequence[int], cells: list[tuple[int, ...]]) -> tuple[list[tuple[int, ...]], int]:
    """Refine to an equitable partition; returns (cells, trace hash).

    The trace records, positionally, which cells split and with what
    count/size signature.  It never mentions vertex ids, so executions on
    isomorphic (equally colored) graphs produce identical traces.
    """
    cells = list(cells)
    work = [sum(1 << v for v in c) for c in cells]
    events: list[int] = []
    head = 0
    while head < len(work):
        smask = work[head]
        head += 1
        out: list[tuple[int, ...]] = []
        for t, cell in enumerate(cells):
            if len(cell) == 1:
                out.append(cell)
                continue
            groups: dict[int, list[int]] = {}
            for w in cell:
                groups.setdefault((adj[w] & smask).bit_count(), []).append(w)
            if len(groups) == 1:
                out.append(cell)
                continue
            events.append(t)
            for cnt in sorted(groups):
                frag = tuple(groups[cnt])
                events.append(cnt)
                events.append(len(frag))
                out.append(frag)
                work.append(sum(1 << v for v in frag))
        cells = out
    events.append(-1)
    events.extend(len(c) for c in cells)
    return cells, hash(tuple(events))


def _find(parent: list[int], x: int) -> int:
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


def _leaf_key(adj: Sequence[int], n: int, lab: tuple[int, ...]) -> bytes:
    """Packed adjacency of the relabeling that puts lab[i] at position i."""
    pos = [0] * n
    for i, v in enumerate(lab):
        pos[v] = i
    big = 0
    top = 1 << (n - 1) if n else 0
    for i in range(n):
        row = 0
        m = adj[lab[i]]
        while m:
            low = m & -m
            m ^= low
            row |= top >> pos[low.bit_length() - 1]
        big = (big << n) | row
    pad = (-(n * n)) % 8
    return bytes([n]) + (big << pad).to_bytes((n * n + 7) // 8, "big")


class _Search:
    """One individualization-refinement traversal over a fixed graph."""

    def __init__(self, adj: Sequence[int], n: int):
        self.adj = adj
        self.n = n
        self.best_path: list[int] = []
        self.best_leaf: bytes | None = None
        self.best_lab: tuple[int, ...] | None = None
        self.autos: list[tuple[int, ...]] = []
        self._auto_set: set[tuple[int, ...]] = set()

    def run(self, cells: list[tuple[int, ...]]) -> None:
        self._node(cells, 0, [])

    def _node(self, cells: list[tuple[int, ...]], depth: int, fixed: list[int]) -> None:
        cells, inv = _refine(self.adj, cells)
        if depth < len(self.best_path):
            if inv > self.best_path[depth]:
                return
            if inv < self.best_path[depth]:
                del self.best_path[depth:]
                self.best_path.append(inv)
                self.best_leaf = None
                self.best_lab = None
        else:
            self.best_path.append(inv)

        target = -1
        target_size = 0
        for i, cell in enumerate(cells):
            k = len(cell)
            if k > 1 and (target == -1 or k < target_size):
                target = i
                target_size = k
        if target == -1:
            lab = tuple(c[0] for c in cells)
            key = _leaf_key(self.adj, self.n, lab)
            if self.best_leaf is None or key < self.best_leaf:
                self.best_leaf = key
                self.best_lab = lab
            elif key == self.best_leaf and lab != self.best_lab:
                base = self.best_lab
                perm = [0] * self.n
                for i in range(self.n):
                    perm[base[i]] = lab[i]
                p = tuple(perm)
                if p not in self._auto_set:
                    self._auto_set.add(p)
                    self.autos.append(p)
            return

        cell = cells[target]
        prefix = cells[:target]
        suffix = cells[target + 1 :]
        handled: list[int] = []
        parent: list[int] | None = None
        autos_seen = -1
        for v in cell:
            if handled:
                # Candidates in one orbit of the automorphisms fixing the
                # prefix produce mirror-image subtrees; explore one each.
                if len(self.autos) != autos_seen:
                    parent = self._orbit_parents(fixed)
                    autos_seen = len(self.autos)
                assert parent is not None
                rv = _find(parent, v)
                if any(_find(parent, u) == rv for u in handled):
                    continue
            rest = tuple(u for u in cell if u != v)
            child = prefix + [(v,), rest] + suffix
            fixed.append(v)
            self._node(child, depth + 1, fixed)
            fixed.pop()
            handled.append(v)

    def _orbit_parents(self, fixed: list[int]) -> list[int]:
        """Union-find partition for the subgroup fixing ``fixed`` pointwise."""
        parent = list(range(self.n))
        for perm in self.autos:
            if all(perm[x] == x for x in fixed):
                for v in range(self.n):
                    a, b = _find(parent, v), _find(parent, perm[v])
                    if a != b:
                        parent[a] = b
        return parent


def _run_search(g: Graph, colors: Sequence[int] | None) -> _Search:
    search = _Search(g.adj, g.n)
    if g.n == 0:
        search.best_leaf = bytes([0])
        search.best_lab = ()
        return search
    search.run(_initial_cells(g.n, colors))
    assert search.best_leaf is not None
    return search


def canonical_form(g: Graph, colors: Sequence[int] | None = None) -> CanonicalForm:
    """Canonical byte string; equal exactly for isomorphic inputs.

    ``colors`` optionally fixes an initial partition (vertices of distinct
    colors may not be exchanged); isomorphism is then color-preserving.
    """
    _check_size(g)
    return CanonicalForm(data=_run_search(g, colors).best_leaf or bytes([0]))


def canonical_labeling(g: Graph, colors: Sequence[int] | None = None) -> tuple[int, ...]:
    """The relabeling behind canonical_form: position i holds vertex lab[i]."""
    _check_size(g)
    search = _run_search(g, colors)
    return search.best_lab if search.best_lab is not None else ()


def is_isomorphic(g: Graph, h: Graph) -> bool:
    """Isomorphism via canonical forms, with cheap invariant prechecks."""
    _check_size(g)
    _check_size(h)
    if g.n != h.n or sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return canonical_form(g) == canonical_form(h)


def automorphism_generators(g: Graph) -> list[tuple[int, ...]]:
    """Generators of the automorphism group, as permutation tuples.

    The identity is never included; an asymmetric graph yields [].
    """
    _check_size(g)
    if g.n == 0:
        return []
    search = _run_search(g, None)
    seen: set[tuple[int, ...]] = set()
    out = []
    for perm in search.autos:
        if perm not in seen:
            seen.add(perm)
            out.append(perm)
    return out


def _generator_orbits(n: int, gens: list[tuple[int, ...]]) -> list[list[int]]:
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for perm in gens:
        for v in range(n):
            a, b = find(v), find(perm[v])
            if a != b:
                parent[a] = b
    groups: dict[int, list[int]] = {}
    for v in range(n):
        groups.setdefault(find(v), []).append(v)
    return sorted(groups.values())


def vertex_orbits(g: Graph) -> list[tuple[int, ...]]:
    """Orbits of the automorphism group on vertices.

    Generator orbits are only a lower bound (the search might return a
    non-generating set in principle), so orbit representatives are merged
    by comparing canonical forms with one marked vertex, which decides
    "some automorphism maps u to v" exactly.
    """
    _check_size(g)
    if g.n == 0:
        return []
    coarse = _generator_orbits(g.n, automorphism_generators(g))
    by_form: dict[bytes, list[int]] = {}
    for orbit in coarse:
        rep = orbit[0]
        colors = [0] * g.n
        colors[rep] = 1
        form = canonical_form(g, colors).data
        by_form.setdefault(form, []).extend(orbit)
    return sorted(tuple(sorted(vs)) for vs in by_form.values())


def is_vertex_transitive(g: Graph) -> bool:
    """True when the automorphism group has a single vertex orbit."""
    _check_size(g)
    if g.n <= 1:
        return True
    if len(set(g.degrees())) > 1:
        return False
    return len(vertex_orbits(g)) == 1
