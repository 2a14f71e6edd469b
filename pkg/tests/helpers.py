"""Shared builders and brute-force oracles for the test suite.

Everything here is deliberately naive: permutation sweeps, subset
enumerations, definition-chasing checks.  The point is independence from
the library's clever paths, so agreement is evidence.
"""

from __future__ import annotations

import random
from itertools import combinations, permutations

from balgraph import Graph, canonical_form, from_edges, is_connected
from balgraph.matrices import ZeroOneMatrix


def cycle_graph(n: int) -> Graph:
    return from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return from_edges(n, [(i, i + 1) for i in range(n - 1)])


def complete_graph(n: int) -> Graph:
    return from_edges(n, [(a, b) for a in range(n) for b in range(a + 1, n)])


def complete_bipartite(r: int, c: int) -> Graph:
    return from_edges(r + c, [(i, r + j) for i in range(r) for j in range(c)])


def cube_graph() -> Graph:
    """The 3-cube: outer square 0..3, inner square 4..7, spokes i - i+4."""
    edges = [(0, 1), (1, 2), (2, 3), (3, 0), (4, 5), (5, 6), (6, 7), (7, 4)]
    edges += [(i, i + 4) for i in range(4)]
    return from_edges(8, edges)


def relabel(g: Graph, perm: tuple[int, ...]) -> Graph:
    """Image of g under vertex i -> perm[i]."""
    return from_edges(g.n, [(perm[u], perm[v]) for u, v in g.edges()])


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    edges = [(a, b) for a in range(n) for b in range(a + 1, n) if rng.random() < p]
    return from_edges(n, edges)


def random_connected_bipartite(rng: random.Random, r: int, c: int, p: float) -> Graph:
    """Connected bipartite graph on sides r, c: a random spanning tree plus noise."""
    left = list(range(r))
    right = list(range(r, r + c))
    rng.shuffle(left)
    rng.shuffle(right)
    edges = {(left[0], right[0])}
    placed = {0: [left[0]], 1: [right[0]]}
    pending = [(0, v) for v in left[1:]] + [(1, v) for v in right[1:]]
    rng.shuffle(pending)
    for side, v in pending:
        anchor = rng.choice(placed[1 - side])
        edges.add((min(v, anchor), max(v, anchor)))
        placed[side].append(v)
    for i in range(r):
        for j in range(r, r + c):
            if rng.random() < p:
                edges.add((i, j))
    return from_edges(r + c, sorted(edges))


def brute_isomorphic(g: Graph, h: Graph) -> bool:
    """Permutation sweep; fine up to ~8 vertices."""
    if g.n != h.n or g.edge_count() != h.edge_count():
        return False
    if sorted(g.degrees()) != sorted(h.degrees()):
        return False
    target = {(min(u, v), max(u, v)) for u, v in h.edges()}
    for perm in permutations(range(g.n)):
        if all((min(perm[u], perm[v]), max(perm[u], perm[v])) in target for u, v in g.edges()):
            return True
    return False


def brute_automorphisms(g: Graph) -> list[tuple[int, ...]]:
    """All automorphisms by permutation sweep; fine up to ~8 vertices."""
    edges = {(min(u, v), max(u, v)) for u, v in g.edges()}
    out = []
    for perm in permutations(range(g.n)):
        if all((min(perm[u], perm[v]), max(perm[u], perm[v])) in edges for u, v in g.edges()):
            out.append(perm)
    return out


def brute_induced_cycles(g: Graph) -> set[frozenset[int]]:
    """Vertex sets of chordless cycles, by checking every vertex subset."""
    found = set()
    for size in range(3, g.n + 1):
        for subset in combinations(range(g.n), size):
            inside = set(subset)
            degs = [len([u for u in g.neighbors(v) if u in inside]) for v in subset]
            if any(d != 2 for d in degs):
                continue
            # Degrees all 2: the subset induces a disjoint union of cycles;
            # chordless means it is a single cycle, i.e. connected.
            seen = {subset[0]}
            frontier = [subset[0]]
            while frontier:
                x = frontier.pop()
                for y in g.neighbors(x):
                    if y in inside and y not in seen:
                        seen.add(y)
                        frontier.append(y)
            if len(seen) == size:
                found.add(frozenset(subset))
    return found


def brute_exact_cover(a: ZeroOneMatrix) -> tuple[int, ...] | None:
    """Smallest-index feasible column subset by full enumeration (<= 12 cols)."""
    assert a.cols <= 12
    full = (1 << a.rows) - 1
    supports = [a.column_bits(j) for j in range(a.cols)]
    best: tuple[int, ...] | None = None
    for mask in range(1 << a.cols):
        chosen = [j for j in range(a.cols) if (mask >> j) & 1]
        union = 0
        ok = True
        for j in chosen:
            if union & supports[j]:
                ok = False
                break
            union |= supports[j]
        if ok and union == full:
            key = tuple(chosen)
            if best is None or key < best:
                best = key
    return best

def brute_cubic_bipartite_classes(d: int) -> set:
    """Canonical forms of all connected cubic bipartite graphs on d vertices.

    Enumerates bipartite adjacency matrices with all line sums 3 directly
    (rows in non-decreasing mask order, column sums capped), then dedupes
    by canonical form.  Independent of the census generator.
    """
    m = d // 2
    row_choices = [sum(1 << j for j in c) for c in combinations(range(m), 3)]
    forms = set()
    col = [0] * m
    rows: list[int] = []

    def rec(i: int, start: int) -> None:
        if i == m:
            edges = [
                (r, m + j)
                for r, mask in enumerate(rows)
                for j in range(m)
                if mask >> j & 1
            ]
            g = from_edges(d, edges)
            if is_connected(g):
                forms.add(canonical_form(g))
            return
        left_after = m - i - 1
        for k in range(start, len(row_choices)):
            mask = row_choices[k]
            bits = [j for j in range(m) if mask >> j & 1]
            if any(col[j] == 3 for j in bits):
                continue
            for j in bits:
                col[j] += 1
            if all(col[j] + left_after >= 3 for j in range(m)):
                rows.append(mask)
                rec(i + 1, k)
                rows.pop()
            for j in bits:
                col[j] -= 1

    rec(0, 0)
    return forms
