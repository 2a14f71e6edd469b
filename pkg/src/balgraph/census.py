"""Orderly census of connected cubic bipartite graphs.

Graphs are generated as (d/2) x (d/2) bipartite adjacency matrices with
all row and column sums 3, one canonical representative per graph
isomorphism class.  The generator works row by row in *constructed
form*: rows are lexicographically non-increasing, and within each class
of columns that are still indistinguishable (identical in all earlier
rows) the new 1s occupy the leftmost positions.  A matrix is kept only
while it is the lexicographic maximum of its whole row/column
permutation orbit; the test is exact, maintained incrementally as a
frontier of partial permutations that still tie the prefix.  Pruning a
non-maximal prefix is safe because any completion of it is dominated by
the correspondingly permuted completion, and testing after every row
means each isomorphism class of matrices survives to emission exactly
once.  Transposes (the two sides of the bipartition) are merged at
emission by the same machinery, so each *graph* class appears once.

The census then counts which graphs are balanced, and checks the
structural conjectures (twins, girth, vertex transitivity) on the
balanced ones.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .balance import is_balanced_after_twin_collapse
from .canon import is_isomorphic, is_vertex_transitive
from .cayley import lt_cycle
from .graph6 import to_graph6
from .graphs import Graph, from_edges, girth, is_connected, twin_classes

__all__ = [
    "CensusError",
    "CensusTask",
    "CensusReport",
    "TwinConjectureReport",
    "ConsequenceReport",
    "enumerate_cubic_bipartite",
    "count_balanced_cubic",
    "check_conjecture_twins",
    "check_conjecture_consequences",
]

_MIN_D = 6
_MAX_D = 36


class CensusError(ValueError):
    """Raised for out-of-range or inconsistent census parameters."""


@dataclass(frozen=True)
class CensusTask:
    """One census run: vertex count, filters, optional work partition."""

    vertices: int
    connected: bool = True
    mod: int | None = None
    res: int | None = None

    def __post_init__(self) -> None:
        d = self.vertices
        if d % 2 != 0 or not (4 <= d <= _MAX_D):
            raise CensusError(f"vertex count must be even and in 4..{_MAX_D}, got {d}")
        if (self.mod is None) != (self.res is None):
            raise CensusError("mod and res must be given together")
        if self.mod is not None:
            if self.mod < 1 or not (0 <= self.res < self.mod):
                raise CensusError(f"need 0 <= res < mod, got mod={self.mod} res={self.res}")


@dataclass(frozen=True)
class CensusReport:
    """Isomorphism-class counts for one vertex count."""

    vertices: int
    total_cubic_bipartite: int
    balanced_count: int
    witnesses: tuple[str, ...]  # graph6 of the balanced graphs


def _check_d(d: int) -> int:
    if d % 2 != 0 or not (_MIN_D <= d <= _MAX_D):
        raise CensusError(f"vertex count must be even and in {_MIN_D}..{_MAX_D}, got {d}")
    return d // 2


def _frontier_step(
    frontier: list[tuple[int, tuple[int, ...]]],
    row_masks: list[int],
    n_rows: int,
    ref_val: int,
    m: int,
) -> list[tuple[int, tuple[int, ...]]] | None:
    """Advance the lex-max tie frontier by one row; None = prefix beaten.

    Each frontier state is (used-row mask, ordered column classes as
    bitmasks).  A state tries every unused row in the role of the next
    row; the best value the row can take is packing its 1s leftmost
    within each class.  A value above ``ref_val`` proves some
    row/column permutation exceeds the constructed prefix; ties spawn
    refined successor states; smaller values fall out of the race.
    """
    out: list[tuple[int, tuple[int, ...]]] = []
    seen: set[tuple[int, tuple[int, ...]]] = set()
    for used, classes in frontier:
        for r in range(n_rows):
            if used >> r & 1:
                continue
            rm = row_masks[r]
            val = 0
            pos = m
            for cls in classes:
                c = (rm & cls).bit_count()
                val |= ((1 << c) - 1) << (pos - c)
                pos -= cls.bit_count()
            if val > ref_val:
                return None
            if val == ref_val:
                ncl: list[int] = []
                for cls in classes:
                    a = cls & rm
                    if a:
                        ncl.append(a)
                    b = cls & ~rm
                    if b:
                        ncl.append(b)
                key = (used | (1 << r), tuple(ncl))
                if key not in seen:
                    seen.add(key)
                    out.append(key)
    return out


def _lex_max_beats(row_masks: list[int], ref_vals: list[int], m: int) -> bool:
    """True when some row/column permutation beats ``ref_vals``.

    Levels follow the reference values; at each level every row not yet
    used by a tying arrangement may take the next role, with all rows
    available at every level.  A packed value above the reference proves
    a strictly larger arrangement exists; ties carry forward.  The walk
    is exhaustive over tying arrangements, so a False answer means
    ``ref_vals`` really is the lexicographic maximum (when the reference
    is achievable at all, as it is for a matrix tested against itself).
    """
    frontier: list[tuple[int, tuple[int, ...]]] | None = [(0, ((1 << m) - 1,))]
    n = len(row_masks)
    for depth in range(len(ref_vals)):
        frontier = _frontier_step(frontier, row_masks, n, ref_vals[depth], m)
        if frontier is None:
            return True
        if not frontier:
            return False
    return False


def _transpose_beats(rows_cols: list[int], rows_vals: list[int], m: int) -> bool:
    """True when the transposed matrix has a strictly larger maximal form.

    Exactly one of a transpose pair of canonical matrices passes this
    gate (none beats the other on a tie), so each bipartite graph class
    is emitted from exactly one of its two side-labelings.
    """
    col_masks = [0] * m
    for i, rm in enumerate(rows_cols):
        for j in range(m):
            if rm >> j & 1:
                col_masks[j] |= 1 << i
    return _lex_max_beats(col_masks, rows_vals, m)


def _count_vectors(capacities: list[int], total: int) -> Iterator[tuple[int, ...]]:
    """All ways to split ``total`` 1s across classes within capacities."""
    k = len(capacities)
    vec = [0] * k

    def rec(i: int, left: int) -> Iterator[tuple[int, ...]]:
        if i == k - 1:
            if left <= capacities[i]:
                vec[i] = left
                yield tuple(vec)
            return
        for c in range(min(left, capacities[i]), -1, -1):
            vec[i] = c
            yield from rec(i + 1, left - c)

    if k:
        yield from rec(0, total)


def _canonical_matrices(
    m: int, k: int, mod: int | None, res: int | None
) -> Iterator[tuple[int, ...]]:
    """Canonical k-regular m x m matrices, one per bipartite-graph class.

    Yields each matrix as a tuple of row bitmasks (bit j = column j).
    Connectivity is not filtered here.
    """
    if m < k:
        return
    gate_depth = min(3, m)
    gate_counter = 0

    rows_cols: list[int] = []
    rows_vals: list[int] = []

    # classes: ordered (start, size, colsum).
    def rec(
        classes: list[tuple[int, int, int]],
        depth: int,
    ) -> Iterator[tuple[int, ...]]:
        nonlocal gate_counter
        if depth == m:
            if not _transpose_beats(rows_cols, rows_vals, m):
                yield tuple(rows_cols)
            return
        remaining_after = m - depth - 1
        open_classes = [cl for cl in classes if cl[2] < k]
        capacities = [size for _, size, _ in open_classes]
        for counts in _count_vectors(capacities, k):
            # Build the new row (prefix-packed), update class structure.
            new_classes: list[tuple[int, int, int]] = []
            row_mask = 0
            val = 0
            ci = 0
            dead = False
            for start, size, colsum in classes:
                if colsum >= k:
                    new_classes.append((start, size, colsum))
                    continue
                c = counts[ci]
                ci += 1
                if c:
                    row_mask |= ((1 << c) - 1) << start
                    val |= ((1 << c) - 1) << (m - start - c)
                    new_classes.append((start, c, colsum + 1))
                    if size - c:
                        new_classes.append((start + c, size - c, colsum))
                else:
                    new_classes.append((start, size, colsum))
            # Order and feasibility prunes.
            if depth and val > rows_vals[-1]:
                continue
            for start, size, colsum in new_classes:
                if k - colsum > remaining_after:
                    dead = True
                    break
            if dead:
                continue
            if remaining_after:
                deficient = [st for st, _, cs in new_classes if cs < k]
                if deficient:
                    p = min(deficient)
                    # Some later row (all of value <= val) must cover column p.
                    if (1 << (m - 1 - p)) > val:
                        continue
            rows_cols.append(row_mask)
            rows_vals.append(val)
            if not _lex_max_beats(rows_cols, rows_vals, m):
                if depth + 1 == gate_depth and mod is not None:
                    gate_counter += 1
                    if (gate_counter - 1) % mod != res:
                        rows_cols.pop()
                        rows_vals.pop()
                        continue
                yield from rec(new_classes, depth + 1)
            rows_cols.pop()
            rows_vals.pop()

    yield from rec([(0, m, 0)], 0)


def _matrix_to_graph(rows_cols: tuple[int, ...], m: int) -> Graph:
    """Rows become vertices 0..m-1, columns m..2m-1."""
    edges = []
    for i, rm in enumerate(rows_cols):
        for j in range(m):
            if rm >> j & 1:
                edges.append((i, m + j))
    return from_edges(2 * m, edges)


def enumerate_cubic_bipartite(
    d: int,
    *,
    connected: bool = True,
    mod: int | None = None,
    res: int | None = None,
    degree: int = 3,
) -> Iterator[Graph]:
    """Connected cubic bipartite graphs on ``d`` vertices, one per class.

    ``degree`` other than 3 enumerates k-regular bipartite graphs with
    the same machinery (small cases only; not a tuned path).  ``mod`` /
    ``res`` partition the generation tree for independent runs whose
    union is exactly the full run.
    """
    m = _check_d(d)
    CensusTask(vertices=d, connected=connected, mod=mod, res=res)
    if degree < 1 or degree > m:
        return
    for rows in _canonical_matrices(m, degree, mod, res):
        g = _matrix_to_graph(rows, m)
        if connected and not is_connected(g):
            continue
        yield g


def count_balanced_cubic(
    d: int, *, mod: int | None = None, res: int | None = None
) -> CensusReport:
    """Count connected cubic bipartite classes and the balanced ones."""
    total = 0
    balanced = 0
    witnesses: list[str] = []
    for g in enumerate_cubic_bipartite(d, mod=mod, res=res):
        total += 1
        if is_balanced_after_twin_collapse(g):
            balanced += 1
            witnesses.append(to_graph6(g))
    return CensusReport(
        vertices=d,
        total_cubic_bipartite=total,
        balanced_count=balanced,
        witnesses=tuple(witnesses),
    )


@dataclass(frozen=True)
class TwinConjectureReport:
    """Do all balanced cubic graphs on d vertices have nontrivial twins?"""

    vertices: int
    balanced_count: int
    violations: tuple[str, ...]  # graph6 of balanced graphs with all twin classes trivial

    @property
    def ok(self) -> bool:
        return not self.violations


def _balanced_graphs(d: int, report: CensusReport | None) -> list[Graph]:
    """The balanced census graphs, from a prior report when available."""
    from .graph6 import from_graph6

    if report is not None:
        if report.vertices != d:
            raise CensusError(
                f"report is for {report.vertices} vertices, asked about {d}"
            )
        return [from_graph6(w) for w in report.witnesses]
    return [
        g
        for g in enumerate_cubic_bipartite(d)
        if is_balanced_after_twin_collapse(g)
    ]


def check_conjecture_twins(
    d: int, *, report: CensusReport | None = None
) -> TwinConjectureReport:
    """Every balanced graph in the census should have a twin class of size >= 2.

    Passing a ``report`` from ``count_balanced_cubic`` reuses its witness
    list instead of re-running the generation.
    """
    _check_d(d)
    violations: list[str] = []
    graphs = _balanced_graphs(d, report)
    for g in graphs:
        if not twin_classes(g).has_nontrivial():
            violations.append(to_graph6(g))
    return TwinConjectureReport(
        vertices=d, balanced_count=len(graphs), violations=tuple(violations)
    )


@dataclass(frozen=True)
class ConsequenceReport:
    """Girth and vertex-transitivity facts about the balanced census graphs."""

    vertices: int
    balanced_count: int
    girth_violations: tuple[str, ...]  # balanced graphs whose girth is not 4
    vertex_transitive: tuple[str, ...]  # graph6 of balanced vertex-transitive graphs
    unexpected_vertex_transitive: tuple[str, ...]  # those not K_{3,3}

    @property
    def ok(self) -> bool:
        return not self.girth_violations and not self.unexpected_vertex_transitive


def check_conjecture_consequences(
    d: int, *, report: CensusReport | None = None
) -> ConsequenceReport:
    """Balanced census graphs: girth 4; vertex-transitive only for K_{3,3}.

    Passing a ``report`` from ``count_balanced_cubic`` reuses its witness
    list instead of re-running the generation.
    """
    _check_d(d)
    girth_violations: list[str] = []
    vt: list[str] = []
    unexpected: list[str] = []
    k33 = lt_cycle(2, 3)
    graphs = _balanced_graphs(d, report)
    for g in graphs:
        if girth(g) != 4:
            girth_violations.append(to_graph6(g))
        if is_vertex_transitive(g):
            vt.append(to_graph6(g))
            if not is_isomorphic(g, k33):
                unexpected.append(to_graph6(g))
    return ConsequenceReport(
        vertices=d,
        balanced_count=len(graphs),
        girth_violations=tuple(girth_violations),
        vertex_transitive=tuple(vt),
        unexpected_vertex_transitive=tuple(unexpected),
    )
