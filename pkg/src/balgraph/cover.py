"""Exact cover on 0/1 matrices and the degree-divisibility check.

``exact_cover`` picks a set of columns whose supports partition the row
set — the combinatorial form of finding an integral point of the set
partitioning polytope ``{x : Ax = 1, 0 <= x <= 1}``.  For the bipartite
adjacency matrix of a balanced ``k``-regular graph such a point always
exists, and counting it gives the divisibility fact ``2k | n``:
``t`` chosen columns each cover ``k`` of the ``n/2`` rows exactly once,
so ``t * k = n / 2``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .balance import bipartite_adjacency_matrix, is_balanced_after_twin_collapse
from .graphs import Bipartition, Graph, GraphError, bipartition, is_connected
from .matrices import MatrixError, ZeroOneMatrix

_MAX_DIM = 64


class CoverError(ValueError):
    """Raised for oversized instances or broken solver guarantees."""


@dataclass(frozen=True)
class ExactCoverSolution:
    """Columns whose supports partition the rows of the instance."""

    columns: tuple[int, ...]

    def is_valid_for(self, a: ZeroOneMatrix) -> bool:
        """Re-verify independently: every row covered exactly once."""
        total = 0
        for j in self.columns:
            support = a.column_bits(j)
            if support & total:
                return False
            total |= support
        return total == (1 << a.rows) - 1


def exact_cover(a: ZeroOneMatrix) -> ExactCoverSolution | None:
    """Deterministic exact-cover search; ``None`` when infeasible.

    Backtracking branches on the uncovered row with the fewest usable
    columns (lowest row index on ties) and tries its columns in
    ascending order, so the solution returned for a feasible instance
    is always the same one.
    """
    if a.rows > _MAX_DIM or a.cols > _MAX_DIM:
        raise CoverError(
            f"instance is {a.rows}x{a.cols}; exact cover is capped at {_MAX_DIM}x{_MAX_DIM}"
        )
    supports = tuple(a.column_bits(j) for j in range(a.cols))
    all_rows = (1 << a.rows) - 1
    chosen: list[int] = []

    def search(covered: int, avail: int) -> bool:
        if covered == all_rows:
            return True
        best_row = -1
        best_cols = 0
        best_count = -1
        for r in range(a.rows):
            if covered >> r & 1:
                continue
            usable = 0
            m = avail
            while m:
                low = m & -m
                m ^= low
                j = low.bit_length() - 1
                if supports[j] >> r & 1:
                    usable |= low
            cnt = usable.bit_count()
            if best_count == -1 or cnt < best_count:
                best_row, best_cols, best_count = r, usable, cnt
                if cnt == 0:
                    return False
        m = best_cols
        while m:
            low = m & -m
            m ^= low
            j = low.bit_length() - 1
            support = supports[j]
            new_avail = avail & ~low
            k = new_avail
            while k:
                kl = k & -k
                k ^= kl
                if supports[kl.bit_length() - 1] & support:
                    new_avail &= ~kl
            chosen.append(j)
            if search(covered | support, new_avail):
                return True
            chosen.pop()
        return False

    if search(0, (1 << a.cols) - 1 if a.cols else 0):
        return ExactCoverSolution(columns=tuple(sorted(chosen)))
    return None


@dataclass(frozen=True)
class DivisibilityReport:
    """Outcome of the covering argument on one regular bipartite graph.

    For a balanced graph the cover is guaranteed to exist and
    ``class_count * degree == vertex_count / 2`` forces
    ``2 * degree | vertex_count``.  For an unbalanced graph the report
    only records what happened; no guarantee applies.
    """

    vertex_count: int
    degree: int
    balanced: bool
    cover: ExactCoverSolution | None

    @property
    def class_count(self) -> int | None:
        """t = number of chosen columns, when a cover exists."""
        return len(self.cover.columns) if self.cover is not None else None

    @property
    def divisibility_holds(self) -> bool:
        return self.degree > 0 and self.vertex_count % (2 * self.degree) == 0


def verify_divisibility(g: Graph) -> DivisibilityReport:
    """Run the covering argument on a connected regular bipartite graph.

    When the graph is balanced, the bipartite adjacency matrix always
    admits an exact cover by columns, and the report's identity
    ``class_count * degree == vertex_count / 2`` is checked here; a
    violation raises instead of returning a wrong report.
    """
    if g.n == 0:
        raise GraphError("divisibility check needs a nonempty graph")
    degrees = set(g.degrees())
    if len(degrees) != 1:
        raise GraphError("divisibility check needs a regular graph")
    k = degrees.pop()
    sides = bipartition(g)
    if not isinstance(sides, Bipartition):
        raise GraphError("divisibility check needs a bipartite graph")
    balanced = is_balanced_after_twin_collapse(g)
    if k == 0:
        return DivisibilityReport(g.n, 0, balanced, None)
    a = bipartite_adjacency_matrix(g, sides)
    solution = exact_cover(a)
    if balanced:
        if solution is None:
            raise CoverError(
                "balanced regular graph admitted no exact cover; this "
                "contradicts the covering guarantee for balanced graphs"
            )
        if not solution.is_valid_for(a):
            raise CoverError("solver returned an invalid cover")
        if len(solution.columns) * k != g.n // 2:
            raise CoverError(
                f"cover size {len(solution.columns)} times degree {k} "
                f"does not equal half of {g.n}"
            )
    return DivisibilityReport(
        vertex_count=g.n, degree=k, balanced=balanced, cover=solution
    )
