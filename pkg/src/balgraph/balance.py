"""Balance of bipartite graphs: no induced cycle of length 2 mod 4.

An induced (chordless) cycle of length congruent to 2 modulo 4 is the only
obstruction; a connected bipartite graph with no such cycle is balanced.
The same property can be stated for the bipartite adjacency matrix, and
``matrix_is_balanced_oracle`` below checks that formulation literally by
exhaustive submatrix enumeration, as an independent cross-check for the
graph-side search.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Literal

from .graphs import (
    Bipartition,
    DisconnectedError,
    Graph,
    GraphError,
    OddClosedWalk,
    bipartition,
    induced_subgraph,
    is_connected,
    twin_classes,
)
from .matrices import MatrixError, ZeroOneMatrix

__all__ = [
    "InducedCycle",
    "BalanceReport",
    "enumerate_induced_cycles",
    "is_balanced",
    "balance_report",
    "is_balanced_after_twin_collapse",
    "bipartite_adjacency_matrix",
    "matrix_is_balanced_oracle",
]

_ORACLE_DIM_CAP = 8


def _bit_indices(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class InducedCycle:
    """A chordless cycle, canonically oriented.

    vertices[0] is the minimum vertex of the cycle and vertices[1] is the
    smaller of its two cycle neighbors; consecutive vertices (cyclically)
    are adjacent and no other pair is.
    """

    vertices: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.vertices)

    def is_valid_in(self, g: Graph) -> bool:
        vs = self.vertices
        k = len(vs)
        if k < 3 or len(set(vs)) != k:
            return False
        if vs[0] != min(vs) or vs[1] > vs[-1]:
            return False
        for i in range(k):
            for j in range(i + 1, k):
                adjacent = g.has_edge(vs[i], vs[j])
                consecutive = j - i == 1 or (i == 0 and j == k - 1)
                if adjacent != consecutive:
                    return False
        return True


@dataclass(frozen=True)
class BalanceReport:
    balanced: bool
    reason: Literal["balanced", "not-bipartite", "bad-cycle"]
    witness: tuple[int, ...] | None


def enumerate_induced_cycles(g: Graph, max_length: int | None = None) -> Iterator[InducedCycle]:
    """All chordless cycles, each exactly once, by chordless path extension.

    Paths are anchored at the cycle's minimum vertex ``a`` and oriented
    toward its smaller neighbor, so every cycle appears in its canonical
    orientation.  A path may only grow by vertices above ``a`` that avoid
    the neighborhoods of ``a`` and of all interior path vertices (any such
    adjacency would be a chord); a common neighbor of ``a`` and the path
    end, chord-free in the same sense, closes a cycle.
    """
    if max_length is not None and max_length < 3:
        return
    adj = g.adj
    for a in range(g.n):
        low = (1 << (a + 1)) - 1
        na = adj[a]
        for v1 in _bit_indices(na & ~low):
            path = [v1]
            in_path = low | (1 << v1)
            for c in _bit_indices(adj[v1] & na & ~in_path):
                if c > v1:
                    yield InducedCycle(vertices=(a, v1, c))
            if max_length is not None and max_length < 4:
                continue
            # frame = [last, in_path, interior_ban, pending extensions]
            frames = [[v1, in_path, 0, adj[v1] & ~na & ~in_path]]
            while frames:
                frame = frames[-1]
                pending = frame[3]
                if not pending:
                    frames.pop()
                    path.pop()
                    continue
                wbit = pending & -pending
                frame[3] = pending ^ wbit
                w = wbit.bit_length() - 1
                last, in_path, interior_ban = frame[0], frame[1], frame[2]
                new_interior = interior_ban | adj[last]
                new_in_path = in_path | wbit
                path.append(w)
                cycle_len = len(path) + 2
                if max_length is None or cycle_len <= max_length:
                    for c in _bit_indices(adj[w] & na & ~new_interior & ~new_in_path):
                        if c > v1:
                            yield InducedCycle(vertices=(a, *path, c))
                if max_length is None or cycle_len + 1 <= max_length:
                    ext = adj[w] & ~na & ~new_interior & ~new_in_path
                else:
                    ext = 0
                frames.append([w, new_in_path, new_interior, ext])


def balance_report(g: Graph) -> BalanceReport:
    """Balance check with a witness: an odd walk or a bad induced cycle."""
    if not is_connected(g):
        raise DisconnectedError("balance is defined here for connected graphs")
    side = bipartition(g)
    if isinstance(side, OddClosedWalk):
        return BalanceReport(balanced=False, reason="not-bipartite", witness=side.vertices)
    for cycle in enumerate_induced_cycles(g):
        if len(cycle) % 4 == 2:
            return BalanceReport(balanced=False, reason="bad-cycle", witness=cycle.vertices)
    return BalanceReport(balanced=True, reason="balanced", witness=None)


def is_balanced(g: Graph) -> bool:
    """True when g is connected bipartite with no induced cycle of length 2 mod 4."""
    return balance_report(g).balanced


def is_balanced_after_twin_collapse(g: Graph) -> bool:
    """Balance decided after iterated twin-class collapse.

    Deleting one twin of a nontrivial twin pair preserves balance in both
    directions, so collapsing every twin class to a single vertex
    (iterating, since the quotient may acquire new twins) and checking the
    small residue is equivalent.  This is the tractable route for graphs
    whose chordless cycles are too numerous to enumerate, such as large
    lexicographic products; ``is_balanced`` itself never reduces, so the
    equivalence stays empirically testable.
    """
    if not is_connected(g):
        raise DisconnectedError("balance is defined here for connected graphs")
    h = g
    while True:
        part = twin_classes(h)
        if not part.has_nontrivial():
            break
        h, _ = induced_subgraph(h, sorted(c[0] for c in part.classes))
    return is_balanced(h)


def bipartite_adjacency_matrix(g: Graph, sides: Bipartition | None = None) -> ZeroOneMatrix:
    """Bipartite adjacency matrix: rows = side 0 ascending, cols = side 1 ascending."""
    if sides is None:
        result = bipartition(g)
        if isinstance(result, OddClosedWalk):
            raise GraphError("graph is not bipartite")
        sides = result
    left = sides.side_vertices(0)
    right = sides.side_vertices(1)
    col_of = {v: j for j, v in enumerate(right)}
    bits = []
    for u in left:
        row = 0
        for v in _bit_indices(g.adj[u]):
            row |= 1 << col_of[v]
        bits.append(row)
    return ZeroOneMatrix(rows=len(left), cols=len(right), bits=tuple(bits))


def matrix_is_balanced_oracle(a: ZeroOneMatrix) -> bool:
    """Literal matrix-side balance check, exponential by design.

    Enumerates every (row subset, column subset) pair whose submatrix has
    exactly two ones in each of its rows and each of its columns, keeps
    the pairs minimal under componentwise containment, and requires each
    of those to have entry sum divisible by four.  Capped at 8x8.
    """
    if a.rows > _ORACLE_DIM_CAP or a.cols > _ORACLE_DIM_CAP:
        raise MatrixError(
            f"oracle supports at most {_ORACLE_DIM_CAP}x{_ORACLE_DIM_CAP}, got {a.rows}x{a.cols}"
        )
    cols = [a.column_bits(j) for j in range(a.cols)]
    candidates: list[tuple[int, int, int]] = []  # (row mask, col mask, entry sum)
    for rmask in range(1, 1 << a.rows):
        if rmask.bit_count() < 2:
            continue
        rows = [i for i in range(a.rows) if (rmask >> i) & 1]
        for cmask in range(1, 1 << a.cols):
            if cmask.bit_count() < 2:
                continue
            total = 0
            ok = True
            for i in rows:
                if (a.bits[i] & cmask).bit_count() != 2:
                    ok = False
                    break
                total += 2
            if not ok:
                continue
            for j in _bit_indices(cmask):
                if (cols[j] & rmask).bit_count() != 2:
                    ok = False
                    break
            if ok:
                candidates.append((rmask, cmask, total))
    for rmask, cmask, total in candidates:
        minimal = True
        for rm2, cm2, _ in candidates:
            if (rm2, cm2) != (rmask, cmask) and rm2 & ~rmask == 0 and cm2 & ~cmask == 0:
                minimal = False
                break
        if minimal and total % 4 != 0:
            return False
    return True
