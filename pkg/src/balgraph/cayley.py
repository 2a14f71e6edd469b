"""Cayley graphs on abelian groups and the cycle blow-up family.

The central construction here is the *blow-up cycle* ``lt_cycle(l, t)``:
replace each vertex of an ``l``-cycle by an independent set of ``t``
vertices and each edge by a complete join.  For ``l == 2`` this is the
complete bipartite graph ``K_{t,t}``.  These graphs are exactly the
connected Cayley graphs on abelian groups in which every induced cycle
has length divisible by four, and ``recognize_lt_cycle`` decides
membership structurally (via twin classes) rather than by isomorphism
search, so it stays fast on large inputs.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator

from .balance import is_balanced_after_twin_collapse
from .graphs import Graph, from_edges, is_connected, twin_quotient
from .groups import AbelianGroup, GroupError, cyclic_group


class ConnectionSetError(ValueError):
    """Raised for connection sets that do not define a simple Cayley graph."""


def check_connection_set(
    group: AbelianGroup, connection: frozenset[tuple[int, ...]]
) -> None:
    """Validate that ``connection`` is inverse-closed and avoids the identity."""
    for s in connection:
        if not group.contains(s):
            raise ConnectionSetError(f"{s} is not an element of {group}")
        if s == group.identity:
            raise ConnectionSetError("connection set contains the identity")
        if group.neg(s) not in connection:
            raise ConnectionSetError(f"connection set is not inverse-closed at {s}")


def cayley_graph(
    group: AbelianGroup, connection: frozenset[tuple[int, ...]] | set[tuple[int, ...]]
) -> tuple[Graph, tuple[tuple[int, ...], ...]]:
    """Cayley graph of ``group`` with the given connection set.

    Returns the graph together with the element tuple indexing its
    vertices: vertex ``i`` is ``elements[i]``, and ``i ~ j`` exactly when
    ``elements[j] - elements[i]`` lies in the connection set.
    """
    connection = frozenset(connection)
    check_connection_set(group, connection)
    elements = group.elements()
    index = {x: i for i, x in enumerate(elements)}
    edges = []
    for i, x in enumerate(elements):
        for s in connection:
            j = index[group.add(x, s)]
            if i < j:
                edges.append((i, j))
    return from_edges(len(elements), edges), elements


def circulant(n: int, connection: set[int] | frozenset[int]) -> Graph:
    """Circulant graph on ``Z_n``: ``i ~ j`` iff ``(j - i) mod n`` is in the set.

    The set is closed under negation automatically, so ``{1}`` already
    describes the ``n``-cycle.
    """
    if n < 1:
        raise ConnectionSetError(f"circulant order must be positive, got {n}")
    full = frozenset((s % n) for s in connection) | frozenset(
        (-s) % n for s in connection
    )
    group = cyclic_group(n)
    conn = frozenset((s,) for s in full) if n > 1 else frozenset()
    if n == 1:
        if full:
            raise ConnectionSetError("connection set of the trivial group must be empty")
        return Graph(1, (0,))
    g, _ = cayley_graph(group, conn)
    return g


def lex_product_with_empty(g: Graph, t: int) -> Graph:
    """Blow up every vertex of ``g`` into ``t`` pairwise nonadjacent copies.

    Copies ``(v, a)`` and ``(w, b)`` are adjacent exactly when ``v ~ w``
    in ``g``.  Vertex ``(v, a)`` gets index ``v * t + a``.
    """
    if t < 1:
        raise ValueError(f"blow-up factor must be positive, got {t}")
    edges = []
    for u, v in g.edges():
        for a in range(t):
            for b in range(t):
                edges.append((u * t + a, v * t + b))
    return from_edges(g.n * t, edges)


@dataclass(frozen=True)
class LtSpec:
    """Parameters ``(l, t)`` of a blow-up cycle.

    ``l`` is the cycle length being blown up and ``t`` the size of each
    independent class.  Valid parameter pairs are ``l == 2`` (giving
    ``K_{t,t}``) and ``l`` divisible by four with ``l >= 8``.  The pair
    ``l == 4`` is excluded because blowing up a four-cycle gives
    ``K_{2t,2t}``, already covered by ``l == 2``; this keeps the
    parameterization one-to-one.
    """

    l: int
    t: int

    def __post_init__(self) -> None:
        if self.t < 1:
            raise ValueError(f"class size must be positive, got t={self.t}")
        if self.l != 2 and (self.l % 4 != 0 or self.l < 8):
            raise ValueError(
                f"cycle length must be 2 or a multiple of 4 at least 8, got l={self.l}"
            )

    @property
    def vertex_count(self) -> int:
        return self.l * self.t


def lt_cycle(l: int, t: int) -> Graph:
    """The blow-up of the ``l``-cycle by independent sets of size ``t``.

    Vertices are numbered class by class around the cycle: class ``i``
    occupies ``i*t .. i*t + t - 1``.  For ``l == 2`` the result is
    ``K_{t,t}``.
    """
    spec = LtSpec(l, t)
    if spec.l == 2:
        base = from_edges(2, [(0, 1)])
    else:
        base = circulant(spec.l, {1})
    return lex_product_with_empty(base, spec.t)


def recognize_lt_cycle(g: Graph) -> LtSpec | None:
    """Decide whether ``g`` is a blow-up cycle, returning its parameters.

    Recognition is structural: collapse twin classes and inspect the
    quotient.  ``K_{t,t}`` collapses to a single edge; a genuine blow-up
    of an ``l``-cycle (``l >= 8``) has twin classes of one common size
    whose quotient is the ``l``-cycle itself.  Returns ``None`` when the
    graph is not of this form.  Complete bipartite graphs are always
    reported with ``l == 2``, so the returned parameters are unique.
    """
    if g.n == 0 or not is_connected(g):
        return None
    quotient, partition = twin_quotient(g)
    sizes = {len(c) for c in partition.classes}
    if len(sizes) != 1:
        return None
    t = sizes.pop()
    m = quotient.n
    if m == 2 and quotient.has_edge(0, 1):
        return LtSpec(2, t)
    # A quotient cycle of length divisible by 4 means the original graph
    # was the corresponding blow-up (twin classes already certify the
    # complete joins between consecutive classes).
    if m >= 8 and m % 4 == 0 and quotient.is_regular(2):
        # Verify it is a single cycle, i.e. connected and 2-regular.
        if is_connected(quotient):
            return LtSpec(m, t)
    return None


def enumerate_connection_sets(
    group: AbelianGroup, connected_only: bool = True
) -> Iterator[frozenset[tuple[int, ...]]]:
    """Yield inverse-closed identity-free connection sets of ``group``.

    Sets are produced by choosing a subset of the inverse-pair classes
    ``{x, -x}``.  With ``connected_only`` (the default) only generating
    sets are yielded, which correspond to connected Cayley graphs.  The
    empty set is yielded only for the trivial group.
    """
    elements = group.elements()
    pairs: list[frozenset[tuple[int, ...]]] = []
    seen: set[tuple[int, ...]] = set()
    for x in elements:
        if x == group.identity or x in seen:
            continue
        seen.add(x)
        seen.add(group.neg(x))
        pairs.append(frozenset({x, group.neg(x)}))
    for r in range(0, len(pairs) + 1):
        for combo in combinations(pairs, r):
            conn: frozenset[tuple[int, ...]] = frozenset().union(*combo) if combo else frozenset()
            if connected_only and not group.generates(conn):
                continue
            yield conn


@dataclass(frozen=True)
class CayleyCounterexample:
    """A Cayley graph where balance and blow-up recognition disagree."""

    group: AbelianGroup
    connection: frozenset[tuple[int, ...]]
    balanced: bool
    recognized: LtSpec | None


@dataclass(frozen=True)
class CayleyClassificationReport:
    """Totals from sweeping all connected Cayley graphs on abelian groups."""

    max_order: int
    groups_checked: int
    graphs_checked: int
    balanced_count: int
    counterexamples: tuple[CayleyCounterexample, ...]

    @property
    def ok(self) -> bool:
        return not self.counterexamples


def classify_cayley_graph(
    group: AbelianGroup, connection: frozenset[tuple[int, ...]]
) -> tuple[bool, LtSpec | None]:
    """Balance verdict and blow-up recognition for one Cayley graph."""
    g, _ = cayley_graph(group, connection)
    if not is_connected(g):
        raise ConnectionSetError("connection set does not generate the group")
    balanced = is_balanced_after_twin_collapse(g)
    return balanced, recognize_lt_cycle(g)


def verify_cayley_classification(max_order: int) -> CayleyClassificationReport:
    """Check balance <=> blow-up-cycle over all groups of order <= ``max_order``.

    Sweeps every abelian group up to the given order and every connected
    Cayley graph on it, comparing the balance test against structural
    recognition.  Any disagreement is collected as a counterexample.
    """
    from .groups import abelian_groups_of_order

    groups_checked = 0
    graphs_checked = 0
    balanced_count = 0
    bad: list[CayleyCounterexample] = []
    for n in range(2, max_order + 1):
        for group in abelian_groups_of_order(n):
            groups_checked += 1
            for conn in enumerate_connection_sets(group):
                graphs_checked += 1
                balanced, spec = classify_cayley_graph(group, conn)
                if balanced:
                    balanced_count += 1
                if balanced != (spec is not None):
                    bad.append(
                        CayleyCounterexample(group, conn, balanced, spec)
                    )
    return CayleyClassificationReport(
        max_order=max_order,
        groups_checked=groups_checked,
        graphs_checked=graphs_checked,
        balanced_count=balanced_count,
        counterexamples=tuple(bad),
    )


@dataclass(frozen=True)
class CirculantViolation:
    """A circulant where a structural consequence of balance failed."""

    n: int
    connection: tuple[int, ...]
    detail: str


@dataclass(frozen=True)
class CirculantReport:
    """Results of sweeping bipartite circulants containing step 1."""

    max_n: int
    graphs_checked: int
    balanced_count: int
    violations: tuple[CirculantViolation, ...]

    @property
    def ok(self) -> bool:
        return not self.violations


def _is_complete_bipartite_equal_sides(g: Graph) -> bool:
    """True when ``g`` is ``K_{m,m}`` for some ``m >= 1``."""
    from .graphs import bipartition, Bipartition

    if g.n < 2 or g.n % 2 != 0 or not is_connected(g):
        return False
    sides = bipartition(g)
    if not isinstance(sides, Bipartition):
        return False
    m = g.n // 2
    zero = sides.side_vertices(0)
    one = sides.side_vertices(1)
    if len(zero) != m:
        return False
    return all(g.has_edge(u, v) for u in zero for v in one)


def verify_circulant_structure(max_n: int) -> CirculantReport:
    """Check the structural consequences of balance for circulants with step 1.

    For every even ``n <= max_n`` and every inverse-closed set ``S`` of odd
    steps containing ``1`` (these are the connected bipartite circulants
    through step 1, up to the symmetries that fix step 1):

    - if balanced and ``3 in S``, the graph must be ``K_{n/2, n/2}``;
    - if balanced, ``|S| > 1`` as a set of pairs, and ``3 not in S``, then
      with ``l - 1`` the smallest step beyond 1, ``l`` must satisfy
      ``l % 4 == 0``, ``l >= 8``, ``l | n``, and
      ``S = {i*l + 1, i*l - 1 mod n}``;
    - every balanced graph in the sweep must be recognized as a blow-up
      cycle.
    """
    graphs_checked = 0
    balanced_count = 0
    violations: list[CirculantViolation] = []
    for n in range(4, max_n + 1, 2):
        half = n // 2
        # Odd steps in 1..n-1 come in inverse pairs {s, n-s}; choose the
        # representative s <= n/2.  Step 1 is always included.
        reps = [s for s in range(3, half + 1, 2)]
        for r in range(len(reps) + 1):
            for combo in combinations(reps, r):
                steps = {1} | set(combo)
                conn = frozenset(steps) | frozenset((n - s) % n for s in steps)
                g = circulant(n, conn)
                graphs_checked += 1
                balanced = is_balanced_after_twin_collapse(g)
                if not balanced:
                    continue
                balanced_count += 1
                sorted_conn = tuple(sorted(conn))
                if 3 in conn and n >= 6:
                    if not _is_complete_bipartite_equal_sides(g):
                        violations.append(
                            CirculantViolation(
                                n, sorted_conn, "steps {1,3} but not complete bipartite"
                            )
                        )
                elif len(conn) > 2:
                    beyond = sorted(s for s in conn if s not in (1, n - 1))
                    l = beyond[0] + 1
                    expected = frozenset(
                        x % n for i in range(n // l) for x in (i * l + 1, i * l - 1)
                    ) if l > 0 and n % l == 0 else None
                    if (
                        l % 4 != 0
                        or l < 8
                        or n % l != 0
                        or expected is None
                        or conn != expected
                    ):
                        violations.append(
                            CirculantViolation(
                                n,
                                sorted_conn,
                                f"balanced with minimal step {l - 1} but set is not"
                                f" the step-pattern of a length-{l} blow-up",
                            )
                        )
                spec = recognize_lt_cycle(g)
                if spec is None:
                    violations.append(
                        CirculantViolation(
                            n, sorted_conn, "balanced but not a blow-up cycle"
                        )
                    )
    return CirculantReport(
        max_n=max_n,
        graphs_checked=graphs_checked,
        balanced_count=balanced_count,
        violations=tuple(violations),
    )
