"""Finite abelian groups in invariant-factor form.

A group is described by its invariant factors ``d1 | d2 | ... | dk`` with
each ``di >= 2``; the group is the direct product ``Z_d1 x ... x Z_dk``.
Elements are coordinate tuples, ordered lexicographically, with the
identity first.  The trivial group is the empty product.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from math import gcd, lcm
from typing import Iterator


class GroupError(ValueError):
    """Raised for malformed group descriptions or foreign elements."""


@dataclass(frozen=True)
class AbelianGroup:
    """Direct product of cyclic groups given by invariant factors.

    ``factors`` must be a chain ``d1 | d2 | ... | dk`` with every
    ``di >= 2``.  This normal form makes equality of groups coincide
    with isomorphism.
    """

    factors: tuple[int, ...]

    def __post_init__(self) -> None:
        for d in self.factors:
            if d < 2:
                raise GroupError(f"invariant factor {d} is less than 2")
        for a, b in zip(self.factors, self.factors[1:]):
            if b % a != 0:
                raise GroupError(
                    f"factors {self.factors} are not a divisibility chain"
                )

    @property
    def order(self) -> int:
        n = 1
        for d in self.factors:
            n *= d
        return n

    @property
    def identity(self) -> tuple[int, ...]:
        return (0,) * len(self.factors)

    def elements(self) -> tuple[tuple[int, ...], ...]:
        """All elements in lexicographic coordinate order."""
        return tuple(product(*(range(d) for d in self.factors)))

    def contains(self, x: tuple[int, ...]) -> bool:
        return len(x) == len(self.factors) and all(
            0 <= c < d for c, d in zip(x, self.factors)
        )

    def _check(self, x: tuple[int, ...]) -> None:
        if not self.contains(x):
            raise GroupError(f"{x} is not an element of {self}")

    def add(self, x: tuple[int, ...], y: tuple[int, ...]) -> tuple[int, ...]:
        self._check(x)
        self._check(y)
        return tuple((a + b) % d for a, b, d in zip(x, y, self.factors))

    def neg(self, x: tuple[int, ...]) -> tuple[int, ...]:
        self._check(x)
        return tuple((-a) % d for a, d in zip(x, self.factors))

    def element_order(self, x: tuple[int, ...]) -> int:
        self._check(x)
        return lcm(*(d // gcd(a, d) for a, d in zip(x, self.factors)))

    def generates(self, subset: frozenset[tuple[int, ...]] | set[tuple[int, ...]]) -> bool:
        """True when ``subset`` generates the whole group."""
        for x in subset:
            self._check(x)
        seen = {self.identity}
        frontier = [self.identity]
        while frontier:
            nxt = []
            for g in frontier:
                for s in subset:
                    h = self.add(g, s)
                    if h not in seen:
                        seen.add(h)
                        nxt.append(h)
            frontier = nxt
        return len(seen) == self.order

    def __str__(self) -> str:
        if not self.factors:
            return "Z1"
        return " x ".join(f"Z{d}" for d in self.factors)


def cyclic_group(n: int) -> AbelianGroup:
    """The cyclic group of order ``n`` (trivial group for ``n == 1``)."""
    if n < 1:
        raise GroupError(f"group order must be positive, got {n}")
    return AbelianGroup(() if n == 1 else (n,))


def abelian_groups_of_order(n: int) -> Iterator[AbelianGroup]:
    """Yield every abelian group of order ``n``, one per isomorphism class.

    Groups are produced as invariant-factor chains ``d1 | d2 | ... | dk``
    with product ``n``, shortest chain (the cyclic group) first.
    """
    if n < 1:
        raise GroupError(f"group order must be positive, got {n}")
    if n == 1:
        yield AbelianGroup(())
        return

    chains: list[tuple[int, ...]] = []

    def extend(chain: tuple[int, ...], remaining: int) -> None:
        # chain is built from the largest factor down; each new factor must
        # divide the previous one and still divide into `remaining`.
        if remaining == 1:
            chains.append(tuple(reversed(chain)))
            return
        limit = chain[-1] if chain else remaining
        for d in range(2, limit + 1):
            if remaining % d == 0 and (not chain or chain[-1] % d == 0):
                extend(chain + (d,), remaining // d)

    extend((), n)
    chains.sort(key=len)
    for chain in chains:
        yield AbelianGroup(chain)


def parse_group_spec(text: str) -> AbelianGroup:
    """Parse a group description like ``"12"`` or ``"2x4"`` or ``"2 x 2 x 4"``.

    The parts are cyclic orders; they are normalized to invariant-factor
    form, so ``"2x3"`` and ``"6"`` name the same group.
    """
    parts = [p.strip() for p in text.lower().replace("*", "x").split("x")]
    if not parts or any(not p for p in parts):
        raise GroupError(f"malformed group spec {text!r}")
    orders = []
    for p in parts:
        if not p.isdigit():
            raise GroupError(f"malformed group spec {text!r}: bad part {p!r}")
        orders.append(int(p))
    if any(d < 1 for d in orders):
        raise GroupError(f"malformed group spec {text!r}: orders must be >= 1")
    return _invariant_factors([d for d in orders if d > 1])


def _invariant_factors(orders: list[int]) -> AbelianGroup:
    """Normalize a direct product of cyclic groups to invariant factors."""
    # Collect prime powers across all the cyclic pieces.
    powers: dict[int, list[int]] = {}
    for d in orders:
        m = d
        f = 2
        while f * f <= m:
            if m % f == 0:
                e = 0
                while m % f == 0:
                    m //= f
                    e += 1
                powers.setdefault(f, []).append(f**e)
            f += 1
        if m > 1:
            powers.setdefault(m, []).append(m)
    if not powers:
        return AbelianGroup(())
    # Largest prime powers multiply into the last invariant factor.
    for p in powers:
        powers[p].sort(reverse=True)
    k = max(len(v) for v in powers.values())
    factors = []
    for i in range(k):
        f = 1
        for p in powers:
            if i < len(powers[p]):
                f *= powers[p][i]
        factors.append(f)
    return AbelianGroup(tuple(reversed(factors)))
