"""Exponent-vector monomials and term orders.

Monomials are plain tuples of non-negative ints; the ambient is whatever ring
or order they are used with. Orders expose ``key`` so that ``key(a) < key(b)``
exactly when ``a < b``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

Monomial = tuple  # tuple[int, ...]


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def mono_div(a: Monomial, b: Monomial) -> Monomial:
    """a / b, assuming b divides a."""
    return tuple(x - y for x, y in zip(a, b))


def divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def coprime(a: Monomial, b: Monomial) -> bool:
    return all(not (x and y) for x, y in zip(a, b))


def unit_vector(n: int, i: int, k: int = 1) -> Monomial:
    e = [0] * n
    e[i] = k
    return tuple(e)


def minimalize(monomials) -> tuple:
    """Minimal generators (antichain under divisibility), sorted."""
    gens = sorted(set(monomials), key=lambda a: (sum(a), a))
    out: list = []
    for a in gens:
        if not any(divides(b, a) for b in out):
            out.append(a)
    return tuple(sorted(out))


class TermOrder:
    nvars: int

    def key(self, mono: Monomial):
        raise NotImplementedError

    def compare(self, a: Monomial, b: Monomial) -> int:
        ka, kb = self.key(a), self.key(b)
        return (ka > kb) - (ka < kb)


@dataclass(frozen=True)
class Lex(TermOrder):
    """Lexicographic order; ``rank[0]`` is the largest variable."""

    rank: tuple

    def __post_init__(self):
        if sorted(self.rank) != list(range(len(self.rank))):
            raise ValueError(f"rank must be a permutation, got {self.rank}")
        object.__setattr__(self, "_identity", self.rank == tuple(range(len(self.rank))))

    @classmethod
    def standard(cls, n: int) -> "Lex":
        return cls(tuple(range(n)))

    @property
    def nvars(self) -> int:
        return len(self.rank)

    def key(self, mono):
        if self._identity:
            return mono
        return tuple(mono[i] for i in self.rank)


@dataclass(frozen=True)
class InducedOrder(TermOrder):
    """Order on S[y'] built from an order on S (y' is the last variable).

    Compare the depolarized monomials (y' replaced by y) under ``base``; on a
    tie the monomial with the larger y-degree is larger.
    """

    base: TermOrder
    y: int

    @property
    def nvars(self) -> int:
        return self.base.nvars + 1

    @property
    def yprime(self) -> int:
        return self.base.nvars

    def depol(self, mono):
        d = list(mono[:-1])
        d[self.y] += mono[-1]
        return tuple(d)

    def key(self, mono):
        return (self.base.key(self.depol(mono)), mono[self.y])


@dataclass(frozen=True)
class BlockOrder(TermOrder):
    """Elimination order: the first ``naux`` variables, compared lex, dominate."""

    naux: int
    inner: TermOrder

    @property
    def nvars(self) -> int:
        return self.naux + self.inner.nvars

    def key(self, mono):
        return (tuple(mono[: self.naux]), self.inner.key(tuple(mono[self.naux:])))


def term_cmp(order: TermOrder, mu: Sequence[int], nu: Sequence[int]) -> int:
    """-1, 0 or 1 as ``mu`` is less than, equal to or greater than ``nu``."""
    if len(mu) != order.nvars or len(nu) != order.nvars:
        raise ValueError(
            f"ambient mismatch: order has {order.nvars} variables, "
            f"got monomials of length {len(mu)} and {len(nu)}"
        )
    return order.compare(tuple(mu), tuple(nu))
