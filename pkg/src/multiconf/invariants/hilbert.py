"""Hilbert series numerators, degree and height of monomial ideals."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb

from ..algebra import Ideal
from ..algebra.monomial import coprime, mono_lcm
from ..multicomplex import MonomialIdeal


def _pmul(a: list, b: list) -> list:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _padd(a: list, b: list) -> list:
    n = max(len(a), len(b))
    return [(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)]


def _trim(a: list) -> list:
    a = list(a)
    while len(a) > 1 and a[-1] == 0:
        a.pop()
    return a


def _kpoly(gens: tuple) -> list:
    """Numerator K(t) of the Hilbert series of S/(gens), by pivoting on a variable."""
    if not gens:
        return [1]
    if any(sum(g) == 0 for g in gens):
        return [0]
    if all(coprime(a, b) for a, b in combinations(gens, 2)):
        out = [1]
        for g in gens:
            d = sum(g)
            out = _pmul(out, [1] + [0] * (d - 1) + [-1])
        return out
    # pivot: the first variable reaching the highest exponent among the generators
    top = max(max(g) for g in gens)
    var = min(i for g in gens for i, k in enumerate(g) if k == top)
    n = len(gens[0])
    x = tuple(1 if k == var else 0 for k in range(n))
    # K(I) = K(I + (x)) + t * K(I : x)
    plus = minimal_gens(tuple(g for g in gens if not g[var]) + (x,))
    colon = minimal_gens(tuple(g[:var] + (max(g[var] - 1, 0),) + g[var + 1:] for g in gens))
    return _padd(_kpoly(plus), [0] + _kpoly(colon))


def minimal_gens(gens) -> tuple:
    gens = sorted(set(gens), key=lambda a: (sum(a), a))
    out: list = []
    for a in gens:
        if not any(all(x <= y for x, y in zip(b, a)) for b in out):
            out.append(a)
    return tuple(out)


@dataclass(frozen=True)
class HilbertData:
    """Hilbert series numerator(t) / (1 - t)^ambient_dim of S/I."""

    numerator: tuple
    ambient_dim: int

    def reduced(self) -> tuple[tuple, int]:
        """(h, d): numerator with all (1 - t) factors cancelled, and the Krull dimension."""
        h = list(self.numerator)
        d = self.ambient_dim
        if not any(h):
            return (0,), -1
        while sum(h) == 0 and d > 0:
            # synthetic division by (1 - t)
            q, acc = [], 0
            for c in h[:-1]:
                acc += c
                q.append(acc)
            h, d = _trim(q), d - 1
        return tuple(h), d

    @property
    def dimension(self) -> int:
        return self.reduced()[1]

    @property
    def degree(self) -> int:
        h, d = self.reduced()
        return sum(h) if d >= 0 else 0

    def values(self, count: int) -> list:
        """First ``count`` values of the Hilbert function."""
        m = self.ambient_dim
        out = []
        for k in range(count):
            s = 0
            for i, c in enumerate(self.numerator):
                if i <= k and c:
                    s += c * (comb(k - i + m - 1, m - 1) if m else int(k == i))
            out.append(s)
        return out


def hilbert_numerator(I: MonomialIdeal, m: int | None = None) -> HilbertData:
    m = I.nvars if m is None else m
    if m < I.nvars:
        raise ValueError("ambient dimension smaller than the ideal's ring")
    return HilbertData(tuple(_trim(_kpoly(I.generators))), m)


def hilbert_numerator_inclusion_exclusion(I: MonomialIdeal, m: int | None = None) -> HilbertData:
    """Same numerator via sum over subsets of (-1)^|s| t^deg lcm(s); exponential, small inputs only."""
    m = I.nvars if m is None else m
    gens = I.generators
    out = [1]
    for r in range(1, len(gens) + 1):
        for sub in combinations(gens, r):
            L = sub[0]
            for g in sub[1:]:
                L = mono_lcm(L, g)
            d = sum(L)
            term = [0] * d + [(-1) ** r]
            out = _padd(out, term)
    return HilbertData(tuple(_trim(out)), m)


def height_monomial(I: MonomialIdeal) -> int:
    """Smallest set of variables meeting the support of every generator."""
    gens = I.generators
    if not gens:
        return 0
    if I.is_unit():
        raise ValueError("the unit ideal has no height")
    supports = [frozenset(i for i, k in enumerate(g) if k) for g in gens]
    universe = sorted(set().union(*supports))
    for r in range(1, len(universe) + 1):
        for cover in combinations(universe, r):
            c = set(cover)
            if all(s & c for s in supports):
                return r
    return len(universe)


def initial_ideal(I: Ideal) -> MonomialIdeal:
    return MonomialIdeal(tuple(I.leading_monomials()), I.ring.nvars, I.ring.variables)


def degree_of(I: Ideal) -> int:
    """deg(S/I) read off the Hilbert series of the initial ideal."""
    return hilbert_numerator(initial_ideal(I), I.ring.nvars).degree


def height_of(I: Ideal) -> int:
    return height_monomial(initial_ideal(I))
