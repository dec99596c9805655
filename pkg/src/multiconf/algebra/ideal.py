"""Ideals with cached reduced Gröbner bases, and the ideal operations built on them."""

from __future__ import annotations

import threading
from typing import Iterable, Sequence

from .groebner import divide, reduce, reduced_groebner
from .monomial import BlockOrder
from .polynomial import Poly, Ring


class Ideal:
    """Ideal of ``ring`` given by generators; equality compares reduced Gröbner bases."""

    __hash__ = None

    def __init__(self, generators: Iterable[Poly], ring: Ring | None = None):
        gens = list(generators)
        if ring is None:
            if not gens:
                raise ValueError("an empty generator list needs an explicit ring")
            ring = gens[0].ring
        self.ring = ring
        self.generators = tuple(g.change_ring(ring) if g.ring != ring else g for g in gens if g)
        self._gb = None
        self._lock = threading.Lock()

    def __repr__(self):
        return "Ideal(" + ", ".join(str(g) for g in self.generators) + ")"

    @property
    def gb(self) -> list[Poly]:
        if self._gb is None:
            G = reduced_groebner(self.generators)
            with self._lock:
                if self._gb is None:
                    self._gb = G
        return self._gb

    def with_order(self, order) -> "Ideal":
        return Ideal(self.generators, self.ring.with_order(order))

    def reduce(self, f: Poly) -> Poly:
        return reduce(f.change_ring(self.ring), self.gb)

    def __contains__(self, f) -> bool:
        if not isinstance(f, Poly):
            f = self.ring.constant(f)
        return not self.reduce(f)

    contains = __contains__

    def issubset(self, other: "Ideal") -> bool:
        return all(g in other for g in self.generators)

    def __eq__(self, other):
        if not isinstance(other, Ideal):
            return NotImplemented
        if other.ring != self.ring:
            other = Ideal(other.generators, self.ring)
        return [g.terms for g in self.gb] == [g.terms for g in other.gb]

    def is_unit(self) -> bool:
        gb = self.gb
        return len(gb) == 1 and gb[0].is_constant()

    def is_zero(self) -> bool:
        return not self.generators

    def leading_monomials(self) -> list:
        return [g.lm for g in self.gb]

    def __add__(self, other):
        if isinstance(other, Poly):
            other = Ideal([other], self.ring)
        return Ideal(self.generators + tuple(g.change_ring(self.ring) for g in other.generators), self.ring)

    def __mul__(self, other):
        if isinstance(other, Poly):
            return Ideal([g * other for g in self.generators], self.ring)
        return Ideal([g * h for g in self.generators for h in other.generators], self.ring)

    __rmul__ = __mul__

    def map_to(self, ring: Ring, index_map: Sequence[int]) -> "Ideal":
        return Ideal([g.map_to(ring, index_map) for g in self.generators], ring)

    def embed(self, ring: Ring) -> "Ideal":
        return Ideal([g.embed(ring) for g in self.generators], ring)


def groebner_basis(I: Ideal) -> list[Poly]:
    return I.gb


def _with_aux(ring: Ring, base: str = "t") -> tuple[Ring, list[int]]:
    """Ring with one fresh variable prepended under an elimination order."""
    t = ring.fresh_name(base)
    big = Ring((t,) + ring.variables, ring.field, BlockOrder(1, ring.order))
    return big, list(range(1, ring.nvars + 1))


def intersect(I: Ideal, J: Ideal) -> Ideal:
    """I ∩ J by eliminating t from t·I + (1 - t)·J."""
    if I.ring.variables != J.ring.variables:
        raise ValueError("intersect needs ideals in the same ring")
    ring = I.ring
    big, shift = _with_aux(ring)
    t = big.gen(0)
    gens = [t * g.map_to(big, shift) for g in I.generators]
    gens += [(1 - t) * g.change_ring(ring).map_to(big, shift) for g in J.generators]
    G = reduced_groebner(gens)
    back = [0] * big.nvars  # position 0 is dropped; never used since we keep t-free elements
    for i in range(ring.nvars):
        back[i + 1] = i
    kept = [g.map_to(ring, back) for g in G if all(e[0] == 0 for e in g.terms)]
    out = Ideal(kept, ring)
    out._gb = sorted(kept, key=lambda g: ring.order.key(g.lm), reverse=True)
    return out


def colon(I: Ideal, f: Poly) -> Ideal:
    """(I : f), computed as (I ∩ (f)) / f."""
    if not f:
        raise ValueError("colon by the zero polynomial")
    f = f.change_ring(I.ring) if f.ring != I.ring else f
    if f.is_constant():
        return Ideal(I.generators, I.ring)
    K = intersect(I, Ideal([f], I.ring))
    quotients = []
    for g in K.gb:
        (q,), r = divide(g, [f])
        if r:
            raise ArithmeticError(f"intersection element {g} is not a multiple of {f}")
        quotients.append(q)
    return Ideal(quotients, I.ring)


def radical_member(f: Poly, I: Ideal) -> bool:
    """f ∈ √I, via 1 ∈ (I, 1 - t·f) in a ring with a fresh variable t."""
    if not f:
        return True
    big, shift = _with_aux(I.ring)
    t = big.gen(0)
    gens = [g.map_to(big, shift) for g in I.generators]
    gens.append(1 - t * f.change_ring(I.ring).map_to(big, shift))
    G = reduced_groebner(gens)
    return len(G) == 1 and G[0].is_constant()


def is_regular_element(f: Poly, I: Ideal) -> bool:
    """True iff f is a nonzerodivisor on ring/I, i.e. (I : f) == I."""
    if not f:
        raise ValueError("the zero polynomial is never regular")
    return colon(I, f) == I


def zero_divisor_witness(f: Poly, I: Ideal):
    """An element g ∉ I with g·f ∈ I, or None when f is regular on ring/I."""
    if not f:
        raise ValueError("the zero polynomial is never regular")
    for g in colon(I, f).gb:
        if g not in I:
            return g
    return None
