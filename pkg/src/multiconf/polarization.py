"""Classical polarization and one-step geometric polarization.

Geometric polarization at a variable y rewrites g = sum_i y^i r_i as
r_0 + y r_1 + sum_{i>=2} y y'^(i-1) r_i in S[y'], where y' is a fresh variable
appended to the ring. S[y'] carries the induced order (depolarize, then y-degree).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .algebra import Ideal, InducedOrder, Poly, Ring, is_regular_element
from .algebra.groebner import is_groebner_basis
from .multicomplex import MonomialIdeal


class PolarizationError(ValueError):
    pass


def polarize_full(I: MonomialIdeal) -> tuple[MonomialIdeal, dict]:
    """Squarefree polarization x_i^a -> x_{i,1} ... x_{i,a}.

    Returns the polarized ideal and the map ``(i, j) -> index`` of x_{i,j}
    (i zero-based, j one-based) in the new ambient.
    """
    widths = [max([g[i] for g in I.generators] + [1]) for i in range(I.nvars)]
    varmap: dict = {}
    names = []
    for i, w in enumerate(widths):
        for j in range(1, w + 1):
            varmap[(i, j)] = len(names)
            names.append(f"{I.variables[i]}_{j}")
    gens = []
    for g in I.generators:
        e = [0] * len(names)
        for i, a in enumerate(g):
            for j in range(1, a + 1):
                e[varmap[(i, j)]] = 1
        gens.append(tuple(e))
    return MonomialIdeal(tuple(gens), len(names), tuple(names)), varmap


@dataclass(frozen=True)
class PolarizationContext:
    """Base ring S, distinguished variable y, and S' = S[y'] with the induced order."""

    base: Ring
    y: int
    ring: Ring

    @classmethod
    def create(cls, base: Ring, y, yprime: str | None = None) -> "PolarizationContext":
        yi = base.index(y)
        if yprime is None:
            yprime = base.variables[yi] + "'"
            while yprime in base.variables:
                yprime += "'"
        elif yprime in base.variables:
            raise PolarizationError(f"fresh variable {yprime!r} collides with the ring")
        ring = Ring(base.variables + (yprime,), base.field, InducedOrder(base.order, yi))
        return cls(base, yi, ring)

    @property
    def yprime(self) -> int:
        return self.base.nvars

    @property
    def y_name(self) -> str:
        return self.base.variables[self.y]

    @property
    def yprime_name(self) -> str:
        return self.ring.variables[-1]

    def lift(self, g: Poly) -> Poly:
        """Inclusion S -> S'."""
        return g.map_to(self.ring, list(range(self.base.nvars)))

    def depolarize(self, p: Poly) -> Poly:
        """S' -> S, y' |-> y."""
        return p.map_to(self.base, list(range(self.base.nvars)) + [self.y])

    def rename_y(self, g: Poly) -> Poly:
        """S -> S', y |-> y' (used to move an ideal of S onto the primed variable)."""
        idx = list(range(self.base.nvars))
        idx[self.y] = self.yprime
        return g.map_to(self.ring, idx)

    def y_minus_yprime(self) -> Poly:
        return self.ring.gen(self.y) - self.ring.gen(self.yprime)


@dataclass(frozen=True)
class PolarizedBasis:
    elements: tuple
    context: PolarizationContext

    def ideal(self) -> Ideal:
        return Ideal(self.elements, self.context.ring)


def geom_polarize(g: Poly, ctx: PolarizationContext) -> Poly:
    if g.ring.variables != ctx.base.variables:
        raise PolarizationError("polynomial is not in the context's base ring")
    ring = ctx.ring
    y, yp = ctx.y, ctx.yprime
    out: dict = {}
    for e, c in g.terms.items():
        k = e[y]
        t = list(e) + [0]
        if k >= 2:
            t[y] = 1
            t[yp] = k - 1
        out[tuple(t)] = c
    return Poly(ring, out)


def geom_polarize_basis(G: Sequence[Poly], ctx: PolarizationContext) -> PolarizedBasis:
    return PolarizedBasis(tuple(geom_polarize(g, ctx) for g in G), ctx)


def polarization_identity_holds(G: Sequence[Poly], P: PolarizedBasis) -> bool:
    """(G, y - y') == (P_y(G), y - y') in S'."""
    ctx = P.context
    d = ctx.y_minus_yprime()
    left = Ideal([ctx.lift(g) for g in G] + [d], ctx.ring)
    right = Ideal(list(P.elements) + [d], ctx.ring)
    return left == right


def check_nzd_polarization(P: PolarizedBasis) -> bool:
    """Is y - y' a nonzerodivisor on S'/(P)?"""
    return is_regular_element(P.context.y_minus_yprime(), P.ideal())


def check_induced_gb(P: PolarizedBasis) -> bool:
    """Buchberger's criterion for P under the induced order."""
    return is_groebner_basis([p for p in P.elements if p])


def is_y_compatible(G: Sequence[Poly], y) -> bool:
    """in_<(g) == in_<(in_y(g)) for every g: the leading term has top y-degree."""
    for g in G:
        if not g:
            continue
        i = g.ring.index(y)
        if g.lm[i] != g.deg_in(i):
            return False
    return True


def iterate_polarization(I: MonomialIdeal) -> tuple[list, tuple]:
    """Polarize a monomial ideal one variable-step at a time.

    Each step takes the first variable with exponent >= 2 in some generator,
    applies one-step polarization there, and renames the primed variable to a
    fresh base variable before continuing. Returns the squarefree generators
    (as exponent tuples) and the final variable names.
    """
    ring = Ring(I.variables)
    gens = [ring.monomial(g) for g in I.generators]
    while True:
        y = next(
            (i for i in range(ring.nvars) if any(g.deg_in(i) >= 2 for g in gens)),
            None,
        )
        if y is None:
            break
        ctx = PolarizationContext.create(ring, y)
        gens = list(geom_polarize_basis(gens, ctx).elements)
        # the primed variable becomes an ordinary variable of the next ring
        ring = Ring(ctx.ring.variables)
        gens = [g.change_ring(ring) for g in gens]
    return [next(iter(g.terms)) for g in gens], ring.variables
