"""Multivariate division and Buchberger's algorithm."""

from __future__ import annotations

from typing import Sequence

from .monomial import coprime, divides, mono_div, mono_lcm
from .polynomial import Poly


def divide(f: Poly, G: Sequence[Poly]) -> tuple[list, Poly]:
    """Division with remainder of ``f`` by the list ``G``.

    Always treats the greatest remaining term: it is cancelled with the first
    element of ``G`` whose leading monomial divides it, or else moved to the
    remainder. Returns ``(quotients, remainder)`` with
    ``f == sum(q * g) + remainder``.
    """
    ring = f.ring
    key = ring.order.key
    zero = ring.field.zero
    leads = [(g.lm, g.lc) if g else None for g in G]
    quotients: list[dict] = [{} for _ in G]
    p = dict(f.terms)
    rem: dict = {}
    while p:
        m = max(p, key=key)
        c = p[m]
        for k, lead in enumerate(leads):
            if lead is not None and divides(lead[0], m):
                t = mono_div(m, lead[0])
                q = c / lead[1]
                quotients[k][t] = quotients[k].get(t, zero) + q
                for e, gc in G[k].terms.items():
                    e2 = tuple(a + b for a, b in zip(e, t))
                    v = p.get(e2, zero) - q * gc
                    if v:
                        p[e2] = v
                    else:
                        p.pop(e2, None)
                break
        else:
            rem[m] = c
            del p[m]
    qs = [Poly(ring, {e: c for e, c in q.items() if c}) for q in quotients]
    return qs, Poly(ring, rem)


def reduce(f: Poly, G: Sequence[Poly]) -> Poly:
    """Normal form of ``f`` with respect to ``G`` (see :func:`divide`)."""
    if not G:
        return f
    return divide(f, G)[1]


def spoly(f: Poly, g: Poly) -> Poly:
    L = mono_lcm(f.lm, g.lm)
    return f.mul_term(mono_div(L, f.lm), f.ring.field.one / f.lc) - g.mul_term(
        mono_div(L, g.lm), g.ring.field.one / g.lc
    )


def is_groebner_basis(G: Sequence[Poly]) -> bool:
    """Buchberger's criterion: every S-polynomial reduces to zero."""
    return first_nonreducing_pair(G) is None


def first_nonreducing_pair(G: Sequence[Poly]):
    """First pair ``(i, j, remainder)`` whose S-polynomial has nonzero remainder, else None."""
    G = [g for g in G if g]
    for j in range(len(G)):
        for i in range(j):
            if coprime(G[i].lm, G[j].lm):
                continue
            r = reduce(spoly(G[i], G[j]), G)
            if r:
                return i, j, r
    return None


def buchberger(F: Sequence[Poly]) -> list[Poly]:
    """A (not yet reduced) Gröbner basis of the ideal generated by ``F``.

    Normal selection strategy (smallest lcm first) with the product and
    chain criteria.
    """
    F = [f.monic() for f in F if f]
    if not F:
        return []
    ring = F[0].ring
    key = ring.order.key
    G: list[Poly] = []
    pairs: set = set()

    def add(h: Poly):
        G.append(h)
        j = len(G) - 1
        for i in range(j):
            pairs.add((i, j))

    for f in F:
        if f.is_constant():
            return [ring.one()]
        add(f)

    done: set = set()
    while pairs:
        i, j = min(pairs, key=lambda p: (key(mono_lcm(G[p[0]].lm, G[p[1]].lm)), p))
        pairs.discard((i, j))
        done.add((i, j))
        a, b = G[i].lm, G[j].lm
        if coprime(a, b):
            continue
        L = mono_lcm(a, b)
        chain = False
        for k in range(len(G)):
            if k in (i, j) or not divides(G[k].lm, L):
                continue
            if (min(i, k), max(i, k)) in done and (min(j, k), max(j, k)) in done:
                chain = True
                break
        if chain:
            continue
        r = reduce(spoly(G[i], G[j]), G)
        if r:
            r = r.monic()
            if r.is_constant():
                return [ring.one()]
            add(r)
    return G


def reduced_groebner(F: Sequence[Poly]) -> list[Poly]:
    """The reduced Gröbner basis, monic and sorted by descending leading monomial."""
    G = buchberger(F)
    if not G:
        return []
    key = G[0].ring.order.key
    G.sort(key=lambda g: key(g.lm))
    minimal: list[Poly] = []
    for g in G:
        if not any(divides(h.lm, g.lm) for h in minimal):
            minimal.append(g)
    out = []
    for k, g in enumerate(minimal):
        others = minimal[:k] + minimal[k + 1:]
        out.append(reduce(g, others).monic())
    out.sort(key=lambda g: key(g.lm), reverse=True)
    return out
