"""Multicomplexes (finite monomial downsets) and their Artinian monomial ideals."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .algebra import Ideal, Ring
from .algebra.monomial import divides, minimalize, unit_vector


class MulticomplexError(ValueError):
    pass


def default_names(n: int) -> tuple:
    return tuple(f"x{i + 1}" for i in range(n))


@dataclass(frozen=True)
class Multicomplex:
    """A c-multicomplex: a nonempty divisibility-closed set of exponent vectors bounded by ``caps``."""

    caps: tuple
    monomials: frozenset
    variables: tuple = field(default=None)

    def __post_init__(self):
        caps = tuple(int(c) for c in self.caps)
        mons = frozenset(tuple(int(x) for x in a) for a in self.monomials)
        names = default_names(len(caps)) if self.variables is None else tuple(self.variables)
        object.__setattr__(self, "caps", caps)
        object.__setattr__(self, "monomials", mons)
        object.__setattr__(self, "variables", names)
        n = len(caps)
        if len(names) != n:
            raise MulticomplexError(f"{len(names)} variable names for {n} caps")
        if any(c < 0 for c in caps):
            raise MulticomplexError(f"caps must be non-negative, got {caps}")
        if not mons:
            raise MulticomplexError("a multicomplex is nonempty")
        for a in sorted(mons):
            if len(a) != n or any(x < 0 for x in a):
                raise MulticomplexError(f"exponent vector {a} does not fit {n} variables")
            for i, (x, c) in enumerate(zip(a, caps)):
                if x > c:
                    raise MulticomplexError(
                        f"exponent vector {a} exceeds cap {c} in {names[i]}"
                    )
        for a in sorted(mons):
            for i in range(n):
                if a[i] and a[:i] + (a[i] - 1,) + a[i + 1:] not in mons:
                    raise MulticomplexError(
                        f"downset violation: {a} is present but its divisor "
                        f"{a[:i] + (a[i] - 1,) + a[i + 1:]} is missing"
                    )
        if (0,) * n not in mons:
            raise MulticomplexError("the monomial 1 is missing")

    @classmethod
    def from_monomials(cls, monomials: Iterable, variables: Sequence[str] | None = None) -> "Multicomplex":
        """Build with the minimal caps (componentwise maxima)."""
        mons = [tuple(a) for a in monomials]
        if not mons:
            raise MulticomplexError("a multicomplex is nonempty")
        caps = tuple(max(col) for col in zip(*mons)) if mons[0] else ()
        return cls(caps, frozenset(mons), None if variables is None else tuple(variables))

    @property
    def n(self) -> int:
        return len(self.caps)

    def __len__(self):
        return len(self.monomials)

    def __contains__(self, a):
        return tuple(a) in self.monomials

    def __iter__(self):
        return iter(self.sorted())

    def sorted(self) -> list:
        """Monomials by degree, then lex."""
        return sorted(self.monomials, key=lambda a: (sum(a), tuple(-x for x in a)))

    def is_point(self) -> bool:
        return len(self.monomials) == 1


@dataclass(frozen=True)
class MonomialIdeal:
    """Monomial ideal given by its minimal generators (an antichain of exponent vectors)."""

    generators: tuple
    nvars: int
    variables: tuple = field(default=None)

    def __post_init__(self):
        gens = minimalize(tuple(int(x) for x in g) for g in self.generators)
        if any(len(g) != self.nvars for g in gens):
            raise ValueError(f"generator length does not match {self.nvars} variables")
        names = default_names(self.nvars) if self.variables is None else tuple(self.variables)
        if len(names) != self.nvars:
            raise ValueError("variable names do not match nvars")
        object.__setattr__(self, "generators", gens)
        object.__setattr__(self, "variables", names)

    def __contains__(self, a) -> bool:
        return any(divides(g, tuple(a)) for g in self.generators)

    def is_artinian(self) -> bool:
        """Some pure power of every variable is a generator."""
        return all(self.pure_power(i) is not None for i in range(self.nvars))

    def pure_power(self, i: int):
        for g in self.generators:
            if g[i] and sum(g) == g[i]:
                return g[i]
        return None

    def is_unit(self) -> bool:
        return (0,) * self.nvars in self.generators

    def colon_variable(self, i: int) -> "MonomialIdeal":
        """(I : x_i) by exponent shift."""
        shifted = [g[:i] + (max(g[i] - 1, 0),) + g[i + 1:] for g in self.generators]
        return MonomialIdeal(tuple(shifted), self.nvars, self.variables)

    def extend(self, nvars: int, variables: Sequence[str] | None = None) -> "MonomialIdeal":
        """Same generators in a larger ambient (new variables appended)."""
        names = tuple(variables) if variables is not None else self.variables + tuple(
            f"x{i + 1}" for i in range(self.nvars, nvars)
        )
        pad = (0,) * (nvars - self.nvars)
        return MonomialIdeal(tuple(g + pad for g in self.generators), nvars, names)

    def to_ideal(self, ring: Ring) -> Ideal:
        """The ideal generated in ``ring``, matching variables by name."""
        idx = [ring.index(v) for v in self.variables]
        gens = []
        for g in self.generators:
            e = [0] * ring.nvars
            for i, k in zip(idx, g):
                e[i] += k
            gens.append(ring.monomial(e))
        return Ideal(gens, ring)

    def __str__(self):
        def mono(g):
            s = "*".join(v if k == 1 else f"{v}^{k}" for v, k in zip(self.variables, g) if k)
            return s or "1"

        return "(" + ", ".join(mono(g) for g in self.generators) + ")"


def new_multicomplex(caps: Sequence[int], monomials: Iterable, variables=None) -> Multicomplex:
    return Multicomplex(tuple(caps), frozenset(tuple(a) for a in monomials), variables)


def ideal_of(M: Multicomplex) -> MonomialIdeal:
    """Minimal generators of the ideal spanned by the monomials outside ``M``.

    These are exactly the vectors a ∉ M with a - e_i ∈ M for every i in supp(a).
    """
    n = M.n
    cands = set()
    for b in M.monomials:
        for i in range(n):
            a = b[:i] + (b[i] + 1,) + b[i + 1:]
            if a in M.monomials:
                continue
            if all(not a[k] or a[:k] + (a[k] - 1,) + a[k + 1:] in M.monomials for k in range(n)):
                cands.add(a)
    return MonomialIdeal(tuple(cands), n, M.variables)


def standard_monomials(I: MonomialIdeal) -> Multicomplex:
    """Monomials outside an Artinian monomial ideal, with minimal caps."""
    if not I.is_artinian():
        missing = [I.variables[i] for i in range(I.nvars) if I.pure_power(i) is None]
        raise MulticomplexError(f"not Artinian: no pure power of {', '.join(missing)}")
    n = I.nvars
    zero = (0,) * n
    if zero in I:
        raise MulticomplexError("the unit ideal has no standard monomials")
    seen = {zero}
    frontier = [zero]
    while frontier:
        nxt = []
        for b in frontier:
            for i in range(n):
                a = b[:i] + (b[i] + 1,) + b[i + 1:]
                if a not in seen and a not in I:
                    seen.add(a)
                    nxt.append(a)
        frontier = nxt
    return Multicomplex.from_monomials(seen, I.variables)


def deletion(M: Multicomplex, i: int) -> Multicomplex:
    """Monomials of ``M`` not divisible by x_i, with x_i dropped from the ambient."""
    if not 0 <= i < M.n:
        raise IndexError(f"variable index {i} out of range")
    kept = {a[:i] + a[i + 1:] for a in M.monomials if a[i] == 0}
    names = M.variables[:i] + M.variables[i + 1:]
    return Multicomplex.from_monomials(kept, names)


def colon_link(M: Multicomplex, i: int) -> Multicomplex:
    """Multicomplex of I(M) : x_i, i.e. {u : u·x_i ∈ M}."""
    if not 0 <= i < M.n:
        raise IndexError(f"variable index {i} out of range")
    if unit_vector(M.n, i) not in M.monomials:
        raise MulticomplexError(f"{M.variables[i]} is not in the multicomplex")
    return standard_monomials(ideal_of(M).colon_variable(i))
