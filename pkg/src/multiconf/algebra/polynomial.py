"""Multivariate polynomials over an exact field, sparse dict representation."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .field import QQ, ModP
from .monomial import Lex, TermOrder, mono_div, mono_mul, divides


class Ring:
    """Polynomial ring ``field[variables]`` with a term order."""

    def __init__(self, variables: Sequence[str], field=QQ, order: TermOrder | None = None):
        self.variables = tuple(variables)
        if len(set(self.variables)) != len(self.variables):
            raise ValueError(f"duplicate variable names in {self.variables}")
        self.field = field
        self.order = order if order is not None else Lex.standard(len(self.variables))
        if self.order.nvars != len(self.variables):
            raise ValueError(
                f"order is on {self.order.nvars} variables, ring has {len(self.variables)}"
            )
        self._zero_exp = (0,) * len(self.variables)

    @property
    def nvars(self) -> int:
        return len(self.variables)

    def __eq__(self, other):
        return (
            isinstance(other, Ring)
            and self.variables == other.variables
            and self.field == other.field
            and self.order == other.order
        )

    def __hash__(self):
        return hash((self.variables, self.field, self.order))

    def __repr__(self):
        return f"Ring({list(self.variables)}, {self.field}, {self.order})"

    def index(self, var) -> int:
        if isinstance(var, int):
            if not 0 <= var < self.nvars:
                raise IndexError(f"variable index {var} out of range")
            return var
        try:
            return self.variables.index(var)
        except ValueError:
            raise KeyError(f"no variable {var!r} in {self.variables}") from None

    def fresh_name(self, base: str) -> str:
        name, k = base, 0
        while name in self.variables:
            k += 1
            name = f"{base}{k}"
        return name

    def with_order(self, order: TermOrder) -> "Ring":
        return Ring(self.variables, self.field, order)

    def with_field(self, field) -> "Ring":
        return Ring(self.variables, field, self.order)

    # -- element construction -------------------------------------------------

    def zero(self) -> "Poly":
        return Poly(self, {})

    def one(self) -> "Poly":
        return self.constant(1)

    def constant(self, c) -> "Poly":
        c = self.field(c)
        return Poly(self, {self._zero_exp: c} if c else {})

    def gen(self, var) -> "Poly":
        i = self.index(var)
        e = [0] * self.nvars
        e[i] = 1
        return Poly(self, {tuple(e): self.field.one})

    def gens(self) -> tuple:
        return tuple(self.gen(i) for i in range(self.nvars))

    def monomial(self, exps: Sequence[int], coeff=1) -> "Poly":
        exps = tuple(exps)
        if len(exps) != self.nvars or any(e < 0 for e in exps):
            raise ValueError(f"bad exponent vector {exps} for {self.nvars} variables")
        c = self.field(coeff)
        return Poly(self, {exps: c} if c else {})

    def from_terms(self, terms: Iterable) -> "Poly":
        """Build from ``(exponents, coefficient)`` pairs, summing duplicates."""
        out: dict = {}
        for exps, c in terms:
            exps = tuple(exps)
            if len(exps) != self.nvars:
                raise ValueError(f"bad exponent vector {exps} for {self.nvars} variables")
            v = out.get(exps, self.field.zero) + self.field(c)
            if v:
                out[exps] = v
            else:
                out.pop(exps, None)
        return Poly(self, out)

    def linear_form(self, coeffs: Sequence) -> "Poly":
        if len(coeffs) != self.nvars:
            raise ValueError(f"expected {self.nvars} coefficients, got {len(coeffs)}")
        return self.from_terms(
            (tuple(1 if k == i else 0 for k in range(self.nvars)), c)
            for i, c in enumerate(coeffs)
        )

    def __call__(self, x) -> "Poly":
        if isinstance(x, Poly):
            return x.change_ring(self)
        return self.constant(x)


class Poly:
    """Immutable sparse polynomial; ``terms`` maps exponent tuples to nonzero coefficients."""

    __slots__ = ("ring", "terms", "_lm")

    def __init__(self, ring: Ring, terms: Mapping):
        self.ring = ring
        self.terms = terms
        self._lm = None

    # -- leading data ---------------------------------------------------------

    @property
    def lm(self):
        if self._lm is None:
            if not self.terms:
                raise ValueError("zero polynomial has no leading monomial")
            self._lm = max(self.terms, key=self.ring.order.key)
        return self._lm

    @property
    def lc(self):
        return self.terms[self.lm]

    def sorted_terms(self) -> list:
        """Terms as ``(exponents, coeff)`` in strictly descending order."""
        key = self.ring.order.key
        return sorted(self.terms.items(), key=lambda t: key(t[0]), reverse=True)

    # -- predicates -------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and self.ring._zero_exp in self.terms)

    def degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    def deg_in(self, var) -> int:
        """Largest power of ``var`` in any term; -1 for the zero polynomial."""
        i = self.ring.index(var)
        if not self.terms:
            return -1
        return max(e[i] for e in self.terms)

    def involves(self, var) -> bool:
        i = self.ring.index(var)
        return any(e[i] for e in self.terms)

    def support(self) -> set:
        return {i for e in self.terms for i, k in enumerate(e) if k}

    # -- arithmetic -------------------------------------------------------------

    def _check(self, other: "Poly"):
        if other.ring.variables != self.ring.variables or other.ring.field != self.ring.field:
            raise ValueError("polynomials live in different rings")

    def _lift(self, other):
        if isinstance(other, Poly):
            self._check(other)
            return other
        return self.ring.constant(other)

    def __add__(self, other):
        other = self._lift(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e)
            if v is None:
                out[e] = c
            else:
                v = v + c
                if v:
                    out[e] = v
                else:
                    del out[e]
        return Poly(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.ring, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def scale(self, c) -> "Poly":
        c = self.ring.field(c)
        if not c:
            return self.ring.zero()
        return Poly(self.ring, {e: v * c for e, v in self.terms.items()})

    def mul_term(self, mono, c) -> "Poly":
        if not c:
            return self.ring.zero()
        return Poly(self.ring, {mono_mul(e, mono): v * c for e, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, Poly):
            if not isinstance(other, (int, Fraction, ModP)):
                return NotImplemented
            return self.scale(other)
        self._check(other)
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = mono_mul(e1, e2)
                v = out.get(e)
                out[e] = c1 * c2 if v is None else v + c1 * c2
        return Poly(self.ring, {e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = self.ring.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def monic(self) -> "Poly":
        if not self.terms:
            return self
        inv = self.ring.field.one / self.lc
        p = Poly(self.ring, {e: c * inv for e, c in self.terms.items()})
        p._lm = self._lm
        return p

    def exact_divide(self, other: "Poly") -> "Poly":
        """Quotient ``self / other``; raises if the division leaves a remainder."""
        from .groebner import divide

        (q,), r = divide(self, [other])
        if r:
            raise ArithmeticError(f"{other} does not divide {self}")
        return q

    # -- structure ---------------------------------------------------------------

    def coefficients_in(self, var) -> dict:
        """Write self = sum_k var^k r_k with var not dividing any term of r_k; return {k: r_k}."""
        i = self.ring.index(var)
        parts: dict = {}
        for e, c in self.terms.items():
            k = e[i]
            stripped = e[:i] + (0,) + e[i + 1:]
            parts.setdefault(k, {})[stripped] = c
        return {k: Poly(self.ring, t) for k, t in parts.items()}

    def initial_in(self, var) -> "Poly":
        """Top-degree part in ``var`` (in_y)."""
        i = self.ring.index(var)
        if not self.terms:
            return self
        top = max(e[i] for e in self.terms)
        return Poly(self.ring, {e: c for e, c in self.terms.items() if e[i] == top})

    def change_ring(self, ring: Ring) -> "Poly":
        """Same terms reinterpreted in a ring with the same variables (e.g. another order)."""
        if ring.variables != self.ring.variables:
            raise ValueError("change_ring needs identical variables; use map_to")
        if ring.field != self.ring.field:
            return ring.from_terms(self.terms.items())
        return Poly(ring, self.terms)

    def map_to(self, ring: Ring, index_map: Sequence[int]) -> "Poly":
        """Send variable ``i`` of this ring to variable ``index_map[i]`` of ``ring``."""
        n = ring.nvars
        out: dict = {}
        for e, c in self.terms.items():
            t = [0] * n
            for i, k in enumerate(e):
                if k:
                    t[index_map[i]] += k
            t = tuple(t)
            v = out.get(t)
            out[t] = c if v is None else v + c
        return Poly(ring, {e: c for e, c in out.items() if c})

    def embed(self, ring: Ring) -> "Poly":
        """Inclusion into a ring whose variables contain ours (matched by name)."""
        return self.map_to(ring, [ring.index(v) for v in self.ring.variables])

    def substitute(self, var, value: "Poly") -> "Poly":
        """Replace ``var`` by the polynomial ``value`` (same ring)."""
        i = self.ring.index(var)
        result = self.ring.zero()
        for k, r in self.coefficients_in(i).items():
            result = result + r * value ** k
        return result

    def evaluate(self, point: Sequence):
        f = self.ring.field
        total = f.zero
        pt = [f(x) for x in point]
        for e, c in self.terms.items():
            v = c
            for x, k in zip(pt, e):
                if k:
                    v = v * x ** k
            total = total + v
        return total

    # -- comparison / display ------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, Poly):
            return (
                self.ring.variables == other.ring.variables
                and self.ring.field == other.ring.field
                and self.terms == other.terms
            )
        if isinstance(other, (int,)) or hasattr(other, "numerator") or hasattr(other, "p"):
            return self == self.ring.constant(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.ring.variables, frozenset(self.terms.items())))

    def __repr__(self):
        return f"Poly({self})"

    def __str__(self):
        if not self.terms:
            return "0"
        names = self.ring.variables
        pieces = []
        for e, c in self.sorted_terms():
            mono = "*".join(
                v if k == 1 else f"{v}^{k}" for v, k in zip(names, e) if k
            )
            cs = str(c)
            neg = cs.startswith("-")
            if neg:
                cs = cs[1:]
            if mono:
                body = mono if cs == "1" else f"{cs}*{mono}"
            else:
                body = cs
            pieces.append(("-" if neg else "+", body))
        sign, body = pieces[0]
        out = ("-" if sign == "-" else "") + body
        for sign, body in pieces[1:]:
            out += f" {sign} {body}"
        return out


def leading_divisor(mono, leads: Sequence) -> int:
    """Index of the first monomial in ``leads`` dividing ``mono``, or -1."""
    for k, lm in enumerate(leads):
        if divides(lm, mono):
            return k
    return -1


__all__ = ["Ring", "Poly", "leading_divisor", "mono_div"]
