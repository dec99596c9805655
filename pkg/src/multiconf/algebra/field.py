"""Exact coefficient fields: the rationals and prime fields GF(p)."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational


class ModP:
    """Residue class modulo a prime ``p``, stored in ``[0, p)``."""

    __slots__ = ("value", "p")

    def __init__(self, value: int, p: int):
        self.value = value % p
        self.p = p

    def _coerce(self, other):
        if isinstance(other, ModP):
            if other.p != self.p:
                raise ValueError(f"field mismatch: GF({self.p}) vs GF({other.p})")
            return other.value
        if isinstance(other, int):
            return other % self.p
        if isinstance(other, Fraction):
            return other.numerator * pow(other.denominator, -1, self.p) % self.p
        return NotImplemented

    def __add__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return v
        return ModP(self.value + v, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return v
        return ModP(self.value - v, self.p)

    def __rsub__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return v
        return ModP(v - self.value, self.p)

    def __mul__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return v
        return ModP(self.value * v, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return v
        if v == 0:
            raise ZeroDivisionError("division by zero in GF(%d)" % self.p)
        return ModP(self.value * pow(v, -1, self.p), self.p)

    def __rtruediv__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return v
        return ModP(v, self.p) / self

    def __neg__(self):
        return ModP(-self.value, self.p)

    def __pow__(self, k: int):
        return ModP(pow(self.value, k, self.p), self.p)

    def __eq__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return v
        return self.value == v

    def __hash__(self):
        return hash((self.value, self.p))

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return f"ModP({self.value}, {self.p})"

    def __str__(self):
        return str(self.value)


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    k = 3
    while k * k <= p:
        if p % k == 0:
            return False
        k += 2
    return True


@dataclass(frozen=True)
class RationalField:
    characteristic = 0

    def __call__(self, x) -> Fraction:
        if isinstance(x, ModP):
            raise TypeError("cannot coerce a prime-field residue into QQ")
        return Fraction(x)

    @property
    def zero(self) -> Fraction:
        return Fraction(0)

    @property
    def one(self) -> Fraction:
        return Fraction(1)

    def __str__(self):
        return "QQ"


@dataclass(frozen=True)
class PrimeField:
    p: int

    def __post_init__(self):
        if not _is_prime(self.p):
            raise ValueError(f"GF(p) needs a prime modulus, got {self.p}")

    @property
    def characteristic(self) -> int:
        return self.p

    def __call__(self, x) -> ModP:
        if isinstance(x, ModP):
            if x.p != self.p:
                raise ValueError(f"field mismatch: GF({self.p}) vs GF({x.p})")
            return x
        if isinstance(x, (str, float)) or (isinstance(x, Rational) and not isinstance(x, int)):
            x = Fraction(x)
            return ModP(x.numerator, self.p) / x.denominator
        return ModP(int(x), self.p)

    @property
    def zero(self) -> ModP:
        return ModP(0, self.p)

    @property
    def one(self) -> ModP:
        return ModP(1, self.p)

    def __str__(self):
        return f"GF({self.p})"


QQ = RationalField()


def GF(p: int) -> PrimeField:
    return PrimeField(p)


def parse_field(spec) -> RationalField | PrimeField:
    """Accept ``"q"``/``"QQ"``, ``"p:101"``, ``"GF(101)"`` or ``{"prime": 101}``."""
    if isinstance(spec, dict):
        if "prime" in spec:
            return PrimeField(int(spec["prime"]))
        raise ValueError(f"unrecognised field spec {spec!r}")
    s = str(spec).strip()
    if s.lower() in ("q", "qq", "rationals"):
        return QQ
    if s.lower().startswith("p:"):
        return PrimeField(int(s[2:]))
    if s.upper().startswith("GF(") and s.endswith(")"):
        return PrimeField(int(s[3:-1]))
    raise ValueError(f"unrecognised field spec {spec!r}")
