"""Multicomplex configuration ideals and the checks of the main structure theorem.

For a multicomplex M with minimal non-members E and forms l_{i,j}, the
configuration ideal is generated by f(a) = prod_i prod_{j<a_i} l_{i,j}, a in E.
When every F_i is x_i-initial and the point ideals (l_{1,b_1}, ..., l_{n,b_n}),
x^b in M, are distinct, f(a) is a Gröbner basis with initial ideal I(M)S and
the ideal is the intersection of those point ideals.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from typing import Sequence

from .algebra import Ideal, Poly, Ring, intersect, rref
from .algebra.groebner import first_nonreducing_pair
from .algebra.monomial import unit_vector
from .multicomplex import Multicomplex, MonomialIdeal, ideal_of


class ConfigurationError(ValueError):
    pass


@dataclass(frozen=True)
class FormFamily:
    """Ordered lists F_1, ..., F_n of forms; F_i is attached to the i-th multicomplex variable."""

    families: tuple

    def __post_init__(self):
        fams = tuple(tuple(f) for f in self.families)
        object.__setattr__(self, "families", fams)
        rings = {p.ring for fam in fams for p in fam}
        if len({r.variables for r in rings}) > 1:
            raise ConfigurationError("all forms must live in one ring")

    @classmethod
    def from_coefficients(cls, ring: Ring, vectors: Sequence[Sequence[Sequence]]) -> "FormFamily":
        return cls(tuple(tuple(ring.linear_form(v) for v in fam) for fam in vectors))

    @property
    def ring(self) -> Ring:
        for fam in self.families:
            for p in fam:
                return p.ring
        raise ConfigurationError("empty form family has no ring")

    def __len__(self):
        return len(self.families)

    def __getitem__(self, i):
        return self.families[i]

    def sizes(self) -> tuple:
        return tuple(len(f) for f in self.families)

    def truncate(self, caps: Sequence[int]) -> "FormFamily":
        return FormFamily(tuple(fam[: c + 1] for fam, c in zip(self.families, caps)))

    def with_ring(self, ring: Ring) -> "FormFamily":
        return FormFamily(tuple(tuple(p.change_ring(ring) for p in fam) for fam in self.families))

    def is_linear(self) -> bool:
        return all(p.is_homogeneous() and p.degree() == 1 for fam in self.families for p in fam)


@dataclass(frozen=True)
class ValidationIssue:
    check: str
    index: tuple
    message: str


@dataclass
class ValidationReport:
    issues: list = field(default_factory=list)
    point_ideal_count: int = 0

    @property
    def ok(self) -> bool:
        return not self.issues

    def __bool__(self):
        return self.ok

    def add(self, check: str, index, message: str):
        self.issues.append(ValidationIssue(check, tuple(index), message))


@dataclass(frozen=True)
class PointIdeal:
    """(l_{1,b_1}, ..., l_{n,b_n}) for x^b in M, with its RREF as canonical form."""

    exponent: tuple
    forms: tuple
    canonical: tuple

    def ideal(self, ring: Ring | None = None) -> Ideal:
        if ring is None:
            ring = self.forms[0].ring
        return Ideal(self.forms, ring)

    @property
    def rank(self) -> int:
        return len(self.canonical)


@dataclass
class ConfigurationIdeal:
    ideal: Ideal
    exponents: tuple
    multicomplex: Multicomplex
    family: FormFamily

    @property
    def generators(self) -> tuple:
        return self.ideal.generators


def _variable_indices(M: Multicomplex, ring: Ring) -> list[int]:
    try:
        return [ring.index(v) for v in M.variables]
    except KeyError as exc:
        raise ConfigurationError(f"multicomplex variable not in the ring: {exc}") from None


def _canonical(forms: Sequence[Poly], ring: Ring) -> tuple:
    rows = []
    for p in forms:
        row = [ring.field.zero] * ring.nvars
        for e, c in p.terms.items():
            row[e.index(1)] = c
        rows.append(row)
    R, _ = rref(rows, ring.field)
    return tuple(tuple(r) for r in R)


def _point_forms(b: tuple, F: FormFamily) -> tuple:
    return tuple(F[i][k] for i, k in enumerate(b))


def validate_input(M: Multicomplex, F: FormFamily, order=None) -> ValidationReport:
    """Check the hypotheses of the structure theorem; failures are reported, not raised."""
    report = ValidationReport()
    if len(F) != M.n:
        report.add("families", (), f"expected {M.n} form families, got {len(F)}")
        return report
    if M.n == 0:
        return report
    ring = F.ring if order is None else F.ring.with_order(order)
    F = F.with_ring(ring)
    try:
        idx = _variable_indices(M, ring)
    except ConfigurationError as exc:
        report.add("variables", (), str(exc))
        return report
    if idx != sorted(idx):
        report.add("order", (), "multicomplex variables are not listed in ring order")
    key = ring.order.key
    units = [unit_vector(ring.nvars, k) for k in range(ring.nvars)]
    for k in range(ring.nvars - 1):
        if not key(units[k]) > key(units[k + 1]):
            report.add(
                "order", (k,),
                f"order does not rank {ring.variables[k]} above {ring.variables[k + 1]}",
            )
    sizes_ok = True
    for i, fam in enumerate(F.families):
        if len(fam) != M.caps[i] + 1:
            sizes_ok = False
            report.add(
                "size", (i,),
                f"family F_{i + 1} has {len(fam)} forms, expected {M.caps[i] + 1}",
            )
        for j, p in enumerate(fam):
            if not p or not p.is_homogeneous() or p.degree() != 1:
                report.add("linear", (i, j), f"form l_{i + 1},{j} = {p} is not a linear form")
            elif p.lm != units[idx[i]]:
                report.add(
                    "initial", (i, j),
                    f"form l_{i + 1},{j} = {p} is not {M.variables[i]}-initial",
                )
    if not sizes_ok or any(iss.check == "linear" for iss in report.issues):
        return report
    seen: dict = {}
    for b in M.sorted():
        pt = _canonical(_point_forms(b, F), ring)
        report.point_ideal_count += 1
        if len(pt) != M.n:
            report.add("independent", b, f"forms of the point ideal at {b} are linearly dependent")
        if pt in seen:
            report.add("distinct", b, f"point ideals at {seen[pt]} and {b} coincide")
        else:
            seen[pt] = b
    return report


def configuration_generator(a: Sequence[int], F: FormFamily, ring: Ring) -> Poly:
    """f(a) = prod_i prod_{j < a_i} l_{i,j}."""
    f = ring.one()
    for i, ai in enumerate(a):
        for j in range(ai):
            f = f * F[i][j]
    return f


def build_ideal(M: Multicomplex, F: FormFamily, order=None, ring: Ring | None = None) -> ConfigurationIdeal:
    """The configuration ideal of (M, F).

    Linear families must pass :func:`validate_input`. Homogeneous forms of higher
    degree are accepted with a warning (construction only).
    """
    if len(F) != M.n:
        raise ConfigurationError(f"expected {M.n} form families, got {len(F)}")
    if ring is None:
        if M.n == 0:
            raise ConfigurationError("an empty multicomplex ambient needs an explicit ring")
        ring = F.ring
    if order is not None:
        ring = ring.with_order(order)
    F = F.with_ring(ring)
    if F.is_linear():
        report = validate_input(M, F)
        if not report.ok:
            raise ConfigurationError("; ".join(i.message for i in report.issues))
    else:
        for i, fam in enumerate(F.families):
            if len(fam) != M.caps[i] + 1:
                raise ConfigurationError(
                    f"family F_{i + 1} has {len(fam)} forms, expected {M.caps[i] + 1}"
                )
            for p in fam:
                if not p or not p.is_homogeneous():
                    raise ConfigurationError(f"form {p} is not homogeneous")
        warnings.warn(
            "nonlinear forms: the ideal is built but the structure theorem does not apply",
            stacklevel=2,
        )
    E = ideal_of(M).generators
    gens = [configuration_generator(a, F, ring) for a in E]
    return ConfigurationIdeal(Ideal(gens, ring), E, M, F)


def point_ideals(M: Multicomplex, F: FormFamily) -> list[PointIdeal]:
    ring = F.ring
    out = []
    for b in M.sorted():
        forms = _point_forms(b, F)
        out.append(PointIdeal(b, forms, _canonical(forms, ring)))
    return out


# -- theorem verification ---------------------------------------------------------------


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: dict = field(default_factory=dict)

    def __bool__(self):
        return self.passed


@dataclass
class TheoremReport:
    checks: list = field(default_factory=list)
    degree: int | None = None
    height: int | None = None
    size: int = 0
    initial_ideal: MonomialIdeal | None = None

    @property
    def passed(self) -> bool:
        return bool(self.checks) and all(c.passed for c in self.checks)

    def __bool__(self):
        return self.passed

    def __getitem__(self, name) -> CheckResult:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def first_failure(self):
        return next((c for c in self.checks if not c.passed), None)


def intersect_all(ideals: Sequence[Ideal]) -> Ideal:
    J = ideals[0]
    for P in ideals[1:]:
        J = intersect(J, P)
    return J


def initial_monomial_ideal(I: Ideal) -> MonomialIdeal:
    return MonomialIdeal(tuple(I.leading_monomials()), I.ring.nvars, I.ring.variables)


def verify_theorem(M: Multicomplex, F: FormFamily, order=None) -> TheoremReport:
    """Check primary decomposition, Gröbner basis, initial ideal and Cohen-Macaulayness of I(M, F).

    Every sub-check failure becomes a failed entry carrying the offending data.
    """
    from .invariants import degree_of, height_monomial

    report = TheoremReport(size=len(M))
    ring = F.ring if order is None else F.ring.with_order(order)
    F = F.with_ring(ring)
    validation = validate_input(M, F)
    report.checks.append(
        CheckResult(
            "hypotheses",
            validation.ok,
            {"issues": [i.message for i in validation.issues], "point_ideals": validation.point_ideal_count},
        )
    )
    if not validation.ok:
        return report
    conf = build_ideal(M, F)
    I = conf.ideal
    idx = _variable_indices(M, ring)

    # (1) primary decomposition: containment, then equality with the intersection
    pts = point_ideals(M, F)
    bad = []
    for pt in pts:
        P = pt.ideal(ring)
        for g in I.generators:
            if g not in P:
                bad.append({"point": list(pt.exponent), "generator": str(g)})
    if bad:
        report.checks.append(CheckResult("primary_decomposition", False, {"not_contained": bad}))
    else:
        J = intersect_all([pt.ideal(ring) for pt in pts])
        eq = J == I
        detail = {"components": len(pts)}
        if not eq:
            detail["intersection_gb"] = [str(g) for g in J.gb]
            detail["ideal_gb"] = [str(g) for g in I.gb]
        report.checks.append(CheckResult("primary_decomposition", eq, detail))

    # (2) the generators f(a) satisfy Buchberger's criterion
    bad_pair = first_nonreducing_pair(list(I.generators))
    detail = {}
    if bad_pair is not None:
        i, j, r = bad_pair
        detail = {"pair": [str(I.generators[i]), str(I.generators[j])], "remainder": str(r)}
    report.checks.append(CheckResult("groebner_basis", bad_pair is None, detail))

    # (3) in(I) = I(M)S
    expected = MonomialIdeal(
        tuple(_extend(a, idx, ring.nvars) for a in conf.exponents), ring.nvars, ring.variables
    )
    lead_gens = MonomialIdeal(tuple(g.lm for g in I.generators), ring.nvars, ring.variables)
    init = initial_monomial_ideal(I)
    report.initial_ideal = init
    ok3 = init == expected and lead_gens == expected
    detail = {"initial_ideal": str(init)}
    if not ok3:
        detail["expected"] = str(expected)
        detail["generator_leads"] = str(lead_gens)
    report.checks.append(CheckResult("initial_ideal", ok3, detail))

    # (4) height n, degree |M|, CM certificate from the Artinian initial ideal
    report.height = height_monomial(init)
    report.degree = degree_of(I)
    artinian_ext = all(set(i for i, k in enumerate(g) if k) <= set(idx) for g in init.generators) and all(
        any(g[k] and sum(g) == g[k] for g in init.generators) for k in idx
    )
    ok4 = report.height == M.n and report.degree == len(M) and artinian_ext
    report.checks.append(
        CheckResult(
            "cohen_macaulay",
            ok4,
            {
                "height": report.height,
                "expected_height": M.n,
                "degree": report.degree,
                "expected_degree": len(M),
                "artinian_initial_ideal": artinian_ext,
            },
        )
    )
    return report


def _extend(a: Sequence[int], idx: Sequence[int], m: int) -> tuple:
    e = [0] * m
    for i, k in zip(idx, a):
        e[i] = k
    return tuple(e)


__all__ = [
    "ConfigurationError",
    "FormFamily",
    "ValidationIssue",
    "ValidationReport",
    "PointIdeal",
    "ConfigurationIdeal",
    "CheckResult",
    "TheoremReport",
    "validate_input",
    "build_ideal",
    "point_ideals",
    "configuration_generator",
    "initial_monomial_ideal",
    "intersect_all",
    "verify_theorem",
]
