"""Geometric vertex decomposition, biliaison witnesses and glicci certificates.

The certificate follows the induction on (n, |M|): a multicomplex {1} gives a
linear complete intersection; if x_1 lies in I(M) the first form l_{1,0} splits
off and n drops; otherwise the configuration ideal is polarized at x_1, its
geometric vertex decomposition produces a link D (the configuration ideal of
the colon multicomplex M'' with x_1 renamed x_1') and a deletion N (that of the
deletion multicomplex M'), and an elementary biliaison between (P(G)) and D is
checked before recursing on M''.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .algebra import Ideal, Poly, intersect, is_regular_element, radical_member
from .algebra.groebner import is_groebner_basis
from .configuration import ConfigurationIdeal, FormFamily, build_ideal, verify_theorem
from .invariants import height_of
from .multicomplex import Multicomplex, colon_link, deletion
from .polarization import (
    PolarizationContext,
    PolarizedBasis,
    check_induced_gb,
    check_nzd_polarization,
    geom_polarize_basis,
    is_y_compatible,
    polarization_identity_holds,
)


class GvdError(ValueError):
    pass


class GlicciError(RuntimeError):
    def __init__(self, message: str, step=None, check: str | None = None):
        super().__init__(message)
        self.step = step
        self.check = check


@dataclass
class GvdSplit:
    """in_y(I) = y C + N = C ∩ (N + (y)) for a Gröbner basis linear in y."""

    y: int
    link: Ideal
    deletion: Ideal
    initial_y: Ideal
    q: tuple
    r: tuple
    h: tuple
    identities_hold: bool = True

    @property
    def ring(self):
        return self.link.ring


def gvd_split(G: Sequence[Poly], y, order=None, check_groebner: bool = True) -> GvdSplit:
    G = [g for g in G if g]
    if not G:
        raise GvdError("empty basis")
    ring = G[0].ring if order is None else G[0].ring.with_order(order)
    G = [g.change_ring(ring) for g in G]
    yi = ring.index(y)
    for g in G:
        if g.deg_in(yi) >= 2:
            raise GvdError(f"{g} has degree {g.deg_in(yi)} in {ring.variables[yi]}")
    if not is_y_compatible(G, yi):
        raise GvdError(f"order is not {ring.variables[yi]}-compatible on the basis")
    if check_groebner and not is_groebner_basis(G):
        raise GvdError("input is not a Gröbner basis")
    q, r, h = [], [], []
    for g in G:
        parts = g.coefficients_in(yi)
        if 1 in parts:
            q.append(parts[1])
            r.append(parts.get(0, ring.zero()))
        else:
            h.append(g)
    yv = ring.gen(yi)
    C = Ideal(q + h, ring)
    N = Ideal(h, ring)
    inY = Ideal([yv * qi for qi in q] + h, ring)
    ok = inY == Ideal([yv * g for g in C.generators] + h, ring) and inY == intersect(C, N + yv)
    if not ok:
        raise GvdError("in_y(I) = yC + N = C ∩ (N + (y)) fails")
    return GvdSplit(yi, C, N, inY, tuple(q), tuple(r), tuple(h), ok)


def is_nondegenerate(split: GvdSplit) -> bool:
    """C != (1) and sqrt(C) != sqrt(N)."""
    C, N = split.link, split.deletion
    if C.is_unit():
        return False
    if any(not radical_member(g, N) for g in C.generators):
        return True
    return any(not radical_member(g, C) for g in N.generators)


@dataclass(frozen=True)
class BiliaisonWitness:
    """Multiplication by numerator/denominator, numerator = y*denominator + r."""

    numerator: Poly
    denominator: Poly
    y: int
    shift: int = 1
    alternatives: tuple = ()


@dataclass
class BiliaisonVerdict:
    checks: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(self.checks.values())

    @property
    def failed_check(self):
        return next((k for k, v in self.checks.items() if not v), None)

    def __bool__(self):
        return self.passed


def verify_biliaison_step(I: Ideal, D: Ideal, N: Ideal, w: BiliaisonWitness) -> BiliaisonVerdict:
    """Check that multiplication by the witness fraction gives (D/N)(-shift) ≅ I/N.

    Checks, in order: the denominator is regular modulo N; in_y(numerator) =
    y * denominator; numerator in I and denominator in D; N ⊆ I ∩ D; the
    cross-relations between alternative witnesses lie in N; numerator * D ⊆
    denominator * I + N; denominator * I ⊆ numerator * D + N; and
    ht I = ht D = ht N + 1.
    """
    ring = I.ring
    v, d = w.numerator, w.denominator
    yv = ring.gen(w.y)
    out = BiliaisonVerdict()
    out.checks["denominator_regular"] = bool(d) and is_regular_element(d, N)
    out.checks["initial_y"] = bool(v) and v.initial_in(w.y) == yv * d
    out.checks["witness_membership"] = v in I and d in D
    out.checks["deletion_contained"] = all(h in I and h in D for h in N.generators)
    pairs = [(v, d)] + list(w.alternatives)
    out.checks["cross_relations"] = all(
        (di * vj - dj * vi) in N
        for a, (vi, di) in enumerate(pairs)
        for (vj, dj) in pairs[a + 1:]
    )
    dI = Ideal([d * f for f in I.generators] + list(N.generators), ring)
    out.checks["maps_into"] = all(v * g in dI for g in D.generators)
    vD = Ideal([v * g for g in D.generators] + list(N.generators), ring)
    out.checks["surjective"] = all(d * f in vD for f in I.generators)
    hI, hD = height_of(I), height_of(D)
    hN = height_of(N) if not N.is_zero() else 0
    out.checks["heights"] = hI == hD == hN + 1
    return out


# -- certificate --------------------------------------------------------------------------


@dataclass
class BiliaisonStep:
    multicomplex: Multicomplex
    ideal: Ideal
    polarized: PolarizedBasis
    split: GvdSplit
    witness: BiliaisonWitness
    verdict: BiliaisonVerdict
    checks: dict
    link_multicomplex: Multicomplex
    deletion_multicomplex: Multicomplex
    geometric: bool = True
    kind: str = "biliaison"

    @property
    def link(self) -> Ideal:
        return self.split.link

    @property
    def deletion(self) -> Ideal:
        return self.split.deletion


@dataclass
class VariableSplitStep:
    multicomplex: Multicomplex
    form: Poly
    reduced: Multicomplex
    checks: dict
    note: str = "the split form is l_{1,0}, the first form of F_1"
    kind: str = "variable-split"


@dataclass
class BaseCaseStep:
    """The linear complete intersection ending the chain.

    ``generators`` includes the forms split off by earlier variable-split steps.
    """

    generators: tuple
    linear: bool = True
    split_forms: tuple = ()
    kind: str = "base-case"


@dataclass
class GlicciCertificate:
    steps: list = field(default_factory=list)

    @property
    def biliaison_count(self) -> int:
        return sum(1 for s in self.steps if s.kind == "biliaison")

    @property
    def final(self):
        return self.steps[-1] if self.steps else None

    @property
    def valid(self) -> bool:
        fin = self.final
        if not isinstance(fin, BaseCaseStep) or not fin.linear:
            return False
        for s in self.steps:
            if isinstance(s, (BiliaisonStep, VariableSplitStep)) and not all(s.checks.values()):
                return False
        return True

    def kinds(self) -> list:
        return [s.kind for s in self.steps]

    def summary(self) -> dict:
        steps = []
        for s in self.steps:
            entry = {"kind": s.kind}
            if isinstance(s, BiliaisonStep):
                entry["multicomplex_size"] = len(s.multicomplex)
                entry["link"] = [str(g) for g in s.link.generators]
                entry["deletion"] = [str(g) for g in s.deletion.generators]
                entry["witness"] = {
                    "numerator": str(s.witness.numerator),
                    "denominator": str(s.witness.denominator),
                    "shift": s.witness.shift,
                }
                entry["checks"] = dict(s.checks)
                entry["geometric_polarization"] = s.geometric
            elif isinstance(s, VariableSplitStep):
                entry["form"] = str(s.form)
                entry["checks"] = dict(s.checks)
                entry["note"] = s.note
            else:
                entry["generators"] = [str(g) for g in s.generators]
                entry["linear"] = s.linear
            steps.append(entry)
        return {
            "biliaison_steps": self.biliaison_count,
            "length": len(self.steps),
            "kinds": self.kinds(),
            "valid": self.valid,
            "steps": steps,
        }


def _fail(step, checks: dict):
    bad = next(k for k, v in checks.items() if not v)
    raise GlicciError(f"{step.kind} step failed check {bad!r}", step=step, check=bad)


def glicci_chain(
    M: Multicomplex,
    F: FormFamily,
    order=None,
    ring=None,
    check_side_conditions: bool = True,
) -> GlicciCertificate:
    """Build and check a chain of biliaisons from I(M, F) down to a linear complete intersection."""
    if ring is None:
        ring = F.ring
    if order is not None:
        ring = ring.with_order(order)
    F = F.with_ring(ring)
    cert = GlicciCertificate()
    _descend(M, F, ring, cert, check_side_conditions)
    return cert


def _descend(M: Multicomplex, F: FormFamily, ring, cert: GlicciCertificate, side: bool):
    split: list = []
    while True:
        if M.is_point():
            gens = tuple(split) + tuple(fam[0] for fam in F.families)
            linear = all(g.is_homogeneous() and g.degree() == 1 for g in gens)
            cert.steps.append(BaseCaseStep(gens, linear, tuple(split)))
            return
        if (1,) + (0,) * (M.n - 1) not in M:
            split.append(F[0][0])
            M, F = _variable_split(M, F, ring, cert)
            continue
        M, F = _biliaison(M, F, ring, cert, side)


def _variable_split(M, F, ring, cert):
    form = F[0][0]
    y = ring.index(M.variables[0])
    Mr = deletion(M, 0)
    Fr = FormFamily(F.families[1:])
    I = build_ideal(M, F, ring=ring).ideal
    Ir = build_ideal(Mr, Fr, ring=ring).ideal
    checks = {
        "forms_avoid_variable": all(not p.involves(y) for fam in Fr.families for p in fam)
        and all(not g.involves(y) for g in Ir.generators),
        "ideal_splits": I == Ir + form,
    }
    step = VariableSplitStep(M, form, Mr, checks)
    cert.steps.append(step)
    if not all(checks.values()):
        _fail(step, checks)
    return Mr, Fr


def polarize_configuration(conf: ConfigurationIdeal, ctx: PolarizationContext) -> PolarizedBasis:
    """Polarize the product generators factorwise at the first variable.

    Each f(a) with a_1 > 0 becomes l_{1,0} * prod_{1<=j<a_1} l'_{1,j} * (the other
    factors), where l' is l with y renamed y'. When l_{1,0} is a multiple of y
    this equals the one-step geometric polarization of the generators.
    """
    F = conf.family
    out = []
    for a in conf.exponents:
        f = ctx.ring.one()
        for i, ai in enumerate(a):
            for j in range(ai):
                form = F[i][j]
                f = f * (ctx.rename_y(form) if i == 0 and j >= 1 else ctx.lift(form))
        out.append(f)
    return PolarizedBasis(tuple(out), ctx)


def _biliaison(M, F, ring, cert, side):
    yname = M.variables[0]
    conf = build_ideal(M, F, ring=ring)
    G = list(conf.generators)
    ctx = PolarizationContext.create(ring, yname)
    P = polarize_configuration(conf, ctx)
    checks: dict = {}
    checks["y_compatible"] = is_y_compatible(G, yname)
    checks["depolarizes"] = all(ctx.depolarize(p) == g for p, g in zip(P.elements, G))
    checks["polarization_identity"] = polarization_identity_holds(G, P)
    checks["nonzerodivisor"] = check_nzd_polarization(P)
    checks["induced_groebner"] = check_induced_gb(P)
    split = gvd_split(P.elements, ctx.y, check_groebner=False)
    checks["nondegenerate"] = is_nondegenerate(split)

    Md = deletion(M, 0)
    Fd = FormFamily(F.families[1:])
    Mc = colon_link(M, 0)
    Fc = FormFamily((F[0][1:],) + F.families[1:]).truncate(Mc.caps)
    N_conf = build_ideal(Md, Fd, ring=ring).ideal
    D_conf = build_ideal(Mc, Fc, ring=ring).ideal
    N_expected = Ideal([ctx.lift(g) for g in N_conf.generators], ctx.ring)
    D_expected = Ideal([ctx.rename_y(g) for g in D_conf.generators], ctx.ring)
    checks["deletion_matches"] = split.deletion == N_expected
    checks["link_matches"] = split.link == D_expected

    pairs = [(ctx.ring.gen(ctx.y) * q + r, q) for q, r in zip(split.q, split.r)]
    # the fraction v/d needs d regular modulo N; the other pairs must agree with it
    first = next((k for k, (_, q) in enumerate(pairs) if is_regular_element(q, split.deletion)), 0)
    pairs.insert(0, pairs.pop(first))
    witness = BiliaisonWitness(pairs[0][0], pairs[0][1], ctx.y, 1, tuple(pairs[1:]))
    verdict = verify_biliaison_step(P.ideal(), split.link, split.deletion, witness)
    checks["biliaison"] = verdict.passed
    if side:
        # N and D are configuration ideals themselves: the theorem's checks on their
        # data certify CM/G0 for N and unmixedness for D
        checks["deletion_certified"] = Md.n == 0 or verify_theorem(Md, Fd.with_ring(ring)).passed
        checks["link_certified"] = verify_theorem(Mc, Fc).passed
    # does the factorwise polarization coincide with the one-step geometric one?
    geometric = geom_polarize_basis(G, ctx).elements == P.elements
    step = BiliaisonStep(M, conf.ideal, P, split, witness, verdict, checks, Mc, Md, geometric)
    cert.steps.append(step)
    if not all(checks.values()):
        _fail(step, checks)
    return Mc, Fc
