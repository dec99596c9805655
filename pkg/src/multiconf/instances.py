"""Problem documents: parsing, serialization and seeded random instances."""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from .algebra import QQ, Lex, Poly, Ring, parse_field
from .configuration import FormFamily, validate_input
from .multicomplex import Multicomplex, MulticomplexError, MonomialIdeal, standard_monomials


class InputError(ValueError):
    """Invalid problem document; ``errors`` lists ``(location, message)`` pairs."""

    def __init__(self, errors: list):
        self.errors = list(errors)
        super().__init__("; ".join(f"{loc}: {msg}" for loc, msg in self.errors))


@dataclass
class ProblemInput:
    ring: Ring
    multicomplex: Multicomplex
    families: FormFamily
    document: dict = field(default_factory=dict)

    @property
    def field(self):
        return self.ring.field


def _coefficient(x, loc: str):
    if isinstance(x, bool) or not isinstance(x, (int, str, float)):
        raise InputError([(loc, f"coefficient {x!r} is not a number")])
    if isinstance(x, float):
        if not x.is_integer():
            raise InputError([(loc, "write non-integer coefficients as strings like '3/2'")])
        x = int(x)
    try:
        return Fraction(x)
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError([(loc, f"bad coefficient {x!r}: {exc}")]) from None


def _form(spec, ring: Ring, loc: str) -> Poly:
    if isinstance(spec, dict):
        terms = spec.get("terms")
        if not isinstance(terms, list):
            raise InputError([(loc, "expected a 'terms' list of [exponents, coefficient] pairs")])
        pairs = []
        for k, t in enumerate(terms):
            if not (isinstance(t, list) and len(t) == 2 and isinstance(t[0], list)):
                raise InputError([(f"{loc}.terms[{k}]", "expected [exponents, coefficient]")])
            if len(t[0]) != ring.nvars or not all(isinstance(e, int) and e >= 0 for e in t[0]):
                raise InputError([(f"{loc}.terms[{k}]", f"expected {ring.nvars} non-negative exponents")])
            pairs.append((tuple(t[0]), _coefficient(t[1], f"{loc}.terms[{k}]")))
        return ring.from_terms(pairs)
    if not isinstance(spec, list):
        raise InputError([(loc, "expected a coefficient vector or a {'terms': ...} object")])
    if len(spec) != ring.nvars:
        raise InputError([(loc, f"expected {ring.nvars} coefficients, got {len(spec)}")])
    return ring.linear_form([_coefficient(c, f"{loc}[{k}]") for k, c in enumerate(spec)])


def _order(spec, variables: tuple, loc: str = "order"):
    if spec is None:
        return Lex.standard(len(variables))
    if isinstance(spec, dict):
        kind = spec.get("kind", "lex")
        if kind != "lex":
            raise InputError([(loc, f"unsupported order kind {kind!r}")])
        spec = spec.get("rank")
    if not isinstance(spec, list):
        raise InputError([(loc, "expected a list of variable names or indices")])
    try:
        rank = tuple(variables.index(v) if isinstance(v, str) else int(v) for v in spec)
        return Lex(rank)
    except ValueError as exc:
        raise InputError([(loc, str(exc))]) from None


def parse_input(document, field_override=None) -> ProblemInput:
    """Parse and validate a problem document (a dict or JSON text)."""
    if isinstance(document, (str, bytes)):
        try:
            document = json.loads(document)
        except json.JSONDecodeError as exc:
            raise InputError([("document", f"invalid JSON: {exc}")]) from None
    if not isinstance(document, dict):
        raise InputError([("document", "expected a JSON object")])
    errors = []
    known = {"field", "variables", "caps", "multicomplex", "ideal", "families", "order", "multicomplex_variables"}
    for key in document:
        if key not in known:
            errors.append((key, "unknown key"))
    for key in ("variables", "families"):
        if key not in document:
            errors.append((key, "missing"))
    if ("multicomplex" in document) == ("ideal" in document):
        errors.append(("multicomplex", "give exactly one of 'multicomplex' or 'ideal'"))
    if errors:
        raise InputError(errors)

    try:
        fld = parse_field(field_override if field_override is not None else document.get("field", "q"))
    except ValueError as exc:
        raise InputError([("field", str(exc))]) from None
    variables = document["variables"]
    if not (isinstance(variables, list) and variables and all(isinstance(v, str) for v in variables)):
        raise InputError([("variables", "expected a nonempty list of names")])
    if len(set(variables)) != len(variables):
        raise InputError([("variables", "duplicate names")])
    variables = tuple(variables)
    ring = Ring(variables, fld, _order(document.get("order"), variables))

    mvars = document.get("multicomplex_variables")
    try:
        if "multicomplex" in document:
            mons = document["multicomplex"]
            if not isinstance(mons, list) or not all(isinstance(a, list) for a in mons):
                raise InputError([("multicomplex", "expected a list of exponent vectors")])
            caps = document.get("caps")
            if caps is None:
                M = Multicomplex.from_monomials(mons)
            else:
                M = Multicomplex(tuple(caps), frozenset(tuple(a) for a in mons))
        else:
            gens = document["ideal"]
            if not isinstance(gens, list) or not gens:
                raise InputError([("ideal", "expected a nonempty list of exponent vectors")])
            n = len(gens[0])
            I = MonomialIdeal(tuple(tuple(g) for g in gens), n)
            M = standard_monomials(I)
            if "caps" in document:
                M = Multicomplex(tuple(document["caps"]), M.monomials)
    except (MulticomplexError, TypeError) as exc:
        raise InputError([("multicomplex" if "multicomplex" in document else "ideal", str(exc))]) from None
    if mvars is None:
        if M.n > len(variables):
            raise InputError([("multicomplex", f"{M.n} multicomplex variables but only {len(variables)} ring variables")])
        mvars = variables[: M.n]
    try:
        M = Multicomplex(M.caps, M.monomials, tuple(mvars))
    except MulticomplexError as exc:
        raise InputError([("multicomplex_variables", str(exc))]) from None

    fams = document["families"]
    if not isinstance(fams, list) or not all(isinstance(f, list) for f in fams):
        raise InputError([("families", "expected a list of lists of forms")])
    if len(fams) != M.n:
        raise InputError([("families", f"expected {M.n} families, got {len(fams)}")])
    for i, fam in enumerate(fams):
        if len(fam) != M.caps[i] + 1:
            errors.append((f"families[{i}]", f"family F_{i + 1} has {len(fam)} forms, expected {M.caps[i] + 1}"))
    if errors:
        raise InputError(errors)
    F = FormFamily(
        tuple(tuple(_form(p, ring, f"families[{i}][{j}]") for j, p in enumerate(fam)) for i, fam in enumerate(fams))
    ) if M.n else FormFamily(())
    if M.n:
        report = validate_input(M, F)
        if not report.ok:
            raise InputError([(_location(iss), iss.message) for iss in report.issues])
    return ProblemInput(ring, M, F, document)


def _location(issue) -> str:
    if issue.check in ("linear", "initial"):
        i, j = issue.index
        return f"families[{i}][{j}]"
    if issue.check == "size":
        return f"families[{issue.index[0]}]"
    if issue.check in ("independent", "distinct"):
        return "families"
    return issue.check


def _coeff_json(c):
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else str(c)
    return int(c.value) if hasattr(c, "value") else c


def to_document(problem: ProblemInput) -> dict:
    """Inverse of :func:`parse_input` (linear forms as coefficient vectors)."""
    ring = problem.ring
    M = problem.multicomplex
    fams = []
    for fam in problem.families.families:
        out = []
        for p in fam:
            if p.is_homogeneous() and p.degree() == 1:
                vec = [0] * ring.nvars
                for e, c in p.terms.items():
                    vec[e.index(1)] = _coeff_json(c)
                out.append(vec)
            else:
                out.append({"terms": [[list(e), _coeff_json(c)] for e, c in p.sorted_terms()]})
        fams.append(out)
    doc = {
        "field": "q" if ring.field == QQ else f"p:{ring.field.p}",
        "variables": list(ring.variables),
        "caps": list(M.caps),
        "multicomplex": [list(a) for a in M.sorted()],
        "families": fams,
    }
    if M.variables != ring.variables[: M.n]:
        doc["multicomplex_variables"] = list(M.variables)
    return doc


def _random_downset(rng: random.Random, caps: tuple) -> frozenset:
    n = len(caps)
    tops = [tuple(rng.randint(0, c) for c in caps) for _ in range(rng.randint(1, 3))]
    mons = set()
    for t in tops:
        stack = [t]
        while stack:
            a = stack.pop()
            if a in mons:
                continue
            mons.add(a)
            for i in range(n):
                if a[i]:
                    stack.append(a[:i] + (a[i] - 1,) + a[i + 1:])
    return frozenset(mons)


def random_instance(
    rng: random.Random,
    fld=QQ,
    max_n: int = 3,
    max_cap: int = 3,
    max_m: int = 5,
    coeff_bound: int = 5,
    max_tries: int = 1000,
) -> ProblemInput:
    """Rejection-sample a valid instance.

    Forms are x_i-initial by construction: l_{i,j} has a nonzero coefficient on
    x_i, zeros on earlier variables and random entries in [-bound, bound] after.
    Samples are rejected until the point ideals are distinct and independent.
    """
    for _ in range(max_tries):
        n = rng.randint(1, max_n)
        m = rng.randint(n + 1, max(n + 1, max_m))
        caps_draw = tuple(rng.randint(0, max_cap) for _ in range(n))
        mons = _random_downset(rng, caps_draw)
        caps = Multicomplex.from_monomials(mons).caps
        variables = tuple(f"x{k + 1}" for k in range(m))
        ring = Ring(variables, fld)
        fams = []
        for i in range(n):
            fam = []
            for _ in range(caps[i] + 1):
                lead = rng.choice([c for c in range(-coeff_bound, coeff_bound + 1) if fld(c)])
                vec = [0] * i + [lead] + [rng.randint(-coeff_bound, coeff_bound) for _ in range(m - i - 1)]
                fam.append(ring.linear_form(vec))
            fams.append(tuple(fam))
        F = FormFamily(tuple(fams))
        M = Multicomplex(caps, mons, variables[:n])
        if validate_input(M, F).ok:
            return ProblemInput(ring, M, F)
    raise RuntimeError("no valid instance found; loosen the bounds")


def random_document(seed: int, fld=QQ, **bounds: Any) -> dict:
    return to_document(random_instance(random.Random(seed), fld, **bounds))
