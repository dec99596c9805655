from fractions import Fraction
from itertools import permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from multiconf import (
    GF,
    QQ,
    Ideal,
    InducedOrder,
    Lex,
    ModP,
    Ring,
    build_ideal,
    colon,
    intersect,
    is_regular_element,
    parse_field,
    radical_member,
    reduced_groebner,
    term_cmp,
)
from multiconf.algebra import divide, is_groebner_basis, reduce, zero_divisor_witness
from multiconf.polarization import PolarizationContext, geom_polarize_basis


# -- fields ------------------------------------------------------------------------------


def test_rationals_lowest_terms():
    x = QQ("-6/4")
    assert x == Fraction(-3, 2) and x.denominator == 2


def test_prime_field_residues():
    F = GF(7)
    a = F(-1)
    assert a.value == 6
    assert F(3) * F(5) == F(1)
    assert F(3) / F(5) * F(5) == F(3)
    assert F(Fraction(1, 2)) * 2 == F(1)
    with pytest.raises(ValueError):
        GF(8)
    with pytest.raises(ZeroDivisionError):
        F(1) / F(0)


@given(st.integers(), st.integers(min_value=1, max_value=10**6))
def test_prime_field_inverse(a, b):
    F = GF(101)
    x = F(a)
    if x:
        assert x * (1 / x) == F(1)
    assert isinstance(x, ModP) and 0 <= x.value < 101


def test_parse_field():
    assert parse_field("q") is QQ
    assert parse_field("p:101") == GF(101)
    assert parse_field("GF(5)") == GF(5)
    assert parse_field({"prime": 3}) == GF(3)
    with pytest.raises(ValueError):
        parse_field("z")


# -- term orders -------------------------------------------------------------------------


def test_induced_order_examples():
    order = InducedOrder(Lex.standard(3), 0)
    # ambient (x1, x2, x3, x1')
    x1x1p, x1sq, x1x2 = (1, 0, 0, 1), (2, 0, 0, 0), (1, 1, 0, 0)
    assert term_cmp(order, x1x1p, x1sq) == -1
    assert term_cmp(order, x1x1p, x1x2) == 1
    assert term_cmp(order, x1x2, x1x2) == 0


def test_term_cmp_ambient_mismatch():
    with pytest.raises(ValueError):
        term_cmp(Lex.standard(3), (1, 0), (0, 1))


monos4 = st.tuples(*[st.integers(0, 3)] * 4)
orders4 = st.sampled_from(
    [Lex.standard(4), Lex((2, 0, 3, 1)), InducedOrder(Lex.standard(3), 0), InducedOrder(Lex((1, 2, 0)), 2)]
)


@given(orders4, monos4, monos4, monos4)
def test_term_order_axioms(order, a, b, c):
    ab, ba = term_cmp(order, a, b), term_cmp(order, b, a)
    assert ab == -ba
    assert (ab == 0) == (a == b)
    if ab < 0 and term_cmp(order, b, c) < 0:
        assert term_cmp(order, a, c) < 0
    ac = tuple(x + y for x, y in zip(a, c))
    bc = tuple(x + y for x, y in zip(b, c))
    assert term_cmp(order, ac, bc) == ab
    assert term_cmp(order, (0, 0, 0, 0), a) <= 0


@given(monos4, monos4)
def test_induced_order_restricts_to_base(a, b):
    a, b = a[:3] + (0,), b[:3] + (0,)
    base = Lex.standard(3)
    assert term_cmp(InducedOrder(base, 1), a, b) == term_cmp(base, a[:3], b[:3])


# -- polynomials -------------------------------------------------------------------------


def test_polynomial_text(R3):
    x1, x2, x3 = R3.gens()
    f = x1**3 + 3 * x1**2 * x3 - x2
    assert str(f) == "x1^3 + 3*x1^2*x3 - x2"
    assert f.lm == (3, 0, 0) and f.lc == 1
    assert str(R3.zero()) == "0"


polys = st.dictionaries(
    st.tuples(*[st.integers(0, 2)] * 3), st.integers(-4, 4), max_size=4
)


@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    R = Ring(("x1", "x2", "x3"))
    f, g, h = (R.from_terms(d.items()) for d in (a, b, c))
    assert (f + g) * h == f * h + g * h
    assert f * g == g * f
    assert (f - f).is_zero()
    assert (f * g).terms == oracles.mul(f.terms, g.terms)


@given(polys)
def test_substitution_evaluation(a):
    R = Ring(("x1", "x2", "x3"))
    f = R.from_terms(a.items())
    pt = (Fraction(2), Fraction(-1), Fraction(1, 3))
    assert f.evaluate(pt) == oracles.evaluate(f.terms, pt)


# -- reduction and Gröbner bases ---------------------------------------------------------


def _four_points_gb(ex):
    R, M, F = ex
    return build_ideal(M, F).ideal.gb


def test_reduce_generator_to_zero(four_points):
    R = four_points[0]
    x1, x2, x3 = R.gens()
    assert reduce(x1 * (x2 + x3), _four_points_gb(four_points)).is_zero()


def test_reduce_empty_basis(R3):
    f = R3.gen(0) ** 2 + 1
    assert reduce(f, []) == f


def test_reduce_hand_division(four_points):
    # x2^3 = (x2 - x3)(x2^2 + x2 x3) + x2 x3^2
    R = four_points[0]
    x1, x2, x3 = R.gens()
    r = reduce(x2**3, _four_points_gb(four_points))
    assert r == x2 * x3**2
    assert oracles.in_ideal_bounded((x2**3 - r).terms, [g.terms for g in _four_points_gb(four_points)], 3)


def test_division_identity(four_points):
    R = four_points[0]
    x1, x2, x3 = R.gens()
    G = _four_points_gb(four_points)
    f = x1**4 + x2**3 * x3 - 7 * x1 * x3**2
    qs, r = divide(f, G)
    assert sum((q * g for q, g in zip(qs, G)), R.zero()) + r == f
    assert all(not any(all(x <= y for x, y in zip(g.lm, m)) for g in G) for m in r.terms)


def test_reduced_gb_of_four_points(four_points):
    R, M, F = four_points
    x1, x2, x3 = R.gens()
    gens = build_ideal(M, F).generators
    gb = reduced_groebner(gens)
    assert [g.lm for g in gb] == [(3, 0, 0), (1, 1, 0), (0, 2, 0)]
    assert all(g.lc == 1 for g in gb)
    # tail-reduced forms of the product generators
    assert gb == [
        x1**3 + 3 * x1**2 * x3 + 2 * x1 * x3**2,
        x1 * x2 + x1 * x3,
        x2**2 + x2 * x3,
    ]
    assert is_groebner_basis(list(gens))


def test_gb_principal(R3):
    x1, x2, x3 = R3.gens()
    assert reduced_groebner([3 * x1 * x2 + 6 * x3**2]) == [x1 * x2 + 2 * x3**2]


def test_gb_small(R3):
    x1, x2, x3 = R3.gens()
    assert reduced_groebner([x1 + x2, x1**2]) == [x1 + x2, x2**2]


def test_gb_permutation_invariant(four_points):
    gens = list(build_ideal(four_points[1], four_points[2]).generators)
    ref = reduced_groebner(gens)
    for perm in permutations(gens):
        assert reduced_groebner(list(perm)) == ref


def test_gb_unit(R3):
    x1, x2, x3 = R3.gens()
    assert reduced_groebner([x1, x1 + 1]) == [R3.one()]


def _homogeneous(draw, degree):
    mons = list(oracles.monomials_of_degree(3, degree))
    coeffs = draw(st.lists(st.integers(-3, 3), min_size=len(mons), max_size=len(mons)))
    return dict((m, c) for m, c in zip(mons, coeffs) if c)


@st.composite
def homogeneous_instance(draw):
    gens = [_homogeneous(draw, draw(st.integers(1, 2))) for _ in range(draw(st.integers(1, 3)))]
    gens = [g for g in gens if g]
    d = draw(st.integers(1, 4))
    cand = _homogeneous(draw, d)
    # a combination that is a member by construction
    member: dict = {}
    for g in gens:
        dg = max(sum(a) for a in g)
        if dg <= d:
            for k, v in oracles.mul(g, _homogeneous(draw, d - dg) if d > dg else {(0, 0, 0): 1}).items():
                member[k] = member.get(k, 0) + v
    return gens, cand, {k: v for k, v in member.items() if v}, d


@settings(max_examples=60, deadline=None)
@given(homogeneous_instance())
def test_membership_matches_bruteforce(data):
    gens, cand, member, d = data
    if not gens:
        return
    R = Ring(("x1", "x2", "x3"))
    I = Ideal([R.from_terms(g.items()) for g in gens])
    # for homogeneous data, span{m g : deg <= d} decides membership of degree-d forms exactly
    for f in (cand, member):
        expected = oracles.in_ideal_bounded(f, gens, d)
        assert (R.from_terms(f.items()) in I) == expected
    assert R.from_terms(member.items()) in I
    gb = I.gb
    assert is_groebner_basis(gb)
    c = R.from_terms(cand.items())
    assert reduce(reduce(c, gb), gb) == reduce(c, gb)


@settings(max_examples=30, deadline=None)
@given(st.lists(st.tuples(*[st.integers(0, 3)] * 3), min_size=1, max_size=4), st.tuples(*[st.integers(0, 3)] * 3))
def test_monomial_membership(gens, m):
    R = Ring(("x1", "x2", "x3"))
    I = Ideal([R.monomial(g) for g in gens])
    assert (R.monomial(m) in I) == any(oracles.divides(g, m) for g in gens)


# -- intersection, colon, radical, regularity --------------------------------------------


def test_intersection_of_points(four_points):
    R, M, F = four_points
    x1, x2, x3 = R.gens()
    pts = [
        Ideal([x1, x2 + x3]),
        Ideal([x1 + x2 + 3 * x3, x2 + x3]),
        Ideal([x1 + x3, x2 + x3]),
        Ideal([x1, x2]),
    ]
    J = pts[0]
    for P in pts[1:]:
        J = intersect(J, P)
    assert J == build_ideal(M, F).ideal


def test_intersection_trivial(R3):
    x1, x2, x3 = R3.gens()
    I = Ideal([x1**2, x2 * x3])
    assert intersect(I, Ideal([R3.one()])) == I
    assert intersect(Ideal([x1]), Ideal([x2])) == Ideal([x1 * x2])


def test_colon_monomial(R3):
    x1, x2, x3 = R3.gens()
    I = Ideal([x1**3, x1 * x2, x2**2])
    assert colon(I, x1) == Ideal([x1**2, x2])
    assert colon(I, R3.one()) == I
    with pytest.raises(ValueError):
        colon(I, R3.zero())


def test_colon_by_linear_form_matches_bruteforce(four_points):
    R, M, F = four_points
    x1, x2, x3 = R.gens()
    I = build_ideal(M, F).ideal
    f = x2 + x3
    Q = colon(I, f)
    gens = [g.terms for g in I.generators]
    # degree-wise dimensions of (I : f), brute force: [0, 2, 5, 9]
    expected = [oracles.colon_dimension(gens, f.terms, d, 3) for d in range(4)]
    assert expected == [0, 2, 5, 9]
    got = [oracles.ideal_dimension([g.terms for g in Q.gb], d, 3) for d in range(4)]
    assert got == expected
    for g in Q.generators:
        assert oracles.in_ideal_bounded((g * f).terms, gens, g.degree() + 1)


def test_radical_membership(R3):
    x1, x2, x3 = R3.gens()
    assert radical_member(x1, Ideal([x1**3]))
    f = x2 + x3
    assert radical_member(f, Ideal([f**2]))
    J = Ideal([f * x2])
    assert not radical_member(f, J)
    # the point x2 = 0, x3 = 1 lies on V(J) but f does not vanish there
    assert oracles.evaluate((f * x2).terms, (0, 0, 1)) == 0
    assert oracles.evaluate(f.terms, (0, 0, 1)) == 1


@pytest.mark.parametrize(
    "gens,f",
    [
        ([(2, 0, 0), (0, 1, 1)], (1, 0, 0)),
        ([(2, 0, 0), (0, 1, 1)], (0, 1, 0)),
        ([(1, 1, 0), (0, 0, 2)], (0, 0, 1)),
        ([(3, 0, 0)], (0, 1, 0)),
    ],
)
def test_radical_matches_powers(gens, f):
    R = Ring(("x1", "x2", "x3"))
    I = Ideal([R.monomial(g) for g in gens])
    p = R.monomial(f) + R.gen(2)
    assert radical_member(p, I) == oracles.radical_by_powers(p.terms, [g.terms for g in I.generators], 8)


def test_regular_element(four_points):
    R, M, F = four_points
    conf = build_ideal(M, F)
    ctx = PolarizationContext.create(R, "x1")
    P = geom_polarize_basis(conf.generators, ctx)
    d = ctx.y_minus_yprime()
    assert is_regular_element(d, P.ideal())
    assert is_regular_element(ctx.ring.constant(5), P.ideal())
    x2 = ctx.ring.gen("x2")
    bad = Ideal([d * x2])
    assert not is_regular_element(d, bad)
    assert zero_divisor_witness(d, bad) == x2
    with pytest.raises(ValueError):
        is_regular_element(ctx.ring.zero(), bad)


@settings(max_examples=25, deadline=None)
@given(
    st.lists(st.tuples(*[st.integers(0, 2)] * 3), min_size=1, max_size=3),
    st.lists(st.tuples(*[st.integers(0, 2)] * 3), min_size=1, max_size=3),
    st.tuples(*[st.integers(-2, 2)] * 3),
)
def test_intersection_colon_laws(a, b, coeffs):
    R = Ring(("x1", "x2", "x3"))
    x1, x2, x3 = R.gens()
    I = Ideal([R.monomial(g) + x3 * R.monomial(g) for g in a])
    J = Ideal([R.monomial(g) for g in b])
    K = intersect(I, J)
    assert K.issubset(I) and K.issubset(J)
    f = R.linear_form(coeffs)
    if f:
        Q = colon(I, f)
        assert I.issubset(Q)
        assert all(f * q in I for q in Q.generators)


def test_gf_arithmetic_in_gb():
    R = Ring(("x", "y"), GF(5))
    x, y = R.gens()
    gb = reduced_groebner([2 * x + y, x**2])
    assert gb == [x + 3 * y, y**2]
