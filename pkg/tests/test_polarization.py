import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from multiconf import (
    MonomialIdeal,
    PolarizationContext,
    PolarizedBasis,
    Ring,
    build_ideal,
    check_induced_gb,
    check_nzd_polarization,
    geom_polarize,
    geom_polarize_basis,
    polarize_full,
    random_instance,
)
from multiconf.polarization import (
    PolarizationError,
    is_y_compatible,
    iterate_polarization,
    polarization_identity_holds,
)


def test_polarize_full():
    P, varmap = polarize_full(MonomialIdeal(((3, 0), (1, 1), (0, 2)), 2))
    names = P.variables
    assert names == ("x1_1", "x1_2", "x1_3", "x2_1", "x2_2")
    gens = {frozenset(names[k] for k, e in enumerate(g) if e) for g in P.generators}
    assert gens == {
        frozenset({"x1_1", "x1_2", "x1_3"}),
        frozenset({"x1_1", "x2_1"}),
        frozenset({"x2_1", "x2_2"}),
    }
    assert varmap[(0, 3)] == 2 and varmap[(1, 1)] == 3
    sq, _ = polarize_full(MonomialIdeal(((1, 1, 0), (0, 0, 1)), 3))
    assert sq.variables == ("x1_1", "x2_1", "x3_1")
    assert set(sq.generators) == {(1, 1, 0), (0, 0, 1)}
    single, _ = polarize_full(MonomialIdeal(((2,),), 1))
    assert single.generators == ((1, 1),)


def _context(R, y="x1"):
    return PolarizationContext.create(R, y)


def test_geom_polarize_examples(four_points):
    R, M, F = four_points
    x1, x2, x3 = R.gens()
    ctx = _context(R)
    S = ctx.ring
    X1, X2, X3, X1p = S.gens()
    g = x1 * (x1 + x2 + 3 * x3) * (x1 + x3)
    assert geom_polarize(g, ctx) == X1 * (X1p + X2 + 3 * X3) * (X1p + X3)
    h = x1 * (x2 + x3)
    assert geom_polarize(h, ctx) == ctx.lift(h)
    T = Ring(("y", "x"))
    y, x = T.gens()
    cy = _context(T, "y")
    Y, Xx, Yp = cy.ring.gens()
    assert geom_polarize(y**2 + x, cy) == Xx + Y * Yp


def test_polarized_basis_of_four_points(four_points):
    R, M, F = four_points
    G = build_ideal(M, F).generators
    ctx = _context(R)
    P = geom_polarize_basis(G, ctx)
    X1, X2, X3, X1p = ctx.ring.gens()
    assert set(map(str, P.elements)) == {
        str((X2 + X3) * X2), str(X1 * (X2 + X3)), str(X1 * (X1p + X2 + 3 * X3) * (X1p + X3))
    }
    assert polarization_identity_holds(G, P)
    assert check_nzd_polarization(P)
    assert check_induced_gb(P)
    assert all(p.deg_in(ctx.y) <= 1 for p in P.elements)


def test_context_naming():
    R = Ring(("x1", "x1'", "x2"))
    ctx = PolarizationContext.create(R, "x1")
    assert ctx.yprime_name == "x1''"
    with pytest.raises(PolarizationError):
        PolarizationContext.create(R, "x1", yprime="x2")
    with pytest.raises(PolarizationError):
        geom_polarize(ctx.ring.gen(0), ctx)


def test_nzd_trivial_and_negative(R3):
    ctx = _context(R3)
    empty = PolarizedBasis((), ctx)
    assert check_nzd_polarization(empty)
    x2 = ctx.ring.gen("x2")
    bad = PolarizedBasis(((ctx.y_minus_yprime()) * x2,), ctx)
    assert not check_nzd_polarization(bad)


def test_monomial_polarization_is_gb():
    R = Ring(("x1", "x2"))
    gens = [R.monomial(g) for g in ((3, 0), (1, 1), (0, 2))]
    ctx = _context(R)
    P = geom_polarize_basis(gens, ctx)
    assert [str(p) for p in P.elements] == ["x1*x1'^2", "x1*x2", "x2^2"]
    assert check_induced_gb(P) and check_nzd_polarization(P)


polys = st.dictionaries(st.tuples(*[st.integers(0, 3)] * 3), st.integers(-5, 5), max_size=5)


@given(polys, st.integers(0, 2))
def test_depolarization_identity(terms, y):
    R = Ring(("x1", "x2", "x3"))
    g = R.from_terms(terms.items())
    ctx = _context(R, R.variables[y])
    p = geom_polarize(g, ctx)
    assert ctx.depolarize(p) == g
    assert p.deg_in(ctx.y) <= 1


@settings(max_examples=40, deadline=None)
@given(st.lists(st.tuples(*[st.integers(0, 3)] * 3), min_size=1, max_size=4))
def test_iterated_polarization_reaches_full(gens):
    I = MonomialIdeal(tuple(gens), 3)
    full, varmap = polarize_full(I)
    it, names = iterate_polarization(I)
    # the j-th prime of x_i plays the role of x_{i, j+1}
    rename = {}
    for (i, j), k in varmap.items():
        rename[I.variables[i] + "'" * (j - 1)] = k
    mapped = set()
    for e in it:
        v = [0] * full.nvars
        for k, x in enumerate(e):
            if x:
                v[rename[names[k]]] = 1
        mapped.add(tuple(v))
    assert set(MonomialIdeal(tuple(mapped), full.nvars).generators) == set(full.generators)


def test_y_compatible(R3):
    x1, x2, x3 = R3.gens()
    assert is_y_compatible([x1 * x2 + x3**2], "x1")
    assert not is_y_compatible([x2 + x3**2], "x3")


def test_gb_and_nzd_agree_on_random_instances():
    rng = random.Random(2024)
    for _ in range(15):
        prob = random_instance(rng)
        conf = build_ideal(prob.multicomplex, prob.families)
        ctx = PolarizationContext.create(prob.ring, prob.multicomplex.variables[0])
        P = geom_polarize_basis(conf.generators, ctx)
        assert check_induced_gb(P) == check_nzd_polarization(P)
