import random

import pytest

import oracles
from multiconf import (
    BiliaisonWitness,
    ConfigurationError,
    FormFamily,
    GlicciError,
    GvdError,
    Ideal,
    Multicomplex,
    PolarizationContext,
    build_ideal,
    geom_polarize_basis,
    glicci_chain,
    gvd_split,
    intersect,
    is_nondegenerate,
    polarize_configuration,
    random_instance,
    verify_biliaison_step,
)
from multiconf.liaison import BaseCaseStep, BiliaisonStep, GvdSplit, VariableSplitStep


@pytest.fixture
def polarized(four_points):
    R, M, F = four_points
    conf = build_ideal(M, F)
    ctx = PolarizationContext.create(R, "x1")
    P = geom_polarize_basis(conf.generators, ctx)
    return ctx, P


def test_gvd_split_four_points(polarized):
    ctx, P = polarized
    X1, X2, X3, X1p = ctx.ring.gens()
    split = gvd_split(P.elements, "x1")
    assert split.deletion == Ideal([(X2 + X3) * X2])
    assert split.link == Ideal([(X1p + X2 + 3 * X3) * (X1p + X3), X2 + X3])
    assert split.initial_y == X1 * split.link + split.deletion
    assert split.initial_y == intersect(split.link, split.deletion + X1)
    for q, r, h in zip(split.q, split.r, split.h):
        for p in (q, r, h):
            assert not p.involves(ctx.y)


def test_gvd_split_without_y(R3):
    x1, x2, x3 = R3.gens()
    G = [x2**2 + x2 * x3, x3**3]
    split = gvd_split(G, "x1")
    I = Ideal(G)
    assert split.link == I and split.deletion == I and split.initial_y == I
    assert not is_nondegenerate(split)


def test_gvd_split_errors(R3):
    x1, x2, x3 = R3.gens()
    with pytest.raises(GvdError, match="degree 2"):
        gvd_split([x1**2 + x2], "x1")
    with pytest.raises(GvdError, match="compatible"):
        gvd_split([x2 + x3], "x3")
    with pytest.raises(GvdError, match="Gröbner"):
        gvd_split([x1 * x2 + x3**2, x1 * x3 + x2**2], "x1")


def test_nondegenerate(polarized):
    ctx, P = polarized
    split = gvd_split(P.elements, "x1")
    assert is_nondegenerate(split)
    # the cubic link generator does not vanish at x1' = 1, x2 = 0, x3 = 1, where N vanishes
    pt = (0, 0, 1, 1)
    X1, X2, X3, X1p = ctx.ring.gens()
    assert oracles.evaluate(((X2 + X3) * X2).terms, pt) == 0
    assert oracles.evaluate(((X1p + X2 + 3 * X3) * (X1p + X3)).terms, pt) != 0


def test_degenerate_unit_link(R3):
    x1, x2, x3 = R3.gens()
    split = gvd_split([x1 + x2, x2 * x3], "x1")
    assert split.link.is_unit()
    assert not is_nondegenerate(split)


def _four_points_witness(ctx):
    X1, X2, X3, X1p = ctx.ring.gens()
    d = (X1p + X2 + 3 * X3) * (X1p + X3)
    return BiliaisonWitness(X1 * d, d, ctx.y, 1)


def test_biliaison_four_points(polarized):
    ctx, P = polarized
    X1, X2, X3, X1p = ctx.ring.gens()
    D = Ideal([(X1p + X2 + 3 * X3) * (X1p + X3), X2 + X3])
    N = Ideal([(X2 + X3) * X2])
    verdict = verify_biliaison_step(P.ideal(), D, N, _four_points_witness(ctx))
    assert verdict.passed, verdict.failed_check


def test_biliaison_membership_against_bruteforce(polarized):
    ctx, P = polarized
    X1, X2, X3, X1p = ctx.ring.gens()
    I = P.ideal()
    D = Ideal([(X1p + X2 + 3 * X3) * (X1p + X3), X2 + X3])
    N = Ideal([(X2 + X3) * X2])
    w = _four_points_witness(ctx)
    v, d = w.numerator, w.denominator
    dI = [(d * f).terms for f in I.generators] + [h.terms for h in N.generators]
    vD = [(v * g).terms for g in D.generators] + [h.terms for h in N.generators]
    # everything is homogeneous, so degree-bounded spans decide membership exactly
    for g in D.generators:
        f = (v * g).terms
        assert oracles.in_ideal_bounded(f, dI, oracles.degree(f))
    for f0 in I.generators:
        f = (d * f0).terms
        assert oracles.in_ideal_bounded(f, vD, oracles.degree(f))
    # and a non-member stays out
    assert not oracles.in_ideal_bounded((d * X2).terms, vD, 3)


def test_biliaison_rejects_equal_heights(polarized):
    ctx, P = polarized
    I = P.ideal()
    D = Ideal([(ctx.ring.gen(3) + ctx.ring.gen(2)), ctx.ring.gen(1) + ctx.ring.gen(2)])
    verdict = verify_biliaison_step(I, D, I, _four_points_witness(ctx))
    assert not verdict.passed
    assert not verdict.checks["heights"]
    assert verdict.failed_check is not None


def test_glicci_four_points(four_points):
    R, M, F = four_points
    cert = glicci_chain(M, F)
    assert cert.valid
    assert cert.biliaison_count == 2
    assert cert.kinds() == ["biliaison", "biliaison", "base-case"]
    first, second, last = cert.steps
    X = first.split.ring.gens()
    X1, X2, X3, X1p = X
    assert first.link == Ideal([(X1p + X2 + 3 * X3) * (X1p + X3), X2 + X3])
    assert first.deletion == Ideal([(X2 + X3) * X2])
    assert first.geometric
    assert second.link == Ideal([X1p + X3, X2 + X3], second.split.ring)
    assert second.deletion == Ideal([X2 + X3], second.split.ring)
    x1, x2, x3 = R.gens()
    assert Ideal(last.generators) == Ideal([x1 + x3, x2 + x3])
    for step in (first, second):
        assert step.verdict.passed
        assert step.checks["nondegenerate"]


def test_glicci_point(R3):
    x1, x2, x3 = R3.gens()
    cert = glicci_chain(Multicomplex((0, 0), {(0, 0)}), FormFamily(((x1 - x3,), (x2,))))
    assert cert.kinds() == ["base-case"] and cert.valid and cert.biliaison_count == 0


def test_glicci_variable_split(R3):
    x1, x2, x3 = R3.gens()
    M = Multicomplex((0, 1), {(0, 0), (0, 1)})
    F = FormFamily(((x1 + x3,), (x2, x2 + x3)))
    cert = glicci_chain(M, F)
    assert cert.kinds() == ["variable-split", "biliaison", "base-case"]
    split = cert.steps[0]
    assert isinstance(split, VariableSplitStep) and split.form == x1 + x3
    assert cert.steps[1].deletion.is_zero()
    assert Ideal(cert.final.generators) == Ideal([x1 + x3, x2 + x3])


def test_glicci_one_variable_chain(R3):
    x1, x2, x3 = R3.gens()
    M = Multicomplex((2,), {(0,), (1,), (2,)})
    F = FormFamily(((x1, x1 + x2, x1 - x3),))
    cert = glicci_chain(M, F)
    assert cert.valid and cert.biliaison_count == 2
    assert Ideal(cert.final.generators) == Ideal([x1 - x3])


def test_glicci_failure_is_reported(R3):
    x1 = R3.gen(0)
    M = Multicomplex((1,), {(0,), (1,)})
    F = FormFamily(((x1, 3 * x1),))
    with pytest.raises(ConfigurationError, match="coincide"):
        glicci_chain(M, F)


def test_factorwise_polarization_matches_geometric_when_first_form_is_variable(four_points):
    R, M, F = four_points
    conf = build_ideal(M, F)
    ctx = PolarizationContext.create(R, "x1")
    assert polarize_configuration(conf, ctx).elements == geom_polarize_basis(conf.generators, ctx).elements


def test_chain_invariants_on_random_instances():
    rng = random.Random(99)
    for _ in range(15):
        prob = random_instance(rng)
        cert = glicci_chain(prob.multicomplex, prob.families)
        assert cert.valid
        assert isinstance(cert.final, BaseCaseStep)
        sizes = [len(s.multicomplex) for s in cert.steps if isinstance(s, BiliaisonStep)]
        assert sizes == sorted(sizes, reverse=True) and len(set(sizes)) == len(sizes)
        for s in cert.steps:
            if isinstance(s, BiliaisonStep):
                assert s.checks["deletion_matches"] and s.checks["link_matches"]
                split = s.split
                assert isinstance(split, GvdSplit)
                y = split.ring.gen(split.y)
                assert split.initial_y == y * split.link + split.deletion
        total = len(cert.final.generators)
        assert total == prob.multicomplex.n


def test_glicci_chain_error_carries_step(R3):
    x1, x2, x3 = R3.gens()
    err = GlicciError("boom", step=None, check="heights")
    assert err.check == "heights" and str(err) == "boom"


def test_literal_polarization_link_differs_when_first_form_is_not_a_variable(R3):
    x1, x2, x3 = R3.gens()
    M = Multicomplex((1, 0), {(0, 0), (1, 0)})
    F = FormFamily(((x1 + x2 + 3 * x3, x1 + x3), (x2 + x3,)))
    conf = build_ideal(M, F)
    ctx = PolarizationContext.create(R3, "x1")
    X1, X2, X3, X1p = ctx.ring.gens()
    expected_link = Ideal([X1p + X3, X2 + X3])
    literal = gvd_split(geom_polarize_basis(conf.generators, ctx).elements, "x1")
    factorwise = gvd_split(polarize_configuration(conf, ctx).elements, "x1")
    assert literal.link != expected_link
    assert literal.link == Ideal([X1p + 3 * X3, X2 + X3])
    assert factorwise.link == expected_link
