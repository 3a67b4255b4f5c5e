"""Chevalley-Eilenberg machinery: finite Betti numbers, cocycle checking,
the gauge model, and pullbacks along the crossed homomorphism."""

from math import comb

import pytest

from vfcoho import (TORUS, Cochain, FiniteLieAlgebra, GaugeContext,
                    MismatchError, VectorField, betti_numbers,
                    cochain_differential, is_cocycle, neg_jacobian)
from vfcoho.cohomology import (ce_matrix, gl_defining_rep, is_equivariant,
                               matrix_to_gauge, sl2_defining_rep, validate_rep)
from vfcoho.linalg import mat_mul


def test_abelian_betti_is_binomial():
    for k in (1, 2, 3):
        lie = FiniteLieAlgebra.abelian(k)
        assert betti_numbers(lie) == [comb(k, p) for p in range(k + 1)]


def test_sl2_betti():
    assert betti_numbers(FiniteLieAlgebra.sl2()) == [1, 0, 0, 1]


def test_gl_betti_matches_exterior_generators(golden):
    for n in (1, 2):
        assert betti_numbers(FiniteLieAlgebra.gl(n)) == golden["gl_betti"][str(n)]


def test_ce_differential_squares_to_zero():
    for lie in (FiniteLieAlgebra.sl2(), FiniteLieAlgebra.gl(2)):
        for p in range(lie.dim - 1):
            square = mat_mul(ce_matrix(lie, p), ce_matrix(lie, p + 1))
            assert all(all(v == 0 for v in row) for row in square)


def test_structure_constants_validated():
    with pytest.raises(MismatchError):
        # [a,b] = a is not antisymmetrizable into a Lie bracket
        FiniteLieAlgebra([[[0, 0], [1, 0]], [[1, 0], [0, 0]]], names=["a", "b"])


def test_rep_validation_catches_wrong_commutators():
    lie = FiniteLieAlgebra.sl2()
    e, h, f = sl2_defining_rep()
    validate_rep(lie, (e, h, f))
    with pytest.raises(MismatchError):
        validate_rep(lie, (h, e, f))


def test_is_cocycle_flags_a_non_cocycle_with_witness():
    # contraction against t^(0,1) k1, a non-closed 1-form, is not a cocycle
    from vfcoho import RingElement

    weight = RingElement.monomial(2, TORUS, (0, 1))

    def ev(x):
        return weight * x.coeffs[0]

    bad = Cochain("weighted-component", 1, ev, "fields", "ring", 2, TORUS)
    report = is_cocycle(bad, radius=1, samples=10, max_tuples=200)
    assert not report.passed()
    assert set(report.witness) == {"args", "residual"}


def test_contraction_against_closed_coframe_is_a_cocycle():
    def ev(x):
        return x.coeffs[0]

    psi = Cochain("k1-component", 1, ev, "fields", "ring", 2, TORUS)
    assert is_cocycle(psi, radius=1, samples=10, max_tuples=200).passed()


def test_cochain_differential_of_divergence_vanishes_pointwise():
    from vfcoho import divergence_cochain

    d_div = cochain_differential(divergence_cochain(2, TORUS))
    x = VectorField.basis(2, TORUS, (1, 0), 1)
    y = VectorField.basis(2, TORUS, (-1, 1), 2)
    assert d_div.evaluate(x, y).is_zero()


def test_equivariance_of_the_gauge_trace():
    from vfcoho import gauge_form_trace

    ctx = GaugeContext(FiniteLieAlgebra.sl2(), sl2_defining_rep(), 2, TORUS)
    report = is_equivariant(gauge_form_trace(1, ctx), radius=1,
                            samples=10, max_tuples=120)
    assert report.passed()


def test_gauge_bracket_is_pointwise():
    ctx = GaugeContext(FiniteLieAlgebra.sl2(), sl2_defining_rep(), 2, TORUS)
    a = ctx.basis_element((1, 0), 0)
    b = ctx.basis_element((0, 1), 2)
    c = ctx.bracket(a, b)
    # [e, f] = h with matching mode product
    assert not c.is_zero()
    assert c.text().count("t^(1,1)") == 1


def test_gauge_bracket_antisymmetry():
    ctx = GaugeContext(FiniteLieAlgebra.gl(2), gl_defining_rep(2), 2, TORUS)
    import random

    rng = random.Random(5)
    for _ in range(25):
        a = ctx.random_element(rng, 1)
        b = ctx.random_element(rng, 1)
        assert (ctx.bracket(a, b) + ctx.bracket(b, a)).is_zero()


def test_matrix_to_gauge_embeds_the_jacobian():
    ctx = GaugeContext(FiniteLieAlgebra.gl(2), gl_defining_rep(2), 2, TORUS)
    x = VectorField.basis(2, TORUS, (1, 1), 1)
    g = matrix_to_gauge(ctx, neg_jacobian(x))
    assert not g.is_zero()
