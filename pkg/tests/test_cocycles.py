"""The trace-of-Jacobian cocycle families and their exact relations."""

import random

import pytest

from vfcoho import (AFFINE, TORUS, FiniteLieAlgebra, GaugeContext,
                    MismatchError, PForm, VectorField, divergence,
                    ext_d, form_trace_cocycle, gauge_form_trace,
                    gauge_odd_trace, gauge_reduced_trace, is_cocycle,
                    neg_jacobian, odd_trace_cocycle, pullback_by_crossed_hom,
                    reduce_mod_exact, reduced_trace_cocycle,
                    scalar_trace_cocycle, wedge_pair_cocycle)
from vfcoho.cocycles import (closed_pair_cocycle, divfree_basis,
                             divfree_witness_search,
                             h2_reduced_one_form_generators)
from vfcoho.cohomology import gl_defining_rep, sl2_defining_rep
from vfcoho.sampling import random_field


def basis(mode, j, n=2, model=TORUS):
    return VectorField.basis(n, model, mode, j)


def seeded_fields(count, n=2, model=TORUS, seed=19):
    rng = random.Random(seed)
    return [random_field(rng, model, n, 2) for _ in range(count)]


def test_form_trace_golden(golden):
    value = form_trace_cocycle(1, 2, TORUS).evaluate(basis((1, 0), 1))
    assert value.text() == golden["form_trace1_t10E1"]


def test_scalar_trace_golden(golden):
    args = [basis(tuple(m), j) for m, j in golden["scalar_trace2_triple_args"]]
    value = scalar_trace_cocycle(2, 2, TORUS).evaluate(*args)
    assert value.text() == golden["scalar_trace2_triple"]


def test_reduced_trace_golden(golden):
    args = [basis(tuple(m), j) for m, j in golden["reduced_trace2_pair_args"]]
    value = reduced_trace_cocycle(2, 2, TORUS).evaluate(*args)
    assert value.text() == golden["reduced_trace2_pair"]


def test_wedge_pair_golden(golden):
    args = [basis(tuple(m), j) for m, j in golden["wedge_pair_args"]]
    value = wedge_pair_cocycle(2, TORUS).evaluate(*args)
    assert value.text() == golden["wedge_pair_value"]


def test_first_traces_equal_minus_divergence():
    phi1 = scalar_trace_cocycle(1, 2, TORUS)
    psibar1 = reduced_trace_cocycle(1, 2, TORUS)
    for x in seeded_fields(20):
        assert phi1.evaluate(x) == -divergence(x)
        assert psibar1.evaluate(x).rep.as_ring() == -divergence(x)


def test_d_of_reduced_trace_is_form_trace():
    """The reduced family is a primitive of the form family: applying the
    exterior differential to any representative recovers the k-form value."""
    for model, n in ((TORUS, 2), (AFFINE, 2)):
        for k in (1, 2):
            psi = form_trace_cocycle(k, n, model)
            psibar = reduced_trace_cocycle(k, n, model)
            for _ in range(3):
                args = seeded_fields(k, n=n, model=model, seed=23 + k)
                assert ext_d(psibar.evaluate(*args).rep) == psi.evaluate(*args)


def test_arity_conventions():
    # scalar family eats 2k-1 fields, the form and reduced families eat k
    assert scalar_trace_cocycle(2, 2, TORUS).degree == 3
    assert form_trace_cocycle(2, 2, TORUS).degree == 2
    assert reduced_trace_cocycle(2, 2, TORUS).degree == 2
    with pytest.raises(MismatchError):
        form_trace_cocycle(3, 2, TORUS)


def test_contraction_rejects_non_closed_forms():
    from vfcoho import contraction_cocycle

    with pytest.raises(MismatchError):
        contraction_cocycle(PForm.monomial(2, TORUS, (0, 1), (1,)), 1)


def test_closed_pair_rejects_non_closed_input():
    bad = PForm.monomial(2, TORUS, (0, 1), (1,))
    with pytest.raises(MismatchError):
        closed_pair_cocycle(ext_d(bad) + PForm.monomial(2, TORUS, (1, 1), (1, 2)),
                            bad)


def test_closed_pair_is_a_cocycle():
    alpha = PForm.monomial(2, TORUS, (0, 0), (1, 2))
    beta = PForm.kappa(2, TORUS, 1)
    report = is_cocycle(closed_pair_cocycle(alpha, beta), radius=1,
                        samples=20, max_tuples=400)
    assert report.passed()


def test_pullbacks_recover_field_cocycles():
    """Composing the gauge and finite families with the crossed homomorphism
    gives back the vector-field families, exactly and termwise."""
    n = 2
    ctx = GaugeContext(FiniteLieAlgebra.gl(n), gl_defining_rep(n), n, TORUS)
    for k in (1, 2):
        pulled = pullback_by_crossed_hom(gauge_odd_trace(k, ctx), neg_jacobian)
        direct = scalar_trace_cocycle(k, n, TORUS)
        for _ in range(4):
            args = seeded_fields(2 * k - 1, seed=31 + k)
            assert pulled.evaluate(*args) == direct.evaluate(*args)

    for k in (1, 2):
        pulled = pullback_by_crossed_hom(gauge_reduced_trace(k, ctx),
                                         neg_jacobian)
        direct = reduced_trace_cocycle(k, n, TORUS)
        for _ in range(4):
            args = seeded_fields(k, seed=37 + k)
            assert pulled.evaluate(*args) == direct.evaluate(*args)


def test_gauge_traces_are_cocycles():
    ctx = GaugeContext(FiniteLieAlgebra.sl2(), sl2_defining_rep(), 2, TORUS)
    for build in (gauge_form_trace, gauge_reduced_trace):
        assert is_cocycle(build(1, ctx), radius=1, samples=15,
                          max_tuples=200).passed()
    assert is_cocycle(gauge_odd_trace(1, ctx), radius=1, samples=15,
                      max_tuples=200).passed()


def test_gauge_odd_trace_rep_larger_than_manifold():
    # the 2x2 rep on a 1-dimensional base used to trip the matrix bounds check
    ctx = GaugeContext(FiniteLieAlgebra.sl2(), sl2_defining_rep(), 1, TORUS)
    assert is_cocycle(gauge_odd_trace(1, ctx), radius=1, samples=15,
                      max_tuples=200).passed()


def test_finite_odd_trace_is_a_cocycle():
    lie, rep = FiniteLieAlgebra.gl(2), gl_defining_rep(2)
    for k in (1, 3):
        report = is_cocycle(odd_trace_cocycle(k, lie, rep), samples=10)
        assert report.passed()


def test_reduced_one_form_generator_count():
    # one generator per closed coframe direction beyond the exact ones
    assert len(h2_reduced_one_form_generators(2)) == 2
    assert len(h2_reduced_one_form_generators(3)) == 3
    for gen in h2_reduced_one_form_generators(2):
        assert is_cocycle(gen, radius=1, samples=10, max_tuples=150).passed()


def test_divergence_free_fields_kill_the_wedge_pair():
    wp = wedge_pair_cocycle(2, TORUS)
    fields = divfree_basis(2, TORUS, 1)
    assert fields
    for x in fields:
        assert divergence(x).is_zero()
        for y in fields:
            assert wp.evaluate(x, y).is_zero()


def test_divergence_free_witness_is_stable(golden):
    x, y, value = divfree_witness_search(2, 2)
    expected = golden["divfree_witness"]
    assert x.text() == expected["x"]
    assert y.text() == expected["y"]
    assert value.text() == expected["value"]
    assert divergence(x).is_zero() and divergence(y).is_zero()
    assert reduced_trace_cocycle(2, 2, TORUS).evaluate(x, y) == value


def test_reduction_commutes_with_the_form_family():
    psi2 = form_trace_cocycle(2, 2, TORUS)
    psibar2 = reduced_trace_cocycle(2, 2, TORUS)
    for _ in range(5):
        args = seeded_fields(2, seed=41)
        assert reduce_mod_exact(psibar2.evaluate(*args).rep) == \
            psibar2.evaluate(*args)
        assert psi2.evaluate(*args).degree == 2
