"""Exterior algebra on the frame coframe and the quotient by exact forms."""

from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from vfcoho import (AFFINE, TORUS, MismatchError, PForm, RingElement,
                    VectorField, ext_d, lie_derive, reduce_mod_exact)
from vfcoho.forms import contract, de_rham_dims, is_exact, wedge

scalars = st.fractions(min_value=-3, max_value=3, max_denominator=3)
torus_modes = st.tuples(st.integers(-2, 2), st.integers(-2, 2))


def forms_of_degree(degree, n=2, model=TORUS):
    subsets = list(combinations(range(1, n + 1), degree))
    if model == AFFINE:
        modes = st.tuples(*(st.integers(0, 2) for _ in range(n)))
    else:
        modes = st.tuples(*(st.integers(-2, 2) for _ in range(n)))
    term = st.tuples(modes, st.sampled_from(subsets), scalars)

    def build(terms):
        acc = PForm.zero(n, model, degree)
        for mode, subset, c in terms:
            acc = acc + PForm.monomial(n, model, mode, subset, c)
        return acc

    return st.lists(term, max_size=3).map(build)


def fields(n=2, model=TORUS):
    if model == AFFINE:
        modes = st.tuples(*(st.integers(0, 2) for _ in range(n)))
    else:
        modes = st.tuples(*(st.integers(-2, 2) for _ in range(n)))
    term = st.tuples(modes, st.integers(1, n), scalars)

    def build(terms):
        acc = VectorField.zero(n, model)
        for mode, j, c in terms:
            acc = acc + VectorField.basis(n, model, mode, j).scale(c)
        return acc

    return st.lists(term, max_size=2).map(build)


def test_wedge_anticommutes_on_coframe():
    k1 = PForm.kappa(2, TORUS, 1)
    k2 = PForm.kappa(2, TORUS, 2)
    assert wedge(k1, k2) == -wedge(k2, k1)
    assert wedge(k1, k1).is_zero()


def test_torus_d_of_monomial():
    # d(t^(1,1)) = t^(1,1) k1 + t^(1,1) k2, so d(t^(1,1) k1) kills the k1 part
    w = PForm.monomial(2, TORUS, (1, 1), (1,))
    assert ext_d(w) == PForm.monomial(2, TORUS, (1, 1), (1, 2), -1)


def test_affine_d_power_rule():
    w = PForm.from_ring(RingElement.monomial(2, AFFINE, (2, 0)))
    assert ext_d(w) == PForm.monomial(2, AFFINE, (1, 0), (1,), 2)


def test_contraction_against_coframe():
    w = wedge(PForm.kappa(3, TORUS, 1), PForm.kappa(3, TORUS, 2))
    assert contract(VectorField.basis(3, TORUS, (0, 0, 0), 3), w).is_zero()
    x = VectorField.basis(2, TORUS, (1, -1), 2)
    w2 = wedge(PForm.kappa(2, TORUS, 1), PForm.kappa(2, TORUS, 2))
    assert contract(x, w2) == PForm.monomial(2, TORUS, (1, -1), (1,), -1)


def test_degree_mismatch_raises():
    with pytest.raises(MismatchError):
        PForm.kappa(2, TORUS, 1) + wedge(PForm.kappa(2, TORUS, 1),
                                         PForm.kappa(2, TORUS, 2))


@given(forms_of_degree(0), forms_of_degree(1))
def test_d_squared_is_zero(f, w):
    assert ext_d(ext_d(f)).is_zero()
    assert ext_d(ext_d(w)).is_zero()


@given(forms_of_degree(0, model=AFFINE), forms_of_degree(1, model=AFFINE))
def test_d_squared_is_zero_affine(f, w):
    assert ext_d(ext_d(f)).is_zero()
    assert ext_d(ext_d(w)).is_zero()


@given(forms_of_degree(1), forms_of_degree(1))
def test_graded_leibniz(a, b):
    lhs = ext_d(wedge(a, b))
    rhs = wedge(ext_d(a), b) - wedge(a, ext_d(b))
    assert lhs == rhs


@given(fields(), forms_of_degree(1), forms_of_degree(1))
def test_contraction_is_an_antiderivation(x, a, b):
    lhs = contract(x, wedge(a, b))
    rhs = wedge(contract(x, a), b) - wedge(a, contract(x, b))
    assert lhs == rhs


@given(fields(), forms_of_degree(1))
@settings(max_examples=40)
def test_lie_derivative_commutes_with_d(x, w):
    assert lie_derive(x, ext_d(w)) == ext_d(lie_derive(x, w))


@given(fields(), fields(), forms_of_degree(1))
@settings(max_examples=30)
def test_lie_derivative_of_bracket(x, y, w):
    lhs = lie_derive(x.bracket(y), w)
    rhs = lie_derive(x, lie_derive(y, w)) - lie_derive(y, lie_derive(x, w))
    assert lhs == rhs


# -- quotient modulo exact forms -------------------------------------------


def test_reduce_golden(golden):
    cls = reduce_mod_exact(PForm.monomial(2, TORUS, (1, 1), (1,)))
    assert cls.text() == golden["reduce_t11_k1"]


def test_coframe_classes_survive_reduction():
    for i in (1, 2):
        cls = reduce_mod_exact(PForm.kappa(2, TORUS, i))
        assert cls.rep == PForm.kappa(2, TORUS, i)


@given(forms_of_degree(1), forms_of_degree(0))
@settings(max_examples=60)
def test_reduction_ignores_exact_shifts(w, f):
    assert reduce_mod_exact(w + ext_d(f)) == reduce_mod_exact(w)


@given(forms_of_degree(2), forms_of_degree(1))
@settings(max_examples=40)
def test_reduction_ignores_exact_shifts_degree_two(w, eta):
    assert reduce_mod_exact(w + ext_d(eta)) == reduce_mod_exact(w)


@given(forms_of_degree(1))
def test_reduction_is_idempotent(w):
    cls = reduce_mod_exact(w)
    assert reduce_mod_exact(cls.rep) == cls


@given(forms_of_degree(1), forms_of_degree(0))
@settings(max_examples=60)
def test_zero_class_agrees_with_span_membership(w, f):
    shifted = w + ext_d(f)
    assert reduce_mod_exact(shifted).is_zero() == is_exact(shifted)


@given(forms_of_degree(1, model=AFFINE), forms_of_degree(0, model=AFFINE))
@settings(max_examples=40)
def test_affine_quotient_matches_span_membership(w, f):
    shifted = w + ext_d(f)
    assert reduce_mod_exact(shifted).is_zero() == is_exact(shifted)
    assert reduce_mod_exact(w + ext_d(f)) == reduce_mod_exact(w)


def test_zero_forms_reduce_to_themselves():
    f = PForm.from_ring(RingElement.monomial(2, TORUS, (1, 2), 5))
    assert reduce_mod_exact(f).rep == f


def test_de_rham_dimension_tables():
    assert de_rham_dims(TORUS, 1) == [1, 1]
    assert de_rham_dims(TORUS, 2) == [1, 2, 1]
    assert de_rham_dims(AFFINE, 2) == [1, 0, 0]
