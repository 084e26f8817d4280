import random

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from exlie.e7 import (
    ONE_DOT,
    ONE_LOW,
    E7Elem,
    FreudElem,
    apply_op,
    e7_algebra,
    e7_basis,
    e7_bracket,
    e7_bracket_formula,
    e7_decompose,
    e7_inner,
    e7_killing,
    exp_nilpotent,
    freud_basis,
    h7_element,
    in_M,
    is_nilpotent,
    lambda_map,
    p_cross_q,
    skew_inner,
    stabilizer_of_one_low,
    tau_lambda_e7,
)
from exlie.errors import NotNilpotent
from exlie.jordan import JordanElem, cross, inner
from exlie.linalg import GaussRat, Mat, rank

from conftest import gauss, np_mat, numeric_killing, rand_gauss

e7_elems = st.lists(gauss, min_size=21, max_size=21).map(E7Elem.from_coords)
freud = st.lists(gauss, min_size=14, max_size=14).map(FreudElem.from_coords)


def test_dimension():
    assert e7_algebra().dim == 21
    assert rank(Mat([b.operator().flat() for b in e7_basis()])) == 21


def test_killing_against_numeric_oracle():
    basis = e7_basis()
    k = numeric_killing([np_mat(b.operator()) for b in basis])
    exact = np.array([[e7_killing(a, b).to_complex() for b in basis] for a in basis])
    assert np.allclose(k, exact)


def test_killing_constants():
    phi0 = E7Elem(nu=1)
    assert e7_inner(phi0, phi0) == GaussRat("-8/3")
    assert e7_killing(phi0, phi0) == GaussRat("16/3")
    assert phi0.operator().matmul(phi0.operator()).trace() == GaussRat("10/3")


@settings(max_examples=15)
@given(e7_elems, e7_elems)
def test_bracket_formula_matches_commutator(f, g):
    assert e7_bracket(f, g) == e7_bracket_formula(f, g)
    assert e7_bracket(f, g).operator() == f.operator().matmul(g.operator()) - g.operator().matmul(f.operator())


@settings(max_examples=15)
@given(e7_elems)
def test_decompose_roundtrip(f):
    assert e7_decompose(f.operator()) == f
    assert E7Elem.from_json(f.to_json()) == f


@settings(max_examples=20)
@given(e7_elems, freud, freud)
def test_symplectic_form_invariant(f, p, q):
    assert skew_inner(f.act(p), q) + skew_inner(p, f.act(q)) == GaussRat(0)
    assert skew_inner(p, q) == -skew_inner(q, p)


@settings(max_examples=20)
@given(freud, freud)
def test_cross_symmetric(p, q):
    assert p_cross_q(p, q) == p_cross_q(q, p)


def test_orbit_formula():
    rng = random.Random(7)
    for _ in range(20):
        b = JordanElem([rand_gauss(rng) for _ in range(6)])
        g = exp_nilpotent(E7Elem(b=b))
        bb = cross(b, b)
        assert apply_op(g, ONE_DOT) == FreudElem(bb, b, 1, inner(bb, b) * GaussRat("1/3"))
        assert apply_op(g, ONE_LOW) == ONE_LOW
        assert in_M(apply_op(g, ONE_DOT))


def test_cone_membership():
    assert in_M(ONE_DOT) and in_M(ONE_LOW)
    assert not in_M(FreudElem())
    assert not in_M(ONE_DOT + ONE_LOW)


def test_exp_requires_nilpotent():
    assert is_nilpotent(E7Elem(a=JordanElem([1, 0, 0, 0, 0, 0])).operator())
    with pytest.raises(NotNilpotent):
        exp_nilpotent(E7Elem(nu=1))


def test_stabilizer_dimension():
    # derived: kernel of Phi -> Phi 1_
    assert len(stabilizer_of_one_low()) == 14


def test_real_form_involution():
    rng = random.Random(5)
    f = E7Elem.from_coords([rand_gauss(rng) for _ in range(21)])
    assert tau_lambda_e7(tau_lambda_e7(f)) == f
    p = freud_basis()[3]
    assert lambda_map(lambda_map(p)) == -p


def test_cartan_commutes():
    a, b = h7_element(1, 2, 3), h7_element(-2, 5, 1)
    assert not e7_bracket(a, b)
