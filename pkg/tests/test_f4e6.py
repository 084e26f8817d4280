import random

import numpy as np
import pytest
from hypothesis import given, strategies as st

from exlie.errors import NotOrthogonal, NotSkew
from exlie.f4e6 import (
    E6Elem,
    F4Elem,
    cayley,
    e6_algebra,
    e6_basis,
    e6_bracket,
    e6_decompose,
    e6_inner,
    e6_killing,
    f4_algebra,
    f4_basis,
    f4_bracket,
    f4_inner,
    f4_killing,
    f4c_group_map,
    f4cstar,
    f6cstar,
    h6_element,
    lambda_e6,
    sl3_basis,
    skew_matrix,
    su3_basis,
    tau_lambda_e6,
)
from exlie.jordan import is_derivation
from exlie.linalg import GaussRat, Mat, rank

from conftest import gauss, np_mat, numeric_killing, rand_gauss

e6_elems = st.lists(gauss, min_size=8, max_size=8).map(E6Elem.from_coords)


def test_dimensions():
    assert f4_algebra().dim == 3
    assert e6_algebra().dim == 8
    assert rank(Mat([b.operator().m.flat() for b in e6_basis()])) == 8


def test_f4_killing_against_numeric_oracle():
    k = numeric_killing([np_mat(b.operator().m) for b in f4_basis()])
    exact = np.array([[f4_killing(a, b).to_complex() for b in f4_basis()] for a in f4_basis()])
    assert np.allclose(k, exact)
    a1 = f4_basis()[0]
    assert f4_killing(a1, a1) == GaussRat("-1/2")
    # (,)4 = 4 B4
    assert f4_inner(a1, a1) == GaussRat(-2)


def test_e6_killing_against_numeric_oracle():
    basis = e6_basis()
    k = numeric_killing([np_mat(b.operator().m) for b in basis])
    exact = np.array([[e6_killing(a, b).to_complex() for b in basis] for a in basis])
    assert np.allclose(k, exact)
    h = E6Elem.from_coords([0, 0, 0, 1, 0, 0, 0, 0])
    assert e6_killing(h, h) == GaussRat(3)
    assert e6_killing(h, h) == e6_inner(h, h) * GaussRat("3/2")


def test_e6_cartan_form():
    # B6 on h6 = (3/2) sum tau tau'
    a, b = h6_element(1, 2), h6_element(-1, 3)
    assert e6_killing(a, b) == GaussRat("3/2") * (1 * -1 + 2 * 3 + (-3) * (-2))


@given(e6_elems, e6_elems)
def test_e6_bracket_is_commutator(a, b):
    c = e6_bracket(a, b)
    assert c.operator() == a.operator().bracket(b.operator())
    assert e6_bracket(b, a) == -c


@given(e6_elems)
def test_e6_decompose_roundtrip(a):
    assert e6_decompose(a.operator()) == a


def test_e6_bracket_example():
    h = E6Elem.from_coords([0, 0, 0, 1, 0, 0, 0, 0])
    a1 = E6Elem.from_coords([1, 0, 0, 0, 0, 0, 0, 0])
    assert e6_bracket(h, a1) == E6Elem.from_coords([0, 0, 0, 0, 0, GaussRat("-1/2"), 0, 0])


def test_f4_elements_are_derivations():
    for b in f4_basis():
        assert is_derivation(b.operator())
    x = F4Elem.from_coords([1, 2, 3])
    assert f4_bracket(x, x) == F4Elem.from_coords([0, 0, 0])


def test_f4cstar_homomorphism():
    basis = [skew_matrix(1, 0, 0), skew_matrix(0, 1, 0), skew_matrix(0, 0, 1)]
    for a in basis:
        for b in basis:
            assert f4cstar(a.commutator(b)) == f4_bracket(f4cstar(a), f4cstar(b))
    # literal operator D X + X tD, frozen values
    assert f4cstar(skew_matrix(1, 0, 0)) == F4Elem.from_coords([2, 0, 0])
    assert f4cstar(skew_matrix(0, 1, 0)) == F4Elem.from_coords([0, -2, 0])
    assert f4cstar(skew_matrix(0, 0, 1)) == F4Elem.from_coords([0, 0, 2])


def test_f4c_multiplicative():
    rng = random.Random(9)
    for _ in range(10):
        a = cayley(skew_matrix(*(rng.randint(-3, 3) for _ in range(3))))
        b = cayley(skew_matrix(*(rng.randint(-3, 3) for _ in range(3))))
        assert f4c_group_map(a) * f4c_group_map(b) == f4c_group_map(a.matmul(b))


def test_map_errors():
    with pytest.raises(NotOrthogonal):
        f4c_group_map(Mat([[2, 0, 0], [0, 1, 0], [0, 0, 1]]))
    with pytest.raises(NotSkew):
        f4cstar(Mat([[1, 0, 0], [0, 0, 0], [0, 0, 0]]))


def test_f6cstar_homomorphism_and_injective():
    basis = sl3_basis()
    for a in basis:
        for b in basis:
            assert f6cstar(a.commutator(b)) == e6_bracket(f6cstar(a), f6cstar(b))
    assert rank(Mat([f6cstar(b).coords() for b in basis])) == 8


def test_lambda_and_real_form():
    for k, b in enumerate(e6_basis()):
        assert lambda_e6(b) == (b if k < 3 else -b)
    for b in su3_basis():
        assert tau_lambda_e6(f6cstar(b)) == f6cstar(b)
    rng = random.Random(2)
    x = E6Elem.from_coords([rand_gauss(rng) for _ in range(8)])
    assert tau_lambda_e6(tau_lambda_e6(x)) == x
