import sympy
from hypothesis import given, strategies as st

from exlie.jordan import (
    BASIS,
    E,
    F_,
    E_,
    JordanElem,
    a_tilde,
    cross,
    det,
    inner,
    is_derivation,
    jordan_mul,
    t_tilde,
    tau,
    trilinear,
    vee,
)
from exlie.linalg import GaussRat, Mat

from conftest import gauss, sympy_mat, to_sympy

elems = st.lists(gauss, min_size=6, max_size=6).map(JordanElem)


def sym(x: JordanElem):
    return sympy_mat(x.to_mat())


@given(elems, elems)
def test_jordan_product_is_symmetrized_matrix_product(x, y):
    want = (sym(x) * sym(y) + sym(y) * sym(x)) / 2
    assert sym(jordan_mul(x, y)).expand() == want.expand()
    assert jordan_mul(x, y) == jordan_mul(y, x)


@given(elems, elems)
def test_inner_is_trace_of_product(x, y):
    assert to_sympy(inner(x, y)) == sympy.expand((sym(x) * sym(y)).trace())


@given(elems)
def test_cross_square_is_adjugate(x):
    # oracle: the classical adjugate
    assert sym(cross(x, x)).expand() == sym(x).adjugate().expand()


@given(elems)
def test_det_identity(x):
    assert to_sympy(det(x)) == sympy.expand(sym(x).det())
    assert jordan_mul(x, cross(x, x)) == E * det(x)


@given(elems, elems, elems)
def test_trilinear_symmetric(x, y, z):
    t = trilinear(x, y, z)
    assert t == trilinear(y, z, x) == trilinear(z, y, x)


def test_basis_and_units():
    assert E == E_(1) + E_(2) + E_(3)
    assert F_(1, 2).matrix()[1][2] == GaussRat(2)
    assert tau(JordanElem([GaussRat(0, 1)] * 6)) == JordanElem([GaussRat(0, -1)] * 6)
    assert JordanElem.from_json(F_(3).to_json()) == F_(3)


def test_a_tilde_are_derivations():
    for i in (1, 2, 3):
        assert is_derivation(a_tilde(i))
        assert is_derivation(a_tilde(i, GaussRat(2, -1)))
    assert not is_derivation(t_tilde(E_(1)))


def test_a_tilde_bracket_rule():
    half = GaussRat("-1/2")
    for i in (1, 2, 3):
        j, k = i % 3 + 1, (i + 1) % 3 + 1
        assert a_tilde(i).bracket(a_tilde(j)) == a_tilde(k) * half


def test_vee_is_derivation_plus_multiplication():
    x, w = E_(1) - E_(2), F_(1)
    v = vee(x, w)
    # the derivation part of X v W is [X~, W~]
    assert is_derivation(t_tilde(x).bracket(t_tilde(w)))
    assert v.trace() == GaussRat(0)
    # X v W applied to E gives the traceless part of X o W
    want = jordan_mul(x, w) - E * (inner(x, w) * GaussRat("1/3"))
    assert v(E) == want


def test_from_matrix_rejects_asymmetric():
    import pytest

    with pytest.raises(ValueError):
        JordanElem.from_matrix(Mat([[0, 1, 0], [0, 0, 0], [0, 0, 0]]))
    assert len(BASIS) == 6
