import numpy as np
import pytest
from hypothesis import given, strategies as st

from exlie.e7 import e7_bracket
from exlie.errors import NotSp3, NotSU3CC
from exlie.linalg import GaussRat, Mat, rank
from exlie.quaternion import (
    E1,
    E2,
    E3,
    IOTA,
    IOTA_BAR,
    Q1,
    QMat,
    QuatC,
    decompose_sp3,
    f7cstar,
    g_inverse,
    g_map,
    is_sp3,
    sp3_basis,
    sp3_coords,
    sp3_names,
    su3cc_basis,
)

from conftest import gauss

quats = st.lists(gauss, min_size=4, max_size=4).map(lambda c: QuatC(*c))

# oracle: H tensor C is the 2x2 complex matrix algebra
_U = [
    np.eye(2, dtype=complex),
    np.array([[1j, 0], [0, -1j]]),
    np.array([[0, 1], [-1, 0]], dtype=complex),
    np.array([[0, 1j], [1j, 0]]),
]


def m2(q: QuatC):
    return sum(x.to_complex() * u for x, u in zip(q.c, _U))


@given(quats, quats)
def test_product_matches_matrix_model(a, b):
    assert np.allclose(m2(a * b), m2(a) @ m2(b))


@given(quats, quats, quats)
def test_associative_and_conj(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert (a * b).conj() == b.conj() * a.conj()


def test_units():
    assert E1 * E2 == E3 and E2 * E3 == E1 and E3 * E1 == E2
    assert E1 * E1 == -Q1
    assert IOTA * IOTA == IOTA
    assert IOTA_BAR * IOTA_BAR == IOTA_BAR
    assert IOTA * IOTA_BAR == QuatC()
    assert IOTA + IOTA_BAR == Q1


def test_sp3_basis():
    basis = sp3_basis()
    assert len(basis) == 21 == len(sp3_names())
    assert all(is_sp3(b) for b in basis)
    assert rank(Mat([b.coords() for b in basis])) == 21
    for b in basis:
        assert decompose_sp3(b).reassemble() == b
    d = basis[3] * GaussRat(2) + basis[15]
    c = sp3_coords(d)
    assert c[3] == GaussRat(2) and c[15] == GaussRat(1)


def test_g_map_roundtrip():
    for b in su3cc_basis():
        s = g_map(b)
        assert s.trace() == GaussRat(0)
        assert g_inverse(s) == b


def test_errors():
    with pytest.raises(NotSp3):
        decompose_sp3(QMat.unit(0, 1, Q1))
    with pytest.raises(NotSU3CC):
        g_map(QMat.unit(0, 0, E2))


def test_f7cstar_homomorphism():
    basis = sp3_basis()
    images = [f7cstar(b) for b in basis]
    for i, a in enumerate(basis):
        for j, b in enumerate(basis):
            assert f7cstar(a.bracket(b)) == e7_bracket(images[i], images[j])
    assert rank(Mat([x.coords() for x in images])) == 21
