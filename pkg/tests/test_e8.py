import random

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from exlie.e7 import E7Elem, FreudElem, exp_nilpotent
from exlie.e8 import (
    CROSS_COEFF,
    E8_NAMES,
    LITERAL_COEFF,
    ONE_DOWN,
    ONE_TILDE,
    ONE_UP,
    E8Elem,
    centralizer_of,
    e8_algebra,
    e8_basis,
    e8_bracket,
    h8_element,
    in_W,
    inner8,
    killing8,
    killing8_form,
    lemma67_check,
    r_cross_r,
)
from exlie.linalg import GaussRat, Mat, rank

from conftest import gauss, rand_gauss

e8_elems = st.lists(gauss, min_size=52, max_size=52).map(E8Elem.from_coords)


def test_basis_and_names():
    assert len(E8_NAMES) == len(e8_basis()) == 52 == e8_algebra().dim
    assert E8_NAMES[-3:] == ("1~", "1^-", "1_-")
    assert e8_basis()[-1] == ONE_DOWN


def test_faithful_adjoint():
    alg = e8_algebra()
    rows = [alg.ad(b.coords()).flat() for b in e8_basis()]
    assert rank(Mat(rows)) == 52


def test_atoms():
    assert e8_bracket(ONE_UP, ONE_DOWN) == ONE_TILDE
    assert e8_bracket(ONE_TILDE, ONE_DOWN) == ONE_DOWN * -2
    assert e8_bracket(ONE_TILDE, ONE_UP) == ONE_UP * 2


@settings(max_examples=10)
@given(e8_elems, e8_elems)
def test_bracket_antisymmetric_and_tabulated(a, b):
    c = e8_bracket(a, b)
    assert e8_bracket(b, a) == -c
    assert e8_algebra().bracket(a.coords(), b.coords()) == c.coords()


@settings(max_examples=5)
@given(e8_elems, e8_elems, e8_elems)
def test_jacobi_random_elements(a, b, c):
    s = e8_bracket(a, e8_bracket(b, c)) + e8_bracket(b, e8_bracket(c, a)) + e8_bracket(c, e8_bracket(a, b))
    assert not s


@settings(max_examples=10)
@given(e8_elems, e8_elems, e8_elems)
def test_inner8_invariant(x, a, b):
    assert inner8(e8_bracket(x, a), b) + inner8(a, e8_bracket(x, b)) == GaussRat(0)


def test_killing_matches_numeric_adtrace():
    alg = e8_algebra()
    basis = e8_basis()
    ads = [np.array(alg.ad(b.coords()).to_complex()) for b in basis[-6:]]
    for i, x in enumerate(ads):
        for j, y in enumerate(ads):
            want = killing8_form(basis[46 + i], basis[46 + j]).to_complex()
            assert abs(np.trace(x @ y) - want) < 1e-9


def test_killing_constants():
    assert inner8(ONE_TILDE, ONE_TILDE) == GaussRat(-8)
    assert killing8(ONE_TILDE, ONE_TILDE) == GaussRat(36)
    a, b = h8_element(1, 2, 3, 4), h8_element(-1, 1, 2, -1)
    want = 9 * (1 * -1 + 2 * 1 + (-3) * 0) + 12 * 3 * 2 + 36 * 4 * -1
    assert killing8(a, b) == GaussRat(want)


def test_json_roundtrip():
    rng = random.Random(8)
    x = E8Elem.from_coords([rand_gauss(rng) for _ in range(52)])
    assert E8Elem.from_json(x.to_json()) == x


def _orbit_element(seed):
    # exp(ad X) 1_- with X of positive grade (P part and 1^- part) is nilpotent
    rng = random.Random(seed)
    p = FreudElem.from_coords([rand_gauss(rng, -2, 2) for _ in range(14)])
    x = E8Elem(p=p, s=rng.randint(-2, 2))
    g = exp_nilpotent(e8_algebra().ad(x.coords()))
    return E8Elem.from_coords(g.apply(ONE_DOWN.coords()))


def test_one_low_in_W():
    assert all(lemma67_check(ONE_DOWN))
    assert in_W(ONE_DOWN)


def test_literal_weight_fails_on_one_low():
    # the 1/30 weight leaves -(7/5) 1_- on the probe 1^-
    assert r_cross_r(ONE_DOWN, ONE_UP, LITERAL_COEFF) == ONE_DOWN * GaussRat("-7/5")
    assert not r_cross_r(ONE_DOWN, ONE_UP, CROSS_COEFF)
    assert not in_W(ONE_DOWN, LITERAL_COEFF)


@pytest.mark.parametrize("seed", [1, 2])
def test_orbit_elements_in_W(seed):
    r = _orbit_element(seed)
    assert r != ONE_DOWN
    assert in_W(r)
    assert all(lemma67_check(r))


def test_one_tilde_not_in_W():
    conds = lemma67_check(ONE_TILDE)
    assert not conds[5]
    assert not in_W(ONE_TILDE)
    assert not in_W(E8Elem())


def test_conditions_agree_with_cross_on_mixed_element():
    r = ONE_DOWN + ONE_UP
    assert in_W(r) == all(lemma67_check(r))


def test_centralizer_one_low():
    ker = centralizer_of(ONE_DOWN)
    assert len(ker) == 36
    off = list(range(21, 35)) + [49, 50]
    assert all(not v[i] for v in ker for i in off)


def test_cartan_abelian():
    a, b = h8_element(1, 2, 3, 4), h8_element(5, -1, 0, 2)
    assert not e8_bracket(a, b)
    assert e8_bracket(E8Elem(phi=E7Elem(nu=1)), ONE_TILDE) == E8Elem()
