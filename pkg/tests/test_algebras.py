import numpy as np
import pytest
from fractions import Fraction as F

from exlie import algebras
from exlie.linalg import GaussRat
from exlie.roots import cartan_matrix, classify_dynkin, positive_split, root_inner, simple_roots

EXPECTED = {"f4r": (3, 2, "A1"), "e6r": (8, 6, "A2"), "e7r": (21, 18, "C3"), "e8r": (52, 48, "F4")}


@pytest.mark.parametrize("name", algebras.NAMES)
def test_counts_and_types(name):
    dim, count, kind = EXPECTED[name]
    rs = algebras.root_system(name)
    assert rs.alg.dim == dim
    assert len(rs) == count
    pos, _ = positive_split(rs)
    assert classify_dynkin(cartan_matrix(rs, simple_roots(pos))).label == kind


@pytest.mark.parametrize("name", algebras.NAMES)
def test_generic_values_match_numeric_spectrum(name):
    # oracle: floating point eigenvalues of ad(generic H)
    rs = algebras.root_system(name)
    m = np.array(rs.alg.ad(rs.cartan.element()).to_complex(), dtype=complex)
    ev = sorted(np.linalg.eigvals(m), key=lambda z: (round(z.real, 6), round(z.imag, 6)))
    got = sorted([r.at(rs.cartan.generic).to_complex() for r in rs.roots] + [0j] * rs.cartan.rank,
                 key=lambda z: (round(z.real, 6), round(z.imag, 6)))
    assert np.allclose(ev, got, atol=1e-6)


@pytest.mark.parametrize("name", algebras.NAMES)
def test_closed_forms(name):
    rs = algebras.root_system(name)
    assert set(algebras.closed_form_root_values(name)) == {r.values for r in rs.roots}


def test_f4r_roots_at_a_equal_two():
    rs = algebras.root_system("f4r")
    assert sorted(r.at([2]).re for r in rs.roots) == [-1, 1]


@pytest.mark.parametrize("name", ["e6r", "e7r", "e8r"])
def test_stated_inner_products(name):
    info = algebras.get(name)
    rs = algebras.root_system(name)
    stated = [info.values(f) for f in info.simple]
    for (i, j), want in info.inner.items():
        assert root_inner(rs, stated[i - 1], stated[j - 1]) == GaussRat.of(want)


def test_e8_inner_product_values():
    info = algebras.get("e8r")
    want = [F(1, 9), F(-1, 18), 0, 0, F(1, 9), F(-1, 18), 0, F(1, 18), F(-1, 36), F(1, 18)]
    keys = [(1, 1), (1, 2), (1, 3), (1, 4), (2, 2), (2, 3), (2, 4), (3, 3), (3, 4), (4, 4)]
    assert [info.inner[k] for k in keys] == want


def test_forms_helpers():
    f = algebras.lin(t1=F(1, 2), nu=-1)
    assert algebras.show(f) == "(1/2)tau1-nu"
    assert algebras.show(algebras.neg(f)) == "-(1/2)tau1+nu"
    assert algebras.evaluate(f, {"t1": 2, "nu": 3}) == GaussRat(-2)
    with pytest.raises(KeyError):
        algebras.get("g2")
