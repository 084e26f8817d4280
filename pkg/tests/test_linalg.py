import sympy
import pytest
from hypothesis import given, strategies as st

from exlie.errors import Inconsistent, NonSquare
from exlie.linalg import (
    I,
    ONE,
    ZERO,
    GaussRat,
    Mat,
    Poly,
    Projector,
    char_poly,
    det,
    gaussian_rational_roots,
    inverse,
    kernel,
    rank,
    real_fixed_dimension,
    solve,
    span_coordinates,
)

from conftest import from_sympy, gauss, sympy_mat, to_sympy

mats3 = st.lists(st.lists(gauss, min_size=3, max_size=3), min_size=3, max_size=3).map(Mat)


def test_gaussrat_basics():
    z = GaussRat("1/2", -3)
    assert z * z.conj() == GaussRat("37/4")
    assert z * z.inverse() == ONE
    assert I * I == -ONE
    assert str(z) == "1/2-3i"
    assert GaussRat.from_json(z.to_json()) == z
    assert not ZERO and ONE
    assert hash(GaussRat(2)) == hash(GaussRat.of(2))


@given(gauss, gauss, gauss)
def test_field_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert (a * b) * c == a * (b * c)
    if b:
        assert (a / b) * b == a
    assert to_sympy(a * b) == sympy.expand(to_sympy(a) * to_sympy(b))


@given(mats3)
def test_det_rank_match_sympy(m):
    s = sympy_mat(m)
    assert to_sympy(det(m)) == sympy.expand(s.det())
    assert rank(m) == s.rank()


@given(mats3)
def test_kernel_is_kernel(m):
    ker = kernel(m)
    assert len(ker) == 3 - rank(m)
    for v in ker:
        assert all(not x for x in m.apply(v))


@given(mats3)
def test_inverse(m):
    if not det(m):
        with pytest.raises(Inconsistent):
            inverse(m)
        return
    assert inverse(m).matmul(m) == Mat.identity(3)


def test_solve_and_errors():
    m = Mat([[1, 2], [2, 4]])
    with pytest.raises(Inconsistent):
        solve(m, [1, 0])
    x = solve(m, [3, 6])
    assert m.apply(x) == (GaussRat(3), GaussRat(6))
    with pytest.raises(NonSquare):
        det(Mat([[1, 2, 3]]))


def test_projector_and_span():
    vs = [(1, 0, 1), (0, 1, I)]
    p = Projector(vs)
    c = p.coords((2, 3, 2 + 3 * I))
    assert c == (GaussRat(2), GaussRat(3))
    with pytest.raises(Inconsistent):
        p.coords((0, 0, 1))
    assert span_coordinates(vs, (0, 0, 1)) is None


@given(mats3)
def test_char_poly_matches_sympy(m):
    x = sympy.Symbol("x")
    want = sympy.Poly(sympy_mat(m).charpoly(x).as_expr(), x).all_coeffs()[::-1]
    got = char_poly(m).coeffs
    assert [to_sympy(c) for c in got] == [sympy.expand(c) for c in want]


@given(st.lists(gauss, min_size=1, max_size=6))
def test_gaussian_roots_recovered(roots):
    res = gaussian_rational_roots(Poly.from_roots(roots))
    assert res.splits
    assert sorted(res.roots, key=GaussRat.sort_key) == sorted(roots, key=GaussRat.sort_key)


def test_gaussian_roots_with_fractions_and_remainder():
    p = Poly.from_roots([GaussRat("1/3"), GaussRat("-2/5", "1/2")]) * Poly([1, 0, 1, 0, 0, 1])
    res = gaussian_rational_roots(p)
    assert set(res.roots) >= {GaussRat("1/3"), GaussRat("-2/5", "1/2")}
    # x^5 + x^2 + 1 has no roots in Q(i)
    assert res.remainder_flag
    roots, flag = res
    assert len(roots) == 2 and flag


def test_char_poly_oracle_eigenvalues():
    m = Mat([[2, 1, 0], [0, 2, 0], [0, 0, GaussRat(0, 3)]])
    res = gaussian_rational_roots(char_poly(m))
    assert res.multiplicities() == {GaussRat(2): 2, GaussRat(0, 3): 1}
    want = {from_sympy(k): v for k, v in sympy_mat(m).eigenvals().items()}
    assert res.multiplicities() == want


def test_real_fixed_dimension():
    # complex conjugation on C^3 fixes R^3
    assert real_fixed_dimension(lambda v: tuple(x.conj() for x in v), 3) == 3
    # v -> conj(swap(v)) on C^2 fixes {(z, conj z)}: real dimension 2
    assert real_fixed_dimension(lambda v: (v[1].conj(), v[0].conj()), 2) == 2
