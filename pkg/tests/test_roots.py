import pytest
import sympy
from hypothesis import given, strategies as st

from exlie.errors import DegenerateCartanForm, NonGenericCartanElement, NonSplitSpectrum, NotCrystallographic, UnknownType
from exlie.lie import LieAlgebraData
from exlie.linalg import GaussRat, Mat, Projector
from exlie.roots import (
    CartanDatum,
    cartan_matrix,
    check_positive_definite,
    classify_dynkin,
    coroot,
    decompose,
    positive_split,
    render_dynkin,
    root_inner,
    simple_coefficients,
    simple_roots,
    standard_cartan_matrix,
)

# determinants of the Cartan matrices, a classical invariant
DETS = {("A", 1): 2, ("A", 3): 4, ("B", 3): 2, ("C", 3): 2, ("D", 4): 4, ("E", 6): 3, ("E", 7): 2, ("E", 8): 1, ("F", 4): 1, ("G", 2): 1}


@pytest.mark.parametrize("kind,n", sorted(DETS))
def test_standard_matrices(kind, n):
    cm = standard_cartan_matrix(kind, n)
    assert sympy.Matrix(cm).det() == DETS[(kind, n)]
    assert classify_dynkin(cm).label == f"{kind}{n}"


def test_b_and_c_are_transposes():
    b, c = standard_cartan_matrix("B", 3), standard_cartan_matrix("C", 3)
    assert [list(r) for r in zip(*b)] == c
    assert b != c


@given(st.sampled_from(sorted(DETS)), st.randoms(use_true_random=False))
def test_classification_ignores_node_order(kn, rnd):
    cm = standard_cartan_matrix(*kn)
    p = list(range(len(cm)))
    rnd.shuffle(p)
    shuffled = [[cm[p[i]][p[j]] for j in range(len(cm))] for i in range(len(cm))]
    assert classify_dynkin(shuffled).label == f"{kn[0]}{kn[1]}"


def test_reducible_and_rendering():
    a1 = standard_cartan_matrix("A", 1)
    g2 = standard_cartan_matrix("G", 2)
    cm = [[2, 0, 0], [0] + g2[0], [0] + g2[1]]
    assert classify_dynkin(cm).label == "A1+G2"
    assert render_dynkin(a1) == "o"
    assert render_dynkin(standard_cartan_matrix("A", 3)) == "o-o-o"
    assert render_dynkin(g2).count("#") == 1
    assert render_dynkin(standard_cartan_matrix("D", 4)).startswith("branched")
    # arrow toward the shorter root: B3 ends in a short root, C3 in a long one
    assert render_dynkin(standard_cartan_matrix("B", 3)) == "o-o=>o"
    assert render_dynkin(standard_cartan_matrix("C", 3)) == "o-o<=o"
    assert render_dynkin(standard_cartan_matrix("F", 4)) == "o-o=>o-o"


def test_classification_errors():
    with pytest.raises(NotCrystallographic):
        classify_dynkin([[2, 1], [1, 2]])
    with pytest.raises(NotCrystallographic):
        classify_dynkin([[2, -1], [0, 2]])
    with pytest.raises(UnknownType):
        classify_dynkin([[2, -1], [-4, 2]])
    with pytest.raises(NotCrystallographic):
        check_positive_definite([[2, -2], [-2, 2]])


# ---------------------------------------------------- sl(n) from matrix units


def _unit(n, i, j):
    return Mat([[1 if (a, b) == (i, j) else 0 for b in range(n)] for a in range(n)])


def sl_algebra(n):
    basis = [_unit(n, i, j) for i in range(n) for j in range(n) if i != j]
    basis += [_unit(n, i, i) - _unit(n, i + 1, i + 1) for i in range(n - 1)]
    proj = Projector([b.flat() for b in basis])

    def to_mat(v):
        out = Mat.zeros(n)
        for c, b in zip(v, basis):
            out = out + b.scale(c)
        return out

    def br(u, v):
        return proj.coords(to_mat(u).commutator(to_mat(v)).flat())

    alg = LieAlgebraData.from_bracket([f"b{k}" for k in range(len(basis))], br)
    dim = len(basis)
    cartan = [tuple(GaussRat(1 if k == dim - (n - 1) + i else 0) for k in range(dim)) for i in range(n - 1)]
    return alg, cartan


@pytest.mark.parametrize("n", [2, 3, 4])
def test_sl_n_roots(n):
    alg, cartan = sl_algebra(n)
    rs = decompose(alg, CartanDatum(cartan, [1, 3, 7][: n - 1]))
    assert len(rs) == n * (n - 1)
    pos, neg = positive_split(rs)
    assert len(pos) == len(neg) == n * (n - 1) // 2
    simple = simple_roots(pos)
    cm = cartan_matrix(rs, simple)
    assert classify_dynkin(cm).label == f"A{n - 1}"
    for r in rs.roots:
        c = simple_coefficients(rs, simple, r.values)
        assert all(x.is_real() and x.re.denominator == 1 for x in c)
    for a in simple:
        assert root_inner(rs, a, a) == root_inner(rs, simple[0], simple[0])
        t = coroot(rs, a.values)
        assert rs.cartan.rank == len(t)


def test_sl2_values():
    alg, cartan = sl_algebra(2)
    rs = decompose(alg, CartanDatum(cartan, [1]))
    # ad H on E12 is 2: roots are +-2 on the generator
    assert sorted(r.values[0].re for r in rs.roots) == [-2, 2]


def test_engine_errors():
    alg, cartan = sl_algebra(3)
    with pytest.raises(NonGenericCartanElement):
        decompose(alg, CartanDatum(cartan, [0, 0]))
    # H1 + 2 H2 = diag(1, 1, -2) has a zero root value
    with pytest.raises(NonGenericCartanElement):
        decompose(alg, CartanDatum(cartan, [1, 2]))
    # E12 does not commute with H1
    with pytest.raises(NonGenericCartanElement):
        decompose(alg, CartanDatum([cartan[0], alg_unit(alg, 0)], [1, 1]))
    alg2, _ = sl_algebra(2)
    # e + 2f has ad-eigenvalues +-2 sqrt 2
    with pytest.raises(NonSplitSpectrum):
        decompose(alg2, CartanDatum([(1, 2, 0)], [1]))
    ab = LieAlgebraData(["x", "y"], {})
    with pytest.raises(DegenerateCartanForm):
        decompose(ab, CartanDatum([(1, 0), (0, 1)], [1, 2]))


def alg_unit(alg, k):
    return tuple(GaussRat(1 if j == k else 0) for j in range(alg.dim))
