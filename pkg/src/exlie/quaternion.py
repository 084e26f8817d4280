"""Complexified quaternions and the map from sp(3, H^C) onto e7.

The scalar i of Q(i) and the quaternion unit e1 are kept apart: a QuatC
has Gaussian-rational coefficients on (1, e1, e2, e3), and i commutes
with every unit.  The "overline" on C^C = span{1, e1} negates e1 only.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Sequence

from .errors import NotSp3, NotSU3CC
from .f4e6 import f6cstar
from .e7 import E7Elem
from .jordan import JordanElem
from .linalg import ZERO, GaussRat, Mat, as_vector

I = GaussRat(0, 1)

# e_a e_b = sign * e_c for a, b in 1..3
_TABLE = {
    (1, 1): (-1, 0), (2, 2): (-1, 0), (3, 3): (-1, 0),
    (1, 2): (1, 3), (2, 3): (1, 1), (3, 1): (1, 2),
    (2, 1): (-1, 3), (3, 2): (-1, 1), (1, 3): (-1, 2),
}


class QuatC:
    __slots__ = ("c",)

    def __init__(self, c0=0, c1=0, c2=0, c3=0):
        self.c = as_vector((c0, c1, c2, c3))

    @classmethod
    def _wrap(cls, c: tuple) -> "QuatC":
        q = cls.__new__(cls)
        q.c = c
        return q

    @classmethod
    def of(cls, x) -> "QuatC":
        return x if isinstance(x, QuatC) else cls(x)

    def __add__(self, o):
        o = QuatC.of(o)
        return QuatC._wrap(tuple(a + b for a, b in zip(self.c, o.c)))

    __radd__ = __add__

    def __sub__(self, o):
        o = QuatC.of(o)
        return QuatC._wrap(tuple(a - b for a, b in zip(self.c, o.c)))

    def __rsub__(self, o):
        return QuatC.of(o) - self

    def __neg__(self):
        return QuatC._wrap(tuple(-a for a in self.c))

    def __mul__(self, o):
        if not isinstance(o, QuatC):
            k = GaussRat.of(o)
            return QuatC._wrap(tuple(k * a for a in self.c))
        out = [ZERO] * 4
        for a, x in enumerate(self.c):
            if not x:
                continue
            for b, y in enumerate(o.c):
                if not y:
                    continue
                if a == 0 or b == 0:
                    out[a + b] = out[a + b] + x * y
                else:
                    sign, k = _TABLE[(a, b)]
                    out[k] = out[k] + x * y * sign
        return QuatC._wrap(tuple(out))

    def __rmul__(self, k):
        k = GaussRat.of(k)
        return QuatC._wrap(tuple(k * a for a in self.c))

    def conj(self) -> "QuatC":
        """Quaternion conjugation: negate e1, e2, e3 (the scalar i is kept)."""
        c0, c1, c2, c3 = self.c
        return QuatC._wrap((c0, -c1, -c2, -c3))

    def bar(self) -> "QuatC":
        """Overline on C^C: negate e1 only."""
        c0, c1, c2, c3 = self.c
        return QuatC._wrap((c0, -c1, c2, c3))

    def in_cc(self) -> bool:
        return not self.c[2] and not self.c[3]

    def is_scalar(self) -> bool:
        return not any(self.c[1:])

    def __eq__(self, o):
        if not isinstance(o, QuatC):
            try:
                o = QuatC.of(o)
            except TypeError:
                return NotImplemented
        return self.c == o.c

    def __hash__(self):
        return hash(self.c)

    def __bool__(self):
        return any(self.c)

    def __repr__(self):
        return "QuatC(" + ", ".join(str(x) for x in self.c) + ")"


Q0 = QuatC()
Q1 = QuatC(1)
E1 = QuatC(0, 1)
E2 = QuatC(0, 0, 1)
E3 = QuatC(0, 0, 0, 1)


def quat_mul(a: QuatC, b: QuatC) -> QuatC:
    return a * b


def quat_conj(a: QuatC) -> QuatC:
    return a.conj()


def iota_pair() -> tuple:
    """iota = (1 + i e1)/2 and its overline (1 - i e1)/2."""
    half = GaussRat("1/2")
    return QuatC(half, half * I), QuatC(half, -half * I)


IOTA, IOTA_BAR = iota_pair()


# ------------------------------------------------------------- matrices


class QMat:
    """3x3 matrix over H^C."""

    __slots__ = ("e",)

    def __init__(self, entries: Sequence[Sequence]):
        self.e = tuple(tuple(QuatC.of(x) for x in r) for r in entries)

    @classmethod
    def zero(cls) -> "QMat":
        return cls([[Q0] * 3 for _ in range(3)])

    @classmethod
    def unit(cls, j: int, k: int, q: QuatC) -> "QMat":
        rows = [[Q0] * 3 for _ in range(3)]
        rows[j][k] = q
        return cls(rows)

    @classmethod
    def scalar(cls, q: QuatC) -> "QMat":
        return cls([[q if j == k else Q0 for k in range(3)] for j in range(3)])

    def __add__(self, o):
        return QMat([[a + b for a, b in zip(r, s)] for r, s in zip(self.e, o.e)])

    def __sub__(self, o):
        return QMat([[a - b for a, b in zip(r, s)] for r, s in zip(self.e, o.e)])

    def __neg__(self):
        return QMat([[-a for a in r] for r in self.e])

    def __mul__(self, o):
        if isinstance(o, QMat):
            return QMat([[sum((self.e[j][m] * o.e[m][k] for m in range(3)), Q0) for k in range(3)] for j in range(3)])
        if isinstance(o, QuatC):
            return QMat([[a * o for a in r] for r in self.e])
        return QMat([[a * o for a in r] for r in self.e])

    def lmul(self, q: QuatC) -> "QMat":
        return QMat([[q * a for a in r] for r in self.e])

    def star(self) -> "QMat":
        """Conjugate transpose."""
        return QMat([[self.e[k][j].conj() for k in range(3)] for j in range(3)])

    def transpose(self) -> "QMat":
        return QMat([[self.e[k][j] for k in range(3)] for j in range(3)])

    def bar(self) -> "QMat":
        return QMat([[a.bar() for a in r] for r in self.e])

    def bracket(self, o: "QMat") -> "QMat":
        return self * o - o * self

    def is_zero(self) -> bool:
        return not any(any(r) for r in self.e)

    def __eq__(self, o):
        return isinstance(o, QMat) and self.e == o.e

    def __hash__(self):
        return hash(self.e)

    def __repr__(self):
        return "QMat(" + repr([list(r) for r in self.e]) + ")"

    def coords(self) -> tuple:
        return tuple(x for r in self.e for q in r for x in q.c)


def is_sp3(d: QMat) -> bool:
    return (d + d.star()).is_zero()


class Sp3Decomp:
    """D = B + L(e2 E) + s E."""

    __slots__ = ("b", "l", "s")

    def __init__(self, b: QMat, l: QMat, s: GaussRat):
        self.b = b
        self.l = l
        self.s = GaussRat.of(s)

    def reassemble(self) -> QMat:
        return self.b + self.l * E2 + QMat.scalar(E1 * self.s)

    def __eq__(self, o):
        return isinstance(o, Sp3Decomp) and (self.b, self.l, self.s) == (o.b, o.l, o.s)

    def __repr__(self):
        return f"Sp3Decomp(B={self.b!r}, L={self.l!r}, s={self.s} e1)"


def decompose_sp3(d: QMat) -> Sp3Decomp:
    if not is_sp3(d):
        raise NotSp3("D + D* != 0")
    cc = [[QuatC(q.c[0], q.c[1]) for q in r] for r in d.e]
    l = [[QuatC(q.c[2], q.c[3]) for q in r] for r in d.e]
    s = (cc[0][0].c[1] + cc[1][1].c[1] + cc[2][2].c[1]) * GaussRat("1/3")
    for j in range(3):
        cc[j][j] = cc[j][j] - E1 * s
    return Sp3Decomp(QMat(cc), QMat(l), s)


def _check_su3cc(b: QMat) -> None:
    if not all(q.in_cc() for r in b.e for q in r):
        raise NotSU3CC("entries must lie in C^C")
    if not (b + b.transpose().bar()).is_zero():
        raise NotSU3CC("B is not skew-hermitian over C^C")
    if b.e[0][0] + b.e[1][1] + b.e[2][2]:
        raise NotSU3CC("B is not traceless")


def _scalar_or_fail(q: QuatC, err) -> GaussRat:
    if not q.is_scalar():
        raise err(f"expected a scalar, got {q!r}")
    return q.c[0]


def g_map(b: QMat) -> Mat:
    """g(B) = iota B - iota_bar tB, a traceless 3x3 over Q(i)."""
    _check_su3cc(b)
    out = b.lmul(IOTA) - b.transpose().lmul(IOTA_BAR)
    return Mat([[_scalar_or_fail(q, NotSU3CC) for q in r] for r in out.e])


def g_inverse(s: Mat) -> QMat:
    """Inverse of g on traceless 3x3 matrices, by exact linear solve."""
    from .linalg import solve

    basis = su3cc_basis()
    cols = [g_map(b).flat() for b in basis]
    coef = solve(Mat.from_columns(cols), s.flat())
    out = QMat.zero()
    for c, b in zip(coef, basis):
        if c:
            out = out + b * c
    return out


def _cc_scalar(q: QuatC, err) -> GaussRat:
    return _scalar_or_fail(q, err)


def f7cstar(d: QMat) -> E7Elem:
    """B + L(e2 E) + sE -> Phi(f6(g(B)), -(iota L + iota_bar Lbar), iota_bar L + iota Lbar, 3(iota - iota_bar)s)."""
    dec = decompose_sp3(d)
    phi = f6cstar(g_map(dec.b))
    lbar = dec.l.bar()
    a = -(dec.l.lmul(IOTA) + lbar.lmul(IOTA_BAR))
    bb = dec.l.lmul(IOTA_BAR) + lbar.lmul(IOTA)
    a_m = [[_cc_scalar(q, NotSp3) for q in r] for r in a.e]
    b_m = [[_cc_scalar(q, NotSp3) for q in r] for r in bb.e]
    nu = _cc_scalar((IOTA - IOTA_BAR) * E1 * (dec.s * 3), NotSp3)
    return E7Elem(phi, JordanElem.from_matrix(a_m), JordanElem.from_matrix(b_m), nu)


# ---------------------------------------------------------------- bases


def su3cc_basis() -> list:
    """su(3, C^C) over C: e1(E_jj - E_kk) (2), E_jk - E_kj and e1(E_jk + E_kj) (6)."""
    out = []
    out.append(QMat.unit(0, 0, E1) - QMat.unit(1, 1, E1))
    out.append(QMat.unit(1, 1, E1) - QMat.unit(2, 2, E1))
    for j, k in ((0, 1), (0, 2), (1, 2)):
        out.append(QMat.unit(j, k, Q1) - QMat.unit(k, j, Q1))
        out.append(QMat.unit(j, k, E1) + QMat.unit(k, j, E1))
    return out


def sym_cc_e2_basis() -> list:
    """Symmetric L over C^C times e2: 6 positions x {1, e1}."""
    out = []
    for j, k in ((0, 0), (1, 1), (2, 2), (0, 1), (0, 2), (1, 2)):
        for z in (Q1, E1):
            m = QMat.unit(j, k, z)
            if j != k:
                m = m + QMat.unit(k, j, z)
            out.append(m * E2)
    return out


@lru_cache(maxsize=None)
def sp3_basis() -> tuple:
    """21 elements: 8 + 12 + 1.  All coefficients are real, so this is also a
    rational basis of the compact sp(3)."""
    return tuple(su3cc_basis() + sym_cc_e2_basis() + [QMat.scalar(E1)])


def sp3_real_basis() -> tuple:
    return sp3_basis()


def sp3_names() -> tuple:
    names = ["e1(E11-E22)", "e1(E22-E33)"]
    for j, k in ((1, 2), (1, 3), (2, 3)):
        names += [f"E{j}{k}-E{k}{j}", f"e1(E{j}{k}+E{k}{j})"]
    for j, k in ((1, 1), (2, 2), (3, 3), (1, 2), (1, 3), (2, 3)):
        names += [f"S{j}{k}e2", f"e1S{j}{k}e2"]
    names.append("e1E")
    return tuple(names)


def sp3_coords(d: QMat) -> tuple:
    """Coordinates of D in sp3_basis, by exact linear solve."""
    from .linalg import solve

    cols = [b.coords() for b in sp3_basis()]
    return solve(Mat.from_columns(cols), d.coords())
