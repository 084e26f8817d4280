"""The Jordan algebra of complex symmetric 3x3 matrices.

Coordinates are (xi1, xi2, xi3, x1, x2, x3) in the basis
(E1, E2, E3, F1(1), F2(1), F3(1)), where Fi(x) carries x in the two
off-diagonal slots not meeting row/column i.
"""

from __future__ import annotations

from typing import Callable, Sequence

from .linalg import ONE, ZERO, GaussRat, Mat, as_vector, rat

# matrix position of the off-diagonal coordinate x_k
_OFF = {0: (1, 2), 1: (0, 2), 2: (0, 1)}
GRAM = (1, 1, 1, 2, 2, 2)
_GRATIO = [[rat(GRAM[j]) / rat(GRAM[i]) for i in range(6)] for j in range(6)]


def _m3mul(a, b):
    return [[sum((a[i][k] * b[k][j] for k in range(3) if a[i][k] and b[k][j]), ZERO) for j in range(3)] for i in range(3)]


class JordanElem:
    __slots__ = ("c",)

    def __init__(self, coords: Sequence):
        c = as_vector(coords)
        if len(c) != 6:
            raise ValueError("a Jordan element has 6 coordinates")
        self.c = c

    @classmethod
    def _wrap(cls, c: tuple) -> "JordanElem":
        x = cls.__new__(cls)
        x.c = c
        return x

    @classmethod
    def zero(cls) -> "JordanElem":
        return cls._wrap((ZERO,) * 6)

    @classmethod
    def from_matrix(cls, m) -> "JordanElem":
        rows = m.rows if isinstance(m, Mat) else m
        rows = [[GaussRat.of(x) for x in r] for r in rows]
        for i in range(3):
            for j in range(3):
                if rows[i][j] != rows[j][i]:
                    raise ValueError("matrix is not symmetric")
        return cls._wrap((rows[0][0], rows[1][1], rows[2][2], rows[1][2], rows[0][2], rows[0][1]))

    def matrix(self) -> list:
        a, b, c, x1, x2, x3 = self.c
        return [[a, x3, x2], [x3, b, x1], [x2, x1, c]]

    def to_mat(self) -> Mat:
        return Mat(self.matrix())

    def __add__(self, o: "JordanElem") -> "JordanElem":
        return JordanElem._wrap(tuple(a + b for a, b in zip(self.c, o.c)))

    def __sub__(self, o: "JordanElem") -> "JordanElem":
        return JordanElem._wrap(tuple(a - b for a, b in zip(self.c, o.c)))

    def __neg__(self) -> "JordanElem":
        return JordanElem._wrap(tuple(-a for a in self.c))

    def __mul__(self, k) -> "JordanElem":
        k = GaussRat.of(k)
        return JordanElem._wrap(tuple(k * a for a in self.c))

    __rmul__ = __mul__

    def __eq__(self, o):
        return isinstance(o, JordanElem) and self.c == o.c

    def __hash__(self):
        return hash(self.c)

    def __bool__(self):
        return any(self.c)

    def __repr__(self):
        return "JordanElem(" + ", ".join(str(x) for x in self.c) + ")"

    def tr(self) -> GaussRat:
        return self.c[0] + self.c[1] + self.c[2]

    def to_json(self) -> list:
        return [x.to_json() for x in self.c]

    @classmethod
    def from_json(cls, d) -> "JordanElem":
        return cls([GaussRat.from_json(x) for x in d])


def E_(i: int) -> JordanElem:
    """Diagonal idempotent E_i, i in 1..3."""
    c = [ZERO] * 6
    c[(i - 1) % 3] = ONE
    return JordanElem._wrap(tuple(c))


def F_(i: int, x=1) -> JordanElem:
    """Off-diagonal element F_i(x), indices mod 3."""
    c = [ZERO] * 6
    c[3 + (i - 1) % 3] = GaussRat.of(x)
    return JordanElem._wrap(tuple(c))


E = JordanElem([1, 1, 1, 0, 0, 0])
BASIS = tuple(E_(i) for i in (1, 2, 3)) + tuple(F_(i) for i in (1, 2, 3))
BASIS_NAMES = ("E1", "E2", "E3", "F1(1)", "F2(1)", "F3(1)")


def jordan_mul(x: JordanElem, y: JordanElem) -> JordanElem:
    """X o Y = (XY + YX)/2."""
    a, b = x.matrix(), y.matrix()
    ab, ba = _m3mul(a, b), _m3mul(b, a)
    half = GaussRat("1/2")
    return JordanElem.from_matrix([[(ab[i][j] + ba[i][j]) * half for j in range(3)] for i in range(3)])


def inner(x: JordanElem, y: JordanElem) -> GaussRat:
    """(X, Y) = tr(X o Y); Gram matrix diag(1,1,1,2,2,2)."""
    s = ZERO
    for g, a, b in zip(GRAM, x.c, y.c):
        if a and b:
            s = s + a * b * g
    return s


def cross(x: JordanElem, y: JordanElem) -> JordanElem:
    """Freudenthal product X x Y."""
    tx, ty = x.tr(), y.tr()
    out = jordan_mul(x, y) * 2 - y * tx - x * ty + E * (tx * ty - inner(x, y))
    return out * GaussRat("1/2")


def trilinear(x: JordanElem, y: JordanElem, z: JordanElem) -> GaussRat:
    return inner(x, cross(y, z))


def det(x: JordanElem) -> GaussRat:
    return trilinear(x, x, x) * GaussRat("1/3")


def tau(x: JordanElem) -> JordanElem:
    """Complex conjugation of every coordinate."""
    return JordanElem._wrap(tuple(a.conj() for a in x.c))


# ------------------------------------------------------------- operators


class JordanOperator:
    """A linear map of the Jordan algebra as a 6x6 matrix on coordinates."""

    __slots__ = ("m",)

    def __init__(self, m: Mat):
        if m.shape != (6, 6):
            raise ValueError("expected a 6x6 matrix")
        self.m = m

    @classmethod
    def from_function(cls, f: Callable[[JordanElem], JordanElem]) -> "JordanOperator":
        return cls(Mat.from_columns([f(b).c for b in BASIS]))

    @classmethod
    def identity(cls) -> "JordanOperator":
        return cls(Mat.identity(6))

    @classmethod
    def zero(cls) -> "JordanOperator":
        return cls(Mat.zeros(6))

    def __call__(self, x: JordanElem) -> JordanElem:
        return JordanElem._wrap(self.m.apply(x.c))

    def __add__(self, o: "JordanOperator") -> "JordanOperator":
        return JordanOperator(self.m + o.m)

    def __sub__(self, o: "JordanOperator") -> "JordanOperator":
        return JordanOperator(self.m - o.m)

    def __neg__(self) -> "JordanOperator":
        return JordanOperator(-self.m)

    def __mul__(self, o):
        if isinstance(o, JordanOperator):
            return JordanOperator(self.m.matmul(o.m))
        if isinstance(o, JordanElem):
            return self(o)
        return JordanOperator(self.m.scale(o))

    def __rmul__(self, k):
        return JordanOperator(self.m.scale(k))

    def bracket(self, o: "JordanOperator") -> "JordanOperator":
        return JordanOperator(self.m.commutator(o.m))

    def trace(self) -> GaussRat:
        return self.m.trace()

    def is_zero(self) -> bool:
        return self.m.is_zero()

    def __eq__(self, o):
        return isinstance(o, JordanOperator) and self.m == o.m

    def __hash__(self):
        return hash(self.m)

    def __repr__(self):
        return f"JordanOperator({self.m!r})"

    def transpose(self) -> "JordanOperator":
        return transpose_op(self)


def transpose_op(d: JordanOperator) -> JordanOperator:
    """Transpose with respect to ( , ): G^-1 d^T G."""
    rows = d.m.rows
    out = []
    for i in range(6):
        out.append(tuple(rows[j][i] * _GRATIO[j][i] if rows[j][i] else rows[j][i] for j in range(6)))
    return JordanOperator(Mat._wrap(tuple(out), 6))


def _axis_matrix(i: int, c: GaussRat) -> list:
    """A_i(c): skew 3x3 with c placed according to axis i (mod 3)."""
    a = [[ZERO] * 3 for _ in range(3)]
    k = (i - 1) % 3
    p, q = ((1, 2), (2, 0), (0, 1))[k]
    a[p][q] = c
    a[q][p] = -c
    return a


def axis_matrix(i: int, c=1) -> Mat:
    return Mat(_axis_matrix(i, GaussRat.of(c)))


def a_tilde(i: int, c=1) -> JordanOperator:
    """A~_i(c) X = (A_i(c) X - X A_i(c)) / 2."""
    a = _axis_matrix(i, GaussRat.of(c))
    half = GaussRat("1/2")

    def f(x: JordanElem) -> JordanElem:
        xm = x.matrix()
        l, r = _m3mul(a, xm), _m3mul(xm, a)
        return JordanElem.from_matrix([[(l[p][q] - r[p][q]) * half for q in range(3)] for p in range(3)])

    return JordanOperator.from_function(f)


def t_tilde(t: JordanElem) -> JordanOperator:
    """T~ X = T o X."""
    return JordanOperator.from_function(lambda x: jordan_mul(t, x))


def vee(x: JordanElem, w: JordanElem) -> JordanOperator:
    """X v W = [X~, W~] + (X o W - (X,W)E/3)~."""
    if not any(x.c) or not any(w.c):
        return JordanOperator.zero()
    xt, wt = t_tilde(x), t_tilde(w)
    t = jordan_mul(x, w) - E * (inner(x, w) * GaussRat("1/3"))
    return xt.bracket(wt) + t_tilde(t)


def is_derivation(d: JordanOperator) -> bool:
    """d(X o Y) = dX o Y + X o dY on all basis pairs."""
    for x in BASIS:
        for y in BASIS:
            if d(jordan_mul(x, y)) != jordan_mul(d(x), y) + jordan_mul(x, d(y)):
                return False
    return True
