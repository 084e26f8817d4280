"""The 3-dimensional algebra f4 and the 8-dimensional algebra e6.

f4 elements are c1 A~1(1) + c2 A~2(1) + c3 A~3(1).  e6 elements are
delta + T~ with delta in f4 and T traceless; their 8 coordinates are
(c1, c2, c3, u1, ..., u5) where T = u1(E1-E2) + u2(E2-E3) + u3 F1(1)
+ u4 F2(1) + u5 F3(1).
"""

from __future__ import annotations

from functools import lru_cache
from typing import Sequence

from .errors import Inconsistent, InternalMismatch, NotInE6, NotOrthogonal, NotSkew, NotTraceless
from .jordan import (
    E,
    JordanElem,
    JordanOperator,
    F_,
    E_,
    a_tilde,
    inner,
    t_tilde,
    transpose_op,
)
from .lie import LieAlgebraData
from .linalg import ONE, ZERO, GaussRat, Mat, Projector, as_vector, inverse

HALF = GaussRat("1/2")
F4_NAMES = ("A1~(1)", "A2~(1)", "A3~(1)")
T_BASIS = (E_(1) - E_(2), E_(2) - E_(3), F_(1), F_(2), F_(3))
E6_NAMES = F4_NAMES + ("(E1-E2)~", "(E2-E3)~", "F1(1)~", "F2(1)~", "F3(1)~")


@lru_cache(maxsize=None)
def _a_ops() -> tuple:
    return tuple(a_tilde(i, 1) for i in (1, 2, 3))


@lru_cache(maxsize=None)
def _f4_projector() -> Projector:
    return Projector([op.m.flat() for op in _a_ops()])


class F4Elem:
    __slots__ = ("c",)

    def __init__(self, c1=0, c2=0, c3=0):
        self.c = as_vector((c1, c2, c3))

    @classmethod
    def from_coords(cls, c: Sequence) -> "F4Elem":
        return cls(*c)

    def coords(self) -> tuple:
        return self.c

    def operator(self) -> JordanOperator:
        out = JordanOperator.zero().m
        for k, op in zip(self.c, _a_ops()):
            if k:
                out = out + op.m.scale(k)
        return JordanOperator(out)

    def __add__(self, o):
        return F4Elem(*(a + b for a, b in zip(self.c, o.c)))

    def __sub__(self, o):
        return F4Elem(*(a - b for a, b in zip(self.c, o.c)))

    def __neg__(self):
        return F4Elem(*(-a for a in self.c))

    def __mul__(self, k):
        return F4Elem(*(GaussRat.of(k) * a for a in self.c))

    __rmul__ = __mul__

    def __eq__(self, o):
        return isinstance(o, F4Elem) and self.c == o.c

    def __hash__(self):
        return hash(self.c)

    def __repr__(self):
        return "F4Elem(" + ", ".join(str(x) for x in self.c) + ")"


def f4_from_operator(op: JordanOperator) -> F4Elem:
    try:
        return F4Elem(*_f4_projector().coords(op.m.flat()))
    except Inconsistent:
        raise NotInE6("operator is not in the span of A~1, A~2, A~3") from None


def f4_bracket(a: F4Elem, b: F4Elem) -> F4Elem:
    return f4_from_operator(a.operator().bracket(b.operator()))


def f4_inner(a: F4Elem, b: F4Elem) -> GaussRat:
    """(d, d')_4 = -2 (c1 c1' + c2 c2' + c3 c3')."""
    return sum((x * y for x, y in zip(a.c, b.c)), ZERO) * -2


@lru_cache(maxsize=None)
def f4_algebra() -> LieAlgebraData:
    return LieAlgebraData.from_bracket(F4_NAMES, lambda u, v: f4_bracket(F4Elem(*u), F4Elem(*v)).c)


def f4_killing_all(a: F4Elem, b: F4Elem) -> tuple:
    """(ad-trace, (1/4)(,)_4, (1/5) tr) for a pair."""
    alg = f4_algebra()
    ad = alg.killing(a.c, b.c)
    form = f4_inner(a, b) * GaussRat("1/4")
    tr = (a.operator() * b.operator()).trace() * GaussRat("1/5")
    return ad, form, tr


def f4_killing(a: F4Elem, b: F4Elem) -> GaussRat:
    ad, form, tr = f4_killing_all(a, b)
    if not (ad == form == tr):
        raise InternalMismatch(f"f4 Killing forms disagree: {ad}, {form}, {tr}")
    return ad


def _check_orthogonal(a: Mat) -> None:
    if a.shape != (3, 3) or a.matmul(a.T) != Mat.identity(3):
        raise NotOrthogonal("matrix is not orthogonal")


def f4c_group_map(a: Mat) -> JordanOperator:
    """X -> A X tA for orthogonal A."""
    a = a if isinstance(a, Mat) else Mat(a)
    _check_orthogonal(a)
    at = a.T
    return JordanOperator.from_function(lambda x: JordanElem.from_matrix(a.matmul(x.to_mat()).matmul(at)))


def cayley(s: Mat) -> Mat:
    """(E - S)(E + S)^-1, orthogonal when S is skew and E + S invertible."""
    one = Mat.identity(s.nrows)
    return (one - s).matmul(inverse(one + s))


def _check_skew(d: Mat) -> None:
    if d.shape != (3, 3) or d.T != -d:
        raise NotSkew("matrix is not skew-symmetric")


def f4cstar_operator(d: Mat) -> JordanOperator:
    """X -> D X + X tD."""
    d = d if isinstance(d, Mat) else Mat(d)
    _check_skew(d)
    dt = d.T
    return JordanOperator.from_function(lambda x: JordanElem.from_matrix(d.matmul(x.to_mat()) + x.to_mat().matmul(dt)))


def f4cstar(d: Mat) -> F4Elem:
    return f4_from_operator(f4cstar_operator(d))


def skew_matrix(d1=0, d2=0, d3=0) -> Mat:
    """[[0, d3, d2], [-d3, 0, d1], [-d2, -d1, 0]]."""
    d1, d2, d3 = as_vector((d1, d2, d3))
    return Mat([[ZERO, d3, d2], [-d3, ZERO, d1], [-d2, -d1, ZERO]])


# ------------------------------------------------------------------- e6


def t_coords(t: JordanElem) -> tuple:
    """Coordinates of traceless T in (E1-E2, E2-E3, F1, F2, F3)."""
    if t.tr():
        raise NotTraceless("T-part must be traceless")
    xi1, _, xi3, x1, x2, x3 = t.c
    return (xi1, -xi3, x1, x2, x3)


def t_from_coords(u: Sequence) -> JordanElem:
    u1, u2, u3, u4, u5 = as_vector(u)
    return JordanElem((u1, u2 - u1, -u2, u3, u4, u5))


class E6Elem:
    """delta + T~ with delta in f4 and T traceless."""

    __slots__ = ("delta", "t0", "_op")

    def __init__(self, delta: F4Elem | None = None, t0: JordanElem | None = None):
        self.delta = delta if delta is not None else F4Elem()
        self.t0 = t0 if t0 is not None else JordanElem.zero()
        if self.t0.tr():
            raise NotTraceless("T-part must be traceless")
        self._op = None

    @classmethod
    def from_coords(cls, c: Sequence) -> "E6Elem":
        c = as_vector(c)
        return cls(F4Elem(*c[:3]), t_from_coords(c[3:]))

    def coords(self) -> tuple:
        return self.delta.c + t_coords(self.t0)

    def operator(self) -> JordanOperator:
        if self._op is None:
            self._op = self.delta.operator() + t_tilde(self.t0)
        return self._op

    def __add__(self, o):
        return E6Elem(self.delta + o.delta, self.t0 + o.t0)

    def __sub__(self, o):
        return E6Elem(self.delta - o.delta, self.t0 - o.t0)

    def __neg__(self):
        return E6Elem(-self.delta, -self.t0)

    def __mul__(self, k):
        return E6Elem(self.delta * k, self.t0 * k)

    __rmul__ = __mul__

    def __eq__(self, o):
        return isinstance(o, E6Elem) and self.coords() == o.coords()

    def __hash__(self):
        return hash(self.coords())

    def __bool__(self):
        return any(self.coords())

    def __repr__(self):
        return f"E6Elem(delta={self.delta!r}, T={self.t0!r})"

    def transpose(self) -> "E6Elem":
        """tphi = -delta + T~."""
        return E6Elem(-self.delta, self.t0)


def e6_from_parts(delta: F4Elem, t0: JordanElem) -> E6Elem:
    return E6Elem(delta, t0)


def e6_decompose(op: JordanOperator) -> E6Elem:
    """Split phi = delta + T~ with T = phi E."""
    t = op(E)
    if t.tr():
        raise NotInE6("phi E is not traceless")
    delta = op - t_tilde(t)
    if delta(E):
        raise NotInE6("delta does not annihilate E")
    return E6Elem(f4_from_operator(delta), t)


def e6_bracket(a: E6Elem, b: E6Elem) -> E6Elem:
    return e6_decompose(a.operator().bracket(b.operator()))


def e6_inner(a: E6Elem, b: E6Elem) -> GaussRat:
    """(phi, phi')_6 = (delta, delta')_4 + (T, T')."""
    return f4_inner(a.delta, b.delta) + inner(a.t0, b.t0)


@lru_cache(maxsize=None)
def e6_algebra() -> LieAlgebraData:
    return LieAlgebraData.from_bracket(
        E6_NAMES, lambda u, v: e6_bracket(E6Elem.from_coords(u), E6Elem.from_coords(v)).coords()
    )


def e6_killing_all(a: E6Elem, b: E6Elem) -> tuple:
    """(ad-trace, (3/2)(,)_6, (6/5) tr)."""
    ad = e6_algebra().killing(a.coords(), b.coords())
    form = e6_inner(a, b) * GaussRat("3/2")
    tr = (a.operator() * b.operator()).trace() * GaussRat("6/5")
    return ad, form, tr


def e6_killing(a: E6Elem, b: E6Elem) -> GaussRat:
    ad, form, tr = e6_killing_all(a, b)
    if not (ad == form == tr):
        raise InternalMismatch(f"e6 Killing forms disagree: {ad}, {form}, {tr}")
    return ad


def f6cstar_operator(s: Mat) -> JordanOperator:
    s = s if isinstance(s, Mat) else Mat(s)
    if s.shape != (3, 3) or s.trace():
        raise NotTraceless("S must be a traceless 3x3 matrix")
    st = s.T
    return JordanOperator.from_function(lambda x: JordanElem.from_matrix(s.matmul(x.to_mat()) + x.to_mat().matmul(st)))


def f6cstar(s: Mat) -> E6Elem:
    """S -> (X -> S X + X tS), as an e6 element."""
    return e6_decompose(f6cstar_operator(s))


def lambda_e6(phi: E6Elem) -> E6Elem:
    """lambda_*(phi) = -tphi, computed through the Gram transpose."""
    return e6_decompose(-transpose_op(phi.operator()))


def tau_e6(phi: E6Elem) -> E6Elem:
    """tau phi tau: conjugate every coordinate of the operator."""
    return e6_decompose(JordanOperator(phi.operator().m.conj()))


def tau_lambda_e6(phi: E6Elem) -> E6Elem:
    return tau_e6(lambda_e6(phi))


def tau_fixed_check(phi: E6Elem) -> tuple:
    """(tau-fixed, tau-lambda-fixed)."""
    return tau_e6(phi) == phi, tau_lambda_e6(phi) == phi


def sl3_basis() -> list:
    """Rational basis of traceless 3x3 matrices: E_jk (j != k), E11-E22, E22-E33."""
    out = []
    for j in range(3):
        for k in range(3):
            if j != k:
                m = [[ZERO] * 3 for _ in range(3)]
                m[j][k] = ONE
                out.append(Mat(m))
    out.append(Mat.diag([1, -1, 0]))
    out.append(Mat.diag([0, 1, -1]))
    return out


def su3_basis() -> list:
    """Rational basis of su(3): real skew plus i times real symmetric traceless."""
    i = GaussRat(0, 1)
    out = [skew_matrix(1, 0, 0), skew_matrix(0, 1, 0), skew_matrix(0, 0, 1)]
    for j, k in ((1, 2), (0, 2), (0, 1)):
        m = [[ZERO] * 3 for _ in range(3)]
        m[j][k] = m[k][j] = i
        out.append(Mat(m))
    out.append(Mat.diag([i, -i, ZERO]))
    out.append(Mat.diag([ZERO, i, -i]))
    return out


def e6_basis() -> list:
    return [E6Elem.from_coords([ONE if k == j else ZERO for k in range(8)]) for j in range(8)]


def f4_basis() -> list:
    return [F4Elem(*(ONE if k == j else ZERO for k in range(3))) for j in range(3)]


# Cartan data


def h4_element(a) -> F4Elem:
    """A~1(-i a)."""
    return F4Elem(GaussRat(0, -1) * GaussRat.of(a), 0, 0)


def h6_element(tau1, tau2, tau3=None) -> E6Elem:
    tau1, tau2 = GaussRat.of(tau1), GaussRat.of(tau2)
    tau3 = -tau1 - tau2 if tau3 is None else GaussRat.of(tau3)
    if tau1 + tau2 + tau3:
        raise NotTraceless("tau1 + tau2 + tau3 must vanish")
    return E6Elem(F4Elem(), JordanElem((tau1, tau2, tau3, 0, 0, 0)))


def conj_e6_coords(phi: E6Elem) -> E6Elem:
    return E6Elem.from_coords([x.conj() for x in phi.coords()])
