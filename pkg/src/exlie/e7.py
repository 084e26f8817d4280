"""The Freudenthal space P = J + J + C + C and the 21-dimensional e7.

A point is (X, Y, xi, eta).  An e7 element Phi(phi, A, B, nu) acts on P by

    X'   = phi X - nu/3 X + 2 B x Y + eta A
    Y'   = 2 A x X - tphi Y + nu/3 Y + xi B
    xi'  = (A, Y) + nu xi
    eta' = (B, X) - nu eta
"""

from __future__ import annotations

from functools import lru_cache
from typing import Sequence

from .errors import InternalMismatch, NotInE6, NotInE7, NotNilpotent
from .f4e6 import E6_NAMES, E6Elem, e6_decompose, e6_inner
from .jordan import BASIS_NAMES, JordanElem, JordanOperator, cross, inner, transpose_op, vee
from .lie import LieAlgebraData
from .linalg import ONE, ZERO, GaussRat, Mat, as_vector

THIRD = GaussRat("1/3")
FREUD_NAMES = (
    tuple(n + "." for n in BASIS_NAMES)
    + tuple(n + "_" for n in BASIS_NAMES)
    + ("1.", "1_")
)
E7_NAMES = (
    tuple("Phi(" + n + ")" for n in E6_NAMES)
    + tuple("Phi(0," + n + ",0,0)" for n in BASIS_NAMES)
    + tuple("Phi(0,0," + n + ",0)" for n in BASIS_NAMES)
    + ("Phi(0,0,0,1)",)
)


class FreudElem:
    __slots__ = ("x", "y", "xi", "eta")

    def __init__(self, x: JordanElem | None = None, y: JordanElem | None = None, xi=0, eta=0):
        self.x = x if x is not None else JordanElem.zero()
        self.y = y if y is not None else JordanElem.zero()
        self.xi = GaussRat.of(xi)
        self.eta = GaussRat.of(eta)

    @classmethod
    def from_coords(cls, c: Sequence) -> "FreudElem":
        c = as_vector(c)
        if len(c) != 14:
            raise ValueError("a Freudenthal element has 14 coordinates")
        return cls(JordanElem._wrap(c[:6]), JordanElem._wrap(c[6:12]), c[12], c[13])

    @classmethod
    def zero(cls) -> "FreudElem":
        return cls()

    def coords(self) -> tuple:
        return self.x.c + self.y.c + (self.xi, self.eta)

    def __add__(self, o):
        return FreudElem(self.x + o.x, self.y + o.y, self.xi + o.xi, self.eta + o.eta)

    def __sub__(self, o):
        return FreudElem(self.x - o.x, self.y - o.y, self.xi - o.xi, self.eta - o.eta)

    def __neg__(self):
        return FreudElem(-self.x, -self.y, -self.xi, -self.eta)

    def __mul__(self, k):
        k = GaussRat.of(k)
        return FreudElem(self.x * k, self.y * k, self.xi * k, self.eta * k)

    __rmul__ = __mul__

    def __eq__(self, o):
        return isinstance(o, FreudElem) and self.coords() == o.coords()

    def __hash__(self):
        return hash(self.coords())

    def __bool__(self):
        return any(self.coords())

    def __repr__(self):
        return f"FreudElem({self.x!r}, {self.y!r}, {self.xi}, {self.eta})"

    def to_json(self) -> list:
        return [z.to_json() for z in self.coords()]

    @classmethod
    def from_json(cls, d) -> "FreudElem":
        return cls.from_coords([GaussRat.from_json(z) for z in d])


def freud_basis() -> list:
    return [FreudElem.from_coords([ONE if k == j else ZERO for k in range(14)]) for j in range(14)]


ONE_DOT = FreudElem(xi=1)  # 1.  = (0, 0, 1, 0)
ONE_LOW = FreudElem(eta=1)  # 1_  = (0, 0, 0, 1)


def skew_inner(p: FreudElem, q: FreudElem) -> GaussRat:
    """{P, Q} = (X, W) - (Y, Z) + xi omega - eta zeta."""
    return inner(p.x, q.y) - inner(p.y, q.x) + p.xi * q.eta - p.eta * q.xi


def sym_inner(p: FreudElem, q: FreudElem) -> GaussRat:
    """(P, Q) = (X, Z) + (Y, W) + xi zeta + eta omega."""
    return inner(p.x, q.x) + inner(p.y, q.y) + p.xi * q.xi + p.eta * q.eta


def lambda_map(p: FreudElem) -> FreudElem:
    return FreudElem(p.y, -p.x, p.eta, -p.xi)


def tau_p(p: FreudElem) -> FreudElem:
    return FreudElem.from_coords([z.conj() for z in p.coords()])


@lru_cache(maxsize=None)
def lambda_matrix() -> Mat:
    return Mat.from_columns([lambda_map(b).coords() for b in freud_basis()])


class E7Elem:
    """Phi(phi, A, B, nu)."""

    __slots__ = ("phi", "a", "b", "nu", "_op")

    def __init__(self, phi: E6Elem | None = None, a: JordanElem | None = None, b: JordanElem | None = None, nu=0):
        self.phi = phi if phi is not None else E6Elem()
        self.a = a if a is not None else JordanElem.zero()
        self.b = b if b is not None else JordanElem.zero()
        self.nu = GaussRat.of(nu)
        self._op = None

    @classmethod
    def from_coords(cls, c: Sequence) -> "E7Elem":
        c = as_vector(c)
        if len(c) != 21:
            raise ValueError("an e7 element has 21 coordinates")
        return cls(E6Elem.from_coords(c[:8]), JordanElem._wrap(c[8:14]), JordanElem._wrap(c[14:20]), c[20])

    def coords(self) -> tuple:
        return self.phi.coords() + self.a.c + self.b.c + (self.nu,)

    def act(self, p: FreudElem) -> FreudElem:
        return phi_action(self, p)

    def operator(self) -> Mat:
        if self._op is None:
            self._op = _operator_of(self)
        return self._op

    def __call__(self, p: FreudElem) -> FreudElem:
        return FreudElem.from_coords(self.operator().apply(p.coords()))

    def __add__(self, o):
        return E7Elem(self.phi + o.phi, self.a + o.a, self.b + o.b, self.nu + o.nu)

    def __sub__(self, o):
        return E7Elem(self.phi - o.phi, self.a - o.a, self.b - o.b, self.nu - o.nu)

    def __neg__(self):
        return E7Elem(-self.phi, -self.a, -self.b, -self.nu)

    def __mul__(self, k):
        k = GaussRat.of(k)
        return E7Elem(self.phi * k, self.a * k, self.b * k, self.nu * k)

    __rmul__ = __mul__

    def __eq__(self, o):
        return isinstance(o, E7Elem) and self.coords() == o.coords()

    def __hash__(self):
        return hash(self.coords())

    def __bool__(self):
        return any(self.coords())

    def __repr__(self):
        return f"E7Elem(phi={self.phi!r}, A={self.a!r}, B={self.b!r}, nu={self.nu})"

    def to_json(self) -> dict:
        return {
            "phi": [z.to_json() for z in self.phi.coords()],
            "a": self.a.to_json(),
            "b": self.b.to_json(),
            "nu": self.nu.to_json(),
        }

    @classmethod
    def from_json(cls, d: dict) -> "E7Elem":
        return cls(
            E6Elem.from_coords([GaussRat.from_json(z) for z in d["phi"]]),
            JordanElem.from_json(d["a"]),
            JordanElem.from_json(d["b"]),
            GaussRat.from_json(d["nu"]),
        )


def e7_basis() -> list:
    return [E7Elem.from_coords([ONE if k == j else ZERO for k in range(21)]) for j in range(21)]


def phi_action(f: E7Elem, p: FreudElem) -> FreudElem:
    """The four-component action formula, evaluated directly."""
    phi = f.phi.operator()
    tphi = transpose_op(phi)
    nu3 = f.nu * THIRD
    x = phi(p.x) - p.x * nu3 + cross(f.b, p.y) * 2 + f.a * p.eta
    y = cross(f.a, p.x) * 2 - tphi(p.y) + p.y * nu3 + f.b * p.xi
    xi = inner(f.a, p.y) + f.nu * p.xi
    eta = inner(f.b, p.x) - f.nu * p.eta
    return FreudElem(x, y, xi, eta)


def _operator_direct(f: E7Elem) -> Mat:
    return Mat.from_columns([phi_action(f, b).coords() for b in freud_basis()])


@lru_cache(maxsize=None)
def _basis_ops() -> tuple:
    out = []
    for j in range(21):
        m = _operator_direct(E7Elem.from_coords([ONE if k == j else ZERO for k in range(21)]))
        out.append([(r, c, x) for r, row in enumerate(m.rows) for c, x in enumerate(row) if x])
    return tuple(out)


def _operator_of(f: E7Elem) -> Mat:
    """Linear combination of the cached basis operators."""
    acc = [[ZERO] * 14 for _ in range(14)]
    for k, ops in zip(f.coords(), _basis_ops()):
        if k:
            for r, c, x in ops:
                acc[r][c] = acc[r][c] + k * x
    return Mat._wrap(tuple(tuple(r) for r in acc), 14)


def e7_decompose(m: Mat) -> E7Elem:
    """Read (phi, A, B, nu) off a 14x14 operator and certify the fit.

    Phi 1_ = (A, 0, 0, -nu) and Phi 1. = (0, B, nu, 0); phi is the X-block
    plus nu/3.
    """
    if m.shape != (14, 14):
        raise NotInE7("expected a 14x14 operator")
    low = m.column(13)
    dot = m.column(12)
    a = JordanElem._wrap(low[:6])
    nu = -low[13]
    b = JordanElem._wrap(dot[6:12])
    xblock = Mat._wrap(tuple(tuple(m.rows[i][j] for j in range(6)) for i in range(6)), 6)
    phi_op = JordanOperator(xblock + Mat.identity(6).scale(nu * THIRD))
    try:
        phi = e6_decompose(phi_op)
    except NotInE6 as exc:
        raise NotInE7(f"X-block is not in e6: {exc}") from None
    out = E7Elem(phi, a, b, nu)
    if out.operator() != m:
        raise NotInE7("operator is not of the form Phi(phi, A, B, nu)")
    return out


def e7_bracket(f: E7Elem, g: E7Elem) -> E7Elem:
    """Operator commutator, re-expressed in (phi, A, B, nu)."""
    return e7_decompose(f.operator().commutator(g.operator()))


def e7_bracket_formula(f: E7Elem, g: E7Elem) -> E7Elem:
    """Closed-form bracket of e7 in components (used as a cross-check)."""
    two3 = GaussRat("2/3")
    phi, a, b, nu = f.phi.operator(), f.a, f.b, f.nu
    phi2, a2, b2, nu2 = g.phi.operator(), g.a, g.b, g.nu
    p = phi.bracket(phi2) + vee(a, b2) * 2 - vee(a2, b) * 2
    ident = JordanOperator.identity()
    l1 = phi + ident * (nu * two3)
    l2 = phi2 + ident * (nu2 * two3)
    r1 = -transpose_op(phi) - ident * (nu * two3)
    r2 = -transpose_op(phi2) - ident * (nu2 * two3)
    return E7Elem(
        e6_decompose(p),
        l1(a2) - l2(a),
        r1(b2) - r2(b),
        inner(a, b2) - inner(b, a2),
    )


def p_cross_q(p: FreudElem, q: FreudElem) -> E7Elem:
    """Freudenthal cross P x Q."""
    X, Y, xi, eta = p.x, p.y, p.xi, p.eta
    Z, W, zeta, omega = q.x, q.y, q.xi, q.eta
    phi = e6_decompose((vee(X, W) + vee(Z, Y)) * GaussRat("-1/2"))
    a = (cross(Y, W) * 2 - Z * xi - X * zeta) * GaussRat("-1/4")
    b = (cross(X, Z) * 2 - W * eta - Y * omega) * GaussRat("1/4")
    nu = (inner(X, W) + inner(Z, Y) - (xi * omega + zeta * eta) * 3) * GaussRat("1/8")
    return E7Elem(phi, a, b, nu)


def e7_inner(f: E7Elem, g: E7Elem) -> GaussRat:
    """(Phi1, Phi2)_7 = -2(phi1,phi2)_6 - 4(A1,B2) - 4(A2,B1) - 8/3 nu1 nu2."""
    return (
        e6_inner(f.phi, g.phi) * -2
        - inner(f.a, g.b) * 4
        - inner(g.a, f.b) * 4
        - f.nu * g.nu * GaussRat("8/3")
    )


@lru_cache(maxsize=None)
def e7_algebra() -> LieAlgebraData:
    return LieAlgebraData.from_bracket(
        E7_NAMES, lambda u, v: e7_bracket(E7Elem.from_coords(u), E7Elem.from_coords(v)).coords()
    )


def e7_killing_all(f: E7Elem, g: E7Elem) -> tuple:
    """(ad-trace, -2(,)_7, (8/5) tr on P)."""
    ad = e7_algebra().killing(f.coords(), g.coords())
    form = e7_inner(f, g) * -2
    tr = f.operator().matmul(g.operator()).trace() * GaussRat("8/5")
    return ad, form, tr


def e7_killing(f: E7Elem, g: E7Elem) -> GaussRat:
    ad, form, tr = e7_killing_all(f, g)
    if not (ad == form == tr):
        raise InternalMismatch(f"e7 Killing forms disagree: {ad}, {form}, {tr}")
    return ad


def in_M(p: FreudElem) -> bool:
    """Membership in the cone: X v Y = 0, X x X = eta Y, Y x Y = xi X,
    (X, Y) = 3 xi eta and P != 0.  Cross-checked against P x P = 0."""
    if not p:
        return False
    x, y = p.x, p.y
    cond = (
        vee(x, y).is_zero()
        and cross(x, x) == y * p.eta
        and cross(y, y) == x * p.xi
        and inner(x, y) == p.xi * p.eta * 3
    )
    square = not p_cross_q(p, p)
    if cond != square:
        raise InternalMismatch("cone conditions disagree with P x P = 0")
    return cond


def exp_nilpotent(f) -> Mat:
    """exp of a nilpotent operator (E7Elem or square Mat) as a finite sum."""
    m = f.operator() if isinstance(f, E7Elem) else f
    n = m.nrows
    out = Mat.identity(n)
    term = Mat.identity(n)
    for k in range(1, n + 1):
        term = term.matmul(m).scale(GaussRat(1) / k)
        if term.is_zero():
            return out
        out = out + term
    if not term.matmul(m).is_zero():
        raise NotNilpotent("operator is not nilpotent")
    return out


def is_nilpotent(m: Mat) -> bool:
    p = m
    for _ in range(m.nrows):
        if p.is_zero():
            return True
        p = p.matmul(m)
    return p.is_zero()


def apply_op(m: Mat, p: FreudElem) -> FreudElem:
    return FreudElem.from_coords(m.apply(p.coords()))


# ---------------------------------------------------------------- real form


def tau_lambda_e7(f: E7Elem) -> E7Elem:
    """tau lambda Phi lambda^-1 tau, computed on the 14x14 operator."""
    lam = lambda_matrix()
    lam_inv = lam.scale(-1)  # lambda^2 = -1
    return e7_decompose(lam.matmul(f.operator()).matmul(lam_inv).conj())


def h7_element(tau1, tau2, nu) -> E7Elem:
    from .f4e6 import h6_element

    return E7Elem(h6_element(tau1, tau2), nu=nu)


def stabilizer_of_one_low() -> list:
    """Kernel of Phi -> Phi 1_ on e7 coordinates."""
    from .linalg import kernel

    cols = [b(ONE_LOW).coords() for b in e7_basis()]
    return kernel(Mat.from_columns(cols))
