"""The 52-dimensional algebra e8 = e7 + P + P + C + C + C.

An element is R = (Phi, P, Q, r, s, t).  The bracket is the six-component
formula; no matrix model is used, so the Jacobi identity is a real test.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Sequence

from .e7 import (
    FREUD_NAMES,
    E7_NAMES,
    E7Elem,
    FreudElem,
    e7_basis,
    e7_bracket,
    e7_inner,
    e7_killing,
    freud_basis,
    h7_element,
    p_cross_q,
    skew_inner,
)
from .errors import InternalMismatch
from .lie import LieAlgebraData
from .linalg import ONE, ZERO, GaussRat, as_vector

E8_NAMES = E7_NAMES + tuple(n + "^-" for n in FREUD_NAMES) + tuple(n + "_-" for n in FREUD_NAMES) + ("1~", "1^-", "1_-")


class E8Elem:
    __slots__ = ("phi", "p", "q", "r", "s", "t")

    def __init__(self, phi: E7Elem | None = None, p: FreudElem | None = None, q: FreudElem | None = None, r=0, s=0, t=0):
        self.phi = phi if phi is not None else E7Elem()
        self.p = p if p is not None else FreudElem()
        self.q = q if q is not None else FreudElem()
        self.r = GaussRat.of(r)
        self.s = GaussRat.of(s)
        self.t = GaussRat.of(t)

    @classmethod
    def from_coords(cls, c: Sequence) -> "E8Elem":
        c = as_vector(c)
        if len(c) != 52:
            raise ValueError("an e8 element has 52 coordinates")
        return cls(E7Elem.from_coords(c[:21]), FreudElem.from_coords(c[21:35]), FreudElem.from_coords(c[35:49]), *c[49:])

    def coords(self) -> tuple:
        return self.phi.coords() + self.p.coords() + self.q.coords() + (self.r, self.s, self.t)

    def __add__(self, o):
        return E8Elem(self.phi + o.phi, self.p + o.p, self.q + o.q, self.r + o.r, self.s + o.s, self.t + o.t)

    def __sub__(self, o):
        return E8Elem(self.phi - o.phi, self.p - o.p, self.q - o.q, self.r - o.r, self.s - o.s, self.t - o.t)

    def __neg__(self):
        return E8Elem(-self.phi, -self.p, -self.q, -self.r, -self.s, -self.t)

    def __mul__(self, k):
        k = GaussRat.of(k)
        return E8Elem(self.phi * k, self.p * k, self.q * k, self.r * k, self.s * k, self.t * k)

    __rmul__ = __mul__

    def __eq__(self, o):
        return isinstance(o, E8Elem) and self.coords() == o.coords()

    def __hash__(self):
        return hash(self.coords())

    def __bool__(self):
        return any(self.coords())

    def __repr__(self):
        return f"E8Elem({self.phi!r}, {self.p!r}, {self.q!r}, r={self.r}, s={self.s}, t={self.t})"

    def to_json(self) -> dict:
        return {
            "phi": self.phi.to_json(),
            "p": self.p.to_json(),
            "q": self.q.to_json(),
            "r": self.r.to_json(),
            "s": self.s.to_json(),
            "t": self.t.to_json(),
        }

    @classmethod
    def from_json(cls, d: dict) -> "E8Elem":
        return cls(
            E7Elem.from_json(d["phi"]),
            FreudElem.from_json(d["p"]),
            FreudElem.from_json(d["q"]),
            GaussRat.from_json(d["r"]),
            GaussRat.from_json(d["s"]),
            GaussRat.from_json(d["t"]),
        )


ONE_TILDE = E8Elem(r=1)
ONE_UP = E8Elem(s=1)  # 1^-
ONE_DOWN = E8Elem(t=1)  # 1_-


def e8_basis() -> list:
    return [E8Elem.from_coords([ONE if k == j else ZERO for k in range(52)]) for j in range(52)]


def _lin(pairs, zero):
    """sum of c * x over pairs, skipping zero coefficients and elements."""
    out = zero
    for c, x in pairs:
        if c and x:
            out = out + (x if c == 1 else x * c)
    return out


def e8_bracket(a: E8Elem, b: E8Elem) -> E8Elem:
    phi1, p1, q1, r1, s1, t1 = a.phi, a.p, a.q, a.r, a.s, a.t
    phi2, p2, q2, r2, s2, t2 = b.phi, b.p, b.q, b.r, b.s, b.t
    phi = E7Elem()
    if phi1 and phi2:
        phi = e7_bracket(phi1, phi2)
    if p1 and q2:
        phi = phi + p_cross_q(p1, q2)
    if p2 and q1:
        phi = phi - p_cross_q(p2, q1)
    zero = FreudElem()
    m1 = -ONE
    p = _lin(((ONE, phi1 and p2 and phi1(p2)), (m1, phi2 and p1 and phi2(p1)), (r1, p2), (-r2, p1), (s1, q2), (-s2, q1)), zero)
    q = _lin(((ONE, phi1 and q2 and phi1(q2)), (m1, phi2 and q1 and phi2(q1)), (-r1, q2), (r2, q1), (t1, p2), (-t2, p1)), zero)
    r = _si(p1, q2) * _M8 + _si(p2, q1) * _P8 + s1 * t2 - s2 * t1
    s = _si(p1, p2) * _P4 + (r1 * s2 - r2 * s1) * 2
    t = _si(q1, q2) * _M4 - (r1 * t2 - r2 * t1) * 2
    return E8Elem(phi, p, q, r, s, t)


_M8, _P8, _P4, _M4 = GaussRat("-1/8"), GaussRat("1/8"), GaussRat("1/4"), GaussRat("-1/4")


def _si(p: FreudElem, q: FreudElem) -> GaussRat:
    return skew_inner(p, q) if p and q else ZERO


def inner8(a: E8Elem, b: E8Elem) -> GaussRat:
    """(R1,R2)_8 = (Phi1,Phi2)_7 - {Q1,P2} + {P1,Q2} - 8 r1 r2 - 4 t1 s2 - 4 s1 t2."""
    return (
        e7_inner(a.phi, b.phi)
        - skew_inner(a.q, b.p)
        + skew_inner(a.p, b.q)
        - a.r * b.r * 8
        - a.t * b.s * 4
        - a.s * b.t * 4
    )


def killing8_form(a: E8Elem, b: E8Elem) -> GaussRat:
    """B8 = -(9/2)(,)_8."""
    return inner8(a, b) * GaussRat("-9/2")


@lru_cache(maxsize=None)
def e8_algebra() -> LieAlgebraData:
    return LieAlgebraData.from_bracket(
        E8_NAMES, lambda u, v: e8_bracket(E8Elem.from_coords(u), E8Elem.from_coords(v)).coords(), jacobi="none"
    )


def killing8_all(a: E8Elem, b: E8Elem) -> tuple:
    """(ad-trace on 52 dimensions, -(9/2) inner8)."""
    return e8_algebra().killing(a.coords(), b.coords()), killing8_form(a, b)


def killing8(a: E8Elem, b: E8Elem) -> GaussRat:
    ad, form = killing8_all(a, b)
    if ad != form:
        raise InternalMismatch(f"e8 Killing forms disagree: {ad}, {form}")
    return ad


# Weight of the Killing term in R x R.  With B8 = -(9/2)(,)_8 this is
# -(1/2)(R, R1)_8, the value that makes (1_- x 1_-) vanish; the 1/30 of the
# 248-dimensional setting leaves -(7/5) 1_- on the probe 1^-.
CROSS_COEFF = GaussRat("1/9")
LITERAL_COEFF = GaussRat("1/30")


def r_cross_r(r: E8Elem, probe: E8Elem, coeff: GaussRat = CROSS_COEFF) -> E8Elem:
    """(R x R) R1 = [R, [R, R1]] + coeff B8(R, R1) R."""
    return e8_bracket(r, e8_bracket(r, probe)) + r * (killing8_form(r, probe) * coeff)


def in_W(r: E8Elem, coeff: GaussRat = CROSS_COEFF) -> bool:
    """R x R = 0 on every basis probe and R != 0."""
    return bool(r) and all(not r_cross_r(r, b, coeff) for b in e8_basis())


def lemma67_check(rr: E8Elem) -> list:
    """The thirteen conditions characterizing R x R = 0, in order.

    Conditions (7)-(13) are quantified over basis probes Phi1, P1, Q1.
    Each is the matching component of (R x R)R1 for a probe of one type,
    so (10) pairs P with P1, and (11)-(13) carry the weight 4 that
    CROSS_COEFF produces.
    """
    phi, p, q, r, s, t = rr.phi, rr.p, rr.q, rr.r, rr.s, rr.t
    out = []
    out.append(not (phi * (s * 2) - p_cross_q(p, p)))
    out.append(not (phi * (t * 2) + p_cross_q(q, q)))
    out.append(not (phi * (r * 2) + p_cross_q(p, q)))
    out.append(not (phi(p) - p * (r * 3) - q * (s * 3)))
    out.append(not (phi(q) + q * (r * 3) - p * (t * 3)))
    out.append(not (skew_inner(p, q) - (s * t + r * r) * 16))
    fb = freud_basis()
    eb = e7_basis()
    out.append(all(not _cond7(rr, q1) for q1 in fb))
    out.append(all(not _cond8(rr, p1) for p1 in fb))
    out.append(all(not _cond9(rr, q1) for q1 in fb))
    out.append(all(not _cond10(rr, p1) for p1 in fb))
    out.append(all(not _cond11(rr, f1) for f1 in eb))
    out.append(all(not _cond12(rr, f1) for f1 in eb))
    out.append(all(not _cond13(rr, f1) for f1 in eb))
    return out


def _cond7(rr: E8Elem, q1: FreudElem) -> E7Elem:
    phi, p, q, r, s = rr.phi, rr.p, rr.q, rr.r, rr.s
    inner_ = p_cross_q(phi(p), q1) + p_cross_q(p, phi(q1)) * 2 - p_cross_q(p, q1) * r - p_cross_q(q, q1) * s
    return inner_ * 2 - phi * skew_inner(p, q1)


def _cond8(rr: E8Elem, p1: FreudElem) -> E7Elem:
    phi, p, q, r, t = rr.phi, rr.p, rr.q, rr.r, rr.t
    inner_ = p_cross_q(phi(q), p1) + p_cross_q(q, phi(p1)) * 2 + p_cross_q(q, p1) * r - p_cross_q(p, p1) * t
    return inner_ * 2 - phi * skew_inner(q, p1)


def _cond9(rr: E8Elem, q1: FreudElem) -> FreudElem:
    phi, p, q, r, s, t = rr.phi, rr.p, rr.q, rr.r, rr.s, rr.t
    body = p_cross_q(p, q1)(q) - q1 * (s * t) - q1 * (r * r) - phi(phi(q1)) + phi(q1) * (r * 2)
    return body * 8 + q * (skew_inner(p, q1) * 5) - p * (skew_inner(q, q1) * 2)


def _cond10(rr: E8Elem, p1: FreudElem) -> FreudElem:
    phi, p, q, r, s, t = rr.phi, rr.p, rr.q, rr.r, rr.s, rr.t
    body = p_cross_q(q, p1)(p) + p1 * (s * t) + p1 * (r * r) + phi(phi(p1)) + phi(p1) * (r * 2)
    return body * 8 + p * (skew_inner(q, p1) * 5) - q * (skew_inner(p, p1) * 2)


def _cond11(rr: E8Elem, f1: E7Elem) -> E7Elem:
    phi, p, q = rr.phi, rr.p, rr.q
    body = e7_bracket(phi, e7_bracket(phi, f1)) + p_cross_q(q, f1(p)) - p_cross_q(p, f1(q))
    return body * 4 + phi * e7_killing(phi, f1)


def _cond12(rr: E8Elem, f1: E7Elem) -> FreudElem:
    phi, p, q, r, s = rr.phi, rr.p, rr.q, rr.r, rr.s
    body = f1(phi(p)) - phi(f1(p)) * 2 - f1(p) * r - f1(q) * s
    return body * 4 + p * e7_killing(phi, f1)


def _cond13(rr: E8Elem, f1: E7Elem) -> FreudElem:
    phi, p, q, r, t = rr.phi, rr.p, rr.q, rr.r, rr.t
    body = f1(phi(q)) - phi(f1(q)) * 2 + f1(q) * r - f1(p) * t
    return body * 4 + q * e7_killing(phi, f1)


def h8_element(tau1, tau2, nu, r) -> E8Elem:
    return E8Elem(h7_element(tau1, tau2, nu), r=r)


def centralizer_of(x: E8Elem) -> list:
    """Kernel of ad(x) on e8 coordinates."""
    from .linalg import kernel

    return kernel(e8_algebra().ad(x.coords()))
