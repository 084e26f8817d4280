"""Registry of the four algebras with their Cartan data and the closed-form
root lists they are checked against."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction as F
from functools import lru_cache
from typing import Callable

from .linalg import GaussRat
from .roots import CartanDatum, RootSystem, decompose

H = F(1, 2)
T1, T2 = F(1, 3), F(2, 3)


def lin(**kw) -> dict:
    """A linear form in the Cartan parameters t1, t2, t3, nu, r, a."""
    return {k: F(v) for k, v in kw.items() if v}


def neg(form: dict) -> dict:
    return {k: -v for k, v in form.items()}


def evaluate(form: dict, point: dict) -> GaussRat:
    out = F(0)
    for k, v in form.items():
        out += v * F(point.get(k, 0))
    return GaussRat.of(out)


def show(form: dict) -> str:
    names = {"t1": "tau1", "t2": "tau2", "t3": "tau3", "nu": "nu", "r": "r", "a": "a"}
    parts = []
    for k in ("t1", "t2", "t3", "nu", "r", "a"):
        c = form.get(k)
        if not c:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if mag == 1:
            coef = ""
        else:
            coef = f"({mag})" if mag.denominator != 1 else f"{mag}"
        parts.append(f"{sign}{coef}{names[k]}")
    s = "".join(parts) or "0"
    return s[1:] if s.startswith("+") else s


def _pm(forms) -> list:
    out = []
    for f in forms:
        out += [f, neg(f)]
    return out


def _tau(i: int, c) -> dict:
    return {f"t{i}": F(c)}


def _add(*forms) -> dict:
    out: dict = {}
    for f in forms:
        for k, v in f.items():
            out[k] = out.get(k, F(0)) + v
    return {k: v for k, v in out.items() if v}


E6_POS = [
    lin(t2=H, t3=-H),
    lin(t3=H, t1=-H),
    lin(t1=H, t2=-H),
]
E7_EXTRA = [_add(_tau(i, 1), lin(nu=T2)) for i in (1, 2, 3)] + [_add(_tau(i, H), lin(nu=-T2)) for i in (1, 2, 3)]
E8_EXTRA = (
    [_add(_tau(i, 1), lin(nu=-T1, r=1)) for i in (1, 2, 3)]
    + [_add(_tau(i, -H), lin(nu=-T1, r=1)) for i in (1, 2, 3)]
    + [_add(_tau(i, H), lin(nu=T1, r=1)) for i in (1, 2, 3)]
    + [_add(_tau(i, -1), lin(nu=T1, r=1)) for i in (1, 2, 3)]
    + [lin(nu=1, r=1), lin(nu=-1, r=1), lin(r=2)]
)


@dataclass
class AlgebraInfo:
    name: str
    dim: int
    build: Callable
    cartan_basis: Callable  # -> list of coordinate tuples
    points: list  # parameter values of each Cartan generator
    generic: list
    roots: list  # closed-form root list
    simple: list  # the stated simple system
    expansions: list  # (form, coefficients over the stated simple system)
    dynkin: str
    diagram: str
    inner: dict  # (i, j) -> (alpha_i, alpha_j), 1-based
    coroots: list = None  # canonical elements of the simple roots, as parameter points

    def values(self, form: dict) -> tuple:
        return tuple(evaluate(form, p) for p in self.points)

    def point_to_coeffs(self, point: dict) -> tuple:
        """Cartan-generator coefficients of a parameter point (t3 is implied)."""
        keys = ["a"] if self.name == "f4r" else ["t1", "t2", "nu", "r"][: len(self.points)]
        return tuple(GaussRat.of(F(point.get(k, 0))) for k in keys)

    def generic_point(self) -> dict:
        out: dict = {}
        for c, p in zip(self.generic, self.points):
            for k, v in p.items():
                out[k] = out.get(k, F(0)) + F(c) * F(v)
        return out


def _f4_cartan():
    from .f4e6 import h4_element

    return [h4_element(1).c]


def _e6_cartan():
    from .f4e6 import h6_element

    return [h6_element(1, 0).coords(), h6_element(0, 1).coords()]


def _e7_cartan():
    from .e7 import h7_element

    return [h7_element(1, 0, 0).coords(), h7_element(0, 1, 0).coords(), h7_element(0, 0, 1).coords()]


def _e8_cartan():
    from .e8 import h8_element

    return [h8_element(*p).coords() for p in ((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1))]


def _f4_alg():
    from .f4e6 import f4_algebra

    return f4_algebra()


def _e6_alg():
    from .f4e6 import e6_algebra

    return e6_algebra()


def _e7_alg():
    from .e7 import e7_algebra

    return e7_algebra()


def _e8_alg():
    from .e8 import e8_algebra

    return e8_algebra()


_P6 = [{"t1": 1, "t2": 0, "t3": -1}, {"t1": 0, "t2": 1, "t3": -1}]

REGISTRY = {
    "f4r": AlgebraInfo(
        name="f4r",
        dim=3,
        build=_f4_alg,
        cartan_basis=_f4_cartan,
        points=[{"a": 1}],
        generic=[2],
        roots=_pm([lin(a=H)]),
        simple=[lin(a=H)],
        expansions=[],
        dynkin="A1",
        diagram="o",
        inner={},
        coroots=[{"a": 1}],
    ),
    "e6r": AlgebraInfo(
        name="e6r",
        dim=8,
        build=_e6_alg,
        cartan_basis=_e6_cartan,
        points=_P6,
        generic=[1, 2],
        roots=_pm(E6_POS),
        simple=[lin(t2=H, t3=-H), lin(t3=H, t1=-H)],
        expansions=[(lin(t1=-H, t2=H), (1, 1))],
        dynkin="A2",
        diagram="o-o",
        inner={(1, 1): F(1, 3), (1, 2): F(-1, 6)},
        coroots=[{"t1": 0, "t2": T1, "t3": -T1}, {"t1": -T1, "t2": 0, "t3": T1}],
    ),
    "e7r": AlgebraInfo(
        name="e7r",
        dim=21,
        build=_e7_alg,
        cartan_basis=_e7_cartan,
        points=[dict(p, nu=0) for p in _P6] + [{"nu": 1}],
        generic=[1, 2, 5],
        roots=_pm(E6_POS + E7_EXTRA),
        simple=[lin(t3=H, t1=-H), lin(t3=-H, nu=T2), lin(t2=-1, nu=-T2)],
        expansions=[
            (lin(t2=-H, t3=H), (1, 1, 1)),
            (lin(t1=H, t2=-H), (0, 1, 1)),
            (lin(t1=1, nu=T2), (0, 2, 1)),
            (lin(t3=1, nu=T2), (2, 2, 1)),
            (lin(t1=-H, nu=T2), (1, 1, 0)),
            (lin(t2=-H, nu=T2), (1, 2, 1)),
        ],
        dynkin="C3",
        diagram="o-o<=o",
        inner={
            (1, 1): F(1, 8),
            (1, 2): F(-1, 16),
            (1, 3): F(0),
            (2, 2): F(1, 8),
            (2, 3): F(-1, 8),
            (3, 3): F(1, 4),
        },
        coroots=[
            {"t1": F(-1, 8), "t2": 0, "t3": F(1, 8), "nu": 0},
            {"t1": F(1, 24), "t2": F(1, 24), "t3": F(-2, 24), "nu": F(3, 24)},
            {"t1": F(2, 24), "t2": F(-4, 24), "t3": F(2, 24), "nu": F(-3, 24)},
        ],
    ),
    "e8r": AlgebraInfo(
        name="e8r",
        dim=52,
        build=_e8_alg,
        cartan_basis=_e8_cartan,
        points=[dict(p, nu=0, r=0) for p in _P6] + [{"nu": 1, "r": 0}, {"r": 1}],
        generic=[1, 5, 2, 17],
        roots=_pm(E6_POS + E7_EXTRA + E8_EXTRA),
        simple=[lin(t1=-1, nu=T1, r=1), lin(r=-2), lin(t2=-H, nu=-T1, r=1), lin(t3=-H, nu=T2)],
        expansions=[
            (lin(t2=-H, t3=H), (1, 2, 3, 1)),
            (lin(t3=H, t1=-H), (1, 1, 1, 0)),
            (lin(t1=H, t2=-H), (0, 1, 2, 1)),
            (lin(t1=1, nu=T2), (0, 1, 2, 2)),
            (lin(t2=-1, nu=-T2), (0, 1, 2, 0)),
            (lin(t3=1, nu=T2), (2, 3, 4, 2)),
            (lin(t1=-H, nu=T2), (1, 1, 1, 1)),
            (lin(t2=-H, nu=T2), (1, 2, 3, 2)),
            (lin(t1=-1, nu=T1, r=-1), (1, 1, 0, 0)),
            (lin(t2=-1, nu=T1, r=-1), (1, 3, 4, 2)),
            (lin(t3=1, nu=-T1, r=1), (1, 1, 2, 0)),
            (lin(t1=H, nu=T1, r=-1), (0, 1, 1, 1)),
            (lin(t3=H, nu=T1, r=-1), (1, 2, 2, 1)),
            (lin(t1=H, nu=T1, r=1), (0, 0, 1, 1)),
            (lin(t2=-H, nu=-T1, r=-1), (0, 1, 1, 0)),
            (lin(t3=H, nu=T1, r=1), (1, 1, 2, 1)),
            (lin(t2=-1, nu=T1, r=1), (1, 2, 4, 2)),
            (lin(t3=1, nu=-T1, r=-1), (1, 2, 2, 0)),
            (lin(nu=1, r=1), (1, 1, 2, 2)),
            (lin(nu=1, r=-1), (1, 2, 2, 2)),
        ],
        dynkin="F4",
        diagram="o-o=>o-o",
        inner={
            (1, 1): F(1, 9),
            (1, 2): F(-1, 18),
            (1, 3): F(0),
            (1, 4): F(0),
            (2, 2): F(1, 9),
            (2, 3): F(-1, 18),
            (2, 4): F(0),
            (3, 3): F(1, 18),
            (3, 4): F(-1, 36),
            (4, 4): F(1, 18),
        },
        coroots=[
            {"t1": F(-4, 54), "t2": F(2, 54), "t3": F(2, 54), "nu": F(1, 36), "r": F(1, 36)},
            {"t1": 0, "t2": 0, "t3": 0, "nu": 0, "r": F(-2, 36)},
            {"t1": F(1, 54), "t2": F(-2, 54), "t3": F(1, 54), "nu": F(-1, 36), "r": F(1, 36)},
            {"t1": F(1, 54), "t2": F(1, 54), "t3": F(-2, 54), "nu": F(2, 36), "r": 0},
        ],
    ),
}

NAMES = tuple(REGISTRY)


def get(name: str) -> AlgebraInfo:
    try:
        return REGISTRY[name]
    except KeyError:
        raise KeyError(f"unknown algebra {name!r}; choose from {', '.join(NAMES)}") from None


def cartan_datum(name: str, generic=None) -> CartanDatum:
    info = get(name)
    return CartanDatum(info.cartan_basis(), info.generic if generic is None else generic)


@lru_cache(maxsize=None)
def root_system(name: str) -> RootSystem:
    info = get(name)
    return decompose(info.build(), cartan_datum(name))


def closed_form_root_values(name: str) -> list:
    info = get(name)
    return [info.values(f) for f in info.roots]
