import random

import pytest
import sympy
from hypothesis import settings, strategies as st

from exlie.linalg import GaussRat, Mat

settings.register_profile("exlie", max_examples=40, deadline=None)
settings.load_profile("exlie")

small = st.integers(-4, 4)
gauss = st.builds(GaussRat, small, small)
real_gauss = st.builds(GaussRat, small)


def rand_gauss(rng: random.Random, lo=-3, hi=3) -> GaussRat:
    return GaussRat(rng.randint(lo, hi), rng.randint(lo, hi))


def to_sympy(z: GaussRat):
    return sympy.Rational(int(z.re.numerator), int(z.re.denominator)) + sympy.I * sympy.Rational(
        int(z.im.numerator), int(z.im.denominator)
    )


def from_sympy(x) -> GaussRat:
    re, im = sympy.nsimplify(x).as_real_imag()
    return GaussRat(str(sympy.Rational(re)), str(sympy.Rational(im)))


def sympy_mat(m: Mat):
    return sympy.Matrix([[to_sympy(x) for x in r] for r in m.rows])


@pytest.fixture
def rng():
    return random.Random(1234)


def numeric_killing(mats):
    """Killing matrix of the span of numpy operators, via least squares on commutators."""
    import numpy as np

    flat = np.array([m.ravel() for m in mats]).T
    ads = []
    for a in mats:
        cols = [np.linalg.lstsq(flat, (a @ b - b @ a).ravel(), rcond=None)[0] for b in mats]
        ads.append(np.array(cols).T)
    return np.array([[np.trace(x @ y) for y in ads] for x in ads])


def np_mat(m: Mat):
    import numpy as np

    return np.array(m.to_complex(), dtype=complex)


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[num])
