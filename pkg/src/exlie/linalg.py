"""Exact scalars over Q(i) and dense exact linear algebra.

Rationals are gmpy2 ``mpq`` values, which are always reduced with a
positive denominator, so equality is structural.  ``GaussRat`` pairs two
of them.  ``Mat`` is a small immutable dense matrix of ``GaussRat``.
"""

from __future__ import annotations

import math
from fractions import Fraction
from itertools import product
from typing import Callable, Iterable, Sequence

from gmpy2 import mpq, mpz

from .errors import Inconsistent, NonSquare

Rat = type(mpq(0))
_Q0 = mpq(0)
_Q1 = mpq(1)


def rat(x) -> Rat:
    """Coerce int, str ("p/q"), Fraction or mpq to an mpq."""
    if isinstance(x, Rat):
        return x
    if isinstance(x, Fraction):
        return mpq(x.numerator, x.denominator)
    if isinstance(x, str):
        return mpq(x.strip())
    if isinstance(x, float):
        raise TypeError("floats are not exact; pass a string or Fraction")
    return mpq(x)


def rat_str(q: Rat) -> str:
    return f"{q.numerator}/{q.denominator}"


class GaussRat:
    """A Gaussian rational re + im*i."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = rat(re)
        self.im = rat(im)

    @staticmethod
    def _raw(re: Rat, im: Rat) -> "GaussRat":
        z = GaussRat.__new__(GaussRat)
        z.re = re
        z.im = im
        return z

    @classmethod
    def of(cls, x) -> "GaussRat":
        if isinstance(x, GaussRat):
            return x
        if isinstance(x, complex):
            raise TypeError("complex floats are not exact")
        return cls._raw(rat(x), _Q0)

    # arithmetic
    def __add__(self, o):
        if not isinstance(o, GaussRat):
            o = GaussRat.of(o)
        return GaussRat._raw(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, o):
        if not isinstance(o, GaussRat):
            o = GaussRat.of(o)
        return GaussRat._raw(self.re - o.re, self.im - o.im)

    def __rsub__(self, o):
        return GaussRat.of(o) - self

    def __neg__(self):
        return GaussRat._raw(-self.re, -self.im)

    def __pos__(self):
        return self

    def __mul__(self, o):
        if not isinstance(o, GaussRat):
            o = GaussRat.of(o)
        a, b, c, d = self.re, self.im, o.re, o.im
        if not b and not d:
            return GaussRat._raw(a * c, _Q0)
        return GaussRat._raw(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def __truediv__(self, o):
        if not isinstance(o, GaussRat):
            o = GaussRat.of(o)
        return self * o.inverse()

    def __rtruediv__(self, o):
        return GaussRat.of(o) * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        out = ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def inverse(self) -> "GaussRat":
        n = self.re * self.re + self.im * self.im
        if not n:
            raise ZeroDivisionError("division by zero in Q(i)")
        return GaussRat._raw(self.re / n, -self.im / n)

    def conj(self) -> "GaussRat":
        return GaussRat._raw(self.re, -self.im)

    def norm(self) -> Rat:
        return self.re * self.re + self.im * self.im

    def is_real(self) -> bool:
        return not self.im

    # comparisons
    def __eq__(self, o):
        if isinstance(o, GaussRat):
            return self.re == o.re and self.im == o.im
        if isinstance(o, (int, Rat, Fraction)):
            return not self.im and self.re == o
        return NotImplemented

    def __hash__(self):
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def sort_key(self):
        return (self.re, self.im)

    def __repr__(self):
        return f"GaussRat({self})"

    def __str__(self):
        if not self.im:
            return _qs(self.re)
        if not self.re:
            return _imag_str(self.im)
        sign = "+" if self.im > 0 else "-"
        return f"{_qs(self.re)}{sign}{_imag_str(abs(self.im))}"

    def to_json(self) -> dict:
        return {"re": rat_str(self.re), "im": rat_str(self.im)}

    @classmethod
    def from_json(cls, d) -> "GaussRat":
        if isinstance(d, dict):
            return cls(d.get("re", 0), d.get("im", 0))
        return cls(d)

    def to_complex(self) -> complex:
        return complex(float(self.re), float(self.im))


def _qs(q: Rat) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _imag_str(q: Rat) -> str:
    if q == 1:
        return "i"
    if q == -1:
        return "-i"
    return f"{_qs(q)}i"


ZERO = GaussRat(0)
ONE = GaussRat(1)
I = GaussRat(0, 1)


def gr(x) -> GaussRat:
    return GaussRat.of(x)


def as_vector(v: Iterable) -> tuple:
    return tuple(GaussRat.of(x) for x in v)


def vec_add(u, v):
    return tuple(a + b for a, b in zip(u, v))


def vec_sub(u, v):
    return tuple(a - b for a, b in zip(u, v))


def vec_scale(c, v):
    c = GaussRat.of(c)
    return tuple(c * a for a in v)


def vec_is_zero(v) -> bool:
    return not any(v)


def dot(u, v) -> GaussRat:
    s = ZERO
    for a, b in zip(u, v):
        if a and b:
            s = s + a * b
    return s


class Mat:
    """Immutable dense matrix over Q(i)."""

    __slots__ = ("rows", "nrows", "ncols")

    def __init__(self, rows: Sequence[Sequence], ncols: int | None = None):
        self.rows = tuple(tuple(GaussRat.of(x) for x in r) for r in rows)
        self.nrows = len(self.rows)
        self.ncols = len(self.rows[0]) if self.rows else (ncols or 0)
        for r in self.rows:
            if len(r) != self.ncols:
                raise ValueError("ragged matrix")

    @classmethod
    def _wrap(cls, rows: tuple, ncols: int) -> "Mat":
        m = cls.__new__(cls)
        m.rows = rows
        m.nrows = len(rows)
        m.ncols = ncols
        return m

    @classmethod
    def zeros(cls, n: int, m: int | None = None) -> "Mat":
        m = n if m is None else m
        return cls._wrap(tuple((ZERO,) * m for _ in range(n)), m)

    @classmethod
    def identity(cls, n: int) -> "Mat":
        return cls._wrap(tuple(tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n)), n)

    @classmethod
    def diag(cls, entries) -> "Mat":
        e = as_vector(entries)
        n = len(e)
        return cls._wrap(tuple(tuple(e[i] if i == j else ZERO for j in range(n)) for i in range(n)), n)

    @classmethod
    def from_columns(cls, cols: Sequence[Sequence]) -> "Mat":
        cols = [as_vector(c) for c in cols]
        if not cols:
            return cls._wrap((), 0)
        return cls._wrap(tuple(zip(*cols)), len(cols))

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def column(self, j: int) -> tuple:
        return tuple(r[j] for r in self.rows)

    def columns(self) -> list:
        return [self.column(j) for j in range(self.ncols)]

    @property
    def T(self) -> "Mat":
        return Mat._wrap(tuple(zip(*self.rows)) if self.rows else (), self.nrows)

    def conj(self) -> "Mat":
        return Mat._wrap(tuple(tuple(x.conj() for x in r) for r in self.rows), self.ncols)

    def __add__(self, o: "Mat") -> "Mat":
        return Mat._wrap(tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.rows, o.rows)), self.ncols)

    def __sub__(self, o: "Mat") -> "Mat":
        return Mat._wrap(tuple(tuple(a - b for a, b in zip(r, s)) for r, s in zip(self.rows, o.rows)), self.ncols)

    def __neg__(self) -> "Mat":
        return Mat._wrap(tuple(tuple(-a for a in r) for r in self.rows), self.ncols)

    def scale(self, c) -> "Mat":
        c = GaussRat.of(c)
        return Mat._wrap(tuple(tuple(c * a for a in r) for r in self.rows), self.ncols)

    def __mul__(self, o):
        if isinstance(o, Mat):
            return self.matmul(o)
        if isinstance(o, (tuple, list)):
            return self.apply(o)
        return self.scale(o)

    def __rmul__(self, c):
        return self.scale(c)

    def __matmul__(self, o: "Mat") -> "Mat":
        return self.matmul(o)

    def matmul(self, o: "Mat") -> "Mat":
        if self.ncols != o.nrows:
            raise ValueError("shape mismatch")
        orows = o.rows
        m = o.ncols
        out = []
        for r in self.rows:
            acc = [ZERO] * m
            for k, a in enumerate(r):
                if not a:
                    continue
                for j, b in enumerate(orows[k]):
                    if b:
                        acc[j] = acc[j] + a * b
            out.append(tuple(acc))
        return Mat._wrap(tuple(out), m)

    def apply(self, v) -> tuple:
        return tuple(dot(r, v) for r in self.rows)

    def __eq__(self, o):
        if not isinstance(o, Mat):
            return NotImplemented
        return self.shape == o.shape and self.rows == o.rows

    def __hash__(self):
        return hash(self.rows)

    def is_zero(self) -> bool:
        return not any(any(r) for r in self.rows)

    def trace(self) -> GaussRat:
        if self.nrows != self.ncols:
            raise NonSquare("trace of a non-square matrix")
        s = ZERO
        for i in range(self.nrows):
            s = s + self.rows[i][i]
        return s

    def is_real(self) -> bool:
        return all(x.is_real() for r in self.rows for x in r)

    def commutator(self, o: "Mat") -> "Mat":
        return self.matmul(o) - o.matmul(self)

    def flat(self) -> tuple:
        return tuple(x for r in self.rows for x in r)

    def __repr__(self):
        return "Mat([" + ", ".join("[" + ", ".join(str(x) for x in r) + "]" for r in self.rows) + "])"

    def to_complex(self):
        return [[x.to_complex() for x in r] for r in self.rows]


# ---------------------------------------------------------------- elimination


def _rref(rows: list, ncols: int):
    """Reduced row echelon form in place, pivoting only in the first ncols
    columns.  Returns the pivot column list."""
    pivots = []
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        if r >= nrows:
            break
        p = None
        for i in range(r, nrows):
            if rows[i][c]:
                p = i
                break
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        piv = rows[r]
        inv = piv[c].inverse()
        if inv != ONE:
            piv = [x * inv if x else x for x in piv]
            rows[r] = piv
        nz = [j for j in range(c, len(piv)) if piv[j]]
        for i in range(nrows):
            if i == r:
                continue
            f = rows[i][c]
            if f:
                row = rows[i]
                for j in nz:
                    row[j] = row[j] - f * piv[j]
        pivots.append(c)
        r += 1
    return pivots


def rref(m: Mat) -> tuple[Mat, list]:
    rows = [list(r) for r in m.rows]
    piv = _rref(rows, m.ncols)
    return Mat._wrap(tuple(tuple(r) for r in rows), m.ncols), piv


def rank(m: Mat) -> int:
    rows = [list(r) for r in m.rows]
    return len(_rref(rows, m.ncols))


def kernel(m: Mat) -> list:
    """Basis of the null space.  Empty iff ``m`` is injective."""
    rows = [list(r) for r in m.rows]
    n = m.ncols
    pivots = _rref(rows, n)
    free = [j for j in range(n) if j not in set(pivots)]
    basis = []
    for f in free:
        v = [ZERO] * n
        v[f] = ONE
        for i, pc in enumerate(pivots):
            x = rows[i][f]
            if x:
                v[pc] = -x
        basis.append(tuple(v))
    return basis


def solve(m: Mat, rhs) -> tuple:
    """Solve m x = rhs exactly.  Free variables are set to zero."""
    rhs = as_vector(rhs)
    if len(rhs) != m.nrows:
        raise ValueError("shape mismatch")
    n = m.ncols
    rows = [list(r) + [b] for r, b in zip(m.rows, rhs)]
    pivots = _rref(rows, n + 1)
    if pivots and pivots[-1] == n:
        raise Inconsistent("linear system has no solution")
    x = [ZERO] * n
    for i, pc in enumerate(pivots):
        x[pc] = rows[i][n]
    return tuple(x)


solve_linear = solve


def inverse(m: Mat) -> Mat:
    if m.nrows != m.ncols:
        raise NonSquare("inverse of a non-square matrix")
    n = m.nrows
    rows = [list(r) + [ONE if i == j else ZERO for j in range(n)] for i, r in enumerate(m.rows)]
    pivots = _rref(rows, 2 * n)
    if pivots[:n] != list(range(n)):
        raise Inconsistent("matrix is singular")
    return Mat._wrap(tuple(tuple(r[n:]) for r in rows), n)


def det(m: Mat) -> GaussRat:
    if m.nrows != m.ncols:
        raise NonSquare("determinant of a non-square matrix")
    rows = [list(r) for r in m.rows]
    n = m.nrows
    d = ONE
    for c in range(n):
        p = next((i for i in range(c, n) if rows[i][c]), None)
        if p is None:
            return ZERO
        if p != c:
            rows[c], rows[p] = rows[p], rows[c]
            d = -d
        piv = rows[c][c]
        d = d * piv
        inv = piv.inverse()
        for i in range(c + 1, n):
            f = rows[i][c]
            if f:
                f = f * inv
                for j in range(c, n):
                    if rows[c][j]:
                        rows[i][j] = rows[i][j] - f * rows[c][j]
    return d


def span_coordinates(vectors: Sequence, target) -> tuple | None:
    """Coefficients of ``target`` in the span of ``vectors`` or None."""
    m = Mat.from_columns(vectors)
    try:
        return solve(m, target)
    except Inconsistent:
        return None


class Projector:
    """Precomputed exact coordinate extraction onto a fixed independent set.

    ``coords(v)`` returns c with sum c_k vectors[k] == v, or raises
    Inconsistent when v is outside the span.
    """

    def __init__(self, vectors: Sequence):
        vectors = [as_vector(v) for v in vectors]
        self.k = len(vectors)
        self.n = len(vectors[0])
        m = Mat.from_columns(vectors)
        rows = [list(r) + [ONE if i == j else ZERO for j in range(self.n)] for i, r in enumerate(m.rows)]
        piv = _rref(rows, self.k)
        if len(piv) != self.k:
            raise ValueError("vectors are linearly dependent")
        # rows[:k] give the left inverse, rows[k:] give the annihilator of the span
        self._left = [tuple(r[self.k:]) for r in rows[: self.k]]
        self._annih = [tuple(r[self.k:]) for r in rows[self.k:]]
        self._left_nz = [[(j, x) for j, x in enumerate(r) if x] for r in self._left]
        self._ann_nz = [[(j, x) for j, x in enumerate(r) if x] for r in self._annih]

    def coords(self, v, check: bool = True) -> tuple:
        if check:
            for row in self._ann_nz:
                s = ZERO
                for j, x in row:
                    if v[j]:
                        s = s + x * v[j]
                if s:
                    raise Inconsistent("vector is outside the span")
        out = []
        for row in self._left_nz:
            s = ZERO
            for j, x in row:
                if v[j]:
                    s = s + x * v[j]
            out.append(s)
        return tuple(out)


# ---------------------------------------------------------------- polynomials


class Poly:
    """Polynomial over Q(i), coefficients lowest degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        c = [GaussRat.of(x) for x in coeffs]
        while c and not c[-1]:
            c.pop()
        self.coeffs = tuple(c)

    @classmethod
    def from_roots(cls, roots) -> "Poly":
        p = cls([1])
        for r in roots:
            p = p * cls([-GaussRat.of(r), 1])
        return p

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def lead(self) -> GaussRat:
        return self.coeffs[-1] if self.coeffs else ZERO

    def __call__(self, x):
        x = GaussRat.of(x)
        s = ZERO
        for c in reversed(self.coeffs):
            s = s * x + c
        return s

    def eval_mat(self, m: Mat) -> Mat:
        n = m.nrows
        out = Mat.zeros(n)
        for c in reversed(self.coeffs):
            out = out.matmul(m) + Mat.identity(n).scale(c)
        return out

    def __add__(self, o: "Poly") -> "Poly":
        a, b = self.coeffs, o.coeffs
        n = max(len(a), len(b))
        return Poly([(a[i] if i < len(a) else ZERO) + (b[i] if i < len(b) else ZERO) for i in range(n)])

    def __neg__(self) -> "Poly":
        return Poly([-c for c in self.coeffs])

    def __sub__(self, o: "Poly") -> "Poly":
        return self + (-o)

    def __mul__(self, o) -> "Poly":
        if not isinstance(o, Poly):
            c = GaussRat.of(o)
            return Poly([c * x for x in self.coeffs])
        a, b = self.coeffs, o.coeffs
        if not a or not b:
            return Poly()
        out = [ZERO] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        out[i + j] = out[i + j] + x * y
        return Poly(out)

    __rmul__ = __mul__

    def __eq__(self, o):
        if not isinstance(o, Poly):
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def divmod(self, o: "Poly") -> tuple["Poly", "Poly"]:
        if o.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        r = list(self.coeffs)
        q = [ZERO] * max(len(r) - o.degree, 1)
        inv = o.lead().inverse()
        db = o.degree
        while len(r) - 1 >= db and r:
            c = r[-1] * inv
            k = len(r) - 1 - db
            q[k] = c
            if c:
                for i, y in enumerate(o.coeffs):
                    r[k + i] = r[k + i] - c * y
            r.pop()
            while r and not r[-1]:
                r.pop()
        return Poly(q), Poly(r)

    def derivative(self) -> "Poly":
        return Poly([c * k for k, c in enumerate(self.coeffs)][1:])

    def monic(self) -> "Poly":
        return self * self.lead().inverse()

    def deflate(self, root) -> tuple["Poly", GaussRat]:
        """Synthetic division by (x - root).  Returns quotient and remainder."""
        root = GaussRat.of(root)
        c = self.coeffs
        if not c:
            return Poly(), ZERO
        out = [ZERO] * (len(c) - 1)
        acc = ZERO
        for k in range(len(c) - 1, 0, -1):
            acc = acc * root + c[k]
            out[k - 1] = acc
        rem = acc * root + c[0]
        return Poly(out), rem

    def __repr__(self):
        return f"Poly({[str(c) for c in self.coeffs]})"


def poly_gcd(a: Poly, b: Poly) -> Poly:
    while not b.is_zero():
        a, b = b, a.divmod(b)[1]
    return a.monic() if not a.is_zero() else a


def char_poly(m: Mat) -> Poly:
    """Characteristic polynomial det(x I - m), monic.

    Reduces to upper Hessenberg form by exact similarity transforms and then
    runs the standard Hessenberg determinant recurrence, O(n^3) field ops.
    """
    if m.nrows != m.ncols:
        raise NonSquare("characteristic polynomial of a non-square matrix")
    n = m.nrows
    h = [list(r) for r in m.rows]
    for k in range(1, n - 1):
        p = next((i for i in range(k, n) if h[i][k - 1]), None)
        if p is None:
            continue
        if p != k:
            h[k], h[p] = h[p], h[k]
            for row in h:
                row[k], row[p] = row[p], row[k]
        inv = h[k][k - 1].inverse()
        for i in range(k + 1, n):
            f = h[i][k - 1]
            if not f:
                continue
            f = f * inv
            rk = h[k]
            ri = h[i]
            for j in range(k - 1, n):
                if rk[j]:
                    ri[j] = ri[j] - f * rk[j]
            for row in h:
                if row[i]:
                    row[k] = row[k] + f * row[i]
    # p_0 = 1, p_k = (x - h_kk) p_{k-1} - sum_{i<k} h_ik * prod(h_{j,j-1}) p_{i-1}
    polys = [Poly([1])]
    for k in range(n):
        pk = Poly([-h[k][k], 1]) * polys[k]
        t = ONE
        for i in range(k - 1, -1, -1):
            t = t * h[i + 1][i]
            if not t:
                break
            c = h[i][k]
            if c:
                pk = pk - polys[i] * (c * t)
        polys.append(pk)
    return polys[n]


# ------------------------------------------------------- Gaussian rational roots


def _integer_scale(p: Poly) -> list:
    """Gaussian-integer coefficient list (pairs of mpz) proportional to p."""
    den = 1
    for c in p.coeffs:
        den = math.lcm(den, int(c.re.denominator), int(c.im.denominator))
    return [(mpz(c.re * den), mpz(c.im * den)) for c in p.coeffs]


def _divisors(n: int, limit: int) -> list | None:
    n = abs(int(n))
    if n == 0:
        return [0]
    small = []
    large = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
        if d > 10**6:
            return None
        if len(small) + len(large) > limit:
            return None
    return small + large[::-1]


def _gaussian_with_norm(nrm: int) -> list:
    out = []
    a = 0
    while a * a <= nrm:
        b2 = nrm - a * a
        b = math.isqrt(b2)
        if b * b == b2:
            for sa, sb in product((1, -1), (1, -1)):
                out.append((sa * a, sb * b))
        a += 1
    return list(set(out))


def _gaussian_divisors(z: tuple, limit: int) -> list | None:
    """All Gaussian integers dividing z, up to units (limited enumeration)."""
    a, b = int(z[0]), int(z[1])
    nrm = a * a + b * b
    ds = _divisors(nrm, limit)
    if ds is None:
        return None
    out = []
    for d in ds:
        for x, y in _gaussian_with_norm(d):
            # (a+bi)/(x+yi) Gaussian-integral?
            re = a * x + b * y
            im = b * x - a * y
            if re % d == 0 and im % d == 0:
                out.append((x, y))
                if len(out) > limit:
                    return None
    return out


def _rationalize(z: complex, maxden: int) -> GaussRat:
    return GaussRat(Fraction(z.real).limit_denominator(maxden), Fraction(z.imag).limit_denominator(maxden))


class RootResult:
    """Roots found (with multiplicity) plus the unsplit remainder."""

    def __init__(self, roots: list, remainder: Poly):
        self.roots = roots
        self.remainder = remainder

    @property
    def splits(self) -> bool:
        return self.remainder.degree <= 0

    @property
    def remainder_flag(self) -> bool:
        return not self.splits

    def multiplicities(self) -> dict:
        out: dict = {}
        for r in self.roots:
            out[r] = out.get(r, 0) + 1
        return out

    def __iter__(self):
        return iter((self.roots, self.remainder_flag))


def gaussian_rational_roots(p: Poly, hints: Iterable | None = None, limit: int = 20000) -> RootResult:
    """Roots of p lying in Q(i), with multiplicity.

    Candidates come from optional numeric ``hints`` (rationalized, then
    certified exactly), floating point roots of small remainders, and
    finally the rational-root theorem over Z[i].  Every returned root is
    verified by exact synthetic division; the remainder is what is left.
    """
    if p.is_zero():
        raise ValueError("zero polynomial")
    rem = p.monic()
    roots: list = []

    def take(z: GaussRat) -> None:
        nonlocal rem
        while rem.degree > 0:
            q, r = rem.deflate(z)
            if r:
                return
            roots.append(z)
            rem = q

    take(ZERO)
    if hints is not None:
        for h in hints:
            if rem.degree <= 0:
                break
            z = h if isinstance(h, GaussRat) else None
            if z is None:
                hc = complex(h)
                for den in (1, 2, 3, 4, 6, 8, 9, 12, 16, 18, 24, 36, 48, 72, 144):
                    cand = _rationalize(hc, den)
                    if abs(cand.to_complex() - hc) < 1e-6:
                        take(cand)
                        break
                else:
                    take(_rationalize(hc, 10**6))
            else:
                take(z)
    if 0 < rem.degree <= 24:
        _float_pass(rem, take)
    if rem.degree > 0:
        _divisor_pass(rem, take, limit)
    return RootResult(roots, rem)


def _float_pass(rem: Poly, take) -> None:
    try:
        import numpy as np
    except ImportError:  # pragma: no cover
        return
    try:
        coeffs = [c.to_complex() for c in reversed(rem.coeffs)]
        zs = np.roots(coeffs)
    except (OverflowError, ValueError, np.linalg.LinAlgError):
        return
    for z in zs:
        for den in (1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 16, 18, 24, 36, 10**3, 10**6):
            cand = _rationalize(complex(z), den)
            take(cand)


def _divisor_pass(rem: Poly, take, limit: int) -> None:
    ints = _integer_scale(rem)
    a0 = ints[0]
    an = ints[-1]
    ps = _gaussian_divisors(a0, limit)
    qs = _gaussian_divisors(an, limit)
    if ps is None or qs is None:
        return
    units = [(1, 0), (-1, 0), (0, 1), (0, -1)]
    seen = set()
    for (pa, pb), (qa, qb) in product(ps, qs):
        for ua, ub in units:
            na, nb = pa * ua - pb * ub, pa * ub + pb * ua
            z = GaussRat(na, nb) / GaussRat(qa, qb)
            if z in seen:
                continue
            seen.add(z)
            take(z)


def real_fixed_dimension(f: Callable, n: int) -> int:
    """Real dimension of {v in C^n : f(v) = v} for a conjugate-linear f.

    f is viewed as a real-linear map on R^2n (real parts, then imaginary
    parts) and the kernel of f - 1 is counted over Q.
    """
    cols = []
    for k in range(n):
        for unit in (ONE, I):
            v = tuple(unit if j == k else ZERO for j in range(n))
            w = as_vector(f(v))
            cols.append(tuple(GaussRat.of(x.re) for x in w) + tuple(GaussRat.of(x.im) for x in w))
    order = [2 * k for k in range(n)] + [2 * k + 1 for k in range(n)]
    m = Mat.from_columns([cols[j] for j in order])
    shifted = m - Mat.identity(2 * n)
    return 2 * n - rank(shifted)
