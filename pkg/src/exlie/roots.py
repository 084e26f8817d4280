"""Exact root-space decomposition and Dynkin classification.

Roots are linear functionals on a Cartan subalgebra, stored as their
values on a fixed list of Cartan generators.  A generic Cartan element is
used only to split the algebra into eigenlines.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Sequence

import numpy as np

from .errors import (
    DegenerateCartanForm,
    NonGenericCartanElement,
    NonSplitSpectrum,
    NotCrystallographic,
    UnknownType,
    UnpairedRoot,
)
from .lie import LieAlgebraData
from .linalg import ZERO, GaussRat, Mat, as_vector, char_poly, gaussian_rational_roots, kernel, rank, solve


@dataclass
class CartanDatum:
    basis: list
    generic: list

    def __post_init__(self):
        self.basis = [as_vector(h) for h in self.basis]
        self.generic = [GaussRat.of(c) for c in self.generic]
        if len(self.basis) != len(self.generic):
            raise ValueError("one generic coefficient per Cartan generator")

    @property
    def rank(self) -> int:
        return len(self.basis)

    def element(self, coeffs=None) -> tuple:
        coeffs = self.generic if coeffs is None else [GaussRat.of(c) for c in coeffs]
        n = len(self.basis[0])
        out = [ZERO] * n
        for c, h in zip(coeffs, self.basis):
            if c:
                for k in range(n):
                    if h[k]:
                        out[k] = out[k] + c * h[k]
        return tuple(out)


@dataclass(frozen=True)
class Root:
    values: tuple  # alpha(H_j) per Cartan generator
    vector: tuple = field(compare=False, hash=False)

    def at(self, coeffs) -> GaussRat:
        """Value on sum_j coeffs[j] H_j."""
        return sum((GaussRat.of(c) * v for c, v in zip(coeffs, self.values)), ZERO)

    def key(self) -> tuple:
        return tuple(x.sort_key() for x in self.values)

    def __neg__(self) -> "Root":
        return Root(tuple(-x for x in self.values), self.vector)

    def to_json(self) -> dict:
        return {"values": [x.to_json() for x in self.values], "vector": [x.to_json() for x in self.vector]}


class RootSystem:
    def __init__(self, alg: LieAlgebraData, cartan: CartanDatum, roots: list):
        self.alg = alg
        self.cartan = cartan
        self.roots = roots
        self.gram = Mat([[alg.killing(a, b) for b in cartan.basis] for a in cartan.basis])
        if rank(self.gram) < cartan.rank:
            raise DegenerateCartanForm("Killing form is degenerate on the Cartan subalgebra")
        self._by_values = {r.values: r for r in roots}

    def __len__(self):
        return len(self.roots)

    def find(self, values) -> Root | None:
        return self._by_values.get(tuple(GaussRat.of(v) for v in values))

    def __contains__(self, values) -> bool:
        return self.find(values) is not None

    def to_json(self) -> dict:
        return {
            "basis": list(self.alg.basis_names),
            "rank": self.cartan.rank,
            "roots": [r.to_json() for r in self.roots],
        }


def _ad_column_scale(m: Mat, v: tuple) -> GaussRat | None:
    """The c with m v = c v, or None if v is not an eigenvector."""
    w = m.apply(v)
    k = next(i for i, x in enumerate(v) if x)
    c = w[k] / v[k]
    if any(a != c * b for a, b in zip(w, v)):
        return None
    return c


def decompose(alg: LieAlgebraData, cartan: CartanDatum) -> RootSystem:
    """Split alg into the Cartan span plus one-dimensional root spaces."""
    for a, b in combinations(cartan.basis, 2):
        if any(alg.bracket(a, b)):
            raise NonGenericCartanElement("Cartan generators do not commute")
    ads = [alg.ad(h) for h in cartan.basis]
    m = alg.ad(cartan.element())
    hints = np.linalg.eigvals(np.array(m.to_complex(), dtype=complex))
    res = gaussian_rational_roots(char_poly(m), hints=hints)
    if not res.splits:
        raise NonSplitSpectrum(f"characteristic polynomial leaves a factor of degree {res.remainder.degree}")
    mult = res.multiplicities()
    zero_mult = mult.pop(ZERO, 0)
    if zero_mult != cartan.rank or len(kernel(m)) != cartan.rank:
        raise NonGenericCartanElement("zero eigenspace is larger than the Cartan subalgebra")
    if rank(Mat.from_columns(cartan.basis)) != cartan.rank:
        raise NonGenericCartanElement("Cartan generators are dependent")
    n = alg.dim
    roots = []
    for lam in sorted(mult, key=lambda z: z.sort_key()):
        if mult[lam] != 1:
            raise NonGenericCartanElement(f"eigenvalue {lam} is repeated")
        shifted = Mat([[x - lam if i == j else x for j, x in enumerate(row)] for i, row in enumerate(m.rows)])
        ker = kernel(shifted)
        if len(ker) != 1:
            raise NonGenericCartanElement(f"eigenvalue {lam} is not semisimple")
        v = _normalize(ker[0])
        vals = []
        for ad_h in ads:
            c = _ad_column_scale(ad_h, v)
            if c is None:
                raise NonGenericCartanElement("root vector is not a joint eigenvector")
            vals.append(c)
        roots.append(Root(tuple(vals), v))
    if len(roots) + cartan.rank != n:
        raise NonGenericCartanElement("eigenspaces do not fill the algebra")
    return RootSystem(alg, cartan, roots)


def _normalize(v: tuple) -> tuple:
    k = next(i for i, x in enumerate(v) if x)
    inv = v[k].inverse()
    return tuple(x * inv for x in v)


# ------------------------------------------------------------- geometry


def coroot(rs: RootSystem, values) -> tuple:
    """Coefficients c of t = sum c_j H_j with B(t, H_j) = alpha(H_j)."""
    return solve(rs.gram, as_vector(values))


def coroot_element(rs: RootSystem, values) -> tuple:
    return rs.cartan.element(coroot(rs, values))


def root_inner(rs: RootSystem, a, b) -> GaussRat:
    """(alpha, beta) = B(t_alpha, t_beta) = alpha(t_beta)."""
    a = a.values if isinstance(a, Root) else as_vector(a)
    b = b.values if isinstance(b, Root) else as_vector(b)
    return sum((x * c for x, c in zip(a, coroot(rs, b))), ZERO)


def positive_split(rs: RootSystem) -> tuple:
    """Lexicographic order on (re, im) of the value vector."""
    pos, neg = [], []
    for r in rs.roots:
        if tuple(-x for x in r.values) not in rs:
            raise UnpairedRoot(f"{r.values} has no negative")
        (pos if r.key() > tuple(x.sort_key() for x in (-r).values) else neg).append(r)
    pos.sort(key=Root.key)
    neg.sort(key=Root.key)
    return pos, neg


def simple_roots(positive: Sequence[Root]) -> list:
    """Positive roots that are not a sum of two positive roots."""
    sums = set()
    for a, b in combinations(positive, 2):
        sums.add(tuple(x + y for x, y in zip(a.values, b.values)))
    return [r for r in positive if r.values not in sums]


def gram_matrix(rs: RootSystem, simple: Sequence) -> list:
    return [[root_inner(rs, a, b) for b in simple] for a in simple]


def cartan_matrix_from_gram(g: list) -> list:
    n = len(g)
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            x = g[i][j] * 2 / g[j][j]
            if not x.is_real() or x.re.denominator != 1:
                raise NotCrystallographic(f"Cartan entry ({i},{j}) = {x}")
            row.append(int(x.re))
        out.append(row)
    return out


def cartan_matrix(rs: RootSystem, simple: Sequence) -> list:
    """A_ij = 2(a_i, a_j)/(a_j, a_j)."""
    g = gram_matrix(rs, simple)
    check_positive_definite(g)
    return cartan_matrix_from_gram(g)


def check_positive_definite(g: list) -> None:
    """Leading principal minors of a real Gram matrix are all positive."""
    from .linalg import det

    for row in g:
        for x in row:
            if not GaussRat.of(x).is_real():
                raise NotCrystallographic("simple-root Gram matrix is not real")
    for k in range(1, len(g) + 1):
        d = det(Mat([row[:k] for row in g[:k]]))
        if not d.re > 0:
            raise NotCrystallographic("simple-root Gram matrix is not positive definite")


def simple_coefficients(rs: RootSystem, simple: Sequence, values) -> tuple:
    """Coordinates of a root in terms of the simple roots."""
    m = Mat.from_columns([s.values if isinstance(s, Root) else as_vector(s) for s in simple])
    return solve(m, as_vector(values))


# ------------------------------------------------------------- classification


def _std_simple(kind: str, n: int) -> list:
    F = Fraction

    def e(i, dim, c=1):
        v = [F(0)] * dim
        v[i] = F(c)
        return v

    def diff(i, j, dim):
        return [a - b for a, b in zip(e(i, dim), e(j, dim))]

    if kind == "A":
        return [diff(i, i + 1, n + 1) for i in range(n)]
    if kind == "B":
        return [diff(i, i + 1, n) for i in range(n - 1)] + [e(n - 1, n)]
    if kind == "C":
        return [diff(i, i + 1, n) for i in range(n - 1)] + [e(n - 1, n, 2)]
    if kind == "D":
        return [diff(i, i + 1, n) for i in range(n - 1)] + [[a + b for a, b in zip(e(n - 2, n), e(n - 1, n))]]
    if kind == "E":
        h = F(1, 2)
        e8 = [[h, -h, -h, -h, -h, -h, -h, h], [a + b for a, b in zip(e(0, 8), e(1, 8))]]
        e8 += [diff(i + 1, i, 8) for i in range(6)]
        return e8[:n]
    if kind == "F":
        h = F(1, 2)
        return [diff(1, 2, 4), diff(2, 3, 4), e(3, 4), [h, -h, -h, -h]]
    if kind == "G":
        return [[F(1), F(-1), F(0)], [F(-2), F(1), F(1)]]
    raise ValueError(kind)


def standard_cartan_matrix(kind: str, n: int) -> list:
    s = _std_simple(kind, n)
    ip = [[sum(x * y for x, y in zip(a, b)) for b in s] for a in s]
    return [[int(2 * ip[i][j] / ip[j][j]) for j in range(n)] for i in range(n)]


def _candidates(n: int) -> list:
    out = [("A", n)]
    if n >= 2:
        out.append(("B", n))
    if n >= 3:
        out.append(("C", n))
    if n >= 4:
        out.append(("D", n))
    if n in (6, 7, 8):
        out.append(("E", n))
    if n == 4:
        out.append(("F", 4))
    if n == 2:
        out.append(("G", 2))
    return out


def _match(cm: list, std: list) -> list | None:
    """A permutation p with cm[i][j] == std[p[i]][p[j]], by backtracking."""
    n = len(cm)
    perm: list = []
    used = [False] * n

    def go(i):
        if i == n:
            return True
        for k in range(n):
            if used[k] or cm[i][i] != std[k][k]:
                continue
            if all(cm[i][j] == std[k][perm[j]] and cm[j][i] == std[perm[j]][k] for j in range(i)):
                used[k] = True
                perm.append(k)
                if go(i + 1):
                    return True
                perm.pop()
                used[k] = False
        return False

    return perm if go(0) else None


def _components(cm: list) -> list:
    n = len(cm)
    seen, comps = set(), []
    for s in range(n):
        if s in seen:
            continue
        stack, comp = [s], []
        seen.add(s)
        while stack:
            i = stack.pop()
            comp.append(i)
            for j in range(n):
                if j not in seen and (cm[i][j] or cm[j][i]):
                    seen.add(j)
                    stack.append(j)
        comps.append(sorted(comp))
    return comps


@dataclass
class DynkinDiagram:
    nodes: int
    edges: dict  # (i, j) with i < j -> bond multiplicity
    arrows: dict  # (i, j) -> index of the longer node for multiple bonds
    label: str
    cartan: list

    def render(self) -> str:
        return render_dynkin(self.cartan)


def classify_dynkin(cm: list) -> DynkinDiagram:
    n = len(cm)
    for i in range(n):
        if cm[i][i] != 2:
            raise NotCrystallographic("diagonal Cartan entries must be 2")
        for j in range(n):
            if i != j and (cm[i][j] > 0 or (cm[i][j] == 0) != (cm[j][i] == 0)):
                raise NotCrystallographic(f"invalid off-diagonal pair at ({i},{j})")
    labels = []
    for comp in _components(cm):
        sub = [[cm[i][j] for j in comp] for i in comp]
        for kind, k in _candidates(len(comp)):
            if _match(sub, standard_cartan_matrix(kind, k)) is not None:
                labels.append(f"{kind}{k}")
                break
        else:
            raise UnknownType(f"no standard type matches component {comp}")
    edges, arrows = {}, {}
    for i in range(n):
        for j in range(i + 1, n):
            m = cm[i][j] * cm[j][i]
            if m:
                edges[(i, j)] = m
                if m > 1:
                    # |A_ij| = 1 means a_j is the longer root
                    arrows[(i, j)] = j if abs(cm[i][j]) == 1 else i
    labels.sort(key=lambda s: (s[0], int(s[1:])))
    return DynkinDiagram(n, edges, arrows, "+".join(labels), cm)


_BOND = {1: "-", 2: "=", 3: "#"}


def render_dynkin(cm: list) -> str:
    """ASCII chain such as o-o=>o-o; the arrow points at the shorter root.

    Branched diagrams fall back to an edge list.
    """
    n = len(cm)
    if n == 0:
        return ""
    nbrs = {i: [j for j in range(n) if j != i and cm[i][j]] for i in range(n)}
    parts = []
    for comp in _components(cm):
        if any(len(nbrs[i]) > 2 for i in comp):
            edges = [f"{i + 1}-{j + 1}" for i in comp for j in nbrs[i] if i < j]
            parts.append("branched: " + ", ".join(edges))
            continue
        ends = [i for i in comp if len(nbrs[i]) <= 1]
        cur, prev, out = min(ends), None, "o"
        while True:
            nxt = [j for j in nbrs[cur] if j != prev]
            if not nxt:
                break
            j = nxt[0]
            m = cm[cur][j] * cm[j][cur]
            bond = _BOND[m]
            if m > 1:
                # |A_ij| > 1 means the right node is the shorter one
                bond = bond + ">" if abs(cm[cur][j]) > 1 else "<" + bond
            out += bond + "o"
            prev, cur = cur, j
        parts.append(out)
    return "  ".join(parts)
