"""Lie algebras given by exact structure constants."""

from __future__ import annotations

import json
import random
from typing import Callable, Iterable, Sequence

from .errors import ExLieError
from .linalg import ZERO, GaussRat, Mat, as_vector


class StructureError(ExLieError):
    """Structure constants fail antisymmetry or the Jacobi identity."""


def _acc(out: dict, k: int, c: GaussRat) -> None:
    v = out.get(k)
    v = c if v is None else v + c
    if v:
        out[k] = v
    else:
        out.pop(k, None)


class LieAlgebraData:
    """Named basis plus sparse constants: [b_i, b_j] = sum_k c[i,j][k] b_k."""

    def __init__(self, basis_names: Sequence[str], constants: dict, jacobi: str = "auto", seed: int = 0):
        self.basis_names = tuple(basis_names)
        self.dim = len(self.basis_names)
        self.c = {}
        for (i, j), row in constants.items():
            row = {k: GaussRat.of(v) for k, v in row.items() if v}
            if row:
                self.c[(i, j)] = row
        self._killing = None
        self._check_antisymmetry()
        if jacobi == "auto":
            jacobi = "full" if self.dim <= 21 else "sample"
        if jacobi == "full":
            bad = self.jacobi_violations()
        elif jacobi == "sample":
            bad = self.jacobi_violations(self.random_triples(500, seed))
        else:
            bad = []
        if bad:
            raise StructureError(f"Jacobi identity fails on {len(bad)} triples, e.g. {bad[0]}")

    @classmethod
    def from_bracket(cls, names: Sequence[str], bracket: Callable, **kw) -> "LieAlgebraData":
        """Tabulate constants from a bracket on coordinate vectors."""
        n = len(names)
        units = [tuple(GaussRat.of(1 if k == i else 0) for k in range(n)) for i in range(n)]
        consts = {}
        for i in range(n):
            for j in range(i + 1, n):
                v = as_vector(bracket(units[i], units[j]))
                row = {k: x for k, x in enumerate(v) if x}
                if row:
                    consts[(i, j)] = row
                    consts[(j, i)] = {k: -x for k, x in row.items()}
        return cls(names, consts, **kw)

    def _check_antisymmetry(self) -> None:
        for (i, j), row in self.c.items():
            if i == j:
                raise StructureError(f"[b{i}, b{i}] is nonzero")
            other = self.c.get((j, i), {})
            if set(other) != set(row) or any(other[k] != -v for k, v in row.items()):
                raise StructureError(f"constants are not antisymmetric at ({i}, {j})")

    def constant(self, i: int, j: int, k: int) -> GaussRat:
        return self.c.get((i, j), {}).get(k, ZERO)

    def bracket_basis(self, i: int, j: int) -> dict:
        return self.c.get((i, j), {})

    def bracket(self, u, v) -> tuple:
        out: dict = {}
        nu = [(i, a) for i, a in enumerate(u) if a]
        nv = [(j, b) for j, b in enumerate(v) if b]
        for i, a in nu:
            for j, b in nv:
                row = self.c.get((i, j))
                if row:
                    ab = a * b
                    for k, x in row.items():
                        _acc(out, k, ab * x)
        return tuple(out.get(k, ZERO) for k in range(self.dim))

    def _bracket_sparse(self, u: dict, j: int) -> dict:
        out: dict = {}
        for i, a in u.items():
            row = self.c.get((i, j))
            if row:
                for k, x in row.items():
                    _acc(out, k, a * x)
        return out

    def ad(self, v) -> Mat:
        """Matrix of ad(v) on coordinates (columns are images of the basis)."""
        n = self.dim
        cols = [[ZERO] * n for _ in range(n)]
        for i, a in enumerate(v):
            if not a:
                continue
            for j in range(n):
                row = self.c.get((i, j))
                if row:
                    col = cols[j]
                    for k, x in row.items():
                        col[k] = col[k] + a * x
        return Mat._wrap(tuple(tuple(cols[j][k] for j in range(n)) for k in range(n)), n)

    def killing_matrix(self) -> Mat:
        """B(b_a, b_b) = tr(ad b_a ad b_b), computed from the constants."""
        if self._killing is None:
            n = self.dim
            by_first = [[(c, row) for (a2, c), row in self.c.items() if a2 == a] for a in range(n)]
            rows = []
            for a in range(n):
                r = []
                for b in range(n):
                    s = ZERO
                    for c, row in by_first[a]:
                        for d, x in row.items():
                            y = self.c.get((b, d), {}).get(c)
                            if y:
                                s = s + x * y
                    r.append(s)
                rows.append(tuple(r))
            self._killing = Mat._wrap(tuple(rows), n)
        return self._killing

    def killing(self, u, v) -> GaussRat:
        k = self.killing_matrix()
        s = ZERO
        for i, a in enumerate(u):
            if a:
                for j, b in enumerate(v):
                    if b and k.rows[i][j]:
                        s = s + a * b * k.rows[i][j]
        return s

    def killing_adtrace(self, u, v) -> GaussRat:
        """Direct trace of ad(u) ad(v), independent of the cached matrix."""
        return self.ad(u).matmul(self.ad(v)).trace()

    def jacobi(self, a: int, b: int, c: int) -> dict:
        ab = self.c.get((a, b), {})
        bc = self.c.get((b, c), {})
        ca = self.c.get((c, a), {})
        out: dict = {}
        for u, w in ((ab, c), (bc, a), (ca, b)):
            for k, v in self._bracket_sparse(u, w).items():
                _acc(out, k, v)
        return out

    def jacobi_violations(self, triples: Iterable | None = None) -> list:
        if triples is None:
            n = self.dim
            triples = ((a, b, c) for a in range(n) for b in range(n) for c in range(n))
        return [t for t in triples if self.jacobi(*t)]

    def random_triples(self, count: int, seed: int = 0) -> list:
        rng = random.Random(seed)
        n = self.dim
        return [(rng.randrange(n), rng.randrange(n), rng.randrange(n)) for _ in range(count)]

    def nnz(self) -> int:
        return sum(len(r) for (i, j), r in self.c.items() if i < j)

    def __eq__(self, o):
        return isinstance(o, LieAlgebraData) and self.basis_names == o.basis_names and self.c == o.c

    # serialization
    def to_json(self) -> dict:
        consts = []
        for (i, j) in sorted(self.c):
            if i < j:
                for k in sorted(self.c[(i, j)]):
                    consts.append([i, j, k, self.c[(i, j)][k].to_json()])
        return {"basis": list(self.basis_names), "constants": consts}

    @classmethod
    def from_json(cls, d: dict, **kw) -> "LieAlgebraData":
        consts: dict = {}
        for i, j, k, v in d["constants"]:
            x = GaussRat.from_json(v)
            consts.setdefault((i, j), {})[k] = x
            if (j, i) == (i, j):
                continue
            consts.setdefault((j, i), {})[k] = -x
        return cls(d["basis"], consts, **kw)

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=1, ensure_ascii=False)
