"""Registered checks, grouped into suites, with a small report type.

A check function returns None on success, or raises ``CheckFailed`` with a
witness describing the first counterexample.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Callable

from .errors import ExLieError
from .linalg import ONE, ZERO, GaussRat, Mat, rank, real_fixed_dimension

SUITES = ("f4", "e6", "e7", "e8", "maps", "roots")


class CheckFailed(Exception):
    pass


def expect(cond: bool, witness: str = "") -> None:
    if not cond:
        raise CheckFailed(witness or "condition is false")


def expect_eq(got, want, what: str = "") -> None:
    if got != want:
        raise CheckFailed(f"{what}: got {got}, expected {want}".lstrip(": "))


@dataclass
class Check:
    id: str
    suite: str
    claim: str
    fn: Callable
    deep_only: bool = False


@dataclass
class CheckResult:
    id: str
    claim: str
    passed: bool
    witness: str = ""
    seconds: float = 0.0

    def to_json(self) -> dict:
        return {
            "id": self.id,
            "claim": self.claim,
            "status": "pass" if self.passed else "fail",
            "witness": self.witness,
            "seconds": round(self.seconds, 3),
        }


@dataclass
class Report:
    suite: str
    results: list = field(default_factory=list)

    @property
    def passed(self) -> int:
        return sum(r.passed for r in self.results)

    @property
    def failed(self) -> int:
        return len(self.results) - self.passed

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "checks": [r.to_json() for r in self.results],
            "totals": {"pass": self.passed, "fail": self.failed, "total": len(self.results)},
        }

    def render(self) -> str:
        lines = []
        for r in self.results:
            tag = "PASS" if r.passed else "FAIL"
            line = f"{tag}  {r.id:<40} {r.claim}"
            if not r.passed:
                line += f"\n      witness: {r.witness}"
            lines.append(line)
        lines.append(f"{self.suite}: {self.passed} passed, {self.failed} failed")
        return "\n".join(lines)


REGISTRY: list = []


def check(suite: str, claim: str, deep_only: bool = False, id: str | None = None):
    def deco(fn):
        REGISTRY.append(Check(id or fn.__name__, suite, claim, fn, deep_only))
        return fn

    return deco


def checks_for(suite: str, deep: bool = False) -> list:
    if suite not in SUITES and suite != "all":
        raise ValueError(f"unknown suite {suite!r}")
    wanted = SUITES if suite == "all" else (suite,)
    return [c for s in wanted for c in REGISTRY if c.suite == s and (deep or not c.deep_only)]


def run_check(c: Check) -> CheckResult:
    t0 = time.perf_counter()
    try:
        c.fn()
        ok, witness = True, ""
    except CheckFailed as e:
        ok, witness = False, str(e)
    except ExLieError as e:
        ok, witness = False, f"{type(e).__name__}: {e}"
    return CheckResult(c.id, c.claim, ok, witness, time.perf_counter() - t0)


def run_suite(suite: str, deep: bool = False) -> Report:
    rep = Report(suite)
    for c in checks_for(suite, deep):
        rep.results.append(run_check(c))
    return rep


def _gr(x) -> GaussRat:
    return GaussRat.of(x)


def _rand_gauss(rng: random.Random, lo=-3, hi=3) -> GaussRat:
    return GaussRat(rng.randint(lo, hi), rng.randint(lo, hi))


# ================================================================== f4


@check("f4", "A~1(1), A~2(1), A~3(1) are independent: dim 3")
def f4_dimension():
    from .jordan import a_tilde

    expect_eq(rank(Mat([a_tilde(i).m.flat() for i in (1, 2, 3)])), 3, "rank")


@check("f4", "[A~i(a), A~i+1(b)] = -(1/2) A~i+2(ab), [A~i(a), A~i(b)] = 0")
def f4_bracket_rule():
    from .jordan import a_tilde

    a, b = GaussRat(2, 1), GaussRat(-3, 5)
    for i in (1, 2, 3):
        lhs = a_tilde(i, a).bracket(a_tilde(i % 3 + 1, b))
        expect(lhs == a_tilde((i + 1) % 3 + 1, a * b) * GaussRat("-1/2"), f"i = {i}")
        expect(a_tilde(i, a).bracket(a_tilde(i, b)).is_zero(), f"i = {i} with itself")


@check("f4", "B4 = ad-trace = (1/4)(,)4 = (1/5)tr on all 9 pairs; B4(A~1,A~1) = -1/2, tr = -5/2")
def killing_f4_constants():
    from .f4e6 import f4_basis, f4_killing, f4_killing_all

    for a in f4_basis():
        for b in f4_basis():
            f4_killing(a, b)
            ad, form, tr = f4_killing_all(a, b)
            expect(ad == form == tr, f"{a}, {b}")
    a1 = f4_basis()[0]
    expect_eq(f4_killing(a1, a1), _gr("-1/2"), "B4(A~1, A~1)")
    expect_eq(a1.operator().m.matmul(a1.operator().m).trace(), _gr("-5/2"), "tr")


@check("f4", "A~i(1) are derivations of the Jordan product")
def f4_jordan_derivation():
    from .jordan import a_tilde, is_derivation

    for i in (1, 2, 3):
        expect(is_derivation(a_tilde(i)), f"A~{i}(1)")


@check("f4", "X o (X x X) = det(X) E on 100 random X")
def jordan_det_identity():
    from .jordan import E, JordanElem, cross, det, jordan_mul

    rng = random.Random(11)
    for _ in range(100):
        x = JordanElem([_rand_gauss(rng) for _ in range(6)])
        expect(jordan_mul(x, cross(x, x)) == E * det(x), f"X = {x}")


# ================================================================== e6


@check("e6", "e6 basis operators are independent: dim 8")
def e6_dimension():
    from .f4e6 import e6_basis

    expect_eq(rank(Mat([b.operator().m.flat() for b in e6_basis()])), 8, "rank")


@check("e6", "Jacobi identity on all 512 basis triples")
def e6_jacobi_full():
    from .f4e6 import e6_algebra

    bad = e6_algebra().jacobi_violations()
    expect(not bad, f"{len(bad)} triples, e.g. {bad[:1]}")


@check("e6", "B6 = ad-trace = (3/2)(,)6 = (6/5)tr on all 64 pairs; B6(E~1-E~2) = 3, tr = 5/2")
def killing_e6_constants():
    from .f4e6 import E6Elem, e6_basis, e6_killing_all

    for a in e6_basis():
        for b in e6_basis():
            ad, form, tr = e6_killing_all(a, b)
            expect(ad == form == tr, f"{a}, {b}: {ad}, {form}, {tr}")
    h = E6Elem.from_coords([0, 0, 0, 1, 0, 0, 0, 0])
    expect_eq(e6_killing_all(h, h)[0], _gr(3), "B6")
    expect_eq(h.operator().m.matmul(h.operator().m).trace(), _gr("5/2"), "tr")


@check("e6", "[(E1-E2)~, A~1(1)] = -(1/2) F~1(1)")
def e6_bracket_example():
    from .f4e6 import E6Elem, e6_bracket

    h = E6Elem.from_coords([0, 0, 0, 1, 0, 0, 0, 0])
    a1 = E6Elem.from_coords([1, 0, 0, 0, 0, 0, 0, 0])
    want = E6Elem.from_coords([0, 0, 0, 0, 0, _gr("-1/2"), 0, 0])
    expect_eq(e6_bracket(h, a1), want)


@check("e6", "lambda* = -transpose is an involutive automorphism: -1 on T~, +1 on A~")
def e6_lambda_involution():
    from .f4e6 import e6_basis, e6_bracket, lambda_e6

    basis = e6_basis()
    for k, b in enumerate(basis):
        want = b if k < 3 else -b
        expect_eq(lambda_e6(b), want, f"basis {k}")
    for a, b in combinations(basis, 2):
        expect(lambda_e6(e6_bracket(a, b)) == e6_bracket(lambda_e6(a), lambda_e6(b)), f"{a}, {b}")


# ================================================================== e7


@check("e7", "e7 basis operators on P are independent: dim 21")
def e7_dimension():
    from .e7 import e7_basis

    expect_eq(rank(Mat([b.operator().flat() for b in e7_basis()])), 21, "rank")


@check("e7", "Jacobi identity on all 9261 basis triples")
def e7_jacobi_full():
    from .e7 import e7_algebra

    bad = e7_algebra().jacobi_violations()
    expect(not bad, f"{len(bad)} triples, e.g. {bad[:1]}")


@check("e7", "commutator on P agrees with the component bracket formula on all 441 pairs")
def e7_bracket_formula():
    from .e7 import e7_basis, e7_bracket, e7_bracket_formula

    for a in e7_basis():
        for b in e7_basis():
            expect(e7_bracket(a, b) == e7_bracket_formula(a, b), f"{a}, {b}")


@check("e7", "B7 = ad-trace = -2(,)7 = (8/5)tr on all 441 pairs; (Phi0,Phi0)7 = -8/3, B7 = 16/3, tr = 10/3")
def killing_e7_constants():
    from .e7 import E7Elem, e7_basis, e7_inner, e7_killing_all

    for a in e7_basis():
        for b in e7_basis():
            ad, form, tr = e7_killing_all(a, b)
            expect(ad == form == tr, f"{a}, {b}: {ad}, {form}, {tr}")
    phi0 = E7Elem(nu=1)
    expect_eq(e7_inner(phi0, phi0), _gr("-8/3"), "(Phi0, Phi0)7")
    expect_eq(e7_killing_all(phi0, phi0)[0], _gr("16/3"), "B7")
    expect_eq(phi0.operator().matmul(phi0.operator()).trace(), _gr("10/3"), "tr")


@check("e7", "exp(Phi(0,0,B,0)) 1. = (BxB, B, 1, (1/3)(BxB,B)) and fixes 1_, 20 random B")
def e7_orbit_formula():
    from .e7 import ONE_DOT, ONE_LOW, E7Elem, FreudElem, apply_op, exp_nilpotent, in_M
    from .jordan import JordanElem, cross, inner

    rng = random.Random(7)
    for _ in range(20):
        b = JordanElem([_rand_gauss(rng) for _ in range(6)])
        g = exp_nilpotent(E7Elem(b=b))
        bb = cross(b, b)
        want = FreudElem(bb, b, 1, inner(bb, b) * GaussRat("1/3"))
        got = apply_op(g, ONE_DOT)
        expect_eq(got, want, f"B = {b}")
        expect_eq(apply_op(g, ONE_LOW), ONE_LOW, f"B = {b} on 1_")
        expect(in_M(got), f"orbit point {got} left the cone")


@check("e7", "the stabilizer of 1_ in e7 has dimension 14")
def e7_stabilizer_one_low():
    from .e7 import stabilizer_of_one_low

    expect_eq(len(stabilizer_of_one_low()), 14, "dim")


# ================================================================== e8


@check("e8", "ad(e8) is faithful on 52 basis elements: dim 52")
def e8_dimension():
    from .e8 import e8_algebra

    alg = e8_algebra()
    rows = [alg.ad(tuple(ONE if k == j else ZERO for k in range(52))).flat() for j in range(52)]
    expect_eq(rank(Mat(rows)), 52, "rank")


@check("e8", "[1^-, 1_-] = 1~, [1~, 1_-] = -2 1_-, [1~, R] = (0, P, -Q, 0, 2s, -2t)")
def e8_atoms():
    from .e7 import E7Elem, FreudElem
    from .e8 import ONE_DOWN, ONE_TILDE, ONE_UP, E8Elem, e8_bracket

    expect_eq(e8_bracket(ONE_UP, ONE_DOWN), ONE_TILDE, "[1^-, 1_-]")
    expect_eq(e8_bracket(ONE_TILDE, ONE_DOWN), ONE_DOWN * -2, "[1~, 1_-]")
    rng = random.Random(3)
    p = FreudElem.from_coords([_rand_gauss(rng) for _ in range(14)])
    q = FreudElem.from_coords([_rand_gauss(rng) for _ in range(14)])
    phi = E7Elem.from_coords([_rand_gauss(rng) for _ in range(21)])
    r = E8Elem(phi, p, q, 2, 3, 5)
    expect_eq(e8_bracket(ONE_TILDE, r), E8Elem(None, p, -q, 0, 6, -10), "[1~, R]")


@check("e8", "B8 = ad-trace = -(9/2)(,)8 on all 1378 basis pairs; (1~,1~)8 = -8, B8(1~,1~) = 36")
def killing_e8_constants():
    from .e8 import ONE_TILDE, e8_algebra, e8_basis, inner8

    alg = e8_algebra()
    k = alg.killing_matrix()
    basis = e8_basis()
    c = GaussRat("-9/2")
    for i in range(52):
        for j in range(i, 52):
            expect(k.rows[i][j] == inner8(basis[i], basis[j]) * c, f"pair ({i}, {j})")
    expect_eq(inner8(ONE_TILDE, ONE_TILDE), _gr(-8), "(1~, 1~)8")
    expect_eq(alg.killing(ONE_TILDE.coords(), ONE_TILDE.coords()), _gr(36), "B8(1~, 1~)")


@check("e8", "on h8, B8 = 9 sum tau tau' + 12 nu nu' + 36 r r'")
def e8_cartan_killing():
    from .e8 import h8_element, killing8

    rng = random.Random(5)
    for _ in range(6):
        a = [Fraction(rng.randint(-6, 6)) for _ in range(4)]
        b = [Fraction(rng.randint(-6, 6)) for _ in range(4)]
        ta = (a[0], a[1], -a[0] - a[1])
        tb = (b[0], b[1], -b[0] - b[1])
        want = 9 * sum(x * y for x, y in zip(ta, tb)) + 12 * a[2] * b[2] + 36 * a[3] * b[3]
        expect_eq(killing8(h8_element(*a), h8_element(*b)), _gr(want), f"{a}, {b}")


@check("e8", "Jacobi identity on 2,000 random basis triples")
def e8_jacobi_sample():
    from .e8 import e8_algebra

    alg = e8_algebra()
    bad = alg.jacobi_violations(alg.random_triples(2000, seed=2000))
    expect(not bad, f"{len(bad)} triples, e.g. {bad[:1]}")


@check("e8", "Jacobi identity on all 140,608 ordered basis triples", deep_only=True)
def e8_jacobi_full():
    from .e8 import e8_algebra

    bad = e8_algebra().jacobi_violations()
    expect(not bad, f"{len(bad)} triples, e.g. {bad[:1]}")


@check("e8", "(,)8 is ad-invariant: ([H,x],y) + (x,[H,y]) = 0 for H in h8 and all basis x, y")
def e8_inner_invariance():
    from .algebras import get
    from .e8 import e8_algebra, e8_basis, inner8

    alg = e8_algebra()
    basis = e8_basis()
    g = Mat([[inner8(a, b) for b in basis] for a in basis])
    for h in get("e8r").cartan_basis():
        ad = alg.ad(h)
        expect((ad.T.matmul(g) + g.matmul(ad)).is_zero(), f"H = {h}")


@check("e8", "1_- is in W: all 13 membership conditions hold and R x R kills all 52 probes")
def e8_one_low_in_W():
    from .e8 import ONE_DOWN, in_W, lemma67_check

    conds = lemma67_check(ONE_DOWN)
    expect(all(conds), f"failed conditions {[k + 1 for k, c in enumerate(conds) if not c]}")
    expect(in_W(ONE_DOWN), "R x R is nonzero on some probe")


@check("e8", "1~ is not in W: condition (6) fails")
def e8_one_tilde_not_in_W():
    from .e8 import ONE_TILDE, in_W, lemma67_check

    expect(not lemma67_check(ONE_TILDE)[5], "condition (6) holds")
    expect(not in_W(ONE_TILDE), "R x R vanishes")


@check("e8", "centralizer of 1_- is {(Phi, 0, Q, 0, 0, t)}, dimension 36")
def e8_centralizer_one_low():
    from .e8 import ONE_DOWN, centralizer_of

    ker = centralizer_of(ONE_DOWN)
    expect_eq(len(ker), 36, "dim")
    off = list(range(21, 35)) + [49, 50]
    expect(all(not v[i] for v in ker for i in off), "kernel leaves the (Phi, 0, Q, 0, 0, t) block")


# ================================================================== maps


@check("maps", "f4C(A) f4C(B) = f4C(AB) on 20 Cayley-generated orthogonal pairs")
def f4c_multiplicative():
    from .f4e6 import cayley, f4c_group_map, skew_matrix

    rng = random.Random(4)
    done = 0
    while done < 20:
        s1 = skew_matrix(*(GaussRat(rng.randint(-3, 3), 0) for _ in range(3)))
        s2 = skew_matrix(*(GaussRat(rng.randint(-3, 3), 0) for _ in range(3)))
        try:
            a, b = cayley(s1), cayley(s2)
        except ExLieError:
            continue
        expect(f4c_group_map(a) * f4c_group_map(b) == f4c_group_map(a.matmul(b)), f"S1 = {s1}, S2 = {s2}")
        done += 1


@check("maps", "f4C* is an injective homomorphism so(3) -> f4 (9 pairs)")
def f4cstar_homomorphism():
    from .f4e6 import f4_bracket, f4cstar, skew_matrix

    basis = [skew_matrix(1, 0, 0), skew_matrix(0, 1, 0), skew_matrix(0, 0, 1)]
    for a in basis:
        for b in basis:
            expect(f4cstar(a.commutator(b)) == f4_bracket(f4cstar(a), f4cstar(b)), f"{a}, {b}")
    expect_eq(rank(Mat([f4cstar(b).c for b in basis])), 3, "rank")


@check("maps", "f6C* is an injective homomorphism sl(3) -> e6 (64 pairs)")
def f6cstar_homomorphism():
    from .f4e6 import e6_bracket, f6cstar, sl3_basis

    basis = sl3_basis()
    for a in basis:
        for b in basis:
            expect(f6cstar(a.commutator(b)) == e6_bracket(f6cstar(a), f6cstar(b)), f"{a}, {b}")
    expect_eq(rank(Mat([f6cstar(b).coords() for b in basis])), 8, "rank")


@check("maps", "f7C* is an injective homomorphism sp(3, H^C) -> e7 (441 pairs)")
def f7cstar_homomorphism():
    from .e7 import e7_bracket
    from .quaternion import f7cstar, sp3_basis

    basis = sp3_basis()
    images = [f7cstar(b) for b in basis]
    for i, a in enumerate(basis):
        for j, b in enumerate(basis):
            expect(f7cstar(a.bracket(b)) == e7_bracket(images[i], images[j]), f"pair ({i}, {j})")
    expect_eq(rank(Mat([x.coords() for x in images])), 21, "rank")


@check("maps", "tau-lambda fixed part of e6 has real dimension 8 and contains f6C*(su(3))")
def e6_real_form():
    from .f4e6 import E6Elem, f6cstar, su3_basis, tau_lambda_e6

    dim = real_fixed_dimension(lambda v: tau_lambda_e6(E6Elem.from_coords(v)).coords(), 8)
    expect_eq(dim, 8, "real dimension")
    for b in su3_basis():
        x = f6cstar(b)
        expect(tau_lambda_e6(x) == x, f"f6C*({b}) is not fixed")


@check("maps", "tau-lambda fixed part of e7 has real dimension 21 and contains f7C*(sp(3))")
def e7_real_form():
    from .e7 import E7Elem, tau_lambda_e7
    from .quaternion import f7cstar, sp3_basis

    dim = real_fixed_dimension(lambda v: tau_lambda_e7(E7Elem.from_coords(v)).coords(), 21)
    expect_eq(dim, 21, "real dimension")
    for k, b in enumerate(sp3_basis()):
        x = f7cstar(b)
        expect(tau_lambda_e7(x) == x, f"image of basis element {k} is not fixed")


# ================================================================== roots


def _roots_match(name: str):
    def fn():
        from .algebras import get, closed_form_root_values, root_system

        info = get(name)
        rs = root_system(name)
        got = sorted((r.values for r in rs.roots), key=lambda v: [x.sort_key() for x in v])
        want = sorted(closed_form_root_values(name), key=lambda v: [x.sort_key() for x in v])
        expect_eq(len(set(want)), len(want), "closed-form roots are not distinct")
        expect_eq(len(rs) + rs.cartan.rank, info.dim, "rank + |roots|")
        expect(got == want, f"engine {len(got)} roots vs closed form {len(want)}")
        point = info.generic_point()
        from .algebras import evaluate

        at = sorted((r.at(rs.cartan.generic) for r in rs.roots), key=GaussRat.sort_key)
        expect(at == sorted((evaluate(f, point) for f in info.roots), key=GaussRat.sort_key), "values at the generic point")

    return fn


def _dynkin(name: str):
    def fn():
        from .algebras import get, root_system
        from .roots import cartan_matrix, classify_dynkin, positive_split, simple_roots

        info = get(name)
        rs = root_system(name)
        pos, _ = positive_split(rs)
        simple = simple_roots(pos)
        expect_eq(len(simple), rs.cartan.rank, "number of simple roots")
        expect_eq(classify_dynkin(cartan_matrix(rs, simple)).label, info.dynkin, "engine system")
        stated = [info.values(f) for f in info.simple]
        cm = cartan_matrix(rs, stated)
        d = classify_dynkin(cm)
        expect_eq(d.label, info.dynkin, "stated system")
        expect_eq(d.render(), info.diagram, "diagram")

    return fn


def _inner_products(name: str):
    def fn():
        from .algebras import get, root_system
        from .roots import root_inner

        info = get(name)
        rs = root_system(name)
        stated = [info.values(f) for f in info.simple]
        for (i, j), want in info.inner.items():
            expect_eq(root_inner(rs, stated[i - 1], stated[j - 1]), _gr(want), f"(a{i}, a{j})")

    return fn


def _coroots(name: str):
    def fn():
        from .algebras import get, root_system
        from .roots import coroot

        info = get(name)
        rs = root_system(name)
        for k, (f, p) in enumerate(zip(info.simple, info.coroots)):
            expect_eq(coroot(rs, info.values(f)), info.point_to_coeffs(p), f"coroot of a{k + 1}")

    return fn


def _expansions(name: str):
    def fn():
        from .algebras import get, root_system
        from .roots import simple_coefficients

        info = get(name)
        rs = root_system(name)
        stated = [info.values(f) for f in info.simple]
        seen = set(stated)
        for f, coeffs in info.expansions:
            v = info.values(f)
            expect(v in rs, f"{f} is not a root")
            got = simple_coefficients(rs, stated, v)
            expect_eq(got, tuple(_gr(c) for c in coeffs), f"expansion of {f}")
            seen.add(v)
        for r in rs.roots:
            c = simple_coefficients(rs, stated, r.values)
            integral = all(x.is_real() and x.re.denominator == 1 for x in c)
            signed = all(x.re >= 0 for x in c) or all(x.re <= 0 for x in c)
            expect(integral and signed, f"root {r.values} has coefficients {c}")
        expect_eq(len(seen), len(rs) // 2, "positive roots covered")

    return fn


def _root_vectors(name: str):
    def fn():
        from .algebras import root_system
        from .linalg import span_coordinates

        rs = root_system(name)
        alg = rs.alg
        for a, b in combinations(rs.roots, 2):
            s = tuple(x + y for x, y in zip(a.values, b.values))
            w = alg.bracket(a.vector, b.vector)
            tgt = rs.find(s)
            if tgt is None:
                if any(s):
                    expect(not any(w), f"[v_a, v_b] != 0 for a + b = {s} not a root")
                continue
            expect(any(w), f"[v_a, v_b] = 0 for a + b = {s}")
            expect(span_coordinates([tgt.vector], w) is not None, f"[v_a, v_b] not in the root space of {s}")

    return fn


for _n, _t in (("f4r", "A1"), ("e6r", "A2"), ("e7r", "C3"), ("e8r", "F4")):
    check("roots", f"{_n}: engine roots equal the closed-form root list", id=f"{_n}_roots_match")(_roots_match(_n))
    check("roots", f"{_n}: Dynkin type {_t}", id=f"{_n}_dynkin_is_{_t}")(_dynkin(_n))
    if _n != "f4r":
        check("roots", f"{_n}: simple-root inner products", id=f"{_n}_simple_inner_products")(_inner_products(_n))
        check("roots", f"{_n}: positive roots expand over the simple system", id=f"{_n}_expansions")(_expansions(_n))
    check("roots", f"{_n}: coroots solve B(t_a, H) = a(H)", id=f"{_n}_coroots")(_coroots(_n))
    check("roots", f"{_n}: [v_a, v_b] lies in the a+b root space", id=f"{_n}_root_vectors")(_root_vectors(_n))
