"""Command line front end: verify, roots, export, table."""

from __future__ import annotations

import argparse
import json
import sys

from . import algebras
from .linalg import GaussRat

ALGEBRAS = algebras.NAMES


def _coef_str(c: GaussRat) -> str:
    return f"({c})" if (c.re and c.im) else str(c)


def expansion(coeffs: dict, names) -> str:
    """Sparse coefficient dict -> '2 A1~(1) - 1/2 A3~(1)'."""
    if not coeffs:
        return "0"
    parts = []
    for k in sorted(coeffs):
        c = coeffs[k]
        neg = c.is_real() and c.re < 0
        mag = -c if neg else c
        term = names[k] if mag == 1 else f"{_coef_str(mag)} {names[k]}"
        parts.append(("- " if neg else "+ ") + term)
    out = " ".join(parts)
    return out[2:] if out.startswith("+ ") else "-" + out[2:]


def value_form(values, info) -> str:
    """Root values on the Cartan generators as a linear form."""
    if info.name == "f4r":
        names = ["a"]
    else:
        names = ["tau1", "tau2", "nu", "r"][: len(values)]
    parts = []
    for c, n in zip(values, names):
        if c:
            neg = c.is_real() and c.re < 0
            mag = -c if neg else c
            coef = f"({mag})" if not mag.is_real() or mag.re.denominator != 1 else str(mag)
            parts.append(("-" if neg else "+") + (n if mag == 1 else coef + n))
    s = "".join(parts) or "0"
    return s[1:] if s.startswith("+") else s


# ------------------------------------------------------------------ verify


def cmd_verify(args) -> int:
    from .verify import run_suite

    rep = run_suite(args.suite, deep=args.deep)
    if args.json:
        print(json.dumps(rep.to_json(), indent=2))
    else:
        print(rep.render())
    return 0 if rep.ok else 1


# ------------------------------------------------------------------- roots


def root_report(name: str) -> dict:
    from .roots import cartan_matrix, classify_dynkin, positive_split, simple_roots

    info = algebras.get(name)
    rs = algebras.root_system(name)
    pos, _ = positive_split(rs)
    simple = simple_roots(pos)
    cm = cartan_matrix(rs, simple)
    diag = classify_dynkin(cm)
    closed = {info.values(f): algebras.show(f) for f in info.roots}
    posset = {r.values for r in pos}
    return {
        "algebra": name,
        "dim": rs.alg.dim,
        "rank": rs.cartan.rank,
        "count": len(rs),
        "type": diag.label,
        "diagram": diag.render(),
        "cartan_matrix": cm,
        "simple": [closed.get(r.values, value_form(r.values, info)) for r in simple],
        "roots": [
            {
                "form": closed.get(r.values, value_form(r.values, info)),
                "values": [x.to_json() for x in r.values],
                "positive": r.values in posset,
                "vector": [x.to_json() for x in r.vector],
            }
            for r in rs.roots
        ],
    }


def cmd_roots(args) -> int:
    rep = root_report(args.algebra)
    if args.format == "json":
        print(json.dumps(rep, indent=2))
        return 0
    print(f"{rep['count']} roots, type {rep['type']}")
    print(f"dimension {rep['dim']} = rank {rep['rank']} + {rep['count']} roots")
    print("simple roots:")
    for k, s in enumerate(rep["simple"], 1):
        print(f"  a{k} = {s}")
    print("Cartan matrix:")
    for row in rep["cartan_matrix"]:
        print("  " + " ".join(f"{x:>3}" for x in row))
    print(f"diagram: {rep['diagram']}")
    print("roots:")
    for r in rep["roots"]:
        print(f"  {'+' if r['positive'] else '-'} {r['form']}")
    return 0


# ------------------------------------------------------------------ export


def cmd_export(args) -> int:
    alg = algebras.get(args.algebra).build()
    text = alg.dumps()
    try:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    except OSError as e:
        print(f"error: cannot write {args.out}: {e}", file=sys.stderr)
        return 1
    print(f"wrote {alg.dim} basis elements and {alg.nnz()} constants to {args.out}")
    return 0


# ------------------------------------------------------------------- table


def bracket_table(name: str) -> list:
    """Rows of (i, j, expansion string) for all ordered basis pairs."""
    alg = algebras.get(name).build()
    names = alg.basis_names
    return [(i, j, expansion(alg.bracket_basis(i, j), names)) for i in range(alg.dim) for j in range(alg.dim)]


def cmd_table(args) -> int:
    alg = algebras.get(args.algebra).build()
    names = alg.basis_names
    rows = bracket_table(args.algebra)
    if alg.dim <= 8:
        cells = {(i, j): e for i, j, e in rows}
        width = max(len(e) for e in cells.values())
        width = max(width, max(len(n) for n in names))
        print(" " * (width + 2) + " | ".join(f"{n:<{width}}" for n in names))
        for i, n in enumerate(names):
            print(f"{n:<{width}}  " + " | ".join(f"{cells[(i, j)]:<{width}}" for j in range(alg.dim)))
        return 0
    for i, j, e in rows:
        if e != "0" and i < j:
            print(f"[{names[i]}, {names[j]}] = {e}")
    print(f"({alg.dim}x{alg.dim} table; remaining entries are zero or follow by antisymmetry)")
    return 0


# ------------------------------------------------------------------- main


def build_parser() -> argparse.ArgumentParser:
    from .verify import SUITES

    p = argparse.ArgumentParser(prog="exlie", description="Exact verification of the f4/e6/e7/e8 R-analogue tower.")
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run verification suites")
    v.add_argument("--suite", default="all", choices=("all",) + SUITES)
    v.add_argument("--json", action="store_true")
    v.add_argument("--deep", action="store_true", help="include exhaustive sweeps")
    v.set_defaults(fn=cmd_verify)

    r = sub.add_parser("roots", help="root system, simple roots and Dynkin diagram")
    r.add_argument("--algebra", required=True, choices=ALGEBRAS)
    r.add_argument("--format", default="text", choices=("text", "json"))
    r.set_defaults(fn=cmd_roots)

    e = sub.add_parser("export", help="write structure constants as JSON")
    e.add_argument("--algebra", required=True, choices=ALGEBRAS)
    e.add_argument("--out", required=True)
    e.set_defaults(fn=cmd_export)

    t = sub.add_parser("table", help="print the bracket table")
    t.add_argument("--algebra", required=True, choices=ALGEBRAS)
    t.set_defaults(fn=cmd_table)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.fn(args)


if __name__ == "__main__":
    sys.exit(main())
