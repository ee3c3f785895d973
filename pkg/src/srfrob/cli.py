"""Command-line interface: ``srfrob <command> [options]``.

Exit codes: 0 success, 1 gauge-check violation, 2 parse error, 3
precondition violation, 4 internal invariant failure.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Optional

from .cartier import cartier_generators, check_gauge_bound, f_split_check
from .census import census
from .diffops import in_DR, non_image_witness, phi_image
from .errors import InvariantError, ParseError, PreconditionError
from .frobenius import (
    classify,
    colon_formula,
    katzman_L,
    presentation_string,
    verify_infinitely_generated,
)
from .monomial import colon, frobenius_power, instantiate
from .simplicial import (
    alexander_dual,
    bits,
    complex_of,
    height_profile,
    primary_decomposition,
)
from .syntax import format_ideal, format_monomial, parse_ideal

SCHEMA = 1


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def _prime(p: int) -> int:
    if not is_prime(p):
        raise PreconditionError(f"p = {p} is not prime")
    return p


def _support_str(mask: int) -> str:
    return "(" + ",".join(f"x{i + 1}" for i in bits(mask)) + ")"


def _load(args):
    if args.ideal is None:
        raise ParseError("--ideal is required")
    return parse_ideal(args.ideal, args.n)


def _emit(data: dict, fmt: str, out, text_lines: Optional[list] = None):
    if fmt == "json":
        json.dump(data, out, indent=2)
        out.write("\n")
    elif fmt == "text":
        for line in text_lines if text_lines is not None else (f"{k}: {v}" for k, v in data.items()):
            out.write(f"{line}\n")
    else:
        raise PreconditionError(f"format {fmt!r} is not supported by this command")


def cmd_classify(args, out):
    I = _load(args)
    p = _prime(args.p)
    r = classify(I, p, verify=args.verify)
    height, pure, _ = height_profile(r.decomposition)
    data = {
        "schema": SCHEMA,
        "n": I.n,
        "p": p,
        "generators": [format_monomial(g) for g in I.gens],
        "decomposition": [_support_str(s) for s in r.decomposition.supports],
        "height": height,
        "pure": pure,
        "case": r.case_tag.value,
        "finitely_generated": r.finitely_generated,
        "mu": r.mu,
        "colon_symbolic": [format_monomial(g) for g in r.colon.symbolic.gens],
        "gorenstein": r.gorenstein,
        "cohen_macaulay": r.cohen_macaulay,
    }
    lines = [f"{k}: {v}" for k, v in data.items() if k != "schema"]
    lines.append(presentation_string(r))
    _emit(data, args.format, out, lines)


def cmd_colon(args, out):
    I = _load(args)
    pres = colon_formula(I)
    data = {
        "schema": SCHEMA,
        "n": I.n,
        "generators": [format_monomial(g) for g in I.gens],
        "colon_symbolic": [format_monomial(g) for g in pres.symbolic.gens],
        "tags": [t.value for t in pres.tags],
    }
    if args.q is not None:
        if args.q < 2:
            raise PreconditionError("--q must be at least 2")
        inst = instantiate(pres.symbolic, args.q)
        oracle = colon(frobenius_power(I, args.q), I)
        if inst != oracle:
            raise InvariantError(f"colon formula disagrees with the direct colon at q={args.q}")
        data["q"] = args.q
        data["colon_concrete"] = [format_monomial(g) for g in inst.gens]
        data["oracle_agrees"] = True
    lines = [f"{format_monomial(g)}  {t.value}" for g, t in zip(pres.symbolic.gens, pres.tags)]
    if args.q is not None:
        lines.append(f"at q = {args.q}: {format_ideal(inst)} (matches direct colon)")
    _emit(data, args.format, out, lines)


def cmd_decompose(args, out):
    I = _load(args)
    D = primary_decomposition(I)
    height, pure, covering = height_profile(D)
    delta = complex_of(I)
    data = {
        "schema": SCHEMA,
        "n": I.n,
        "generators": [format_monomial(g) for g in I.gens],
        "decomposition": [_support_str(s) for s in D.supports],
        "facets": [[i + 1 for i in bits(f)] for f in delta.facets],
        "alexander_dual": [format_monomial(g) for g in alexander_dual(I).gens],
        "height": height,
        "pure": pure,
        "covering": covering,
    }
    _emit(data, args.format, out)


def cmd_census(args, out):
    p = _prime(args.p)
    if args.n is None:
        raise ParseError("census needs -n")
    coverings = {"covering": [True], "all": [False], "both": [True, False]}[args.support]
    rows = [row for cov in coverings for row in census(args.n, p, covering=cov, jobs=args.jobs)]
    if args.format == "csv":
        w = csv.writer(out, lineterminator="\n")
        both = len(coverings) > 1
        w.writerow(["n", "height", "pg", "gor", "ig"] + (["covering"] if both else []))
        for r in rows:
            w.writerow([r.n, r.height, r.pg_count, r.gor_count, r.ig_count] + ([int(r.covering)] if both else []))
        return
    data = {
        "schema": SCHEMA,
        "n": args.n,
        "p": p,
        "rows": [
            {"height": r.height, "pg": r.pg_count, "gor": r.gor_count, "ig": r.ig_count, "covering": r.covering}
            for r in rows
        ],
    }
    lines = ["ideals    ht  p.g.  Gor  i.g."]
    lines += [
        f"{'covering' if r.covering else 'all':8} {r.height:3} {r.pg_count:5} {r.gor_count:4} {r.ig_count:5}"
        for r in rows
    ]
    _emit(data, args.format, out, lines)


def cmd_gauge(args, out):
    I = _load(args)
    p = _prime(args.p)
    rep = check_gauge_bound(I, p, args.e)
    data = {
        "schema": SCHEMA,
        "n": I.n,
        "p": p,
        "e": args.e,
        "constant": str(rep.constant),
        "checked": rep.checked,
        "min_slack": None if rep.min_slack is None else str(rep.min_slack),
        "violations": rep.violation_count,
        "examples": [
            {"generator": g, "monomial": format_monomial(r), "lhs": lhs, "rhs": str(rhs)}
            for g, r, lhs, rhs in rep.violations
        ],
        "f_split": f_split_check(I, p),
        "ok": rep.ok,
    }
    _emit(data, args.format, out)
    return 0 if rep.ok else 1


def cmd_diffops(args, out):
    I = _load(args)
    p = _prime(args.p)
    D = primary_decomposition(I)
    gens = cartier_generators(I, p, args.e)
    images = []
    for g in gens:
        op = phi_image(g, p)
        images.append(
            {
                "generator": g.label(p),
                "kind": g.kind,
                "image": repr(op),
                "in_DR": all(in_DR(b, a, D) for b, a in op.terms),
            }
        )
    w = non_image_witness(I, p, args.e)
    data = {"schema": SCHEMA, "n": I.n, "p": p, "e": args.e, "images": images, "witness": None}
    if w is not None:
        data["witness"] = {
            "operator": repr(w.operator),
            "distinct": w.distinct,
            "candidates_checked": w.candidates_checked,
            "label": w.label,
        }
    _emit(data, args.format, out)


def cmd_katzman(args, out):
    I = _load(args)
    p = _prime(args.p)
    if args.emax < 1:
        raise PreconditionError("--emax must be at least 1")
    found = verify_infinitely_generated(I, p, args.emax)
    cache: dict = {}
    levels = []
    for e, witness in found:
        L = katzman_L(I, p, e, cache)
        levels.append(
            {
                "e": e,
                "q": p**e,
                "witness": format_monomial(witness),
                "exponents": list(witness),
                "L_generators": len(L.gens),
            }
        )
    data = {"schema": SCHEMA, "n": I.n, "p": p, "emax": args.emax, "levels": levels}
    lines = [f"e={x['e']} q={x['q']}: {x['witness']} not in L_{x['e']} ({x['L_generators']} generators)" for x in levels]
    _emit(data, args.format, out, lines)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="srfrob", description="Frobenius algebras of Stanley-Reisner rings")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp, ideal=True, p=True, e=False, formats=("json", "text")):
        if ideal:
            sp.add_argument("--ideal", help='squarefree ideal, e.g. "x1*x2, x1*x3"')
        sp.add_argument("-n", type=int, default=None, help="number of variables")
        if p:
            sp.add_argument("-p", type=int, default=2, help="characteristic (prime)")
        if e:
            sp.add_argument("-e", type=int, default=1, help="level, q = p^e")
        sp.add_argument("--format", choices=formats, default=formats[0])

    sp = sub.add_parser("classify", help="principal vs infinite generation")
    common(sp)
    sp.add_argument("--verify", action="store_true", help="also check the colon against the direct computation")
    sp.set_defaults(func=cmd_classify)

    sp = sub.add_parser("colon", help="symbolic colon (I^[q] : I)")
    common(sp, p=False)
    sp.add_argument("--q", type=int, default=None, help="also instantiate at this q and compare")
    sp.set_defaults(func=cmd_colon)

    sp = sub.add_parser("decompose", help="primary decomposition and complex")
    common(sp, p=False)
    sp.set_defaults(func=cmd_decompose)

    sp = sub.add_parser("census", help="counts of pure-height ideals up to relabeling")
    common(sp, ideal=False, formats=("text", "json", "csv"))
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument(
        "--support",
        choices=("covering", "all", "both"),
        default="covering",
        help="only ideals using every variable, all ideals, or both tables",
    )
    sp.set_defaults(func=cmd_census)

    sp = sub.add_parser("gauge-check", help="gauge bound on all small monomials")
    common(sp, e=True)
    sp.set_defaults(func=cmd_gauge)

    sp = sub.add_parser("diffops", help="images of Cartier generators as differential operators")
    common(sp, e=True)
    sp.set_defaults(func=cmd_diffops)

    sp = sub.add_parser("katzman", help="new generators outside L_e")
    common(sp)
    sp.add_argument("--emax", type=int, default=3)
    sp.set_defaults(func=cmd_katzman)
    return parser


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    args = build_parser().parse_args(argv)
    try:
        code = args.func(args, out)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except PreconditionError as exc:
        print(f"precondition violated: {exc}", file=sys.stderr)
        return 3
    except InvariantError as exc:
        print(f"internal invariant failed: {exc}", file=sys.stderr)
        return 4
    return code or 0


def run(argv) -> tuple[int, str]:
    """main() with captured stdout, for tests and scripting."""
    buf = io.StringIO()
    code = main(argv, buf)
    return code, buf.getvalue()


if __name__ == "__main__":
    sys.exit(main())
