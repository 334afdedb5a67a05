"""Command-line front end.

Exit codes: 0 success, 1 internal disagreement or unmet expectation,
2 usage error, 3 I/O failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from . import families as fam
from . import identities as ids
from . import reference_tables as ref
from .exact import LAMBDA, LaurentPoly, QuadNum, format_rational, parse_rational, serialize

EXIT_OK, EXIT_DISAGREE, EXIT_USAGE, EXIT_IO = 0, 1, 2, 3


class UsageError(Exception):
    pass


def parse_range(text: str) -> range:
    """``a..b`` inclusive, or a single integer."""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            lo, hi = int(lo), int(hi)
        else:
            lo = hi = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a..b, got {text!r}") from None
    if lo < 0 or hi < lo:
        raise argparse.ArgumentTypeError(f"empty or negative range {text!r}")
    return range(lo, hi + 1)


def _rational_arg(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"expected a rational p/q, got {text!r}") from None


def _rational_list(text: str) -> list[Fraction]:
    return [_rational_arg(t) for t in text.split(",") if t.strip()]


def _lam_from_args(args, family: str):
    if getattr(args, "symbolic", False):
        if family in fam.NO_LAMBDA:
            raise UsageError(f"family {family!r} has no lambda parameter")
        if family == "e-pos":
            raise UsageError("e-pos supports numeric lambda only")
        return LAMBDA
    lam = args.lam if args.lam is not None else Fraction(1)
    if family in fam.NEEDS_UNIT_LAMBDA and lam == 0:
        raise UsageError(f"family {family!r} needs a nonzero lambda")
    return lam


# ---------------------------------------------------------------------------
# cell rendering
# ---------------------------------------------------------------------------

def wire(value) -> str:
    """Serialized cell text: ``p/q`` for rationals, compact JSON for the rest."""
    obj = serialize(value)
    if isinstance(obj, str):
        return obj
    return json.dumps(obj, separators=(",", ":"), ensure_ascii=False)


def _latex_rational(q: Fraction) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    sign = "-" if q < 0 else ""
    return f"{sign}\\frac{{{abs(q.numerator)}}}{{{q.denominator}}}"


def latex(value) -> str:
    if isinstance(value, LaurentPoly):
        if not value:
            return "0"
        parts = []
        for e, c in sorted(value.terms.items(), reverse=True):
            mag = abs(c)
            coef = "" if mag == 1 and e != 0 else _latex_rational(mag)
            var = "" if e == 0 else ("\\lambda" if e == 1 else f"\\lambda^{{{e}}}")
            parts.append(("-" if c < 0 else "+", coef + var))
        head_sign, head = parts[0]
        text = ("-" if head_sign == "-" else "") + head
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text
    if isinstance(value, QuadNum):
        return f"{_latex_rational(value.rational)} + {_latex_rational(value.radical)}\\sqrt{{5}}"
    return _latex_rational(value)


def _text(value) -> str:
    if isinstance(value, (LaurentPoly, QuadNum)):
        return str(value)
    return format_rational(value)


# ---------------------------------------------------------------------------
# table
# ---------------------------------------------------------------------------

def build_table(family: str, ns: range, ks: range, lam, x) -> list[list]:
    return [[fam.evaluate(family, n, k, lam=lam, x=x) for k in ks] for n in ns]


def _annotations(family, ns, ks, lam, rows):
    notes = []
    for i, n in enumerate(ns):
        for j, k in enumerate(ks):
            hit = ref.printed_cell(family, n, k, lam)
            if hit is None:
                continue
            table, printed = hit
            if printed is None or printed == rows[i][j]:
                continue
            notes.append({"n": n, "k": k, "table": table, "printed": printed,
                          "note": ref.KNOWN_TYPOS.get((table, n, k), "not in the misprint ledger")})
    return notes


def render_table(family, ns, ks, lam, x, rows, fmt: str, notes=None) -> str:
    marked = {(a["n"], a["k"]) for a in notes or ()}
    mark = lambda n, k: "*" if (n, k) in marked else ""
    if fmt == "json":
        obj = {
            "family": family,
            "lambda": "symbolic" if isinstance(lam, LaurentPoly) else format_rational(lam),
            "x": format_rational(x),
            "n": list(ns),
            "k": list(ks),
            "rows": [[serialize(v) for v in row] for row in rows],
        }
        if notes is not None:
            obj["known_typos"] = [{**a, "printed": serialize(a["printed"])} for a in notes]
        return json.dumps(obj, ensure_ascii=False)
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["n\\k", *ks])
        for n, row in zip(ns, rows):
            w.writerow([n, *(wire(v) + mark(n, k) for k, v in zip(ks, row))])
        for a in notes or ():
            w.writerow([f"# n={a['n']} k={a['k']}", "printed", wire(a["printed"]), a["note"]])
        return buf.getvalue().rstrip("\n")
    if fmt == "latex":
        lines = ["\\begin{tabular}{l" + "l" * len(ks) + "}",
                 "$n\\backslash k$ & " + " & ".join(f"${k}$" for k in ks) + " \\\\"]
        for n, row in zip(ns, rows):
            cells = " & ".join(f"${latex(v)}${mark(n, k)}" for k, v in zip(ks, row))
            lines.append(f"${n}$ & {cells} \\\\")
        lines.append("\\end{tabular}")
        for a in notes or ():
            lines.append(f"% * n={a['n']}, k={a['k']}: printed ${latex(a['printed'])}$; {a['note']}")
        return "\n".join(lines)
    # plain text, columns aligned
    grid = [["n\\k", *map(str, ks)]]
    for n, row in zip(ns, rows):
        grid.append([str(n), *(_text(v) + mark(n, k) for k, v in zip(ks, row))])
    widths = [max(len(r[c]) for r in grid) for c in range(len(grid[0]))]
    out = ["  ".join(cell.rjust(wd) for cell, wd in zip(r, widths)) for r in grid]
    for a in notes or ():
        out.append(f"* n={a['n']}, k={a['k']}: printed {_text(a['printed'])}; {a['note']}")
    return "\n".join(out)


def cmd_table(args) -> int:
    lam = _lam_from_args(args, args.family)
    ks = range(0, 1) if args.family in fam.NO_K else args.k
    rows = build_table(args.family, args.n, ks, lam, args.x)
    notes = _annotations(args.family, args.n, ks, lam, rows) if args.known_typos else None
    print(render_table(args.family, args.n, ks, lam, args.x, rows, args.format, notes))
    return EXIT_OK


# ---------------------------------------------------------------------------
# eval
# ---------------------------------------------------------------------------

def cmd_eval(args) -> int:
    lam = _lam_from_args(args, args.family)
    methods = fam.FAMILY_METHODS[args.family]
    if args.method == "all":
        chosen = methods
    else:
        chosen = [fam.Method(args.method)]
        if chosen[0] not in methods:
            raise UsageError(f"family {args.family!r} has no {args.method!r} method")
    values = [fam.evaluate(args.family, args.n, args.k, lam=lam, x=args.x, method=m) for m in chosen]
    if len(chosen) == 1:
        print(wire(values[0]))
        return EXIT_OK
    for m, v in zip(chosen, values):
        print(f"{m.value}: {wire(v)}")
    if any(v != values[0] for v in values[1:]):
        print("methods disagree", file=sys.stderr)
        return EXIT_DISAGREE
    return EXIT_OK


# ---------------------------------------------------------------------------
# verify, check, list, compare
# ---------------------------------------------------------------------------

def cmd_verify(args) -> int:
    report = ids.run_suite(args.n_max, args.k_max, args.lambdas, args.symbolic)
    if args.json:
        try:
            with open(args.json, "w", encoding="utf-8") as fh:
                fh.write(report.to_json())
                fh.write("\n")
        except OSError as exc:
            print(f"cannot write report: {exc}", file=sys.stderr)
            return EXIT_IO
    if not args.quiet:
        print(report.to_text())
    return EXIT_OK if report.all_expectations_met else EXIT_DISAGREE


def cmd_check(args) -> int:
    lam = LAMBDA if args.symbolic else (args.lam if args.lam is not None else Fraction(1))
    try:
        w = ids.check_one(args.id, args.n, args.k, lam)
    except ids.UnknownIdentity:
        raise UsageError(f"unknown identity {args.id!r}") from None
    print(json.dumps({"id": args.id, **w.to_json_obj()}, ensure_ascii=False))
    return EXIT_OK if w.holds else EXIT_DISAGREE


def cmd_list(args) -> int:
    for ident in ids.list_identities():
        extra = f" -> {ident.corrected_variant}" if ident.corrected_variant else ""
        print(f"{ident.id:7s} {ident.expectation:17s} {ident.source:8s} {ident.statement}{extra}")
    return EXIT_OK


def cmd_compare(args) -> int:
    names = [args.table] if args.table else list(ref.TABLES)
    unexplained = 0
    for name in names:
        mismatches = ref.compare_table(name)
        print(f"{name}: {len(ref.TABLES[name].printed)} cells, {len(mismatches)} differ")
        for m in mismatches:
            tag = "known" if m.known else "UNEXPLAINED"
            print(f"  n={m.n} k={m.k} printed {wire(m.printed)} computed {wire(m.computed)} "
                  f"[{tag}] {m.note or ''}".rstrip())
            unexplained += not m.known
    return EXIT_DISAGREE if unexplained else EXIT_OK


# ---------------------------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _add_lambda(p):
    g = p.add_mutually_exclusive_group()
    g.add_argument("--lambda", dest="lam", type=_rational_arg, help="numeric lambda p/q (default 1)")
    g.add_argument("--symbolic", action="store_true", help="keep lambda as a Laurent polynomial")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="negord", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    families = sorted(fam.FAMILY_METHODS)

    p = sub.add_parser("table", help="emit a rectangular table of a family")
    p.add_argument("family", choices=families)
    _add_lambda(p)
    p.add_argument("--n", type=parse_range, default=parse_range("0..5"), help="row range a..b")
    p.add_argument("--k", type=parse_range, default=parse_range("0..5"), help="column range a..b")
    p.add_argument("--x", type=_rational_arg, default=Fraction(0))
    p.add_argument("--format", choices=["csv", "json", "latex", "text"], default="text")
    p.add_argument("--known-typos", action="store_true",
                   help="annotate cells whose printed reference value differs")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("eval", help="evaluate one value")
    p.add_argument("family", choices=families)
    p.add_argument("n", type=int)
    p.add_argument("k", type=int, nargs="?", default=0)
    _add_lambda(p)
    p.add_argument("--x", type=_rational_arg, default=Fraction(0))
    p.add_argument("--method", choices=["explicit", "series", "recurrence", "all"], default="explicit")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("verify", help="run the identity suite")
    p.add_argument("--n-max", type=int, default=8)
    p.add_argument("--k-max", type=int, default=6)
    p.add_argument("--lambdas", type=_rational_list, default=list(ids.DEFAULT_LAMBDAS))
    p.add_argument("--symbolic", action="store_true", help="also check at symbolic lambda")
    p.add_argument("--json", metavar="PATH", help="write the JSON report here")
    p.add_argument("--quiet", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("check", help="both sides of one identity at one point")
    p.add_argument("id")
    p.add_argument("n", type=int)
    p.add_argument("k", type=int)
    _add_lambda(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("list", help="list registered identities")
    p.set_defaults(func=cmd_list)

    p = sub.add_parser("compare", help="compare computed values with the reference tables")
    p.add_argument("table", nargs="?", choices=sorted(ref.TABLES))
    p.set_defaults(func=cmd_compare)
    return parser


_VALUE_FLAGS = {"--lambda", "--x", "--lambdas"}


def _glue_negative_values(argv: list[str]) -> list[str]:
    """Rewrite ``--lambda -3/5`` as ``--lambda=-3/5`` so argparse keeps the sign."""
    out: list[str] = []
    it = iter(argv)
    for tok in it:
        if tok in _VALUE_FLAGS:
            nxt = next(it, None)
            if nxt is None:
                out.append(tok)
            elif nxt.startswith("-") and nxt[1:2].isdigit():
                out.append(f"{tok}={nxt}")
            else:
                out.extend([tok, nxt])
        else:
            out.append(tok)
    return out


def main(argv=None) -> int:
    parser = build_parser()
    argv = sys.argv[1:] if argv is None else list(argv)
    args = parser.parse_args(_glue_negative_values(argv))
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"negord: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except fam.ConsistencyError as exc:
        print(f"negord: internal inconsistency: {exc}", file=sys.stderr)
        return EXIT_DISAGREE
    except (ValueError, ZeroDivisionError) as exc:
        print(f"negord: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
