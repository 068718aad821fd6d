"""Command-line interface: ``splength <command> ...``.

Presentations are given inline (``"< a, b | a^2, b^3 >"``), as a path to a
file holding one presentation, or as ``-`` for standard input.  Results go
to standard output or to ``--out``; diagnostics go to standard error.
Input errors exit with status 2; a coset enumeration that does not close
within its limit exits with status 1.
"""

import argparse
import json
import os
import sys
from fractions import Fraction

from . import __version__
from .abelian import smith_form_of, torsion_lower_bound
from .cosets import CapacityExceeded, CosetTable, SubgroupSpec, check_table, low_index_subgroups, todd_coxeter
from .estimator import FAMILIES, UPPER_BOUND_NOTE, family_sweep, parse_grid, parse_range, stable_upper_bound
from .lattice import (CertificateError, LatticeBasis, WeightedOneNorm, builtin_layouts, contraction_sweep,
                      contraction_sweep_csv, fundamental_domain_contraction, lll_reduce_with_transform,
                      reduced_basis_certificate)
from .presentation import PresentationError, format_presentation, parse_presentation, tcost, triangulate
from .report import csv_text, decimal_string, fraction_string
from .rewriting import rewrite_presentation
from .tietze import SimplifyBudget, simplify_with_status


class UsageError(Exception):
    pass


def _read_text(arg: str) -> str:
    if arg == "-":
        return sys.stdin.read()
    if not arg.lstrip().startswith(("<", "{", "[")) and os.path.exists(arg):
        with open(arg, encoding="utf-8") as fh:
            return fh.read()
    return arg


def _presentation(arg):
    return parse_presentation(_read_text(arg))


def _budget(text):
    if text is None:
        return SimplifyBudget()
    try:
        return SimplifyBudget.parse(text)
    except ValueError as exc:
        raise UsageError(f"bad --budget {text!r}: expected PASSES:MAXLEN with positive integers") from exc


def _tables(text):
    """One table object, a JSON array of them, or one JSON object per line."""
    text = text.strip()
    if text.startswith("["):
        return [CosetTable.from_json(obj) for obj in json.loads(text)]
    return [CosetTable.from_json(line) for line in text.splitlines() if line.strip()]


# ---------------------------------------------------------------------------
# commands


def cmd_tcost(args):
    return f"{tcost(_presentation(args.presentation))}\n"


def cmd_triangulate(args):
    return format_presentation(triangulate(_presentation(args.presentation))) + "\n"


def cmd_simplify(args):
    res = simplify_with_status(_presentation(args.presentation), _budget(args.budget))
    if res.budget_exceeded:
        print("warning: simplify budget exhausted; returning the best presentation found", file=sys.stderr)
    return format_presentation(res.presentation) + "\n"


def cmd_subgroups(args):
    p = _presentation(args.presentation)
    tables = low_index_subgroups(p, args.max_index)
    if args.format == "csv":
        return csv_text(["index", "table"], [[t.index, t.to_json()] for t in tables])
    if args.format == "json":
        return "[" + ",".join(t.to_json() for t in tables) + "]\n"
    return "".join(t.to_json() + "\n" for t in tables)


def cmd_rewrite(args):
    p = _presentation(args.presentation)
    if (args.table is None) == (args.subgroup is None):
        raise UsageError("rewrite needs exactly one of --table or --subgroup")
    if args.table is not None:
        tables = _tables(_read_text(args.table))
        if len(tables) != 1:
            raise UsageError(f"--table holds {len(tables)} tables; give exactly one")
        t = tables[0]
        if t.ngens != p.ngens:
            raise UsageError(f"table acts with {t.ngens} generators but the presentation has {p.ngens}")
        try:
            check_table(p, t)
        except ValueError as exc:
            raise UsageError(f"table is not a coset table of this presentation: {exc}") from exc
    else:
        t = todd_coxeter(p, SubgroupSpec.parse(args.subgroup, p), args.max_cosets)
    q = rewrite_presentation(p, t)
    if args.simplify:
        q = simplify_with_status(q, _budget(args.budget)).presentation
    return format_presentation(q) + "\n"


def _record_obj(r):
    return {
        "index": r.index,
        "raw_cost": r.raw_cost,
        "simplified_cost": r.simplified_cost,
        "ratio": fraction_string(r.ratio),
        "ratio_decimal": decimal_string(r.ratio),
        "budget_exceeded": r.budget_exceeded,
        "table": json.loads(r.subgroup.to_json()) if isinstance(r.subgroup, CosetTable) else None,
    }


def cmd_stable(args):
    p = _presentation(args.presentation)
    rep = stable_upper_bound(p, args.max_index, _budget(args.budget))
    b = rep.best
    print(f"best upper bound {fraction_string(b.ratio)} ({decimal_string(b.ratio)}) at index {b.index} "
          f"over {len(rep.records)} subgroup classes; {UPPER_BOUND_NOTE}", file=sys.stderr)
    if args.format == "json":
        obj = {"best": _record_obj(b), "records": [_record_obj(r) for r in rep.records], "note": rep.note}
        return json.dumps(obj, indent=1) + "\n"
    rows = [[r.index, r.raw_cost, r.simplified_cost, fraction_string(r.ratio), decimal_string(r.ratio),
             r.subgroup.to_json()] for r in rep.records]
    return csv_text(["index", "raw_cost", "simplified_cost", "ratio", "ratio_decimal", "table"], rows)


def cmd_family(args):
    grid = parse_grid(args.grid) if args.grid else {}
    for name in ("g", "e", "d", "m", "n"):
        value = getattr(args, name)
        if value is not None:
            grid[name] = parse_range(value)
    sweep = family_sweep(args.family, grid, instantiate=args.instantiate)
    print(sweep.summary(), file=sys.stderr)
    if args.format == "json":
        rows = [{**dict(r.params), "index_or_degree": r.degree, "tcost": r.tcost,
                 "ratio": f"{r.tcost}/{r.degree}", "ratio_decimal": decimal_string(r.ratio),
                 "commensurability_adjusted_ratio": f"{r.tcost}/{r.degree * r.commensurability}",
                 "adjusted_decimal": decimal_string(r.adjusted_ratio)} for r in sweep.rows]
        b = sweep.argmin
        obj = {"family": sweep.family, "rows": rows,
               "min": {"ratio": f"{b.tcost}/{b.degree}", "at": dict(b.params)}, "note": UPPER_BOUND_NOTE}
        return json.dumps(obj, indent=1) + "\n"
    return sweep.to_csv()


def cmd_lll(args):
    b = LatticeBasis.parse(_read_text(args.basis))
    delta = Fraction(args.delta)
    red, u = lll_reduce_with_transform(b, delta)
    norm = WeightedOneNorm(tuple(Fraction(x) for x in args.weights.split(","))) if args.weights else None
    lines = [f"reduced={red.format()}",
             "transform=" + ";".join(",".join(str(u[i][j]) for i in range(len(u))) for j in range(len(u)))]
    try:
        cert = reduced_basis_certificate(red, norm, delta=delta)
    except CertificateError as exc:
        print(f"certificate failed: {exc}", file=sys.stderr)
        lines.append("certificate=FAILED")
        return "\n".join(lines) + "\n"
    lines += [f"covolume={fraction_string(cert.covolume)}",
              f"product_of_norms={fraction_string(cert.product_of_norms)}",
              f"epsilon_witness={fraction_string(cert.epsilon_witness)}",
              f"epsilon={fraction_string(cert.epsilon)}",
              "certificate=ok"]
    return "\n".join(lines) + "\n"


def cmd_contract(args):
    layouts = builtin_layouts()
    if args.layout not in layouts:
        raise UsageError(f"unknown layout {args.layout!r}; known: {', '.join(sorted(layouts))}")
    layout = layouts[args.layout]
    sub = LatticeBasis.parse(args.sub)
    if args.sweep:
        return contraction_sweep_csv(contraction_sweep(layout, sub, parse_range(args.sweep)))
    c = fundamental_domain_contraction(layout, sub)
    return f"total={c.total_triangles} interior={c.interior_contracted} boundary={c.boundary_remaining}\n"


def cmd_abelianize(args):
    p = _presentation(args.presentation)
    sf = smith_form_of(p)
    tb = torsion_lower_bound(p, no_2_torsion=args.no_2_torsion)
    lines = [f"group={sf.describe()}",
             "invariants=" + ",".join(str(d) for d in sf.diagonal),
             f"betti={sf.betti}",
             f"torsion_order={sf.torsion_order}",
             f"torsion_floor={tb.value}"]
    if tb.caveat:
        lines.append(f"caveat={tb.caveat}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# parser


def build_parser():
    ap = argparse.ArgumentParser(prog="splength",
                                 description="Triangle costs of presentations and upper bounds on stable presentation length.")
    ap.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = ap.add_subparsers(dest="command", metavar="command")
    sub.required = True

    def command(name, func, help_text, pres=True):
        sp = sub.add_parser(name, help=help_text)
        if pres:
            sp.add_argument("presentation", help="inline presentation, file path, or - for stdin")
        sp.add_argument("--out", help="write the result to this file")
        sp.set_defaults(func=func)
        return sp

    command("tcost", cmd_tcost, "print the triangle cost")
    command("triangulate", cmd_triangulate, "split relators into triangles")
    sp = command("simplify", cmd_simplify, "Tietze-simplify a presentation")
    sp.add_argument("--budget", help="PASSES:MAXLEN")
    sp = command("subgroups", cmd_subgroups, "low-index subgroup tables, one per conjugacy class")
    sp.add_argument("--max-index", type=int, required=True)
    sp.add_argument("--format", choices=("lines", "json", "csv"), default="lines")
    sp = command("rewrite", cmd_rewrite, "presentation of a finite-index subgroup")
    sp.add_argument("--table", help="coset table JSON, or a file holding it")
    sp.add_argument("--subgroup", help="comma-separated subgroup generator words")
    sp.add_argument("--max-cosets", type=int, default=100_000)
    sp.add_argument("--simplify", action="store_true")
    sp.add_argument("--budget", help="PASSES:MAXLEN")
    sp = command("stable", cmd_stable, "upper bound on the stable presentation length")
    sp.add_argument("--max-index", type=int, required=True)
    sp.add_argument("--budget", help="PASSES:MAXLEN")
    sp.add_argument("--format", choices=("csv", "json"), default="csv")
    sp = command("family", cmd_family, "sweep a parametric family", pres=False)
    sp.add_argument("family", help=", ".join(FAMILIES))
    sp.add_argument("--grid", help='e.g. "g=2;d=1..100"')
    for name in ("g", "e", "d", "m", "n"):
        sp.add_argument(f"--{name}", help="range such as 1..50")
    sp.add_argument("--instantiate", action="store_true", help="build torus presentations instead of counting")
    sp.add_argument("--format", choices=("csv", "json"), default="csv")
    sp = command("lll", cmd_lll, "LLL-reduce a basis and certify it", pres=False)
    sp.add_argument("basis", help='columns separated by ";", e.g. "3,-1;1,4"')
    sp.add_argument("--delta", default="3/4")
    sp.add_argument("--weights", help="comma-separated positive weights of the 1-norm")
    sp = command("contract", cmd_contract, "count triangles inside a fundamental parallelogram", pres=False)
    sp.add_argument("--layout", default="fig8proof")
    sp.add_argument("--sub", required=True, help='sublattice basis, e.g. "3,-1;1,4"')
    sp.add_argument("--sweep", help="dilation factors k, e.g. 1..20; prints CSV")
    sp = command("abelianize", cmd_abelianize, "Smith normal form of the abelianization")
    sp.add_argument("--no-2-torsion", action="store_true", help="vouch that the group has no 2-torsion")
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    if getattr(args, "max_index", None) is not None and args.max_index < 1:
        ap.error("--max-index must be positive")
    try:
        text = args.func(args)
    except (UsageError, PresentationError, ValueError, OSError) as exc:
        print(f"splength {args.command}: error: {exc}", file=sys.stderr)
        return 2
    except CapacityExceeded as exc:
        print(f"splength {args.command}: capacity exceeded: {exc}", file=sys.stderr)
        return 1
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
