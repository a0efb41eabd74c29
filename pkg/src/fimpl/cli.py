"""Command-line front end.

Exit codes: 0 success or property holds, 1 property violated or
equivalence exceeded, 2 usage, parse or domain error.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import aggregations as agg
from .batteries import PROPOSITION_GENERATORS, run_proposition_battery, run_theorem_battery
from .chains import is_f_chain
from .construction import Construction
from .dsl import DslError, load_file
from .errors import InvalidArgument
from .implications import CATALOG_NAMES, catalog
from .methods import MethodInstance, check_equivalence
from .negations import NEGATIONS, TNORM_KINDS, ContinuousTNorm, Negation, negation_by_name, tnorm
from .numerics import Tolerance, make_grid
from .properties import (DEFAULT_R_VALUES, PROPERTIES, PROPOSITIONS, PropertyContext,
                         check_property, check_sufficiency)
from .tables import reproduce_table

OK, VIOLATED, USAGE = 0, 1, 2
CALLABLE_KINDS = ("implication", "construction", "method")


class UsageError(Exception):
    pass


def _emit(args, payload, text):
    print(json.dumps(payload, indent=2, sort_keys=True) if args.json else text)


def _load(args):
    path = Path(args.file)
    try:
        return load_file(path)
    except OSError as exc:
        raise UsageError(f"{path}: cannot read: {exc.strerror or exc}") from None
    except DslError as exc:
        raise UsageError("\n".join(f"{path}:{d}" for d in exc.diagnostics)) from None


def _binding(args, kinds=CALLABLE_KINDS):
    _, b = _load(args)
    if args.name not in b:
        raise UsageError(f"{args.file}: no binding named {args.name!r}; available: {', '.join(b.names())}")
    kind = b.kinds[args.name]
    if kind not in kinds:
        raise UsageError(f"{args.name!r} is a {kind}, expected {' or '.join(kinds)}")
    return b, b[args.name]


def _grid(args):
    if args.resolution < 2:
        raise UsageError(f"--resolution must be at least 2, got {args.resolution}")
    return make_grid(args.resolution)


def _tol(args):
    if not args.tolerance >= 0:
        raise UsageError(f"--tolerance must be non-negative, got {args.tolerance}")
    return Tolerance(eps_eq=args.tolerance)


# -- commands ----------------------------------------------------------------

def cmd_eval(args):
    _, obj = _binding(args)
    for label, v in (("x", args.x), ("y", args.y)):
        if not 0.0 <= v <= 1.0:
            raise UsageError(f"{label} = {v!r} is outside [0, 1]")
    value = float(obj(args.x, args.y))
    _emit(args, {"name": args.name, "x": args.x, "y": args.y, "value": value}, repr(value))
    return OK


def _context(args, bindings):
    N = T = None
    if args.negation:
        if args.negation in bindings and isinstance(bindings[args.negation], Negation):
            N = bindings[args.negation]
        else:
            N = negation_by_name(args.negation)
    if args.tnorm:
        if args.tnorm in bindings and isinstance(bindings[args.tnorm], ContinuousTNorm):
            T = bindings[args.tnorm]
        else:
            T = tnorm(args.tnorm)
    r = DEFAULT_R_VALUES
    if args.r_values:
        try:
            r = tuple(float(v) for v in args.r_values.split(","))
        except ValueError:
            raise UsageError(f"--r-values must be comma-separated numbers, got {args.r_values!r}") from None
    return PropertyContext(N=N, T=T, r_values=r)


def _witness_text(w):
    return ", ".join(f"{k}={v!r}" for k, v in w.items())


def cmd_verify(args):
    b, obj = _binding(args)
    ctx = _context(args, b)
    grid, tol = _grid(args), _tol(args)
    for p in args.properties:
        if p not in PROPERTIES:
            raise UsageError(f"unknown property {p!r}; known: {', '.join(PROPERTIES)}")
        if args.sufficiency and p not in PROPOSITIONS:
            raise UsageError(f"no sufficient condition is checked for {p}")
    if args.sufficiency and not isinstance(obj, Construction):
        raise UsageError("--sufficiency needs a construction binding")

    records, lines, ok = [], [], True
    for p in args.properties:
        if args.sufficiency:
            s = check_sufficiency(p, obj, ctx, grid, tol)
            rep = s.conclusion_checked
            records.append(s.to_dict())
            lines.append(f"{p}: {s.proposition}")
            for h in s.hypotheses:
                lines.append(f"  [{h.status}] {h.condition}" + (f" ({h.detail})" if h.detail else ""))
        else:
            rep = check_property(obj, p, grid, ctx, tol)
            records.append(rep.to_dict())
        ok &= rep.holds
        lines.append(f"{p}: {rep.verdict} ({rep.violation_count} violations, "
                     f"grid {rep.grid_resolution}, tolerance {rep.tolerance:g})")
        lines += [f"  witness {_witness_text(w)}" for w in rep.witnesses]
    _emit(args, {"subject": args.name, "all_hold": ok, "reports": records}, "\n".join(lines))
    return OK if ok else VIOLATED


def cmd_compare(args):
    _, m = _binding(args, ("method",))
    if not isinstance(m, MethodInstance):
        raise UsageError(f"{args.name!r} is not a method instance")
    rep = check_equivalence(m, _grid(args), _tol(args))
    text = (f"{rep.name} [{rep.method_kind}]: max deviation {rep.deviation:.3e} at "
            f"(x, y) = ({rep.worst_point[0]:.17g}, {rep.worst_point[1]:.17g}); "
            f"{'equivalent' if rep.holds else 'exceeded'} (tolerance {rep.tolerance:g}, grid {rep.resolution})")
    _emit(args, rep.to_dict(), text)
    return OK if rep.holds else VIOLATED


def export_rows(obj, grid):
    X, Y = grid.mesh()
    V = obj(X, Y)
    yield "x,y,value\n"
    for x, y, v in zip(X.ravel(), Y.ravel(), V.ravel()):
        yield f"{x:.17g},{y:.17g},{v:.17g}\n"


def cmd_export(args):
    _, obj = _binding(args)
    grid = _grid(args)
    text = "".join(export_rows(obj, grid))
    if args.out == "-":
        sys.stdout.write(text)
        return OK
    try:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    except OSError as exc:
        raise UsageError(f"{args.out}: cannot write: {exc.strerror or exc}") from None
    if args.json:
        print(json.dumps({"name": args.name, "out": args.out, "rows": grid.resolution ** 2,
                          "grid_resolution": grid.resolution}, sort_keys=True))
    return OK


def catalog_listing() -> dict:
    Nc = negation_by_name("Nc")
    aggs = {}
    for kind in ("max", "min", "product", "weighted_mean", "maxmin_mean"):
        F = agg.builtin(kind, 3, weights=[0.5, 0.3, 0.2])
        notes = []
        if F.has_unit_multipliers:
            notes.append("unit multipliers")
        if F.has_zero_multipliers:
            notes.append("zero multipliers")
        if is_self_n_dual(F, Nc):
            notes.append("self-Nc-dual")
        aggs[kind] = sorted(notes)
    negs = {}
    for key in sorted(NEGATIONS):
        N = negation_by_name(key)
        negs[key] = {"name": N.name, "strong": N.is_strong}
    return {
        "implications": {n: sorted(catalog(n).flags) for n in sorted(CATALOG_NAMES)},
        "aggregators": aggs,
        "chains": sorted(["identity", "power(k)", "sin2", "smoothstep", "blend(a)", "example_1ii",
                          "threshold(e...)"]),
        "negations": negs,
        "tnorms": sorted(TNORM_KINDS),
    }


def is_self_n_dual(F, N):
    return agg.is_self_n_dual(F, N).holds


def cmd_catalog(args):
    data = catalog_listing()
    lines = ["implications:"]
    lines += [f"  {n:<9} {', '.join(f) or '-'}" for n, f in data["implications"].items()]
    lines.append("aggregators (annotations for arity 3):")
    lines += [f"  {n:<13} {', '.join(a) or '-'}" for n, a in data["aggregators"].items()]
    lines.append("chains:")
    lines += [f"  {c}" for c in data["chains"]]
    lines.append("negations:")
    lines += [f"  {k:<13} {v['name']}{' (strong)' if v['strong'] else ''}" for k, v in data["negations"].items()]
    lines.append("tnorms:")
    lines += [f"  {t}" for t in data["tnorms"]]
    _emit(args, data, "\n".join(lines))
    return OK


def cmd_check(args):
    doc, b = _load(args)
    _emit(args, {"file": args.file, "declarations": [{"name": n, "kind": b.kinds[n]} for n in b.names()]},
          f"{args.file}: ok, {len(doc.decls)} declarations")
    return OK


def cmd_fchain(args):
    b, c = _binding(args, ("chain",))
    if args.aggregator not in b or b.kinds[args.aggregator] != "aggregator":
        raise UsageError(f"{args.aggregator!r} is not an aggregator binding in {args.file}")
    if args.samples < 2:
        raise UsageError(f"--samples must be at least 2, got {args.samples}")
    v = is_f_chain(c, b[args.aggregator], make_grid(args.samples), _tol(args))
    text = (f"{args.name} w.r.t. {args.aggregator}: {'F-chain' if v.holds else 'not an F-chain'}, "
            f"worst |F(c(t)) - t| = {v.deviation:.3e}" + ("" if v.holds else f" at t = {v.witness}"))
    _emit(args, {"chain": args.name, "aggregator": args.aggregator, "holds": v.holds,
                 "deviation": v.deviation, "witness": v.witness}, text)
    return OK if v.holds else VIOLATED


def cmd_tables(args):
    which = ("table1", "table2") if args.which == "all" else (args.which,)
    reports = [reproduce_table(w, _grid(args)) for w in which]
    _emit(args, {"tables": [r.to_dict() for r in reports]}, "\n".join(r.render() for r in reports).rstrip())
    return OK if all(r.passed for r in reports) else VIOLATED


def cmd_battery(args):
    results = []
    if args.which in ("theorem", "all"):
        results.append(run_theorem_battery(args.count or 200, args.seed or 20240601))
    if args.which in ("propositions", "all"):
        for name in PROPOSITION_GENERATORS:
            results.append(run_proposition_battery(name, args.count or 50, args.seed or 7))
    _emit(args, {"batteries": [{"name": r.name, "count": r.count, "failures": len(r.failures),
                                "not_established": len(r.not_established), "passed": r.passed}
                               for r in results]},
          "\n".join(r.summary() for r in results))
    return OK if all(r.passed for r in results) else VIOLATED


# -- argument parsing --------------------------------------------------------

def _global_flags() -> argparse.ArgumentParser:
    # a fresh parser per use: parents share action objects, so one copy would
    # let the top-level defaults leak into every subcommand
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--resolution", type=int, default=argparse.SUPPRESS,
                        help="grid points per axis (default 101)")
    common.add_argument("--tolerance", type=float, default=argparse.SUPPRESS,
                        help="equality tolerance (default 1e-12)")
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="machine-readable output")
    return common


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="fimpl", parents=[_global_flags()],
                                description="Evaluate and check fuzzy implication constructions.")
    p.set_defaults(resolution=101, tolerance=1e-12, json=False)
    sub = p.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def cmd(name, fn, help_):
        s = sub.add_parser(name, parents=[_global_flags()], help=help_, description=help_)
        s.set_defaults(func=fn)
        return s

    s = cmd("eval", cmd_eval, "evaluate a binding at one point")
    s.add_argument("file")
    s.add_argument("name")
    s.add_argument("x", type=float)
    s.add_argument("y", type=float)

    s = cmd("verify", cmd_verify, "check properties on the grid")
    s.add_argument("file")
    s.add_argument("name")
    s.add_argument("properties", nargs="+", metavar="PROPERTY", help=", ".join(PROPERTIES))
    s.add_argument("--negation", help="builtin negation or a negation binding (CP, LCP, RCP, NATNEG)")
    s.add_argument("--tnorm", help="t-norm kind or binding (PIT)")
    s.add_argument("--r-values", help="comma-separated t-norm power exponents for PIT")
    s.add_argument("--sufficiency", action="store_true",
                   help="also check the sufficient condition of each property on a construction")

    s = cmd("compare", cmd_compare, "compare a method's closed form against its construction")
    s.add_argument("file")
    s.add_argument("name")

    s = cmd("export", cmd_export, "write grid values as CSV")
    s.add_argument("file")
    s.add_argument("name")
    s.add_argument("-o", "--out", required=True, help="output path, or - for standard output")

    cmd("catalog", cmd_catalog, "list builtin operators and their flags")

    s = cmd("check", cmd_check, "parse and validate a file")
    s.add_argument("file")

    s = cmd("fchain", cmd_fchain, "test whether a chain is an F-chain")
    s.add_argument("file")
    s.add_argument("name", help="chain binding")
    s.add_argument("aggregator", help="aggregator binding")
    s.add_argument("--samples", type=int, default=1001, help="sample count on [0, 1] (default 1001)")

    s = cmd("tables", cmd_tables, "reproduce the sufficient-condition tables")
    s.add_argument("which", nargs="?", default="all", choices=("table1", "table2", "all"))

    s = cmd("battery", cmd_battery, "run the randomized batteries")
    s.add_argument("which", nargs="?", default="all", choices=("theorem", "propositions", "all"))
    s.add_argument("--count", type=int)
    s.add_argument("--seed", type=int)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE if exc.code not in (0, None) else OK
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"fimpl {args.command}: {exc}", file=sys.stderr)
        return USAGE
    except (InvalidArgument, ValueError) as exc:
        print(f"fimpl {args.command}: {exc}", file=sys.stderr)
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
