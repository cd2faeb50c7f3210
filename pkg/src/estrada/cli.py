"""Command line entry point.

Exit codes: 0 success, 1 some input lines failed to parse, 2 usage or input
error, 3 bound violations found.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import harness
from .bounds import EQUALITY_RTOL, HOLDS_RTOL, VARIANTS, evaluate_all, evaluate_matrix
from .eigen import parse_matrix_text
from .errors import EstradaError, InvalidFamilyParam
from .graph import FAMILIES, FamilySpec, generate
from .graph6 import encode_graph6
from .invariants import compute_invariants

EXIT_OK, EXIT_PARTIAL, EXIT_USAGE, EXIT_VIOLATION = 0, 1, 2, 3


class UsageError(Exception):
    pass


def parse_range(text: str) -> list[int]:
    """``"7"`` -> ``[7]``; ``"3..5"`` -> ``[3, 4, 5]``."""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            lo, hi = int(lo), int(hi)
            if hi < lo:
                raise UsageError(f"empty range {text!r}")
            return list(range(lo, hi + 1))
        return [int(text)]
    except ValueError:
        raise UsageError(f"not an integer or range: {text!r}") from None


class Emitter:
    def __init__(self, fmt: str, columns, out):
        self.fmt, self.columns, self.out = fmt, columns, out
        if fmt == "csv":
            out.write(",".join(columns) + "\n")

    def __call__(self, record: dict):
        if self.fmt == "csv":
            self.out.write(harness.csv_line(record.get(c) for c in self.columns) + "\n")
        else:
            self.out.write(harness.json_line(record) + "\n")


def _open_inputs(paths):
    if not paths or paths == ["-"]:
        yield from sys.stdin
        return
    for p in paths:
        try:
            with open(p) as fh:
                yield from fh
        except OSError as exc:
            raise UsageError(f"cannot read {p}: {exc}") from None


def _warn(msg):
    print(f"warning: {msg}", file=sys.stderr)


def cmd_gen(args, out):
    if args.family not in FAMILIES:
        raise UsageError(f"unknown family {args.family!r}; choose from {', '.join(FAMILIES)}")
    ranges = [parse_range(p) for p in args.params]
    combos = [()]
    for r in ranges:
        combos = [c + (v,) for c in combos for v in r]
    try:
        graphs = [generate(FamilySpec(args.family, c)) for c in combos]
    except InvalidFamilyParam as exc:
        raise UsageError(str(exc)) from None
    for g in graphs:
        out.write(encode_graph6(g) + "\n")
    return EXIT_OK


def cmd_invariants(args, out):
    emit = Emitter(args.format, harness.INVARIANT_COLUMNS, out)
    skipped = 0
    for lineno, g, err in harness.read_graph6_lines(_open_inputs(args.inputs)):
        if err is not None:
            _warn(f"line {lineno}: {err}")
            skipped += 1
            continue
        emit(harness.invariant_record(encode_graph6(g), compute_invariants(g)))
    return EXIT_PARTIAL if skipped else EXIT_OK


def cmd_bounds(args, out):
    columns = harness.BOUND_COLUMNS
    emit = Emitter(args.format, columns, out)
    skipped = 0
    for lineno, g, err in harness.read_graph6_lines(_open_inputs(args.inputs)):
        if err is not None:
            _warn(f"line {lineno}: {err}")
            skipped += 1
            continue
        report = evaluate_all(g, args.variant, args.holds_tol, args.eq_tol)
        for o in report.violations():
            label = "diagnostic" if o.diagnostic else "VIOLATION"
            _warn(f"{report.graph6}: {o.bound_id} {label} (gap {o.gap:.6g})")
        if args.format == "csv":
            for o in report.outcomes:
                emit(harness.outcome_record(report.graph6, o))
        else:
            out.write(harness.json_line(harness.report_json(report)) + "\n")
    return EXIT_PARTIAL if skipped else EXIT_OK


def cmd_compare(args, out):
    families = args.families or list(harness.COMPARE_FAMILIES)
    for f in families:
        if f not in harness.COMPARE_FAMILIES:
            raise UsageError(f"unknown comparison family {f!r}; choose from {', '.join(harness.COMPARE_FAMILIES)}")
    ns = parse_range(args.n)

    def overflow(family, n, exc):
        print(f"{family}: stopping at n={n}: {exc}", file=sys.stderr)

    rows = harness.compare(families, ns, with_ee=not args.no_ee, on_overflow=overflow)
    emit = Emitter(args.format, harness.COMPARE_COLUMNS, out)
    for row in rows:
        emit(row.as_dict())
    return EXIT_OK


def cmd_scan(args, out):
    errors = 0
    if args.exhaustive is not None:
        n = args.exhaustive
        if not 1 <= n <= harness.MAX_EXHAUSTIVE_N:
            raise UsageError(f"--exhaustive supports 1..{harness.MAX_EXHAUSTIVE_N}, got {n}")
        if n > 6:
            _warn(f"exhaustive n={n} enumerates 2^{n * (n - 1) // 2} graphs; this is slow")
        graphs = list(harness.exhaustive_graphs(n))
    elif args.random is not None:
        graphs = list(harness.random_graphs(args.random, args.max_n, seed=args.seed))
    else:
        graphs = []
        for lineno, g, err in harness.read_graph6_lines(_open_inputs(args.inputs)):
            if err is not None:
                _warn(f"line {lineno}: {err}")
                errors += 1
            else:
                graphs.append(g)

    summary = harness.scan(graphs, args.variant, args.holds_tol, args.eq_tol, jobs=args.jobs)
    emit = Emitter(args.format, harness.SCAN_COLUMNS, out)
    for rec in summary.records():
        emit(rec.as_dict())
    hard = summary.hard_violations
    print(
        f"scanned {summary.graphs_scanned} graphs: {len(hard)} violations, "
        f"{len(summary.violations) - len(hard)} diagnostics, "
        f"{len(summary.equalities)} equalities ({summary.duration:.2f} s)",
        file=sys.stderr,
    )
    if hard:
        return EXIT_VIOLATION
    return EXIT_PARTIAL if errors else EXIT_OK


def cmd_matrix(args, out):
    try:
        text = Path(args.path).read_text() if args.path != "-" else sys.stdin.read()
    except OSError as exc:
        raise UsageError(f"cannot read {args.path}: {exc}") from None
    try:
        m = parse_matrix_text(text)
    except EstradaError as exc:
        raise UsageError(str(exc)) from None
    rep = evaluate_matrix(m, args.holds_tol, args.eq_tol)
    if not rep.nonnegative:
        _warn("matrix has negative entries: row-sum bracket skipped, bound not applicable")
    b = rep.bound
    record = {
        "n": rep.n,
        "EE": rep.EE,
        "trace": rep.trace,
        "r": rep.r,
        "R": rep.R,
        "rho1": rep.rho1,
        "bracket": "skipped" if rep.bracket_holds is None else rep.bracket_holds,
        "bound": b.value,
        "applicable": b.applicable,
        "holds": b.holds,
        "equality": b.equality,
    }
    Emitter(args.format, list(record), out)(record)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="estrada", description="Estrada index, graph energy and their bounds.")
    sub = parser.add_subparsers(dest="command", required=True)

    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("csv", "json"), default="csv")

    tol = argparse.ArgumentParser(add_help=False)
    tol.add_argument("--variant", choices=VARIANTS, default="corrected", help="sign of ln(lambda1) in Das-type bounds")
    tol.add_argument("--holds-tol", type=float, default=HOLDS_RTOL, help="relative tolerance for 'holds'")
    tol.add_argument("--eq-tol", type=float, default=EQUALITY_RTOL, help="relative tolerance for 'equality'")

    p = sub.add_parser("gen", help="generate family members as graph6")
    p.add_argument("family")
    p.add_argument("params", nargs="+", help="integer or range a..b per family parameter")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("invariants", parents=[fmt], help="spectral invariants of graph6 input")
    p.add_argument("inputs", nargs="*", help="graph6 files (default: stdin)")
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("bounds", parents=[fmt, tol], help="evaluate every bound on graph6 input")
    p.add_argument("inputs", nargs="*")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("compare", parents=[fmt], help="J versus CP on star, path, complete and cycle graphs")
    p.add_argument("families", nargs="*")
    p.add_argument("--n", default="2..20", help="vertex count or range a..b")
    p.add_argument("--no-ee", action="store_true", help="skip the eigensolve for the EE column")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("scan", parents=[fmt, tol], help="sweep a corpus for bound violations and equalities")
    p.add_argument("inputs", nargs="*")
    src = p.add_mutually_exclusive_group()
    src.add_argument("--exhaustive", type=int, metavar="N", help="all labeled graphs on N vertices")
    src.add_argument("--random", type=int, metavar="COUNT", help="random graphs with n <= --max-n")
    p.add_argument("--max-n", type=int, default=12)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("matrix", parents=[fmt], help="row-sum bounds for a symmetric matrix file")
    p.add_argument("path")
    p.add_argument("--holds-tol", type=float, default=HOLDS_RTOL)
    p.add_argument("--eq-tol", type=float, default=EQUALITY_RTOL)
    p.set_defaults(func=cmd_matrix)
    return parser


def main(argv=None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args, out)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except EstradaError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
