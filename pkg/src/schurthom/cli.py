"""Command-line interface: solve, closed, verify, schur, staircase."""

from __future__ import annotations

import argparse
import sys

from . import closed_forms
from .algebra import ExactSolveError
from .alphabets import Alphabet, diff, letter
from .catalog import (
    UnsupportedSingularityError,
    codim,
    restriction_system,
    singularity,
)
from .golden import (
    GoldenTableError,
    builtin_names,
    diff_expansions,
    load_golden,
    reference_expansion,
)
from .partitions import Partition
from .render import expansion_json_text, expansion_text, partition_text
from .schur import schur
from .solver import SolveTimeout, solve

_CLOSED_FAMILIES = ("A1", "A2", "A3", "I22", "III23", "Fir", "porteous")
_SOLVER_FAMILIES = ("I22", "A3", "III23", "III33", "I23")


def _emit(expansion, name, r, fmt):
    weight = expansion.common_weight()
    if fmt == "json":
        print(expansion_json_text(expansion, name, r, weight if weight is not None else -1))
    else:
        print(expansion_text(expansion))


def _cmd_solve(args):
    try:
        sing = singularity(args.singularity, args.r)
    except UnsupportedSingularityError as e:
        print("error: %s" % e, file=sys.stderr)
        return 2
    if sing.name in ("A1", "A2"):
        builder = closed_forms.thom_a1 if sing.name == "A1" else closed_forms.thom_a2
        expansion = builder(args.r)
        _emit(expansion, sing.name, args.r, args.format)
        if args.format == "text":
            print("# closed form", file=sys.stderr)
        return 0
    if sing.name not in _SOLVER_FAMILIES:
        print("error: no restriction system cataloged for %s" % sing.name, file=sys.stderr)
        return 2
    try:
        report = solve(
            sing,
            use_second_row_cap=not args.no_second_row_cap,
            budget_seconds=args.budget,
        )
    except SolveTimeout as e:
        print("error: %s" % e, file=sys.stderr)
        return 3
    except ExactSolveError as e:
        print("error: %s: %s" % (type(e).__name__, e), file=sys.stderr)
        return 1
    _emit(report.expansion, sing.name, args.r, args.format)
    if args.format == "text":
        print(
            "# %d unknowns, %d equations, rank %d, %.2fs"
            % (report.candidates_considered, report.equations_used, report.rank, report.wall_time),
            file=sys.stderr,
        )
    return 0


def _cmd_closed(args):
    family = args.family
    try:
        if family == "A1":
            expansion = closed_forms.thom_a1(args.r)
        elif family == "A2":
            expansion = closed_forms.thom_a2(args.r)
        elif family == "A3":
            expansion = closed_forms.thom_a3(args.r)
        elif family == "I22":
            expansion = closed_forms.thom_i22(args.r)
        elif family == "III23":
            expansion = closed_forms.thom_iii23(args.r)
        elif family == "Fir":
            if args.i is None:
                print("error: Fir needs --i", file=sys.stderr)
                return 2
            expansion = closed_forms.morin_one_part(args.i, args.r)
        elif family == "porteous":
            if args.i is None or args.offset is None:
                print("error: porteous needs --i and --offset", file=sys.stderr)
                return 2
            expansion = closed_forms.thom_porteous(args.i, args.offset)
        else:
            print("error: unsupported family %r (choose from %s)"
                  % (family, ", ".join(_CLOSED_FAMILIES)), file=sys.stderr)
            return 2
    except ValueError as e:
        print("error: %s" % e, file=sys.stderr)
        return 2
    _emit(expansion, family, args.r, args.format)
    return 0


def _cmd_verify(args):
    try:
        table = load_golden(args.table, allow_suspect=args.allow_suspect)
    except GoldenTableError as e:
        print("error: %s" % e, file=sys.stderr)
        return 2
    sing = table.singularity
    try:
        reference, how = reference_expansion(sing, budget_seconds=args.budget)
    except SolveTimeout as e:
        print("error: %s" % e, file=sys.stderr)
        return 3
    mismatch = diff_expansions(reference, table.expansion)
    if mismatch is None:
        print("PASS %s: %r, %d terms agree (%s)" % (args.table, sing, len(table.expansion), how))
        return 0
    p, computed, stored = mismatch
    print(
        "FAIL %s: partition %s has computed coefficient %d, table says %d"
        % (args.table, partition_text(p), computed, stored)
    )
    return 1


def _cmd_schur(args):
    try:
        parts = [int(v) for v in args.partition.split(",") if v]
        plus = Alphabet([letter(v) for v in args.plus.split(",") if v]) if args.plus else Alphabet()
        minus = Alphabet([letter(v) for v in args.minus.split(",") if v]) if args.minus else Alphabet()
    except (ValueError, KeyError) as e:
        print("error: %s" % e, file=sys.stderr)
        return 2
    value = schur(Partition(parts), diff(plus, minus))
    print(value)
    return 0


def _cmd_staircase(args):
    try:
        if args.preset == "i22":
            stairs = closed_forms.doubling_staircase(args.rows)
        elif args.preset == "a3":
            stairs = closed_forms.a3_staircase(args.rows)
        elif args.seed:
            seed = [int(v) for v in args.seed.split(",") if v]
            stairs = closed_forms.staircase(seed, args.rows if args.rows else len(seed))
        else:
            print("error: provide --seed or --preset", file=sys.stderr)
            return 2
    except ValueError as e:
        print("error: %s" % e, file=sys.stderr)
        return 2
    width = (stairs.rows + 1) // 2
    for s in range(1, stairs.rows + 1):
        print("  ".join(str(stairs.entry(s, t)) for t in range(1, width + 1)))
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="schurthom",
        description="Exact Schur-function expansions of Thom polynomials",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="solve the restriction equations for a singularity")
    p.add_argument("singularity", help="A1, A2, A3, I22, I23, III23, or III33")
    p.add_argument("--r", type=int, required=True, help="shifted parameter r = k + 1")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--no-second-row-cap", action="store_true",
                   help="disable the III33 second-row candidate cap")
    p.add_argument("--budget", type=float, default=900.0, help="wall-time budget in seconds")
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("closed", help="evaluate a closed-form expansion")
    p.add_argument("family", help=", ".join(_CLOSED_FAMILIES))
    p.add_argument("--r", type=int, default=1)
    p.add_argument("--i", type=int, default=None)
    p.add_argument("--offset", type=int, default=None)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=_cmd_closed)

    p = sub.add_parser("verify", help="recompute a golden table and diff term sets")
    p.add_argument("table", help="builtin name (%s) or a file path" % ", ".join(builtin_names()))
    p.add_argument("--budget", type=float, default=900.0)
    p.add_argument("--allow-suspect", action="store_true")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("schur", help="evaluate one Schur function of a difference")
    p.add_argument("--partition", required=True, help="comma-separated parts, e.g. 2,3")
    p.add_argument("--plus", default="", help="comma-separated letters, e.g. 2x,3x")
    p.add_argument("--minus", default="", help="comma-separated letters, e.g. 5x,6x,b1")
    p.set_defaults(func=_cmd_schur)

    p = sub.add_parser("staircase", help="print a Pascal staircase")
    p.add_argument("--seed", default="", help="comma-separated first column")
    p.add_argument("--preset", choices=("i22", "a3"), default=None)
    p.add_argument("--rows", type=int, default=0)
    p.set_defaults(func=_cmd_staircase)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
