"""Command-line front end: `alpv <subcommand>`.

Exit status: 0 on success, 1 on a domain error (dimension mismatch, missing
isomorphism, horizon too short, ...), 2 on usage or file errors.  Outputs
are deterministic: identical inputs and flags give byte-identical files.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from . import fileio
from .errors import ALPVError
from .hankel import build_hankel
from .ioeq import check_equation
from .linalg import ToleranceConfig
from .markov import markov_table
from .model import simulate
from .realize import analyze, find_isomorphism, kalman_ho, minimize
from .switched import embed_switched_input

SYSTEM_SCHEMA = 'system JSON: {"schema","D","n","m","p","A":[D][n][n],"B":[D][n][m],"C":[D][p][n]}'
SIGNAL_SCHEMA = "signal CSV: header p_1..p_D,u_1..u_m, one row per time step"
TABLE_SCHEMA = 'markov JSON: {"schema","D","m","p","horizon","entries":[{"word","S":[p][m]},...]}'
HANKEL_SCHEMA = "hankel CSV: dense matrix; sidecar <path>.meta.json holds {L,M,D,m,p}"
EQUATION_SCHEMA = (
    'equation JSON: {"schema","n","m","D","Q":[poly],"L":[[poly]]}, '
    'poly = [{"coeff": real, "exps": {"P_<i>_<j>": exponent}}]'
)
SWITCHED_SCHEMA = "switched CSV: header mode,u_1..u_m, one row per time step"
OUTPUT_SCHEMA = "outputs CSV: header y_1..y_p, one row per time step"


def _load(loader, path, kind):
    try:
        return loader(path)
    except OSError:
        raise
    except (ValueError, json.JSONDecodeError) as exc:
        raise ValueError(f"{kind} file {path}: {exc}") from exc


def _tol(args) -> ToleranceConfig:
    return ToleranceConfig(rel_eps=args.tol)


def _emit_json(args, payload: dict) -> None:
    text = fileio.dumps_json(payload) + "\n"
    sys.stdout.write(text)
    if getattr(args, "output", None):
        fileio.write_text(args.output, text)


def cmd_sim(args) -> int:
    system = _load(fileio.load_system, args.system, "system")
    signal = _load(fileio.load_signal, args.signal, "signal")
    result = simulate(system, np.zeros(system.n), signal)
    fileio.save_outputs(args.output, result.outputs)
    return 0


def cmd_markov(args) -> int:
    system = _load(fileio.load_system, args.system, "system")
    fileio.save_table(args.output, markov_table(system, args.horizon))
    return 0


def cmd_hankel(args) -> int:
    if args.from_system:
        source = _load(fileio.load_system, args.from_system, "system")
    else:
        source = _load(fileio.load_table, args.from_table, "markov table")
    fileio.save_hankel(args.output, build_hankel(source, args.L, args.M))
    return 0


def cmd_realize(args) -> int:
    if args.from_hankel:
        H = _load(fileio.load_hankel, args.from_hankel, "hankel")
    else:
        if args.L is None:
            raise ValueError("--from-system requires --L")
        system = _load(fileio.load_system, args.from_system, "system")
        H = build_hankel(system, args.L, args.L + 1)
    fileio.save_system(args.output, kalman_ho(H, _tol(args)))
    return 0


def cmd_minimize(args) -> int:
    system = _load(fileio.load_system, args.system, "system")
    fileio.save_system(args.output, minimize(system, _tol(args)))
    return 0


def cmd_analyze(args) -> int:
    system = _load(fileio.load_system, args.system, "system")
    report = analyze(system, _tol(args))
    _emit_json(args, fileio.report_to_dict(report))
    return 0


def cmd_iso(args) -> int:
    sys1 = _load(fileio.load_system, args.system1, "system")
    sys2 = _load(fileio.load_system, args.system2, "system")
    T = find_isomorphism(sys1, sys2, _tol(args), residual_tol=args.residual_tol)
    text = "".join(
        ",".join(fileio.format_float(x) for x in row) + "\n" for row in np.atleast_2d(T)
    )
    sys.stdout.write(text)
    if args.output:
        fileio.write_text(args.output, text)
    return 0


def cmd_ioeq_check(args) -> int:
    equation = _load(fileio.load_equation, args.equation, "equation")
    system = _load(fileio.load_system, args.system, "system")
    report = check_equation(equation, system, trials=args.trials, seed=args.seed, tol=args.tol)
    _emit_json(args, fileio.check_report_to_dict(report, args.trials, args.seed, args.tol))
    return 0


def cmd_switched_sim(args) -> int:
    system = _load(fileio.load_system, args.system, "system")
    sw = _load(lambda path: fileio.load_switched(path, system.D), args.switched, "switched input")
    result = simulate(system, np.zeros(system.n), embed_switched_input(sw))
    fileio.save_outputs(args.output, result.outputs)
    return 0


def _add_tol(parser, help_text="relative singular-value tolerance for rank decisions"):
    parser.add_argument("--tol", type=float, default=1e-10, help=help_text)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="alpv",
        description="Realization tools for affine linear parameter-varying systems.",
    )
    sub = parser.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser(
        "sim",
        help="simulate a system on a signal file",
        epilog=f"{SYSTEM_SCHEMA}\n{SIGNAL_SCHEMA}\n{OUTPUT_SCHEMA}",
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    p.add_argument("system")
    p.add_argument("signal")
    p.add_argument("-o", "--output", required=True, help="outputs CSV path")
    p.set_defaults(handler=cmd_sim)

    p = sub.add_parser(
        "markov",
        help="kernel coefficient table of a system",
        epilog=f"{SYSTEM_SCHEMA}\n{TABLE_SCHEMA}",
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    p.add_argument("system")
    p.add_argument("--horizon", type=int, required=True, help="max word length (>= 1)")
    p.add_argument("-o", "--output", required=True, help="table JSON path")
    p.set_defaults(handler=cmd_markov)

    p = sub.add_parser(
        "hankel",
        help="assemble a finite Hankel sub-matrix",
        epilog=f"{SYSTEM_SCHEMA}\n{TABLE_SCHEMA}\n{HANKEL_SCHEMA}",
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--from-system", metavar="PATH")
    group.add_argument("--from-table", metavar="PATH")
    p.add_argument("--L", type=int, required=True, help="block-row word-length bound")
    p.add_argument("--M", type=int, required=True, help="block-column word-length bound")
    p.add_argument("-o", "--output", required=True, help="hankel CSV path (sidecar is added)")
    p.set_defaults(handler=cmd_hankel)

    p = sub.add_parser(
        "realize",
        help="Kalman-Ho realization from a Hankel sub-matrix",
        epilog=f"{HANKEL_SCHEMA}\n{SYSTEM_SCHEMA}",
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--from-hankel", metavar="PATH")
    group.add_argument("--from-system", metavar="PATH")
    p.add_argument("--L", type=int, help="row bound when building from a system (M = L+1)")
    _add_tol(p)
    p.add_argument("-o", "--output", required=True, help="system JSON path")
    p.set_defaults(handler=cmd_realize)

    p = sub.add_parser(
        "minimize",
        help="reachability + observability reduction to a minimal system",
        epilog=SYSTEM_SCHEMA,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    p.add_argument("system")
    _add_tol(p)
    p.add_argument("-o", "--output", required=True, help="system JSON path")
    p.set_defaults(handler=cmd_minimize)

    p = sub.add_parser(
        "analyze",
        help="reachability/observability ranks and minimality flags",
        epilog=SYSTEM_SCHEMA,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    p.add_argument("system")
    _add_tol(p)
    p.add_argument("-o", "--output", help="also write the report JSON here")
    p.set_defaults(handler=cmd_analyze)

    p = sub.add_parser(
        "iso",
        help="state isomorphism between two minimal systems",
        epilog=f"{SYSTEM_SCHEMA}\noutput: the transformation as CSV on stdout",
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    p.add_argument("system1")
    p.add_argument("system2")
    _add_tol(p)
    p.add_argument(
        "--residual-tol",
        type=float,
        default=1e-7,
        help="max allowed relative defect of the isomorphism relations",
    )
    p.add_argument("-o", "--output", help="also write the CSV here")
    p.set_defaults(handler=cmd_iso)

    p = sub.add_parser(
        "ioeq-check",
        help="randomized check of an affine polynomial input-output equation",
        epilog=f"{EQUATION_SCHEMA}\n{SYSTEM_SCHEMA}",
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    p.add_argument("equation")
    p.add_argument("system")
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=42)
    _add_tol(p, help_text="residual tolerance relative to 1 + max |y|")
    p.add_argument("-o", "--output", help="also write the report JSON here")
    p.set_defaults(handler=cmd_ioeq_check)

    p = sub.add_parser(
        "switched-sim",
        help="simulate a system on a switched (one mode per step) input",
        epilog=f"{SYSTEM_SCHEMA}\n{SWITCHED_SCHEMA}\n{OUTPUT_SCHEMA}",
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    p.add_argument("system")
    p.add_argument("switched")
    p.add_argument("-o", "--output", required=True, help="outputs CSV path")
    p.set_defaults(handler=cmd_switched_sim)

    return parser


def run(argv) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.handler(args)
    except ALPVError as exc:
        print(f"error: {args.cmd}: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    except (OSError, ValueError, json.JSONDecodeError) as exc:
        print(f"error: {args.cmd}: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
