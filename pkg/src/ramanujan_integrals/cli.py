"""Command-line front end.

Commands: ``eval`` (J_n(a) by quadrature), ``approx`` (closed-form
approximant), ``bound`` (remainder bound, optionally with the large-k
estimate), ``table`` (reference-table reproduction) and ``verify`` (identity
suite).  Output formats: text (15 significant digits), csv, json.

Exit codes: 0 success, 1 parse or domain error, 2 identity-suite failure.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

from .approximants import (
    bound_asymptotic,
    bound_even,
    bound_odd,
    drz_approx,
    t_even,
    t_odd,
)
from .quadrature import AccuracyError, IntegralParams, j_integral
from .verify import TolProfile, reproduce_table, run_suite

__all__ = ["main", "entrypoint"]

_USAGE_HINT = "run 'ramint <command> --help' for usage"


class _CliError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on bad flags; route through _CliError so
    # main() can keep exit code 1 for parse problems and 2 for suite failure.
    def error(self, message: str):
        raise _CliError(message)


def _float_positive(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}")
    if not (value > 0.0 and math.isfinite(value)):
        raise argparse.ArgumentTypeError(f"must be positive and finite: {text}")
    return value


def _build_parser() -> _Parser:
    parser = _Parser(prog="ramint", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_index_args(p: _Parser) -> None:
        p.add_argument("--n", type=int, help="full index n (parity inferred)")
        p.add_argument("--k", type=int, help="half index k, used with --parity")
        p.add_argument("--parity", choices=("even", "odd"), help="parity for --k")
        p.add_argument("--a", type=_float_positive, required=True, help="scale a > 0")
        p.add_argument("--tol", type=_float_positive, default=1e-13)
        add_output_args(p)

    def add_output_args(p: _Parser) -> None:
        p.add_argument("--format", choices=("text", "csv", "json"), default="text")
        p.add_argument("--out", help="write output to this path instead of stdout")

    add_index_args(sub.add_parser("eval", help="J_n(a) by quadrature"))
    p_approx = sub.add_parser("approx", help="closed-form approximant T_n(a)")
    add_index_args(p_approx)
    p_approx.add_argument(
        "--method",
        choices=("t", "drz"),
        default="t",
        help="t: exact-remainder approximant; drz: quartic-root formula (even n)",
    )
    p_bound = sub.add_parser("bound", help="remainder bound B_n(a)")
    add_index_args(p_bound)
    p_bound.add_argument(
        "--estimate", action="store_true", help="also print the large-k estimate"
    )
    p_table = sub.add_parser("table", help="reproduce a reference table")
    p_table.add_argument("--id", type=int, required=True, choices=(1, 2, 3))
    p_table.add_argument("--tol", type=_float_positive, default=1e-13)
    add_output_args(p_table)
    p_verify = sub.add_parser("verify", help="run the identity suite")
    p_verify.add_argument("--tol", type=_float_positive, default=1e-13)
    add_output_args(p_verify)
    return parser


def _resolve_index(args) -> int:
    if args.n is not None:
        if args.k is not None or args.parity is not None:
            raise _CliError("give either --n or --k with --parity, not both")
        if args.n < 0:
            raise _CliError("--n must be non-negative")
        return args.n
    if args.k is None or args.parity is None:
        raise _CliError("missing index: give --n, or --k with --parity")
    if args.k < 0:
        raise _CliError("--k must be non-negative")
    return 2 * args.k if args.parity == "even" else 2 * args.k + 1


def _emit(text: str, out_path: str | None) -> None:
    if out_path is None:
        sys.stdout.write(text)
    else:
        with open(out_path, "w", newline="") as handle:
            handle.write(text)


def _scalar_output(fmt: str, fields: dict) -> str:
    if fmt == "json":
        return json.dumps(fields) + "\n"
    keys = list(fields)
    row = ",".join(_csv_cell(fields[key]) for key in keys)
    return ",".join(keys) + "\n" + row + "\n"


def _csv_cell(value) -> str:
    if isinstance(value, float):
        return repr(value)
    return str(value)


def _table_csv(rows) -> str:
    lines = ["k,a,script_j,bound"]
    for row in rows:
        lines.append(f"{row.k},{row.a!r},{row.script_j:.6e},{row.bound:.6e}")
    return "\n".join(lines) + "\n"


def _cmd_eval(args) -> int:
    n = _resolve_index(args)
    result = j_integral(IntegralParams(n, args.a, args.tol))
    fields = {
        "command": "eval",
        "n": n,
        "a": args.a,
        "value": result.value,
        "abs_error_estimate": result.abs_error_estimate,
        "evaluations": result.evaluations,
    }
    if args.format == "text":
        _emit(f"{result.value:.15g}\n", args.out)
    else:
        _emit(_scalar_output(args.format, fields), args.out)
    return 0


def _cmd_approx(args) -> int:
    n = _resolve_index(args)
    if args.method == "drz":
        if n % 2:
            raise ValueError("the quartic-root approximation is defined for even n only")
        value = drz_approx(n // 2, args.a)
    elif n % 2 == 0:
        value = t_even(n // 2, args.a)
    else:
        value = t_odd((n - 1) // 2, args.a)
    fields = {"command": "approx", "method": args.method, "n": n, "a": args.a, "value": value}
    if args.format == "text":
        _emit(f"{value:.15g}\n", args.out)
    else:
        _emit(_scalar_output(args.format, fields), args.out)
    return 0


def _cmd_bound(args) -> int:
    n = _resolve_index(args)
    value = bound_even(n // 2, args.a) if n % 2 == 0 else bound_odd((n - 1) // 2, args.a)
    fields = {"command": "bound", "n": n, "a": args.a, "bound": value}
    if args.estimate:
        k = n // 2 if n % 2 == 0 else (n - 1) // 2
        if k < 1:
            raise ValueError("the large-k estimate requires k >= 1")
        if not (math.pi / k <= args.a <= k):
            sys.stderr.write(
                f"warning: a={args.a:g} is outside [pi/k, k] = "
                f"[{math.pi / k:.3g}, {k}]; the large-k estimate degrades there\n"
            )
        fields["estimate"] = bound_asymptotic(k, args.a)
    if args.format == "text":
        text = f"{value:.15g}\n"
        if args.estimate:
            text += f"{fields['estimate']:.15g}\n"
        _emit(text, args.out)
    else:
        _emit(_scalar_output(args.format, fields), args.out)
    return 0


def _cmd_table(args) -> int:
    rows = reproduce_table(args.id)
    if args.format == "csv":
        _emit(_table_csv(rows), args.out)
    elif args.format == "json":
        payload = {
            "command": "table",
            "id": args.id,
            "rows": [
                {"k": r.k, "a": r.a, "script_j": r.script_j, "bound": r.bound} for r in rows
            ],
        }
        _emit(json.dumps(payload) + "\n", args.out)
    else:
        lines = [
            f"{r.k} {r.a:.15g} {r.script_j:.15g} {r.bound:.15g}" for r in rows
        ]
        _emit("\n".join(lines) + "\n", args.out)
    return 0


def _cmd_verify(args) -> int:
    report = run_suite(TolProfile(quad_tol=args.tol))
    if args.format == "json":
        payload = {"command": "verify", **report.to_dict()}
        _emit(json.dumps(payload) + "\n", args.out)
    elif args.format == "csv":
        lines = ["name,residual,tolerance,passed"]
        for c in report.checks:
            lines.append(f"{c.name},{c.residual!r},{c.tolerance!r},{c.passed}")
        _emit("\n".join(lines) + "\n", args.out)
    else:
        lines = [
            f"{'pass' if c.passed else 'FAIL'} {c.name} residual={c.residual:.3g} "
            f"tolerance={c.tolerance:.3g}"
            for c in report.checks
        ]
        lines.append(f"overall: {'pass' if report.overall else 'FAIL'}")
        _emit("\n".join(lines) + "\n", args.out)
    return 0 if report.overall else 2


_COMMANDS = {
    "eval": _cmd_eval,
    "approx": _cmd_approx,
    "bound": _cmd_bound,
    "table": _cmd_table,
    "verify": _cmd_verify,
}


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return _COMMANDS[args.command](args)
    except _CliError as exc:
        sys.stderr.write(f"error: {exc}\n{_USAGE_HINT}\n")
        return 1
    except (ValueError, AccuracyError) as exc:
        sys.stderr.write(f"error: {exc}\n{_USAGE_HINT}\n")
        return 1


def entrypoint() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    entrypoint()
