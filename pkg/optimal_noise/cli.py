# -*- coding: utf-8 -*-

# Copyright (c) 2023, optimal_noise contributors
#
# Distributed under the terms of the GPL license version 3.
#
# The full license is in the file LICENSE, distributed with this software.

# pylint: disable=invalid-name

"""
This module provides the ``optimal-noise`` command line interface.

Exit codes: 0 on success, 2 for invalid flags or arguments out of range, 3 if
an output file cannot be written, and 4 if an input file cannot be read or
parsed.
"""

import argparse
import json
import sys
from typing import List, Optional, TextIO

import numpy as np

from . import __version__
from .audit import (
    analytic_delta_gaussian,
    analytic_delta_palpha,
    audit_binning,
    empirical_delta,
)
from .constants import (
    DEFAULT_CURVE_MAX,
    DEFAULT_CURVE_MIN,
    DEFAULT_CURVE_STEP,
    DEFAULT_SHIFT_GRID,
    MIN_BINS,
    MIN_SHIFT_GRID,
    SIGNIFICANT_DIGITS,
)
from .cost import CostSpec
from .curve import build_curve, compare
from .exceptions import DomainError, SampleParseError
from .gaussian import (
    GaussianBaseline,
    GaussianConvention,
    calibrate_gaussian,
    sample_gaussian_batch,
)
from .optimal import cost_profile, optimal_alpha_ln, optimal_ln
from .palpha import make_palpha, sample_batch
from .report import ReportGuard, logger
from .streams import make_stream
from .tools import format_real

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_WRITE = 3
EXIT_READ = 4

_CONVENTIONS = {
    "sigma": GaussianConvention.SigmaPower,
    "exact": GaussianConvention.ExactMoment,
}


class _WriteError(Exception):
    pass


class _ReadError(Exception):
    pass


def _fmt(x) -> str:
    if isinstance(x, (float, np.floating)):
        return format_real(x, SIGNIFICANT_DIGITS)
    return str(x)


def _rounded(obj: dict) -> dict:
    return {
        k: float(_fmt(v)) if isinstance(v, (float, np.floating)) else v
        for k, v in obj.items()
    }


def _emit_record(obj: dict, fmt: str, out: TextIO) -> None:
    if fmt == "json":
        out.write(json.dumps(_rounded(obj)) + "\n")
    elif fmt == "csv":
        out.write(",".join(obj) + "\n")
        out.write(",".join(_fmt(v) for v in obj.values()) + "\n")
    else:
        width = max(len(k) for k in obj)
        for k, v in obj.items():
            out.write(f"{k.ljust(width)}  {_fmt(v)}\n")


def _emit_table(header: List[str], rows, fmt: str, out: TextIO) -> None:
    if fmt == "json":
        out.write(
            json.dumps([_rounded(dict(zip(header, row))) for row in rows])
            + "\n"
        )
    elif fmt == "csv":
        out.write(",".join(header) + "\n")
        for row in rows:
            out.write(",".join(_fmt(v) for v in row) + "\n")
    else:
        cells = [header] + [[_fmt(v) for v in row] for row in rows]
        widths = [max(len(r[i]) for r in cells) for i in range(len(header))]
        for r in cells:
            out.write(
                "  ".join(c.rjust(w) for c, w in zip(r, widths)).rstrip()
                + "\n"
            )


def _open_output(path: Optional[str]):
    if path is None or path == "-":
        return sys.stdout, False
    try:
        return open(path, "w", encoding="utf-8", newline=""), True
    except OSError as e:
        raise _WriteError(f"cannot write {path}: {e.strerror}") from None


def read_samples(path: str) -> np.ndarray:
    """
    Read one real number per line from ``path`` (``-`` for stdin); blank
    lines are skipped.

    :raises SampleParseError: if a line is not UTF-8 text or not a finite
      real number.
    :raises OSError: if the file cannot be read.
    """
    f = sys.stdin.buffer if path == "-" else open(path, "rb")
    values = []
    try:
        for line_number, raw in enumerate(f, start=1):
            try:
                text = raw.decode("utf-8").strip()
            except UnicodeDecodeError:
                raise SampleParseError(
                    line_number,
                    raw.decode("utf-8", "backslashreplace").strip(),
                    path,
                ) from None
            if not text:
                continue
            try:
                x = float(text)
            except ValueError:
                raise SampleParseError(line_number, text, path) from None
            if not np.isfinite(x):
                raise SampleParseError(line_number, text, path)
            values.append(x)
    finally:
        if path != "-":
            f.close()
    if not values:
        raise SampleParseError(0, "", path)
    return np.array(values)


###############################################################################
# Mechanism flags shared by several subcommands
###############################################################################


def _add_mechanism_flags(p: argparse.ArgumentParser, default=None) -> None:
    p.add_argument(
        "--mechanism",
        choices=["palpha", "gaussian"],
        default=default,
        help="the built-in noise distribution",
    )
    p.add_argument("--delta", type=float, help="privacy parameter in (0,1)")
    p.add_argument(
        "--sensitivity", type=float, default=1.0, help="query sensitivity"
    )
    group = p.add_mutually_exclusive_group()
    group.add_argument("--alpha", type=float, help="atom at the origin")
    group.add_argument(
        "--optimal",
        action="store_true",
        help="use the optimal atom for the cost |x|^n",
    )
    p.add_argument("--n", type=float, default=1.0, help="cost exponent")
    p.add_argument(
        "--sigma",
        type=float,
        help="Gaussian standard deviation (default: sensitivity / (2 delta))",
    )
    p.add_argument("--count", type=int, default=10**6, help="number of draws")
    p.add_argument("--seed", type=int, default=None, help="random seed (u64)")


def _require(args, name: str):
    value = getattr(args, name)
    if value is None:
        raise DomainError(name, None, f"--{name} is required")
    return value


def _draw(args, with_atom_mask: bool = False):
    if args.count < 0:
        raise DomainError("count", args.count, "count must be nonnegative")
    if args.seed is not None and not 0 <= args.seed < 2**64:
        raise DomainError("seed", args.seed, "seed must be an unsigned 64-bit")
    rng = make_stream(args.seed)
    if args.mechanism == "gaussian":
        if args.sigma is not None:
            g = GaussianBaseline(args.sigma, args.sensitivity)
        else:
            g = calibrate_gaussian(_require(args, "delta"), args.sensitivity)
        values = sample_gaussian_batch(g, rng, args.count)
        return (values, None) if with_atom_mask else values
    d = _palpha_from_flags(args)
    return sample_batch(d, rng, args.count, with_atom_mask)


def _palpha_from_flags(args):
    delta = _require(args, "delta")
    if args.optimal:
        alpha = optimal_alpha_ln(delta, args.n)
    else:
        alpha = _require(args, "alpha")
    return make_palpha(delta, args.sensitivity, alpha)


###############################################################################
# Subcommands
###############################################################################


def cmd_optimal(args, out: TextIO) -> None:
    "Print the optimal atom, the support, the density and the minimum cost."
    result = optimal_ln(_require(args, "delta"), args.sensitivity, args.n)
    _emit_record(result.to_dict(), args.format, out)


def cmd_sample(args, out: TextIO) -> None:
    "Print ``--count`` noise draws, one per line."
    values = _draw(args)
    f, close = _open_output(args.out)
    try:
        f.writelines(_fmt(float(x)) + "\n" for x in values)
    finally:
        if close:
            f.close()


def cmd_compare(args, out: TextIO) -> None:
    "Print the cost of the Gaussian and the optimal mechanism, and the ratio."
    row = compare(
        _require(args, "delta"),
        args.sensitivity,
        args.n,
        _CONVENTIONS[args.convention],
    )
    if args.format == "json":
        _emit_record(
            {
                "delta": row.delta,
                "sensitivity": args.sensitivity,
                "n": args.n,
                "gaussian": row.gaussian_cost,
                "optimal": row.optimal_cost,
                "ratio": row.ratio,
            },
            "json",
            out,
        )
        return
    _emit_table(
        ["mechanism", "cost", "ratio"],
        [
            ["gaussian", row.gaussian_cost, 1.0],
            ["optimal", row.optimal_cost, row.ratio],
        ],
        args.format,
        out,
    )


def cmd_curve(args, out: TextIO) -> None:
    "Write the ratio curve as CSV."
    table = build_curve(
        args.n,
        args.sensitivity,
        args.delta_min,
        args.delta_max,
        args.step,
        _CONVENTIONS[args.convention],
    )
    f, close = _open_output(args.out)
    try:
        table.to_csv(f)
    finally:
        if close:
            f.close()


def _audit_inputs(args):
    if args.input is not None:
        try:
            return read_samples(args.input), None
        except OSError as e:
            raise _ReadError(
                f"cannot read {args.input}: {e.strerror}"
            ) from None
    if args.mechanism is None:
        raise DomainError("mechanism", None, "give --input or --mechanism")
    return _draw(args, with_atom_mask=True)


def cmd_audit(args, out: TextIO) -> None:
    "Write the audit of a sample file or a built-in mechanism."
    samples, atom_mask = _audit_inputs(args)
    report = empirical_delta(
        samples,
        args.sensitivity,
        args.bins,
        args.shifts,
        atom_mask,
        args.threads,
    )
    result = report.to_dict()
    if args.analytic and args.input is None:
        if args.mechanism == "gaussian":
            sigma = args.sigma or calibrate_gaussian(
                _require(args, "delta"), args.sensitivity
            ).sigma
            exact = analytic_delta_gaussian(sigma, args.sensitivity)
        else:
            exact = analytic_delta_palpha(_palpha_from_flags(args))
        result["analytic_delta"] = exact.delta_hat
    f, close = _open_output(args.out)
    try:
        _emit_record(result, args.format, f)
    finally:
        if close:
            f.close()


def cmd_histogram(args, out: TextIO) -> None:
    "Write the histogram that the audit is computed from as CSV."
    samples, atom_mask = _audit_inputs(args)
    h = audit_binning(samples, args.sensitivity, args.bins, atom_mask)
    f, close = _open_output(args.out)
    try:
        h.to_csv(f)
    finally:
        if close:
            f.close()


def cmd_profile(args, out: TextIO) -> None:
    "Print the expected cost of |x|^n as a function of the atom."
    delta = _require(args, "delta")
    make_palpha(delta, args.sensitivity, 0.0)
    if args.points < 2:
        raise DomainError("points", args.points, "points must be at least 2")
    alphas = np.linspace(0.0, delta, args.points, endpoint=False)
    costs = cost_profile(delta, args.sensitivity, CostSpec.ln(args.n), alphas)
    _emit_table(["alpha", "cost"], list(zip(alphas, costs)), args.format, out)


###############################################################################
# Parser
###############################################################################


def _int_at_least(lower: int):
    def parse(text: str) -> int:
        try:
            value = int(text)
        except ValueError:
            raise argparse.ArgumentTypeError(
                f"expected an integer, found {text!r}"
            ) from None
        if value < lower:
            raise argparse.ArgumentTypeError(
                f"expected an integer >= {lower}, found {value}"
            )
        return value

    return parse


def make_parser() -> argparse.ArgumentParser:
    "Returns the argument parser of ``optimal-noise``."
    parser = argparse.ArgumentParser(
        prog="optimal-noise",
        description="Optimal noise for (0, delta)-differential privacy.",
    )
    parser.add_argument(
        "--version", action="version", version=f"%(prog)s {__version__}"
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format",
        choices=["json", "csv", "text"],
        default="json",
        help="output format (default: json)",
    )
    common.add_argument(
        "--verbose", action="store_true", help="report progress to stderr"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser(
        "optimal", parents=[common], help="optimal atom and minimum cost"
    )
    p.add_argument("--delta", type=float, required=True)
    p.add_argument("--sensitivity", type=float, default=1.0)
    p.add_argument("--n", type=float, default=1.0)
    p.set_defaults(func=cmd_optimal)

    p = sub.add_parser("sample", parents=[common], help="draw noise")
    _add_mechanism_flags(p, default="palpha")
    p.add_argument("--out", help="output file (default: stdout)")
    p.set_defaults(func=cmd_sample)

    p = sub.add_parser(
        "compare", parents=[common], help="optimal versus Gaussian cost"
    )
    p.add_argument("--delta", type=float, required=True)
    p.add_argument("--sensitivity", type=float, default=1.0)
    p.add_argument("--n", type=float, default=1.0)
    p.add_argument("--convention", choices=list(_CONVENTIONS), default="sigma")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("curve", parents=[common], help="ratio curve as CSV")
    p.add_argument("--n", type=float, default=1.0)
    p.add_argument("--sensitivity", type=float, default=1.0)
    p.add_argument("--delta-min", type=float, default=DEFAULT_CURVE_MIN)
    p.add_argument("--delta-max", type=float, default=DEFAULT_CURVE_MAX)
    p.add_argument("--step", type=float, default=DEFAULT_CURVE_STEP)
    p.add_argument("--out", help="output file (default: stdout)")
    p.add_argument("--convention", choices=list(_CONVENTIONS), default="sigma")
    p.set_defaults(func=cmd_curve)

    for name, func, helptext in (
        ("audit", cmd_audit, "estimate the privacy distance"),
        ("histogram", cmd_histogram, "write the audited histogram as CSV"),
    ):
        p = sub.add_parser(name, parents=[common], help=helptext)
        p.add_argument("--input", help="file of samples, one per line")
        _add_mechanism_flags(p)
        p.add_argument(
            "--bins",
            type=_int_at_least(MIN_BINS),
            default=None,
            help="number of bins (default: chosen from the samples)",
        )
        p.add_argument(
            "--shifts",
            type=_int_at_least(MIN_SHIFT_GRID),
            default=DEFAULT_SHIFT_GRID,
        )
        p.add_argument("--threads", type=_int_at_least(1), default=1)
        p.add_argument(
            "--analytic",
            action="store_true",
            help="also report the exact value for a built-in mechanism",
        )
        p.add_argument("--out", help="output file (default: stdout)")
        p.set_defaults(func=func)

    p = sub.add_parser(
        "profile", parents=[common], help="cost as a function of the atom"
    )
    p.add_argument("--delta", type=float, required=True)
    p.add_argument("--sensitivity", type=float, default=1.0)
    p.add_argument("--n", type=float, default=1.0)
    p.add_argument("--points", type=int, default=64)
    p.set_defaults(func=cmd_profile)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """
    Run ``optimal-noise`` with the arguments ``argv`` (default:
    ``sys.argv[1:]``) and return the exit code.
    """
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code
    with ReportGuard(args.verbose):
        logger.debug("dispatching %s", args.command)
        try:
            args.func(args, sys.stdout)
        except DomainError as e:
            print(f"{parser.prog}: error: {e}", file=sys.stderr)
            return EXIT_USAGE
        except _WriteError as e:
            print(f"{parser.prog}: error: {e}", file=sys.stderr)
            return EXIT_WRITE
        except (_ReadError, SampleParseError) as e:
            print(f"{parser.prog}: error: {e}", file=sys.stderr)
            return EXIT_READ
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
