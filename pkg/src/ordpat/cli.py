"""Command-line interface.

Subcommands: ``estimate`` (dependence measures of a two-column CSV),
``simulate`` (write a seeded process draw to CSV), ``experiment`` (run a
config-driven replication grid), and ``analytic`` (closed-form Gaussian
reference values).

Exit codes: 0 success, 2 input or configuration error, 3 numerical or
estimator error.  Result values print with 6 significant digits and '.' as
the decimal separator; simulated data files are written losslessly.
"""

from __future__ import annotations

import argparse
import csv
import sys

import numpy as np

from ordpat._version import __version__
from ordpat.errors import InvalidConfig, InvalidInput, OrdpatError
from ordpat.gaussian import ar1_opd1, bivariate_orthant, opd1_gaussian, shifted_ar1_opd1
from ordpat.harness import load_config, run_experiment
from ordpat.kendall import kendall_tau_with_ci
from ordpat.opd import opd_from_series, signed_opd
from ordpat.pearson import pearson_mv
from ordpat.procgen import ProcessSpec, generate


class _ParseFailure(Exception):
    """Input-file problem; maps to exit code 2."""


def _fmt(value) -> str:
    return "" if value is None else format(value, ".6g")


def read_series_pair(path: str) -> tuple[np.ndarray, np.ndarray]:
    """Read a SeriesPairFile: header 'x,y', optional leading index column."""
    try:
        fh = open(path, "r", encoding="utf-8-sig", newline="")
    except OSError as exc:
        raise _ParseFailure(f"{path}: {exc.strerror}") from exc
    with fh:
        reader = csv.reader(fh)
        try:
            header = next(reader)
        except StopIteration:
            raise _ParseFailure(f"{path}: empty file") from None
        cols = [c.strip().lower() for c in header]
        if cols[-2:] == ["x", "y"] and len(cols) <= 3:
            offset = len(cols) - 2
        else:
            raise _ParseFailure(
                f"{path}: line 1: expected header 'x,y' (optional index column), got {header!r}"
            )
        xs, ys = [], []
        for lineno, row in enumerate(reader, start=2):
            if not row:
                continue
            if len(row) != len(cols):
                raise _ParseFailure(f"{path}: line {lineno}: expected {len(cols)} fields")
            try:
                xv = float(row[offset])
                yv = float(row[offset + 1])
            except ValueError:
                raise _ParseFailure(f"{path}: line {lineno}: non-numeric value") from None
            if not (np.isfinite(xv) and np.isfinite(yv)):
                raise _ParseFailure(f"{path}: line {lineno}: non-finite value")
            xs.append(xv)
            ys.append(yv)
    return np.array(xs), np.array(ys)


def cmd_estimate(args) -> int:
    x, y = read_series_pair(args.input)
    shift = args.shift if args.method == "opd" else 0
    if args.method == "opd":
        est = opd_from_series(x, y, args.h, shift=shift)
        record = (est.n, est.value, None, None, None)
    elif args.method == "opd-signed":
        value = signed_opd(x, y, args.h)
        record = (x.size - args.h, value, None, None, None)
    elif args.method == "kendall":
        est = kendall_tau_with_ci(x, y, args.h, confidence=args.confidence)
        record = (est.n, est.value, est.variance, est.ci_low, est.ci_high)
    else:
        est = pearson_mv(x, y, args.h)
        record = (est.n, est.value, None, None, None)
    n, value, variance, lo, hi = record
    print("method,h,shift,n,value,variance,ci_low,ci_high")
    print(
        f"{args.method},{args.h},{shift},{n},{_fmt(value)},{_fmt(variance)},{_fmt(lo)},{_fmt(hi)}"
    )
    return 0


def _resolved_spec(args) -> ProcessSpec:
    family = args.family
    if family in ("biv-ar1", "biv-ar1-rotation", "biv-ar2"):
        if args.a is None or args.b is None:
            raise InvalidInput(f"family {family} needs --a and --b")
        params = {"a": args.a, "b": args.b}
    else:
        if args.rho is None:
            raise InvalidInput(f"family {family} needs --rho")
        params = {"rho": args.rho}
    return ProcessSpec(family=family, params=params, n=args.n, seed=args.seed)


def cmd_simulate(args) -> int:
    try:
        spec = _resolved_spec(args)
        x, y = generate(spec)
    except OrdpatError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
        if spec.family == "block-multinormal":
            fh.write("x1,x2,x3,y1,y2,y3\n")
            for xi, yi in zip(x, y):
                fh.write(",".join(format(v, ".17g") for v in (*xi, *yi)) + "\n")
        else:
            fh.write("x,y\n")
            for xv, yv in zip(x, y):
                fh.write(f"{xv:.17g},{yv:.17g}\n")
    print(spec)
    return 0


def cmd_experiment(args) -> int:
    try:
        config = load_config(args.config)
    except OSError as exc:
        print(f"error: {args.config}: {exc.strerror}", file=sys.stderr)
        return 2
    except InvalidConfig as exc:
        print(f"error: InvalidConfig: {exc}", file=sys.stderr)
        return 2
    report = run_experiment(config, threads=args.threads)
    sidecar = report.write(args.out)
    print(f"wrote {args.out} ({len(report.rows)} rows) and {sidecar}")
    return 0


def cmd_analytic(args) -> int:
    if args.formula == "opd1-gauss":
        value = opd1_gaussian(_require(args.rho, "--rho"))
    elif args.formula == "ar1-opd1":
        value = ar1_opd1(_require(args.a, "--a"), _require(args.b, "--b"))
    elif args.formula == "shifted-ar1-opd1":
        value = shifted_ar1_opd1(_require(args.rho, "--rho"))
    else:  # orthant2
        value = bivariate_orthant(_require(args.rho, "--rho"))
    print(format(value, ".6g"))
    return 0


def _require(value, flag: str):
    if value is None:
        raise InvalidInput(f"formula requires {flag}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ordpat",
        description="Ordinal pattern dependence and multivariate dependence measures.",
    )
    parser.add_argument("--version", action="version", version=f"ordpat {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("estimate", help="estimate a dependence measure from a CSV file")
    p.add_argument("--input", required=True, help="two-column CSV with header x,y")
    p.add_argument(
        "--method",
        required=True,
        choices=("opd", "opd-signed", "kendall", "pearson"),
    )
    p.add_argument("--h", type=int, default=1, help="pattern/window order (default 1)")
    p.add_argument("--shift", type=int, default=0, help="time shift of the y patterns (opd only)")
    p.add_argument("--confidence", type=float, default=0.95)
    p.set_defaults(func=cmd_estimate)

    p = sub.add_parser("simulate", help="write one seeded process draw to CSV")
    p.add_argument(
        "--family",
        required=True,
        choices=(
            "iid-ar1-pair",
            "block-multinormal",
            "biv-ar1",
            "biv-ar1-rotation",
            "biv-ar2",
            "shifted-ar1",
        ),
    )
    p.add_argument("--rho", type=float)
    p.add_argument("--a", type=float)
    p.add_argument("--b", type=float)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("experiment", help="run a replication grid from a config file")
    p.add_argument("--config", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--threads", type=int, default=1)
    p.set_defaults(func=cmd_experiment)

    p = sub.add_parser("analytic", help="closed-form Gaussian reference values")
    p.add_argument(
        "--formula",
        required=True,
        choices=("opd1-gauss", "ar1-opd1", "shifted-ar1-opd1", "orthant2"),
    )
    p.add_argument("--rho", type=float)
    p.add_argument("--a", type=float)
    p.add_argument("--b", type=float)
    p.set_defaults(func=cmd_analytic)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except _ParseFailure as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OrdpatError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    raise SystemExit(main())
