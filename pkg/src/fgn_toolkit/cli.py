"""Command line front end: synthesis, estimation, analysis, conversion.

Exit codes: 0 success, 2 bad flags or domain errors, 3 I/O failure,
4 degenerate trace, 5 estimate converged to a search boundary, 6 clamp
fraction above 10% under --strict.  Data and summaries go to stdout,
diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import secrets
import sys
import time

import numpy as np

from . import analyze, oracle, traffic
from .estimate import whittle_estimate
from .spectrum import NEAR_EXACT, BMode, HurstParam, fgn_power_spectrum, spectrum_b
from .synth import Trace, make_rng, rescale_trace, synthesize_fgn
from .traceio import FORMATS, read_trace, write_trace

__all__ = ["main"]

_EXIT_USAGE = 2
_EXIT_IO = 3
_EXIT_DEGENERATE = 4
_EXIT_BOUNDARY = 5
_EXIT_CLAMP = 6


class _UsageError(Exception):
    pass


class _DegenerateTrace(Exception):
    pass


def _parse_hurst(text: str) -> HurstParam:
    try:
        return HurstParam(float(text))
    except ValueError as exc:
        raise _UsageError(str(exc)) from None


def _parse_mode(text: str) -> BMode:
    try:
        return BMode.parse(text)
    except ValueError as exc:
        raise _UsageError(str(exc)) from None


def _resolve_seed(seed: int | None) -> int:
    if seed is not None:
        return seed
    drawn = secrets.randbits(63)
    print(f"seed={drawn} (drawn from system entropy)", file=sys.stderr)
    return drawn


def _load_trace(path: str, fmt: str) -> Trace:
    try:
        return read_trace(path, fmt)
    except (OSError, ValueError) as exc:
        raise OSError(f"cannot read trace {path}: {exc}") from None


def _check_sd_flag(sd: float | None) -> None:
    if sd is not None and sd <= 0:
        raise _UsageError(f"--sd must be positive, got {sd}")


def _cmd_synth(args: argparse.Namespace) -> int:
    if args.n < 4 or args.n % 2 != 0:
        raise _UsageError(f"--n must be an even integer >= 4, got {args.n}")
    _check_sd_flag(args.sd)
    h = _parse_hurst(args.hurst)
    mode = _parse_mode(args.mode)
    seed = _resolve_seed(args.seed)
    started = time.perf_counter()
    trace = synthesize_fgn(h, args.n, seed, mode)
    if args.mean is not None or args.sd is not None:
        trace = rescale_trace(
            trace,
            args.mean if args.mean is not None else 0.0,
            args.sd if args.sd is not None else 1.0,
        )
    write_trace(args.out, trace, args.format)
    elapsed = time.perf_counter() - started
    print(
        f"n={args.n} h={h.h:g} seed={seed} wall_time_s={elapsed:.3f}",
        file=sys.stderr,
    )
    return 0


def _cmd_estimate(args: argparse.Namespace) -> int:
    if args.tol < 1e-6:
        raise _UsageError(f"--tol must be at least 1e-6, got {args.tol}")
    mode = _parse_mode(args.mode)
    trace = _load_trace(args.infile, args.format)
    try:
        result = whittle_estimate(trace, mode, tol=args.tol)
    except ValueError as exc:
        raise _DegenerateTrace(str(exc)) from None
    print(
        f"h_hat={result.h_hat:.6f} sigma_h={result.sigma_h:.6f} "
        f"mode={result.mode} n={result.n}"
    )
    if result.at_boundary:
        print(
            f"warning: estimate {result.h_hat:.4f} converged to a search boundary "
            "of [0.501, 0.999]; the true value may lie outside (0.5, 1)",
            file=sys.stderr,
        )
        return _EXIT_BOUNDARY
    return 0


def _write_csv(path: str, header: str, rows) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(header + "\n")
        for row in rows:
            fh.write(",".join(f"{v:.10g}" for v in row) + "\n")


def _cmd_analyze(args: argparse.Namespace) -> int:
    trace = _load_trace(args.infile, args.format)
    try:
        if args.what == "vt":
            curve = analyze.variance_time_curve(trace)
            if args.out:
                _write_csv(args.out, "m,norm_var", zip(curve.m_levels, curve.norm_vars))
            print(f"implied_h={curve.implied_h:.4f} slope={curve.fitted_slope:.4f}")
        elif args.what == "normality":
            report = analyze.ad_normality_test(trace)
            verdict = "pass" if report.pass_at_5pct else "fail"
            print(f"a2={report.a2_statistic:.4f} verdict={verdict} n={report.n}")
        elif args.what == "qq":
            points = analyze.qq_points(trace)
            if args.out:
                _write_csv(args.out, "theoretical,sample", points)
            r = np.corrcoef(points[:, 0], points[:, 1])[0, 1]
            print(f"qq_r2={r * r:.6f} n={trace.n}")
        else:  # acf
            rho = oracle.sample_autocorrelation(trace, args.max_lag)
            if args.out:
                _write_csv(args.out, "lag,rho", enumerate(rho))
            print(f"rho1={rho[1]:.4f} max_lag={args.max_lag}")
    except ValueError as exc:
        raise _DegenerateTrace(str(exc)) from None
    return 0


def _cmd_convert(args: argparse.Namespace) -> int:
    _check_sd_flag(args.sd)
    if args.bin_width <= 0:
        raise _UsageError(f"--bin-width must be positive, got {args.bin_width}")
    trace = _load_trace(args.infile, args.format)
    try:
        if args.mean is not None or args.sd is not None:
            trace = rescale_trace(
                trace,
                args.mean if args.mean is not None else 0.0,
                args.sd if args.sd is not None else 1.0,
            )
        if args.transform == "exp2":
            trace = traffic.exp2_transform(trace)
    except ValueError as exc:
        raise _DegenerateTrace(str(exc)) from None
    arrivals = traffic.to_integer_counts(trace, args.bin_width)
    print(f"clamp_fraction={arrivals.clamp_fraction:.4f}", file=sys.stderr)
    if args.strict and arrivals.clamp_fraction > 0.10:
        print(
            f"error: clamp fraction {arrivals.clamp_fraction:.1%} exceeds 10% under --strict",
            file=sys.stderr,
        )
        return _EXIT_CLAMP
    if args.emit == "counts":
        lines = (str(c) for c in arrivals.counts)
    else:
        rng = make_rng(_resolve_seed(args.seed)) if args.spread == "uniform" else None
        seq = traffic.counts_to_interarrivals(arrivals, spread=args.spread, rng=rng)
        lines = (f"{t:.17g}" for t in seq.times)
    with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
        for line in lines:
            fh.write(line + "\n")
    return 0


def _cmd_spectrum(args: argparse.Namespace) -> int:
    h = _parse_hurst(args.hurst)
    mode = _parse_mode(args.mode)
    try:
        start_s, stop_s, steps_s = args.lambda_grid.split(":")
        start, stop, steps = float(start_s), float(stop_s), int(steps_s)
    except ValueError:
        raise _UsageError(
            f"--lambda-grid must look like start:stop:steps, got {args.lambda_grid!r}"
        ) from None
    if steps < 1 or start <= 0 or stop > np.pi or start > stop:
        raise _UsageError("lambda grid must lie within (0, pi]")
    lams = np.linspace(start, stop, steps)
    f_vals = np.atleast_1d(fgn_power_spectrum(h, lams, mode))
    b_vals = np.atleast_1d(spectrum_b(h, lams, mode))
    b_ref = np.atleast_1d(spectrum_b(h, lams, NEAR_EXACT))
    rel_err = (b_vals - b_ref) / b_ref
    header = "lambda,f,B,rel_err_vs_partial10000"
    rows = list(zip(lams, f_vals, b_vals, rel_err))
    if args.out:
        _write_csv(args.out, header, rows)
    else:
        print(header)
        for row in rows:
            print(",".join(f"{v:.10g}" for v in row))
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fgn-toolkit",
        description="Synthesize, estimate, analyze and convert self-similar traces.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("synth", help="synthesize an approximate FGN trace")
    p.add_argument("--n", type=int, required=True, help="trace length (even, >= 4)")
    p.add_argument("--hurst", required=True, help="Hurst parameter in (0.5, 1)")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--mode", default="fast", help="fast|exact|prime|doubleprime|partial:<N>|k:<K>")
    p.add_argument("--mean", type=float, default=None, help="rescale to this sample mean")
    p.add_argument("--sd", type=float, default=None, help="rescale to this sample sd")
    p.add_argument("--out", required=True)
    p.add_argument("--format", choices=FORMATS, default="text")
    p.set_defaults(func=_cmd_synth)

    p = sub.add_parser("estimate", help="Whittle estimate of the Hurst parameter")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--mode", default="fast")
    p.add_argument("--tol", type=float, default=0.001)
    p.add_argument("--format", choices=FORMATS, default="text")
    p.set_defaults(func=_cmd_estimate)

    p = sub.add_parser("analyze", help="variance-time, normality, Q-Q or ACF analysis")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--what", choices=("vt", "normality", "qq", "acf"), required=True)
    p.add_argument("--out", default=None, help="CSV output path (vt, qq, acf)")
    p.add_argument("--max-lag", type=int, default=50)
    p.add_argument("--format", choices=FORMATS, default="text")
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("convert", help="turn a trace into counts or interarrival times")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--transform", choices=("exp2", "linear"), default="linear")
    p.add_argument("--mean", type=float, default=None,
                   help="target mean before the transform (log2 domain for exp2)")
    p.add_argument("--sd", type=float, default=None,
                   help="target sd before the transform (log2 domain for exp2)")
    p.add_argument("--bin-width", type=float, default=1.0)
    p.add_argument("--emit", choices=("counts", "interarrivals"), default="counts")
    p.add_argument("--spread", choices=("uniform", "even"), default="uniform")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--strict", action="store_true",
                   help="fail when more than 10%% of values clamp to zero")
    p.add_argument("--out", required=True)
    p.add_argument("--format", choices=FORMATS, default="text")
    p.set_defaults(func=_cmd_convert)

    p = sub.add_parser("spectrum", help="tabulate the model spectrum and its error")
    p.add_argument("--hurst", required=True)
    p.add_argument("--lambda-grid", default="0.01:3.0:11", help="start:stop:steps")
    p.add_argument("--mode", default="fast")
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_spectrum)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return _EXIT_USAGE
    except _DegenerateTrace as exc:
        print(f"error: degenerate trace: {exc}", file=sys.stderr)
        return _EXIT_DEGENERATE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return _EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
