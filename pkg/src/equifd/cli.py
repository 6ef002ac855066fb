"""Command-line experiment runner.

Subcommands: solve, convergence, adapt, table1, table2, error-profile.
Flags may be pre-populated from a key=value file via --config; the
default output directory honors EQUIFD_OUTDIR.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .adapt import AdaptiveConfig, adaptive_solve
from .analysis import max_error
from .experiments import (
    LADDER,
    format_table1,
    format_table2,
    run_error_profile,
    run_table1,
    run_table2,
    solve_single,
)
from .grid import GridMapping, analytic_mapped_grid, uniform_grid
from .io import default_output_dir
from .problem import ProblemSpec
from .analysis import refinement_ladder


class ConfigError(ValueError):
    pass


def _load_config(path: str) -> dict:
    """key=value lines; '#' starts a comment; keys match long flag names."""
    values = {}
    for lineno, raw in enumerate(Path(path).read_text().splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"{path}:{lineno}: expected key=value, got {raw!r}")
        key, _, val = line.partition("=")
        key = key.strip().replace("-", "_")
        if not key:
            raise ConfigError(f"{path}:{lineno}: empty key")
        values[key] = val.strip()
    return values


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--lambda", dest="lam", type=float, default=10.0,
                   help="model parameter lambda (> 0)")
    p.add_argument("--ell", type=float, default=1.0, help="domain length (> 0)")
    p.add_argument("--config", default=None, help="key=value file pre-populating flags")
    p.add_argument("--out", default=None, help="output CSV path")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="equifd",
                                     description="boundary-layer BVP on equidistributed grids")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="single solve, CSV columns x,u,u_exact,abs_error")
    _add_common(p)
    p.add_argument("--n", type=int, default=20, help="number of grid intervals")
    p.add_argument("--grid", choices=["uniform", "analytic", "equidistributed", "adaptive"],
                   default="uniform")
    p.add_argument("--beta", type=float, default=0.0, help="monitor exponent")
    p.add_argument("--alpha", type=float, default=0.0, help="adaptive monitor weight")
    p.add_argument("--tol", type=float, default=1e-12, help="equidistribution tolerance")
    p.add_argument("--max-iter", type=int, default=10000, help="equidistribution sweep cap")
    p.add_argument("--eps", type=float, default=1e-10, help="adaptive stopping tolerance")
    p.add_argument("--max-outer", type=int, default=1000, help="adaptive iteration cap")

    p = sub.add_parser("convergence", help="refinement ladder for one grid family")
    _add_common(p)
    p.add_argument("--grid", choices=["uniform", "analytic"], default="uniform")
    p.add_argument("--beta", type=float, default=0.0)
    p.add_argument("--n-ladder", default=",".join(str(n) for n in LADDER),
                   help="comma-separated doubling N values")

    p = sub.add_parser("adapt", help="adaptive solve with optional iteration trace")
    _add_common(p)
    p.add_argument("--n", type=int, default=20)
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--beta", type=float, required=True)
    p.add_argument("--eps", type=float, default=1e-10)
    p.add_argument("--max-outer", type=int, default=1000)
    p.add_argument("--tol", type=float, default=1e-12)
    p.add_argument("--max-iter", type=int, default=10000)
    p.add_argument("--trace", default=None, help="per-iteration trace CSV path")

    p = sub.add_parser("table1", help="convergence orders of the analytic grid families")
    _add_common(p)

    p = sub.add_parser("table2", help="adaptive-monitor (alpha, beta) sweep at N=20")
    _add_common(p)
    p.add_argument("--n", type=int, default=20)
    p.add_argument("--eps", type=float, default=1e-10)
    p.add_argument("--max-outer", type=int, default=5000)

    p = sub.add_parser("error-profile", help="pointwise error of the four grid families")
    _add_common(p)
    p.add_argument("--n", type=int, default=80)

    return parser


def _parse_args(argv) -> argparse.Namespace:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "config", None):
        overrides = _load_config(args.config)
        defaults = vars(build_parser().parse_args([args.command] + _required_stub(args)))
        for key, val in overrides.items():
            if key == "lambda":
                key = "lam"
            if key not in defaults:
                raise ConfigError(f"unknown config key {key!r} for command {args.command}")
            # only fill flags the command line left at their defaults
            if getattr(args, key) == defaults[key]:
                setattr(args, key, type(defaults[key])(val) if defaults[key] is not None else val)
    return args


def _required_stub(args) -> list:
    # 'adapt' has required flags; feed parsed values back when re-deriving defaults
    if args.command == "adapt":
        return ["--alpha", str(args.alpha), "--beta", str(args.beta)]
    return []


def _out_path(args, default_name: str) -> Path:
    if args.out is not None:
        return Path(args.out)
    return default_output_dir() / default_name


def main(argv=None) -> int:
    try:
        args = _parse_args(argv if argv is not None else sys.argv[1:])
    except ConfigError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2

    try:
        spec = ProblemSpec(lam=args.lam, ell=args.ell)
    except ValueError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2

    try:
        if args.command == "solve":
            sol, converged = solve_single(
                spec, args.n, args.grid, beta=args.beta, alpha=args.alpha,
                tol=args.tol, max_iter=args.max_iter, eps=args.eps,
                max_outer=args.max_outer,
            )
            path = _out_path(args, "solution.csv")
            sol.write_csv(path)
            print(f"max error {max_error(sol):.6e}  ({path})")
            return 0 if converged else 1

        if args.command == "convergence":
            n_values = [int(s) for s in args.n_ladder.split(",")]
            if any(b != 2 * a for a, b in zip(n_values, n_values[1:])):
                print("error: --n-ladder entries must double (order estimation "
                      "assumes mesh halving)", file=sys.stderr)
                return 2
            if args.grid == "uniform":
                factory = lambda n: uniform_grid(spec, n)
                label = "uniform"
            else:
                mapping = GridMapping(spec, args.beta)
                factory = lambda n: analytic_mapped_grid(mapping, n)
                label = f"beta={args.beta:g}"
            report = refinement_ladder(spec, factory, n_values, label)
            path = _out_path(args, "convergence.csv")
            report.write_csv(path)
            print(report.format_table())
            print(f"({path})")
            return 0

        if args.command == "adapt":
            cfg = AdaptiveConfig(alpha=args.alpha, beta=args.beta, eps=args.eps,
                                 max_outer=args.max_outer, inner_tol=args.tol,
                                 inner_max_iter=args.max_iter)
            res = adaptive_solve(spec, args.n, cfg)
            path = _out_path(args, "adaptive_solution.csv")
            res.solution.write_csv(path)
            if args.trace:
                res.write_trace_csv(args.trace)
            status = "converged" if res.converged else "NOT converged"
            print(f"max error {res.error_norm:.6e} after n={res.outer_iterations} solves "
                  f"({status})  ({path})")
            return 0 if res.converged else 1

        if args.command == "table1":
            path = _out_path(args, "table1.csv")
            reports = run_table1(spec, csv_path=path)
            print(format_table1(reports))
            print(f"({path})")
            return 0

        if args.command == "table2":
            path = _out_path(args, "table2.csv")
            cells = run_table2(spec, n_cells=args.n, eps=args.eps,
                               max_outer=args.max_outer, csv_path=path)
            print(format_table2(cells))
            print(f"({path})")
            return 0 if all(c.converged for c in cells) else 1

        if args.command == "error-profile":
            path = _out_path(args, "error_profile.csv")
            run_error_profile(spec, n_cells=args.n, csv_path=path)
            print(f"wrote {path}")
            return 0
    except (ValueError, RuntimeError, ArithmeticError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 1

    return 2


if __name__ == "__main__":
    sys.exit(main())
