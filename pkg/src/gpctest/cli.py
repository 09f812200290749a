"""Command line interface.

Subcommands:

* ``simulate`` -- replicated tests on a copula family; reports CSV plus a
  p-value quantile plot.
* ``curve``    -- p-value versus threshold curve for one simulated dataset.
* ``test``     -- one-shot test on a CSV dataset using empirical margins.
* ``dist``     -- query the null limit law (cdf and p-value at a point).
* ``process``  -- replicated tests on grid-observed sample paths.

Exit codes: 0 success, 2 configuration error, 3 numeric failure.
"""

from __future__ import annotations

import argparse
import sys

import numpy as np

from . import harness, limitdist
from .copulas import clayton_model, gumbel_model, normal_model, sinelog_model
from .harness import ConfigError, ExperimentConfig
from .processes import GridSpec, ProcessModel
from .statistic import DegenerateSampleError


def _parse_thresholds(text: str) -> np.ndarray:
    """Scalar like "0.2" or a grid "a:b:steps"."""
    if ":" in text:
        try:
            lo, hi, steps = text.split(":")
            return np.linspace(float(lo), float(hi), int(steps))
        except ValueError as exc:
            raise ConfigError(f"bad threshold grid {text!r}: {exc}") from exc
    try:
        return np.array([float(text)])
    except ValueError as exc:
        raise ConfigError(f"bad threshold {text!r}") from exc


def _parse_subset(text: str) -> tuple[str, int | None]:
    if text == "full":
        return "full", None
    if text == "auto":
        return "auto", None
    if text.startswith("m="):
        try:
            return "m", int(text[2:])
        except ValueError as exc:
            raise ConfigError(f"bad subset size {text!r}") from exc
    raise ConfigError(f"subset must be full, auto, or m=<int>, got {text!r}")


def _build_model(args):
    if args.family == "sinelog":
        return sinelog_model(args.lam)
    if args.family == "clayton":
        if args.theta is None:
            raise ConfigError("clayton needs --theta")
        return clayton_model(args.theta, args.dim)
    if args.family == "gumbel":
        if args.theta is None:
            raise ConfigError("gumbel needs --theta")
        return gumbel_model(args.theta, args.dim)
    if args.family == "normal":
        corr = np.eye(args.dim) + args.rho * (np.ones((args.dim, args.dim))
                                              - np.eye(args.dim))
        return normal_model(corr)
    raise ConfigError(f"unknown family {args.family!r}")


def _add_model_flags(parser):
    parser.add_argument("--family", default="sinelog",
                        choices=["sinelog", "clayton", "gumbel", "normal"])
    parser.add_argument("--lambda", dest="lam", type=float, default=0.0,
                        help="sine-log family parameter in [-sqrt(2)/2, sqrt(2)/2]")
    parser.add_argument("--theta", type=float, default=None,
                        help="Clayton / Gumbel parameter")
    parser.add_argument("--rho", type=float, default=-0.5,
                        help="normal copula off-diagonal correlation")
    parser.add_argument("--dim", type=int, default=2,
                        help="dimension for clayton/gumbel/normal")


def _add_common_flags(parser, default_subset="full"):
    parser.add_argument("--n", type=int, default=10000)
    parser.add_argument("--c", default="0.2",
                        help="threshold, scalar or grid a:b:steps")
    parser.add_argument("--k", type=int, default=2)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--subset", default=default_subset,
                        help="full | auto | m=<int>")
    parser.add_argument("--out", default=None, help="output path prefix")


def _emit_reports(reports, out_prefix):
    harness.emit_reports_csv(reports, f"{out_prefix}_reports.csv")
    ps = np.array([r.p_value for r in reports if not r.degenerate])
    written = [f"{out_prefix}_reports.csv"]
    if ps.size:
        points = harness.quantile_plot_points(ps)
        harness.emit_svg_plot(points, f"{out_prefix}_quantile.svg",
                              style="quantile")
        written.append(f"{out_prefix}_quantile.svg")
    return written


def _summarize(reports):
    ps = np.array([r.p_value for r in reports if not r.degenerate])
    degenerate = sum(r.degenerate for r in reports)
    line = f"replications={len(reports)} degenerate={degenerate}"
    if ps.size:
        line += f" rejection@5%={np.mean(ps < 0.05):.4f}"
    return line


def _cmd_simulate(args) -> int:
    subset_mode, subset_m = _parse_subset(args.subset)
    config = ExperimentConfig(
        model=_build_model(args), n=args.n, c=_parse_thresholds(args.c),
        k=args.k, replications=args.reps, subset_mode=subset_mode,
        subset_m=subset_m, margins=args.margins, seed=args.seed,
        output=args.out,
    )
    reports = harness.run_replicated_test(config)
    print(_summarize(reports))
    if args.out:
        for path in _emit_reports(reports, args.out):
            print(f"wrote {path}")
    return 0


def _cmd_curve(args) -> int:
    if args.data:
        data = harness.load_dataset_csv(args.data)
        subset_mode, subset_m = _parse_subset(args.subset)
        if subset_mode == "full":
            subset = None
        elif subset_mode == "auto":
            from .exceedance import default_subset_size

            subset = default_subset_size(data.shape[0])
        else:
            subset = subset_m
        curve = harness.pvalue_curve(data, _parse_thresholds(args.c), args.k,
                                     margins="empirical", subset=subset)
    else:
        model = _build_model(args)
        data = model.sample(args.n, args.seed)
        curve = harness.pvalue_curve(data, _parse_thresholds(args.c), args.k)
    finite = np.isfinite(curve.p_values)
    print(f"thresholds={curve.thresholds.size} "
          f"below5%={int(np.sum(curve.p_values[finite] < 0.05))} "
          f"fingerprint={curve.dataset_fingerprint}")
    if args.out:
        harness.emit_curve_csv(curve, f"{args.out}_curve.csv")
        points = np.column_stack([curve.thresholds, curve.p_values])
        harness.emit_svg_plot(points, f"{args.out}_curve.svg", style="curve")
        print(f"wrote {args.out}_curve.csv")
        print(f"wrote {args.out}_curve.svg")
    return 0


def _cmd_test(args) -> int:
    data = harness.load_dataset_csv(args.data)
    subset_mode, subset_m = _parse_subset(args.subset)
    if subset_mode == "full":
        subset = None
    elif subset_mode == "auto":
        from .exceedance import default_subset_size

        subset = default_subset_size(data.shape[0])
    else:
        subset = subset_m
    cs = _parse_thresholds(args.c)
    if cs.size != 1:
        raise ConfigError("test takes a scalar threshold")
    report = harness.run_single_test(data, float(cs[0]), args.k,
                                     margins="empirical", subset=subset,
                                     family=args.data, seed=args.seed)
    if report.degenerate:
        print(f"degenerate sample: no exceedances at c={report.c}")
        return 3
    print(f"n={report.n} m={report.m} c={report.c:g} k={report.k} "
          f"statistic={report.statistic:.6g} p_value={report.p_value:.6g} "
          f"m_d_hat={report.m_d_hat:.4f} "
          f"counts={[int(x) for x in report.counts.counts]}")
    if args.out:
        harness.emit_reports_csv([report], f"{args.out}_report.csv")
        print(f"wrote {args.out}_report.csv")
    return 0


def _cmd_dist(args) -> int:
    law = limitdist.null_law(args.k)
    cdf = limitdist.cdf(law, args.x)
    print(f"k={args.k} x={args.x:g} cdf={cdf:.10f} p_value={1.0 - cdf:.10f}")
    return 0


def _cmd_process(args) -> int:
    subset_mode, subset_m = _parse_subset(args.subset)
    model = ProcessModel(lam=args.lam, grid=GridSpec.equidistant(args.grid_d))
    config = ExperimentConfig(
        model=model, n=args.n, c=_parse_thresholds(args.c), k=args.k,
        replications=args.reps, subset_mode=subset_mode, subset_m=subset_m,
        margins="empirical", seed=args.seed, output=args.out,
    )
    reports = harness.run_replicated_test(config)
    print(_summarize(reports))
    if args.out:
        for path in _emit_reports(reports, args.out):
            print(f"wrote {path}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gpctest",
        description="Test whether the copula of data lies near a generalized "
                    "Pareto copula.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("simulate", help="replicated tests on a copula family")
    _add_model_flags(p)
    _add_common_flags(p, default_subset="full")
    p.add_argument("--reps", type=int, default=1000)
    p.add_argument("--margins", default="known", choices=["known", "empirical"])
    p.set_defaults(func=_cmd_simulate)

    p = sub.add_parser("curve", help="p-value curve for one dataset")
    _add_model_flags(p)
    _add_common_flags(p)
    p.add_argument("--data", default=None,
                   help="CSV dataset to use instead of simulating "
                        "(empirical thresholds)")
    p.set_defaults(func=_cmd_curve, c="0.01:0.60:60")

    p = sub.add_parser("test", help="one-shot test on a CSV dataset")
    p.add_argument("--data", required=True, help="headered CSV, one row per "
                                                 "observation")
    _add_common_flags(p, default_subset="auto")
    p.set_defaults(func=_cmd_test)

    p = sub.add_parser("dist", help="query the null limit law")
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--x", type=float, required=True)
    p.set_defaults(func=_cmd_dist)

    p = sub.add_parser("process", help="replicated tests on sample paths")
    p.add_argument("--lambda", dest="lam", type=float, default=0.0)
    p.add_argument("--grid-d", type=int, default=50)
    _add_common_flags(p, default_subset="auto")
    p.add_argument("--reps", type=int, default=500)
    p.set_defaults(func=_cmd_process)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ConfigError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (limitdist.QuadratureError, DegenerateSampleError,
            np.linalg.LinAlgError) as exc:
        print(f"numeric failure: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
