#!/usr/bin/env python3
"""Testing grid-observed sample paths.

Functional data arrive as paths observed at finitely many time points.  The
demo process is the pointwise maximum of two exponential envelopes anchored
at the interval endpoints, scaled by a shared sine-log amplitude: at lam = 0
it is a generalized Pareto process, at lam != 0 its copula process leaves
the functional max-domain of attraction.  Margins are identical across time
but unknown in practice, so counting uses per-column empirical thresholds
and a slowly growing subset of paths.
"""

import pathlib

import numpy as np

import gpctest as g
from gpctest import harness
from gpctest.harness import ExperimentConfig

OUT = pathlib.Path(__file__).parent / "out"
OUT.mkdir(exist_ok=True)

grid = g.GridSpec.equidistant(50)

print("=== one batch of paths ===")
sample = g.sample_pareto_process(2_000, 0.0, grid, seed=5)
print(f"paths: {sample.values.shape[0]}, grid points: {sample.grid.d}, "
      f"all nonpositive: {bool(np.all(sample.values <= 0))}")
col_means = sample.values.mean(axis=0)
print("column means vary little across time (identical margins):",
      f"spread {col_means.max() - col_means.min():.4f}")
harness.save_process_csv(sample, OUT / "paths.csv")
print(f"wrote {OUT}/paths.csv (first row = grid)")

print()
print("=== copula-scale grid maxima ===")
u = g.process_margin_cdf(sample.values, 0.0)
c = 0.05
print(f"P(max_t U_t > {1-c}) = {np.mean(u.max(axis=1) > 1 - c):.4f} "
      f"vs c * 4/3 = {c * 4 / 3:.4f}")
print("(the endpoints carry independent envelopes, so the grid extremal")
print(" coefficient is 4/3 whatever the grid resolution)")

print()
print("=== replicated tests on path data: why the subset matters ===")
for lam in (0.0, 0.7):
    for mode in ("auto", "full"):
        config = ExperimentConfig(model=g.ProcessModel(lam, grid), n=10_000,
                                  c=0.2, k=2, replications=100,
                                  subset_mode=mode, margins="empirical", seed=6)
        reports = harness.run_replicated_test(config)
        ps = np.array([r.p_value for r in reports if not r.degenerate])
        print(f"lam={lam} subset={mode:4s} (m={config.subset_size:5d}): "
              f"reject@5% = {np.mean(ps < 0.05):.3f}")

print()
print("with the slowly growing subset the null (lam=0) calibrates near 5%.")
print("counting every path instead reuses the rows that defined the empirical")
print("thresholds: the counts under-disperse and the null test goes silent")
print("(0% rejections), even though the lam=0.7 drift is still flagged.")
print("detecting lam=0.7 with the honest subset needs a larger sample, since")
print("the effective count is only m*c paths.")
