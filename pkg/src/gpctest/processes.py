"""Grid-observed sample paths for the functional version of the test.

The path construction takes two independent standard negative exponential
variables ``eta1, eta2`` (anchored at the two interval endpoints) plus a
shared sine-log amplitude V and sets

    X_t = -V / (2 exp(max(eta1 / (1 - t), eta2 / t))),   t in [0, 1].

All paths are nonpositive and every time point has the same continuous
marginal df.  For ``lam = 0`` the process is a generalized Pareto process,
so its copula process is in the functional max-domain of attraction of a
standard max-stable process; for ``lam != 0`` it is not.  Paths are only
ever evaluated on a finite grid that must contain both endpoints.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .copulas import _check_lambda, sinelog_margin_cdf, sinelog_quantile
from .rng import as_generator, open_uniform


@dataclass(frozen=True, eq=False)
class GridSpec:
    """Strictly increasing observation points with t_1 = 0 and t_d = 1."""

    points: np.ndarray

    def __post_init__(self):
        pts = np.asarray(self.points, dtype=float)
        object.__setattr__(self, "points", pts)
        if pts.ndim != 1 or pts.size < 2:
            raise ValueError("grid needs at least the two endpoints")
        if pts[0] != 0.0 or pts[-1] != 1.0:
            raise ValueError("grid must start at 0 and end at 1 exactly")
        if np.any(np.diff(pts) <= 0.0):
            raise ValueError("grid points must be strictly increasing")

    @property
    def d(self) -> int:
        return int(self.points.size)

    @classmethod
    def equidistant(cls, d: int) -> "GridSpec":
        if d < 2:
            raise ValueError("equidistant grid needs d >= 2")
        return cls(np.linspace(0.0, 1.0, d))


@dataclass(frozen=True, eq=False)
class ProcessSample:
    """n paths observed on a grid; ``values[i, r]`` is path i at point r."""

    values: np.ndarray
    grid: GridSpec
    lam: float

    def margin_cdf(self, x):
        """Common marginal df of every observation point."""
        return process_margin_cdf(x, self.lam)


def process_margin_cdf(x, lam):
    """Marginal df of the path values: ``sinelog_margin_cdf(2x, lam)`` on x <= 0.

    The maximum of the two rescaled exponentials is again standard negative
    exponential, so each X_t is distributed as -V/(2S) with S uniform.
    """
    arr = np.asarray(x, dtype=float)
    if np.any(arr > 0.0):
        raise ValueError("x must be nonpositive")
    return sinelog_margin_cdf(2.0 * arr, lam)


def sample_pareto_process(n: int, lam: float, grid: GridSpec, seed) -> ProcessSample:
    """Draw n paths on the grid; lam = 0 gives a generalized Pareto process.

    At the endpoints only the surviving branch is evaluated: the competing
    exponent tends to -infinity there, so X_0 = -V/(2 exp(eta1)) and
    X_1 = -V/(2 exp(eta2)).
    """
    lam = _check_lambda(lam)
    if n < 1:
        raise ValueError("n must be >= 1")
    rng = as_generator(seed)
    eta1 = np.log(open_uniform(rng, n))
    eta2 = np.log(open_uniform(rng, n))
    v = sinelog_quantile(open_uniform(rng, n), lam)
    t = grid.points
    with np.errstate(divide="ignore"):
        left = eta1[:, None] / (1.0 - t)[None, :]
        right = eta2[:, None] / t[None, :]
    left[:, -1] = -np.inf
    right[:, 0] = -np.inf
    values = -v[:, None] / (2.0 * np.exp(np.maximum(left, right)))
    return ProcessSample(values=values, grid=grid, lam=lam)


@dataclass(frozen=True, eq=False)
class ProcessModel:
    """Descriptor for replicated experiments on grid-observed paths."""

    lam: float
    grid: GridSpec

    def sample(self, n: int, seed) -> ProcessSample:
        return sample_pareto_process(n, self.lam, self.grid, seed)

    @property
    def dimension(self) -> int:
        return self.grid.d

    @property
    def label(self) -> str:
        return f"process(lam={self.lam:g},d={self.grid.d})"
