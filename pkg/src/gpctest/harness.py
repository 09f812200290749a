"""Replicated experiments, p-value curves, and CSV/SVG emission.

Everything here is deterministic given (config, seed): replication r of
threshold index ci draws from the substream keyed by (ci, r), so results do
not depend on execution order and identical configs produce byte-identical
CSV files.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from . import limitdist
from .exceedance import (
    ExceedanceCounts,
    count_exceedances,
    count_exceedances_empirical,
    count_exceedances_process,
    default_subset_size,
)
from .processes import ProcessModel, ProcessSample
from .rng import substream
from .statistic import (
    DegenerateSampleError,
    TestReport,
    degenerate_report,
    make_report,
    t_statistic,
)

REPORT_HEADER = "rep,n,m,c,k,statistic,p_value,m_d_hat"
CURVE_HEADER = "c,p_value"


class ConfigError(ValueError):
    """Invalid experiment configuration."""


@dataclass(frozen=True, eq=False)
class ExperimentConfig:
    """A replicated experiment: model, sample size, threshold(s), ladder, seed.

    ``c`` may be a scalar or a strictly increasing grid.  ``subset_mode`` is
    one of "full" (count all rows), "auto" (prefix of size floor(n/log^2 n)),
    or "m" with ``subset_m`` giving an explicit prefix size.  ``margins``
    selects known-margin counting ("known", for copula data) or empirical
    per-column thresholds ("empirical"); process models always use
    empirical thresholds.
    """

    model: object
    n: int
    c: float | Sequence[float]
    k: int
    replications: int
    subset_mode: str = "full"
    subset_m: int | None = None
    margins: str = "known"
    seed: int = 0
    output: str | None = None
    thresholds: np.ndarray = field(init=False, repr=False)

    def __post_init__(self):
        if self.n < 1:
            raise ConfigError("n must be >= 1")
        if self.replications < 1:
            raise ConfigError("replications must be >= 1")
        if int(self.k) != self.k or self.k < 2:
            raise ConfigError(f"k must be an integer >= 2, got {self.k}")
        cs = np.atleast_1d(np.asarray(self.c, dtype=float))
        if np.any((cs <= 0.0) | (cs >= 1.0)):
            raise ConfigError("thresholds must lie in (0, 1)")
        if cs.size > 1 and np.any(np.diff(cs) <= 0.0):
            raise ConfigError("a threshold grid must be strictly increasing")
        object.__setattr__(self, "thresholds", cs)
        if self.subset_mode not in ("full", "auto", "m"):
            raise ConfigError(f"unknown subset mode {self.subset_mode!r}")
        if self.subset_mode == "m":
            if self.subset_m is None or not 1 <= self.subset_m <= self.n:
                raise ConfigError("subset_m must lie in [1, n]")
        if self.margins not in ("known", "empirical"):
            raise ConfigError(f"unknown margins mode {self.margins!r}")

    @property
    def subset_size(self) -> int:
        if self.subset_mode == "full":
            return self.n
        if self.subset_mode == "auto":
            return default_subset_size(self.n)
        return int(self.subset_m)


def compute_counts(data, c: float, k: int, margins: str = "known",
                   subset=None) -> ExceedanceCounts:
    """Dispatch counting for copula matrices, raw matrices, or path samples."""
    if isinstance(data, ProcessSample):
        return count_exceedances_process(data, c, k, subset=subset)
    if margins == "empirical":
        return count_exceedances_empirical(data, c, k, subset=subset)
    if subset is not None:
        data = np.asarray(data)[: int(subset)]
    return count_exceedances(data, c, k)


def run_single_test(data, c: float, k: int, margins: str = "known",
                    subset=None, family: str = "data", seed: int = 0) -> TestReport:
    """One test on one dataset; degenerate samples yield a NaN report."""
    counts = compute_counts(data, c, k, margins=margins, subset=subset)
    try:
        t = t_statistic(counts)
    except DegenerateSampleError:
        return degenerate_report(counts, family=family, seed=seed)
    p = limitdist.p_value(limitdist.null_law(k), t)
    return make_report(counts, p, family=family, seed=seed)


def run_replicated_test(config: ExperimentConfig) -> list[TestReport]:
    """Run the configured experiment; one report per (threshold, replication).

    Replication r with threshold index ci samples from the substream keyed
    by (ci, r).  Degenerate replications are recorded, not fatal.
    """
    law = limitdist.null_law(config.k)
    is_process = isinstance(config.model, ProcessModel)
    margins = "empirical" if is_process else config.margins
    subset = None if config.subset_mode == "full" else config.subset_size
    reports = []
    for ci, c in enumerate(config.thresholds):
        for r in range(config.replications):
            data = config.model.sample(config.n, substream(config.seed, ci, r))
            counts = compute_counts(data, float(c), config.k,
                                    margins=margins, subset=subset)
            try:
                t = t_statistic(counts)
            except DegenerateSampleError:
                reports.append(degenerate_report(counts, config.model.label,
                                                 config.seed))
                continue
            p = limitdist.p_value(law, t)
            reports.append(make_report(counts, p, config.model.label, config.seed))
    return reports


def rejection_rate(reports: Sequence[TestReport], level: float = 0.05) -> float:
    """Fraction of non-degenerate replications with p-value below the level."""
    ps = np.array([r.p_value for r in reports if not r.degenerate])
    if ps.size == 0:
        raise DegenerateSampleError("all replications were degenerate")
    return float(np.mean(ps < level))


def quantile_plot_points(p_values) -> np.ndarray:
    """Points (j/(R+1), p_(j)) of the ordered p-values, j = 1..R."""
    ps = np.sort(np.asarray(p_values, dtype=float))
    if ps.size == 0:
        raise ValueError("need at least one p-value")
    r = ps.size
    return np.column_stack([np.arange(1, r + 1) / (r + 1.0), ps])


@dataclass(frozen=True, eq=False)
class PValueCurve:
    """p-values of one dataset over a threshold grid; NaN marks degenerate c."""

    thresholds: np.ndarray
    p_values: np.ndarray
    dataset_fingerprint: str

    def __post_init__(self):
        t = np.asarray(self.thresholds, dtype=float)
        p = np.asarray(self.p_values, dtype=float)
        object.__setattr__(self, "thresholds", t)
        object.__setattr__(self, "p_values", p)
        if t.shape != p.shape or t.ndim != 1:
            raise ValueError("thresholds and p-values must have equal length")


def dataset_fingerprint(data) -> str:
    arr = np.ascontiguousarray(np.asarray(data, dtype=float))
    digest = hashlib.sha256()
    digest.update(str(arr.shape).encode())
    digest.update(arr.tobytes())
    return digest.hexdigest()[:16]


def default_threshold_grid(count: int = 60, lo: float = 0.01,
                           hi: float = 0.60) -> np.ndarray:
    return np.linspace(lo, hi, count)


def pvalue_curve(data, thresholds, k: int, margins: str = "known",
                 subset=None) -> PValueCurve:
    """p-value at each threshold, all computed on the same dataset."""
    cs = np.atleast_1d(np.asarray(thresholds, dtype=float))
    if np.any((cs <= 0.0) | (cs >= 1.0)):
        raise ConfigError("thresholds must lie in (0, 1)")
    if cs.size > 1 and np.any(np.diff(cs) <= 0.0):
        raise ConfigError("threshold grid must be strictly increasing")
    law = limitdist.null_law(k)
    values = np.empty_like(cs)
    for i, c in enumerate(cs):
        report = run_single_test(data, float(c), k, margins=margins, subset=subset)
        values[i] = report.p_value
    raw = data.values if isinstance(data, ProcessSample) else data
    return PValueCurve(cs, values, dataset_fingerprint(raw))


# ---------------------------------------------------------------------------
# CSV / SVG emission


def _fmt(x: float) -> str:
    if np.isnan(x):
        return ""
    return f"{x:.17g}"


def emit_reports_csv(reports: Sequence[TestReport], path) -> None:
    """One row per replication: rep,n,m,c,k,statistic,p_value,m_d_hat,n1..nk."""
    if not reports:
        raise ValueError("no reports to write")
    k = reports[0].k
    header = REPORT_HEADER + "," + ",".join(f"n{j}" for j in range(1, k + 1))
    lines = [header]
    for rep, r in enumerate(reports):
        cells = [str(rep), str(r.n), str(r.m), _fmt(r.c), str(r.k),
                 _fmt(r.statistic), _fmt(r.p_value), _fmt(r.m_d_hat)]
        cells += [str(int(x)) for x in r.counts.counts]
        lines.append(",".join(cells))
    _write_text(path, "\n".join(lines) + "\n")


def emit_curve_csv(curve: PValueCurve, path) -> None:
    """Rows c,p_value; degenerate thresholds leave the p-value field empty."""
    lines = [CURVE_HEADER]
    for c, p in zip(curve.thresholds, curve.p_values):
        lines.append(f"{_fmt(c)},{_fmt(p)}")
    _write_text(path, "\n".join(lines) + "\n")


def parse_reports_csv(path) -> list[dict]:
    rows = []
    with open(path, "r", encoding="utf-8") as fh:
        header = fh.readline().strip().split(",")
        for line in fh:
            cells = line.rstrip("\n").split(",")
            rows.append({
                name: (float(cell) if cell else float("nan"))
                for name, cell in zip(header, cells)
            })
    return rows


def parse_curve_csv(path) -> PValueCurve:
    cs, ps = [], []
    with open(path, "r", encoding="utf-8") as fh:
        fh.readline()
        for line in fh:
            c_cell, p_cell = line.rstrip("\n").split(",")
            cs.append(float(c_cell))
            ps.append(float(p_cell) if p_cell else float("nan"))
    return PValueCurve(np.array(cs), np.array(ps), "")


def save_dataset_csv(data, path) -> None:
    """Observations as CSV: header of column indices, one row per observation."""
    arr = np.asarray(data, dtype=float)
    if arr.ndim != 2:
        raise ValueError("data must be an n x d matrix")
    lines = [",".join(str(i) for i in range(arr.shape[1]))]
    lines += [",".join(_fmt(x) for x in row) for row in arr]
    _write_text(path, "\n".join(lines) + "\n")


def load_dataset_csv(path) -> np.ndarray:
    """Read a headered CSV of observations back into an n x d matrix."""
    try:
        data = np.loadtxt(path, delimiter=",", skiprows=1, ndmin=2)
    except OSError as exc:
        raise ConfigError(f"cannot read dataset {path}: {exc}") from exc
    if data.size == 0:
        raise ConfigError(f"dataset {path} holds no observations")
    return data


def save_process_csv(sample: ProcessSample, path) -> None:
    """Paths as CSV: the first row stores the grid, then one row per path."""
    lines = [",".join(_fmt(t) for t in sample.grid.points)]
    lines += [",".join(_fmt(x) for x in row) for row in sample.values]
    _write_text(path, "\n".join(lines) + "\n")


def load_process_csv(path) -> tuple[np.ndarray, np.ndarray]:
    with open(path, "r", encoding="utf-8") as fh:
        grid = np.array([float(x) for x in fh.readline().strip().split(",")])
    values = np.loadtxt(path, delimiter=",", skiprows=1, ndmin=2)
    return grid, values


def _write_text(path, text: str) -> None:
    try:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    except OSError as exc:
        raise OSError(f"cannot write {path}: {exc}") from exc


_SVG_SIZE = 480
_SVG_MARGIN = 48


def _svg_scale(x, lo, hi):
    inner = _SVG_SIZE - 2 * _SVG_MARGIN
    return _SVG_MARGIN + inner * (x - lo) / (hi - lo)


def emit_svg_plot(points, path, style: str, title: str = "") -> None:
    """Scatter plot as a standalone SVG with a reference line.

    ``style`` "quantile" draws the diagonal (uniform quantiles); "curve"
    draws the horizontal 5% line.  One circle per finite point; NaN points
    are skipped.
    """
    if style not in ("quantile", "curve"):
        raise ValueError(f"unknown plot style {style!r}")
    pts = np.asarray(points, dtype=float)
    if pts.ndim != 2 or pts.shape[1] != 2:
        raise ValueError("points must be an R x 2 array")
    x_lo, x_hi = (0.0, 1.0)
    if style == "curve":
        finite = pts[np.isfinite(pts[:, 0])]
        x_hi = max(1e-9, float(finite[:, 0].max())) if finite.size else 1.0
        x_lo = 0.0
    size = _SVG_SIZE
    m = _SVG_MARGIN
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
        f'viewBox="0 0 {size} {size}">',
        f'<rect x="{m}" y="{m}" width="{size - 2 * m}" height="{size - 2 * m}" '
        'fill="white" stroke="black" stroke-width="1"/>',
    ]
    if title:
        parts.append(
            f'<text x="{size / 2:g}" y="{m - 12}" text-anchor="middle" '
            f'font-size="14">{title}</text>'
        )
    if style == "quantile":
        x0, y0 = _svg_scale(0.0, x_lo, x_hi), size - _svg_scale(0.0, 0.0, 1.0)
        x1, y1 = _svg_scale(1.0, x_lo, x_hi), size - _svg_scale(1.0, 0.0, 1.0)
        parts.append(
            f'<line x1="{x0:.2f}" y1="{y0:.2f}" x2="{x1:.2f}" y2="{y1:.2f}" '
            'stroke="gray" stroke-dasharray="4 3" class="reference"/>'
        )
    else:
        y = size - _svg_scale(0.05, 0.0, 1.0)
        parts.append(
            f'<line x1="{_svg_scale(x_lo, x_lo, x_hi):.2f}" y1="{y:.2f}" '
            f'x2="{_svg_scale(x_hi, x_lo, x_hi):.2f}" y2="{y:.2f}" '
            'stroke="gray" stroke-dasharray="4 3" class="reference"/>'
        )
    for x, yv in pts:
        if not (np.isfinite(x) and np.isfinite(yv)):
            continue
        cx = _svg_scale(x, x_lo, x_hi)
        cy = size - _svg_scale(yv, 0.0, 1.0)
        parts.append(f'<circle cx="{cx:.2f}" cy="{cy:.2f}" r="2" fill="black"/>')
    parts.append("</svg>")
    _write_text(path, "\n".join(parts) + "\n")
