"""Exceedance counts over the threshold ladder 1 - c/j, j = 1..k.

``n_j`` counts the observations exceeding the threshold ``1 - c/j`` in at
least one component.  The thresholds rise with j, so the counts are
nonincreasing in j.  Three variants share one counting engine:

* :func:`count_exceedances` -- copula data with known uniform margins;
  thresholds are the constants ``1 - c/j``.
* :func:`count_exceedances_empirical` -- raw data with unknown margins;
  per-column thresholds are the order statistics at the ceiling index
  ``<n (1 - c/j)>`` computed over all n rows, while counting may be
  restricted to a subset of rows.
* :func:`count_exceedances_process` -- same, for grid-observed paths.

Ties sit below the ladder by convention: only strict exceedance counts.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .processes import ProcessSample


@dataclass(frozen=True, eq=False)
class ExceedanceCounts:
    """The count vector (n_1, ..., n_k) plus its generating parameters.

    ``n`` is the number of rows thresholds were computed from, ``m`` the
    number of rows actually counted (m = n without subsetting).
    """

    counts: np.ndarray
    n: int
    m: int
    c: float
    k: int
    dimension: int

    def __post_init__(self):
        counts = np.asarray(self.counts, dtype=np.int64)
        object.__setattr__(self, "counts", counts)
        if self.k < 2 or counts.shape != (self.k,):
            raise ValueError("counts must hold k >= 2 entries")
        if not 0.0 < self.c < 1.0:
            raise ValueError(f"c must lie in (0, 1), got {self.c}")
        if self.m > self.n:
            raise ValueError("subset size m cannot exceed n")
        if np.any(counts < 0) or np.any(counts > self.m):
            raise ValueError("counts must lie in [0, m]")
        if np.any(np.diff(counts) > 0):
            raise ValueError("counts must be nonincreasing in j")


def default_subset_size(n: int) -> int:
    """Subset size floor(n / log^2 n), which keeps m log(m) / n small."""
    return max(1, int(n / math.log(max(n, 3)) ** 2))


def _resolve_subset(n: int, subset) -> np.ndarray | slice:
    if subset is None:
        return slice(None)
    if np.isscalar(subset):
        m = int(subset)
        if not 1 <= m <= n:
            raise ValueError(f"subset size must lie in [1, n], got {m}")
        return slice(0, m)
    idx = np.asarray(subset, dtype=np.int64)
    if idx.ndim != 1 or idx.size == 0:
        raise ValueError("subset must be a nonempty index vector")
    if idx.size > n or np.any(idx < 0) or np.any(idx >= n):
        raise ValueError("subset indices out of range")
    return idx


def _validate_matrix(data) -> np.ndarray:
    arr = np.asarray(data, dtype=float)
    if arr.ndim == 1:
        arr = arr[:, None]
    if arr.ndim != 2 or arr.size == 0:
        raise ValueError("data must be a nonempty n x d matrix")
    return arr


def _check_params(c: float, k: int):
    if not 0.0 < c < 1.0:
        raise ValueError(f"c must lie in (0, 1), got {c}")
    if int(k) != k or k < 2:
        raise ValueError(f"k must be an integer >= 2, got {k}")


def count_exceedances(data, c: float, k: int) -> ExceedanceCounts:
    """Counts against the known-margin thresholds 1 - c/j on copula data."""
    arr = _validate_matrix(data)
    _check_params(c, k)
    if np.any((arr < 0.0) | (arr > 1.0)):
        raise ValueError("copula data must lie in [0, 1]")
    n = arr.shape[0]
    row_max = arr.max(axis=1)
    counts = np.array(
        [int(np.sum(row_max > 1.0 - c / j)) for j in range(1, k + 1)],
        dtype=np.int64,
    )
    return ExceedanceCounts(counts, n=n, m=n, c=float(c), k=int(k),
                            dimension=arr.shape[1])


def order_statistic_index(n: int, q: float) -> int:
    """1-based order statistic index <n q>: the smallest integer >= n q.

    Guarded against float representation error so that an analytically
    integer n q never rounds up.
    """
    idx = math.ceil(n * q - 1e-9)
    if idx > n:
        raise ValueError(f"order statistic index {idx} exceeds n = {n}")
    return max(idx, 1)


def _empirical_thresholds(arr: np.ndarray, c: float, k: int) -> np.ndarray:
    """Per-column order statistics at <n(1 - c/j)>, shape (k, d).

    Partial selection instead of a full sort; only k positions per column
    are needed.
    """
    n = arr.shape[0]
    idx0 = [order_statistic_index(n, 1.0 - c / j) - 1 for j in range(1, k + 1)]
    part = np.partition(arr, idx0, axis=0)
    return part[idx0, :]


def _count_over(rows: np.ndarray, thresholds: np.ndarray) -> np.ndarray:
    counts = np.empty(thresholds.shape[0], dtype=np.int64)
    for j in range(thresholds.shape[0]):
        counts[j] = int(np.sum(np.any(rows > thresholds[j][None, :], axis=1)))
    return counts


def count_exceedances_empirical(data, c: float, k: int, subset=None) -> ExceedanceCounts:
    """Counts against per-column empirical thresholds, optionally on a subset.

    Thresholds are always computed from all n rows; only the counting is
    restricted to the subset (None for all rows, an int m for the first m
    rows, or an explicit index vector).  Invariant under strictly
    increasing margin transforms applied per column.
    """
    arr = _validate_matrix(data)
    _check_params(c, k)
    thresholds = _empirical_thresholds(arr, c, k)
    rows = arr[_resolve_subset(arr.shape[0], subset)]
    counts = _count_over(rows, thresholds)
    return ExceedanceCounts(counts, n=arr.shape[0], m=rows.shape[0], c=float(c),
                            k=int(k), dimension=arr.shape[1])


def count_exceedances_process(sample: ProcessSample, c: float, k: int,
                              subset=None) -> ExceedanceCounts:
    """Counts of paths exceeding per-grid-point empirical thresholds."""
    return count_exceedances_empirical(sample.values, c, k, subset=subset)
