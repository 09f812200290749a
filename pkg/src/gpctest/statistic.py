"""The chi-square type statistic and the extremal coefficient estimator."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .exceedance import ExceedanceCounts


class DegenerateSampleError(ValueError):
    """Raised when no observation exceeds any threshold.

    A vacuous sample must not masquerade as a non-rejection; it signals
    that c is too small for the available sample size.
    """


def _weighted_counts(counts: ExceedanceCounts) -> np.ndarray:
    j = np.arange(1, counts.k + 1, dtype=float)
    return j * counts.counts


def t_statistic(counts: ExceedanceCounts) -> float:
    """Quadratic statistic of the weighted counts j * n_j around their mean.

    ``sum_j (j n_j - mean)^2 / mean`` with ``mean = (1/k) sum_l l n_l``.
    Under the null the weighted counts share one mean, so the statistic does
    not require the extremal coefficient to be known.  Zero iff j * n_j is
    constant in j; scales linearly when all counts are scaled.
    """
    jn = _weighted_counts(counts)
    mean = jn.mean()
    if mean <= 0.0:
        raise DegenerateSampleError(
            f"all {counts.k} exceedance counts are zero at c = {counts.c}; "
            "the threshold is too high for this sample"
        )
    return float(np.sum((jn - mean) ** 2) / mean)


def estimate_extremal_coefficient(counts: ExceedanceCounts) -> float:
    """Consistent estimator ``(1/(m c k)) sum_j j n_j`` of the extremal coefficient.

    Returns the raw value; reports clip it to the feasible range [1, d].
    """
    return float(_weighted_counts(counts).sum() / (counts.m * counts.c * counts.k))


@dataclass(frozen=True, eq=False)
class TestReport:
    """One test outcome: statistic, p-value, extremal coefficient, provenance.

    ``m_d_hat`` is clipped to the feasible range [1, d] for reporting;
    ``m_d_raw`` keeps the unclipped estimate.  Degenerate samples carry NaN
    statistic and p-value.
    """

    statistic: float
    p_value: float
    m_d_hat: float
    m_d_raw: float
    counts: ExceedanceCounts
    family: str
    seed: int

    @property
    def n(self) -> int:
        return self.counts.n

    @property
    def m(self) -> int:
        return self.counts.m

    @property
    def c(self) -> float:
        return self.counts.c

    @property
    def k(self) -> int:
        return self.counts.k

    @property
    def degenerate(self) -> bool:
        return bool(np.isnan(self.statistic))


def make_report(counts: ExceedanceCounts, p_value: float, family: str,
                seed: int) -> TestReport:
    raw = estimate_extremal_coefficient(counts)
    return TestReport(
        statistic=t_statistic(counts),
        p_value=float(p_value),
        m_d_hat=float(np.clip(raw, 1.0, counts.dimension)),
        m_d_raw=raw,
        counts=counts,
        family=family,
        seed=seed,
    )


def degenerate_report(counts: ExceedanceCounts, family: str, seed: int) -> TestReport:
    raw = estimate_extremal_coefficient(counts)
    return TestReport(
        statistic=float("nan"),
        p_value=float("nan"),
        m_d_hat=float(np.clip(raw, 1.0, counts.dimension)),
        m_d_raw=raw,
        counts=counts,
        family=family,
        seed=seed,
    )
