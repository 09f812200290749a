"""Copula samplers and the analytic functions behind them.

The central object is a one-parameter bivariate family built from a shared
scale variable V with distribution function ``u (1 + lam sin(log u))`` on
[0, 1] (a sine-log perturbation of the uniform) and a uniform split
``(S, 1 - S)``: the pair ``(-V/S, -V/(1-S))`` is transformed to uniform
margins.  For ``lam = 0`` the resulting copula is a generalized Pareto
copula (GPC); for ``lam != 0`` its upper tail oscillates on a log scale and
the copula lies outside every max-domain of attraction, which makes the
family a sharp test case.  ``tail_integral_ratio`` exposes the oscillation
in closed form.

The module also provides exact samplers for the Clayton and
Gumbel-Hougaard families (frailty constructions) and the normal copula,
each wrapped in a :class:`CopulaModel` carrying ground-truth metadata: is
the copula a GPC, in a delta-neighborhood of one (and with which delta),
or not in any max-domain of attraction.

All samplers take an explicit seed and return an ``n x d`` array with
entries strictly inside (0, 1).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

import numpy as np
from scipy.special import ndtr

from .dnorms import DNorm, l1_tag, logistic_tag, split_uniform_tag
from .rng import as_generator, open_uniform

#: Largest admissible |lam|; beyond it the sine-log df is not monotone.
LAMBDA_MAX = np.sqrt(2.0) / 2.0

_BISECT_STEPS = 48  # bracket width 2^-48; df is 2-Lipschitz, so error < 1e-12


def _check_lambda(lam: float) -> float:
    lam = float(lam)
    if not np.isfinite(lam) or abs(lam) > LAMBDA_MAX:
        raise ValueError(f"lam must lie in [-sqrt(2)/2, sqrt(2)/2], got {lam}")
    return lam


def _scalar_or_array(out: np.ndarray, scalar_in: bool):
    return float(out) if scalar_in else out


def sinelog_cdf(u, lam):
    """Distribution function ``u (1 + lam sin(log u))`` on [0, 1].

    Continuous and nondecreasing for ``|lam| <= sqrt(2)/2``, with value 0 at
    u = 0 (limit) and 1 at u = 1.
    """
    lam = _check_lambda(lam)
    arr = np.asarray(u, dtype=float)
    if np.any((arr < 0.0) | (arr > 1.0)):
        raise ValueError("u must lie in [0, 1]")
    safe = np.where(arr > 0.0, arr, 1.0)
    out = np.where(arr > 0.0, arr * (1.0 + lam * np.sin(np.log(safe))), 0.0)
    return _scalar_or_array(out, arr.ndim == 0)


def sinelog_quantile(p, lam):
    """Inverse of :func:`sinelog_cdf` by bracketing bisection on [0, 1].

    The returned u satisfies ``|sinelog_cdf(u, lam) - p| <= 1e-12``.
    Bisection is used deliberately: the density can come arbitrarily close
    to zero, which rules out Newton steps.
    """
    lam = _check_lambda(lam)
    arr = np.asarray(p, dtype=float)
    if np.any((arr < 0.0) | (arr > 1.0)):
        raise ValueError("p must lie in [0, 1]")
    lo = np.zeros_like(arr)
    hi = np.ones_like(arr)
    for _ in range(_BISECT_STEPS):
        mid = 0.5 * (lo + hi)
        below = mid * (1.0 + lam * np.sin(np.log(mid))) < arr
        lo = np.where(below, mid, lo)
        hi = np.where(below, hi, mid)
    out = 0.5 * (lo + hi)
    out = np.where(arr == 0.0, 0.0, out)
    out = np.where(arr == 1.0, 1.0, out)
    return _scalar_or_array(out, arr.ndim == 0)


def sinelog_margin_cdf(x, lam):
    """Margin df of ``-V/S`` for V sine-log distributed and S uniform.

    Defined on x <= 0:

    * ``(1/2 + lam/5) / |x|``                                for x <= -1,
    * ``1 - |x| (1/2 + (lam/5)(2 sin log|x| - cos log|x|))`` for -1 < x < 0,
    * 1 at x = 0.

    Continuous and strictly increasing on (-inf, 0].
    """
    lam = _check_lambda(lam)
    arr = np.asarray(x, dtype=float)
    if np.any(arr > 0.0):
        raise ValueError("x must be nonpositive")
    ax = np.abs(arr)
    safe = np.where(ax > 0.0, ax, 1.0)
    logax = np.log(safe)
    inner = 1.0 - ax * (0.5 + (lam / 5.0) * (2.0 * np.sin(logax) - np.cos(logax)))
    with np.errstate(divide="ignore"):
        outer = (0.5 + lam / 5.0) / np.where(ax > 0.0, ax, 1.0)
    out = np.where(ax >= 1.0, outer, inner)
    out = np.where(ax == 0.0, 1.0, out)
    return _scalar_or_array(out, arr.ndim == 0)


def tail_integral_ratio(t, lam):
    """Closed-form ratio of sine-log df integrals over [0, |t|/2] and [0, |t|].

    For -1 < t < 0 this equals ``1 - (1 - C(u, u)) / (2 (1 - u))`` with
    ``u = sinelog_margin_cdf(t, lam)``, i.e. the diagonal tail ratio of the
    sine-log copula.  For lam = 0 it is 1/4 for every t; for lam != 0 it
    oscillates in log|t| and has no limit as t -> 0, certifying that the
    copula is not in any max-domain of attraction.
    """
    lam = _check_lambda(lam)
    arr = np.asarray(t, dtype=float)
    if np.any((arr <= -1.0) | (arr >= 0.0)):
        raise ValueError("t must lie in (-1, 0)")
    a = np.log(np.abs(arr))
    b = a - np.log(2.0)
    num = 0.5 + (lam / 5.0) * (2.0 * np.sin(b) - np.cos(b))
    den = 0.5 + (lam / 5.0) * (2.0 * np.sin(a) - np.cos(a))
    return _scalar_or_array(0.25 * num / den, arr.ndim == 0)


def sample_sinelog_copula(n: int, lam: float, seed) -> np.ndarray:
    """Draw n observations from the bivariate sine-log copula.

    Construction: V from the sine-log df (by quantile transform), S uniform
    and independent, then the pair ``(-V/S, -V/(1-S))`` is mapped through
    its margin df :func:`sinelog_margin_cdf`.
    """
    lam = _check_lambda(lam)
    if n < 1:
        raise ValueError("n must be >= 1")
    rng = as_generator(seed)
    v = sinelog_quantile(open_uniform(rng, n), lam)
    s = open_uniform(rng, n)
    return np.column_stack(
        [
            sinelog_margin_cdf(-v / s, lam),
            sinelog_margin_cdf(-v / (1.0 - s), lam),
        ]
    )


def sample_clayton(n: int, d: int, theta: float, seed) -> np.ndarray:
    """Draw n observations from the d-variate Clayton copula, theta > 0.

    Gamma frailty construction: ``U_i = (1 + E_i / G)^(-1/theta)`` with G
    gamma(1/theta) and E_i iid standard exponential.  Negative theta (where
    the frailty construction fails) is not supported.
    """
    theta = float(theta)
    if not np.isfinite(theta) or theta <= 0.0:
        raise ValueError(
            f"Clayton sampler supports theta > 0 only (got {theta}); "
            "theta in [-1, 0) has no frailty representation and theta = 0 "
            "leaves the generator undefined"
        )
    if n < 1 or d < 2:
        raise ValueError("need n >= 1 and d >= 2")
    rng = as_generator(seed)
    g = rng.gamma(1.0 / theta, size=n)
    e = rng.exponential(size=(n, d))
    with np.errstate(divide="ignore"):
        u = (1.0 + e / g[:, None]) ** (-1.0 / theta)
    return np.clip(u, 2.0 ** -53, 1.0 - 2.0 ** -53)


def sample_gumbel(n: int, d: int, theta: float, seed) -> np.ndarray:
    """Draw n observations from the d-variate Gumbel-Hougaard copula, theta >= 1.

    Positive-stable frailty: S stable with index 1/theta via the
    Chambers-Mallows-Stuck construction, then ``U_i = exp(-(E_i/S)^(1/theta))``.
    Exact and rejection-free; theta = 1 is the independence copula.
    """
    theta = float(theta)
    if not np.isfinite(theta) or theta < 1.0:
        raise ValueError(f"Gumbel sampler requires theta >= 1, got {theta}")
    if n < 1 or d < 2:
        raise ValueError("need n >= 1 and d >= 2")
    rng = as_generator(seed)
    if theta == 1.0:
        return open_uniform(rng, (n, d))
    alpha = 1.0 / theta
    ang = np.pi * open_uniform(rng, n)
    w = rng.exponential(size=n)
    s = (
        np.sin(alpha * ang)
        / np.sin(ang) ** (1.0 / alpha)
        * (np.sin((1.0 - alpha) * ang) / w) ** ((1.0 - alpha) / alpha)
    )
    e = rng.exponential(size=(n, d))
    u = np.exp(-((e / s[:, None]) ** alpha))
    return np.clip(u, 2.0 ** -53, 1.0 - 2.0 ** -53)


def sample_normal_copula(n: int, corr, seed) -> np.ndarray:
    """Draw n observations from the normal copula with correlation matrix corr.

    Lower-triangular (Cholesky) factorization of corr; raises
    ``numpy.linalg.LinAlgError`` when corr is not positive definite.
    """
    corr = np.asarray(corr, dtype=float)
    if corr.ndim != 2 or corr.shape[0] != corr.shape[1]:
        raise ValueError("corr must be a square matrix")
    if not np.allclose(corr, corr.T, atol=1e-12):
        raise ValueError("corr must be symmetric")
    if not np.allclose(np.diag(corr), 1.0, atol=1e-12):
        raise ValueError("corr must have unit diagonal")
    if n < 1:
        raise ValueError("n must be >= 1")
    chol = np.linalg.cholesky(corr)
    rng = as_generator(seed)
    z = rng.standard_normal((n, corr.shape[0]))
    return np.clip(ndtr(z @ chol.T), 2.0 ** -53, 1.0 - 2.0 ** -53)


class Truth(enum.Enum):
    """Ground-truth tail classification of a copula model."""

    GPC = "gpc"
    DELTA_NEIGHBORHOOD = "delta-neighborhood"
    NOT_IN_DOMAIN = "not-in-domain-of-attraction"


@dataclass(frozen=True, eq=False)
class CopulaModel:
    """A copula family member plus its ground-truth tail metadata.

    ``truth`` states whether the copula is a generalized Pareto copula, in a
    delta-neighborhood of one (``delta`` holds the exponent), or outside
    every max-domain of attraction.  ``dnorm`` tags the attracting D-norm
    when one exists.
    """

    family: str
    dimension: int
    truth: Truth
    params: dict = field(repr=False)
    delta: float | None = None
    dnorm: DNorm | None = None

    def sample(self, n: int, seed) -> np.ndarray:
        if self.family == "sinelog":
            return sample_sinelog_copula(n, self.params["lam"], seed)
        if self.family == "clayton":
            return sample_clayton(n, self.dimension, self.params["theta"], seed)
        if self.family == "gumbel":
            return sample_gumbel(n, self.dimension, self.params["theta"], seed)
        if self.family == "normal":
            return sample_normal_copula(n, self.params["corr"], seed)
        raise ValueError(f"unknown family {self.family!r}")

    @property
    def label(self) -> str:
        if self.family == "sinelog":
            return f"sinelog(lam={self.params['lam']:g})"
        if self.family in ("clayton", "gumbel"):
            return f"{self.family}(theta={self.params['theta']:g},d={self.dimension})"
        return f"normal(d={self.dimension})"


def sinelog_model(lam: float) -> CopulaModel:
    """Sine-log family: a GPC at lam = 0, not in any domain of attraction else."""
    lam = _check_lambda(lam)
    if lam == 0.0:
        return CopulaModel(
            "sinelog", 2, Truth.GPC, {"lam": lam}, dnorm=split_uniform_tag()
        )
    return CopulaModel("sinelog", 2, Truth.NOT_IN_DOMAIN, {"lam": lam})


def clayton_model(theta: float, dimension: int = 2) -> CopulaModel:
    """Clayton family: a GPC at theta = -1, delta-neighborhood (delta = 1) else."""
    theta = float(theta)
    if not np.isfinite(theta) or theta < -1.0 or theta == 0.0:
        raise ValueError(f"Clayton requires theta in [-1, inf) \\ {{0}}, got {theta}")
    if dimension < 2:
        raise ValueError("dimension must be >= 2")
    if theta == -1.0:
        # Valid metadata, but the frailty sampler does not cover theta < 0.
        return CopulaModel(
            "clayton", dimension, Truth.GPC, {"theta": theta}, dnorm=l1_tag(dimension)
        )
    return CopulaModel(
        "clayton",
        dimension,
        Truth.DELTA_NEIGHBORHOOD,
        {"theta": theta},
        delta=1.0,
        dnorm=l1_tag(dimension),
    )


def gumbel_model(theta: float, dimension: int = 2) -> CopulaModel:
    """Gumbel-Hougaard family with a finite delta tag: theta in [1, 2).

    theta = 1 is the independence copula, tagged as a GPC with the L1 norm;
    for 1 < theta < 2 the copula is in a delta-neighborhood with
    delta = 2 - theta of the GPC with the logistic norm.  The sampler itself
    supports every theta >= 1.
    """
    theta = float(theta)
    if not np.isfinite(theta) or not 1.0 <= theta < 2.0:
        raise ValueError(
            f"Gumbel model metadata requires theta in [1, 2), got {theta}"
        )
    if dimension < 2:
        raise ValueError("dimension must be >= 2")
    if theta == 1.0:
        return CopulaModel(
            "gumbel", dimension, Truth.GPC, {"theta": theta}, dnorm=l1_tag(dimension)
        )
    return CopulaModel(
        "gumbel",
        dimension,
        Truth.DELTA_NEIGHBORHOOD,
        {"theta": theta},
        delta=2.0 - theta,
        dnorm=logistic_tag(theta, dimension),
    )


def normal_model(corr) -> CopulaModel:
    """Normal copula with all pairwise correlations in (-1, 0).

    Lies in a delta-neighborhood of the independence GPC with
    ``delta = min rho_ij^2 / (1 - rho_ij^2)``.
    """
    corr = np.asarray(corr, dtype=float)
    if corr.ndim != 2 or corr.shape[0] != corr.shape[1] or corr.shape[0] < 2:
        raise ValueError("corr must be a square matrix of dimension >= 2")
    if not np.allclose(corr, corr.T, atol=1e-12):
        raise ValueError("corr must be symmetric")
    if not np.allclose(np.diag(corr), 1.0, atol=1e-12):
        raise ValueError("corr must have unit diagonal")
    d = corr.shape[0]
    off = corr[~np.eye(d, dtype=bool)]
    if np.any((off <= -1.0) | (off >= 0.0)):
        raise ValueError("off-diagonal correlations must lie in (-1, 0)")
    np.linalg.cholesky(corr)  # reject non-positive-definite matrices early
    delta = float(np.min(off ** 2 / (1.0 - off ** 2)))
    return CopulaModel(
        "normal",
        d,
        Truth.DELTA_NEIGHBORHOOD,
        {"corr": corr},
        delta=delta,
        dnorm=l1_tag(d),
    )
