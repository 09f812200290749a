"""Dependence norms (D-norms) of extreme value limits.

A D-norm encodes the tail dependence structure of a copula inside the
max-domain of attraction: the sup-norm corresponds to complete dependence,
the L1 norm to independence, and every D-norm sits between the two.  The
norm of the all-ones vector is the extremal coefficient, the effective
number of asymptotically independent components, always in ``[1, d]``.

Besides the classical norms this module provides the two bivariate norms
that arise from the shared-scale constructions used by the samplers:

* ``dnorm_split_uniform`` -- components driven by one uniform split
  ``(S, 1 - S)``; evaluates to ``|x|_1 - |x1||x2| / |x|_1``.
* ``dnorm_two_uniforms`` -- components driven by two independent uniforms;
  evaluates to ``|x|_inf + (|x|_1 - |x|_inf)^2 / (3 |x|_inf)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

import numpy as np


def dnorm_l1(x) -> float:
    """L1 norm; the D-norm of independent margins."""
    return float(np.sum(np.abs(np.asarray(x, dtype=float))))


def dnorm_sup(x) -> float:
    """Sup norm; the D-norm of completely dependent margins."""
    return float(np.max(np.abs(np.asarray(x, dtype=float))))


def dnorm_logistic(x, theta: float) -> float:
    """Logistic norm ``(sum |x_i|^theta)^(1/theta)``, theta >= 1."""
    if theta < 1:
        raise ValueError(f"logistic norm requires theta >= 1, got {theta}")
    ax = np.abs(np.asarray(x, dtype=float))
    return float(np.sum(ax ** theta) ** (1.0 / theta))


def dnorm_split_uniform(x) -> float:
    """Bivariate D-norm of the complementary uniform split construction.

    ``|x|_1 - |x1| |x2| / |x|_1`` for x != 0, and 0 at the origin.  Equals
    ``2 E max(|x1| S, |x2| (1 - S))`` for S uniform on (0, 1).
    """
    ax = np.abs(np.asarray(x, dtype=float))
    if ax.shape != (2,):
        raise ValueError("dnorm_split_uniform is defined for 2-vectors")
    l1 = ax[0] + ax[1]
    if l1 == 0.0:
        return 0.0
    return float(l1 - ax[0] * ax[1] / l1)


def dnorm_two_uniforms(x) -> float:
    """Bivariate D-norm of the independent-uniforms construction.

    ``|x|_inf + (|x|_1 - |x|_inf)^2 / (3 |x|_inf)`` for x != 0, and 0 at the
    origin.  Equals ``2 E max(|x1| U1, |x2| U2)`` for independent uniforms.
    """
    ax = np.abs(np.asarray(x, dtype=float))
    if ax.shape != (2,):
        raise ValueError("dnorm_two_uniforms is defined for 2-vectors")
    hi = float(np.max(ax))
    if hi == 0.0:
        return 0.0
    l1 = float(ax[0] + ax[1])
    return hi + (l1 - hi) ** 2 / (3.0 * hi)


@dataclass(frozen=True)
class DNorm:
    """A D-norm tag: a named evaluator plus its extremal coefficient."""

    kind: str
    evaluate: Callable[[np.ndarray], float] = field(repr=False)
    extremal_coefficient: float


def l1_tag(dimension: int) -> DNorm:
    return DNorm("l1", dnorm_l1, float(dimension))


def sup_tag(dimension: int) -> DNorm:
    return DNorm("sup", dnorm_sup, 1.0)


def logistic_tag(theta: float, dimension: int) -> DNorm:
    return DNorm(
        f"logistic({theta:g})",
        lambda x, _t=theta: dnorm_logistic(x, _t),
        float(dimension) ** (1.0 / theta),
    )


def split_uniform_tag() -> DNorm:
    return DNorm("split-uniform", dnorm_split_uniform, dnorm_split_uniform((1.0, 1.0)))


def two_uniforms_tag() -> DNorm:
    return DNorm("two-uniforms", dnorm_two_uniforms, dnorm_two_uniforms((1.0, 1.0)))
