# -*- coding: utf-8 -*-

# Copyright (c) 2023, optimal_noise contributors
#
# Distributed under the terms of the GPL license version 3.
#
# The full license is in the file LICENSE, distributed with this software.

# pylint: disable=invalid-name

"""
This module provides the Gaussian mechanism used as the baseline: noise
``Normal(0, sigma ** 2)`` with ``sigma = sensitivity / (2 * delta)``, which
satisfies (0, delta)-differential privacy.
"""

import math
from dataclasses import dataclass
from enum import Enum
from typing import Optional

import numpy as np

from .exceptions import DomainError

_SQRT2 = math.sqrt(2.0)


class GaussianConvention(Enum):
    """
    This class is used as the argument to :py:func:`gaussian_cost` to choose
    how the cost of the Gaussian mechanism is measured.

    ``SigmaPower`` takes ``sigma ** n``, treating ``sigma`` as the noise
    amplitude; this is the default for comparisons.
    ``ExactMoment`` takes the true moment ``E|X| ** n``.
    """

    SigmaPower = 0
    ExactMoment = 1


@dataclass(frozen=True)
class GaussianBaseline:
    """
    The Gaussian mechanism with standard deviation :py:attr:`sigma`, for
    queries of sensitivity :py:attr:`sensitivity`, calibrated for
    :py:attr:`delta` (``None`` if ``sigma`` was chosen directly).
    """

    sigma: float
    sensitivity: float
    delta: Optional[float] = None

    def __post_init__(self):
        if not 0 < self.sigma < math.inf:
            raise DomainError("sigma", self.sigma, "sigma must be positive")
        if not 0 < self.sensitivity < math.inf:
            raise DomainError(
                "sensitivity", self.sensitivity, "sensitivity must be positive"
            )
        if self.delta is not None and not 0 < self.delta < 1:
            raise DomainError("delta", self.delta, "delta must lie in (0,1)")


def normal_cdf(x: float) -> float:
    """
    Returns the standard normal distribution function at ``x``, accurate to
    about ``1e-16`` absolute error.
    """
    z = x / _SQRT2
    if abs(z) < 1 / _SQRT2:
        return 0.5 + 0.5 * math.erf(z)
    y = 0.5 * math.erfc(abs(z))
    return 1.0 - y if z > 0 else y


def calibrate_gaussian(delta: float, sensitivity: float) -> GaussianBaseline:
    """
    Returns the Gaussian mechanism with ``sigma = sensitivity / (2 * delta)``.

    :raises DomainError: unless ``0 < delta < 1`` and ``sensitivity > 0``.
    """
    if not 0 < delta < 1:
        raise DomainError("delta", delta, "delta must lie in (0,1)")
    if not 0 < sensitivity < math.inf:
        raise DomainError(
            "sensitivity", sensitivity, "sensitivity must be positive"
        )
    return GaussianBaseline(sensitivity / (2 * delta), sensitivity, delta)


def _double_factorial(k: int) -> int:
    return math.prod(range(k, 0, -2))


def gaussian_cost(
    g: GaussianBaseline,
    n: float,
    convention: GaussianConvention = GaussianConvention.SigmaPower,
) -> float:
    """
    Returns the ``n``-th moment cost of the Gaussian mechanism ``g``.

    With ``SigmaPower`` this is ``sigma ** n``. With ``ExactMoment`` it is
    ``E|X| ** n`` for ``X ~ Normal(0, sigma ** 2)``: ``sigma * sqrt(2 / pi)``
    for ``n = 1`` and ``sigma ** n * (n - 1)!!`` for even ``n``.

    :raises DomainError: if ``n < 1``, or ``ExactMoment`` is requested for an
      ``n`` other than 1 or an even integer.
    """
    if not isinstance(convention, GaussianConvention):
        raise TypeError("the 3rd argument must be a GaussianConvention")
    if not 1 <= n < math.inf:
        raise DomainError("n", n, "n must be a real number >= 1")
    if convention is GaussianConvention.SigmaPower:
        return g.sigma**n
    if n == 1:
        return g.sigma * math.sqrt(2 / math.pi)
    if float(n).is_integer() and int(n) % 2 == 0:
        return g.sigma**n * _double_factorial(int(n) - 1)
    raise DomainError(
        "n", n, "the exact moment is only available for n = 1 or even n"
    )


def sample_gaussian(g: GaussianBaseline, rng: np.random.Generator) -> float:
    """
    Draw one value from ``Normal(0, sigma ** 2)`` as ``sigma`` times a
    ``standard_normal`` draw from ``rng``.
    """
    return g.sigma * float(rng.standard_normal())


def sample_gaussian_batch(
    g: GaussianBaseline, rng: np.random.Generator, count: int
) -> np.ndarray:
    "Draw ``count`` values from ``Normal(0, sigma ** 2)`` as a numpy array."
    if count < 0:
        raise DomainError("count", count, "count must be nonnegative")
    return g.sigma * rng.standard_normal(count)
