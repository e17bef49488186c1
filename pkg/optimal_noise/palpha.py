# -*- coding: utf-8 -*-

# Copyright (c) 2023, optimal_noise contributors
#
# Distributed under the terms of the GPL license version 3.
#
# The full license is in the file LICENSE, distributed with this software.

# pylint: disable=invalid-name

"""
This module provides the uniform-with-atom noise distribution: a probability
mass ``alpha`` at the origin plus a uniform density ``(delta - alpha) /
sensitivity`` on ``[-W, W]`` with ``W = (1 - alpha) / (delta - alpha) *
sensitivity / 2``. Every member of this family satisfies (0, delta)-
differential privacy for queries of the given sensitivity, and for any
symmetric nondecreasing cost the best member is optimal.
"""

import json
import math
from dataclasses import dataclass, field
from typing import Tuple, Union

import numpy as np

from .constants import DEFAULT_QUAD_TOL, MASS_TOL
from .cost import CostSpec
from .exceptions import DomainError
from .histogram import Histogram
from .quadrature import adaptive_simpson


def _check_delta(delta: float) -> None:
    if not 0 < delta < 1:
        raise DomainError("delta", delta, "delta must lie in (0,1)")


def _check_sensitivity(sensitivity: float) -> None:
    if not 0 < sensitivity < math.inf:
        raise DomainError(
            "sensitivity",
            sensitivity,
            "sensitivity must be positive and finite",
        )


def _check_n(n: float) -> None:
    if not 1 <= n < math.inf:
        raise DomainError("n", n, "n must be a real number >= 1")


@dataclass(frozen=True)
class PAlphaDist:
    """
    The noise distribution with an atom of mass :py:attr:`alpha` at the origin
    and uniform density :py:attr:`density` on
    ``[-half_width, half_width]``.

    Use :py:func:`make_palpha` to construct instances; the derived fields are
    computed once at construction.
    """

    delta: float
    sensitivity: float
    alpha: float
    half_width: float = field(init=False)
    density: float = field(init=False)

    def __post_init__(self):
        _check_delta(self.delta)
        _check_sensitivity(self.sensitivity)
        if not 0 <= self.alpha:
            raise DomainError("alpha", self.alpha, "alpha must be >= 0")
        if not self.alpha < self.delta:
            raise DomainError(
                "alpha", self.alpha, f"alpha must be < delta = {self.delta}"
            )
        gap = self.delta - self.alpha
        object.__setattr__(
            self,
            "half_width",
            (1 - self.alpha) / gap * (self.sensitivity / 2),
        )
        object.__setattr__(self, "density", gap / self.sensitivity)

    def to_dict(self) -> dict:
        "Returns the defining parameters as a dict."
        return {
            "delta": self.delta,
            "sensitivity": self.sensitivity,
            "alpha": self.alpha,
        }


def make_palpha(delta: float, sensitivity: float, alpha: float) -> PAlphaDist:
    """
    Construct the distribution with atom ``alpha`` at the origin, calibrated
    for (0, ``delta``)-differential privacy at query sensitivity
    ``sensitivity``.

    :param delta: the privacy parameter, in ``(0, 1)``.
    :type delta: float
    :param sensitivity: the query sensitivity, positive.
    :type sensitivity: float
    :param alpha: the atom at the origin, in ``[0, delta)``.
    :type alpha: float

    :returns: A :py:class:`PAlphaDist`.

    :raises DomainError: if any argument is out of range; the ``parameter``
      attribute of the exception names the offending argument.
    """
    return PAlphaDist(float(delta), float(sensitivity), float(alpha))


def total_mass(d: PAlphaDist) -> float:
    "Returns ``alpha + 2 * half_width * density``, which is 1 up to rounding."
    return d.alpha + 2 * d.half_width * d.density


def pdf(d: PAlphaDist, x: float) -> float:
    """
    Returns the density of the continuous part of ``d`` at ``x``; the atom at
    the origin is not included, see :py:func:`atom_mass`.
    """
    return d.density if -d.half_width <= x <= d.half_width else 0.0


def atom_mass(d: PAlphaDist, x: float = 0.0) -> float:
    "Returns the probability of the single point ``x``."
    return d.alpha if x == 0 else 0.0


def cdf(d: PAlphaDist, x: float) -> float:
    """
    Returns the probability that a draw from ``d`` is at most ``x``.

    The function is right-continuous with a jump of size ``alpha`` at the
    origin.
    """
    W = d.half_width
    if x < -W:
        return 0.0
    if x >= W:
        return 1.0
    if x < 0:
        return d.density * (x + W)
    return min(1.0, d.density * (x + W) + d.alpha)


def interval_prob(d: PAlphaDist, a: float, b: float) -> float:
    """
    Returns the probability of the closed interval ``[a, b]``, including the
    atom if and only if ``a <= 0 <= b``.

    :raises DomainError: if ``a > b``.
    """
    if a > b:
        raise DomainError("a", a, f"expected a <= b = {b}")
    W = d.half_width
    overlap = max(0.0, min(b, W) - max(a, -W))
    result = d.density * overlap
    if a <= 0 <= b:
        result += d.alpha
    return min(1.0, result)


def quantile(d: PAlphaDist, p: float) -> float:
    """
    Returns the smallest ``x`` with ``cdf(d, x) >= p``; every ``p`` in the jump
    at the origin maps to ``0``.

    :raises DomainError: unless ``0 <= p <= 1``.
    """
    if not 0 <= p <= 1:
        raise DomainError("p", p, "p must lie in [0,1]")
    W = d.half_width
    below = d.density * W
    if p <= 0:
        return -W
    if p < below:
        return -W + p / d.density
    if p <= below + d.alpha:
        return 0.0
    return min(W, (p - below - d.alpha) / d.density)


def sample(d: PAlphaDist, rng: np.random.Generator) -> float:
    """
    Draw one value from ``d``.

    A Bernoulli variable ``B`` with ``Pr[B = 0] = alpha`` and a uniform variable
    ``U`` on ``[-half_width, half_width]`` are drawn, in that order, and
    ``B * U`` is returned. Both are always drawn, so the position in ``rng``
    advances by the same amount whatever the outcome.
    """
    at_origin = rng.random() < d.alpha
    u = rng.uniform(-d.half_width, d.half_width)
    return 0.0 if at_origin else float(u)


def sample_batch(
    d: PAlphaDist,
    rng: np.random.Generator,
    count: int,
    with_atom_mask: bool = False,
) -> Union[np.ndarray, Tuple[np.ndarray, np.ndarray]]:
    """
    Draw ``count`` values from ``d`` as a numpy array.

    :param with_atom_mask: if ``True``, also return a boolean array that is
      ``True`` exactly where the draw came from the atom at the origin.
    :type with_atom_mask: bool
    """
    if count < 0:
        raise DomainError("count", count, "count must be nonnegative")
    at_origin = rng.random(count) < d.alpha
    u = rng.uniform(-d.half_width, d.half_width, count)
    values = np.where(at_origin, 0.0, u)
    if with_atom_mask:
        return values, at_origin
    return values


def release(d: PAlphaDist, true_answer, rng: np.random.Generator):
    """
    Returns ``true_answer`` plus independent noise drawn from ``d``; an array
    answer gets one draw per entry.
    """
    if np.ndim(true_answer) == 0:
        return float(true_answer) + sample(d, rng)
    answer = np.asarray(true_answer, dtype=float)
    return answer + sample_batch(d, rng, answer.size).reshape(answer.shape)


def expected_cost_ln(d: PAlphaDist, n: float) -> float:
    """
    Returns the expectation of ``|X| ** n`` for ``X`` drawn from ``d``:

    .. math::

        \\frac{\\Delta^n}{(n + 1) 2^n}
        \\frac{(1 - \\alpha)^{n + 1}}{(\\delta - \\alpha)^n}

    :raises DomainError: if ``n < 1``.
    """
    _check_n(n)
    return (
        d.sensitivity**n
        / ((n + 1) * 2**n)
        * (1 - d.alpha) ** (n + 1)
        / (d.delta - d.alpha) ** n
    )


def expected_cost_generic(
    d: PAlphaDist, cost: CostSpec, quad_tol: float = DEFAULT_QUAD_TOL
) -> float:
    """
    Returns the expected cost of noise drawn from ``d``, that is
    ``alpha * cost(0) + 2 * density * I`` where ``I`` is the integral of
    ``cost`` over ``[0, half_width]``, computed by adaptive quadrature so that
    the result is within ``quad_tol`` of the exact value.

    The cost is checked on ``[-half_width, half_width]`` first.

    :raises DomainError: if ``quad_tol`` is not positive or the cost fails its
      check.
    :raises QuadratureError: if ``quad_tol`` cannot be reached.
    """
    if not quad_tol > 0:
        raise DomainError(
            "quad_tol", quad_tol, "the tolerance must be positive"
        )
    cost.validate(d.half_width)
    scale = 2 * d.density
    integral, _ = adaptive_simpson(cost, 0.0, d.half_width, quad_tol / scale)
    return d.alpha * cost(0.0) + scale * integral


def to_histogram(d: PAlphaDist, lo: float, hi: float, bins: int) -> Histogram:
    """
    Returns the exact law of ``d`` binned into ``bins`` equal bins over
    ``[lo, hi]``, with the atom kept separately.

    :raises DomainError: if ``[lo, hi]`` does not contain the support of ``d``.
    """
    if lo > -d.half_width or hi < d.half_width:
        raise DomainError(
            "lo",
            lo,
            f"the range must contain [-{d.half_width}, {d.half_width}]",
        )
    edges = np.linspace(lo, hi, bins + 1)
    left = np.clip(edges[:-1], -d.half_width, d.half_width)
    right = np.clip(edges[1:], -d.half_width, d.half_width)
    masses = d.density * (right - left)
    masses *= (1 - d.alpha) / masses.sum()
    return Histogram(lo, hi, (hi - lo) / bins, masses, d.alpha)


def to_json(d: PAlphaDist) -> str:
    "Returns ``d`` as a JSON object ``{delta, sensitivity, alpha}``."
    return json.dumps(d.to_dict())


def from_json(text: str) -> PAlphaDist:
    """
    Returns the distribution described by a JSON object with keys ``delta``,
    ``sensitivity`` and ``alpha``; the derived fields are recomputed.

    :raises ValueError: if ``text`` is not such an object.
    :raises DomainError: if the parameters are out of range.
    """
    obj = json.loads(text)
    if not isinstance(obj, dict):
        raise ValueError("expected a JSON object")
    try:
        return make_palpha(obj["delta"], obj["sensitivity"], obj["alpha"])
    except KeyError as e:
        raise ValueError(f"missing key {e.args[0]!r}") from None


def check_invariants(d: PAlphaDist, tol: float = MASS_TOL) -> bool:
    """
    Returns ``True`` if ``d`` has total mass 1 and assigns probability
    ``delta`` to ``[-sensitivity / 2, sensitivity / 2]``, both up to ``tol``.
    """
    half = d.sensitivity / 2
    return (
        abs(total_mass(d) - 1) <= tol
        and abs(interval_prob(d, -half, half) - d.delta) <= tol
    )
