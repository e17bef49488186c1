# -*- coding: utf-8 -*-

# Copyright (c) 2023, optimal_noise contributors
#
# Distributed under the terms of the GPL license version 3.
#
# The full license is in the file LICENSE, distributed with this software.

# pylint: disable=invalid-name, too-many-arguments

"""
This module provides the optimal atom ``alpha*`` and the minimum expected
cost, in closed form for the moment costs ``|x| ** n`` and numerically for any
other symmetric nondecreasing cost.
"""

import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from enum import Enum
from typing import List, Sequence

import numpy as np

from .constants import (
    ALPHA_CAP_FACTOR,
    DEFAULT_GRID_POINTS,
    DEFAULT_QUAD_TOL,
    DEFAULT_REFINE_TOL,
    MIN_GRID_POINTS,
)
from .cost import CostKind, CostSpec
from .exceptions import DomainError
from .golden import golden_section
from .palpha import (
    PAlphaDist,
    _check_delta,
    _check_n,
    _check_sensitivity,
    expected_cost_generic,
    make_palpha,
)
from .report import report_default


class OptimalMethod(Enum):
    """
    This class is used to record how an :py:class:`OptimalResult` was found.
    """

    ClosedForm = 0
    NumericScan = 1


@dataclass(frozen=True)
class OptimalResult:
    """
    The best distribution in the uniform-with-atom family for a cost.

    :ivar alpha_star: the optimal atom.
    :ivar min_cost: the expected cost of :py:attr:`dist`.
    :ivar dist: the optimal distribution.
    :ivar method: how the optimum was found.
    """

    alpha_star: float
    min_cost: float
    dist: PAlphaDist
    method: OptimalMethod

    def to_dict(self) -> dict:
        "Returns the result as a dict of plain values."
        return {
            "delta": self.dist.delta,
            "sensitivity": self.dist.sensitivity,
            "alpha_star": self.alpha_star,
            "half_width": self.dist.half_width,
            "density": self.dist.density,
            "min_cost": self.min_cost,
            "method": self.method.name,
        }


def concentration_threshold(n: float) -> float:
    """
    Returns ``n / (n + 1)``, the value of ``delta`` above which the optimal
    distribution for the cost ``|x| ** n`` has a positive atom.
    """
    _check_n(n)
    return n / (n + 1)


def optimal_alpha_ln(delta: float, n: float) -> float:
    """
    Returns the optimal atom for the cost ``|x| ** n``: ``0`` for
    ``delta <= n / (n + 1)`` and ``(n + 1) * delta - n`` otherwise.

    :raises DomainError: unless ``0 < delta < 1`` and ``n >= 1``.
    """
    _check_delta(delta)
    _check_n(n)
    if delta <= n / (n + 1):
        return 0.0
    return (n + 1) * delta - n


def min_cost_ln(delta: float, sensitivity: float, n: float) -> float:
    """
    Returns the minimum expected cost ``E|X| ** n`` over all symmetric
    nonincreasing noise distributions satisfying (0, ``delta``)-differential
    privacy:

    .. math::

        \\frac{\\Delta^n}{2^n (n + 1) \\delta^n} \\text{ if }
        \\delta \\le \\frac{n}{n + 1}, \\qquad
        \\frac{(n + 1)^n}{2^n n^n} (1 - \\delta) \\Delta^n \\text{ otherwise.}

    :raises DomainError: unless ``0 < delta < 1``, ``sensitivity > 0`` and
      ``n >= 1``.
    """
    _check_delta(delta)
    _check_sensitivity(sensitivity)
    _check_n(n)
    if delta <= n / (n + 1):
        return sensitivity**n / (2**n * (n + 1) * delta**n)
    return ((n + 1) / (2 * n)) ** n * (1 - delta) * sensitivity**n


def optimal_ln(delta: float, sensitivity: float, n: float) -> OptimalResult:
    "Returns the closed form optimum for the cost ``|x| ** n``."
    alpha = optimal_alpha_ln(delta, n)
    return OptimalResult(
        alpha,
        min_cost_ln(delta, sensitivity, n),
        make_palpha(delta, sensitivity, alpha),
        OptimalMethod.ClosedForm,
    )


def cost_profile(
    delta: float,
    sensitivity: float,
    cost: CostSpec,
    alphas: Sequence[float],
    quad_tol: float = DEFAULT_QUAD_TOL,
    max_threads: int = 1,
) -> List[float]:
    """
    Returns the expected cost of the distribution with atom ``alpha`` for every
    ``alpha`` in ``alphas``, in the same order.

    :param max_threads: the number of threads used for the evaluations; the
      result does not depend on it.
    :type max_threads: int
    """

    def f(alpha):
        return expected_cost_generic(
            make_palpha(delta, sensitivity, alpha), cost, quad_tol
        )

    if max_threads > 1:
        with ThreadPoolExecutor(max_workers=max_threads) as pool:
            return list(pool.map(f, alphas))
    return [f(alpha) for alpha in alphas]


def optimal_alpha_generic(
    delta: float,
    sensitivity: float,
    cost: CostSpec,
    grid_points: int = DEFAULT_GRID_POINTS,
    refine_tol: float = DEFAULT_REFINE_TOL,
    quad_tol: float = DEFAULT_QUAD_TOL,
    max_threads: int = 1,
) -> OptimalResult:
    """
    Find the atom minimising the expected cost numerically.

    The expected cost is evaluated on a uniform grid of ``grid_points`` atoms
    over ``[0, delta * (1 - 1e-9)]``; the best grid point is then refined by
    golden-section search over its neighbouring grid cells until the bracket
    is narrower than ``refine_tol``. Among atoms whose costs agree within the
    quadrature tolerance, the smallest is returned.

    :param delta: the privacy parameter, in ``(0, 1)``.
    :type delta: float
    :param sensitivity: the query sensitivity, positive.
    :type sensitivity: float
    :param cost: the cost to minimise.
    :type cost: CostSpec
    :param grid_points: the size of the scanning grid, at least 16
      (default: ``256``).
    :type grid_points: int
    :param refine_tol: the width at which refinement stops (default:
      ``1e-8``).
    :type refine_tol: float
    :param quad_tol: the quadrature tolerance (default: ``1e-9``).
    :type quad_tol: float
    :param max_threads: the number of threads used for the grid scan.
    :type max_threads: int

    :returns: An :py:class:`OptimalResult` with method ``NumericScan``.

    :raises DomainError: if an argument is out of range.
    :raises QuadratureError: if an expected cost cannot be computed to
      ``quad_tol``.
    """
    make_palpha(delta, sensitivity, 0.0)
    if not isinstance(cost, CostSpec):
        raise TypeError("the 3rd argument must be a CostSpec")
    if grid_points < MIN_GRID_POINTS:
        raise DomainError(
            "grid_points",
            grid_points,
            f"grid_points must be at least {MIN_GRID_POINTS}",
        )
    if not refine_tol > 0:
        raise DomainError(
            "refine_tol", refine_tol, "the tolerance must be positive"
        )
    if not quad_tol > 0:
        raise DomainError(
            "quad_tol", quad_tol, "the tolerance must be positive"
        )

    start = time.perf_counter()
    report_default(
        "optimal_alpha_generic: scanning %d atoms in [0, %g) for %r",
        grid_points,
        delta,
        cost,
    )
    grid = np.linspace(0.0, delta * ALPHA_CAP_FACTOR, grid_points)
    costs = np.array(
        cost_profile(delta, sensitivity, cost, grid, quad_tol, max_threads)
    )
    best = costs.min()
    tie_tol = max(quad_tol, 1e-12 * abs(best))
    i = int(np.flatnonzero(costs <= best + tie_tol)[0])
    alpha, value = float(grid[i]), float(costs[i])
    report_default(
        "optimal_alpha_generic: best grid atom %.10g with cost %.12g",
        alpha,
        value,
    )

    def f(a):
        return expected_cost_generic(
            make_palpha(delta, sensitivity, a), cost, quad_tol
        )

    lo = float(grid[max(0, i - 1)])
    hi = float(grid[min(grid_points - 1, i + 1)])
    refined, refined_value = golden_section(f, lo, hi, refine_tol)
    # costs equal up to rounding keep the grid atom
    noise = 1e-13 * max(1.0, abs(value))
    if refined_value < value - noise or (
        refined_value <= value + tie_tol and refined < alpha
    ):
        alpha, value = refined, refined_value

    report_default(
        "optimal_alpha_generic: alpha* = %.10g, cost = %.12g (%.3fs)",
        alpha,
        value,
        time.perf_counter() - start,
    )
    return OptimalResult(
        alpha,
        value,
        make_palpha(delta, sensitivity, alpha),
        OptimalMethod.NumericScan,
    )


def optimal_palpha(
    delta: float, sensitivity: float, cost: CostSpec, **kwargs
) -> OptimalResult:
    """
    Returns the optimum for ``cost``: in closed form for a moment cost, and by
    :py:func:`optimal_alpha_generic` (which receives ``kwargs``) otherwise.
    """
    if not isinstance(cost, CostSpec):
        raise TypeError("the 3rd argument must be a CostSpec")
    if cost.kind is CostKind.LnMoment:
        return optimal_ln(delta, sensitivity, cost.n)
    return optimal_alpha_generic(delta, sensitivity, cost, **kwargs)
