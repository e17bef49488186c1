# -*- coding: utf-8 -*-

# Copyright (c) 2023, optimal_noise contributors
#
# Distributed under the terms of the GPL license version 3.
#
# The full license is in the file LICENSE, distributed with this software.

"""
This module provides adaptive Simpson quadrature with a budget on the number
of subintervals.
"""

import sys
from typing import Callable, Tuple

from .constants import DEFAULT_QUAD_TOL, QUAD_MAX_INTERVALS
from .exceptions import DomainError, QuadratureError
from .report import report_default

_EPS = sys.float_info.epsilon


def _simpson(fa: float, fm: float, fb: float, h: float) -> float:
    return h / 6.0 * (fa + 4.0 * fm + fb)


def adaptive_simpson(
    f: Callable[[float], float],
    a: float,
    b: float,
    tol: float = DEFAULT_QUAD_TOL,
    max_intervals: int = QUAD_MAX_INTERVALS,
) -> Tuple[float, float]:
    """
    Integrate ``f`` over ``[a, b]`` using adaptive Simpson quadrature with
    Richardson extrapolation.

    Each subinterval is accepted once its error estimate is below its share of
    ``tol`` (the share halves with every bisection), or once the estimate is
    at the floating point resolution of the subinterval's value. A ``tol``
    below the floating point resolution of the integral itself is raised to
    that resolution.

    :param f: the integrand.
    :type f: Callable[[float], float]
    :param a: the lower limit.
    :type a: float
    :param b: the upper limit.
    :type b: float
    :param tol: the absolute error tolerance (default: ``1e-9``).
    :type tol: float
    :param max_intervals: the largest number of subintervals that may be
      created (default: ``2 ** 20``).
    :type max_intervals: int

    :returns: A pair ``(value, error_estimate)``.

    :raises DomainError: if ``tol`` is not positive.
    :raises QuadratureError:
      if the tolerance is not reached within ``max_intervals`` subintervals.
    """
    if not tol > 0:
        raise DomainError("quad_tol", tol, "the tolerance must be positive")
    if a == b:
        return 0.0, 0.0
    if a > b:
        value, error = adaptive_simpson(f, b, a, tol, max_intervals)
        return -value, error

    fa, fb = f(a), f(b)
    m = 0.5 * (a + b)
    fm = f(m)
    whole = _simpson(fa, fm, fb, b - a)
    tol = max(tol, 64.0 * _EPS * abs(whole))
    # Each entry is (a, b, fa, fm, fb, whole, tol).
    stack = [(a, b, fa, fm, fb, whole, tol)]
    intervals = 1
    total, error = 0.0, 0.0

    while stack:
        a, b, fa, fm, fb, whole, local_tol = stack.pop()
        m = 0.5 * (a + b)
        lm, rm = 0.5 * (a + m), 0.5 * (m + b)
        flm, frm = f(lm), f(rm)
        left = _simpson(fa, flm, fm, m - a)
        right = _simpson(fm, frm, fb, b - m)
        delta = left + right - whole
        if abs(delta) <= 15.0 * local_tol or abs(delta) <= 64.0 * _EPS * abs(
            left + right
        ):
            total += left + right + delta / 15.0
            error += abs(delta) / 15.0
            continue
        if intervals >= max_intervals or not lm > a or not rm < b:
            pending = sum(abs(x[5]) for x in stack)
            raise QuadratureError(error + abs(delta) + pending, intervals, tol)
        intervals += 1
        stack.append((m, b, fm, frm, fb, right, 0.5 * local_tol))
        stack.append((a, m, fa, flm, fm, left, 0.5 * local_tol))

    if intervals > max_intervals // 16:
        report_default(
            "adaptive_simpson: %d subintervals for tolerance %.3e",
            intervals,
            tol,
        )
    return total, error
