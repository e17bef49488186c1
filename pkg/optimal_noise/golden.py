# -*- coding: utf-8 -*-

# Copyright (c) 2023, optimal_noise contributors
#
# Distributed under the terms of the GPL license version 3.
#
# The full license is in the file LICENSE, distributed with this software.

"""
This module provides golden-section search for refining a bracketed minimum.
"""

import math
from typing import Callable, Tuple

from .exceptions import DomainError

PHI_RATIO = 2 / (1 + math.sqrt(5))


def golden_section(
    f: Callable[[float], float],
    lo: float,
    hi: float,
    tol: float,
    max_iterations: int = 200,
) -> Tuple[float, float]:
    """
    Minimise ``f`` on ``[lo, hi]`` by golden-section search.

    The search stops once the bracket is narrower than ``tol``. The endpoints
    are also evaluated, and returned if they are at least as good as the
    interior estimate, so a minimum at the boundary of ``[lo, hi]`` is found
    exactly.

    :returns: A pair ``(argmin, minimum)``.

    :raises DomainError: if ``tol`` is not positive or ``lo > hi``.
    """
    if not tol > 0:
        raise DomainError("refine_tol", tol, "the tolerance must be positive")
    if lo > hi:
        raise DomainError("lo", lo, f"expected lo <= hi = {hi}")

    f_lo, f_hi = f(lo), f(hi)
    a, b = lo, hi
    x1 = b - PHI_RATIO * (b - a)
    x2 = a + PHI_RATIO * (b - a)
    f1, f2 = f(x1), f(x2)

    for _ in range(max_iterations):
        if b - a <= tol:
            break
        if f2 > f1:
            b, x2, f2 = x2, x1, f1
            x1 = b - PHI_RATIO * (b - a)
            f1 = f(x1)
        else:
            a, x1, f1 = x1, x2, f2
            x2 = a + PHI_RATIO * (b - a)
            f2 = f(x2)

    x, fx = (x1, f1) if f1 <= f2 else (x2, f2)
    if f_lo <= fx:
        return lo, f_lo
    if f_hi < fx:
        return hi, f_hi
    return x, fx
