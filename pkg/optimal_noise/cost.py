# -*- coding: utf-8 -*-

# Copyright (c) 2023, optimal_noise contributors
#
# Distributed under the terms of the GPL license version 3.
#
# The full license is in the file LICENSE, distributed with this software.

# pylint: disable=invalid-name

"""
This module provides :py:class:`CostSpec`, the cost functions that the noise
distributions are optimised for. A cost must be symmetric about the origin
and nondecreasing in the magnitude of the noise.
"""

import math
from enum import Enum
from typing import Callable, Optional

import numpy as np

from .constants import COST_VALIDATION_POINTS
from .exceptions import DomainError


class CostKind(Enum):
    """
    This class is used to distinguish the ``|x| ** n`` moment costs, for which
    closed forms exist, from arbitrary caller-supplied costs.
    """

    LnMoment = 0
    Generic = 1


class CostSpec:
    """
    A cost function of the noise.

    Use :py:meth:`CostSpec.ln` or :py:meth:`CostSpec.generic` to construct
    instances. Instances are immutable and callable.
    """

    __slots__ = ("_kind", "_n", "_eval")

    def __init__(
        self,
        kind: CostKind,
        n: Optional[float] = None,
        eval_: Optional[Callable[[float], float]] = None,
    ):
        if not isinstance(kind, CostKind):
            raise TypeError("the 1st argument must be a CostKind")
        if kind is CostKind.LnMoment:
            if n is None or not n >= 1 or math.isinf(n):
                raise DomainError("n", n, "n must be a real number >= 1")
            object.__setattr__(self, "_n", float(n))
            object.__setattr__(self, "_eval", None)
        else:
            if not callable(eval_):
                raise TypeError("a generic cost requires a callable")
            object.__setattr__(self, "_n", None)
            object.__setattr__(self, "_eval", eval_)
        object.__setattr__(self, "_kind", kind)

    def __setattr__(self, name, value):
        raise AttributeError("CostSpec objects are immutable")

    @staticmethod
    def ln(n: float) -> "CostSpec":
        "Returns the moment cost ``|x| ** n``, for ``n >= 1``."
        return CostSpec(CostKind.LnMoment, n=n)

    @staticmethod
    def generic(
        eval_: Callable[[float], float], validation_range: float = 1.0
    ) -> "CostSpec":
        """
        Returns the cost given by the callable ``eval_``.

        The callable is checked for symmetry, nonnegativity and monotonicity
        on a symmetric grid over ``[-validation_range, validation_range]``.

        :raises TypeError: if ``eval_`` is not callable.
        :raises DomainError: if the check fails.
        """
        result = CostSpec(CostKind.Generic, eval_=eval_)
        result.validate(validation_range)
        return result

    @property
    def kind(self) -> CostKind:
        "The kind of the cost."
        return self._kind

    @property
    def n(self) -> Optional[float]:
        "The exponent of a moment cost, or ``None`` for a generic cost."
        return self._n

    def __call__(self, x: float) -> float:
        if self._kind is CostKind.LnMoment:
            return abs(x) ** self._n
        return float(self._eval(x))

    def __repr__(self) -> str:
        if self._kind is CostKind.LnMoment:
            return f"<moment cost |x|^{self._n:g}>"
        name = getattr(self._eval, "__name__", "callable")
        return f"<generic cost {name}>"

    def validate(
        self, half_width: float, points: int = COST_VALIDATION_POINTS
    ) -> None:
        """
        Spot check that the cost is symmetric, nonnegative and nondecreasing on
        ``[0, half_width]`` at ``points`` grid points of
        ``[-half_width, half_width]`` (and at the origin).

        Moment costs always pass.

        :raises DomainError: if the check fails.
        """
        if self._kind is CostKind.LnMoment:
            return
        if not half_width > 0 or math.isinf(half_width):
            raise DomainError(
                "half_width", half_width, "expected a positive finite width"
            )
        grid = np.linspace(-half_width, half_width, points)
        values = np.array([self(x) for x in grid])
        mirrored = values[::-1]
        scale = np.maximum(1.0, np.abs(values))
        if not np.all(np.isfinite(values)) or np.any(values < 0):
            raise DomainError(
                "cost", self, "the cost must be finite and nonnegative"
            )
        if np.any(np.abs(values - mirrored) > 1e-12 * scale):
            raise DomainError(
                "cost", self, "the cost must be symmetric about the origin"
            )
        positive = np.concatenate(([self(0.0)], values[grid > 0]))
        if np.any(np.diff(positive) < -1e-12 * np.maximum(1.0, positive[1:])):
            raise DomainError(
                "cost", self, "the cost must be nondecreasing on [0, infinity)"
            )
