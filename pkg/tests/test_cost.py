# -*- coding: utf-8 -*-

# Copyright (c) 2023, optimal_noise contributors
#
# Distributed under the terms of the GPL license version 3.
#
# The full license is in the file LICENSE, distributed with this software.

"""
This module contains some tests for cost functions.
"""

# pylint: disable=missing-function-docstring, invalid-name

import math

import pytest

from optimal_noise import CostKind, CostSpec, DomainError


def test_ln_cost():
    c = CostSpec.ln(2)
    assert c.kind is CostKind.LnMoment
    assert c.n == 2
    assert c(-3) == 9
    assert c(0) == 0
    assert repr(c) == "<moment cost |x|^2>"
    assert CostSpec.ln(1.5)(4) == 8
    c.validate(1e6)


def test_ln_cost_errors():
    for n in (0.5, 0, -1, math.inf, math.nan):
        with pytest.raises(DomainError) as e:
            CostSpec.ln(n)
        assert e.value.parameter == "n"
    with pytest.raises(TypeError):
        CostSpec(1, n=1)


def test_generic_cost():
    def huber(x):
        return x * x / 2 if abs(x) <= 1 else abs(x) - 0.5

    c = CostSpec.generic(huber, validation_range=5)
    assert c.kind is CostKind.Generic
    assert c.n is None
    assert c(3) == 2.5
    assert repr(c) == "<generic cost huber>"
    assert isinstance(CostSpec.generic(lambda x: 1)(0), float)


def test_generic_cost_immutable():
    c = CostSpec.generic(abs)
    with pytest.raises(AttributeError):
        c.n = 3
    with pytest.raises(AttributeError):
        c.anything = 3


def test_generic_cost_errors():
    with pytest.raises(TypeError):
        CostSpec.generic(3)
    with pytest.raises(DomainError) as e:
        CostSpec.generic(lambda x: x)
    assert e.value.parameter == "cost"
    assert "nonnegative" in str(e.value)
    with pytest.raises(DomainError) as e:
        CostSpec.generic(lambda x: max(x, 0.0))
    assert "symmetric" in str(e.value)
    with pytest.raises(DomainError) as e:
        CostSpec.generic(lambda x: 1 - x * x)
    assert "nondecreasing" in str(e.value)
    with pytest.raises(DomainError):
        CostSpec.generic(lambda x: math.inf)
    # passes on [-1, 1] but not on [-3, 3]
    c = CostSpec.generic(lambda x: math.sin(abs(x)) + 1)
    with pytest.raises(DomainError):
        c.validate(3)
    with pytest.raises(DomainError) as e:
        c.validate(0)
    assert e.value.parameter == "half_width"
