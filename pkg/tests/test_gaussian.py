# -*- coding: utf-8 -*-

# Copyright (c) 2023, optimal_noise contributors
#
# Distributed under the terms of the GPL license version 3.
#
# The full license is in the file LICENSE, distributed with this software.

"""
This module contains some tests for the Gaussian baseline mechanism.
"""

# pylint: disable=missing-function-docstring, invalid-name

import math

import numpy as np
import pytest

from optimal_noise import (
    DomainError,
    GaussianBaseline,
    GaussianConvention,
    calibrate_gaussian,
    gaussian_cost,
    make_stream,
    normal_cdf,
    sample_gaussian,
    sample_gaussian_batch,
)


def test_calibrate_gaussian():
    g = calibrate_gaussian(0.25, 1)
    assert g.sigma == 2
    assert g.delta == 0.25
    assert g.sensitivity == 1
    assert calibrate_gaussian(0.1, 3).sigma == pytest.approx(15)
    with pytest.raises(DomainError) as e:
        calibrate_gaussian(1, 1)
    assert e.value.parameter == "delta"
    with pytest.raises(DomainError) as e:
        calibrate_gaussian(0.5, 0)
    assert e.value.parameter == "sensitivity"


def test_gaussian_baseline():
    g = GaussianBaseline(3.0, 1.0)
    assert g.delta is None
    with pytest.raises(DomainError):
        GaussianBaseline(0.0, 1.0)
    with pytest.raises(DomainError):
        GaussianBaseline(1.0, 1.0, 1.5)


def test_gaussian_cost():
    g = calibrate_gaussian(0.25, 1)
    assert gaussian_cost(g, 1) == 2
    assert gaussian_cost(g, 1, GaussianConvention.SigmaPower) == 2
    assert gaussian_cost(g, 2) == 4
    assert gaussian_cost(g, 2, GaussianConvention.ExactMoment) == 4
    assert gaussian_cost(
        g, 1, GaussianConvention.ExactMoment
    ) == pytest.approx(1.595769, abs=1e-6)
    assert gaussian_cost(g, 4, GaussianConvention.ExactMoment) == 48
    assert gaussian_cost(g, 1.5) == pytest.approx(2**1.5)


def test_gaussian_cost_errors():
    g = calibrate_gaussian(0.25, 1)
    with pytest.raises(DomainError):
        gaussian_cost(g, 0.5)
    with pytest.raises(DomainError):
        gaussian_cost(g, 3, GaussianConvention.ExactMoment)
    with pytest.raises(DomainError):
        gaussian_cost(g, 1.5, GaussianConvention.ExactMoment)
    with pytest.raises(TypeError):
        gaussian_cost(g, 1, "sigma")


def test_normal_cdf():
    assert normal_cdf(0) == 0.5
    assert normal_cdf(1.959963984540054) == pytest.approx(0.975, abs=1e-15)
    assert normal_cdf(-1.959963984540054) == pytest.approx(0.025, abs=1e-15)
    assert normal_cdf(-10) == pytest.approx(7.619853024160527e-24, rel=1e-12)
    for x in np.linspace(-6, 6, 121):
        assert normal_cdf(x) + normal_cdf(-x) == pytest.approx(1, abs=1e-15)
        assert normal_cdf(x) == pytest.approx(
            0.5 * math.erfc(-x / math.sqrt(2)), abs=1e-15
        )


def test_sample_gaussian_variance():
    g = GaussianBaseline(1.0, 1.0)
    values = sample_gaussian_batch(g, make_stream(2023), 10**6)
    assert values.var() == pytest.approx(1, abs=0.01)
    assert abs(values.mean()) <= 0.005


def test_sample_gaussian_deterministic():
    g = calibrate_gaussian(0.25, 1)
    rng1, rng2 = make_stream(5), make_stream(5)
    assert [sample_gaussian(g, rng1) for _ in range(10)] == [
        sample_gaussian(g, rng2) for _ in range(10)
    ]
    # the scalar sampler draws from the same stream as the batch sampler
    rng1, rng2 = make_stream(5), make_stream(5)
    assert np.allclose(
        [sample_gaussian(g, rng1) for _ in range(10)],
        sample_gaussian_batch(g, rng2, 10),
        rtol=0,
        atol=0,
    )
    with pytest.raises(DomainError):
        sample_gaussian_batch(g, rng1, -1)
