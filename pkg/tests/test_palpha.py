# -*- coding: utf-8 -*-

# Copyright (c) 2023, optimal_noise contributors
#
# Distributed under the terms of the GPL license version 3.
#
# The full license is in the file LICENSE, distributed with this software.

"""
This module contains some tests for the uniform-with-atom noise distribution.
"""

# pylint: disable=missing-function-docstring, invalid-name

import dataclasses
import json

import numpy as np
import pytest
from mc import check_mean, check_proportion, empirical_cdf

from optimal_noise import (
    CostSpec,
    DomainError,
    PAlphaDist,
    atom_mass,
    cdf,
    check_invariants,
    expected_cost_generic,
    expected_cost_ln,
    from_json,
    interval_prob,
    make_palpha,
    make_stream,
    pdf,
    quantile,
    release,
    sample,
    sample_batch,
    to_histogram,
    to_json,
    total_mass,
)


def random_palphas(count, seed=0):
    rng = np.random.default_rng(seed)
    result = []
    for _ in range(count):
        delta = rng.uniform(1e-3, 1 - 1e-3)
        sensitivity = np.exp(rng.uniform(-3, 3))
        alpha = rng.uniform(0, delta) * 0.999
        result.append(make_palpha(delta, sensitivity, alpha))
    return result


###############################################################################
# make_palpha
###############################################################################


def test_make_palpha():
    d = make_palpha(0.5, 1, 0)
    assert isinstance(d, PAlphaDist)
    assert d.half_width == pytest.approx(1.0, abs=1e-15)
    assert d.density == pytest.approx(0.5, abs=1e-15)

    d = make_palpha(0.6, 1, 0.2)
    assert d.half_width == pytest.approx(1.0, abs=1e-14)
    assert d.density == pytest.approx(0.4, abs=1e-15)
    assert d.alpha + 2 * d.half_width * d.density == pytest.approx(1, abs=1e-12)

    d = make_palpha(0.5, 3, 0.25)
    assert d.half_width == pytest.approx(0.75 / 0.25 * 1.5)
    assert d.density == pytest.approx(0.25 / 3)


def test_make_palpha_errors():
    with pytest.raises(DomainError) as e:
        make_palpha(0.5, 1, 0.5)
    assert e.value.parameter == "alpha"
    with pytest.raises(DomainError) as e:
        make_palpha(0.5, 1, -0.1)
    assert e.value.parameter == "alpha"
    for delta in (0, 1, 1.5, -0.2, float("nan")):
        with pytest.raises(DomainError) as e:
            make_palpha(delta, 1, 0)
        assert e.value.parameter == "delta"
    assert "delta must lie in (0,1)" in str(e.value)
    for sensitivity in (0, -1, float("inf")):
        with pytest.raises(DomainError) as e:
            make_palpha(0.5, sensitivity, 0)
        assert e.value.parameter == "sensitivity"
    # DomainError is a ValueError
    with pytest.raises(ValueError):
        make_palpha(0.5, 1, 0.7)


def test_palpha_immutable():
    d = make_palpha(0.5, 1, 0)
    with pytest.raises(dataclasses.FrozenInstanceError):
        d.alpha = 0.1
    assert d == make_palpha(0.5, 1.0, 0.0)
    assert hash(d) == hash(make_palpha(0.5, 1.0, 0.0))


def test_normalization_and_tightness():
    for d in random_palphas(1000):
        assert abs(total_mass(d) - 1) <= 1e-12
        half = d.sensitivity / 2
        assert abs(interval_prob(d, -half, half) - d.delta) <= 1e-12
        assert check_invariants(d)


###############################################################################
# pdf, cdf, interval_prob, quantile
###############################################################################


def test_pdf_and_atom():
    d = make_palpha(0.6, 1, 0.2)
    assert pdf(d, 0.5) == d.density
    assert pdf(d, -1.0) == d.density
    assert pdf(d, 1.5) == 0
    assert atom_mass(d) == 0.2
    assert atom_mass(d, 0.3) == 0


def test_cdf():
    d = make_palpha(0.5, 1, 0)
    assert cdf(d, 0) == pytest.approx(0.5, abs=1e-15)
    assert cdf(d, 0.5) == pytest.approx(0.75, abs=1e-15)
    assert cdf(d, -1) == 0
    assert cdf(d, 1) == 1
    assert cdf(d, -5) == 0
    assert cdf(d, 5) == 1

    d = make_palpha(0.6, 1, 0.2)
    assert cdf(d, 0) == pytest.approx(0.6, abs=1e-15)
    # right-continuous, with a jump of size alpha at the origin
    assert cdf(d, -1e-12) == pytest.approx(0.4, abs=1e-11)
    assert cdf(d, -d.half_width) == 0
    assert cdf(d, d.half_width) == 1


def test_cdf_symmetry():
    for d in random_palphas(50, seed=1):
        for x in np.linspace(-1.2 * d.half_width, 1.2 * d.half_width, 101):
            if x == 0:
                continue
            assert cdf(d, -x) + cdf(d, x) == pytest.approx(1, abs=1e-12)
        assert cdf(d, 0) + cdf(d, -0.0) == pytest.approx(1 + d.alpha)


def test_interval_prob():
    d = make_palpha(0.3, 2, 0.1)
    assert interval_prob(d, -1, 1) == pytest.approx(0.3, abs=1e-12)
    d = make_palpha(0.5, 1, 0)
    assert interval_prob(d, -1, 1) == pytest.approx(1, abs=1e-12)
    assert interval_prob(d, -10, 10) == pytest.approx(1, abs=1e-12)
    d = make_palpha(0.6, 1, 0.2)
    assert interval_prob(d, 0.25, 0.75) == pytest.approx(0.2, abs=1e-12)
    assert interval_prob(d, 0, 0) == pytest.approx(0.2)
    assert interval_prob(d, 0.1, 0.1) == 0
    assert interval_prob(d, 2, 3) == 0
    with pytest.raises(DomainError):
        interval_prob(d, 1, 0)


def test_interval_prob_matches_cdf():
    d = make_palpha(0.7, 1.5, 0.3)
    for a, b in [(-0.4, 0.9), (0.1, 0.5), (-2.0, -0.1), (-3, 3)]:
        assert interval_prob(d, a, b) == pytest.approx(
            cdf(d, b) - cdf(d, a), abs=1e-12
        )


def test_quantile():
    d = make_palpha(0.6, 1, 0.2)
    for x in np.linspace(-0.99, 0.99, 23):
        if x != 0:
            assert quantile(d, cdf(d, x)) == pytest.approx(x, abs=1e-12)
    for p in (0.41, 0.5, 0.6):
        assert quantile(d, p) == 0
    assert quantile(d, 0) == -d.half_width
    assert quantile(d, 1) == pytest.approx(d.half_width)
    with pytest.raises(DomainError):
        quantile(d, 1.5)


###############################################################################
# Sampling
###############################################################################


def test_sample_deterministic():
    d = make_palpha(0.9, 1, 0.8)
    rng1, rng2 = make_stream(42), make_stream(42)
    assert [sample(d, rng1) for _ in range(100)] == [
        sample(d, rng2) for _ in range(100)
    ]
    x = sample_batch(d, make_stream(7), 1000)
    y = sample_batch(d, make_stream(7), 1000)
    assert np.array_equal(x, y)


def test_sample_support():
    d = make_palpha(0.5, 1, 0)
    rng = make_stream(1)
    values = [sample(d, rng) for _ in range(10000)]
    assert all(-1 <= x <= 1 for x in values)
    assert np.all(np.abs(sample_batch(d, rng, 10000)) <= 1)


def test_sample_scalar_moments():
    d = make_palpha(0.6, 1, 0.2)
    rng = make_stream(3)
    values = np.array([sample(d, rng) for _ in range(20000)])
    check_proportion(values == 0, 0.2)
    check_mean(np.abs(values), expected_cost_ln(d, 1))


def test_sample_mean_abs():
    d = make_palpha(0.5, 1, 0)
    values = sample_batch(d, make_stream(2023), 10**6)
    check_mean(np.abs(values), 0.5)


def test_sample_second_moment():
    d = make_palpha(0.8, 1, 0.4)
    values, mask = sample_batch(d, make_stream(11), 10**6, with_atom_mask=True)
    check_mean(values**2, 0.1125)
    check_proportion(mask, 0.4)
    assert abs(mask.mean() - 0.4) <= 0.0015
    assert np.all(values[mask] == 0)


def test_sampler_matches_cdf():
    d = make_palpha(0.8, 1, 0.4)
    values, mask = sample_batch(d, make_stream(5), 10**6, with_atom_mask=True)
    xs = np.linspace(-d.half_width, d.half_width, 1000)
    expected = np.array([cdf(d, x) for x in xs])
    assert np.max(np.abs(empirical_cdf(values, xs) - expected)) <= 0.002
    check_proportion(mask, d.alpha)


def test_release():
    d = make_palpha(0.5, 1, 0)
    rng = make_stream(9)
    x = release(d, 10.0, rng)
    assert isinstance(x, float)
    assert 9 <= x <= 11
    answers = np.arange(12.0).reshape(3, 4)
    y = release(d, answers, rng)
    assert y.shape == (3, 4)
    assert np.all(np.abs(y - answers) <= 1)


###############################################################################
# Expected cost
###############################################################################


def test_expected_cost_ln():
    assert expected_cost_ln(make_palpha(0.6, 1, 0.2), 1) == pytest.approx(0.4)
    assert expected_cost_ln(make_palpha(0.25, 1, 0), 1) == pytest.approx(1.0)
    assert expected_cost_ln(make_palpha(0.5, 2, 0), 2) == pytest.approx(4 / 3)
    with pytest.raises(DomainError) as e:
        expected_cost_ln(make_palpha(0.5, 1, 0), 0.5)
    assert e.value.parameter == "n"


def test_expected_cost_generic():
    quad_tol = 1e-9
    d = make_palpha(0.6, 1, 0.2)
    assert expected_cost_generic(
        d, CostSpec.generic(abs), quad_tol
    ) == pytest.approx(0.4, abs=quad_tol)
    zero = CostSpec.generic(lambda x: 0.0)
    for d in random_palphas(10, seed=2):
        assert expected_cost_generic(d, zero) == 0
    d = make_palpha(0.5, 1, 0)
    assert expected_cost_generic(
        d, CostSpec.generic(lambda x: x**4), quad_tol
    ) == pytest.approx(0.2, abs=quad_tol)


def test_expected_cost_generic_counts_atom():
    d = make_palpha(0.8, 1, 0.5)
    one = CostSpec.generic(lambda x: 1.0)
    assert expected_cost_generic(d, one) == pytest.approx(1, abs=1e-12)
    shifted = CostSpec.generic(lambda x: 2.0 + abs(x))
    assert expected_cost_generic(d, shifted) == pytest.approx(
        2 + expected_cost_ln(d, 1), abs=1e-9
    )


def test_expected_cost_consistency():
    dists = [
        make_palpha(0.6, 1, 0.2),
        make_palpha(0.5, 1, 0),
        make_palpha(0.9, 1, 0.5),
        make_palpha(0.3, 0.5, 0.1),
    ]
    quad_tol = 1e-9
    for d in dists:
        for n in (1, 1.5, 2, 3, 5):
            exact = expected_cost_ln(d, n)
            assert expected_cost_generic(
                d, CostSpec.ln(n), quad_tol
            ) == pytest.approx(exact, abs=max(quad_tol, 1e-10))
            assert expected_cost_generic(
                d, CostSpec.generic(lambda x, n=n: abs(x) ** n), quad_tol
            ) == pytest.approx(exact, abs=max(quad_tol, 1e-10))


def test_expected_cost_generic_errors():
    d = make_palpha(0.5, 1, 0)
    with pytest.raises(DomainError):
        expected_cost_generic(d, CostSpec.ln(1), 0)
    # symmetric on [-1, 1] but decreasing beyond it
    bump = CostSpec.generic(lambda x: abs(x) if abs(x) <= 1 else 0.0)
    with pytest.raises(DomainError) as e:
        expected_cost_generic(make_palpha(0.2, 1, 0), bump)
    assert e.value.parameter == "cost"


###############################################################################
# Serialization and binning
###############################################################################


def test_json():
    d = make_palpha(0.6, 2.5, 0.2)
    text = to_json(d)
    assert json.loads(text) == {"delta": 0.6, "sensitivity": 2.5, "alpha": 0.2}
    e = from_json(text)
    assert e == d
    assert e.half_width == d.half_width
    with pytest.raises(ValueError):
        from_json('{"delta": 0.5, "alpha": 0}')
    with pytest.raises(ValueError):
        from_json("[0.5, 1, 0]")
    with pytest.raises(DomainError):
        from_json('{"delta": 0.5, "sensitivity": 1, "alpha": 0.5}')


def test_to_histogram():
    d = make_palpha(0.6, 1, 0.2)
    h = to_histogram(d, -2, 2, 401)
    assert h.atom_at_zero == 0.2
    assert h.masses.sum() + h.atom_at_zero == pytest.approx(1, abs=1e-12)
    assert h.masses[0] == 0
    assert h.masses[200] == pytest.approx(0.4 * 4 / 401)
    with pytest.raises(DomainError):
        to_histogram(d, -0.5, 0.5, 100)
