# -*- coding: utf-8 -*-

# Copyright (c) 2023, optimal_noise contributors
#
# Distributed under the terms of the GPL license version 3.
#
# The full license is in the file LICENSE, distributed with this software.

"""
This module contains some functions used in the Monte-Carlo tests.
"""

# pylint: disable=missing-function-docstring, invalid-name

import numpy as np


def check_mean(values, expected, k=3.0):
    values = np.asarray(values, dtype=float)
    stderr = values.std(ddof=1) / np.sqrt(len(values))
    assert abs(values.mean() - expected) <= k * stderr, (
        f"mean {values.mean()} differs from {expected} by more than"
        f" {k} x {stderr}"
    )


def check_proportion(flags, p, k=3.0):
    flags = np.asarray(flags, dtype=bool)
    stderr = np.sqrt(p * (1 - p) / len(flags))
    assert abs(flags.mean() - p) <= k * stderr


def empirical_cdf(samples, xs):
    s = np.sort(np.asarray(samples, dtype=float))
    return np.searchsorted(s, xs, side="right") / len(s)
