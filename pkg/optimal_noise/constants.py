# -*- coding: utf-8 -*-

# Copyright (c) 2023, optimal_noise contributors
#
# Distributed under the terms of the GPL license version 3.
#
# The full license is in the file LICENSE, distributed with this software.

"""
This module contains the default tolerances, grid sizes and output settings
used throughout optimal_noise. Every function that uses one of these values
also accepts it as a keyword argument.
"""

# Mass bookkeeping
MASS_TOL = 1e-12
HISTOGRAM_MASS_TOL = 1e-9

# Quadrature
DEFAULT_QUAD_TOL = 1e-9
QUAD_MAX_INTERVALS = 2**20

# Spot check of generic costs
COST_VALIDATION_POINTS = 64

# Numeric optimisation over alpha
DEFAULT_GRID_POINTS = 256
MIN_GRID_POINTS = 16
DEFAULT_REFINE_TOL = 1e-8
ALPHA_CAP_FACTOR = 1 - 1e-9

# Empirical auditing
DEFAULT_BINS = 2000
MIN_BINS = 100
MAX_AUDIT_BINS = 2**22
DEFAULT_SHIFT_GRID = 64
MIN_SHIFT_GRID = 10
# upward bias of an empirical audit that adaptive binning aims for
EMPIRICAL_NOISE_TOL = 0.005

# Output
SIGNIFICANT_DIGITS = 12

# Ratio curves
DEFAULT_CURVE_MIN = 0.01
DEFAULT_CURVE_MAX = 0.99
DEFAULT_CURVE_STEP = 0.01
