# -*- coding: utf-8 -*-

# Copyright (c) 2023, optimal_noise contributors
#
# Distributed under the terms of the GPL license version 3.
#
# The full license is in the file LICENSE, distributed with this software.

# pylint: disable=wrong-import-position

"""
This package provides the optimal noise-adding mechanism for (0, delta)-
differential privacy of a single real-valued query, together with the
Gaussian mechanism it is compared against and tools for auditing the privacy
of noise distributions.
"""

__version__ = "0.3.0"

from .tools import check_numpy_version

check_numpy_version()

from .audit import (
    AuditMethod,
    AuditReport,
    analytic_delta_gaussian,
    analytic_delta_histogram,
    analytic_delta_palpha,
    audit_binning,
    audit_histogram,
    check_dp,
    empirical_delta,
    histogram_delta,
)
from .cost import CostKind, CostSpec
from .curve import CurveRow, CurveTable, build_curve, compare, delta_grid
from .exceptions import DomainError, QuadratureError, SampleParseError
from .gaussian import (
    GaussianBaseline,
    GaussianConvention,
    calibrate_gaussian,
    gaussian_cost,
    normal_cdf,
    sample_gaussian,
    sample_gaussian_batch,
)
from .histogram import Histogram, is_symmetric_monotone, symmetrize
from .optimal import (
    OptimalMethod,
    OptimalResult,
    concentration_threshold,
    cost_profile,
    min_cost_ln,
    optimal_alpha_generic,
    optimal_alpha_ln,
    optimal_ln,
    optimal_palpha,
)
from .palpha import (
    PAlphaDist,
    atom_mass,
    cdf,
    check_invariants,
    expected_cost_generic,
    expected_cost_ln,
    from_json,
    interval_prob,
    make_palpha,
    pdf,
    quantile,
    release,
    sample,
    sample_batch,
    to_histogram,
    to_json,
    total_mass,
)
from .report import ReportGuard
from .streams import independent_streams, make_stream
from .tools import compare_version_numbers, numpy_version
