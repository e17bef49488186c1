# -*- coding: utf-8 -*-

# Copyright (c) 2023, optimal_noise contributors
#
# Distributed under the terms of the GPL license version 3.
#
# The full license is in the file LICENSE, distributed with this software.

# pylint: disable=invalid-name, too-many-arguments

"""
This module provides privacy audits of noise distributions: the exact
privacy distance of the uniform-with-atom and Gaussian distributions, and an
estimate of it for arbitrary samples.

The privacy distance of a noise distribution ``P`` at sensitivity ``s`` is the
largest value of ``P(S) - P(S + d)`` over all sets ``S`` and shifts
``|d| <= s``; adding noise from ``P`` is (0, delta)-differentially private
exactly when this distance is at most ``delta``.
"""

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from enum import Enum
from typing import List, Optional, Sequence

import numpy as np

from .constants import (
    DEFAULT_BINS,
    DEFAULT_SHIFT_GRID,
    EMPIRICAL_NOISE_TOL,
    MASS_TOL,
    MAX_AUDIT_BINS,
    MIN_BINS,
    MIN_SHIFT_GRID,
)
from .exceptions import DomainError
from .gaussian import normal_cdf
from .histogram import Histogram, is_symmetric_monotone
from .palpha import PAlphaDist, interval_prob
from .report import report_default


class AuditMethod(Enum):
    """
    This class is used to record how an :py:class:`AuditReport` was obtained.
    """

    AnalyticPAlpha = 0
    AnalyticGaussian = 1
    EmpiricalHistogram = 2
    AnalyticHistogram = 3


@dataclass(frozen=True)
class AuditReport:
    """
    The outcome of a privacy audit.

    Empirical audits only consider unions of bins and a finite grid of shifts,
    so their :py:attr:`delta_hat` estimates the privacy distance from below
    (up to sampling error).

    :ivar delta_hat: the (estimated) privacy distance, in ``[0, 1]``.
    :ivar worst_shift: the signed shift attaining :py:attr:`delta_hat`.
    :ivar method: how the audit was carried out.
    :ivar sample_count: the number of samples audited, ``0`` for analytic
      audits.
    :ivar sensitivity: the sensitivity the audit was carried out for.
    """

    delta_hat: float
    worst_shift: float
    method: AuditMethod
    sample_count: int = 0
    sensitivity: Optional[float] = None

    def __post_init__(self):
        object.__setattr__(
            self, "delta_hat", min(1.0, max(0.0, float(self.delta_hat)))
        )

    def to_dict(self) -> dict:
        "Returns the report as a dict of plain values."
        return {
            "delta_hat": self.delta_hat,
            "worst_shift": self.worst_shift,
            "method": self.method.name,
            "sample_count": self.sample_count,
        }


def analytic_delta_palpha(d: PAlphaDist) -> AuditReport:
    """
    Returns the exact privacy distance of ``d``, which is the probability of
    ``[-sensitivity / 2, sensitivity / 2]``, attained at the shift
    ``sensitivity``.
    """
    half = d.sensitivity / 2
    return AuditReport(
        interval_prob(d, -half, half),
        d.sensitivity,
        AuditMethod.AnalyticPAlpha,
        0,
        d.sensitivity,
    )


def analytic_delta_gaussian(sigma: float, sensitivity: float) -> AuditReport:
    """
    Returns the exact privacy distance ``2 * Phi(sensitivity / (2 * sigma)) -
    1`` of ``Normal(0, sigma ** 2)`` noise.

    :raises DomainError: unless ``sigma > 0`` and ``sensitivity > 0``.
    """
    if not 0 < sigma < math.inf:
        raise DomainError("sigma", sigma, "sigma must be positive")
    if not 0 < sensitivity < math.inf:
        raise DomainError(
            "sensitivity", sensitivity, "sensitivity must be positive"
        )
    z = sensitivity / (2 * sigma)
    # 2 * Phi(z) - 1 without cancellation for small z
    value = math.erf(z / math.sqrt(2)) if z < 1 else 2 * normal_cdf(z) - 1
    return AuditReport(
        value, sensitivity, AuditMethod.AnalyticGaussian, 0, sensitivity
    )


def check_dp(d: PAlphaDist, target_delta: float) -> bool:
    """
    Returns ``True`` if adding noise from ``d`` is (0, ``target_delta``)-
    differentially private, that is if the probability of
    ``[-sensitivity / 2, sensitivity / 2]`` is at most ``target_delta``.

    :raises DomainError: unless ``0 < target_delta < 1``.
    """
    if not 0 < target_delta < 1:
        raise DomainError(
            "target_delta", target_delta, "target_delta must lie in (0,1)"
        )
    half = d.sensitivity / 2
    return interval_prob(d, -half, half) <= target_delta + MASS_TOL


def histogram_delta(h: Histogram, shift: float) -> float:
    """
    Returns the largest ``P(S) - P(S + shift)`` over unions ``S`` of bins of
    ``h``, with ``shift`` rounded to a whole number of bins. The atom counts
    as part of the bin containing the origin.
    """
    k = int(round(shift / h.bin_width))
    c = h.combined()
    n = len(c)
    if k == 0:
        return 0.0
    if abs(k) >= n:
        return float(min(1.0, c.sum()))
    if k > 0:
        diff = np.maximum(0.0, c[: n - k] - c[k:]).sum() + c[n - k :].sum()
    else:
        k = -k
        diff = np.maximum(0.0, c[k:] - c[: n - k]).sum() + c[:k].sum()
    return float(min(1.0, diff))


def _snapped_shifts(
    bin_width: float, sensitivity: float, shift_grid: int
) -> List[float]:
    # one grid shift per nonzero whole-bin shift, the one nearest to it
    best = {}
    for i in range(1, shift_grid + 1):
        for d in (sensitivity * i / shift_grid, -sensitivity * i / shift_grid):
            k = int(round(d / bin_width))
            if k == 0:
                continue
            if k not in best or abs(d - k * bin_width) < abs(
                best[k] - k * bin_width
            ):
                best[k] = d
    return sorted(best.values(), key=lambda d: (abs(d), d < 0))


def audit_histogram(
    h: Histogram,
    sensitivity: float,
    shift_grid: int = DEFAULT_SHIFT_GRID,
    max_threads: int = 1,
    sample_count: int = 0,
) -> AuditReport:
    """
    Returns the largest :py:func:`histogram_delta` over the signed shifts
    ``+-sensitivity * i / shift_grid`` for ``i = 1, ..., shift_grid``.

    Grid shifts that round to the same number of bins are evaluated once, at
    the grid shift closest to that whole number of bins. Ties between
    different numbers of bins are broken in favour of the smaller shift, and
    of ``+d`` over ``-d``. If no grid shift moves by a whole bin, the result
    is ``0`` at the smallest shift.

    :raises DomainError: unless ``sensitivity > 0`` and ``shift_grid >= 1``.
    """
    if not 0 < sensitivity < math.inf:
        raise DomainError(
            "sensitivity", sensitivity, "sensitivity must be positive"
        )
    if shift_grid < 1:
        raise DomainError(
            "shift_grid", shift_grid, "expected a positive number of shifts"
        )
    shifts = _snapped_shifts(h.bin_width, sensitivity, shift_grid)
    if not shifts:
        return AuditReport(
            0.0,
            sensitivity / shift_grid,
            AuditMethod.EmpiricalHistogram,
            sample_count,
            sensitivity,
        )

    def f(d):
        return histogram_delta(h, d)

    if max_threads > 1:
        with ThreadPoolExecutor(max_workers=max_threads) as pool:
            values = list(pool.map(f, shifts))
    else:
        values = [f(d) for d in shifts]
    i = int(np.argmax(values))
    return AuditReport(
        values[i],
        shifts[i],
        AuditMethod.EmpiricalHistogram,
        sample_count,
        sensitivity,
    )


def audit_binning(
    samples: Sequence[float],
    sensitivity: float,
    bins: Optional[int] = None,
    atom_mask: Optional[np.ndarray] = None,
) -> Histogram:
    """
    Returns the histogram of ``samples`` that :py:func:`empirical_delta`
    audits. It is symmetric about the origin, has an odd number of bins, and
    covers ``[-R, R]`` where ``R`` is the largest absolute sample plus
    ``sensitivity``.

    If ``bins`` is given, exactly ``bins`` bins (rounded up to an odd number)
    cover ``[-R, R]``.

    If ``bins`` is ``None``, the bin width is ``sensitivity / m`` for the
    largest odd ``m`` such that

    * no bin is narrower than ``2 * R / DEFAULT_BINS``, and
    * the range of the samples away from the atom is covered by at most
      ``pi * N * EMPIRICAL_NOISE_TOL ** 2`` bins, where ``N`` is the number
      of samples (78 bins for a million samples),

    and ``m = 1`` if there is no such ``m``. Every shift by ``sensitivity``
    is then a whole number of bins, and ``[-sensitivity / 2, sensitivity /
    2]`` is a union of bins.

    :raises DomainError: if there are no samples, some sample is not finite,
      ``sensitivity`` is not positive, ``bins < 100``, or more than
      ``MAX_AUDIT_BINS`` bins would be needed.
    """
    samples = np.asarray(samples, dtype=float).ravel()
    if len(samples) == 0:
        raise DomainError("samples", 0, "expected at least one sample")
    if not np.all(np.isfinite(samples)):
        raise DomainError("samples", None, "every sample must be finite")
    if atom_mask is not None and np.size(atom_mask) != len(samples):
        raise DomainError(
            "atom_mask",
            np.size(atom_mask),
            f"expected one flag per sample ({len(samples)})",
        )
    if bins is not None and bins < MIN_BINS:
        raise DomainError("bins", bins, f"bins must be at least {MIN_BINS}")
    if not 0 < sensitivity < math.inf:
        raise DomainError(
            "sensitivity", sensitivity, "sensitivity must be positive"
        )
    radius = float(np.abs(samples).max()) + sensitivity
    if bins is not None:
        return Histogram.from_samples(
            samples, -radius, radius, bins | 1, atom_mask
        )
    width = 2 * radius / (DEFAULT_BINS | 1)
    if atom_mask is None:
        spread = samples[samples != 0.0]
    else:
        spread = samples[~np.asarray(atom_mask, dtype=bool).ravel()]
    if len(spread) > 0:
        cap = max(1.0, math.pi * len(samples) * EMPIRICAL_NOISE_TOL**2)
        width = max(width, float(spread.max() - spread.min()) / cap)
    m = int(sensitivity / width)
    m = max(1, m if m % 2 else m - 1)
    width = sensitivity / m
    half = int(math.ceil(radius / width - 0.5))
    if 2 * half + 1 > MAX_AUDIT_BINS:
        raise DomainError(
            "samples",
            None,
            f"the samples need more than {MAX_AUDIT_BINS} bins; give bins"
            " explicitly",
        )
    hi = (half + 0.5) * width
    return Histogram.from_samples(samples, -hi, hi, 2 * half + 1, atom_mask)


def empirical_delta(
    samples: Sequence[float],
    sensitivity: float,
    bins: Optional[int] = None,
    shift_grid: int = DEFAULT_SHIFT_GRID,
    atom_mask: Optional[np.ndarray] = None,
    max_threads: int = 1,
) -> AuditReport:
    """
    Estimate the privacy distance of the distribution that ``samples`` were
    drawn from.

    The samples are binned by :py:func:`audit_binning`. Draws flagged in
    ``atom_mask`` (or, without a mask, draws exactly equal to ``0``) form the
    atom at the origin. See :py:func:`audit_histogram` for the search over
    shifts.

    Sampling noise biases the estimate upwards: every pair of bins whose
    counts agree in expectation adds about ``sqrt(count / pi)`` draws, so
    with ``B`` occupied bins the bias is about ``sqrt(B / (pi * N))``. With
    the default binning, bins are never wider than ``sensitivity``, so the
    bias stays near ``EMPIRICAL_NOISE_TOL`` until the samples spread over
    more than about 78 sensitivities (at a million samples). For the
    uniform-with-atom distribution that spread is
    ``(1 - alpha) / (delta - alpha)`` sensitivities, and a million samples
    give ``delta_hat`` within ``0.02`` of ``delta`` whenever it is at most
    ``400``.

    :param samples: the draws to audit.
    :param sensitivity: the query sensitivity.
    :type sensitivity: float
    :param bins: the number of bins, at least 100, or ``None`` (the default)
      to choose them as described in :py:func:`audit_binning`.
    :type bins: int
    :param shift_grid: the number of positive shifts, at least 10 (default:
      ``64``).
    :type shift_grid: int
    :param atom_mask: optional flags marking draws from the atom.

    :returns: An :py:class:`AuditReport` with method ``EmpiricalHistogram``.

    :raises DomainError: if there are no samples or an argument is out of
      range.
    """
    if shift_grid < MIN_SHIFT_GRID:
        raise DomainError(
            "shift_grid",
            shift_grid,
            f"shift_grid must be at least {MIN_SHIFT_GRID}",
        )
    h = audit_binning(samples, sensitivity, bins, atom_mask)
    count = int(np.size(samples))
    result = audit_histogram(h, sensitivity, shift_grid, max_threads, count)
    report_default(
        "empirical_delta: %d samples, %d bins, %d shifts, delta_hat = %.6f at"
        " shift %.6g",
        count,
        h.bins,
        shift_grid,
        result.delta_hat,
        result.worst_shift,
    )
    return result


def analytic_delta_histogram(h: Histogram, sensitivity: float) -> AuditReport:
    """
    Returns the exact privacy distance of a symmetric nonincreasing
    histogram, which is its probability of ``[-sensitivity / 2,
    sensitivity / 2]``; bins straddling the ends contribute in proportion to
    their overlap.

    :raises DomainError: if ``h`` is not symmetric and nonincreasing away from
      the origin, or ``sensitivity`` is not positive.
    """
    if not 0 < sensitivity < math.inf:
        raise DomainError(
            "sensitivity", sensitivity, "sensitivity must be positive"
        )
    if not is_symmetric_monotone(h):
        raise DomainError(
            "h", h, "the histogram must be symmetric and nonincreasing"
        )
    half = sensitivity / 2
    edges = h.edges()
    overlap = np.clip(
        np.minimum(edges[1:], half) - np.maximum(edges[:-1], -half), 0, None
    )
    value = float((h.masses * overlap / h.bin_width).sum()) + h.atom_at_zero
    return AuditReport(
        value, sensitivity, AuditMethod.AnalyticHistogram, 0, sensitivity
    )
