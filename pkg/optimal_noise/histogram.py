# -*- coding: utf-8 -*-

# Copyright (c) 2023, optimal_noise contributors
#
# Distributed under the terms of the GPL license version 3.
#
# The full license is in the file LICENSE, distributed with this software.

"""
This module provides :py:class:`Histogram`, the discrete carrier for
empirical noise distributions: equal-width bins over a range plus an explicitly
tracked probability mass at the origin.
"""

import csv
import io
import math
from typing import Iterable, Optional, TextIO, Union

import numpy as np

from .constants import HISTOGRAM_MASS_TOL
from .exceptions import DomainError, SampleParseError
from .tools import format_real


class Histogram:
    """
    A probability distribution given by the masses of equal-width bins over
    ``[lo, hi]`` together with a mass :py:attr:`atom_at_zero` at the origin.

    The masses and the atom must sum to 1 within ``1e-9``. Instances are
    immutable.

    :param lo: the lower end of the range.
    :type lo: float
    :param hi: the upper end of the range.
    :type hi: float
    :param bin_width: the width of every bin; ``(hi - lo) / bin_width`` must
      be an integer.
    :type bin_width: float
    :param masses: the mass of each bin, from left to right.
    :param atom_at_zero: the mass at the origin (default: ``0``).
    :type atom_at_zero: float

    :raises DomainError: if any of the above fails.
    """

    __slots__ = ("_lo", "_hi", "_bin_width", "_masses", "_atom")

    def __init__(
        self,
        lo: float,
        hi: float,
        bin_width: float,
        masses: Iterable[float],
        atom_at_zero: float = 0.0,
    ):
        if not lo < hi:
            raise DomainError("lo", lo, f"expected lo < hi = {hi}")
        if not bin_width > 0:
            raise DomainError(
                "bin_width", bin_width, "expected a positive width"
            )
        bins = (hi - lo) / bin_width
        if abs(bins - round(bins)) > 1e-9 * max(1.0, bins):
            raise DomainError(
                "bin_width",
                bin_width,
                f"the width must divide hi - lo = {hi - lo}",
            )
        masses = np.array(masses, dtype=float)
        if masses.ndim != 1 or len(masses) != round(bins):
            raise DomainError(
                "masses", len(masses), f"expected {round(bins)} bin masses"
            )
        if np.any(masses < 0) or atom_at_zero < 0:
            raise DomainError("masses", None, "masses must be nonnegative")
        total = masses.sum() + atom_at_zero
        if abs(total - 1) > HISTOGRAM_MASS_TOL:
            raise DomainError("masses", total, "the masses must sum to 1")
        masses.setflags(write=False)
        self._lo = float(lo)
        self._hi = float(hi)
        self._bin_width = float(bin_width)
        self._masses = masses
        self._atom = float(atom_at_zero)

    @property
    def lo(self) -> float:
        "The lower end of the range."
        return self._lo

    @property
    def hi(self) -> float:
        "The upper end of the range."
        return self._hi

    @property
    def bin_width(self) -> float:
        "The width of each bin."
        return self._bin_width

    @property
    def masses(self) -> np.ndarray:
        "The (read-only) array of bin masses."
        return self._masses

    @property
    def atom_at_zero(self) -> float:
        "The mass at the origin."
        return self._atom

    @property
    def bins(self) -> int:
        "The number of bins."
        return len(self._masses)

    def __len__(self) -> int:
        return len(self._masses)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Histogram):
            return NotImplemented
        return (
            self._lo == other._lo
            and self._hi == other._hi
            and self._bin_width == other._bin_width
            and self._atom == other._atom
            and np.array_equal(self._masses, other._masses)
        )

    def __repr__(self) -> str:
        return (
            f"<histogram with {self.bins} bins over [{self._lo:g}, "
            f"{self._hi:g}] and atom {self._atom:g}>"
        )

    def edges(self) -> np.ndarray:
        "Returns the ``bins + 1`` bin edges."
        return self._lo + self._bin_width * np.arange(self.bins + 1)

    def bin_index(self, x: float) -> int:
        """
        Returns the index of the bin containing ``x``; bins are closed on the
        left, except the last which is closed on both sides.

        :raises DomainError: if ``x`` is outside ``[lo, hi]``.
        """
        if not self._lo <= x <= self._hi:
            raise DomainError("x", x, f"x must lie in [{self._lo}, {self._hi}]")
        i = int(math.floor((x - self._lo) / self._bin_width))
        return min(self.bins - 1, i)

    def is_symmetric_range(self, tol: float = 1e-12) -> bool:
        "Returns ``True`` if ``lo == -hi`` up to ``tol`` relative to ``hi``."
        scale = max(abs(self._lo), abs(self._hi))
        return abs(self._lo + self._hi) <= tol * scale

    def combined(self) -> np.ndarray:
        """
        Returns the bin masses with the atom added to the bin containing the
        origin; if the origin is outside the range, the atom must be 0.
        """
        result = np.array(self._masses)
        if self._atom > 0:
            result[self.bin_index(0.0)] += self._atom
        return result

    @staticmethod
    def from_samples(
        samples,
        lo: float,
        hi: float,
        bins: int,
        atom_mask: Optional[np.ndarray] = None,
    ) -> "Histogram":
        """
        Returns the empirical distribution of ``samples`` binned into ``bins``
        equal bins over ``[lo, hi]``.

        Draws flagged by ``atom_mask`` make up the atom at the origin; without
        a mask, the draws exactly equal to ``0`` do.

        :raises DomainError: if there are no samples, or some sample is not
          in ``[lo, hi]``.
        """
        samples = np.asarray(samples, dtype=float).ravel()
        if len(samples) == 0:
            raise DomainError("samples", 0, "expected at least one sample")
        if bins < 1:
            raise DomainError(
                "bins", bins, "expected a positive number of bins"
            )
        if np.any(samples < lo) or np.any(samples > hi) or np.any(
            np.isnan(samples)
        ):
            raise DomainError(
                "samples", None, f"every sample must lie in [{lo}, {hi}]"
            )
        if atom_mask is None:
            atom_mask = samples == 0.0
        else:
            atom_mask = np.asarray(atom_mask, dtype=bool).ravel()
            if atom_mask.shape != samples.shape:
                raise DomainError(
                    "atom_mask",
                    len(atom_mask),
                    f"expected one flag per sample ({len(samples)})",
                )
        counts, _ = np.histogram(samples[~atom_mask], bins=bins, range=(lo, hi))
        total = len(samples)
        return Histogram(
            lo,
            hi,
            (hi - lo) / bins,
            counts / total,
            np.count_nonzero(atom_mask) / total,
        )

    def to_csv(self, out: Union[str, TextIO]) -> None:
        """
        Write the histogram as CSV with header ``bin_lo,bin_hi,mass``, one row
        per bin, and a final row ``atom,0,<mass>``.
        """
        if isinstance(out, str):
            with open(out, "w", encoding="utf-8", newline="") as f:
                self.to_csv(f)
            return
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["bin_lo", "bin_hi", "mass"])
        edges = self.edges()
        for i, mass in enumerate(self._masses):
            writer.writerow(
                [
                    format_real(edges[i]),
                    format_real(edges[i + 1]),
                    format_real(mass),
                ]
            )
        writer.writerow(["atom", "0", format_real(self._atom)])

    def to_csv_string(self) -> str:
        "Returns the CSV written by :py:meth:`to_csv` as a string."
        buf = io.StringIO()
        self.to_csv(buf)
        return buf.getvalue()

    @staticmethod
    def from_csv(src: Union[str, TextIO]) -> "Histogram":
        """
        Read a histogram written by :py:meth:`to_csv`. The bins must be
        contiguous and of equal width; masses that sum to 1 only within the
        printed precision are renormalised.

        :raises SampleParseError: if a row cannot be parsed.
        :raises DomainError: if the rows do not describe a histogram.
        """
        if isinstance(src, str):
            with open(src, "r", encoding="utf-8", newline="") as f:
                return Histogram.from_csv(f)
        reader = csv.reader(src)
        header = next(reader, None)
        if header != ["bin_lo", "bin_hi", "mass"]:
            raise SampleParseError(1, ",".join(header or []), "histogram")
        edges, masses, atom = [], [], 0.0
        for line_number, row in enumerate(reader, start=2):
            if not row:
                continue
            try:
                if len(row) != 3:
                    raise ValueError
                if row[0] == "atom":
                    atom = float(row[2])
                    continue
                lo, hi, mass = (float(x) for x in row)
            except ValueError:
                raise SampleParseError(
                    line_number, ",".join(row), "histogram"
                ) from None
            if edges and abs(lo - edges[-1]) > 1e-9 * max(1.0, abs(lo)):
                raise DomainError(
                    "bin_lo", lo, f"expected bin_lo = {edges[-1]}"
                )
            if not edges:
                edges.append(lo)
            elif abs((hi - lo) - (edges[1] - edges[0])) > 1e-9 * max(
                1.0, abs(hi - lo)
            ):
                raise DomainError(
                    "bin_hi",
                    hi,
                    f"expected bins of width {edges[1] - edges[0]}",
                )
            edges.append(hi)
            masses.append(mass)
        if not masses:
            raise DomainError("masses", 0, "expected at least one bin")
        lo, hi = edges[0], edges[-1]
        masses = np.array(masses)
        total = masses.sum() + atom
        if total > 0:
            masses, atom = masses / total, atom / total
        return Histogram(lo, hi, (hi - lo) / len(masses), masses, atom)


def symmetrize(h: Histogram) -> Histogram:
    """
    Returns the histogram whose bin ``i`` has mass
    ``(mass(i) + mass(mirror(i))) / 2``, where ``mirror(i)`` is the bin
    reflected through the origin; the atom is unchanged. The result is a
    symmetric distribution with the same expected cost as ``h`` for every
    symmetric cost, and its privacy distance is no larger than that of ``h``.

    :raises DomainError: if the range of ``h`` is not symmetric about the
      origin.
    """
    if not h.is_symmetric_range():
        raise DomainError(
            "lo", h.lo, f"the range must be symmetric about 0, hi = {h.hi}"
        )
    masses = 0.5 * (h.masses + h.masses[::-1])
    return Histogram(-h.hi, h.hi, h.bin_width, masses, h.atom_at_zero)


def is_symmetric_monotone(h: Histogram, tol: float = 1e-12) -> bool:
    """
    Returns ``True`` if ``h`` is symmetric about the origin and its bin masses
    are nonincreasing away from the origin, both up to ``tol``.
    """
    if not h.is_symmetric_range():
        return False
    m = h.masses
    if np.any(np.abs(m - m[::-1]) > tol):
        return False
    right = m[h.bins // 2 :]
    return bool(np.all(np.diff(right) <= tol))
