# -*- coding: utf-8 -*-

# Copyright (c) 2023, optimal_noise contributors
#
# Distributed under the terms of the GPL license version 3.
#
# The full license is in the file LICENSE, distributed with this software.

# pylint: disable=invalid-name, too-many-arguments

"""
This module provides the comparison between the optimal mechanism and the
Gaussian mechanism: single comparisons, and :py:class:`CurveTable`, the cost
ratio as a function of ``delta``.
"""

import csv
import io
import math
from dataclasses import dataclass
from typing import NamedTuple, TextIO, Tuple, Union

from .constants import (
    DEFAULT_CURVE_MAX,
    DEFAULT_CURVE_MIN,
    DEFAULT_CURVE_STEP,
    SIGNIFICANT_DIGITS,
)
from .exceptions import DomainError, SampleParseError
from .gaussian import GaussianConvention, calibrate_gaussian, gaussian_cost
from .optimal import min_cost_ln
from .tools import format_real

CSV_HEADER = ["delta", "optimal_cost", "gaussian_cost", "ratio"]


class CurveRow(NamedTuple):
    "One row of a :py:class:`CurveTable`."
    delta: float
    optimal_cost: float
    gaussian_cost: float
    ratio: float


def compare(
    delta: float,
    sensitivity: float,
    n: float,
    convention: GaussianConvention = GaussianConvention.SigmaPower,
) -> CurveRow:
    """
    Returns the minimum cost ``E|X| ** n``, the cost of the calibrated Gaussian
    mechanism, and their ratio, at ``delta``.

    :raises DomainError: if an argument is out of range.
    """
    optimal = min_cost_ln(delta, sensitivity, n)
    gaussian = gaussian_cost(
        calibrate_gaussian(delta, sensitivity), n, convention
    )
    return CurveRow(delta, optimal, gaussian, optimal / gaussian)


@dataclass(frozen=True)
class CurveTable:
    """
    The comparison between the optimal and the Gaussian mechanism over a grid
    of ``delta``, sorted by increasing ``delta``.
    """

    rows: Tuple[CurveRow, ...]
    n: float
    sensitivity: float

    def __post_init__(self):
        deltas = [row.delta for row in self.rows]
        if any(a >= b for a, b in zip(deltas, deltas[1:])):
            raise DomainError(
                "rows", None, "rows must be strictly increasing in delta"
            )

    def __len__(self) -> int:
        return len(self.rows)

    def to_csv(self, out: Union[str, TextIO]) -> None:
        """
        Write the table as CSV with header
        ``delta,optimal_cost,gaussian_cost,ratio``, each value with 12
        significant digits.
        """
        if isinstance(out, str):
            with open(out, "w", encoding="utf-8", newline="") as f:
                self.to_csv(f)
            return
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(CSV_HEADER)
        for row in self.rows:
            writer.writerow([format_real(x, SIGNIFICANT_DIGITS) for x in row])

    def to_csv_string(self) -> str:
        "Returns the CSV written by :py:meth:`to_csv` as a string."
        buf = io.StringIO()
        self.to_csv(buf)
        return buf.getvalue()

    @staticmethod
    def from_csv(
        src: Union[str, TextIO], n: float, sensitivity: float
    ) -> "CurveTable":
        """
        Read a table written by :py:meth:`to_csv`; the exponent and the
        sensitivity are not stored in the file and must be given.

        :raises SampleParseError: if a row cannot be parsed.
        """
        if isinstance(src, str):
            with open(src, "r", encoding="utf-8", newline="") as f:
                return CurveTable.from_csv(f, n, sensitivity)
        reader = csv.reader(src)
        header = next(reader, None)
        if header != CSV_HEADER:
            raise SampleParseError(1, ",".join(header or []), "curve")
        rows = []
        for line_number, row in enumerate(reader, start=2):
            if not row:
                continue
            try:
                if len(row) != 4:
                    raise ValueError
                rows.append(CurveRow(*(float(x) for x in row)))
            except ValueError:
                raise SampleParseError(
                    line_number, ",".join(row), "curve"
                ) from None
        return CurveTable(tuple(rows), n, sensitivity)

    def isclose(self, other: "CurveTable", rel_tol: float = 1e-11) -> bool:
        "Returns ``True`` if the tables agree entrywise up to ``rel_tol``."
        return (
            len(self) == len(other)
            and self.n == other.n
            and self.sensitivity == other.sensitivity
            and all(
                math.isclose(x, y, rel_tol=rel_tol, abs_tol=1e-300)
                for a, b in zip(self.rows, other.rows)
                for x, y in zip(a, b)
            )
        )


def delta_grid(
    delta_min: float = DEFAULT_CURVE_MIN,
    delta_max: float = DEFAULT_CURVE_MAX,
    step: float = DEFAULT_CURVE_STEP,
) -> Tuple[float, ...]:
    """
    Returns ``delta_min, delta_min + step, ...`` up to ``delta_max`` (included
    when it is on the grid), each rounded to 12 decimal places.

    :raises DomainError: unless ``0 < delta_min < delta_max < 1`` and
      ``step > 0``.
    """
    if not 0 < delta_min < 1:
        raise DomainError("delta_min", delta_min, "delta_min must lie in (0,1)")
    if not 0 < delta_max < 1:
        raise DomainError("delta_max", delta_max, "delta_max must lie in (0,1)")
    if not delta_min < delta_max:
        raise DomainError(
            "delta_max", delta_max, f"delta_max must exceed {delta_min}"
        )
    if not step > 0:
        raise DomainError("step", step, "step must be positive")
    count = int(math.floor((delta_max - delta_min) / step + 1e-9)) + 1
    return tuple(round(delta_min + i * step, 12) for i in range(count))


def build_curve(
    n: float,
    sensitivity: float = 1.0,
    delta_min: float = DEFAULT_CURVE_MIN,
    delta_max: float = DEFAULT_CURVE_MAX,
    step: float = DEFAULT_CURVE_STEP,
    convention: GaussianConvention = GaussianConvention.SigmaPower,
) -> CurveTable:
    """
    Returns the :py:class:`CurveTable` of :py:func:`compare` over
    :py:func:`delta_grid`.

    For ``n = 1`` the ratio is ``1 / 2`` for ``delta <= 1 / 2`` and
    ``2 * delta * (1 - delta)`` above; for ``n = 2`` it is ``1 / 3`` for
    ``delta <= 2 / 3`` and ``9 / 4 * delta ** 2 * (1 - delta)`` above.

    :raises DomainError: if an argument is out of range.
    """
    rows = tuple(
        compare(delta, sensitivity, n, convention)
        for delta in delta_grid(delta_min, delta_max, step)
    )
    return CurveTable(rows, float(n), float(sensitivity))
