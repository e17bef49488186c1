# -*- coding: utf-8 -*-

# Copyright (c) 2023, optimal_noise contributors
#
# Distributed under the terms of the GPL license version 3.
#
# The full license is in the file LICENSE, distributed with this software.

"""
This module contains the exceptions raised by optimal_noise.
"""


class DomainError(ValueError):
    """
    Raised when an argument lies outside the domain where the mechanism is
    defined.

    :param parameter: the name of the offending argument.
    :type parameter: str
    :param value: the offending value.
    :param message: a description of the valid range.
    :type message: str
    """

    def __init__(self, parameter: str, value, message: str):
        self.parameter = parameter
        self.value = value
        super().__init__(f"{message}, found {value!r}")


class QuadratureError(RuntimeError):
    """
    Raised when adaptive quadrature cannot reach the requested tolerance
    within its interval budget.
    """

    def __init__(self, error: float, intervals: int, tol: float):
        self.error = error
        self.intervals = intervals
        self.tol = tol
        super().__init__(
            f"quadrature error estimate {error:.3e} exceeds the tolerance"
            f" {tol:.3e} after {intervals} intervals"
        )


class SampleParseError(ValueError):
    """
    Raised when a file of samples, one real per line, cannot be parsed.
    """

    def __init__(self, line_number: int, text: str, source: str = "<input>"):
        self.line_number = line_number
        self.text = text
        self.source = source
        super().__init__(
            f"{source}:{line_number}: expected a real number, found {text!r}"
        )
