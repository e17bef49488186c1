# -*- coding: utf-8 -*-

# Copyright (c) 2023, optimal_noise contributors
#
# Distributed under the terms of the GPL license version 3.
#
# The full license is in the file LICENSE, distributed with this software.

"""
This module provides some tools for optimal_noise.
"""

from packaging import version


def minimum_numpy_version():
    """
    Returns the minimum version of numpy required by optimal_noise.
    """
    return "1.22.0"


def numpy_version():
    "Get the version of numpy that is installed."
    import numpy  # pylint: disable=import-outside-toplevel

    return numpy.__version__


def compare_version_numbers(supplied, required):
    "Returns True if supplied >= required"

    if isinstance(supplied, str) and isinstance(required, str):
        return version.parse(supplied) >= version.parse(required)
    raise TypeError(
        "expected a (string, string), got a ("
        + type(supplied).__name__
        + ", "
        + type(required).__name__
        + ")"
    )


def check_numpy_version():
    "Raise ImportError if the installed numpy is too old."
    if not compare_version_numbers(numpy_version(), minimum_numpy_version()):
        raise ImportError(
            f"numpy version at least {minimum_numpy_version()}"
            + f" is required, found {numpy_version()}"
        )


def format_real(x: float, digits: int = 12) -> str:
    """
    Returns ``x`` with ``digits`` significant digits, using ``.`` as the
    decimal separator whatever the locale.
    """
    return f"{float(x):.{digits}g}"
