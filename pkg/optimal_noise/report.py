# -*- coding: utf-8 -*-

# Copyright (c) 2023, optimal_noise contributors
#
# Distributed under the terms of the GPL license version 3.
#
# The full license is in the file LICENSE, distributed with this software.

"""
This module provides reporting for optimal_noise: a package logger that is
silent by default, and :py:class:`ReportGuard` for switching reporting on and
off.
"""

import logging
import sys

logger = logging.getLogger("optimal_noise")
logger.addHandler(logging.NullHandler())

_handler = logging.StreamHandler(sys.stderr)
_handler.setFormatter(
    logging.Formatter("#%(threadName)s: %(name)s.%(module)s: %(message)s")
)


def is_reporting() -> bool:
    "Returns True if reporting is currently switched on."
    return _handler in logger.handlers


def _set_reporting(val: bool) -> None:
    if val and not is_reporting():
        logger.addHandler(_handler)
        logger.setLevel(logging.INFO)
    elif not val and is_reporting():
        logger.removeHandler(_handler)
        logger.setLevel(logging.WARNING)


class ReportGuard:
    """
    Switches reporting on or off.

    Constructing a ``ReportGuard`` sets the reporting state, which persists
    until it is changed again. Used as a context manager, the previous state is
    restored on exit:

    .. code-block:: python

        with ReportGuard(True):
            optimal_alpha_generic(0.5, 1.0, cost)

    :param val: whether reporting should be on (default: ``True``).
    :type val: bool
    """

    def __init__(self, val: bool = True):
        self._previous = is_reporting()
        _set_reporting(val)

    def __enter__(self):
        return self

    def __exit__(self, *exc):
        _set_reporting(self._previous)
        return False


def report_default(msg: str, *args) -> None:
    "Emit an INFO record when reporting is on."
    if is_reporting():
        logger.info(msg, *args, stacklevel=2)
