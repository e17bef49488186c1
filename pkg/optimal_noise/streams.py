# -*- coding: utf-8 -*-

# Copyright (c) 2023, optimal_noise contributors
#
# Distributed under the terms of the GPL license version 3.
#
# The full license is in the file LICENSE, distributed with this software.

"""
This module provides seeded random streams. All sampling functions in
optimal_noise take a caller-owned :py:class:`numpy.random.Generator`; draws are
deterministic given the seed, the stream index and the position in the stream.
"""

from typing import List, Optional

import numpy as np


def make_stream(seed: Optional[int] = None) -> np.random.Generator:
    """
    Returns a new random stream seeded with ``seed``. If ``seed`` is ``None``
    the stream is seeded from the operating system.
    """
    return np.random.default_rng(seed)


def independent_streams(seed: int, count: int) -> List[np.random.Generator]:
    """
    Returns ``count`` statistically independent streams derived from
    ``seed``. Stream ``i`` is the same for every call with the same ``seed``,
    whatever ``count`` is, so work split over threads stays reproducible.
    """
    if count < 1:
        raise ValueError(
            f"expected a positive number of streams, found {count}"
        )
    children = np.random.SeedSequence(seed).spawn(count)
    return [np.random.default_rng(s) for s in children]
