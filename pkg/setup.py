# -*- coding: utf-8 -*-

# Copyright (c) 2023, optimal_noise contributors
#
# Distributed under the terms of the GPL license version 3.
#
# The full license is in the file LICENSE, distributed with this software.

"""
This package provides the optimal uniform-with-atom noise-adding mechanism for
(0, delta)-differential privacy of a single real-valued query.
"""

import os
import sys

from setuptools import setup, find_packages

__dir__ = os.path.abspath(os.path.dirname(__file__))
sys.path.insert(0, __dir__ + "/optimal_noise")

from tools import (  # pylint: disable=import-error, wrong-import-position
    minimum_numpy_version,
)

__version__ = "0.3.0"

with open(os.path.join(__dir__, "README.md"), "r", encoding="utf-8") as readme:
    long_description = readme.read()

setup(
    name="optimal_noise",
    version=__version__,
    author="optimal_noise contributors",
    description="Optimal noise-adding mechanism for (0, delta)-differential"
    + " privacy",
    long_description=long_description,
    long_description_content_type="text/markdown",
    packages=find_packages(exclude=["tests"]),
    install_requires=[
        f"numpy>={minimum_numpy_version()}",
        "packaging>=20.4",
    ],
    tests_require=["pytest>=6.2.4"],
    entry_points={
        "console_scripts": ["optimal-noise=optimal_noise.cli:main"],
    },
    zip_safe=False,
    python_requires=">=3.8.0",
)
