#!/usr/bin/env python3

"""
Print the version of optimal_noise, and exit with status 1 if setup.py and
optimal_noise/__init__.py disagree about it.
"""

import re
import sys

PATTERN = re.compile(r"__version__\s*=\s*\"(\d+\.\d+\.\d+)\"")


def version_in(fnam):
    with open(fnam, "r", encoding="UTF-8") as f:
        return PATTERN.search(f.read()).group(1)


setup_version = version_in("setup.py")
package_version = version_in("optimal_noise/__init__.py")
if setup_version != package_version:
    sys.exit(
        f"setup.py has version {setup_version} but "
        f"optimal_noise/__init__.py has {package_version}"
    )
print(setup_version)
