#!/usr/bin/env python3
# -*- coding: utf-8 -*-

import os
import re
import sys

import sphinx_rtd_theme

sys.path.insert(0, os.path.abspath("../.."))

extensions = [
    "sphinx.ext.autodoc",
    "sphinx.ext.intersphinx",
    "sphinx.ext.autosummary",
    "sphinx.ext.napoleon",
    "sphinx.ext.mathjax",
    "sphinx_copybutton",
    "sphinx.ext.doctest",
]

autosummary_generate = True
add_module_names = False


def _version():
    with open("../../setup.py", "r", encoding="utf-8") as f:
        s = f.read()
    return re.search(r"__version__\s*=\s*\"(\d+\.\d+\.\d+)", s).group(1)


source_suffix = ".rst"
master_doc = "index"
project = "optimal_noise"
copyright = "2023, optimal_noise contributors"
author = "optimal_noise contributors"
version = _version()
release = version
language = "en"
exclude_patterns = ["_build"]
pygments_style = "sphinx"
highlight_language = "python"
todo_include_todos = False

html_theme = "sphinx_rtd_theme"
html_theme_path = [sphinx_rtd_theme.get_html_theme_path()]
htmlhelp_basename = "optimal_noise"
html_theme_options = {"titles_only": True}

man_pages = [
    (
        master_doc,
        "optimal_noise",
        "optimal_noise Documentation",
        [author],
        1,
    )
]

intersphinx_mapping = {
    "python": ("https://docs.python.org/3", None),
    "numpy": ("https://numpy.org/doc/stable/", None),
}

autoclass_content = "both"
