"""Sphinx configuration file."""

import sys
from pathlib import Path

# Add project root to path
sys.path.insert(0, str(Path(__file__).parent.parent))

import timebin_amp

project = "Time-bin Amplifier"
copyright = "2026, Time-bin Amplifier contributors"
author = "Time-bin Amplifier contributors"
version = release = timebin_amp.__version__

extensions = [
    "sphinx.ext.autodoc",
    "sphinx.ext.viewcode",
    "sphinx.ext.napoleon",
    "sphinx.ext.intersphinx",
    "sphinx_autodoc_typehints",
]

autodoc_default_options = {
    "members": True,
    "member-order": "bysource",
    "undoc-members": True,
}

# Docstrings are Google style throughout
napoleon_google_docstring = True
napoleon_numpy_docstring = False

intersphinx_mapping = {
    "python": ("https://docs.python.org/3", None),
    "pydantic": ("https://docs.pydantic.dev/latest/", None),
    "numpy": ("https://numpy.org/doc/stable/", None),
}

exclude_patterns = ["_build"]
master_doc = "index"

html_theme = "sphinx_rtd_theme"
html_theme_options = {"navigation_depth": 2}
html_title = f"{project} v{version}"
html_show_sphinx = False
