# Sphinx configuration for the accel-ent documentation.
# https://www.sphinx-doc.org/en/master/usage/configuration.html

import os
import sys

sys.path.insert(0, os.path.abspath("../../"))

from accel_ent import __version__

# -- Project information -----------------------------------------------------

project = "accel-ent"
copyright = "2025, accel-ent contributors"
author = "accel-ent contributors"
release = __version__
version = ".".join(release.split(".")[:2])

# -- General configuration ---------------------------------------------------

extensions = [
    "sphinx.ext.autodoc",
    "sphinx.ext.napoleon",
    "sphinx.ext.intersphinx",
    "sphinx.ext.mathjax",
    "sphinx.ext.viewcode",
    "sphinx_autodoc_typehints",
    "myst_parser",
]

exclude_patterns = ["build"]
language = "en"

# Docstrings write formulas as ``code``; keep them literal.
default_role = "literal"

# -- HTML output -------------------------------------------------------------

html_theme = "sphinx_rtd_theme"
html_title = f"accel-ent {release}"

# -- Intersphinx -------------------------------------------------------------

intersphinx_mapping = {
    "python": ("https://docs.python.org/3", None),
    "numpy": ("https://numpy.org/doc/stable/", None),
    "scipy": ("https://docs.scipy.org/doc/scipy/", None),
    "pydantic": ("https://docs.pydantic.dev/latest/", None),
}

# -- Napoleon ----------------------------------------------------------------

napoleon_google_docstring = False
napoleon_numpy_docstring = True
napoleon_include_special_with_doc = True
napoleon_use_rtype = True
napoleon_attr_annotations = True
napoleon_type_aliases = {
    "NDArray": "numpy.typing.NDArray",
    "ArrayLike": "numpy.typing.ArrayLike",
}

# -- Autodoc -----------------------------------------------------------------

autodoc_default_options = {
    "members": True,
    "member-order": "bysource",
    "exclude-members": "__weakref__, model_config",
}
autodoc_typehints = "signature"

# -- sphinx-autodoc-typehints ------------------------------------------------

typehints_use_signature = True
typehints_use_signature_return = True
