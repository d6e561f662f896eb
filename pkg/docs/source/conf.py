"""
Sphinx configuration for the hardylab documentation: the getting-started
guide, the worked examples (Koebe exponents, convex measures, the lacunary
map) and the API pages pulled from the module docstrings.
"""
import os
import sys

# The package sits two directories above this file.
_pysrc = os.path.abspath(
    os.path.join(
        os.path.abspath(__file__), '..', '..', '..'
    )
)
sys.path.insert(0, _pysrc)
import hardylab


# -- Project information -----------------------------------------------------

project = 'hardylab'
copyright = '2026, Pat Daburu'
author = 'Pat Daburu'

# The full version, including alpha/beta/rc tags
release = hardylab.__release__


# -- General configuration ---------------------------------------------------

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.viewcode',
    'sphinx.ext.githubpages',
    'sphinx.ext.todo'
]

# Keep the API pages in the order the modules define things (types first,
# then the operations on them).
autodoc_member_order = 'bysource'

templates_path = ['_templates']
exclude_patterns = []

todo_include_todos = True
todo_link_only = True


# -- Options for HTML output -------------------------------------------------

html_theme = 'alabaster'

html_theme_options = {
    'description': 'Univalent functions, Hardy exponents and Herglotz '
                   'measures, numerically.',
    'github_user': 'patdaburu',
    'github_repo': 'hardylab',
}
