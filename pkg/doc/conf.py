#!/usr/bin/env python
# -*- coding: utf-8 -*-
#
# chaoslink documentation build configuration file.

import sys
import os

# Put the source tree first on the path so the documented package is the one in this checkout.
cwd = os.getcwd()
project_root = os.path.dirname(cwd)
sys.path.insert(0, os.path.join(project_root, "python"))

import chaoslink  # noqa: E402

# -- General configuration ---------------------------------------------

extensions = ['sphinx.ext.autodoc', 'sphinx.ext.autosummary',
              'sphinx.ext.napoleon', 'sphinx.ext.viewcode', 'sphinx.ext.mathjax']

autosummary_generate = True

templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'

project = u'chaoslink'
copyright = u'2026, chaoslink developers'

from chaoslink.version import __version__  # noqa: E402
version = __version__
release = __version__

exclude_patterns = ['_build']
pygments_style = 'sphinx'

# -- Options for HTML output -------------------------------------------

html_theme = 'sphinx_rtd_theme'
htmlhelp_basename = 'chaoslinkdoc'

# -- Options for LaTeX output ------------------------------------------

latex_documents = [
    ('index', 'chaoslink.tex', u'chaoslink Documentation', u'chaoslink developers', 'manual'),
]

# -- Options for manual page output ------------------------------------

man_pages = [
    ('index', 'chaoslink', u'chaoslink Documentation', [u'chaoslink developers'], 1)
]
