# -*- coding: utf-8 -*-
#
# Sphinx configuration of the wbc_cluster documentation.

import os
import sys

sys.path.insert(0, os.path.abspath('..'))

import sphinx_rtd_theme, recommonmark

# -- Project information -----------------------------------------------------

project = 'wbc_cluster'
copyright = '2026, wbc_cluster developers'
author = 'wbc_cluster developers'
release = '0.1.0'

# -- General configuration ---------------------------------------------------

extensions = ['sphinx_rtd_theme', 'recommonmark']
source_suffix = ['.rst', '.md']
master_doc = 'index'
exclude_patterns = ['_build', 'Thumbs.db', '.DS_Store']
pygments_style = 'sphinx'

# -- HTML output -------------------------------------------------------------

html_theme = 'sphinx_rtd_theme'
htmlhelp_basename = 'wbc_clusterdoc'

# -- Manual page -------------------------------------------------------------

man_pages = [
    (master_doc, 'wbc_cluster', 'Cluster analysis of the breast cancer data',
     [author], 1)
]
