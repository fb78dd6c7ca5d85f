# -*- coding: utf-8 -*-
#
# unruhtrap documentation build configuration file
#
# This file is execfile()d with the current directory set to its
# containing dir.

import os
import sys
from datetime import date

# If extensions (or modules to document with autodoc) are in another directory,
# add these directories to sys.path here.
sys.path.insert(0, os.path.abspath(os.path.join('..')))

# -- General configuration -----------------------------------------------------

extensions = ['sphinx.ext.autodoc',
              'sphinx.ext.todo',
              'sphinx.ext.coverage',
              'sphinx.ext.mathjax',
              'sphinx.ext.napoleon',
              ]

autoclass_content = 'both'

templates_path = ['_templates']

source_suffix = {'.rst': 'restructuredtext'}

master_doc = 'index'

project = u'unruhtrap'
copyright = u'{}, unruhtrap developers'.format(date.today().year)

try:
    import unruhtrap
    release = unruhtrap.__version__
except ImportError:
    release = '0.1'

exclude_trees = ['_build']

default_role = None

add_function_parentheses = True

add_module_names = False

pygments_style = 'sphinx'

# -- Options for HTML output ---------------------------------------------------

html_theme = 'alabaster'

html_title = "unruhtrap: Unruh-effect detector response in a chirped ion trap"
html_short_title = "unruhtrap"

html_static_path = ['_static']

html_domain_indices = False
html_use_index = True
html_show_sourcelink = True

htmlhelp_basename = 'unruhtrapdoc'

# -- Options for LaTeX output --------------------------------------------------

latex_documents = [
  ('index', 'unruhtrap.tex', u'unruhtrap documentation',
   u'unruhtrap developers', 'manual'),
]
