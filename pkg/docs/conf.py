# orbicount documentation build configuration file.

import sys
import os

sys.path.insert(0, os.path.abspath('..'))

extensions = [
    'sphinx.ext.autodoc',
    'sphinx_click',
]

templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'

project = u'orbicount'
copyright = u'2026, orbicount contributors'
version = '0.1'
release = '0.1.0'

exclude_patterns = ['_build']
pygments_style = 'sphinx'

html_theme = 'alabaster'
htmlhelp_basename = 'orbicountdoc'
