#
# MIT License
#
# (C) Copyright 2026 immersion-wqo contributors
#
# Permission is hereby granted, free of charge, to any person obtaining a
# copy of this software and associated documentation files (the "Software"),
# to deal in the Software without restriction, including without limitation
# the rights to use, copy, modify, merge, publish, distribute, sublicense,
# and/or sell copies of the Software, and to permit persons to whom the
# Software is furnished to do so, subject to the following conditions:
#
# The above copyright notice and this permission notice shall be included
# in all copies or substantial portions of the Software.
#
# THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
# IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
# FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL
# THE AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR
# OTHER LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE,
# ARISING FROM, OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR
# OTHER DEALINGS IN THE SOFTWARE.
#
# Sphinx configuration for the immersion-wqo API pages.

import os
import sys

sys.path.insert(0, os.path.abspath('..'))

from tools.changelog import get_latest_version_from_file  # noqa: E402

project = 'immersion-wqo'
copyright = '2026 immersion-wqo contributors'
author = 'immersion-wqo contributors'
release = get_latest_version_from_file(os.path.join('..', 'CHANGELOG.md')) or 'unreleased'

extensions = ['sphinx.ext.autodoc', 'sphinx.ext.napoleon']

# Docstrings are Google style with types in parentheses.
napoleon_google_docstring = True
napoleon_numpy_docstring = False
autodoc_member_order = 'bysource'
autodoc_default_options = {'members': True, 'show-inheritance': True}

exclude_patterns = ['_build']
html_theme = 'alabaster'
