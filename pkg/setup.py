#!/usr/bin/env python
# -*- encoding: utf-8 -*-
from __future__ import absolute_import
from __future__ import print_function

import io
import re

from setuptools import setup


def get_version():
    with io.open('forest_resolution/__init__.py', encoding='utf8') as init:
        return re.search(r"__version__ = '([^']+)'", init.read()).group(1)


setup(name='forest-resolution',
      version=get_version(),
      description='Minimal cellular free resolutions of edge ideals of '
      'forests via discrete Morse theory.',
      license='GPLv2',
      install_requires=['path_helpers', 'pandas', 'networkx', 'sympy'],
      extras_require={'test': ['pytest']},
      packages=['forest_resolution', 'forest_resolution.bin',
                'forest_resolution.tests'],
      entry_points={'console_scripts':
                    ['forest-resolution = forest_resolution.bin.cli:main']},
      include_package_data=True)
