# -*- coding: utf-8 -*-
'''
Reference trees with known graded Betti tables.
'''
from __future__ import absolute_import, unicode_literals
import io

import pandas as pd

from .betti import GradedBettiTable
from .forest import parse_forest

# Vertices 0 > 1 > 1' > 2 > 2' > 2'' > 3.
SEVEN_VERTEX_TREE = '''
0 1
0 1'
1 2
1 2'
1' 2''
2 3
'''.lstrip()

# Vertices 0 > 1 > 2 > 3 > 4 > 4' > 5 > 6.
GRADIENT_PATH_TREE = '''
0 1
1 2
2 3
3 4
3 4'
4 5
5 6
'''.lstrip()

TREES = {'seven-vertex': SEVEN_VERTEX_TREE,
         'gradient-path': GRADIENT_PATH_TREE}

# Graded Betti numbers `beta_{r,d}` of `R/I`.
BETTI_TSV = '''
tree	degree	internal_degree	value
seven-vertex	0	0	1
seven-vertex	1	2	6
seven-vertex	2	3	6
seven-vertex	2	4	4
seven-vertex	3	4	1
seven-vertex	3	5	6
seven-vertex	4	6	2
'''.strip()

BETTI = pd.read_csv(io.BytesIO(BETTI_TSV.encode('utf8')),
                    sep='\t').set_index('tree')


def reference_forest(name):
    return parse_forest(TREES[name])


def reference_table(name):
    '''
    Return the expected `GradedBettiTable` of the reference tree `name`.
    '''
    rows = BETTI.loc[[name]]
    return GradedBettiTable(dict(((int(row.degree),
                                   int(row.internal_degree)),
                                  int(row.value))
                                 for row in rows.itertuples()))
