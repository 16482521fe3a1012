from __future__ import absolute_import
from .context import *
from .forest import (Forest, ForestParseError, RankingError, parse_forest,
                     rank_vertices, generator_sequence, k_subgraphs)

__version__ = '0.1.0'
