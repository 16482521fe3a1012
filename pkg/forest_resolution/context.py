from __future__ import absolute_import
import logging

from path_helpers import path

from .betti import betti_from_symbols, maximal_symbols, pd_bouquet_formula
from .forest import (generator_sequence, k_subgraphs, parse_forest,
                     rank_vertices)
from .morse import assemble_complex, column_graph
from .symbols import (diagnose, enumerate_F_admissible_filter,
                      enumerate_F_admissible_procedure, parse_symbol)

logger = logging.getLogger(__name__)


class ForestContext(object):
    '''
    A forest together with its ranking and the objects derived from it,
    each computed on first use.
    '''
    def __init__(self, forest, roots=None, cap=20):
        self.forest = forest
        self.cap = cap
        self.ranking = rank_vertices(forest, roots)
        self.sequence = generator_sequence(self.ranking)
        self._symbols = None
        self._complex = None
        self._graphs = {}
        self._diagnoses = {}

    @property
    def roots(self):
        return self.ranking.roots

    def k_subgraphs(self):
        return k_subgraphs(self.ranking, self.sequence)

    @property
    def symbols(self):
        '''
        F-admissible symbols from the selection procedure.
        '''
        if self._symbols is None:
            self._symbols = enumerate_F_admissible_procedure(
                self.ranking, self.sequence, self.cap)
        return self._symbols

    def symbols_by_filter(self):
        return enumerate_F_admissible_filter(self.sequence, self.cap)

    def parse_symbol(self, tokens):
        return parse_symbol(self.sequence, tokens)

    def diagnose(self, u):
        if u not in self._diagnoses:
            self._diagnoses[u] = diagnose(u, self.sequence)
        return self._diagnoses[u]

    def graph(self, u):
        '''
        Morse graph on the region of column `u`.
        '''
        if u not in self._graphs:
            self._graphs[u] = column_graph(u, self.sequence, self.cap)
        return self._graphs[u]

    @property
    def complex(self):
        if self._complex is None:
            self._complex = assemble_complex(self.ranking, self.sequence,
                                             self.symbols,
                                             graphs=self._graphs,
                                             cap=self.cap)
        return self._complex

    def betti(self):
        '''
        Return `(MultigradedBettiTable, GradedBettiTable)`.
        '''
        return betti_from_symbols(self.symbols,
                                  order=self.ranking.variable_order)

    @property
    def pd(self):
        return max(len(u) for u in self.symbols)

    def maximal_symbols(self):
        return maximal_symbols(self.symbols)

    def bouquet_values(self):
        '''
        Return `[(u, formula value)]` for every maximal F-admissible
        symbol.
        '''
        return [(u, pd_bouquet_formula(u, self.sequence, self.symbols))
                for u in self.maximal_symbols()]


def load_context(forest_path, roots=None, cap=20):
    '''
    Return a `ForestContext` for the edge-list file at `forest_path`.
    '''
    forest_path = path(forest_path).expand()
    if not forest_path.isfile():
        raise IOError('No forest file at `%s`' % forest_path)
    forest = parse_forest(forest_path.text(encoding='utf8'))
    logger.info('Loaded %r from %s', forest, forest_path)
    return ForestContext(forest, roots=roots, cap=cap)
