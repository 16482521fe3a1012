from __future__ import absolute_import
from collections import Counter
from itertools import combinations
from math import comb
import logging

import pandas as pd

from .forest import generator_sequence, rank_vertices
from .symbols import (EnumerationCapError, block_decomposition,
                      enumerate_F_admissible_procedure, format_symbol)

logger = logging.getLogger(__name__)


class GradedBettiTable(object):
    '''
    Graded Betti numbers `(r, d) -> beta_{r,d}` of `R/I`.
    '''
    def __init__(self, entries=None):
        self.entries = dict((k, v) for k, v in (entries or {}).items() if v)

    @property
    def pd(self):
        return max([r for r, d in self.entries] or [0])

    def __getitem__(self, key):
        return self.entries.get(key, 0)

    def __eq__(self, other):
        return (isinstance(other, GradedBettiTable) and
                self.entries == other.entries)

    def __ne__(self, other):
        return not self == other

    def __repr__(self):
        return 'GradedBettiTable(%r)' % sorted(self.entries.items())

    def __add__(self, other):
        entries = Counter(self.entries)
        entries.update(other.entries)
        return GradedBettiTable(entries)

    def shift(self, degree, internal_degree, factor=1):
        return GradedBettiTable(dict(((r + degree, d + internal_degree),
                                      factor * v)
                                     for (r, d), v in self.entries.items()))

    def convolve(self, other):
        '''
        Return the table of the tensor product of the two resolutions.
        '''
        entries = Counter()
        for (r1, d1), v1 in self.entries.items():
            for (r2, d2), v2 in other.entries.items():
                entries[(r1 + r2, d1 + d2)] += v1 * v2
        return GradedBettiTable(entries)

    def to_frame(self):
        '''
        Return a long-form frame with columns `degree`, `internal_degree`
        and `value`.
        '''
        records = [(r, d, v) for (r, d), v in sorted(self.entries.items())]
        return pd.DataFrame(records, columns=['degree', 'internal_degree',
                                              'value'])

    def to_grid(self):
        '''
        Return the Macaulay layout: rows `d - r`, columns `r`.
        '''
        frame = self.to_frame()
        frame['row'] = frame['internal_degree'] - frame['degree']
        grid = frame.pivot(index='row', columns='degree', values='value')
        rows = range(int(frame['row'].max()) + 1 if len(frame) else 1)
        return (grid.reindex(index=rows, columns=range(self.pd + 1))
                .fillna(0).astype(int))

    def to_text(self):
        grid = self.to_grid()
        display = grid.astype(object).where(grid != 0, '.')
        display.index = ['%d:' % j for j in grid.index]
        total = pd.DataFrame([grid.sum(axis=0).tolist()],
                             index=['total:'], columns=grid.columns)
        return pd.concat([total, display]).to_string()

    def to_json(self):
        return [{'degree': r, 'internal_degree': d, 'value': v}
                for (r, d), v in sorted(self.entries.items())]


class MultigradedBettiTable(object):
    '''
    Multigraded Betti numbers `(r, multidegree) -> beta_{r,a}`; a
    multidegree is a frozenset of vertices.
    '''
    def __init__(self, entries=None, order=None):
        self.entries = dict((k, v) for k, v in (entries or {}).items() if v)
        self.order = tuple(order) if order is not None else None

    def __getitem__(self, key):
        r, multidegree = key
        return self.entries.get((r, frozenset(multidegree)), 0)

    def __eq__(self, other):
        return (isinstance(other, MultigradedBettiTable) and
                self.entries == other.entries)

    def __ne__(self, other):
        return not self == other

    def __repr__(self):
        return 'MultigradedBettiTable(%d entries)' % len(self.entries)

    @property
    def pd(self):
        return max([r for r, a in self.entries] or [0])

    def sort_vertices(self, multidegree):
        if self.order is not None:
            position = dict((v, i) for i, v in enumerate(self.order))
            return sorted(multidegree,
                          key=lambda v: (position.get(v, len(position)),
                                         str(v)))
        return sorted(multidegree, key=str)

    def sorted_items(self):
        return sorted(self.entries.items(),
                      key=lambda item: (item[0][0], len(item[0][1]),
                                        [str(v) for v in
                                         self.sort_vertices(item[0][1])]))

    def graded(self):
        entries = Counter()
        for (r, multidegree), v in self.entries.items():
            entries[(r, len(multidegree))] += v
        return GradedBettiTable(entries)

    def convolve(self, other):
        '''
        Return the table of the tensor product, for tables on disjoint
        vertex sets.
        '''
        entries = Counter()
        for (r1, a1), v1 in self.entries.items():
            for (r2, a2), v2 in other.entries.items():
                if a1 & a2:
                    raise ValueError('Multidegrees %s and %s overlap' %
                                     (sorted(a1), sorted(a2)))
                entries[(r1 + r2, a1 | a2)] += v1 * v2
        order = None
        if self.order is not None and other.order is not None:
            order = self.order + other.order
        return MultigradedBettiTable(entries, order=order)

    def to_json(self):
        return [{'degree': r, 'multidegree': [str(v) for v in
                                              self.sort_vertices(a)],
                 'value': v} for (r, a), v in self.sorted_items()]


def tables_to_json(multigraded, graded=None):
    if graded is None:
        graded = multigraded.graded()
    return {'graded': graded.to_json(),
            'multigraded': multigraded.to_json(), 'pd': graded.pd}


def betti_from_symbols(symbols, order=None):
    '''
    Return `(MultigradedBettiTable, GradedBettiTable)` counting one free
    generator per F-admissible symbol (the empty symbol included).
    '''
    entries = {}
    for u in symbols:
        key = (len(u), u.multidegree)
        if key in entries:
            logger.error('Duplicate multidegree %s in length %d',
                         sorted(u.multidegree), len(u))
            raise RuntimeError('Two F-admissible symbols of length %d share '
                               'the multidegree %s' %
                               (len(u), sorted(u.multidegree)))
        entries[key] = 1
    multigraded = MultigradedBettiTable(entries, order=order)
    return multigraded, multigraded.graded()


def pd_bouquet_formula(u, s, basis=None):
    '''
    Return `#{leaves of T in the blocks of u} + #{blocks not in u}` for a
    maximal F-admissible symbol `u`.

    Leaves in the blocks are members whose vertex other than the block
    index is a leaf.  Blocks not in `u` are counted as the non-leaf
    vertices inside `lcm(u)` that are not block indices, which is the
    count used when proving the projective dimension bound.  With that
    count the value equals `|u|` for every F-admissible symbol.  Counting
    instead every K-subgraph outside the blocks of `u` (including those
    indexed outside `lcm(u)`) disagrees with `|u|` on some maximal symbols.
    '''
    if basis is None:
        basis = enumerate_F_admissible_procedure(s.ranking, s)
    members = set(u.members)
    if any(members < set(v.members) for v in basis):
        raise ValueError('%s is not a maximal F-admissible symbol' %
                         format_symbol(u, s))
    forest = s.forest
    decomposition = block_decomposition(u, s)
    indices = set(block.index for block in decomposition.blocks)
    leaves = sum(1 for block in decomposition.blocks
                 for e in block.members
                 if forest.is_leaf(e.other(block.index)))
    outside = sum(1 for v in u.multidegree
                  if v not in indices and forest.degree(v) >= 2)
    return leaves + outside


def maximal_symbols(basis):
    '''
    Return the symbols of `basis` not strictly contained in another one.
    '''
    sets = [(u, set(u.members)) for u in basis]
    return [u for u, members in sets
            if not any(members < other for v, other in sets)]


def betti_by_induced_subgraphs(forest, cap=16):
    '''
    Return the graded table counting, for every `(i, j)`, the vertex sets
    `W` whose induced subforest has an F-admissible symbol of length `i`
    made of `j` blocks with lcm exactly `W`.
    '''
    vertices = forest.non_isolated
    if len(vertices) > cap:
        raise EnumerationCapError('induced subgraph scan', len(vertices),
                                  cap)
    entries = Counter({(0, 0): 1})
    for size in range(2, len(vertices) + 1):
        for subset in combinations(vertices, size):
            subforest = forest.subforest(subset)
            if any(not subforest.adjacency[v] for v in subset):
                continue
            ranking = rank_vertices(subforest)
            s = generator_sequence(ranking)
            support = frozenset(subset)
            for u in enumerate_F_admissible_procedure(ranking, s):
                if u.multidegree != support:
                    continue
                i = len(u)
                j = len(block_decomposition(u, s).blocks)
                if i + j != size:
                    raise RuntimeError('Symbol %s of length %d with %d '
                                       'blocks spans %d vertices' %
                                       (format_symbol(u, s), i, j, size))
                entries[(i, i + j)] += 1
    return GradedBettiTable(entries)


_JACQUES_BETTI = {}
_JACQUES_PD = {}


def _jacques_step(tree, order):
    '''
    Return `(v_1, n, T', T'')` for the first vertex `v` (in `order`) with a
    leaf neighbour and at most one non-leaf neighbour.
    '''
    position = dict((v, i) for i, v in enumerate(order))
    for v in sorted(tree.non_isolated, key=position.get):
        neighbours = sorted(tree.adjacency[v], key=position.get)
        leaves = [w for w in neighbours if tree.is_leaf(w)]
        if leaves and len(neighbours) - len(leaves) <= 1:
            n = len(neighbours)
            return (leaves[0], n, tree.remove_vertices([leaves[0]]),
                    tree.remove_vertices([v] + neighbours))
    raise RuntimeError('No pruning vertex in %r' % tree)


def _trees(forest):
    return [forest.subforest(c) for c in forest.components() if len(c) > 1]


def jacques_betti(forest, order=None):
    '''
    Return the graded table of `R/I(forest)` by the recursion

        beta(T) = beta(T') + sum_j C(n - 1, j) beta(T'')[r - j - 1, d - j - 2]

    applied per component; components combine by convolution.
    '''
    if order is None:
        order = rank_vertices(forest).variable_order
    table = GradedBettiTable({(0, 0): 1})
    for tree in _trees(forest):
        key = tree.edges
        if key not in _JACQUES_BETTI:
            v1, n, pruned, remainder = _jacques_step(tree, order)
            value = jacques_betti(pruned, order)
            rest = jacques_betti(remainder, order)
            for j in range(n):
                value = value + rest.shift(j + 1, j + 2, comb(n - 1, j))
            _JACQUES_BETTI[key] = value
        table = table.convolve(_JACQUES_BETTI[key])
    return table


def jacques_pd(forest, order=None):
    '''
    Return `pd(R/I(forest))` from `pd(T) = max(pd(T'), pd(T'') + n)`; the
    value of a disjoint union is the sum over its components.
    '''
    if order is None:
        order = rank_vertices(forest).variable_order
    total = 0
    for tree in _trees(forest):
        key = tree.edges
        if key not in _JACQUES_PD:
            v1, n, pruned, remainder = _jacques_step(tree, order)
            _JACQUES_PD[key] = max(jacques_pd(pruned, order),
                                   jacques_pd(remainder, order) + n)
        total += _JACQUES_PD[key]
    return total


def component_tables(forest):
    '''
    Return the multigraded tables of the components with edges, each
    computed from its own ranking.
    '''
    tables = []
    for tree in _trees(forest):
        ranking = rank_vertices(tree)
        s = generator_sequence(ranking)
        multigraded, graded = betti_from_symbols(
            enumerate_F_admissible_procedure(ranking, s),
            order=ranking.variable_order)
        tables.append(multigraded)
    return tables
