'''
Independent Betti numbers: the homology of each multidegree strand of the
Taylor or Lyubeznik complex tensored with `GF(p)`.
'''
from __future__ import absolute_import
from collections import defaultdict
from itertools import combinations
import logging

from sympy import GF, Matrix
from sympy.polys.matrices import DomainMatrix

from .betti import MultigradedBettiTable
from .morse import ChainComplex, DifferentialMatrix, bases_by_length, faces
from .symbols import (EnumerationCapError, is_L_admissible, make_symbol,
                      sort_symbols)

logger = logging.getLogger(__name__)

DEFAULT_PRIMES = (32003, 101)


def taylor_basis(s, cap=20):
    '''
    Return every symbol (every subset of the generator sequence).
    '''
    if len(s) > cap:
        raise EnumerationCapError('Taylor basis', len(s), cap)
    return [make_symbol(s, members) for r in range(len(s) + 1)
            for members in combinations(range(len(s)), r)]


def lyubeznik_basis(s, cap=20):
    '''
    Return the symbols satisfying Lyubeznik's condition against the whole
    generator sequence, graded by length.
    '''
    return [u for u in taylor_basis(s, cap)
            if is_L_admissible(u, s, scope='sequence')]


def rank_mod_p(rows, n_cols, p):
    '''
    Return the rank over `GF(p)` of an integer matrix given as a list of
    rows.
    '''
    if not rows or not n_cols:
        return 0
    return DomainMatrix.from_Matrix(Matrix(rows)).convert_to(GF(p)).rank()


class StrandComplex(object):
    '''
    Multidegree `a` part of a Taylor-type complex tensored with the field:
    only boundary terms that keep the multidegree survive, with sign
    `(-1)^(j+1)`.
    '''
    def __init__(self, multidegree, bases, boundaries):
        self.multidegree = multidegree
        self.bases = bases
        self.boundaries = boundaries

    def rank(self, i, p):
        rows = self.boundaries.get(i)
        if rows is None:
            return 0
        return rank_mod_p(rows, len(self.bases.get(i, [])), p)

    def betti(self, p):
        return dict((i, len(basis) - self.rank(i, p) - self.rank(i + 1, p))
                    for i, basis in self.bases.items())

    def boundary_squares_to_zero(self, p):
        for i in self.boundaries:
            if i - 1 not in self.boundaries:
                continue
            product = (Matrix(self.boundaries[i - 1]) *
                       Matrix(self.boundaries[i]))
            if any(value % p for value in product):
                return False
        return True


def strand_complex(symbols, s, multidegree):
    '''
    Return the `StrandComplex` of the basis `symbols` (all of them with
    the given multidegree).
    '''
    bases = defaultdict(list)
    for u in sort_symbols(symbols):
        bases[len(u)].append(u)
    bases = dict(bases)
    boundaries = {}
    for i, cols in bases.items():
        rows = bases.get(i - 1, [])
        if not rows:
            continue
        row_index = dict((u, k) for k, u in enumerate(rows))
        matrix = [[0] * len(cols) for _ in rows]
        for j, u in enumerate(cols):
            for face, coefficient in faces(u, s):
                if face.multidegree == multidegree and face in row_index:
                    matrix[row_index[face]][j] = coefficient.sign
        boundaries[i] = matrix
    return StrandComplex(multidegree, bases, boundaries)


def strands(basis, s):
    by_multidegree = defaultdict(list)
    for u in basis:
        by_multidegree[u.multidegree].append(u)
    return [strand_complex(symbols, s, multidegree)
            for multidegree, symbols in by_multidegree.items()]


def betti_via_homology(basis, s, p=DEFAULT_PRIMES[0]):
    '''
    Return the `MultigradedBettiTable` with `beta_{i,a} = dim H_i` of the
    strand at every multidegree `a` realized by `basis`.
    '''
    entries = {}
    for strand in strands(basis, s):
        for i, value in strand.betti(p).items():
            if value < 0:
                raise RuntimeError('Negative homology rank at %s' %
                                   sorted(strand.multidegree))
            if value:
                entries[(i, strand.multidegree)] = value
    return MultigradedBettiTable(entries, order=s.ranking.variable_order)


def _diff_key(key):
    r, degree = key
    if isinstance(degree, frozenset):
        return (r, len(degree), sorted(map(str, degree)))
    return (r, degree, [])


def compare_tables(t1, t2, names=('left', 'right')):
    '''
    Return a list of `{degree, multidegree, <names>}` differences between
    two multigraded (or graded) tables; the list is empty iff they agree.
    '''
    left, right = names
    diffs = []
    for key in sorted(set(t1.entries) | set(t2.entries), key=_diff_key):
        v1 = t1.entries.get(key, 0)
        v2 = t2.entries.get(key, 0)
        if v1 == v2:
            continue
        r, degree = key
        diff = {'degree': r, left: v1, right: v2}
        if isinstance(degree, frozenset):
            diff['multidegree'] = sorted(map(str, degree))
        else:
            diff['internal_degree'] = degree
        diffs.append(diff)
    return diffs


def _boundary_complex(basis, s, name):
    bases = bases_by_length(basis)
    matrices = {}
    for r in range(1, max(bases) + 1):
        rows = bases.get(r - 1, [])
        cols = bases.get(r, [])
        row_index = dict((u, i) for i, u in enumerate(rows))
        entries = {}
        for j, u in enumerate(cols):
            for face, coefficient in faces(u, s):
                if face in row_index:
                    entries[(row_index[face], j)] = {
                        coefficient.exponent: coefficient.sign}
        matrices[r] = DifferentialMatrix(r, rows, cols, entries)
    return ChainComplex(s, bases, matrices, name=name)


def taylor_complex(s, cap=20):
    '''
    Return the Taylor resolution as a `ChainComplex` (exact, generally not
    minimal).
    '''
    return _boundary_complex(taylor_basis(s, cap), s, 'taylor')


def lyubeznik_complex(s, cap=20):
    return _boundary_complex(lyubeznik_basis(s, cap), s, 'lyubeznik')
