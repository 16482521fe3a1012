'''
Acyclic matching on symbols, gradient paths and the differentials of the
minimal resolution.

Differential entries are formal sums stored as `{exponent: multiplicity}`
where `exponent` is a frozenset of vertices (the squarefree monomial).
'''
from __future__ import absolute_import
from collections import defaultdict, namedtuple
from copy import deepcopy
import logging

from sympy import Add, Mul, Symbol as SympySymbol, ZZ
from sympy.polys.matrices import DomainMatrix
import networkx as nx

from .symbols import (F_ADMISSIBLE, TYPE1, TYPE2, EnumerationCapError,
                      SymbolClassError, diagnose, format_symbol, make_symbol,
                      sort_symbols, subsymbols, symbol_to_json)

logger = logging.getLogger(__name__)

KIND_DELETION = 'a'
KIND_INSERTION = 'b'


class MorseRegionError(ValueError):
    pass


class SignedMonomial(namedtuple('SignedMonomial', 'sign exponent')):
    def __mul__(self, other):
        return SignedMonomial(self.sign * other.sign,
                              self.exponent | other.exponent)

    def __neg__(self):
        return SignedMonomial(-self.sign, self.exponent)

    @property
    def is_unit(self):
        return not self.exponent


UNIT = SignedMonomial(1, frozenset())


def taylor_coefficient(u, u_prime):
    '''
    Return `[u:u']`, the coefficient of the face `u'` in the Taylor
    boundary of `u`: `(-1)^(j+1) lcm(u) / lcm(u')` where `j` is the
    1-based position of the omitted member.
    '''
    if len(u) != len(u_prime) + 1 or not set(u_prime.members) < \
            set(u.members):
        raise ValueError('%s is not a codimension-1 face of %s' %
                         (u_prime.members, u.members))
    omitted = (set(u.members) - set(u_prime.members)).pop()
    j = u.members.index(omitted) + 1
    return SignedMonomial(1 if j % 2 else -1,
                          u.multidegree - u_prime.multidegree)


def faces(u, s):
    '''
    Yield `(u', [u:u'])` for the codimension-1 faces of `u`.
    '''
    for j in range(len(u)):
        face = make_symbol(s, u.members[:j] + u.members[j + 1:])
        yield face, taylor_coefficient(u, face)


def induced_edges(u, s):
    '''
    Return the positions of the generators whose edges lie inside the
    support of `u`.
    '''
    support = u.multidegree
    return [p for p in range(len(s))
            if all(v in support for v in s[p].vertices)]


def morse_region(u, s, cap=None):
    '''
    Return every symbol built from edges induced on the support of `u`.

    Raises `EnumerationCapError` when more than `cap` edges are induced.
    '''
    edges = induced_edges(u, s)
    if cap is not None and len(edges) > cap:
        raise EnumerationCapError('Morse region of %s' % format_symbol(u, s),
                                  len(edges), cap)
    return list(subsymbols(make_symbol(s, edges), s))


class MorseGraph(object):
    '''
    Directed cell graph with matched edges reversed.

    Edges carry `kind` (`'a'` for a deletion outside the matching, `'b'`
    for a reversed bridge insertion) and `weight` (a `SignedMonomial`).
    '''
    def __init__(self, s, graph, diagnoses, partners):
        self.s = s
        self.graph = graph
        self.diagnoses = diagnoses
        self.partners = partners
        self._flows = {}

    @property
    def cells(self):
        return list(self.graph.nodes())

    def symbol_class(self, cell):
        return self.diagnoses[cell].symbol_class

    def critical_cells(self, length=None):
        return sort_symbols(c for c, d in self.diagnoses.items()
                            if d.symbol_class == F_ADMISSIBLE and
                            (length is None or len(c) == length))

    def matched_edges(self):
        return [(a, b) for a, b, kind in self.graph.edges(data='kind')
                if kind == KIND_INSERTION]

    def __contains__(self, cell):
        return cell in self.graph

    def __len__(self):
        return self.graph.number_of_nodes()


def build_morse_graph(region, s):
    '''
    Return the `MorseGraph` on a region closed under faces and matching
    partners.
    '''
    cells = set(region)
    graph = nx.DiGraph()
    graph.add_nodes_from(sort_symbols(cells))
    diagnoses = {}
    partners = {}
    for cell in cells:
        diagnosis = diagnose(cell, s)
        diagnoses[cell] = diagnosis
        if diagnosis.symbol_class == TYPE1:
            partner = make_symbol(s, cell.members +
                                  (diagnosis.gaps[-1].bridge_position, ))
        elif diagnosis.symbol_class == TYPE2:
            bridge = diagnosis.bridges[-1]
            partner = make_symbol(s, [p for p in cell.members
                                      if p != bridge])
        else:
            continue
        if partner not in cells:
            raise MorseRegionError('Matching partner %s of %s is outside '
                                   'the region' %
                                   (format_symbol(partner, s),
                                    format_symbol(cell, s)))
        partners[cell] = partner

    for cell in cells:
        matched_face = (partners[cell] if diagnoses[cell].symbol_class ==
                        TYPE2 else None)
        for face, coefficient in faces(cell, s):
            if face not in cells:
                raise MorseRegionError('Face %s of %s is outside the region'
                                       % (format_symbol(face, s),
                                          format_symbol(cell, s)))
            if face == matched_face:
                graph.add_edge(face, cell, kind=KIND_INSERTION,
                               weight=-coefficient)
            else:
                graph.add_edge(cell, face, kind=KIND_DELETION,
                               weight=coefficient)
    return MorseGraph(s, graph, diagnoses, partners)


def column_graph(u, s, cap=None):
    return build_morse_graph(morse_region(u, s, cap), s)


def verify_acyclic(g):
    graph = g.graph if isinstance(g, MorseGraph) else g
    return nx.is_directed_acyclic_graph(graph)


def check_matching(g):
    '''
    Return a list of problems with the matching of `g`: partners must be
    mutual, differ by one member and share their multidegree.
    '''
    problems = []
    s = g.s
    for cell, partner in g.partners.items():
        if g.partners.get(partner) != cell:
            problems.append('%s -> %s is not an involution' %
                            (format_symbol(cell, s),
                             format_symbol(partner, s)))
        if abs(len(cell) - len(partner)) != 1 or \
                len(set(cell.members) ^ set(partner.members)) != 1:
            problems.append('%s and %s differ by more than one member' %
                            (format_symbol(cell, s),
                             format_symbol(partner, s)))
        if cell.multidegree != partner.multidegree:
            problems.append('%s and %s have different multidegrees' %
                            (format_symbol(cell, s),
                             format_symbol(partner, s)))
        classes = set([g.symbol_class(cell), g.symbol_class(partner)])
        if classes != set([TYPE1, TYPE2]):
            problems.append('%s and %s are not a TYPE1/TYPE2 pair' %
                            (format_symbol(cell, s),
                             format_symbol(partner, s)))
    return problems


def _add_entry(total, exponent, multiplicity):
    total[exponent] = total.get(exponent, 0) + multiplicity
    if not total[exponent]:
        del total[exponent]


def gradient_sum(u_prime, g, targets=None):
    '''
    Return `{u'': {exponent: multiplicity}}`, the sum of `m(P)` over all
    gradient paths from `u_prime` to the critical cells `u''` of the same
    length.

    Paths alternate between the length of `u_prime` and one above it: a
    type 1 cell climbs its matched edge, the type 2 cell reached descends
    along its unmatched faces, type 2 cells of the lower length are dead
    ends and critical cells end the path.
    '''
    if u_prime not in g:
        raise MorseRegionError('Cell %s is not in the Morse graph' %
                               format_symbol(u_prime, g.s))
    in_progress = set()

    def flow(cell):
        if cell in g._flows:
            return g._flows[cell]
        if cell in in_progress:
            raise RuntimeError('Gradient path revisits %s' %
                               format_symbol(cell, g.s))
        in_progress.add(cell)
        symbol_class = g.symbol_class(cell)
        result = {}
        if symbol_class == F_ADMISSIBLE:
            result[cell] = {frozenset(): 1}
        elif symbol_class == TYPE1:
            upper = g.partners[cell]
            climb = g.graph[cell][upper]['weight']
            for face, data in g.graph[upper].items():
                if data['kind'] != KIND_DELETION or len(face) != len(cell):
                    continue
                step = climb * data['weight']
                for target, entry in flow(face).items():
                    total = result.setdefault(target, {})
                    for exponent, multiplicity in entry.items():
                        _add_entry(total, exponent | step.exponent,
                                   step.sign * multiplicity)
            result = dict((t, e) for t, e in result.items() if e)
        in_progress.discard(cell)
        g._flows[cell] = result
        return result

    result = flow(u_prime)
    if targets is not None:
        targets = set(targets)
        result = dict((t, e) for t, e in result.items() if t in targets)
    return result


def differential(u, s, g=None, cap=None):
    '''
    Return `d(u)` as `{u'': {exponent: multiplicity}}` over the critical
    cells of length `|u| - 1`.

    The monomial factors along each path telescope, so every exponent of
    the entry at `u''` is `gr(u) - gr(u'')`.
    '''
    if g is None:
        g = column_graph(u, s, cap)
    if g.symbol_class(u) != F_ADMISSIBLE:
        raise SymbolClassError('%s is not F-admissible' %
                               format_symbol(u, s))
    column = {}
    for face, coefficient in faces(u, s):
        for target, entry in gradient_sum(face, g).items():
            total = column.setdefault(target, {})
            for exponent, multiplicity in entry.items():
                _add_entry(total, exponent | coefficient.exponent,
                           coefficient.sign * multiplicity)
    column = dict((t, e) for t, e in column.items() if e)
    for target, entry in column.items():
        for exponent, multiplicity in entry.items():
            if exponent != u.multidegree - target.multidegree:
                raise RuntimeError('Entry of %s at %s has exponent %s' %
                                   (format_symbol(u, s),
                                    format_symbol(target, s),
                                    sorted(exponent)))
            if abs(multiplicity) >= 2:
                logger.warning('Differential entry of %s at %s has '
                               'multiplicity %d', format_symbol(u, s),
                               format_symbol(target, s), multiplicity)
    return column


class DifferentialMatrix(object):
    '''
    Sparse matrix of `d_r`: rows are the basis of length `r - 1`, columns
    the basis of length `r`.
    '''
    def __init__(self, degree, rows, cols, entries):
        self.degree = degree
        self.rows = list(rows)
        self.cols = list(cols)
        self.entries = entries

    @property
    def shape(self):
        return (len(self.rows), len(self.cols))

    def entry(self, row, col):
        return self.entries.get((self.rows.index(row),
                                 self.cols.index(col)), {})

    def column(self, col):
        j = self.cols.index(col)
        return dict((self.rows[i], e) for (i, k), e in self.entries.items()
                    if k == j)


class ChainComplex(object):
    '''
    Free modules (bases by homological degree, starting with the unit
    module spanned by the empty symbol) and differential matrices
    `d_1, ..., d_pd`.
    '''
    def __init__(self, s, bases, matrices, name='minimal'):
        self.s = s
        self.bases = bases
        self.matrices = matrices
        self.name = name

    @property
    def pd(self):
        return max([r for r, basis in self.bases.items() if basis] or [0])

    def ranks(self):
        return [len(self.bases.get(r, [])) for r in range(self.pd + 1)]

    def _monomial_labels(self, exponent):
        position = self.s.ranking.position
        return [str(v) for v in sorted(exponent, key=position.get)]

    def to_json(self):
        s = self.s
        generators = {}
        for r in sorted(self.bases):
            generators[str(r)] = [
                {'symbol': symbol_to_json(u, s),
                 'multidegree': self._monomial_labels(u.multidegree)}
                for u in self.bases[r]]
        matrices = {}
        for r in sorted(self.matrices):
            matrix = self.matrices[r]
            matrices[str(r)] = {
                'shape': list(matrix.shape),
                'entries': [{'row': i, 'col': j,
                             'entry': [{'coefficient': m,
                                        'monomial':
                                        self._monomial_labels(e)}
                                       for e, m in sorted(
                                           entry.items(),
                                           key=lambda x: sorted(x[0]))]}
                            for (i, j), entry in
                            sorted(matrix.entries.items())]}
        return {'complex': self.name, 'ranks': self.ranks(),
                'generators': generators, 'matrices': matrices}

    def format_entry(self, entry):
        terms = []
        for exponent, multiplicity in sorted(entry.items(),
                                             key=lambda x: sorted(x[0])):
            monomial = '*'.join('x%s' % v
                                for v in self._monomial_labels(exponent))
            monomial = monomial or '1'
            if multiplicity == 1:
                terms.append('+%s' % monomial)
            elif multiplicity == -1:
                terms.append('-%s' % monomial)
            else:
                terms.append('%+d*%s' % (multiplicity, monomial))
        return ' '.join(terms) or '0'

    def dump(self):
        '''
        Return a human readable listing of every nonzero matrix entry.
        '''
        s = self.s
        lines = []
        for r in sorted(self.matrices):
            matrix = self.matrices[r]
            lines.append('d_%d: %d x %d' % ((r, ) + matrix.shape))
            for (i, j), entry in sorted(matrix.entries.items()):
                lines.append('  %s -> %s: %s' %
                             (format_symbol(matrix.cols[j], s),
                              format_symbol(matrix.rows[i], s),
                              self.format_entry(entry)))
        return '\n'.join(lines)


def bases_by_length(symbols):
    bases = defaultdict(list)
    for u in sort_symbols(symbols):
        bases[len(u)].append(u)
    return dict(bases)


def assemble_complex(ranking, s=None, symbols=None, graphs=None, cap=None):
    '''
    Return the minimal `ChainComplex` whose bases are the F-admissible
    symbols.

    `graphs`, if given, is filled with the Morse graph of every column.
    With `cap` set, no column may induce more than `cap` edges; this is
    checked for every column before any Morse graph is built.
    '''
    from .forest import generator_sequence
    from .symbols import enumerate_F_admissible_procedure

    if s is None:
        s = generator_sequence(ranking)
    if symbols is None:
        symbols = enumerate_F_admissible_procedure(ranking, s, cap)
    if cap is not None and symbols:
        widest = max(symbols, key=lambda u: len(induced_edges(u, s)))
        size = len(induced_edges(widest, s))
        if size > cap:
            raise EnumerationCapError('Morse region of %s' %
                                      format_symbol(widest, s), size, cap)
    bases = bases_by_length(symbols)
    bases.setdefault(0, [make_symbol(s, [])])
    pd = max(bases)
    matrices = {}
    for r in range(1, pd + 1):
        rows = bases.get(r - 1, [])
        cols = bases.get(r, [])
        row_index = dict((u, i) for i, u in enumerate(rows))
        entries = {}
        for j, u in enumerate(cols):
            g = column_graph(u, s, cap)
            if not verify_acyclic(g):
                logger.error('Morse graph of %s has a directed cycle',
                             format_symbol(u, s))
                raise RuntimeError('Cyclic Morse graph for %s' %
                                   format_symbol(u, s))
            if graphs is not None:
                graphs[u] = g
            for target, entry in differential(u, s, g).items():
                entries[(row_index[target], j)] = entry
        matrices[r] = DifferentialMatrix(r, rows, cols, entries)
    logger.info('assembled complex with ranks %s',
                [len(bases.get(r, [])) for r in range(pd + 1)])
    return ChainComplex(s, bases, matrices)


def _polynomial_matrix(matrix, ring, gens):
    rows = []
    for i in range(len(matrix.rows)):
        row = []
        for j in range(len(matrix.cols)):
            entry = matrix.entries.get((i, j), {})
            expression = Add(*[multiplicity *
                               Mul(*[gens[v] for v in exponent])
                               for exponent, multiplicity in entry.items()])
            row.append(ring.from_sympy(expression))
        rows.append(row)
    return DomainMatrix(rows, matrix.shape, ring)


def verify_d2_zero(c):
    '''
    Return `True` if every product of consecutive differentials vanishes
    identically over the integer polynomial ring.
    '''
    vertices = c.s.ranking.variable_order
    gens = dict((v, SympySymbol('x%d' % i)) for i, v in enumerate(vertices))
    ring = ZZ.poly_ring(*[gens[v] for v in vertices])
    for r in sorted(c.matrices):
        if r - 1 not in c.matrices:
            continue
        lower = c.matrices[r - 1]
        upper = c.matrices[r]
        if 0 in lower.shape or 0 in upper.shape:
            continue
        product = _polynomial_matrix(lower, ring, gens).matmul(
            _polynomial_matrix(upper, ring, gens))
        if not product.to_Matrix().is_zero_matrix:
            logger.info('d_%d * d_%d is not zero', r - 1, r)
            return False
    return True


def verify_minimal(c):
    '''
    Return `True` if no differential entry has a nonzero constant term.
    '''
    for matrix in c.matrices.values():
        for entry in matrix.entries.values():
            if entry.get(frozenset(), 0):
                return False
    return True


def corrupt_complex(c):
    '''
    Return a copy of `c` whose first entry in the top differential is
    replaced by the unit, for exercising the checkers.
    '''
    corrupted = ChainComplex(c.s, deepcopy(c.bases), deepcopy(c.matrices),
                             name='%s (corrupted)' % c.name)
    for r in sorted(corrupted.matrices, reverse=True):
        matrix = corrupted.matrices[r]
        if matrix.entries:
            key = sorted(matrix.entries)[0]
            matrix.entries[key] = {frozenset(): 1}
            break
    return corrupted
