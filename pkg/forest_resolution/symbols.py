'''
Symbols (ordered subsets of the generator sequence), their classification
and the two enumerations of the F-admissible basis.

Symbols store positions into the `GeneratorSequence`; a smaller position
is a larger monomial.
'''
from __future__ import absolute_import
from collections import Counter, namedtuple
from itertools import combinations
import json
import logging

from .forest import generator_sequence, k_subgraphs

logger = logging.getLogger(__name__)

F_ADMISSIBLE = 'F_ADMISSIBLE'
TYPE1 = 'TYPE1'
TYPE2 = 'TYPE2'
SYMBOL_CLASSES = (F_ADMISSIBLE, TYPE1, TYPE2)

L_SCOPES = ('symbol', 'sequence')


class EnumerationCapError(ValueError):
    def __init__(self, what, size, cap):
        self.size = size
        self.cap = cap
        super(EnumerationCapError, self).__init__(
            '%s: size %d exceeds the enumeration cap %d' % (what, size, cap))


class SymbolClassError(ValueError):
    pass


class Symbol(namedtuple('Symbol', 'members multidegree')):
    '''
    Strictly increasing tuple of generator positions together with the
    support (vertex set) of its lcm.
    '''
    @property
    def length(self):
        return len(self.members)

    def __len__(self):
        return len(self.members)

    def __contains__(self, position):
        return position in self.members

    def sort_key(self):
        return (len(self.members), self.members)


Gap = namedtuple('Gap', 'upper lower bridge bridge_position')
Diagnosis = namedtuple('Diagnosis', 'symbol_class gaps bridges')
Block = namedtuple('Block', 'index members')
BlockDecomposition = namedtuple('BlockDecomposition', 'blocks')


def make_symbol(s, positions):
    '''
    Return the `Symbol` on the given generator positions.
    '''
    members = tuple(sorted(positions))
    if len(set(members)) != len(members):
        raise ValueError('Repeated generator in symbol %s' % (members, ))
    if members and (members[0] < 0 or members[-1] >= len(s)):
        raise ValueError('Generator position out of range in %s' %
                         (members, ))
    multidegree = frozenset(v for p in members for v in s[p].vertices)
    return Symbol(members, multidegree)


def parse_symbol(s, tokens):
    '''
    Return the symbol written as edge tokens (`["0*1", "1*2"]`, a JSON
    array or a comma separated string).
    '''
    if isinstance(tokens, str):
        text = tokens.strip()
        if text.startswith('['):
            tokens = json.loads(text)
        else:
            tokens = [t for t in text.strip('()').split(',') if t.strip()]
    return make_symbol(s, [s.parse_edge(t.strip()) for t in tokens])


def symbol_to_json(u, s):
    return [str(s[p]) for p in u.members]


def format_symbol(u, s):
    return '(%s)' % ', '.join(str(s[p]) for p in u.members)


def sort_symbols(symbols):
    return sorted(symbols, key=Symbol.sort_key)


def _cover_counts(u, s):
    return Counter(v for p in u.members for v in s[p].vertices)


def is_reduced(u, s):
    '''
    Return `True` if no member of `u` divides the product of two other
    members, i.e. no member has both endpoints covered by other members.
    '''
    counts = _cover_counts(u, s)
    return not any(all(counts[v] >= 2 for v in s[p].vertices)
                   for p in u.members)


def is_L_admissible(u, s, scope='symbol'):
    '''
    Return `True` if `u` satisfies the positional divisibility condition
    of Lyubeznik.

    With `scope='symbol'` the divisors range over the members of `u`: no
    member may divide the product of two later members.  With
    `scope='sequence'` they range over the whole generator sequence: for
    every tail of `u` with at least two members, no generator preceding
    the tail may divide its lcm.
    '''
    if scope == 'symbol':
        members = u.members
        for i, p in enumerate(members):
            later = set(v for q in members[i + 1:] for v in s[q].vertices)
            if all(v in later for v in s[p].vertices):
                return False
        return True
    elif scope == 'sequence':
        members = u.members
        for t in range(len(members) - 1):
            cover = set(v for q in members[t:] for v in s[q].vertices)
            for g in range(members[t]):
                if all(v in cover for v in s[g].vertices):
                    return False
        return True
    raise ValueError('Unknown L-admissibility scope `%s`' % scope)


def find_bridges(u, s):
    '''
    Return the positions of the members of `u` lying between two other
    members (both endpoints covered twice), largest monomial first.
    '''
    counts = _cover_counts(u, s)
    return [p for p in u.members
            if all(counts[v] >= 2 for v in s[p].vertices)]


def find_gaps(u, s):
    '''
    Return the gaps of `u`, largest bridge first.

    Members `xy > zw` on four distinct vertices form a gap when `xz` is an
    edge not in `u`, `zw` is the only member divisible by `w` and no member
    smaller than `zw` is divisible by `y`.
    '''
    members = u.members
    member_set = set(members)
    gaps = []
    for i, p1 in enumerate(members):
        upper = s[p1]
        for p2 in members[i + 1:]:
            lower = s[p2]
            if set(upper.vertices) & set(lower.vertices):
                continue
            for x in upper.vertices:
                for z in lower.vertices:
                    bridge = s.position(x, z)
                    if bridge is None or bridge in member_set:
                        continue
                    y = upper.other(x)
                    w = lower.other(z)
                    if any(w in s[q].vertices for q in members if q != p2):
                        continue
                    if any(y in s[q].vertices for q in members if q > p2):
                        continue
                    gaps.append(Gap(upper, lower, s[bridge], bridge))
    gaps.sort(key=lambda g: g.bridge_position)
    return gaps


def diagnose(u, s):
    '''
    Return the `Diagnosis` (class, gaps, bridges) of `u`.

    A non F-admissible symbol is of type 1 when some gap is not followed
    by any bridge, that is when its smallest gap bridge is smaller than
    every bridge of `u`.
    '''
    gaps = find_gaps(u, s)
    bridges = find_bridges(u, s)
    if not gaps and not bridges:
        symbol_class = F_ADMISSIBLE
    elif gaps and (not bridges or
                   gaps[-1].bridge_position > bridges[-1]):
        symbol_class = TYPE1
    else:
        symbol_class = TYPE2
    return Diagnosis(symbol_class, gaps, bridges)


def classify(u, s):
    return diagnose(u, s).symbol_class


def diagnosis_to_json(diagnosis, s):
    return {'class': diagnosis.symbol_class,
            'gaps': [{'upper': str(g.upper), 'lower': str(g.lower),
                      'bridge': str(g.bridge)} for g in diagnosis.gaps],
            'bridges': [str(s[p]) for p in diagnosis.bridges]}


def matching_insert(u, s):
    '''
    Return `u` with the smallest bridge among its gaps inserted.
    '''
    diagnosis = diagnose(u, s)
    if diagnosis.symbol_class != TYPE1:
        raise SymbolClassError('%s is %s, not TYPE1' %
                               (format_symbol(u, s),
                                diagnosis.symbol_class))
    return make_symbol(s, u.members + (diagnosis.gaps[-1].bridge_position, ))


def matching_delete(u, s):
    '''
    Return `u` with its smallest bridge omitted.
    '''
    diagnosis = diagnose(u, s)
    if diagnosis.symbol_class != TYPE2:
        raise SymbolClassError('%s is %s, not TYPE2' %
                               (format_symbol(u, s),
                                diagnosis.symbol_class))
    bridge = diagnosis.bridges[-1]
    return make_symbol(s, [p for p in u.members if p != bridge])


def subsymbols(u, s, length=None):
    lengths = range(len(u) + 1) if length is None else [length]
    for r in lengths:
        for members in combinations(u.members, r):
            yield make_symbol(s, members)


def enumerate_F_admissible_filter(s, cap=20):
    '''
    Return all symbols that are reduced and have no gaps, by scanning every
    subset of the generator sequence.
    '''
    if len(s) > cap:
        raise EnumerationCapError('filter enumeration', len(s), cap)
    result = []
    for r in range(len(s) + 1):
        for members in combinations(range(len(s)), r):
            u = make_symbol(s, members)
            if is_reduced(u, s) and not find_gaps(u, s):
                result.append(u)
    logger.info('filter enumeration: %d F-admissible symbols over %d '
                'generators', len(result), len(s))
    return result


def index_sequences(ranking):
    '''
    Return every descending sequence of K-subgraph indices containing no
    pair of adjacent vertices (the empty sequence included).
    '''
    forest = ranking.forest
    candidates = [v for v in ranking.variable_order if forest.adjacency[v]]
    sequences = []

    def extend(start, chosen):
        sequences.append(tuple(chosen))
        for i in range(start, len(candidates)):
            v = candidates[i]
            if any(forest.has_edge(v, c) for c in chosen):
                continue
            extend(i + 1, chosen + [v])

    extend(0, [])
    return sequences


def top_symbol(ranking, indices, s=None):
    '''
    Return the symbol collecting the K-subgraphs of `indices` after
    cancelling every monomial that is not coprime to a monomial of a later
    K-subgraph.
    '''
    if s is None:
        s = generator_sequence(ranking)
    blocks = [set(p for p in range(len(s)) if v in s[p].vertices)
              for v in indices]
    kept = set()
    for h, block in enumerate(blocks):
        later = set(v for k in range(h + 1, len(blocks))
                    for p in blocks[k] for v in s[p].vertices)
        kept.update(p for p in block
                    if not any(v in later for v in s[p].vertices))
    return make_symbol(s, kept)


def almost_F_admissible(ranking, s=None, cap=None):
    '''
    Return every subsymbol of every top symbol (steps before the gap
    filter), deduplicated and sorted by length.

    With `cap` set, at most `2 ** cap` symbols are visited (the size of the
    filter's scan at the same cap) before `EnumerationCapError` is raised.
    '''
    if s is None:
        s = generator_sequence(ranking)
    limit = None if cap is None else 2 ** cap
    pending = list(set(top_symbol(ranking, indices, s).members
                       for indices in index_sequences(ranking)))
    seen = set()
    while pending:
        members = pending.pop()
        if members in seen:
            continue
        seen.add(members)
        if limit is not None and len(seen) > limit:
            raise EnumerationCapError('procedure enumeration (2^%d symbols)'
                                      % cap, len(seen), limit)
        for i in range(len(members)):
            face = members[:i] + members[i + 1:]
            if face not in seen:
                pending.append(face)
    return sort_symbols(make_symbol(s, members) for members in seen)


def enumerate_F_admissible_procedure(ranking, s=None, cap=None):
    '''
    Return the F-admissible symbols: almost F-admissible symbols that
    contain no gap.
    '''
    if s is None:
        s = generator_sequence(ranking)
    result = [u for u in almost_F_admissible(ranking, s, cap)
              if not find_gaps(u, s)]
    logger.info('procedure enumeration: %d F-admissible symbols over %d '
                'generators', len(result), len(s))
    return result


def block_decomposition(u, s):
    '''
    Return the canonical `BlockDecomposition` of an F-admissible symbol.

    A vertex covered by two members is the index of the block holding
    them.  Each remaining member is scanned right to left and assigned to
    the larger of its two vertices not adjacent to an index already chosen.
    '''
    if classify(u, s) != F_ADMISSIBLE:
        raise SymbolClassError('%s is not F-admissible' %
                               format_symbol(u, s))
    forest = s.forest
    counts = _cover_counts(u, s)
    assignment = {}
    indices = []
    for p in u.members:
        forced = [v for v in s[p].vertices if counts[v] >= 2]
        if len(forced) > 1:
            raise RuntimeError('Reduced symbol %s has a bridge %s' %
                               (format_symbol(u, s), s[p]))
        if forced:
            assignment[p] = forced[0]
            if forced[0] not in indices:
                indices.append(forced[0])
    for p in sorted([p for p in u.members if p not in assignment],
                    reverse=True):
        for candidate in s[p].vertices:
            if not any(forest.has_edge(candidate, i) for i in indices):
                assignment[p] = candidate
                indices.append(candidate)
                break
        else:
            logger.error('No block index available for %s in %s', s[p],
                         format_symbol(u, s))
            raise RuntimeError('Block assignment failed for %s' %
                               format_symbol(u, s))
    for a, b in combinations(indices, 2):
        if forest.has_edge(a, b):
            raise RuntimeError('Adjacent block indices %s, %s in %s' %
                               (a, b, format_symbol(u, s)))
    position = s.ranking.position
    blocks = []
    for index in sorted(indices, key=position.get):
        members = tuple(s[p] for p in u.members if assignment[p] == index)
        blocks.append(Block(index, members))
    for b1, b2 in combinations(blocks, 2):
        v1 = set(v for e in b1.members for v in e.vertices)
        v2 = set(v for e in b2.members for v in e.vertices)
        if v1 & v2:
            raise RuntimeError('Blocks %s and %s of %s are not coprime' %
                               (b1.index, b2.index, format_symbol(u, s)))
    return BlockDecomposition(tuple(blocks))
