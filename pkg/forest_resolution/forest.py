'''
Forest input model: parsing, rooted ranking, the lexicographically ordered
sequence of edge monomials and the K-subgraphs of the dual graph.
'''
from __future__ import absolute_import
from collections import OrderedDict, namedtuple
import logging
import random
import re

from sympy.combinatorics.prufer import Prufer
import networkx as nx

logger = logging.getLogger(__name__)

CRE_ORDER_DIRECTIVE = re.compile(r'^order\s*:\s*(?P<order>.*)$')


class ForestParseError(ValueError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = 'line %d: %s' % (line, message)
        super(ForestParseError, self).__init__(message)


class RankingError(ValueError):
    pass


class EdgeMonomial(namedtuple('EdgeMonomial', 'hi lo')):
    '''
    Edge monomial `x_hi * x_lo`, where `hi` is the larger variable.
    '''
    def __str__(self):
        return '%s*%s' % (self.hi, self.lo)

    @property
    def vertices(self):
        return (self.hi, self.lo)

    def other(self, vertex):
        return self.lo if vertex == self.hi else self.hi


KSubgraphIndex = namedtuple('KSubgraphIndex', 'center members')


class Forest(object):
    '''
    Labeled acyclic simple graph.

    Vertices keep the order in which they were declared; `order` holds the
    explicit `order:` directive, if any.
    '''
    def __init__(self, vertices, edges, order=None):
        self.vertices = tuple(vertices)
        self.order = tuple(order) if order is not None else None
        self.graph = nx.Graph()
        self.graph.add_nodes_from(self.vertices)
        self.graph.add_edges_from(edges)
        self.edges = frozenset(frozenset(e) for e in self.graph.edges())
        self._index = dict((v, i) for i, v in enumerate(self.vertices))
        self._order_index = (dict((v, i) for i, v in enumerate(self.order))
                             if self.order is not None else self._index)
        self.adjacency = OrderedDict((v, tuple(sorted(self.graph[v],
                                                      key=self._index.get)))
                                     for v in self.vertices)
        if (len(self.edges) != len(self.vertices) -
                nx.number_connected_components(self.graph)):
            raise ValueError('Graph is not a forest.')

    @classmethod
    def from_edges(cls, edges, vertices=None, order=None):
        '''
        Return a forest on `vertices` (default: first appearance in
        `edges`).
        '''
        if vertices is None:
            vertices = []
        vertices = list(vertices)
        seen = set(vertices)
        for a, b in edges:
            for v in (a, b):
                if v not in seen:
                    seen.add(v)
                    vertices.append(v)
        return cls(vertices, edges, order=order)

    def __eq__(self, other):
        return (isinstance(other, Forest) and
                self.vertices == other.vertices and
                self.edges == other.edges)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.vertices, self.edges))

    def __repr__(self):
        return '<Forest %d vertices, %d edges>' % (len(self.vertices),
                                                  len(self.edges))

    def degree(self, vertex):
        return len(self.adjacency[vertex])

    def is_leaf(self, vertex):
        return self.degree(vertex) == 1

    def has_edge(self, a, b):
        return self.graph.has_edge(a, b)

    @property
    def non_isolated(self):
        return [v for v in self.vertices if self.adjacency[v]]

    def components(self):
        '''
        Return the vertex tuples of the connected components, ordered by
        their first vertex in `order` (declaration order without an
        `order:` directive).
        '''
        key = self._order_index.get
        components = [sorted(c, key=key)
                      for c in nx.connected_components(self.graph)]
        return [tuple(c) for c in sorted(components, key=lambda c: key(c[0]))]

    def subforest(self, vertices):
        '''
        Return the subforest induced on `vertices`.

        Vertices are declared in `order` (if set) or declaration order, so
        that ties keep breaking the same way; the directive itself is not
        carried over.
        '''
        keep = set(vertices)
        kept_vertices = [v for v in (self.order or self.vertices)
                         if v in keep]
        edges = [tuple(e) for e in self.graph.subgraph(keep).edges()]
        return Forest(kept_vertices, edges)

    def remove_vertices(self, vertices):
        drop = set(vertices)
        return self.subforest([v for v in self.vertices if v not in drop])

    def to_text(self):
        '''
        Return the forest as an edge-list document accepted by
        `parse_forest`.
        '''
        lines = []
        listed = set()
        for v in self.vertices:
            for w in self.adjacency[v]:
                if w not in listed:
                    lines.append('%s %s' % (v, w))
            listed.add(v)
            if not self.adjacency[v]:
                lines.append('%s' % v)
        if self.order is not None:
            lines.append('order: %s' % ' > '.join(self.order))
        return '\n'.join(lines) + '\n'


def parse_forest(text):
    '''
    Return a `Forest` parsed from an edge-list document.

    Each non-blank line is either `TOKEN TOKEN` (an edge) or a single
    `TOKEN` (an isolated vertex).  `#` starts a comment.  A single optional
    `order: t1 > t2 > ...` line fixes the variable order and must list
    every vertex.
    '''
    vertices = []
    seen = set()
    graph = nx.Graph()
    edges = []
    order = None
    order_line = None

    def add_vertex(v):
        if v not in seen:
            seen.add(v)
            vertices.append(v)
            graph.add_node(v)

    for i, raw_line in enumerate(text.splitlines(), 1):
        line = raw_line.split('#', 1)[0].strip()
        if not line:
            continue
        match = CRE_ORDER_DIRECTIVE.match(line)
        if match:
            if order is not None:
                raise ForestParseError('duplicate `order:` directive', i)
            order = [t.strip() for t in match.group('order').split('>')]
            if not all(order) or any(len(t.split()) != 1 for t in order):
                raise ForestParseError('malformed `order:` directive', i)
            if len(set(order)) != len(order):
                raise ForestParseError('repeated vertex in `order:` '
                                       'directive', i)
            order_line = i
            continue
        tokens = line.split()
        if len(tokens) == 1:
            add_vertex(tokens[0])
        elif len(tokens) == 2:
            a, b = tokens
            if a == b:
                raise ForestParseError('self-loop at `%s`' % a, i)
            if graph.has_edge(a, b):
                raise ForestParseError('duplicate edge `%s %s`' % (a, b), i)
            if a in graph and b in graph and nx.has_path(graph, a, b):
                raise ForestParseError('edge `%s %s` closes a cycle' %
                                       (a, b), i)
            add_vertex(a)
            add_vertex(b)
            graph.add_edge(a, b)
            edges.append((a, b))
        else:
            raise ForestParseError('expected `TOKEN TOKEN`, got %d tokens' %
                                   len(tokens), i)
    if order is not None and set(order) != seen:
        missing = [v for v in vertices if v not in set(order)]
        unknown = [v for v in order if v not in seen]
        raise ForestParseError('`order:` directive must list every vertex '
                               '(missing: %s; unknown: %s)' %
                               (', '.join(missing) or '-',
                                ', '.join(unknown) or '-'), order_line)
    return Forest(vertices, edges, order=order)


class RootedRanking(object):
    '''
    BFS ranks of every vertex from the root of its component, and the
    resulting total variable order (position 0 is the largest variable).
    '''
    def __init__(self, forest, roots, rank, predecessor, variable_order):
        self.forest = forest
        self.roots = tuple(roots)
        self.rank = rank
        self.predecessor = predecessor
        self.variable_order = tuple(variable_order)
        self.position = dict((v, i) for i, v in
                             enumerate(self.variable_order))
        self.max_rank = OrderedDict()
        for root, component in zip(self.roots, forest.components()):
            self.max_rank[root] = max(rank[v] for v in component)

    def greater(self, a, b):
        '''
        Return `True` if variable `a` is larger than variable `b`.
        '''
        return self.position[a] < self.position[b]

    def sort_key(self, vertex):
        return self.position[vertex]

    def __repr__(self):
        return '<RootedRanking roots=%s order=%s>' % (
            ','.join(self.roots), ' > '.join(self.variable_order))


def rank_vertices(forest, roots=None):
    '''
    Return the `RootedRanking` of `forest`.

    `roots` may name one root for any subset of the components; the other
    components are rooted at their first vertex in the `order:` directive
    (first declared vertex without one).
    '''
    components = forest.components()
    component_of = dict((v, i) for i, c in enumerate(components) for v in c)
    chosen = [None] * len(components)
    for root in roots or []:
        if root not in component_of:
            raise RankingError('Root `%s` is not a vertex of the forest.' %
                               root)
        i = component_of[root]
        if chosen[i] is not None and chosen[i] != root:
            raise RankingError('Roots `%s` and `%s` lie in the same '
                               'component.' % (chosen[i], root))
        chosen[i] = root
    chosen = [r if r is not None else c[0]
              for r, c in zip(chosen, components)]

    tie_break = forest._order_index

    rank = {}
    predecessor = {}
    variable_order = []
    for root, component in zip(chosen, components):
        rank.update(nx.single_source_shortest_path_length(forest.graph,
                                                          root))
        predecessor.update(dict(nx.bfs_predecessors(forest.graph, root)))
        variable_order.extend(sorted(component,
                                     key=lambda v: (rank[v], tie_break[v])))
    if forest.order is not None and tuple(variable_order) != forest.order:
        raise RankingError('`order:` directive %s contradicts the rank '
                           'order %s for roots %s' %
                           (' > '.join(forest.order),
                            ' > '.join(variable_order), ', '.join(chosen)))
    return RootedRanking(forest, chosen, rank, predecessor, variable_order)


class GeneratorSequence(object):
    '''
    Edge monomials in strictly decreasing lexicographic order.
    '''
    def __init__(self, ranking, entries):
        self.ranking = ranking
        self.forest = ranking.forest
        self.entries = tuple(entries)
        self.index = dict((e, i) for i, e in enumerate(self.entries))
        self._by_vertices = dict((frozenset(e.vertices), i)
                                 for i, e in enumerate(self.entries))

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def position(self, a, b):
        '''
        Return the position of edge `ab`, or `None` if it is not an edge.
        '''
        return self._by_vertices.get(frozenset((a, b)))

    def parse_edge(self, token):
        '''
        Return the position of an edge written as `a*b`.
        '''
        parts = token.split('*')
        if len(parts) != 2:
            raise ValueError('Malformed edge monomial `%s`' % token)
        position = self.position(*[p.strip() for p in parts])
        if position is None:
            raise ValueError('`%s` is not an edge of the forest' % token)
        return position

    def __repr__(self):
        return '(%s)' % ', '.join(map(str, self.entries))


def generator_sequence(ranking):
    pos = ranking.position
    monomials = []
    for edge in ranking.forest.edges:
        a, b = sorted(edge, key=pos.get)
        monomials.append(EdgeMonomial(a, b))
    monomials.sort(key=lambda e: (pos[e.hi], pos[e.lo]))
    return GeneratorSequence(ranking, monomials)


def k_subgraphs(ranking, sequence=None):
    '''
    Return one `KSubgraphIndex` per non-isolated vertex, in variable order.
    Members are listed in generator-sequence order.
    '''
    if sequence is None:
        sequence = generator_sequence(ranking)
    result = []
    for v in ranking.variable_order:
        members = tuple(e for e in sequence if v in e.vertices)
        if members:
            result.append(KSubgraphIndex(v, members))
    return result


def random_forests(count, max_edges, seed=0):
    '''
    Return `count` forests with at most `max_edges` edges.

    Each forest is a uniform random labeled tree decoded from a Pruefer
    sequence, split into components by deleting random edges.
    '''
    rng = random.Random(seed)
    forests = []
    for _ in range(count):
        n_edges = rng.randint(1, max_edges)
        n_vertices = n_edges + 1
        if n_vertices > 2:
            sequence = [rng.randrange(n_vertices)
                        for _ in range(n_vertices - 2)]
            tree_edges = Prufer.to_tree(sequence)
        else:
            tree_edges = [[0, 1]]
        drop = set(rng.sample(range(len(tree_edges)),
                              rng.randint(0, len(tree_edges) // 3)))
        edges = [(str(a), str(b)) for i, (a, b) in enumerate(tree_edges)
                 if i not in drop]
        forests.append(Forest([str(v) for v in range(n_vertices)], edges))
    return forests


def root_choices(forest, count, seed=0):
    '''
    Return up to `count` distinct root tuples (one root per component),
    starting with the default roots.
    '''
    rng = random.Random(seed)
    components = forest.components()
    choices = [tuple(c[0] for c in components)]
    attempts = 0
    while len(choices) < count and attempts < 10 * count:
        attempts += 1
        candidate = tuple(rng.choice(c) for c in components)
        if candidate not in choices:
            choices.append(candidate)
    return choices
