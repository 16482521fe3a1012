'''
Graphviz DOT documents for the forest, its dual graph and the Morse graph
of a differential column.
'''
from __future__ import absolute_import
from itertools import combinations
import logging

from .morse import KIND_DELETION, KIND_INSERTION
from .symbols import F_ADMISSIBLE, TYPE1, TYPE2, format_symbol

logger = logging.getLogger(__name__)

CLASS_STYLES = {F_ADMISSIBLE: 'shape=box, style=bold',
                TYPE1: 'shape=ellipse',
                TYPE2: 'shape=ellipse, style=dashed'}


def _quote(text):
    return '"%s"' % str(text).replace('\\', '\\\\').replace('"', '\\"')


def forest_dot(ranking):
    '''
    Return the forest with every vertex labeled by its rank.
    '''
    forest = ranking.forest
    lines = ['graph forest {']
    for v in ranking.variable_order:
        lines.append('  %s [label=%s];' % (_quote(v), _quote(
            '%s (rank %d)' % (v, ranking.rank[v]))))
    for v in ranking.variable_order:
        for w in forest.adjacency[v]:
            if ranking.greater(v, w):
                lines.append('  %s -- %s;' % (_quote(v), _quote(w)))
    lines.append('}')
    return '\n'.join(lines) + '\n'


def dual_graph_dot(ranking, s, k_subgraphs):
    '''
    Return the dual graph: one node per edge monomial, and the clique of
    every K-subgraph with at least two members drawn with edges labeled by
    its index.
    '''
    lines = ['graph dual {']
    for e in s:
        lines.append('  %s;' % _quote(e))
    for k in k_subgraphs:
        if len(k.members) < 2:
            continue
        lines.append('  // K-subgraph [%s]: %s' %
                     (k.center, ', '.join(map(str, k.members))))
        for a, b in combinations(k.members, 2):
            lines.append('  %s -- %s [label=%s];' %
                         (_quote(a), _quote(b), _quote('[%s]' % k.center)))
    lines.append('}')
    return '\n'.join(lines) + '\n'


def gradient_paths(g, u, target=None):
    '''
    Return the explicit gradient paths (lists of cells) that start at a
    face of `u`, optionally only those ending at `target`.
    '''
    def extend(cell):
        symbol_class = g.symbol_class(cell)
        if symbol_class == F_ADMISSIBLE:
            return [[cell]]
        if symbol_class != TYPE1:
            return []
        upper = g.partners[cell]
        paths = []
        for face, data in g.graph[upper].items():
            if data['kind'] == KIND_DELETION and len(face) == len(cell):
                paths.extend([cell, upper] + tail for tail in extend(face))
        return paths

    paths = []
    for face, data in sorted(g.graph[u].items(),
                             key=lambda item: item[0].members):
        for path in extend(face):
            if target is None or path[-1] == target:
                paths.append([u] + path)
    return paths


def morse_region_dot(g, u, target=None):
    '''
    Return the Morse graph of the region of column `u`.

    Matched (reversed) edges are drawn bold red; the edges of every
    gradient path from `u` to `target` (every path longer than a single
    face when `target` is `None`) are drawn blue and labeled with the
    numbers of the paths using them.
    '''
    s = g.s
    if u not in g:
        raise KeyError('Unknown cell %s' % format_symbol(u, s))
    if target is not None and target not in g:
        raise KeyError('Unknown cell %s' % format_symbol(target, s))
    paths = gradient_paths(g, u, target)
    if target is None:
        # faces of u that are critical themselves
        paths = [p for p in paths if len(p) > 2]
    on_path = {}
    for i, path in enumerate(paths, 1):
        for a, b in zip(path, path[1:]):
            on_path.setdefault((a, b), []).append(i)

    lines = ['digraph morse {', '  rankdir=TB;']
    for cell in g.cells:
        attributes = CLASS_STYLES[g.symbol_class(cell)]
        if cell == u or cell == target:
            attributes += ', color=blue'
        lines.append('  %s [%s];' % (_quote(format_symbol(cell, s)),
                                     attributes))
    for a, b, data in sorted(g.graph.edges(data=True),
                             key=lambda e: (len(e[0]), e[0].members,
                                            e[1].members)):
        weight = data['weight']
        label = '%s%s' % ('+' if weight.sign > 0 else '-',
                          '*'.join('x%s' % v for v in sorted(
                              weight.exponent,
                              key=s.ranking.position.get)) or '1')
        attributes = ['label=%s' % _quote(label)]
        if data['kind'] == KIND_INSERTION:
            attributes.append('color=red, style=bold')
        if (a, b) in on_path:
            attributes.append('color=blue, penwidth=2')
            attributes.append('xlabel=%s' % _quote(
                'P%s' % ',P'.join(map(str, on_path[(a, b)]))))
        lines.append('  %s -> %s [%s];' % (_quote(format_symbol(a, s)),
                                           _quote(format_symbol(b, s)),
                                           ', '.join(attributes)))
    for i, path in enumerate(paths, 1):
        lines.append('  // P%d: %s' % (i, ' -> '.join(format_symbol(c, s)
                                                    for c in path)))
    lines.append('}')
    return '\n'.join(lines) + '\n'
