from __future__ import absolute_import

import pytest

from forest_resolution.dot import (dual_graph_dot, forest_dot,
                                   gradient_paths, morse_region_dot)

from .conftest import sym

COLUMN = ('0*1', '2*3', "3*4'", '4*5', '5*6')


def test_forest_dot(seven):
    dot = forest_dot(seven.ranking)
    assert '"2\'\'" [label="2\'\' (rank 2)"];' in dot
    assert '"0" -- "1";' in dot
    assert '"1" -- "0";' not in dot
    assert dot.count(' -- ') == 6


def test_dual_graph_dot(seven):
    dot = dual_graph_dot(seven.ranking, seven.sequence, seven.k_subgraphs())
    assert '"0*1" -- "1*2" [label="[1]"];' in dot
    assert '"0*1" -- "0*1\'" [label="[0]"];' in dot
    # [0] and [1'] contribute one edge each, [1] three and [2] one
    assert dot.count(' -- ') == 6


def test_gradient_paths(gradient):
    u = sym(gradient, *COLUMN)
    g = gradient.graph(u)
    target = sym(gradient, '0*1', '2*3', '3*4', "3*4'")
    paths = gradient_paths(g, u, target)
    assert [sym(gradient, '0*1', '2*3', "3*4'", '4*5'),
            sym(gradient, '0*1', '2*3', '3*4', "3*4'", '4*5'),
            target] in [p[1:] for p in paths]
    assert all(p[0] == u and p[-1] == target for p in paths)
    assert all(len(p) % 2 == 0 for p in paths)


def test_morse_region_dot(gradient, seven):
    u = sym(gradient, *COLUMN)
    g = gradient.graph(u)
    dot = morse_region_dot(g, u)
    assert dot.count('// P') >= 2
    assert 'xlabel="P1' in dot
    g = seven.graph(sym(seven, '0*1', '1*2'))
    with pytest.raises(KeyError):
        morse_region_dot(g, sym(seven, '0*1', '1*2'), sym(seven, '2*3'))
    with pytest.raises(KeyError):
        morse_region_dot(g, sym(seven, '2*3'))


def test_morse_region_dot_shows_both_gradient_paths(gradient):
    u = sym(gradient, *COLUMN)
    dot = morse_region_dot(gradient.graph(u), u)
    assert ("(0*1, 2*3, 3*4', 4*5) -> (0*1, 2*3, 3*4, 3*4', 4*5) -> "
            "(0*1, 2*3, 3*4, 3*4')") in dot
    assert ('(0*1, 2*3, 4*5, 5*6) -> (0*1, 1*2, 2*3, 4*5, 5*6) -> '
            '(0*1, 1*2, 2*3, 4*5) -> (0*1, 1*2, 2*3, 3*4, 4*5) -> '
            '(0*1, 1*2, 3*4, 4*5)') in dot
