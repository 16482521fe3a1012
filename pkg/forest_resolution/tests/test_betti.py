from __future__ import absolute_import
from math import comb

import pytest

from forest_resolution.betti import (GradedBettiTable, MultigradedBettiTable,
                                     betti_by_induced_subgraphs,
                                     betti_from_symbols, component_tables,
                                     jacques_betti, jacques_pd,
                                     pd_bouquet_formula, tables_to_json)
from forest_resolution.context import ForestContext
from forest_resolution.forest import parse_forest, random_forests
from forest_resolution.reference import (SEVEN_VERTEX_TREE, reference_forest,
                                         reference_table)
from forest_resolution.symbols import EnumerationCapError, Symbol

from .conftest import (PATH_3, SINGLE_EDGE, STAR_3, TWO_PATHS, make_context,
                       small_corpus, sym)


def test_reference_table():
    table = reference_table('seven-vertex')
    assert table[(1, 2)] == 6
    assert table[(2, 3)] == 6
    assert table[(2, 4)] == 4
    assert table[(3, 4)] == 1
    assert table[(3, 5)] == 6
    assert table[(4, 6)] == 2
    assert table.pd == 4
    assert reference_forest('seven-vertex') == parse_forest(SEVEN_VERTEX_TREE)


def test_seven_vertex_tree(seven):
    multigraded, graded = seven.betti()
    assert graded == reference_table('seven-vertex')
    assert set(multigraded.entries.values()) == set([1])
    assert multigraded[(2, ['0', "1'", '2', '3'])] == 1
    assert multigraded[(2, ['0', '1', '2', '3'])] == 0
    assert seven.pd == 4


@pytest.mark.parametrize('text, expected', [
    (SINGLE_EDGE, {(0, 0): 1, (1, 2): 1}),
    (PATH_3, {(0, 0): 1, (1, 2): 2, (2, 3): 1}),
    (STAR_3, dict([((0, 0), 1)] + [((i, i + 1), comb(3, i))
                                   for i in range(1, 4)])),
])
def test_small_tables(text, expected):
    multigraded, graded = make_context(text).betti()
    assert graded.entries == expected


def test_table_arithmetic():
    edge = GradedBettiTable({(0, 0): 1, (1, 2): 1})
    assert edge.convolve(edge).entries == {(0, 0): 1, (1, 2): 2, (2, 4): 1}
    assert edge.shift(1, 2, 3).entries == {(1, 2): 3, (2, 4): 3}
    assert (edge + edge).entries == {(0, 0): 2, (1, 2): 2}
    assert GradedBettiTable({(1, 2): 0}).entries == {}
    assert GradedBettiTable().pd == 0


def test_grid_and_text(seven):
    graded = seven.betti()[1]
    grid = graded.to_grid()
    assert grid.loc[0].tolist() == [1, 0, 0, 0, 0]
    assert grid.loc[1].tolist() == [0, 6, 6, 1, 0]
    assert grid.loc[2].tolist() == [0, 0, 4, 6, 2]
    lines = graded.to_text().splitlines()
    assert lines[1].split() == ['total:', '1', '6', '10', '7', '2']
    assert lines[2].split() == ['0:', '1', '.', '.', '.', '.']
    assert lines[3].split() == ['1:', '.', '6', '6', '1', '.']
    frame = graded.to_frame()
    assert frame.columns.tolist() == ['degree', 'internal_degree', 'value']
    assert frame['value'].sum() == 26


def test_to_json(path3):
    document = tables_to_json(*path3.betti())
    assert document['pd'] == 2
    assert document['graded'] == [
        {'degree': 0, 'internal_degree': 0, 'value': 1},
        {'degree': 1, 'internal_degree': 2, 'value': 2},
        {'degree': 2, 'internal_degree': 3, 'value': 1}]
    assert document['multigraded'][1] == {'degree': 1,
                                          'multidegree': ['0', '1'],
                                          'value': 1}


def test_repeated_multidegree_is_an_error(caplog):
    u = Symbol((0, ), frozenset(['a', 'b']))
    with pytest.raises(RuntimeError):
        betti_from_symbols([u, Symbol((1, ), frozenset(['a', 'b']))])
    assert [r.levelname for r in caplog.records] == ['ERROR']
    assert 'Duplicate multidegree' in caplog.text


def test_multigraded_convolution():
    left = MultigradedBettiTable({(0, frozenset()): 1,
                                  (1, frozenset('ab')): 1})
    right = MultigradedBettiTable({(0, frozenset()): 1,
                                   (1, frozenset('cd')): 1})
    product = left.convolve(right)
    assert product[(2, 'abcd')] == 1
    assert product.graded().entries == {(0, 0): 1, (1, 2): 2, (2, 4): 1}
    with pytest.raises(ValueError):
        left.convolve(left)


def test_components_convolve_to_the_forest():
    context = make_context(TWO_PATHS + 'z\n')
    left, right = component_tables(context.forest)
    assert left.convolve(right) == context.betti()[0]


def test_bouquet_formula(seven, single_edge, star3):
    s = seven.sequence
    assert pd_bouquet_formula(sym(seven, "0*1'", '1*2', "1*2'", "1'*2''"),
                              s) == 4
    assert pd_bouquet_formula(sym(single_edge, 'a*b'),
                              single_edge.sequence) == 1
    assert pd_bouquet_formula(sym(star3, 'c*a', 'c*b', 'c*d'),
                              star3.sequence) == 3
    with pytest.raises(ValueError):
        pd_bouquet_formula(sym(seven, '0*1'), s)


def test_bouquet_formula_counts_maximal_symbols(seven):
    for context in [seven] + [ForestContext(f) for f in small_corpus()]:
        values = context.bouquet_values()
        assert all(value == len(u) for u, value in values)
        assert max(value for u, value in values) == context.pd


def test_maximal_symbols_need_not_reach_pd(seven):
    # (0*1, 1*2, 1*2') is maximal with three members while pd = 4
    lengths = sorted(len(u) for u in seven.maximal_symbols())
    assert 3 in lengths
    assert lengths[-1] == 4


def test_induced_subgraphs(seven, single_edge, path3):
    assert betti_by_induced_subgraphs(seven.forest) == \
        reference_table('seven-vertex')
    for context in (single_edge, path3):
        assert betti_by_induced_subgraphs(context.forest) == \
            context.betti()[1]
    with pytest.raises(EnumerationCapError):
        betti_by_induced_subgraphs(seven.forest, cap=6)


def test_jacques_recursion(seven, single_edge, star3):
    assert jacques_betti(seven.forest) == reference_table('seven-vertex')
    assert jacques_pd(seven.forest) == 4
    assert jacques_betti(single_edge.forest).entries == {(0, 0): 1,
                                                         (1, 2): 1}
    assert jacques_pd(single_edge.forest) == 1
    assert jacques_pd(star3.forest) == 3
    assert jacques_betti(star3.forest) == star3.betti()[1]


def test_jacques_recursion_on_forests():
    context = make_context(TWO_PATHS + 'z\n')
    assert jacques_betti(context.forest) == context.betti()[1]
    assert jacques_pd(context.forest) == 4
    assert jacques_pd(parse_forest('z\n')) == 0


def test_root_invariance(seven):
    expected = seven.betti()[1]
    for root in seven.forest.vertices:
        context = ForestContext(seven.forest, roots=[root])
        assert context.betti()[1] == expected


def check_routes(context):
    graded = context.betti()[1]
    assert jacques_betti(context.forest) == graded
    assert jacques_pd(context.forest) == graded.pd
    assert betti_by_induced_subgraphs(context.forest) == graded


def test_routes_agree_on_random_forests():
    for forest in small_corpus():
        check_routes(ForestContext(forest))


@pytest.mark.slow
def test_routes_agree_on_random_corpus():
    for forest in random_forests(200, 8, seed=0):
        check_routes(ForestContext(forest))
