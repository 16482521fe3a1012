from __future__ import absolute_import
from collections import Counter

import pytest

from forest_resolution.context import ForestContext
from forest_resolution.forest import (generator_sequence, rank_vertices,
                                      random_forests, root_choices)
from forest_resolution.oracle import taylor_basis
from forest_resolution.symbols import (F_ADMISSIBLE, TYPE1, TYPE2,
                                       EnumerationCapError, SymbolClassError,
                                       almost_F_admissible,
                                       block_decomposition, classify,
                                       diagnose, diagnosis_to_json,
                                       enumerate_F_admissible_filter,
                                       enumerate_F_admissible_procedure,
                                       find_bridges, find_gaps,
                                       format_symbol, index_sequences,
                                       is_L_admissible, is_reduced,
                                       make_symbol, matching_delete,
                                       matching_insert, subsymbols,
                                       top_symbol)

from .conftest import PATH_4, TWO_PATHS, make_context, small_corpus, sym


def names(u, context):
    return [str(context.sequence[p]) for p in u.members]


def test_make_symbol_sorts_and_computes_multidegree(seven):
    u = make_symbol(seven.sequence, [2, 0])
    assert u.members == (0, 2)
    assert u.multidegree == frozenset(['0', '1', '2'])
    assert format_symbol(u, seven.sequence) == '(0*1, 1*2)'
    with pytest.raises(ValueError):
        make_symbol(seven.sequence, [1, 1])
    with pytest.raises(ValueError):
        make_symbol(seven.sequence, [6])


def test_parse_symbol_forms(seven):
    expected = sym(seven, '0*1', '1*2')
    assert seven.parse_symbol('0*1,1*2') == expected
    assert seven.parse_symbol('(0*1, 1*2)') == expected
    assert seven.parse_symbol('["1*2", "0*1"]') == expected


def test_is_reduced(seven):
    assert not is_reduced(sym(seven, '0*1', "0*1'", '1*2'), seven.sequence)
    assert is_reduced(sym(seven, '0*1', '1*2', "1*2'"), seven.sequence)
    assert is_reduced(sym(seven), seven.sequence)
    assert is_reduced(sym(seven, '2*3'), seven.sequence)


def test_is_L_admissible(seven, path3):
    s = seven.sequence
    assert is_L_admissible(sym(seven, '0*1', '1*2', "1*2'"), s)
    # 0*1 divides the product of the later members 0*1' and 1*2
    assert not is_L_admissible(sym(seven, '0*1', "0*1'", '1*2'), s)
    assert not is_L_admissible(sym(seven, '0*1', "0*1'", '1*2'), s,
                               scope='sequence')
    for scope in ('symbol', 'sequence'):
        assert is_L_admissible(sym(path3, '0*1', '1*2'), path3.sequence,
                               scope=scope)
    with pytest.raises(ValueError):
        is_L_admissible(sym(seven), s, scope='ideal')


def test_sequence_scope_is_stricter(seven):
    u = sym(seven, "0*1'", '1*2', "1'*2''", '2*3')
    assert classify(u, seven.sequence) == F_ADMISSIBLE
    assert is_L_admissible(u, seven.sequence)
    # 0*1 precedes the whole symbol and divides its lcm
    assert not is_L_admissible(u, seven.sequence, scope='sequence')


def test_F_admissible_symbols_are_L_admissible(seven):
    for u in seven.symbols:
        assert is_L_admissible(u, seven.sequence)


def test_find_gaps(seven):
    s = seven.sequence
    gaps = find_gaps(sym(seven, "0*1'", '1*2'), s)
    assert len(gaps) == 1
    assert str(gaps[0].upper) == "0*1'"
    assert str(gaps[0].lower) == '1*2'
    assert str(gaps[0].bridge) == '0*1'
    assert find_gaps(sym(seven, '0*1', "0*1'"), s) == []
    gaps = find_gaps(sym(seven, "0*1'", '1*2', "1*2'"), s)
    assert set(str(g.bridge) for g in gaps) == set(['0*1'])
    assert len(gaps) == 2


def test_find_bridges(seven):
    s = seven.sequence
    assert [str(s[p]) for p in
            find_bridges(sym(seven, '0*1', "0*1'", '1*2'), s)] == ['0*1']
    path4 = make_context(PATH_4)
    u = sym(path4, '0*1', '1*2', '2*3')
    assert [str(path4.sequence[p])
            for p in find_bridges(u, path4.sequence)] == ['1*2']


@pytest.mark.parametrize('tokens, expected', [
    (("0*1'", '1*2'), TYPE1),
    (('0*1', "0*1'", '1*2'), TYPE2),
    (('0*1', '1*2', "1*2'"), F_ADMISSIBLE),
    (("0*1'", '1*2', "1*2'"), TYPE1),
    (('0*1', "0*1'", '1*2', "1*2'"), TYPE2),
    ((), F_ADMISSIBLE),
])
def test_classify(seven, tokens, expected):
    assert classify(sym(seven, *tokens), seven.sequence) == expected


def test_diagnosis_to_json(seven):
    diagnosis = diagnose(sym(seven, "0*1'", '1*2'), seven.sequence)
    assert diagnosis_to_json(diagnosis, seven.sequence) == \
        {'class': TYPE1,
         'gaps': [{'upper': "0*1'", 'lower': '1*2', 'bridge': '0*1'}],
         'bridges': []}


def test_matching_insert_and_delete(seven):
    s = seven.sequence
    assert matching_insert(sym(seven, "0*1'", '1*2'), s) == \
        sym(seven, '0*1', "0*1'", '1*2')
    assert matching_insert(sym(seven, "0*1'", '1*2', "1*2'"), s) == \
        sym(seven, '0*1', "0*1'", '1*2', "1*2'")
    assert matching_delete(sym(seven, '0*1', "0*1'", '1*2'), s) == \
        sym(seven, "0*1'", '1*2')
    assert matching_delete(sym(seven, '0*1', "0*1'", '1*2', "1*2'"), s) == \
        sym(seven, "0*1'", '1*2', "1*2'")
    with pytest.raises(SymbolClassError):
        matching_insert(sym(seven, '0*1'), s)
    with pytest.raises(SymbolClassError):
        matching_delete(sym(seven, "0*1'", '1*2'), s)


def test_matching_on_gradient_tree(gradient):
    s = gradient.sequence
    assert matching_insert(sym(gradient, '0*1', '2*3', "3*4'", '4*5'),
                           s) == \
        sym(gradient, '0*1', '2*3', '3*4', "3*4'", '4*5')
    u = sym(gradient, '0*1', '1*2', '2*3', '3*4', "3*4'", '4*5')
    assert classify(u, s) == TYPE2
    lower = matching_delete(u, s)
    assert lower == sym(gradient, '0*1', '1*2', '2*3', "3*4'", '4*5')
    assert classify(lower, s) == TYPE1


def check_matching_involution(context):
    s = context.sequence
    for u in taylor_basis(s):
        symbol_class = classify(u, s)
        if symbol_class == TYPE1:
            assert find_gaps(u, s)
            partner = matching_insert(u, s)
            assert classify(partner, s) == TYPE2
            assert matching_delete(partner, s) == u
            assert partner.multidegree == u.multidegree
        elif symbol_class == TYPE2:
            assert find_bridges(u, s)
            partner = matching_delete(u, s)
            assert classify(partner, s) == TYPE1
            assert matching_insert(partner, s) == u
            assert partner.multidegree == u.multidegree


def test_matching_is_an_involution(seven, gradient):
    check_matching_involution(seven)
    check_matching_involution(gradient)
    for forest in small_corpus():
        check_matching_involution(ForestContext(forest))


def test_filter_counts_seven_vertex_tree(seven):
    symbols = enumerate_F_admissible_filter(seven.sequence)
    assert Counter(len(u) for u in symbols) == \
        Counter({0: 1, 1: 6, 2: 10, 3: 7, 4: 2})


def test_filter_cap(seven):
    with pytest.raises(EnumerationCapError) as exc_info:
        enumerate_F_admissible_filter(seven.sequence, cap=5)
    assert exc_info.value.size == 6
    assert exc_info.value.cap == 5


def test_small_forests(single_edge, star3):
    assert [names(u, single_edge) for u in single_edge.symbols] == \
        [[], ['a*b']]
    assert len(star3.symbols) == 8
    assert [names(u, star3) for u in star3.symbols][-1] == \
        ['c*a', 'c*b', 'c*d']


def test_index_sequences_are_independent(seven):
    ranking = seven.ranking
    sequences = index_sequences(ranking)
    assert () in sequences
    assert ('1', "1'") in sequences
    assert ('0', '2') in sequences
    for indices in sequences:
        assert list(indices) == sorted(indices, key=ranking.position.get)
        for i, a in enumerate(indices):
            assert not any(seven.forest.has_edge(a, b)
                           for b in indices[i + 1:])


def test_top_symbols(seven):
    ranking = seven.ranking
    s = seven.sequence
    assert top_symbol(ranking, ['1'], s) == sym(seven, '0*1', '1*2', "1*2'")
    assert top_symbol(ranking, ['1', "1'"], s) == \
        sym(seven, "0*1'", '1*2', "1*2'", "1'*2''")
    assert top_symbol(ranking, ['0', '2'], s) == \
        sym(seven, "0*1'", '1*2', '2*3')


def test_almost_F_admissible_symbols_are_reduced(seven):
    almost = almost_F_admissible(seven.ranking, seven.sequence)
    assert sym(seven, "0*1'", '1*2') in almost
    for u in almost:
        assert is_reduced(u, seven.sequence)
    assert sym(seven, "0*1'", '1*2') not in seven.symbols


def test_almost_F_admissible_is_every_subsymbol_of_a_top(seven, gradient):
    for context in [seven, gradient, make_context(TWO_PATHS)]:
        ranking, s = context.ranking, context.sequence
        expected = set()
        for indices in index_sequences(ranking):
            expected.update(subsymbols(top_symbol(ranking, indices, s), s))
        almost = almost_F_admissible(ranking, s)
        assert len(almost) == len(set(almost))
        assert set(almost) == expected


def test_procedure_cap(seven):
    with pytest.raises(EnumerationCapError) as exc_info:
        enumerate_F_admissible_procedure(seven.ranking, seven.sequence,
                                         cap=3)
    assert exc_info.value.cap == 8
    assert exc_info.value.size == 9
    assert enumerate_F_admissible_procedure(seven.ranking, seven.sequence,
                                            cap=6) == seven.symbols


def check_procedure_matches_filter(forest, n_roots=3):
    for roots in root_choices(forest, n_roots):
        ranking = rank_vertices(forest, roots)
        s = generator_sequence(ranking)
        assert enumerate_F_admissible_procedure(ranking, s) == \
            enumerate_F_admissible_filter(s)


def test_procedure_matches_filter(seven, gradient):
    for context in [seven, gradient, make_context(TWO_PATHS)]:
        assert context.symbols == \
            enumerate_F_admissible_filter(context.sequence)
    for forest in small_corpus(count=20, max_edges=7):
        check_procedure_matches_filter(forest)


@pytest.mark.slow
def test_procedure_matches_filter_random_corpus():
    for forest in random_forests(200, 10, seed=0):
        check_procedure_matches_filter(forest)


def test_multidegrees_are_distinct(seven):
    for context in [seven] + [ForestContext(f) for f in small_corpus()]:
        supports = [u.multidegree for u in context.symbols]
        assert len(set(supports)) == len(supports)


def test_symbols_of_a_disjoint_union():
    context = make_context(TWO_PATHS)
    left = make_context('0 1\n1 2\n')
    right = make_context('3 4\n4 5\n')
    expected = set(frozenset(names(u, left) + names(v, right))
                   for u in left.symbols for v in right.symbols)
    assert len(context.symbols) == 16
    assert set(frozenset(names(u, context))
               for u in context.symbols) == expected


@pytest.mark.parametrize('tokens, indices', [
    (('0*1', '1*2', "1*2'"), ['1']),
    (('0*1', "0*1'"), ['0']),
    (("0*1'", "1'*2''", '2*3'), ["1'", '2']),
    (('2*3', ), ['2']),
])
def test_block_decomposition(seven, tokens, indices):
    decomposition = block_decomposition(sym(seven, *tokens), seven.sequence)
    assert [b.index for b in decomposition.blocks] == indices
    assert sorted(str(e) for b in decomposition.blocks
                  for e in b.members) == sorted(tokens)


def test_block_decomposition_requires_F_admissible(seven):
    with pytest.raises(SymbolClassError):
        block_decomposition(sym(seven, "0*1'", '1*2'), seven.sequence)


def test_block_decomposition_of_every_symbol(seven):
    for context in [seven] + [ForestContext(f) for f in small_corpus()]:
        forest = context.forest
        for u in context.symbols:
            blocks = block_decomposition(u, context.sequence).blocks
            indices = [b.index for b in blocks]
            for i, a in enumerate(indices):
                assert not any(forest.has_edge(a, b)
                               for b in indices[i + 1:])
            assert sum(len(b.members) for b in blocks) == len(u)
            assert all(b.index in e.vertices
                       for b in blocks for e in b.members)
