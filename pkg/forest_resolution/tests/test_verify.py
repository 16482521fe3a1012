from __future__ import absolute_import

import pytest

from forest_resolution.context import ForestContext
from forest_resolution.forest import random_forests
from forest_resolution.verify import verify_forest

from .conftest import TWO_PATHS, make_context


def test_verify_reference_tree(seven):
    report = verify_forest(seven, primes=(101, ))
    assert report['agree'], report['diffs']
    assert report['roots'] == ['0']
    assert report['invariance']['roots'][0] == ['0']
    assert report['complex'] == {'d2_zero': True, 'minimal': True,
                                 'acyclic': True, 'matching': True,
                                 'ranks': [1, 6, 10, 7, 2]}
    assert sorted(report['routes']) == ['induced', 'jacques', 'lyubeznik',
                                        'symbols', 'taylor']


def test_verify_forest_with_components():
    report = verify_forest(make_context(TWO_PATHS + 'z\n'))
    assert report['agree'], report['diffs']
    assert report['invariance']['components']
    assert report['pd']['symbols'] == 4


def test_verify_corrupted_complex(path3):
    report = verify_forest(path3, corrupt=True)
    assert not report['agree']
    assert not report['complex']['minimal']
    assert {'routes': 'complex', 'error': 'minimal failed'} in \
        report['diffs']


@pytest.mark.slow
def test_verify_random_corpus():
    for forest in random_forests(200, 8, seed=0):
        report = verify_forest(ForestContext(forest))
        assert report['agree'], (forest.to_text(), report['diffs'])
        assert report['invariance']['components']
