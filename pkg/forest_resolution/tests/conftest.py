from __future__ import absolute_import

import pytest

from forest_resolution.context import ForestContext
from forest_resolution.forest import parse_forest, random_forests
from forest_resolution.reference import GRADIENT_PATH_TREE, SEVEN_VERTEX_TREE

SINGLE_EDGE = 'a b\n'
PATH_3 = '0 1\n1 2\n'
PATH_4 = '0 1\n1 2\n2 3\n'
STAR_3 = 'c a\nc b\nc d\n'
TWO_PATHS = '0 1\n1 2\n3 4\n4 5\n'


def make_context(text, roots=None):
    return ForestContext(parse_forest(text), roots=roots)


def sym(context, *tokens):
    '''
    Return the symbol of `context` written as edge tokens, e.g.
    `sym(context, "0*1", "1*2")`.
    '''
    return context.parse_symbol(list(tokens))


@pytest.fixture
def seven():
    return make_context(SEVEN_VERTEX_TREE)


@pytest.fixture
def gradient():
    return make_context(GRADIENT_PATH_TREE)


@pytest.fixture
def single_edge():
    return make_context(SINGLE_EDGE)


@pytest.fixture
def path3():
    return make_context(PATH_3)


@pytest.fixture
def star3():
    return make_context(STAR_3)


def small_corpus(count=15, max_edges=6, seed=7):
    return random_forests(count, max_edges, seed)
