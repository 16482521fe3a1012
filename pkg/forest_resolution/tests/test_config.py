from __future__ import absolute_import

import pytest

from forest_resolution.config import (DEFAULT_CONFIG, build_run_config,
                                      merge, parse_config, parse_config_lines)


def test_parse_config_lines():
    lines = ['# settings', '', 'oracle.primes = 101', 'enumeration.cap=12',
             'random.seed=3', 'random.count=5', 'ignored line']
    assert parse_config_lines(lines) == {
        'enumeration': {'cap': '12'}, 'oracle': {'primes': '101'},
        'random': {'count': '5', 'seed': '3'}}
    assert parse_config_lines(['# nothing']) == {}


def test_merge_keeps_first_value():
    a = {'enumeration': {'cap': 5}}
    merged = merge(a, {'enumeration': {'cap': '20'}, 'induced': {'cap': '16'}})
    assert merged is a
    assert merged == {'enumeration': {'cap': 5}, 'induced': {'cap': '16'}}


def test_defaults():
    config = build_run_config('betti')
    assert config.cap == 20
    assert config.induced_cap == 16
    assert config.primes == (32003, 101)
    assert config.prime == 32003
    assert config.output_format == 'text'
    assert (config.random_count, config.max_edges, config.seed) == (200, 8, 0)
    assert config.method == 'procedure'
    assert config.dot_graph == 'dual'
    assert config.roots == ()
    assert DEFAULT_CONFIG['enumeration']['cap'] == '20'


def test_settings_file_and_overrides(tmp_path):
    settings = tmp_path / 'forest.cfg'
    settings.write_text('enumeration.cap=12\noracle.primes=101\n'
                        'output.format=json\n')
    assert parse_config(str(settings))['oracle'] == {'primes': '101'}
    config = build_run_config('verify', {'enumeration': {'cap': 7}},
                              config_path=str(settings), roots='0, 3')
    assert config.cap == 7
    assert config.primes == (101, )
    assert config.output_format == 'json'
    assert config.roots == ('0', '3')


@pytest.mark.parametrize('subcommand, overrides', [
    ('draw', None),
    ('betti', {'enumeration': {'cap': 0}}),
    ('betti', {'enumeration': {'cap': 'many'}}),
    ('betti', {'oracle': {'primes': '2'}}),
    ('betti', {'oracle': {'primes': '32003,100'}}),
    ('betti', {'oracle': {'primes': '1'}}),
    ('betti', {'oracle': {'primes': '101,32001'}}),
    ('betti', {'oracle': {'primes': ''}}),
    ('betti', {'output': {'format': 'xml'}}),
    ('verify', {'random': {'max_edges': 0}}),
])
def test_invalid_settings(subcommand, overrides):
    with pytest.raises(ValueError):
        build_run_config(subcommand, overrides)


def test_odd_primes_accepted():
    config = build_run_config('verify', {'oracle': {'primes': '3,65537'}})
    assert config.primes == (3, 65537)
