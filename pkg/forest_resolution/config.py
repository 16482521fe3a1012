from __future__ import absolute_import
from collections import namedtuple
from copy import deepcopy
from itertools import groupby
import logging

from path_helpers import path
from sympy import isprime

logger = logging.getLogger(__name__)

SUBCOMMANDS = ('symbols', 'betti', 'pd', 'resolution', 'verify', 'dot')
OUTPUT_FORMATS = ('text', 'json', 'csv')

DEFAULT_CONFIG = {'enumeration': {'cap': '20'},
                  'induced': {'cap': '16'},
                  'oracle': {'primes': '32003,101'},
                  'output': {'format': 'text'},
                  'random': {'count': '200', 'max_edges': '8', 'seed': '0'}}


def traverse(data):
    '''
    Recursively traverse `(key path, value)` entries to return settings
    values in a nested dictionary.
    '''
    results = {}
    if data[0][0]:
        for key, group in groupby([d for d in data if d[0]],
                                  lambda x: x[0][0]):
            group_data = list(group)
            results[key] = traverse([(item[0][1:], item[1])
                                     for item in group_data])
        return results
    else:
        return data[0][1]


def parse_config_lines(lines):
    '''
    Return a nested dictionary from `key.sub.key=value` lines.  Blank lines
    and lines starting with `#` are skipped.
    '''
    config_data = sorted([line.strip() for line in lines
                          if line.strip() and
                          not line.strip().startswith('#')])
    config_cleaned_data = []
    for d in config_data:
        if '=' in d:
            split_position = d.index('=')
            key = d[:split_position].strip().split('.')
            value = d[split_position + 1:].strip()
            config_cleaned_data.append([key, value])
    if not config_cleaned_data:
        return {}
    return traverse(config_cleaned_data)


def parse_config(config_path):
    '''
    Return a nested dictionary containing the settings stored in a
    `key.sub.key=value` formatted file.
    '''
    return parse_config_lines(path(config_path).lines())


def merge(a, b, path=None):
    '''
    Merge `b` into `a`; on conflicting leaves the value in `a` wins.
    '''
    if path is None:
        path = []
    for key in b:
        if key in a:
            if isinstance(a[key], dict) and isinstance(b[key], dict):
                merge(a[key], b[key], path + [str(key)])
            elif a[key] == b[key]:
                pass
            else:
                logger.debug('Conflict at %s, keeping `%s`',
                             '.'.join(path + [str(key)]), a[key])
        else:
            a[key] = deepcopy(b[key])
    return a


class RunConfig(namedtuple('RunConfig', 'input_path subcommand roots '
                           'output_format primes cap induced_cap method '
                           'random_count max_edges seed out_path dot_graph '
                           'dot_column dot_target include_all dump '
                           'corrupt')):
    '''
    Validated settings for one command line run.
    '''
    @property
    def prime(self):
        return self.primes[0]


def _split_list(value):
    if isinstance(value, (list, tuple)):
        return list(value)
    return [v.strip() for v in str(value).split(',') if v.strip()]


def build_run_config(subcommand, overrides=None, config_path=None,
                     input_path=None, **options):
    '''
    Return a `RunConfig` combining command line `overrides` (highest
    priority), the optional settings file and `DEFAULT_CONFIG`.

    `overrides` is a nested dictionary shaped like `DEFAULT_CONFIG`.
    '''
    if subcommand not in SUBCOMMANDS:
        raise ValueError('Unknown subcommand `%s`; expected one of %s' %
                         (subcommand, ', '.join(SUBCOMMANDS)))
    settings = deepcopy(overrides) if overrides else {}
    if config_path is not None:
        merge(settings, parse_config(config_path))
    merge(settings, DEFAULT_CONFIG)

    try:
        cap = int(settings['enumeration']['cap'])
        induced_cap = int(settings['induced']['cap'])
        primes = [int(p) for p in _split_list(settings['oracle']['primes'])]
        random_count = int(settings['random']['count'])
        max_edges = int(settings['random']['max_edges'])
        seed = int(settings['random']['seed'])
    except (TypeError, ValueError) as exception:
        raise ValueError('Invalid numeric setting: %s' % exception)
    if cap <= 0 or induced_cap <= 0:
        raise ValueError('Caps must be positive.')
    if random_count < 0 or max_edges <= 0:
        raise ValueError('Random corpus size and edge bound must be '
                         'positive.')
    if not primes:
        raise ValueError('At least one prime is required.')
    for p in primes:
        if p == 2 or not isprime(p):
            raise ValueError('`%s` is not an odd prime.' % p)
    output_format = settings['output']['format']
    if output_format not in OUTPUT_FORMATS:
        raise ValueError('Unknown output format `%s`' % output_format)

    return RunConfig(input_path=input_path, subcommand=subcommand,
                     roots=tuple(_split_list(options.get('roots') or [])),
                     output_format=output_format, primes=tuple(primes),
                     cap=cap, induced_cap=induced_cap,
                     method=options.get('method') or 'procedure',
                     random_count=random_count, max_edges=max_edges,
                     seed=seed, out_path=options.get('out_path'),
                     dot_graph=options.get('dot_graph') or 'dual',
                     dot_column=options.get('dot_column'),
                     dot_target=options.get('dot_target'),
                     include_all=bool(options.get('include_all')),
                     dump=bool(options.get('dump')),
                     corrupt=bool(options.get('corrupt')))
