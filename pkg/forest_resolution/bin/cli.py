from __future__ import absolute_import
from __future__ import print_function
from argparse import ArgumentParser
import json
import logging
import sys

from path_helpers import path

from ..betti import tables_to_json
from ..config import SUBCOMMANDS, build_run_config
from ..context import ForestContext, load_context
from ..dot import dual_graph_dot, forest_dot, morse_region_dot
from ..forest import ForestParseError, RankingError, random_forests
from ..morse import MorseRegionError, verify_d2_zero, verify_minimal
from ..oracle import taylor_basis
from ..symbols import (EnumerationCapError, SymbolClassError,
                       diagnosis_to_json, format_symbol, symbol_to_json)
from ..verify import verify_forest

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INVALID = 2
EXIT_DISAGREE = 3
EXIT_CAP = 4


class UsageError(Exception):
    pass


class CommandArgumentParser(ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, '%s: error: %s\n' % (self.prog, message))


def get_arg_parser():
    parser = CommandArgumentParser(
        prog='forest-resolution',
        description='Minimal free resolution of the edge ideal of a forest.')
    parser.add_argument('command', choices=SUBCOMMANDS)
    parser.add_argument('forest', type=path, nargs='?', default=None,
                        help='Edge-list file (one `a b` edge per line).')
    parser.add_argument('--root', default=None,
                        help='Root vertices, one per component '
                        '(`NAME[,NAME...]`).')
    parser.add_argument('--format', dest='output_format', default=None,
                        choices=('text', 'json', 'csv'))
    parser.add_argument('--prime', default=None,
                        help='Oracle prime(s), `P[,P2]`.')
    parser.add_argument('--cap', type=int, default=None,
                        help='Enumeration cap on the number of edges.')
    parser.add_argument('--induced-cap', type=int, default=None)
    parser.add_argument('--method', default='procedure',
                        choices=('procedure', 'filter', 'both'))
    parser.add_argument('--random', type=int, default=None, metavar='N',
                        help='Verify `N` seeded random forests.')
    parser.add_argument('--max-edges', type=int, default=None)
    parser.add_argument('--seed', type=int, default=None)
    parser.add_argument('--out', type=path, default=None)
    parser.add_argument('--config', type=path, default=None,
                        help='Settings file of `key.sub.key=value` lines.')
    parser.add_argument('--all', action='store_true',
                        help='`symbols`: diagnose every symbol.')
    parser.add_argument('--dump', action='store_true',
                        help='`resolution`: dump the matrix entries.')
    parser.add_argument('--corrupt', action='store_true',
                        help='`verify`: corrupt the complex first.')
    parser.add_argument('--graph', default='dual',
                        choices=('forest', 'dual', 'morse'))
    parser.add_argument('--column', default=None,
                        help='`dot --graph morse`: column symbol, e.g. '
                        '`0*1,2*3`.')
    parser.add_argument('--target', default=None)
    parser.add_argument('-v', '--verbose', action='count', default=0)
    return parser


def parse_args(args=None):
    '''
    Parses arguments, returns `(options, RunConfig)`.
    '''
    parser = get_arg_parser()
    options = parser.parse_args(args)

    overrides = {}
    if options.cap is not None:
        overrides.setdefault('enumeration', {})['cap'] = options.cap
    if options.induced_cap is not None:
        overrides.setdefault('induced', {})['cap'] = options.induced_cap
    if options.prime is not None:
        overrides.setdefault('oracle', {})['primes'] = options.prime
    if options.output_format is not None:
        overrides.setdefault('output', {})['format'] = options.output_format
    for key, value in (('count', options.random),
                       ('max_edges', options.max_edges),
                       ('seed', options.seed)):
        if value is not None:
            overrides.setdefault('random', {})[key] = value
    try:
        config = build_run_config(options.command, overrides,
                                  config_path=options.config,
                                  input_path=options.forest,
                                  roots=options.root, method=options.method,
                                  out_path=options.out,
                                  dot_graph=options.graph,
                                  dot_column=options.column,
                                  dot_target=options.target,
                                  include_all=options.all, dump=options.dump,
                                  corrupt=options.corrupt)
    except ValueError as exception:
        parser.error(str(exception))
    if config.input_path is None and not (config.subcommand == 'verify' and
                                          options.random is not None):
        parser.error('A forest file is required.')
    return options, config


def _context(config):
    return load_context(config.input_path, roots=config.roots or None,
                        cap=config.cap)


def cmd_symbols(config):
    '''
    Return `(exit code, output)` listing the F-admissible symbols.
    '''
    context = _context(config)
    s = context.sequence
    if config.method == 'filter':
        symbols = context.symbols_by_filter()
    else:
        symbols = context.symbols
    status = EXIT_OK
    if config.method == 'both' and \
            set(context.symbols_by_filter()) != set(symbols):
        logger.error('Procedure and filter enumerations differ.')
        status = EXIT_DISAGREE
    counts = {}
    for u in symbols:
        counts[len(u)] = counts.get(len(u), 0) + 1

    if config.output_format == 'json':
        document = {'sequence': [str(e) for e in s], 'method': config.method,
                    'agree': status == EXIT_OK,
                    'counts': dict((str(r), n)
                                   for r, n in sorted(counts.items())),
                    'symbols': [symbol_to_json(u, s) for u in symbols]}
        if config.include_all:
            document['diagnostics'] = [
                dict(diagnosis_to_json(context.diagnose(u), s),
                     symbol=symbol_to_json(u, s))
                for u in taylor_basis(s, config.cap)]
        return status, json.dumps(document, indent=2)
    lines = ['S = (%s)' % ', '.join(str(e) for e in s)]
    for r, n in sorted(counts.items()):
        lines.append('r=%d: %d' % (r, n))
    lines.extend(format_symbol(u, s) for u in symbols)
    if config.include_all:
        lines.append('')
        for u in taylor_basis(s, config.cap):
            diagnosis = context.diagnose(u)
            lines.append('%s %s gaps=[%s] bridges=[%s]' % (
                format_symbol(u, s), diagnosis.symbol_class,
                ', '.join(str(g.bridge) for g in diagnosis.gaps),
                ', '.join(str(s[p]) for p in diagnosis.bridges)))
    if config.method == 'both':
        lines.append('methods %s' % ('agree' if status == EXIT_OK
                                     else 'DISAGREE'))
    return status, '\n'.join(lines)


def cmd_betti(config):
    context = _context(config)
    multigraded, graded = context.betti()
    if config.output_format == 'json':
        return EXIT_OK, json.dumps(tables_to_json(multigraded, graded),
                                   indent=2)
    elif config.output_format == 'csv':
        return EXIT_OK, graded.to_frame().to_csv(index=False).rstrip('\n')
    return EXIT_OK, '%s\npd = %d' % (graded.to_text(), graded.pd)


def cmd_pd(config):
    context = _context(config)
    if config.output_format == 'json':
        return EXIT_OK, json.dumps({'pd': context.pd})
    return EXIT_OK, str(context.pd)


def cmd_resolution(config):
    context = _context(config)
    complex_ = context.complex
    d2_zero = verify_d2_zero(complex_)
    minimal = verify_minimal(complex_)
    status = EXIT_OK if d2_zero and minimal else EXIT_DISAGREE
    if config.output_format == 'json':
        document = complex_.to_json()
        document.update({'d2_zero': d2_zero, 'minimal': minimal})
        return status, json.dumps(document, indent=2)
    lines = ['ranks: %s' % ' '.join(map(str, complex_.ranks())),
             'd^2 = 0: %s' % d2_zero, 'minimal: %s' % minimal]
    if config.dump:
        lines.append(complex_.dump())
    return status, '\n'.join(lines)


def cmd_verify(config):
    if config.input_path is not None:
        contexts = [_context(config)]
    else:
        contexts = [ForestContext(forest, cap=config.cap)
                    for forest in random_forests(config.random_count,
                                                 config.max_edges,
                                                 config.seed)]
    reports = [verify_forest(context, primes=config.primes,
                             induced_cap=config.induced_cap,
                             corrupt=config.corrupt, seed=config.seed)
               for context in contexts]
    agree = all(report['agree'] for report in reports)
    status = EXIT_OK if agree else EXIT_DISAGREE
    if config.output_format == 'json':
        document = reports[0] if len(reports) == 1 else \
            {'agree': agree, 'count': len(reports), 'reports': reports}
        return status, json.dumps(document, indent=2)
    lines = []
    for i, report in enumerate(reports):
        lines.append('%d: %s pd=%d %s' % (
            i, ' '.join(report['forest'].strip().splitlines()),
            report['pd']['symbols'],
            'agree' if report['agree'] else
            'DISAGREE %s' % json.dumps(report['diffs'])))
    lines.append('%d/%d forests agree' %
                 (sum(r['agree'] for r in reports), len(reports)))
    return status, '\n'.join(lines)


def cmd_dot(config):
    context = _context(config)
    if config.dot_graph == 'forest':
        return EXIT_OK, forest_dot(context.ranking)
    elif config.dot_graph == 'dual':
        return EXIT_OK, dual_graph_dot(context.ranking, context.sequence,
                                       context.k_subgraphs())
    if config.dot_column is None:
        raise UsageError('`--graph morse` requires `--column`.')
    column = context.parse_symbol(config.dot_column)
    if column not in set(context.symbols) or not len(column):
        raise SymbolClassError('%s is not a nonempty F-admissible symbol' %
                               format_symbol(column, context.sequence))
    target = None
    if config.dot_target is not None:
        target = context.parse_symbol(config.dot_target)
    g = context.graph(column)
    if target is not None and target not in g:
        raise MorseRegionError('%s is not a cell of the region of %s' %
                               (format_symbol(target, context.sequence),
                                format_symbol(column, context.sequence)))
    return EXIT_OK, morse_region_dot(g, column, target)


COMMANDS = {'symbols': cmd_symbols, 'betti': cmd_betti, 'pd': cmd_pd,
            'resolution': cmd_resolution, 'verify': cmd_verify,
            'dot': cmd_dot}


def run(config):
    '''
    Return `(exit code, output text)` for a `RunConfig`.
    '''
    try:
        return COMMANDS[config.subcommand](config)
    except EnumerationCapError as exception:
        return EXIT_CAP, 'error: %s' % exception
    except UsageError as exception:
        return EXIT_USAGE, 'error: %s' % exception
    except (ForestParseError, RankingError, SymbolClassError,
            MorseRegionError, ValueError, IOError) as exception:
        return EXIT_INVALID, 'error: %s' % exception


def main(args=None):
    options, config = parse_args(args)
    level = [logging.WARNING, logging.INFO,
             logging.DEBUG][min(options.verbose, 2)]
    logging.basicConfig(level=level,
                        format='%(levelname)s %(name)s: %(message)s')
    status, output = run(config)
    if status in (EXIT_OK, EXIT_DISAGREE):
        if config.out_path is not None:
            config.out_path.write_text(output + '\n', encoding='utf8')
        else:
            print(output)
    else:
        print(output, file=sys.stderr)
    return status


if __name__ == '__main__':
    sys.exit(main())
