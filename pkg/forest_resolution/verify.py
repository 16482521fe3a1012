from __future__ import absolute_import
import logging
import time

from .betti import (betti_by_induced_subgraphs, component_tables,
                    jacques_betti, jacques_pd, tables_to_json)
from .context import ForestContext
from .forest import RankingError, root_choices
from .morse import (check_matching, corrupt_complex, verify_acyclic,
                    verify_d2_zero, verify_minimal)
from .oracle import (DEFAULT_PRIMES, betti_via_homology, compare_tables,
                     lyubeznik_basis, taylor_basis)
from .symbols import format_symbol

logger = logging.getLogger(__name__)


def _diffs(label, t1, t2, names):
    return [dict(diff, routes=label) for diff in compare_tables(t1, t2,
                                                                names)]


def verify_forest(context, primes=DEFAULT_PRIMES, induced_cap=16,
                  n_roots=3, corrupt=False, seed=0):
    '''
    Return an agreement report comparing every route to the Betti numbers
    of `context.forest`.

    The report holds the tables of each route, the projective dimension
    checks, the complex checks (`d^2 = 0`, minimality, acyclic regions,
    matching) and root/component invariance.  `agree` is `True` iff every
    check passes and `diffs` is empty.
    '''
    started = time.time()
    s = context.sequence
    multigraded, graded = context.betti()
    diffs = []
    routes = {'symbols': tables_to_json(multigraded, graded)}

    taylor = lyubeznik = None
    for p in primes:
        taylor_p = betti_via_homology(taylor_basis(s, context.cap), s, p)
        lyubeznik_p = betti_via_homology(lyubeznik_basis(s, context.cap), s,
                                         p)
        diffs += _diffs('symbols/taylor@%d' % p, multigraded, taylor_p,
                        ('symbols', 'taylor'))
        diffs += _diffs('taylor/lyubeznik@%d' % p, taylor_p, lyubeznik_p,
                        ('taylor', 'lyubeznik'))
        if taylor is None:
            taylor, lyubeznik = taylor_p, lyubeznik_p
        else:
            diffs += _diffs('taylor@%d/taylor@%d' % (primes[0], p), taylor,
                            taylor_p, ('first', 'second'))
    routes['taylor'] = tables_to_json(taylor)
    routes['lyubeznik'] = tables_to_json(lyubeznik)

    jacques = jacques_betti(context.forest, context.ranking.variable_order)
    routes['jacques'] = jacques.to_json()
    diffs += _diffs('symbols/jacques', graded, jacques,
                    ('symbols', 'jacques'))
    induced = betti_by_induced_subgraphs(context.forest, induced_cap)
    routes['induced'] = induced.to_json()
    diffs += _diffs('symbols/induced', graded, induced,
                    ('symbols', 'induced'))

    if any(value not in (0, 1) for value in multigraded.entries.values()):
        diffs.append({'routes': 'symbols', 'error': 'multigraded value '
                      'outside {0, 1}'})
    supports = [u.multidegree for u in context.symbols]
    if len(set(supports)) != len(supports):
        diffs.append({'routes': 'symbols',
                      'error': 'repeated multidegree'})

    pd = context.pd
    bouquet = context.bouquet_values()
    pd_report = {'symbols': pd,
                 'jacques': jacques_pd(context.forest,
                                       context.ranking.variable_order),
                 'bouquet': max(value for u, value in bouquet),
                 'bouquet_mismatches': [format_symbol(u, s)
                                        for u, value in bouquet
                                        if value != len(u)]}
    if len(set([pd_report['symbols'], pd_report['jacques'],
                pd_report['bouquet']])) != 1 or \
            pd_report['bouquet_mismatches']:
        diffs.append({'routes': 'pd', 'error': 'projective dimension '
                      'mismatch'})

    complex_ = context.complex
    if corrupt:
        complex_ = corrupt_complex(complex_)
    graphs = [context.graph(u) for u in context.symbols if len(u)]
    matching_problems = [problem for g in graphs
                         for problem in check_matching(g)]
    complex_report = {'d2_zero': verify_d2_zero(complex_),
                      'minimal': verify_minimal(complex_),
                      'acyclic': all(verify_acyclic(g) for g in graphs),
                      'matching': not matching_problems,
                      'ranks': complex_.ranks()}
    for check in ('d2_zero', 'minimal', 'acyclic', 'matching'):
        if not complex_report[check]:
            diffs.append({'routes': 'complex', 'error': '%s failed' %
                          check})
    expected_ranks = [sum(v for (i, d), v in graded.entries.items() if i == r)
                      for r in range(graded.pd + 1)]
    if complex_.ranks() != expected_ranks:
        diffs.append({'routes': 'complex', 'error': 'ranks differ from the '
                      'Betti table'})

    invariance = {'roots': [], 'components': True}
    for roots in root_choices(context.forest, n_roots, seed):
        try:
            rerooted = ForestContext(context.forest, roots=roots,
                                     cap=context.cap)
        except RankingError as exception:
            logger.info('Skipping roots %s: %s', roots, exception)
            continue
        invariance['roots'].append(list(rerooted.roots))
        diffs += _diffs('roots %s' % ','.join(rerooted.roots), graded,
                        rerooted.betti()[1], ('symbols', 'rerooted'))
    components = component_tables(context.forest)
    if components:
        product = components[0]
        for table in components[1:]:
            product = product.convolve(table)
        if compare_tables(product, multigraded):
            invariance['components'] = False
            diffs.append({'routes': 'components',
                          'error': 'component convolution mismatch'})

    report = {'forest': context.forest.to_text(),
              'roots': list(context.roots),
              'routes': routes, 'pd': pd_report, 'complex': complex_report,
              'invariance': invariance, 'agree': not diffs, 'diffs': diffs}
    logger.info('verified %r in %.2fs: %s', context.forest,
                time.time() - started,
                'agree' if report['agree'] else '%d diffs' % len(diffs))
    return report
