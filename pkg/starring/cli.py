"""Command line interface: ``starring analyze|graph|verify|corpus``.

Every invocation only depends on its arguments and the environment. Errors
print a single line on stderr and exit with status 2; ``verify`` and
``corpus`` exit with status 1 when a check is violated, and ``corpus`` also
when a classification breaks the implications between annihilator
conditions.
"""
import argparse
import logging
import sys
from . import config
from .config import ConfigurationError
from .corpus import DEFAULT_FACTORS, DEFAULT_MATRICES, CorpusSpec, run_corpus
from .exports import dumps, ring_report, write_graph, writer_factory
from .graph import GraphKind, build_graph, complement, strong_graph
from .ring import (InvolutionError, NonCommutativeBaseError, OrderLimitError,
                   UnknownElementError)
from .ringspec import RingSpecSyntaxError, build, describe
from .theorems import (UnknownConverseError, UnknownTheoremError, converses,
                       find_converse_counterexample, run_all)
from .validation import validate_star_ring


logger = logging.getLogger(__name__)

USER_ERRORS = (RingSpecSyntaxError, OrderLimitError, NonCommutativeBaseError,
               InvolutionError, UnknownElementError, UnknownTheoremError,
               UnknownConverseError, ConfigurationError, OSError, ValueError)


def _integers(text):
    try:
        return tuple(int(x) for x in text.split(',') if x.strip())
    except ValueError:
        raise argparse.ArgumentTypeError('expected integers separated by '
                                         'commas: {0!r}'.format(text))


def _specs(text):
    return tuple(x.strip() for x in text.split(',') if x.strip())


def build_parser():
    parser = argparse.ArgumentParser(
        prog='starring',
        description='Strong zero-divisor graphs of finite *-rings.')
    parser.add_argument('--max-order', type=int, default=None,
                        help='largest ring order accepted (overrides '
                             'STARRING_MAX_ORDER)')
    parser.add_argument('-v', '--verbose', action='count', default=0,
                        help='log progress (-v) or details (-vv)')
    commands = parser.add_subparsers(dest='command')
    commands.required = True

    analyze = commands.add_parser('analyze', help='classify a ring and '
                                                  'describe its graphs')
    analyze.add_argument('spec', help="ring specification, e.g. 'M2(Z6)@id'")
    analyze.add_argument('--json', action='store_true',
                         help='print the JSON report')
    analyze.add_argument('--validate', action='store_true',
                         help='also check the *-ring axioms')

    graph = commands.add_parser('graph', help='export a zero-divisor graph')
    graph.add_argument('spec')
    graph.add_argument('--kind', default=GraphKind.STRONG.value,
                       choices=[kind.value for kind in GraphKind])
    graph.add_argument('--complement', action='store_true')
    graph.add_argument('--format', default=None,
                       choices=sorted(writer_factory))
    graph.add_argument('--output', default=None,
                       help='output path, standard output by default')

    verify = commands.add_parser('verify', help='run the theorem checks on '
                                                'a ring')
    verify.add_argument('spec')
    verify.add_argument('--theorem', action='append', dest='theorems',
                        metavar='ID', help='check to run (repeatable), all '
                                           'by default')
    verify.add_argument('--json', action='store_true')

    corpus = commands.add_parser('corpus', help='run every check over a '
                                                'corpus of rings')
    corpus.add_argument('--zmod-max', type=int, default=100)
    corpus.add_argument('--product-order-max', type=int, default=256)
    corpus.add_argument('--factors', type=_integers,
                        default=DEFAULT_FACTORS,
                        help='moduli of the product factors, e.g. 2,3,4')
    corpus.add_argument('--matrix', type=_specs, dest='matrices',
                        default=tuple(describe(m) for m in DEFAULT_MATRICES),
                        help="matrix rings, e.g. 'M2(Z2)@id,M2(Z4)'")
    corpus.add_argument('--jobs', type=int, default=1)
    corpus.add_argument('--converses', action='store_true',
                        help='also search the converse counterexamples')
    corpus.add_argument('--no-validate', dest='validate',
                        action='store_false',
                        help='skip the *-ring axiom validation')
    corpus.add_argument('--json', action='store_true')
    return parser


def configure_logging(verbosity):
    level = {0: logging.WARNING, 1: logging.INFO}.get(verbosity,
                                                      logging.DEBUG)
    logging.basicConfig(level=level, stream=sys.stderr,
                        format='%(levelname)s %(name)s: %(message)s')


def _yes(flag):
    return 'yes' if flag else 'no'


def _graph_lines(title, summary):
    lines = ['{0}: {1} vertices, {2} edges, {3}, diameter {4}, girth {5}'
             .format(title, summary['vertices'], summary['edges'],
                     'connected' if summary['connected'] else 'disconnected',
                     _text(summary['diameter']), _text(summary['girth']))]
    sizes = summary['complete_bipartite']
    if sizes:
        lines.append('  complete bipartite: K({0},{1})'.format(*sizes))
    lines.append('  cut vertices: {0}'.format(
        ' '.join(summary['cut_vertices']) or '-'))
    lines.append('  pendants: {0}'.format(
        ' '.join(summary['pendants']) or '-'))
    return lines


def _text(value):
    return 'undefined' if value is None else str(value)


def _check_line(result):
    text = '{0}: {1}'.format(result['id'], result['status'])
    if result.get('vacuous'):
        text += ' (vacuous)'
    if 'hypothesis' in result:
        text += ' ({0})'.format(result['hypothesis'])
    if 'witness' in result and result['status'] == 'violated':
        text += ' {0}'.format(result['witness'])
    return text


def report_lines(report):
    """Human-readable lines of a ring report."""
    lines = ['spec: {0}'.format(report['spec']),
             'order: {0}'.format(report['order']),
             'involution proper: {0}'.format(
                 _yes(report['involution_proper']))]
    classification = report['classification']
    for name in ('rickart', 'baer', 'quasi_baer', 'pq_baer', 'semiproper'):
        lines.append('{0}: {1}'.format(name.replace('_', '-'),
                                       _yes(classification[name])))
    lines.append('central projections: {0}'.format(report['cp']['count']))
    lines.append('atoms: {0}'.format(' '.join(report['cp']['atoms']) or '-'))
    lines.extend(_graph_lines('strong graph', report['graphs']['strong']))
    lines.extend(_graph_lines('complement', report['graphs']['complement']))
    validation = report.get('validation')
    if validation is not None:
        failed = [k for k, ok in validation['axioms'].items() if not ok]
        lines.append('axioms: {0}'.format(
            'ok' if validation['ok'] else 'failed ' + ', '.join(failed)))
    lines.extend(_check_line(result) for result in report['checks'])
    return lines


def cmd_analyze(args):
    ring = build(args.spec)
    validation = validate_star_ring(ring) if args.validate else None
    report = ring_report(ring, spec=args.spec, validation=validation)
    _print_report(report, args.json)
    return 0 if validation is None or validation.ok else 1


def cmd_graph(args):
    ring = build(args.spec)
    kind = GraphKind(args.kind)
    graph = strong_graph(ring) if kind is GraphKind.STRONG \
        else build_graph(ring, kind=kind)
    if args.complement:
        graph = complement(graph)
    write_graph(graph, args.output, args.format)
    return 0


def cmd_verify(args):
    ring = build(args.spec)
    results = run_all(ring, args.theorems)
    report = ring_report(ring, spec=args.spec, checks=results)
    if args.json:
        print(dumps(report))
    else:
        print('spec: {0}'.format(args.spec))
        for line in report['checks']:
            print(_check_line(line))
    return 1 if any(result.violated for result in results) else 0


def cmd_corpus(args):
    corpus = CorpusSpec(zmod_max=args.zmod_max,
                        product_order_max=args.product_order_max,
                        factors=args.factors, matrices=args.matrices)
    summary = run_corpus(corpus, jobs=args.jobs, validate=args.validate)
    if args.converses:
        for converse_id in converses:
            summary.converses[converse_id] = \
                find_converse_counterexample(converse_id, corpus)
    if args.json:
        print(dumps(summary))
    else:
        print(summary)
    return 0 if summary.ok else 1


def _print_report(report, as_json):
    if as_json:
        print(dumps(report))
    else:
        print('\n'.join(report_lines(report)))


COMMANDS = {'analyze': cmd_analyze,
            'graph': cmd_graph,
            'verify': cmd_verify,
            'corpus': cmd_corpus}


def main(argv=None):
    """Runs the command line ``argv``, giving the exit status."""
    parser = build_parser()
    args = parser.parse_args(argv)
    configure_logging(args.verbose)
    saved = dict(config.global_overrides)
    try:
        if args.max_order is not None:
            if args.max_order < 1:
                raise ConfigurationError(name='--max-order',
                                         value=args.max_order,
                                         reason='expected a positive integer')
            config.global_overrides['max_order'] = args.max_order
        return COMMANDS[args.command](args)
    except USER_ERRORS as error:
        message = error.args[0] if error.args else str(error)
        print('starring: error: {0}'.format(message), file=sys.stderr)
        return 2
    finally:
        config.global_overrides.clear()
        config.global_overrides.update(saved)
