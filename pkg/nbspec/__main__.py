# -*- coding: utf-8 -*-
"""
This module provides the main command line interface to nbspec.
"""

import os
import sys
import json
import logging
import argparse


def _csv_list(text):
    return [item.strip() for item in text.split(',') if item.strip()]


def make_parser(**kwargs):
    """
    Generates the application's :class:`~argparse.ArgumentParser` instance.

    :param kwargs:  List of additional keyworded arguments to be passed into the :class:`~argparse.ArgumentParser`.
    :return:  A :class:`~argparse.ArgumentParser` instance.
    """
    from nbspec.config import CONVENTIONS, FORMATS, GROUPINGS
    from nbspec.theory import CHECKS
    from nbspec.walks import READINGS
    from nbspec.families import NAMED

    # Options shared by every subcommand
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--input', metavar='FILE', action='append', help='a graph6 file; may be repeated')
    common.add_argument('--graph6', metavar='STRING', action='append', help='a graph6 record; may be repeated')
    common.add_argument('--family', choices=sorted(NAMED), help='a named graph instead of --input or --graph6')
    common.add_argument('--config', metavar='FILE', action='append', help='a configuration file layered over the packaged defaults')
    common.add_argument('--operators', metavar='TAGS', type=_csv_list, help='comma separated operator tags among a, l, nba, nbl')
    common.add_argument('--precision', metavar='K', type=int, help='the number of decimals kept by spectral fingerprints')
    common.add_argument('--seed', metavar='S', type=int, help='the seed of every random generator')
    common.add_argument('--format', choices=FORMATS, help='the output format')
    common.add_argument('--nbl-convention', dest='nbl_convention', choices=CONVENTIONS, help='literal D~B, or laplacian I - D~B whose spectrum lies in the disc of radius 1 about 1 (defaults to the configured convention, literal)')
    verbosity = common.add_mutually_exclusive_group()
    verbosity.add_argument('-v', '--verbose', action='store_true', help='log debug messages')
    verbosity.add_argument('-q', '--quiet', action='store_true', help='log errors only')

    parser = argparse.ArgumentParser(**kwargs)
    subparsers = parser.add_subparsers(dest='subcommand', metavar='SUBCOMMAND')
    subparsers.required = True

    nb_parser = subparsers.add_parser('nb', help='non-backtracking graph utilities')
    nb_subparsers = nb_parser.add_subparsers(dest='action', metavar='ACTION')
    nb_subparsers.required = True
    build_parser = nb_subparsers.add_parser('build', parents=[common], help='emit a non-backtracking matrix as CSV')
    build_parser.add_argument('--matrix', choices=['b', 'd', 'l', 'lt', 'p'], default='b', help='B, the degree matrix, the Laplacian, its degree-robust variant or P')

    spectrum_parser = subparsers.add_parser('spectrum', parents=[common], help='emit rounded operator spectra')
    spectrum_parser.add_argument('--operator', metavar='TAG', action='append', help='an operator tag; may be repeated, defaults to --operators; nbl follows --nbl-convention')

    check_parser = subparsers.add_parser('check', parents=[common], help='run theorem checks')
    check_parser.add_argument('checks', metavar='CHECK', nargs='+', choices=list(CHECKS) + ['all'], help='checks among {}'.format(', '.join(list(CHECKS) + ['all'])))

    walk_parser = subparsers.add_parser('walk', parents=[common], help='non-backtracking walk probabilities')
    walk_parser.add_argument('--source', type=int, default=0, help='the start vertex')
    walk_parser.add_argument('--target', type=int, default=1, help='the end vertex')
    walk_parser.add_argument('--length', type=int, default=2, help='the walk length; the longest length with --formula-report')
    walk_parser.add_argument('--samples', type=int, default=100000, help='the number of simulated walks; 0 skips the simulation')
    walk_parser.add_argument('--reading', choices=READINGS, default='printed', help='the closed form reading')
    walk_parser.add_argument('--formula-report', dest='formula_report', action='store_true', help='compare every reading with the oracle over all pairs')

    census_parser = subparsers.add_parser('census', parents=[common], help='run the cospectrality census')
    census_parser.add_argument('--min-n', dest='min_n', metavar='N', type=int, help='the smallest vertex count of the built-in universe')
    census_parser.add_argument('--max-n', dest='max_n', metavar='N', type=int, help='the largest vertex count of the built-in universe')
    census_parser.add_argument('--min-degree', dest='min_degree', metavar='D', type=int, help='the minimum degree filter')
    census_parser.add_argument('--grouping', choices=GROUPINGS, help='the cospectrality grouping scope')
    census_parser.add_argument('--workers', metavar='W', type=int, help='the number of worker processes')
    census_parser.add_argument('--report', choices=['counts', 'pairs', 'mates'], default='counts', help='not determined counts, class-size-two percentages or the mate classes')

    scatter_parser = subparsers.add_parser('scatter', parents=[common], help='emit plot data of the non-backtracking spectra')
    scatter_parser.add_argument('--nodes', type=int, default=100, help='the vertex count of the random graph')
    scatter_parser.add_argument('--alpha', type=float, default=8.0, help='the expected degree of the random graph')

    return parser


def _configure_logging(args):
    logger = logging.getLogger('nbspec')
    if not any(getattr(h, '_nbspec', False) for h in logger.handlers):
        handler = logging.StreamHandler(sys.stderr)
        handler.setFormatter(logging.Formatter('%(levelname)s %(name)s: %(message)s'))
        handler._nbspec = True
        logger.addHandler(handler)
    logger.setLevel(logging.DEBUG if args.verbose else logging.ERROR if args.quiet else logging.WARNING)


def _run_config(args):
    from nbspec.config import RunConfig, load_config
    overrides = {
        'subcommand': args.subcommand,
        'inputs': args.input,
        'operators': args.operators,
        'precision': args.precision,
        'seed': args.seed,
        'format': args.format,
        'nbl_convention': args.nbl_convention,
    }
    for name in ('workers', 'grouping', 'min_n', 'max_n', 'min_degree'):
        overrides[name] = getattr(args, name, None)
    return RunConfig.from_section(load_config(args.config), **overrides)


def _graphs(args, required=True):
    from nbspec.graph import parse_graph6, read_graph6_file
    from nbspec.families import NAMED
    from nbspec.errors import PreconditionError
    graphs = [parse_graph6(g6) for g6 in args.graph6 or []]
    for path in args.input or []:
        if not os.path.isfile(path):
            raise PreconditionError('Input file [{}] not found'.format(path))
        graphs.extend(read_graph6_file(path))
    if args.family:
        graphs.append(NAMED[args.family]())
    if required and not graphs:
        raise PreconditionError('No graph given; use --input, --graph6 or --family')
    return graphs


def _write_matrix(out, m):
    import numpy as np
    np.savetxt(out, m, delimiter=',', fmt='%.17g')


def _nb_build(args, config, out):
    from nbspec import nb
    for g in _graphs(args):
        graph = nb.build_nb_graph(g)
        matrices = {
            'b': lambda: graph.adjacency,
            'd': lambda: nb.nb_degree_matrix(graph),
            'l': lambda: nb.nb_laplacian(graph),
            'lt': lambda: nb.nb_laplacian_tilde(graph, config.nbl_convention),
            'p': lambda: nb.parity_matrix(graph.edges.m),
        }
        _write_matrix(out, matrices[args.matrix]())
    return 0


def _spectrum(args, config, out):
    from nbspec.graph import write_graph6
    from nbspec.spectra import fingerprint, label, operator_spectrum
    entries = []
    for g in _graphs(args):
        for tag in args.operator or config.operators:
            fp = fingerprint(operator_spectrum(g, tag, config.nbl_convention), tag, config.precision)
            entries.append({'graph6': write_graph6(g), 'operator': tag, 'label': label(tag), 'precision': config.precision, 'eigenvalues': [list(z) for z in fp.rounded]})
    if config.format == 'json':
        out.write(json.dumps(entries, indent=2) + '\n')
        return 0
    spec = '{{:.{}f}}'.format(config.precision)
    if config.format == 'csv':
        out.write('graph6,operator,re,im\n')
        for e in entries:
            for re, im in e['eigenvalues']:
                out.write('{},{},{},{}\n'.format(e['graph6'], e['operator'], spec.format(re), spec.format(im)))
        return 0
    out.write('| graph6 | operator | eigenvalue |\n|---|---|---|\n')
    for e in entries:
        for re, im in e['eigenvalues']:
            out.write('| {} | {} | {} {} {}i |\n'.format(e['graph6'], e['label'], spec.format(re), '-' if im < 0 else '+', spec.format(abs(im))))
    return 0


def _check(args, config, out):
    from nbspec.theory import run_checks
    reports = []
    for g in _graphs(args):
        reports.extend(run_checks(g, args.checks, config.tolerances, config.seed))
    failures = [r for r in reports if r['pass'] is False]
    out.write(json.dumps({'pass': not failures, 'failures': len(failures), 'reports': reports}, indent=2) + '\n')
    return 1 if failures else 0


def _walk(args, config, out):
    from nbspec.graph import write_graph6
    from nbspec.walks import WalkQuery, closed_form_pn, exact_pn, simulate, walk_formula_report
    results = []
    for g in _graphs(args):
        if args.formula_report:
            results.append({'graph6': write_graph6(g), 'report': walk_formula_report(g, args.length, tolerance=config.tolerances.walk)})
            continue
        q = WalkQuery(args.source, args.target, args.length)
        exact = exact_pn(g, q)
        closed = closed_form_pn(g, q, args.reading)
        simulated, stderr = simulate(g, q, args.samples, config.seed) if args.samples else (None, None)
        results.append({
            'graph6': write_graph6(g),
            'source': q.source,
            'target': q.target,
            'n': q.length,
            'reading': args.reading,
            'exact': exact,
            'closed_form': None if closed is None else float(closed),
            'simulated': simulated,
            'stderr': stderr,
        })
    out.write(json.dumps(results, indent=2) + '\n')
    return 0


def _census(args, config, out):
    from nbspec.graph import dedupe
    from nbspec.census import CensusUniverse, format_table, run_census
    graphs = _graphs(args, required=False)
    if graphs:
        corpus = list(dedupe(graphs))
        min_degree = config.min_degree
    else:
        corpus = CensusUniverse(config.min_n, config.max_n, config.min_degree).graphs()
        min_degree = None
    table = run_census(corpus, config.operators, config.grouping, min_degree, config.precision, config.nbl_convention, config.workers)
    if args.report == 'mates':
        out.write(json.dumps({'metadata': table.metadata, 'classes': table.classes}, indent=2) + '\n')
    else:
        out.write(format_table(table, config.format, args.report))
    return 0


def _scatter(args, config, out):
    import math
    from nbspec.graph import write_graph6
    from nbspec.families import erdos_renyi
    from nbspec.spectra import operator_spectrum
    graphs = _graphs(args, required=False) or [erdos_renyi(args.nodes, args.alpha / (args.nodes - 1), config.seed)]
    radius = math.sqrt(args.alpha - 1.0) if args.alpha > 1 else float('nan')
    rows = []
    for g in graphs:
        key = write_graph6(g)
        rows.extend((key, 'nba', z.real, z.imag) for z in operator_spectrum(g, 'nba').values)
        rows.extend((key, 'nbl', z.real, z.imag) for z in operator_spectrum(g, 'nbl', 'laplacian').values)
    circles = {'nba': {'center': 0.0, 'radius': radius}, 'nbl': {'center': 1.0, 'radius': 1.0 / radius}}
    if config.format == 'json':
        out.write(json.dumps({'alpha': args.alpha, 'circles': circles, 'points': [list(r) for r in rows]}) + '\n')
        return 0
    out.write('# alpha: {}; nba circle radius: {!r}; nbl circle center 1 radius: {!r}\n'.format(args.alpha, radius, 1.0 / radius))
    out.write('graph6,operator,re,im\n')
    for key, tag, re, im in rows:
        out.write('{},{},{!r},{!r}\n'.format(key, tag, float(re), float(im)))
    return 0


_COMMANDS = {
    'nb': _nb_build,
    'spectrum': _spectrum,
    'check': _check,
    'walk': _walk,
    'census': _census,
    'scatter': _scatter,
}


def main(argv=None, out=None):
    """
    The entry point of the script.

    :param list argv: The command line including the program name; defaults to :data:`sys.argv`.
    :param obj  out:  The stream receiving the output; defaults to :data:`sys.stdout`.
    :return:          0 when every requested check passes, 1 on a failure and 2 on a usage error.
    """
    from nbspec.errors import NBSpecError

    # Special case to use the sys.argv when main called without a list.
    if argv is None:
        argv = sys.argv
    out = out or sys.stdout

    args = make_parser(prog='nbspec', description='Spectra of non-backtracking graphs and their Laplacians.').parse_args(argv[1:])
    _configure_logging(args)
    try:
        config = _run_config(args)
        return _COMMANDS[args.subcommand](args, config, out)
    except NBSpecError as e:
        logging.getLogger('nbspec').error('%s', e)
        report = {'pass': False, 'error': type(e).__name__, 'message': str(e)}
        if hasattr(e, 'report'):
            report['report'] = e.report
        out.write(json.dumps(report, indent=2) + '\n')
        return 1


if __name__ == "__main__":
    # To use this package as an application we need to correct the sys.path
    module_path = os.path.dirname(os.path.realpath(__file__))
    package_path = os.path.normpath(os.path.join(module_path, os.pardir))
    try:
        sys.path[sys.path.index(package_path)] = package_path
    except ValueError:
        sys.path.append(package_path)

    sys.exit(main(sys.argv))
