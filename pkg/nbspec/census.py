# -*- coding: utf-8 -*-
"""
This module provides the exhaustive cospectrality census: every graph of a corpus is fingerprinted under the requested operators, fingerprints are grouped into cospectrality classes and the class statistics are tabulated.
"""

import io
import csv
import json
import logging
import functools
import collections
import concurrent.futures

from nbspec.errors import PreconditionError
from nbspec.graph import GENERATOR_MAX_N, generate_nonisomorphic, remove_isolated, write_graph6
from nbspec.nb import OPERATOR_LABELS, OPERATOR_TAGS
from nbspec.spectra import ROUNDING, fingerprint, operator_spectrum

#: The grouping scopes: by vertex and edge count, by vertex count, by edge count and over the whole corpus.
GROUPINGS = ('nm', 'n', 'm', 'global')

#: The L convention for isolated vertices recorded in the metadata.
ISOLATED_L_CONVENTION = 'identity-row'

logger = logging.getLogger(__name__)


class CensusUniverse(object):
    """
    CensusUniverse describes the built-in corpus: all graphs with min_n <= N <= max_n and minimum degree at least min_degree.

    :ivar int min_n:      The smallest vertex count.
    :ivar int max_n:      The largest vertex count.
    :ivar int min_degree: The minimum degree filter.
    """

    def __init__(self, min_n=1, max_n=GENERATOR_MAX_N, min_degree=0):
        if min_n < 0 or max_n < min_n:
            raise PreconditionError('Invalid vertex range [{}, {}]'.format(min_n, max_n))
        self.min_n = min_n
        self.max_n = max_n
        self.min_degree = min_degree

    def __repr__(self):
        return 'CensusUniverse(min_n={}, max_n={}, min_degree={})'.format(self.min_n, self.max_n, self.min_degree)

    def graphs(self):
        for n in range(self.min_n, self.max_n + 1):
            for g in generate_nonisomorphic(n, self.min_degree):
                yield g


class CensusRecord(object):
    """
    CensusRecord holds the fingerprints of one graph.

    :ivar str  graph6:       The graph6 key of the graph.
    :ivar int  n:            The vertex count of the graph.
    :ivar int  m:            The edge count.
    :ivar int  nb_n:         The vertex count after removing degree-0 vertices, used by the non-backtracking operators.
    :ivar dict fingerprints: The :class:`~nbspec.spectra.SpectralFingerprint` of every operator tag.
    """

    def __init__(self, graph6, n, m, nb_n, fingerprints):
        self.graph6 = graph6
        self.n = n
        self.m = m
        self.nb_n = nb_n
        self.fingerprints = fingerprints

    def __repr__(self):
        return 'CensusRecord({!r}, n={}, m={})'.format(self.graph6, self.n, self.m)

    def scope(self, grouping):
        """
        Returns the part of the grouping key fixed by the grouping scope.
        """
        return {'nm': (self.n, self.m), 'n': (self.n,), 'm': (self.m,), 'global': ()}[grouping]


def build_record(g, operators=OPERATOR_TAGS, precision=6, convention='literal'):
    """
    Fingerprints one graph under every requested operator.

    :param Graph g:          A graph.
    :param list  operators:  The operator tags.
    :param int   precision:  The fingerprint precision.
    :param str   convention: The ``nbl`` convention.
    :return:                 A :class:`CensusRecord` instance.
    """
    fingerprints = {tag: fingerprint(operator_spectrum(g, tag, convention), tag, precision) for tag in operators}
    return CensusRecord(write_graph6(g), g.n, g.m, remove_isolated(g).n, fingerprints)


class CensusRow(object):
    """
    CensusRow holds the statistics of one (N or M, operator) cell.

    :ivar int  universe_size:         The number of graphs in the row.
    :ivar int  not_determined_count:  The number of graphs with at least one cospectral mate.
    :ivar dict class_size_histogram:  Maps a class size to the number of graphs of the row lying in classes of that size.
    """

    def __init__(self):
        self.universe_size = 0
        self.not_determined_count = 0
        self.class_size_histogram = collections.Counter()

    def __repr__(self):
        return 'CensusRow({}/{})'.format(self.not_determined_count, self.universe_size)

    def pairs_percentage(self):
        """
        Returns the percentage of not determined graphs lying in classes of size exactly 2, or None when there are none.
        """
        if not self.not_determined_count:
            return None
        return 100.0 * self.class_size_histogram.get(2, 0) / self.not_determined_count


class CensusTable(object):
    """
    CensusTable is the outcome of a census run.

    :ivar list operators: The operator tags.
    :ivar str  grouping:  The grouping scope.
    :ivar dict rows:      Maps (N or M, operator tag) to :class:`CensusRow`.
    :ivar dict classes:   Maps an operator tag to its cospectrality classes of size at least 2, as sorted graph6 lists.
    :ivar dict metadata:  The precision, rounding and conventions of the run.
    """

    def __init__(self, operators, grouping, metadata):
        self.operators = list(operators)
        self.grouping = grouping
        self.rows = collections.OrderedDict()
        self.classes = {tag: [] for tag in operators}
        self.metadata = metadata

    @property
    def key_name(self):
        return 'M' if self.grouping == 'm' else 'N'

    def keys(self):
        return sorted({key for key, _ in self.rows})

    def row(self, key, tag):
        return self.rows.get((key, tag)) or CensusRow()

    def total(self, keys, tag):
        """
        Returns the row obtained by adding the rows of several keys, as the cumulative rows of the published tables.
        """
        total = CensusRow()
        for key in keys:
            row = self.row(key, tag)
            total.universe_size += row.universe_size
            total.not_determined_count += row.not_determined_count
            total.class_size_histogram.update(row.class_size_histogram)
        return total


def _fingerprint_corpus(graphs, operators, precision, convention, workers):
    build = functools.partial(build_record, operators=operators, precision=precision, convention=convention)
    if workers <= 1:
        return [build(g) for g in graphs]
    chunksize = max(1, len(graphs) // (workers * 8))
    logger.info('Fingerprinting %d graphs on %d workers in shards of %d', len(graphs), workers, chunksize)
    with concurrent.futures.ProcessPoolExecutor(max_workers=workers) as executor:
        return list(executor.map(build, graphs, chunksize=chunksize))


def run_census(corpus, operators=OPERATOR_TAGS, grouping='n', min_degree_filter=None, precision=6, convention='literal', workers=1):
    """
    Runs the cospectrality census over a graph corpus.

    A graph is not determined by its X-spectrum when its X-fingerprint equals the fingerprint of another graph with
    the same grouping scope. Rows are keyed by the vertex count, or by the edge count for the ``m`` grouping; both
    are taken before degree-0 vertices are removed.

    Fingerprint keys carry the matrix dimension, so under the default ``n`` grouping the non-backtracking operators
    (dimension 2M) are compared within the same (N, M) while A and L mates may differ in M.

    :param iterable corpus:            The :class:`~nbspec.graph.Graph` instances, pairwise non-isomorphic.
    :param list     operators:         The operator tags.
    :param str      grouping:          One of :data:`GROUPINGS`.
    :param int      min_degree_filter: Skips graphs with a smaller minimum degree when given.
    :param int      precision:         The fingerprint precision.
    :param str      convention:        The ``nbl`` convention.
    :param int      workers:           The number of worker processes.
    :return:                           A :class:`CensusTable` instance.
    """
    if grouping not in GROUPINGS:
        raise PreconditionError('Grouping [{}] not in [{}]'.format(grouping, ', '.join(GROUPINGS)))
    unknown = [tag for tag in operators if tag not in OPERATOR_TAGS]
    if unknown:
        raise PreconditionError('Operators [{}] not in [{}]'.format(', '.join(unknown), ', '.join(OPERATOR_TAGS)))
    graphs = [g for g in corpus if min_degree_filter is None or (g.n and g.min_degree >= min_degree_filter)]
    logger.info('Census over %d graphs, operators %s, grouping %s', len(graphs), ','.join(operators), grouping)

    records = sorted(_fingerprint_corpus(graphs, operators, precision, convention, workers), key=lambda r: (r.n, r.m, r.graph6))
    table = CensusTable(operators, grouping, {
        'precision': precision,
        'rounding': ROUNDING,
        'nbl_convention': convention,
        'grouping': grouping,
        'l_isolated': ISOLATED_L_CONVENTION,
    })
    for tag in operators:
        groups = collections.defaultdict(list)
        for record in records:
            groups[(record.scope(grouping), record.fingerprints[tag].key())].append(record)
        for record in records:
            key = record.m if grouping == 'm' else record.n
            table.rows.setdefault((key, tag), CensusRow()).universe_size += 1
        for members in groups.values():
            size = len(members)
            if size < 2:
                continue
            table.classes[tag].append(sorted(r.graph6 for r in members))
            for record in members:
                row = table.rows[(record.m if grouping == 'm' else record.n, tag)]
                row.not_determined_count += 1
                row.class_size_histogram[size] += 1
        table.classes[tag].sort()
        logger.info('Operator %s: %d cospectrality classes of size at least 2', tag, len(table.classes[tag]))
    table.rows = collections.OrderedDict(sorted(table.rows.items(), key=lambda item: (item[0][0], OPERATOR_TAGS.index(item[0][1]))))
    return table


def class_size_report(table):
    """
    Returns the percentage of not determined graphs lying in classes of size two for every row; None marks an empty row.
    """
    return {key: row.pairs_percentage() for key, row in table.rows.items()}


def by_edges_report(table):
    """
    Returns the not determined counts per edge count.

    :param CensusTable table: A census run with the ``m`` grouping.
    :return:                  A dict mapping (M, operator tag) to the count.
    """
    if table.grouping != 'm':
        raise PreconditionError('Edge count report needs the m grouping, not [{}]'.format(table.grouping))
    return {key: row.not_determined_count for key, row in table.rows.items()}


def list_mates(table, tag):
    """
    Returns the cospectrality classes of an operator as sorted lists of graph6 keys.
    """
    if tag not in table.classes:
        raise PreconditionError('Operator [{}] not in census run [{}]'.format(tag, ', '.join(table.operators)))
    return [list(c) for c in table.classes[tag]]


def cross_operator_check(table, tag, others):
    """
    Checks that every pair of mates under one operator is a pair of mates under each of the other operators.

    :return: A dict with the pass flag and the violating (operator, graph6, graph6) triples.
    """
    violations = []
    for other in others:
        index = {}
        for k, members in enumerate(list_mates(table, other)):
            index.update((g6, k) for g6 in members)
        for members in list_mates(table, tag):
            for a, b in zip(members, members[1:]):
                if a not in index or index.get(a) != index.get(b):
                    violations.append((other, a, b))
    return {'check': 'cross-operator', 'operator': tag, 'others': list(others), 'pass': not violations, 'violations': violations}


def table_rows(table, report='counts'):
    """
    Returns the table as a list of dicts, one per N or M.

    :param CensusTable table:  A census run.
    :param str         report: ``counts`` for the not determined counts, ``pairs`` for the class-size-two percentages.
    :return:                   The rows.
    """
    rows = []
    for key in table.keys():
        first = table.row(key, table.operators[0])
        row = collections.OrderedDict([(table.key_name, key), ('graphs', first.universe_size)])
        for tag in table.operators:
            cell = table.row(key, tag)
            if report == 'pairs':
                percentage = cell.pairs_percentage()
                row[OPERATOR_LABELS[tag]] = None if percentage is None else round(percentage, 2)
            else:
                row[OPERATOR_LABELS[tag]] = cell.not_determined_count
        rows.append(row)
    return rows


def format_table(table, fmt='md', report='counts'):
    """
    Renders the table as CSV, Markdown or JSON with the metadata header.

    :param CensusTable table:  A census run.
    :param str         fmt:    One of ``csv``, ``md`` and ``json``.
    :param str         report: See :func:`table_rows`.
    :return:                   The rendered text.
    """
    rows = table_rows(table, report)
    if fmt == 'json':
        return json.dumps({'metadata': table.metadata, 'rows': rows, 'classes': table.classes}, indent=2, sort_keys=False)

    header = [table.key_name, 'graphs'] + [OPERATOR_LABELS[tag] for tag in table.operators]
    meta = ['{}: {}'.format(k, v) for k, v in table.metadata.items()]

    def cell(value):
        if value is None:
            return '---'
        return '{:.2f}'.format(value) if isinstance(value, float) else str(value)

    if fmt == 'csv':
        out = io.StringIO()
        for line in meta:
            out.write('# {}\n'.format(line))
        writer = csv.writer(out, lineterminator='\n')
        writer.writerow(header)
        for row in rows:
            writer.writerow([cell(v) for v in row.values()])
        return out.getvalue()
    if fmt == 'md':
        lines = ['<!-- {} -->'.format('; '.join(meta)), '| ' + ' | '.join(header) + ' |', '|' + '---|' * len(header)]
        lines.extend('| ' + ' | '.join(cell(v) for v in row.values()) + ' |' for row in rows)
        return '\n'.join(lines) + '\n'
    raise PreconditionError('Format [{}] not in [csv, md, json]'.format(fmt))
