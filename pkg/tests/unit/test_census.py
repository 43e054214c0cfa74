# -*- coding: utf-8 -*-
"""
This module provides the unit tests of the cospectrality census on small universes.
"""
import json
import logging
import unittest

from nbspec import families
from nbspec.census import (CensusUniverse, build_record, by_edges_report, class_size_report, cross_operator_check,
                           format_table, list_mates, run_census, table_rows)
from nbspec.errors import PreconditionError
from nbspec.graph import Graph, parse_graph6


def setUpModule():
    """
    The module specific setUp method
    """
    logging.disable(logging.CRITICAL)


def tearDownModule():
    """
    The module specific tearDown method
    """
    logging.disable(logging.NOTSET)


class TestUniverse(unittest.TestCase):
    """
    Tests the built-in census universes.
    """

    def test_sizes(self):
        self.assertEqual(sum(1 for _ in CensusUniverse(2, 4).graphs()), 17)
        self.assertEqual(sum(1 for _ in CensusUniverse(4, 6, 2).graphs()), 76)

    def test_invalid_range(self):
        with self.assertRaises(PreconditionError):
            CensusUniverse(5, 4)


class TestRecord(unittest.TestCase):
    """
    Tests the per graph fingerprints.
    """

    def test_record(self):
        record = build_record(Graph(5, [(0, 1), (1, 2), (0, 2)]))
        self.assertEqual((record.n, record.m, record.nb_n), (5, 3, 3))
        self.assertEqual(record.fingerprints['a'].dimension, 5)
        self.assertEqual(record.fingerprints['nba'].dimension, 6)
        self.assertEqual(record.scope('nm'), (5, 3))
        self.assertEqual(record.scope('global'), ())

    def test_trees_share_nb_fingerprint(self):
        trees = [families.path(5), families.complete_bipartite(1, 4), Graph(5, [(0, 1), (1, 2), (2, 3), (1, 4)])]
        keys = {build_record(g, operators=['nba']).fingerprints['nba'].key() for g in trees}
        self.assertEqual(len(keys), 1)

    def test_pendant_trees_share_nb_fingerprint(self):
        triangle = [(0, 1), (1, 2), (0, 2)]
        graphs = [
            Graph(5, triangle + [(0, 3), (1, 4)]),
            Graph(5, triangle + [(0, 3), (0, 4)]),
            Graph(5, triangle + [(0, 3), (3, 4)]),
        ]
        keys = {build_record(g, operators=['nba']).fingerprints['nba'].key() for g in graphs}
        self.assertEqual(len(keys), 1)
        self.assertNotEqual(keys, {build_record(families.cycle(5), operators=['nba']).fingerprints['nba'].key()})


class TestCensus(unittest.TestCase):
    """
    Tests the census over small universes.
    """

    @classmethod
    def setUpClass(cls):
        cls.small = list(CensusUniverse(2, 4).graphs())
        cls.cored = list(CensusUniverse(4, 6, 2).graphs())

    def test_small_universe(self):
        table = run_census(self.small)
        self.assertEqual(table.total(table.keys(), 'nba').not_determined_count, 4)
        self.assertEqual(table.total(table.keys(), 'a').not_determined_count, 0)
        self.assertEqual(table.total(table.keys(), 'a').universe_size, 17)

    def test_small_universe_mates(self):
        table = run_census(self.small, operators=['nba'])
        mates = list_mates(table, 'nba')
        self.assertEqual([len(c) for c in mates], [2, 2])
        self.assertEqual(dict(table.row(4, 'nba').class_size_histogram), {2: 4})
        self.assertEqual(class_size_report(table)[(4, 'nba')], 100.0)
        self.assertIsNone(class_size_report(table)[(2, 'nba')])

    def test_minimum_degree_universe(self):
        table = run_census(self.cored)
        counts = [table.total([4, 5, 6], tag).not_determined_count for tag in ('a', 'l', 'nba', 'nbl')]
        self.assertEqual(counts, [0, 2, 0, 0])
        self.assertEqual(table.total([4, 5, 6], 'a').universe_size, 76)
        mates = list_mates(table, 'l')
        self.assertEqual(len(mates), 1)
        self.assertEqual(len({parse_graph6(g6).m for g6 in mates[0]}), 2)

    def test_edge_count_split_grouping(self):
        table = run_census(self.cored, operators=['l'], grouping='nm')
        self.assertEqual(table.total([4, 5, 6], 'l').not_determined_count, 0)

    def test_min_degree_filter(self):
        table = run_census(CensusUniverse(4, 5).graphs(), operators=['a'], min_degree_filter=2)
        self.assertEqual([table.row(n, 'a').universe_size for n in (4, 5)], [3, 11])

    def test_order_independent(self):
        forward = run_census(self.cored, operators=['l', 'nbl'])
        backward = run_census(reversed(self.cored), operators=['l', 'nbl'])
        self.assertEqual(forward.classes, backward.classes)
        self.assertEqual(table_rows(forward), table_rows(backward))

    def test_convention_invariant(self):
        literal = run_census(self.cored, operators=['nbl'], convention='literal')
        laplacian = run_census(self.cored, operators=['nbl'], convention='laplacian')
        self.assertEqual(literal.classes, laplacian.classes)
        self.assertEqual(literal.metadata['nbl_convention'], 'literal')

    def test_workers(self):
        serial = run_census(self.small, operators=['nba', 'nbl'])
        parallel = run_census(self.small, operators=['nba', 'nbl'], workers=2)
        self.assertEqual(serial.classes, parallel.classes)
        self.assertEqual(table_rows(serial), table_rows(parallel))

    def test_edge_grouping(self):
        table = run_census(CensusUniverse(4, 5).graphs(), operators=['a', 'nba', 'nbl'], grouping='m')
        counts = by_edges_report(table)
        self.assertEqual(counts[(0, 'nba')], 2)
        self.assertEqual(counts[(1, 'nba')], 2)
        self.assertEqual(counts[(1, 'nbl')], 2)
        self.assertEqual(counts[(0, 'a')], 0)
        self.assertEqual(table.key_name, 'M')

    def test_edge_report_needs_edge_grouping(self):
        with self.assertRaises(PreconditionError):
            by_edges_report(run_census(self.small, operators=['a']))

    def test_coarse_grouping(self):
        fine = run_census(self.small, operators=['nba'])
        coarse = run_census(self.small, operators=['nba'], grouping='global')
        self.assertLessEqual(fine.total(fine.keys(), 'nba').not_determined_count, coarse.total(coarse.keys(), 'nba').not_determined_count)

    def test_cross_operator(self):
        table = run_census([families.cycle(4), Graph(4, [(0, 1), (2, 3)]), Graph(4, [(0, 1), (1, 2)])], operators=['nba', 'nbl'])
        result = cross_operator_check(table, 'nba', ['nbl'])
        self.assertTrue(result['pass'])
        self.assertEqual(result['violations'], [])

    def test_invalid(self):
        with self.assertRaises(PreconditionError):
            run_census(self.small, grouping='x')
        with self.assertRaises(PreconditionError):
            run_census(self.small, operators=['x'])
        with self.assertRaises(PreconditionError):
            list_mates(run_census(self.small, operators=['a']), 'nba')


class TestFormat(unittest.TestCase):
    """
    Tests the rendered census tables.
    """

    @classmethod
    def setUpClass(cls):
        cls.table = run_census(CensusUniverse(2, 4).graphs())

    def test_markdown(self):
        text = format_table(self.table, 'md')
        self.assertTrue(text.startswith('<!-- precision: 6; rounding: half-away-from-zero'))
        self.assertIn('| N | graphs | A | L | NB-A | NB-L~ |', text)
        self.assertIn('| 4 | 11 |', text)

    def test_csv(self):
        lines = format_table(self.table, 'csv').splitlines()
        self.assertEqual(lines[0], '# precision: 6')
        self.assertIn('N,graphs,A,L,NB-A,NB-L~', lines)

    def test_json(self):
        data = json.loads(format_table(self.table, 'json'))
        self.assertEqual(data['metadata']['l_isolated'], 'identity-row')
        self.assertEqual([row['N'] for row in data['rows']], [2, 3, 4])

    def test_pairs(self):
        text = format_table(self.table, 'md', report='pairs')
        self.assertIn('---', text.splitlines()[3])

    def test_unknown_format(self):
        with self.assertRaises(PreconditionError):
            format_table(self.table, 'xml')


if __name__ == '__main__':
    unittest.main()
