# -*- coding: utf-8 -*-
"""
This module provides the integration tests of the census tables over all graphs with at most seven vertices.

Rows for eight vertices need an external corpus: set NBSPEC_CORPUS_8 to a graph6 file with all graphs on eight
vertices (for example the output of ``geng 8``).
"""
import os
import logging
import unittest

from nbspec.census import CensusUniverse, run_census
from nbspec.graph import parse_graph6, read_graph6_file

#: The environment variable naming the graph6 file of all graphs on eight vertices.
CORPUS_8_ENVIRONMENT_VARIABLE = 'NBSPEC_CORPUS_8'

#: The census operators in table column order.
OPERATORS = ('a', 'l', 'nba', 'nbl')


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


def counts(table, n, operators=OPERATORS):
    return tuple(table.row(n, tag).not_determined_count for tag in operators)


class TestIntegrationAllGraphs(unittest.TestCase):
    """
    Tests the not determined counts over all graphs.

    The NB-A column counts every graph whose 2-core is shared, up to NB-A cospectrality, with another graph of the
    same vertex and edge counts; forests and graphs differing only in their pendant trees are exact mates.
    """

    @classmethod
    def setUpClass(cls):
        cls.table = run_census(CensusUniverse(2, 7).graphs(), workers=int(os.environ.get('NBSPEC_WORKERS', '1')))

    def test_universe(self):
        self.assertEqual([self.table.row(n, 'a').universe_size for n in range(2, 8)], [2, 4, 11, 34, 156, 1044])

    def test_five(self):
        self.assertEqual(counts(self.table, 5), (2, 12, 15, 8))

    def test_six(self):
        self.assertEqual(counts(self.table, 6), (10, 32, 75, 26))

    def test_seven(self):
        self.assertEqual(counts(self.table, 7), (110, 108, 449, 100))

    def test_cumulative(self):
        self.assertEqual(self.table.total([2, 3, 4], 'nba').not_determined_count, 4)

    def test_five_nb_classes(self):
        self.assertEqual(dict(self.table.row(5, 'nba').class_size_histogram), {2: 6, 3: 9})

    def test_laplacian_mates_across_edge_counts(self):
        edge_counts = [{parse_graph6(g6).m for g6 in members} for members in self.table.classes['l']]
        self.assertTrue(any(len(m) > 1 for m in edge_counts))

    def test_pairs_percentages(self):
        percentages = [self.table.row(7, tag).pairs_percentage() for tag in ('a', 'l', 'nbl')]
        for value, expected in zip(percentages, (94.55, 48.15, 46.00)):
            self.assertAlmostEqual(value, expected, places=2)
        self.assertEqual(self.table.row(7, 'nba').class_size_histogram[2], 42)

    def test_histograms_add_up(self):
        for (n, tag), row in self.table.rows.items():
            self.assertEqual(sum(row.class_size_histogram.values()), row.not_determined_count, (n, tag))


class TestIntegrationMinimumDegree(unittest.TestCase):
    """
    Tests the not determined counts over graphs with minimum degree at least two.
    """

    @classmethod
    def setUpClass(cls):
        cls.table = run_census(CensusUniverse(4, 7, 2).graphs())

    def test_six_or_less(self):
        self.assertEqual(tuple(self.table.total([4, 5, 6], tag).not_determined_count for tag in OPERATORS), (0, 2, 0, 0))

    def test_seven(self):
        self.assertEqual(self.table.row(7, 'a').universe_size, 510)
        self.assertEqual(counts(self.table, 7), (26, 4, 0, 0))

    def test_no_nbl_mates(self):
        self.assertEqual(self.table.classes['nbl'], [])


class TestIntegrationEdges(unittest.TestCase):
    """
    Tests the counts grouped by edge count.
    """

    def test_empty_and_single_edge(self):
        table = run_census(CensusUniverse(4, 7).graphs(), operators=['nba', 'nbl'], grouping='m')
        for tag in ('nba', 'nbl'):
            self.assertEqual(table.row(0, tag).not_determined_count, 4)
            self.assertEqual(table.row(1, tag).not_determined_count, 4)


@unittest.skipUnless(os.environ.get(CORPUS_8_ENVIRONMENT_VARIABLE), 'set {} to a graph6 file of all graphs on eight vertices'.format(CORPUS_8_ENVIRONMENT_VARIABLE))
class TestIntegrationEight(unittest.TestCase):
    """
    Tests the rows for eight vertices from an external corpus.
    """

    @classmethod
    def setUpClass(cls):
        corpus = list(read_graph6_file(os.environ[CORPUS_8_ENVIRONMENT_VARIABLE]))
        workers = int(os.environ.get('NBSPEC_WORKERS', '1'))
        cls.table = run_census(corpus, operators=['a', 'nba', 'nbl'], workers=workers)
        cls.cored = run_census(corpus, min_degree_filter=2, workers=workers)

    def test_universe(self):
        self.assertEqual(self.table.row(8, 'a').universe_size, 12346)
        self.assertEqual(self.cored.row(8, 'a').universe_size, 7459)

    def test_minimum_degree(self):
        self.assertEqual(counts(self.cored, 8), (744, 11, 2, 0))

    def test_pairs_percentages(self):
        percentages = [self.cored.row(8, tag).pairs_percentage() for tag in OPERATORS]
        for value, expected in zip(percentages[:3], (94.62, 72.73, 100.0)):
            self.assertAlmostEqual(value, expected, places=2)
        self.assertIsNone(percentages[3])


if __name__ == '__main__':
    unittest.main()
