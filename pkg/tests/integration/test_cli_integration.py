# -*- coding: utf-8 -*-
"""
This module provides the integration tests of the command line interface.
"""
import io
import os
import csv
import json
import logging
import unittest

from nbspec import __main__

#: Local path to the graph6 test data.
DATA = os.path.normpath(os.path.join(os.path.dirname(__file__), '..', 'data', 'graph6'))


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


def run(*argv):
    out = io.StringIO()
    result = __main__.main([__main__.__file__] + list(argv), out=out)
    return result, out.getvalue()


class TestIntegrationCheck(unittest.TestCase):
    """
    Tests the check subcommand.
    """

    def test_check_all(self):
        result, text = run('check', 'all', '--graph6', 'C~')
        self.assertEqual(result, 0)
        data = json.loads(text)
        self.assertTrue(data['pass'])
        self.assertEqual(data['failures'], 0)
        self.assertEqual(len(data['reports']), 10)

    def test_check_file(self):
        result, text = run('check', 'counts', 'gap', '--input', os.path.join(DATA, 'small.g6'))
        self.assertEqual(result, 0)
        self.assertEqual(len(json.loads(text)['reports']), 8)

    def test_check_family(self):
        result, _ = run('check', 'cycles', '--family', 'theta')
        self.assertEqual(result, 0)

    def test_malformed_input(self):
        result, text = run('check', 'all', '--input', os.path.join(DATA, 'malformed.g6'))
        self.assertEqual(result, 1)
        data = json.loads(text)
        self.assertEqual(data['error'], 'Graph6ParseError')
        self.assertIn('line 3', data['message'])

    def test_missing_input(self):
        result, text = run('check', 'all', '--input', os.path.join(DATA, 'missing.g6'))
        self.assertEqual(result, 1)
        self.assertEqual(json.loads(text)['error'], 'PreconditionError')

    def test_no_graph(self):
        result, _ = run('check', 'all')
        self.assertEqual(result, 1)

    def test_unknown_check(self):
        with self.assertRaises(SystemExit):
            run('check', 'nope', '--graph6', 'C~')


class TestIntegrationSpectrum(unittest.TestCase):
    """
    Tests the spectrum and nb subcommands.
    """

    def test_square_laplacian(self):
        result, text = run('spectrum', '--operator', 'nbl', '--nbl-convention', 'laplacian', '--format', 'json', '--graph6', 'Cl')
        self.assertEqual(result, 0)
        entry = json.loads(text)[0]
        self.assertEqual(entry['operator'], 'nbl')
        self.assertEqual(entry['eigenvalues'], [[0.0, 0.0], [0.0, 0.0], [1.0, -1.0], [1.0, -1.0], [1.0, 1.0], [1.0, 1.0], [2.0, 0.0], [2.0, 0.0]])

    def test_square_literal_default(self):
        result, text = run('spectrum', '--operator', 'nbl', '--format', 'json', '--graph6', 'Cl')
        self.assertEqual(result, 0)
        entry = json.loads(text)[0]
        self.assertEqual(entry['eigenvalues'], [[-1.0, 0.0], [-1.0, 0.0], [0.0, -1.0], [0.0, -1.0], [0.0, 1.0], [0.0, 1.0], [1.0, 0.0], [1.0, 0.0]])

    def test_csv(self):
        result, text = run('spectrum', '--operators', 'a', '--format', 'csv', '--graph6', 'Bw')
        self.assertEqual(result, 0)
        rows = list(csv.reader(io.StringIO(text)))
        self.assertEqual(rows[0], ['graph6', 'operator', 're', 'im'])
        self.assertEqual(rows[1:], [['Bw', 'a', '-1.000000', '0.000000'], ['Bw', 'a', '-1.000000', '0.000000'], ['Bw', 'a', '2.000000', '0.000000']])

    def test_markdown(self):
        result, text = run('spectrum', '--graph6', 'Bw', '--precision', '3')
        self.assertEqual(result, 0)
        self.assertIn('| Bw | NB-A | 1.000 + 0.000i |', text)

    def test_nb_build(self):
        result, text = run('nb', 'build', '--matrix', 'b', '--graph6', 'Bw')
        self.assertEqual(result, 0)
        rows = [line.split(',') for line in text.splitlines()]
        self.assertEqual(len(rows), 6)
        self.assertEqual(sum(float(x) for row in rows for x in row), 6.0)

    def test_nb_build_parity(self):
        result, text = run('nb', 'build', '--matrix', 'p', '--graph6', 'Bw')
        self.assertEqual(result, 0)
        self.assertEqual(text.splitlines()[0], '0,0,0,1,0,0')

    def test_nb_build_deficient(self):
        result, text = run('nb', 'build', '--matrix', 'l', '--graph6', 'Bg')
        self.assertEqual(result, 1)
        self.assertEqual(json.loads(text)['error'], 'DegreeDeficiencyError')


class TestIntegrationWalk(unittest.TestCase):
    """
    Tests the walk subcommand.
    """

    def test_walk(self):
        result, text = run('walk', '--graph6', 'Bw', '--source', '0', '--target', '2', '--length', '2', '--samples', '20000', '--seed', '4')
        self.assertEqual(result, 0)
        data = json.loads(text)[0]
        self.assertAlmostEqual(data['exact'], 0.5)
        self.assertAlmostEqual(data['closed_form'], 0.5)
        self.assertAlmostEqual(data['simulated'], 0.5, delta=0.02)

    def test_formula_report(self):
        result, text = run('walk', '--graph6', 'C~', '--length', '3', '--formula-report')
        self.assertEqual(result, 0)
        report = json.loads(text)[0]['report']
        self.assertEqual(len(report), 9)

    def test_walk_precondition(self):
        result, text = run('walk', '--graph6', 'Bg', '--samples', '0')
        self.assertEqual(result, 1)


class TestIntegrationCensus(unittest.TestCase):
    """
    Tests the census and scatter subcommands.
    """

    def test_census_json(self):
        result, text = run('census', '--min-n', '4', '--max-n', '6', '--min-degree', '2', '--format', 'json')
        self.assertEqual(result, 0)
        data = json.loads(text)
        self.assertEqual([row['graphs'] for row in data['rows']], [3, 11, 62])
        self.assertEqual(sum(row['NB-L~'] for row in data['rows']), 0)
        self.assertEqual(data['metadata']['grouping'], 'n')

    def test_census_input(self):
        result, text = run('census', '--input', os.path.join(DATA, 'duplicates.g6'), '--format', 'csv')
        self.assertEqual(result, 0)
        self.assertIn('4,1,0,0,0,0', text.splitlines())

    def test_census_mates(self):
        result, text = run('census', '--min-n', '2', '--max-n', '4', '--operators', 'nba', '--report', 'mates')
        self.assertEqual(result, 0)
        self.assertEqual(len(json.loads(text)['classes']['nba']), 2)

    def test_census_config(self):
        result, _ = run('census', '--config', os.path.join(DATA, 'missing.cfg'))
        self.assertEqual(result, 1)

    def test_scatter(self):
        result, text = run('scatter', '--nodes', '20', '--alpha', '4', '--format', 'json')
        self.assertEqual(result, 0)
        data = json.loads(text)
        self.assertAlmostEqual(data['circles']['nba']['radius'], 3 ** 0.5)
        self.assertTrue(data['points'])


if __name__ == '__main__':
    unittest.main()
