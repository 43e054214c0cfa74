# -*- coding: utf-8 -*-
"""
This module provides the unit tests of the theorem checks and the cycle eigenpair certificates.
"""
import json
import math
import logging
import unittest

from nbspec import families
from nbspec.errors import PreconditionError
from nbspec.graph import Graph
from nbspec.theory import (CHECKS, ChordlessCycle, ap_spectrum_exact, check_ap_spectrum, check_bauer_properties,
                           check_bipartite_transfer, check_connectivity_theorem, check_cycle_multiplicity, check_cycles,
                           check_gap_bound, check_node_edge_counts, check_pt_and_padjoint, check_regular_transfer,
                           cycle_eigenpair_hub, cycle_eigenpair_regular, cycle_mu, cycle_support_eigenpair,
                           find_chordless_cycles, find_tight_irregular, ihara_bass_check, run_checks, satisfies_balance)


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


class TestChordlessCycles(unittest.TestCase):
    """
    Tests the chordless cycle enumeration.
    """

    def test_counts(self):
        self.assertEqual(len(find_chordless_cycles(families.complete(4))), 4)
        self.assertEqual(len(find_chordless_cycles(families.complete_bipartite(3, 3))), 9)
        self.assertEqual(len(find_chordless_cycles(families.cycle(6))), 1)
        self.assertEqual(len(find_chordless_cycles(families.prism())), 5)
        self.assertEqual(len(find_chordless_cycles(families.theta())), 3)
        self.assertEqual(find_chordless_cycles(families.path(5)), [])

    def test_length_bound(self):
        self.assertEqual(len(find_chordless_cycles(families.prism(), max_len=3)), 2)
        with self.assertRaises(PreconditionError):
            find_chordless_cycles(families.prism(), max_len=2)

    def test_normalized(self):
        self.assertEqual(ChordlessCycle.normalized([2, 0, 1]).vertices, (0, 1, 2))
        self.assertEqual(ChordlessCycle.normalized([0, 2, 1]).vertices, (0, 1, 2))

    def test_validate(self):
        with self.assertRaises(PreconditionError):
            ChordlessCycle([0, 1, 2, 3]).validate(families.complete(4))
        with self.assertRaises(PreconditionError):
            ChordlessCycle([0, 2, 4]).validate(families.cycle(6))
        self.assertEqual(ChordlessCycle([0, 1, 2]).validate(families.complete(4)).length, 3)

    def test_relabelings(self):
        labelings = list(ChordlessCycle([0, 1, 2, 3]).relabelings())
        self.assertEqual(len(labelings), 8)
        self.assertIn((2, 1, 0, 3), labelings)


class TestCycleEigenpairs(unittest.TestCase):
    """
    Tests the eigenfunctions supported on chordless cycles.
    """

    def test_regular_triangle(self):
        certificate = cycle_eigenpair_regular(families.complete(4), (0, 1, 2), 3)
        self.assertAlmostEqual(certificate.lam, 0.5)
        self.assertTrue(certificate.certified)
        self.assertEqual(len(certificate.support), 6)

    def test_regular_even_cycle(self):
        g = families.complete_bipartite(3, 3)
        for sign, lam in (('-', 0.5), ('+', 1.5)):
            certificate = cycle_eigenpair_regular(g, (0, 3, 1, 4), 3, sign)
            self.assertAlmostEqual(certificate.lam, lam)
            self.assertTrue(certificate.certified, sign)

    def test_regular_cycle_graph(self):
        g = families.cycle(6)
        self.assertAlmostEqual(cycle_eigenpair_regular(g, range(6), 2, '-').lam, 0.0)
        self.assertTrue(cycle_eigenpair_regular(g, range(6), 2, '+').certified)

    def test_regular_preconditions(self):
        with self.assertRaises(PreconditionError):
            cycle_eigenpair_regular(families.complete(4), (0, 1, 2), 3, '+')
        with self.assertRaises(PreconditionError):
            cycle_eigenpair_regular(families.bowtie(), (0, 1, 2), 2)
        with self.assertRaises(PreconditionError):
            cycle_eigenpair_regular(families.complete(4), (0, 1, 2), 3, '*')

    def test_hub_triangle(self):
        certificate = cycle_eigenpair_hub(families.bowtie(), (1, 0, 2), 4)
        self.assertAlmostEqual(certificate.lam, 1.0 - 3.0 ** (-1.0 / 3.0))
        self.assertEqual(certificate.labeling[0], 0)
        self.assertTrue(certificate.certified)

    def test_hub_square(self):
        g = families.cycles_sharing_vertex(4)
        self.assertEqual(g.n, 7)
        for sign, lam in (('-', 1.0 - 3.0 ** -0.25), ('+', 1.0 + 3.0 ** -0.25)):
            certificate = cycle_eigenpair_hub(g, (0, 1, 2, 3), 4, sign)
            self.assertAlmostEqual(certificate.lam, lam)
            self.assertTrue(certificate.certified, sign)

    def test_hub_preconditions(self):
        with self.assertRaises(PreconditionError):
            cycle_eigenpair_hub(families.complete(4), (0, 1, 2), 3)

    def test_supported_balanced(self):
        g = families.theta()
        self.assertAlmostEqual(cycle_mu(g, (0, 1, 2, 6)), math.sqrt(2.0))
        certificate = cycle_support_eigenpair(g, (0, 1, 2, 6))
        self.assertAlmostEqual(certificate.lam, 1.0 - 1.0 / math.sqrt(2.0))
        self.assertTrue(certificate.certified)

    def test_supported_unbalanced(self):
        g = families.theta()
        mu = cycle_mu(g, (0, 1, 2, 3, 4, 5))
        self.assertFalse(satisfies_balance(g, (0, 1, 2, 3, 4, 5), mu))
        self.assertIsNone(cycle_support_eigenpair(g, (0, 1, 2, 3, 4, 5)))

    def test_supported_hub(self):
        certificate = cycle_support_eigenpair(families.bowtie(), (0, 1, 2))
        self.assertAlmostEqual(certificate.lam, 1.0 - 3.0 ** (-1.0 / 3.0))
        self.assertTrue(certificate.certified)

    def test_supported_cycle_component(self):
        g = Graph(8, [(0, 1), (1, 2), (2, 3), (0, 3), (4, 5), (4, 6), (4, 7), (5, 6), (5, 7), (6, 7)])
        certificate = cycle_support_eigenpair(g, (0, 1, 2, 3))
        self.assertAlmostEqual(certificate.lam, 0.0)
        self.assertTrue(certificate.certified)
        self.assertTrue(check_cycles(g)['pass'])

    def test_supported_cycle_graph(self):
        with self.assertRaises(PreconditionError):
            cycle_support_eigenpair(families.cycle(5), range(5))

    def test_certificate_dict(self):
        data = cycle_eigenpair_regular(families.complete(4), (0, 1, 2), 3).to_dict()
        self.assertTrue(data['certified'])
        self.assertEqual(data['labeling'], [0, 1, 2])
        json.dumps(data)


class TestSpectralChecks(unittest.TestCase):
    """
    Tests the spectral theorem checks on named graphs.
    """

    def test_ap_exact(self):
        spec = ap_spectrum_exact(families.complete(4))
        self.assertEqual(sorted(spec.values.real), [-1.0] * 8 + [2.0] * 4)
        with self.assertRaises(PreconditionError):
            ap_spectrum_exact(families.path(3))

    def test_ap(self):
        for g in (families.complete(4), families.bowtie(), families.theta(), families.petersen()):
            self.assertTrue(check_ap_spectrum(g)['pass'])
        self.assertIsNone(check_ap_spectrum(families.path(3))['pass'])

    def test_gap_regular(self):
        for g in (families.complete(4), families.cycle(6), families.petersen()):
            r = check_gap_bound(g)
            self.assertTrue(r['pass'])
            self.assertTrue(r['witness']['tight'])

    def test_gap_hub(self):
        r = check_gap_bound(families.bowtie())
        self.assertTrue(r['pass'])
        self.assertAlmostEqual(r['witness']['bound'], 1.0 / 3.0)

    def test_gap_tight_irregular(self):
        r = check_gap_bound(families.pendant_triangle())
        self.assertTrue(r['pass'])
        self.assertTrue(r['witness']['tight'])
        self.assertAlmostEqual(r['witness']['epsilon'], 0.5, places=8)
        found = list(find_tight_irregular([families.complete(4), families.pendant_triangle()]))
        self.assertEqual(found, [families.pendant_triangle()])

    def test_gap_skipped(self):
        self.assertIsNone(check_gap_bound(families.path(4))['pass'])

    def test_ihara(self):
        for g in (families.complete(4), families.cycle(5), families.petersen(), families.path(3), Graph(4, [(0, 1), (1, 2), (0, 2)]), Graph(0)):
            r = ihara_bass_check(g)
            self.assertTrue(r['pass'], r['witness'])

    def test_ihara_seeded(self):
        self.assertEqual(ihara_bass_check(families.bowtie(), seed=7), ihara_bass_check(families.bowtie(), seed=7))

    def test_pt(self):
        for g in (families.complete(4), families.petersen(), families.prism()):
            r = check_pt_and_padjoint(g)
            self.assertTrue(r['pass'], r['witness'])
            self.assertEqual(r['witness']['adjacency'], 0.0)

    def test_bauer(self):
        for g in (families.complete(4), families.petersen(), families.bowtie()):
            r = check_bauer_properties(g)
            self.assertTrue(r['pass'], r['witness'])
            self.assertEqual(r['witness']['zero_multiplicity'], 1)

    def test_bauer_disconnected(self):
        g = Graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
        r = check_bauer_properties(g)
        self.assertTrue(r['pass'], r['witness'])
        self.assertEqual(r['witness']['zero_multiplicity'], 4)


class TestStructuralChecks(unittest.TestCase):
    """
    Tests the structural theorem checks on named graphs.
    """

    def test_counts(self):
        r = check_node_edge_counts(families.complete(4))
        self.assertTrue(r['pass'])
        self.assertEqual((r['witness']['nodes'], r['witness']['arcs']), (12, 24))

    def test_connectivity(self):
        r = check_connectivity_theorem(families.cycle(7))
        self.assertTrue(r['pass'])
        self.assertEqual((r['witness']['weak'], r['witness']['strong']), (2, 2))
        for g in (families.complete(4), families.bowtie(), families.theta()):
            self.assertTrue(check_connectivity_theorem(g)['pass'])

    def test_connectivity_skipped(self):
        self.assertIsNone(check_connectivity_theorem(Graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]))['pass'])
        self.assertIsNone(check_connectivity_theorem(families.path(3))['pass'])

    def test_bipartite(self):
        for g in (families.cycle(6), families.complete_bipartite(3, 3)):
            r = check_bipartite_transfer(g)
            self.assertTrue(r['pass'], r['witness'])
            self.assertTrue(r['witness']['contains_two'])
        for g in (families.complete(4), families.petersen(), families.path(4)):
            self.assertTrue(check_bipartite_transfer(g)['pass'])

    def test_regular(self):
        for g in (families.complete(4), families.petersen(), families.bowtie(), Graph(5, [(0, 1), (1, 2), (0, 2)])):
            r = check_regular_transfer(g)
            self.assertTrue(r['pass'], r['witness'])
        self.assertIsNone(check_regular_transfer(Graph(3))['pass'])

    def test_multiplicity_dependent_cycles(self):
        r = check_cycle_multiplicity(families.complete(4), 3)
        self.assertTrue(r['pass'])
        minus = r['witness']['minus']
        self.assertEqual((minus['cycles'], minus['rank'], minus['geometric'], minus['algebraic']), (4, 3, 3, 3))
        self.assertEqual(r['witness']['plus']['cycles'], 0)

    def test_multiplicity_prism(self):
        r = check_cycle_multiplicity(families.prism(), 3)
        self.assertTrue(r['pass'])
        self.assertEqual(r['witness']['minus']['cycles'], 5)
        self.assertEqual(r['witness']['plus']['cycles'], 3)
        self.assertLessEqual(r['witness']['minus']['rank'], r['witness']['minus']['geometric'])

    def test_cycles(self):
        for g in (families.complete(4), families.bowtie(), families.theta(), families.cycles_sharing_vertex(4), families.pendant_triangle()):
            r = check_cycles(g)
            self.assertTrue(r['pass'], r['witness'])
        self.assertEqual(check_cycles(families.theta())['witness']['certificates'], 1)


class TestRunChecks(unittest.TestCase):
    """
    Tests the check runner.
    """

    def test_all_pass(self):
        reports = run_checks(families.complete(4))
        self.assertEqual([r['check'] for r in reports], list(CHECKS))
        self.assertTrue(all(r['pass'] for r in reports))
        self.assertTrue(all(r['graph6'] == 'C~' for r in reports))

    def test_skipped(self):
        reports = run_checks(families.path(3))
        self.assertNotIn(False, [r['pass'] for r in reports])
        self.assertIn(None, [r['pass'] for r in reports])

    def test_selection(self):
        reports = run_checks(families.petersen(), ['gap', 'ap'])
        self.assertEqual([r['check'] for r in reports], ['gap', 'ap'])

    def test_unknown(self):
        with self.assertRaises(PreconditionError):
            run_checks(families.petersen(), ['nope'])

    def test_json_ready(self):
        json.dumps(run_checks(families.bowtie()))


if __name__ == '__main__':
    unittest.main()
