# -*- coding: utf-8 -*-
"""
This module provides the probabilities of non-backtracking random walks seen from the vertices: the closed vertex-level formulas, an exact oracle lifted to the oriented edges and a seeded Monte Carlo simulator.

A walk of length n starts at v0 on a uniformly chosen incident edge and then moves to a uniformly chosen edge that
does not reverse the current one.
"""

import logging
import itertools
import collections
from fractions import Fraction

import numpy as np

from nbspec.errors import PreconditionError
from nbspec.graph import write_graph6
from nbspec.nb import build_nb_graph, transition_matrix

#: The closed-form readings understood by :func:`closed_form_pn`.
READINGS = ('printed', 'shifted', 'walk_sum')

logger = logging.getLogger(__name__)


class WalkQuery(collections.namedtuple('WalkQuery', ['source', 'target', 'length'])):
    """
    WalkQuery asks for the probability that a walk of the given length from source ends at target.
    """
    __slots__ = ()

    def validate(self, g):
        if not (0 <= self.source < g.n and 0 <= self.target < g.n):
            raise PreconditionError('Vertices [{}, {}] outside [0, {})'.format(self.source, self.target, g.n))
        if self.length < 1:
            raise PreconditionError('Walk length must be at least 1, not {}'.format(self.length))
        if g.min_degree < 2:
            raise PreconditionError('Graph {} has minimum degree {} < 2'.format(write_graph6(g), g.min_degree))
        return self


def exact_pn(g, q, exact=False):
    """
    Computes the walk probability by pushing the start distribution through the edge transition matrix.

    :param Graph     g:     A graph with minimum degree at least 2.
    :param WalkQuery q:     The query.
    :param bool      exact: When True the computation runs in rational arithmetic and returns a :class:`~fractions.Fraction`.
    :return:                The probability.
    """
    q = WalkQuery(*q).validate(g)
    nb = build_nb_graph(g)
    inp, out = nb.edges.inp, nb.edges.out
    start = np.flatnonzero(inp == q.source)
    end = out == q.target
    if exact:
        successors = [np.flatnonzero(row).tolist() for row in nb.adjacency]
        mass = {int(e): Fraction(1, len(start)) for e in start}
        for _ in range(q.length - 1):
            step = collections.defaultdict(Fraction)
            for e, p in mass.items():
                share = p / len(successors[e])
                for f in successors[e]:
                    step[f] += share
            mass = step
        return sum((p for e, p in mass.items() if end[e]), Fraction(0))
    x = np.zeros(nb.node_count)
    x[start] = 1.0 / len(start)
    x = x @ np.linalg.matrix_power(transition_matrix(nb), q.length - 1)
    return float(x[end].sum())


def _walks(g, length, source, target):
    """
    Yields the non-backtracking vertex sequences v0 ... vn from source to target.
    """
    def extend(walk):
        if len(walk) == length + 1:
            if walk[-1] == target:
                yield walk
            return
        for w in g.neighbors(walk[-1]):
            if len(walk) < 2 or w != walk[-2]:
                yield from extend(walk + [w])
    yield from extend([source])


class _Undefined(Exception):
    pass


def _inv(x):
    if x == 0:
        raise _Undefined()
    return Fraction(1, x)


def _common(g, u, v):
    return len(g.neighbor_set(u) & g.neighbor_set(v))


def _a(g, u, v):
    return 1 if g.has_edge(u, v) else 0


def _printed(g, v0, vn, n, shifted=False):
    deg = g.degree
    nbr = g.neighbor_set
    if n == 1:
        return Fraction(_a(g, v0, vn), deg(v0))
    if n == 2:
        if v0 == vn:
            return Fraction(0)
        return sum((_inv(deg(v0)) * _inv(deg(v1) - 1) for v1 in nbr(v0) & nbr(vn)), Fraction(0))
    if n == 3:
        total = Fraction(0)
        for v1 in nbr(v0) - {vn}:
            for v2 in (nbr(v1) & nbr(vn)) - {v0}:
                total += _inv(deg(v0) - _a(g, v0, vn)) * _inv(_common(g, v1, vn) - _a(g, vn, v0)) * _inv(deg(v2) - 1)
        return total
    if n == 4:
        total = Fraction(0)
        for v1 in nbr(v0):
            for v2 in nbr(v1) - {v0, vn}:
                for v3 in (nbr(v2) & nbr(vn)) - {v1}:
                    total += _inv(deg(v0)) * _inv(deg(v1) - 1 - _a(g, v1, vn)) * _inv(_common(g, v2, vn) - _a(g, vn, v1)) * _inv(deg(v3) - 1)
        return total

    total = Fraction(0)

    def prefixes(walk):
        # v1 ... v_{n-3}, each avoiding the vertex two steps back
        if len(walk) == n - 2:
            yield walk
            return
        for w in nbr(walk[-1]):
            if len(walk) < 2 or w != walk[-2]:
                yield from prefixes(walk + [w])

    for walk in prefixes([v0]):
        u = walk[n - 3]
        for w in nbr(u) - {walk[n - 4], vn}:
            for x in (nbr(w) & nbr(vn)) - {u}:
                term = _inv(deg(v0))
                for i in range(2, n - 2):
                    term *= _inv(deg(walk[i - 1]) - 1)
                term *= _inv(deg(u) - 1 - _a(g, u, vn))
                term *= _inv(_common(g, w, vn) - _a(g, w if shifted else u, vn))
                term *= _inv(deg(x) - 1)
                total += term
    return total


def closed_form_pn(g, q, reading='printed'):
    """
    Evaluates a vertex-level closed form of the walk probability.

    ``printed`` evaluates the displayed formulas for n = 1 ... 4 and the general n >= 5 sum term by term, ``shifted``
    replaces the subtracted adjacency term of the general sum by A(v_{n-2}, v_n) and ``walk_sum`` sums
    1/deg v0 times the product of 1/(deg v_i - 1) over all non-backtracking vertex sequences.

    :param Graph     g:       A graph with minimum degree at least 2.
    :param WalkQuery q:       The query.
    :param str       reading: One of :data:`READINGS`.
    :return:                  A :class:`~fractions.Fraction`, or None when a denominator of the reading vanishes.
    """
    q = WalkQuery(*q).validate(g)
    if reading not in READINGS:
        raise PreconditionError('Reading [{}] not in [{}]'.format(reading, ', '.join(READINGS)))
    if reading == 'walk_sum':
        total = Fraction(0)
        for walk in _walks(g, q.length, q.source, q.target):
            term = Fraction(1, g.degree(walk[0]))
            for v in walk[1:-1]:
                term /= g.degree(v) - 1
            total += term
        return total
    try:
        return _printed(g, q.source, q.target, q.length, shifted=reading == 'shifted')
    except _Undefined:
        return None


def walk_formula_report(g, max_length=8, readings=READINGS, tolerance=1e-12):
    """
    Compares every closed-form reading with the exact oracle over all vertex pairs and lengths.

    :param Graph g:          A graph with minimum degree at least 2.
    :param int   max_length: The longest walk length.
    :param list  readings:   The readings compared.
    :param float tolerance:  The largest deviation counted as a match.
    :return:                 A list of ``{reading, n, queries, matches, undefined, worst, counterexample}`` dicts.
    """
    rows = []
    for reading in readings:
        for n in range(1, max_length + 1):
            row = {'reading': reading, 'n': n, 'queries': 0, 'matches': 0, 'undefined': 0, 'worst': 0.0, 'counterexample': None}
            for s, t in itertools.product(range(g.n), repeat=2):
                q = WalkQuery(s, t, n)
                exact = exact_pn(g, q, exact=True)
                value = closed_form_pn(g, q, reading)
                row['queries'] += 1
                if value is None:
                    row['undefined'] += 1
                    continue
                deviation = float(abs(value - exact))
                if deviation <= tolerance:
                    row['matches'] += 1
                elif row['counterexample'] is None:
                    row['counterexample'] = {'source': s, 'target': t, 'exact': str(exact), 'closed_form': str(value)}
                row['worst'] = max(row['worst'], deviation)
            if row['matches'] != row['queries']:
                logger.info('Reading %s disagrees with the oracle at n=%d on %s', reading, n, write_graph6(g))
            rows.append(row)
    return rows


def simulate(g, q, samples, seed=0):
    """
    Estimates the walk probability by Monte Carlo simulation.

    :param Graph     g:       A graph with minimum degree at least 2.
    :param WalkQuery q:       The query.
    :param int       samples: The number of simulated walks.
    :param int       seed:    The generator seed.
    :return:                  A (estimate, standard error) tuple.
    """
    q = WalkQuery(*q).validate(g)
    if samples < 1:
        raise PreconditionError('Sample count must be at least 1, not {}'.format(samples))
    nb = build_nb_graph(g)
    rng = np.random.default_rng(seed)
    successors = np.zeros((nb.node_count, max(1, int(nb.nb_degrees.max()))), dtype=int)
    for e, row in enumerate(nb.adjacency):
        targets = np.flatnonzero(row)
        successors[e, :targets.size] = targets
    start = np.flatnonzero(nb.edges.inp == q.source)
    state = start[rng.integers(0, start.size, samples)]
    for _ in range(q.length - 1):
        choice = np.floor(rng.random(samples) * nb.nb_degrees[state]).astype(int)
        state = successors[state, choice]
    hits = int(np.count_nonzero(nb.edges.out[state] == q.target))
    estimate = hits / samples
    return estimate, float(np.sqrt(estimate * (1.0 - estimate) / samples))
