# -*- coding: utf-8 -*-
"""
This module provides executable verifiers for the structural and spectral properties of non-backtracking graphs and their Laplacians.

Every check returns a JSON-ready report ``{check, graph6, pass, witness}``; ``pass`` is None when the graph does not
meet the precondition of the check.
"""

import math
import logging

import numpy as np
import scipy.linalg
import networkx as nx

from nbspec.config import TOLERANCES
from nbspec.errors import CheckFailure, PreconditionError
from nbspec.graph import components, degrees, is_bipartite, is_cycle_graph, remove_isolated, write_graph6
from nbspec.nb import ap_matrix, build_nb_graph, nb_components, nb_laplacian, parity_matrix
from nbspec.spectra import ComplexSpectrum, count_near, eigenpairs, eigenvalues, match_multisets, spectral_gap_from_one

#: The checks run by ``check all``, in order.
CHECKS = ('counts', 'connectivity', 'bipartite', 'regular', 'bauer', 'pt', 'ap', 'gap', 'ihara', 'cycles')

logger = logging.getLogger(__name__)


def _jsonable(value):
    if isinstance(value, dict):
        return {k: _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, np.ndarray):
        return _jsonable(value.tolist())
    if isinstance(value, (complex, np.complexfloating)):
        return [float(value.real), float(value.imag)]
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (float, np.floating)):
        return float(value)
    return value


def report(check, g, passed, **witness):
    """
    Builds a check report.

    :param str   check:  The check name.
    :param Graph g:      The checked graph.
    :param bool  passed: True, False, or None for a skipped check.
    :param       witness: The measured quantities.
    :return:             A JSON-ready dict.
    """
    return {'check': check, 'graph6': write_graph6(g), 'pass': None if passed is None else bool(passed), 'witness': _jsonable(witness)}


def _skip(check, g, reason):
    return report(check, g, None, skipped=reason)


def _require_min_degree(g, minimum=2):
    if g.n == 0 or g.min_degree < minimum:
        raise PreconditionError('Graph {} has minimum degree {} < {}'.format(write_graph6(g), g.min_degree if g.n else 0, minimum))


def _laplacian_spectrum(g):
    nb = build_nb_graph(g)
    laplacian = nb_laplacian(nb)
    return nb, laplacian, eigenvalues(laplacian)


class ChordlessCycle(object):
    """
    ChordlessCycle is a simple cycle c_1 ... c_l without chords.

    :ivar tuple vertices: The cycle vertices in cyclic order.
    """

    def __init__(self, vertices):
        self.vertices = tuple(int(v) for v in vertices)

    def __len__(self):
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)

    def __eq__(self, other):
        return isinstance(other, ChordlessCycle) and self.vertices == other.vertices

    def __hash__(self):
        return hash(self.vertices)

    def __repr__(self):
        return 'ChordlessCycle({})'.format(list(self.vertices))

    @classmethod
    def normalized(cls, vertices):
        """
        Creates the cycle rotated to start at its smallest vertex, oriented towards the smaller neighbour.
        """
        vertices = list(vertices)
        k = vertices.index(min(vertices))
        vertices = vertices[k:] + vertices[:k]
        if len(vertices) > 2 and vertices[-1] < vertices[1]:
            vertices = vertices[:1] + vertices[1:][::-1]
        return cls(vertices)

    @property
    def length(self):
        return len(self.vertices)

    def validate(self, g):
        """
        Checks that the vertices form a chordless cycle of g.

        :raises PreconditionError: otherwise.
        """
        c = self.vertices
        if len(c) < 3 or len(set(c)) != len(c):
            raise PreconditionError('{} is not a simple cycle'.format(self))
        for i, u in enumerate(c):
            for j in range(i + 1, len(c)):
                consecutive = j == i + 1 or (i == 0 and j == len(c) - 1)
                if g.has_edge(u, c[j]) != consecutive:
                    raise PreconditionError('{} is not a chordless cycle: vertices {} and {} {}'.format(self, u, c[j], 'are not adjacent' if consecutive else 'form a chord'))
        return self

    def relabelings(self):
        """
        Yields the rotations and reflections of the vertex order.
        """
        c = list(self.vertices)
        for sequence in (c, [c[0]] + c[1:][::-1]):
            for k in range(len(sequence)):
                yield tuple(sequence[k:] + sequence[:k])


class EigenpairCertificate(object):
    """
    EigenpairCertificate is an explicit eigenfunction of the non-backtracking Laplacian and its residual.

    :ivar complex    lam:       The eigenvalue.
    :ivar np.ndarray f:         The eigenfunction over the oriented edges.
    :ivar float      residual:  The residual |Lf - lam f|_inf / |f|_inf.
    :ivar frozenset  support:   The oriented edge indices where f is nonzero.
    :ivar tuple      labeling:  The cycle labeling the eigenfunction was built from.
    :ivar float      tolerance: The largest residual accepted.
    """

    def __init__(self, lam, f, residual, labeling, tolerance):
        self.lam = lam
        self.f = f
        self.residual = residual
        self.support = frozenset(int(i) for i in np.flatnonzero(f))
        self.labeling = tuple(labeling)
        self.tolerance = tolerance

    def __repr__(self):
        return 'EigenpairCertificate(lam={:.6f}, residual={:.3g})'.format(self.lam, self.residual)

    @property
    def certified(self):
        return self.residual <= self.tolerance

    def to_dict(self):
        return _jsonable({'lambda': self.lam, 'residual': self.residual, 'certified': self.certified, 'labeling': self.labeling, 'support': sorted(self.support)})


def find_chordless_cycles(g, max_len=None):
    """
    Finds the chordless cycles of g up to the given length.

    :param Graph g:       A graph.
    :param int   max_len: The longest cycle length; defaults to n.
    :return:              A sorted list of :class:`ChordlessCycle`, each cycle once up to rotation and reflection.
    """
    max_len = max(g.n, 3) if max_len is None else max_len
    if max_len < 3:
        raise PreconditionError('Cycle length bound must be at least 3, not {}'.format(max_len))
    found = set()
    for c in nx.chordless_cycles(g.to_networkx(), length_bound=max_len):
        if len(c) >= 3:
            found.add(ChordlessCycle.normalized(c))
    return sorted(found, key=lambda c: (c.length, c.vertices))


def _signed(sign):
    if sign in ('-', '−', -1):
        return -1
    if sign in ('+', 1):
        return 1
    raise PreconditionError('Sign must be + or -, not [{}]'.format(sign))


def _support_function(nb, labeling, mu, sign):
    """
    Builds the eigenfunction supported on the two oriented lifts of a cycle.

    The forward lift carries f([c_{i-1}, c_i]) = mu / (deg c_i - 1) f([c_i, c_{i+1}]) with f([c_1, c_2]) = 1, the
    backward lift f([c_{i+1}, c_i]) = mu / (deg c_i - 1) f([c_i, c_{i-1}]) with f([c_1, c_l]) = -1. The + sign flips f on
    the oriented edges leaving c_1, c_3, ...
    """
    g, edges = nb.graph, nb.edges
    c = labeling
    length = len(c)
    factor = [mu / (g.degree(v) - 1) for v in c]
    forward = [edges.index(c[k], c[(k + 1) % length]) for k in range(length)]
    backward = [edges.index(c[(k + 1) % length], c[k]) for k in range(length)]

    fval = [0.0] * length
    fval[0] = 1.0
    for k in range(length - 1, 0, -1):
        fval[k] = factor[(k + 1) % length] * fval[(k + 1) % length]
    bval = [0.0] * length
    bval[length - 1] = -1.0
    for k in range(length - 1):
        bval[k] = factor[k] * bval[k - 1]

    if sign > 0:
        for k in range(0, length, 2):
            fval[k] = -fval[k]
            bval[k - 1] = -bval[k - 1]

    f = np.zeros(nb.node_count)
    f[forward] = fval
    f[backward] = bval
    return f


def _certify(laplacian, f, lam, labeling, tolerance):
    residual = float(np.max(np.abs(laplacian @ f - lam * f)) / np.max(np.abs(f)))
    return EigenpairCertificate(lam, f, residual, labeling, tolerance)


def cycle_eigenpair_regular(g, c, d, sign='-', tolerances=None):
    """
    Certifies the eigenvalue 1 -+ 1/(d-1) produced by a chordless cycle whose vertices all have degree d.

    :param Graph          g:    A graph with minimum degree at least 2.
    :param ChordlessCycle c:    The cycle.
    :param int            d:    The common degree of the cycle vertices.
    :param str            sign: ``-`` for 1 - 1/(d-1), ``+`` for 1 + 1/(d-1); ``+`` requires an even cycle.
    :return:                    An :class:`EigenpairCertificate` instance.
    """
    tolerances = tolerances or TOLERANCES
    s = _signed(sign)
    c = ChordlessCycle(c).validate(g)
    _require_min_degree(g)
    if d < 2 or any(g.degree(v) != d for v in c):
        raise PreconditionError('Cycle {} is not {}-regular: degrees {}'.format(list(c), d, [g.degree(v) for v in c]))
    if s > 0 and c.length % 2:
        raise PreconditionError('Sign + requires an even cycle, not length {}'.format(c.length))
    nb = build_nb_graph(g)
    lam = 1.0 + s / (d - 1)
    f = _support_function(nb, c.vertices, float(d - 1), s)
    return _certify(nb_laplacian(nb), f, lam, c.vertices, tolerances.certificate)


def cycle_eigenpair_hub(g, c, d, sign='-', tolerances=None):
    """
    Certifies the eigenvalue 1 -+ (d-1)^(-1/l) produced by a chordless cycle with one vertex of degree d > 2 and all others of degree 2.
    """
    tolerances = tolerances or TOLERANCES
    s = _signed(sign)
    c = ChordlessCycle(c).validate(g)
    _require_min_degree(g)
    degs = [g.degree(v) for v in c]
    hubs = [k for k, x in enumerate(degs) if x != 2]
    if d <= 2 or len(hubs) != 1 or degs[hubs[0]] != d:
        raise PreconditionError('Cycle {} does not have exactly one vertex of degree {} and all others of degree 2: degrees {}'.format(list(c), d, degs))
    if s > 0 and c.length % 2:
        raise PreconditionError('Sign + requires an even cycle, not length {}'.format(c.length))
    k = hubs[0]
    labeling = c.vertices[k:] + c.vertices[:k]
    mu = (d - 1) ** (1.0 / c.length)
    nb = build_nb_graph(g)
    f = _support_function(nb, labeling, mu, s)
    return _certify(nb_laplacian(nb), f, 1.0 + s / mu, labeling, tolerances.certificate)


def cycle_mu(g, c):
    """
    Returns the l-th root of the product of (deg c_i - 1) over the cycle.
    """
    return math.prod(g.degree(v) - 1 for v in c) ** (1.0 / len(c))


def satisfies_balance(g, labeling, mu):
    """
    Tests the balance condition of a cycle labeling with deg c_1 > 2: for every later vertex c_i of degree above 2 the
    products of mu / (deg - 1) from c_{i+1} round to c_1 and from c_{i-1} back to c_1 agree.
    """
    length = len(labeling)
    factor = [mu / (g.degree(v) - 1) for v in labeling]
    for k in range(1, length):
        if g.degree(labeling[k]) <= 2:
            continue
        ahead = math.prod(factor[k + 1:]) * factor[0]
        behind = math.prod(factor[1:k]) * factor[0]
        if not math.isclose(ahead, behind, rel_tol=1e-12):
            return False
    return True


def supported_eigenspace_dimension(g, c, lam, rank_tol=1e-9):
    """
    Returns the dimension of the eigenspace of lam made of functions supported on the two oriented lifts of c.
    """
    nb = build_nb_graph(g)
    edges = nb.edges
    length = len(c)
    vertices = list(c)
    support = [edges.index(vertices[k], vertices[(k + 1) % length]) for k in range(length)]
    support += [edges.index(vertices[(k + 1) % length], vertices[k]) for k in range(length)]
    restricted = (nb_laplacian(nb) - lam * np.eye(nb.node_count))[:, support]
    return len(support) - int(np.linalg.matrix_rank(restricted, tol=rank_tol))


def cycle_support_eigenpair(g, c, tolerances=None):
    """
    Returns the eigenpair (1 - 1/mu, f) with f supported on the lifts of a chordless cycle, when one exists.

    mu is the l-th root of the product of (deg c_i - 1); the eigenpair exists when some labeling with deg c_1 > 2
    satisfies :func:`satisfies_balance`. A cycle whose vertices all have degree 2 is a cycle component and gets the
    eigenvalue 0 of :func:`cycle_eigenpair_regular`. Otherwise, when no labeling balances, the absence is confirmed by the
    rank of the restricted system.

    :param Graph          g: A graph with minimum degree at least 2 that is not a cycle graph.
    :param ChordlessCycle c: The cycle.
    :return:                 An :class:`EigenpairCertificate`, or None.
    :raises CheckFailure:    if no labeling balances but a supported eigenfunction exists.
    """
    tolerances = tolerances or TOLERANCES
    c = ChordlessCycle(c).validate(g)
    if is_cycle_graph(g):
        raise PreconditionError('Graph {} is a cycle graph'.format(write_graph6(g)))
    _require_min_degree(g)
    mu = cycle_mu(g, c)
    lam = 1.0 - 1.0 / mu
    for labeling in c.relabelings():
        if g.degree(labeling[0]) > 2 and satisfies_balance(g, labeling, mu):
            nb = build_nb_graph(g)
            f = _support_function(nb, labeling, mu, -1)
            return _certify(nb_laplacian(nb), f, lam, labeling, tolerances.certificate)
    if all(g.degree(v) == 2 for v in c):
        return cycle_eigenpair_regular(g, c, 2, tolerances=tolerances)
    dimension = supported_eigenspace_dimension(g, c, lam)
    if dimension:
        raise CheckFailure(report('cycles', g, False, cycle=c.vertices, mu=mu, supported_dimension=dimension))
    logger.debug('Cycle %r of %s carries no supported eigenfunction', c, write_graph6(g))
    return None


def ap_spectrum_exact(g):
    """
    Returns the exact spectrum {deg v - 1} plus -1 with multiplicity 2M - N of the product B P.
    """
    _require_min_degree(g)
    return ComplexSpectrum([d - 1 for d in degrees(g)] + [-1] * (2 * g.m - g.n))


def check_ap_spectrum(g, tolerances=None):
    tolerances = tolerances or TOLERANCES
    try:
        exact = ap_spectrum_exact(g)
    except PreconditionError as e:
        return _skip('ap', g, str(e))
    numeric = eigenvalues(ap_matrix(build_nb_graph(g)))
    distance = match_multisets(numeric.values, exact.values)
    return report('ap', g, distance <= tolerances.spectrum, distance=distance, minus_one_multiplicity=2 * g.m - g.n)


def check_gap_bound(g, tolerances=None):
    """
    Checks that the spectral gap from 1 of the non-backtracking Laplacian is at least 1/(Delta - 1).

    :return: A report whose witness holds epsilon, bound and tight.
    """
    tolerances = tolerances or TOLERANCES
    try:
        _require_min_degree(g)
    except PreconditionError as e:
        return _skip('gap', g, str(e))
    _, _, spec = _laplacian_spectrum(g)
    epsilon = spectral_gap_from_one(spec)
    bound = 1.0 / (g.max_degree - 1)
    tight = abs(epsilon - bound) < tolerances.spectrum
    return report('gap', g, epsilon >= bound - tolerances.gap, epsilon=epsilon, bound=bound, tight=tight)


def ihara_bass_check(g, trials=10, seed=0, tolerances=None):
    """
    Compares det(I - tB) with (1 - t^2)^(M-N) det(I - tA - t^2 (D - I)) at random t in (-0.3, 0.3).

    Degree-0 vertices are removed first.

    :return: A report whose witness holds the largest relative residual.
    """
    tolerances = tolerances or TOLERANCES
    h = remove_isolated(g)
    b = build_nb_graph(h).adjacency
    a = h.adjacency_matrix()
    dm = h.degree_matrix()
    rng = np.random.default_rng(seed)
    worst = 0.0
    for t in np.concatenate(([0.0], rng.uniform(-0.3, 0.3, trials))):
        lhs = scipy.linalg.det(np.eye(b.shape[0]) - t * b) if b.size else 1.0
        inner = np.eye(h.n) - t * a - t * t * (dm - np.eye(h.n))
        rhs = (1.0 - t * t) ** (h.m - h.n) * (scipy.linalg.det(inner) if h.n else 1.0)
        scale = max(abs(lhs), abs(rhs), np.finfo(float).tiny)
        worst = max(worst, abs(lhs - rhs) / scale)
    return report('ihara', g, worst <= tolerances.ihara, max_residual=worst, trials=trials)


def check_pt_and_padjoint(g, tolerances=None):
    """
    Checks L^T = P L P and B^T = P B P, and that every eigenvector x of a non-real eigenvalue of L has x^H P x = 0.
    """
    tolerances = tolerances or TOLERANCES
    try:
        _require_min_degree(g)
    except PreconditionError as e:
        return _skip('pt', g, str(e))
    nb = build_nb_graph(g)
    p = parity_matrix(nb.edges.m)
    laplacian = nb_laplacian(nb)
    pt_laplacian = float(np.max(np.abs(laplacian.T - p @ laplacian @ p)))
    pt_adjacency = float(np.max(np.abs(nb.adjacency.T - p @ nb.adjacency @ p)))
    spec, vectors = eigenpairs(laplacian)
    isotropy = 0.0
    for k, lam in enumerate(spec.values):
        if abs(lam.imag) > tolerances.match:
            x = vectors[:, k]
            isotropy = max(isotropy, abs(np.conj(x) @ p @ x) / np.real(np.conj(x) @ x))
    passed = pt_laplacian <= tolerances.symmetry and pt_adjacency <= tolerances.symmetry and isotropy <= tolerances.isotropy
    return report('pt', g, passed, laplacian=pt_laplacian, adjacency=pt_adjacency, isotropy=isotropy)


def check_connectivity_theorem(g):
    """
    Checks that for a connected graph with minimum degree at least 2 the non-backtracking graph is strongly connected
    exactly when g is not a cycle graph, and otherwise splits into the two directed lifts of the cycle.
    """
    try:
        _require_min_degree(g)
        if components(g).count != 1:
            raise PreconditionError('Graph {} is not connected'.format(write_graph6(g)))
    except PreconditionError as e:
        return _skip('connectivity', g, str(e))
    cycle = is_cycle_graph(g)
    independent_cycles = g.m > g.n
    weak, strong = nb_components(build_nb_graph(g))
    if cycle:
        passed = not independent_cycles and weak == 2 and strong == 2
    else:
        passed = independent_cycles and weak == 1 and strong == 1
    return report('connectivity', g, passed, cycle_graph=cycle, independent_cycles=independent_cycles, weak=weak, strong=strong)


def check_bipartite_transfer(g, tolerances=None):
    """
    Checks that g is bipartite exactly when its non-backtracking graph is; for bipartite g with minimum degree at
    least 2 also checks that the Laplacian spectrum is symmetric about re = 1 and contains 2.
    """
    tolerances = tolerances or TOLERANCES
    nb = build_nb_graph(g)
    bipartite = is_bipartite(g)
    nb_bipartite = nx.is_bipartite(nb.to_networkx().to_undirected())
    witness = {'bipartite': bipartite, 'nb_bipartite': nb_bipartite}
    passed = bipartite == nb_bipartite
    if bipartite and g.n and g.min_degree >= 2:
        spec = eigenvalues(nb_laplacian(nb))
        witness['symmetry'] = match_multisets(spec.values, 2.0 - spec.values)
        witness['contains_two'] = count_near(spec, 2.0, tolerances.match) > 0
        passed = passed and witness['symmetry'] <= tolerances.match and witness['contains_two']
    return report('bipartite', g, passed, **witness)


def check_bauer_properties(g, tolerances=None):
    """
    Checks trace(L) = 2M, the unit disc around 1, the real eigenvalues in [0, 2] and that the multiplicity of 0
    equals the number of weakly connected components of the non-backtracking graph.
    """
    tolerances = tolerances or TOLERANCES
    try:
        _require_min_degree(g)
    except PreconditionError as e:
        return _skip('bauer', g, str(e))
    nb, laplacian, spec = _laplacian_spectrum(g)
    values = spec.values
    trace = float(np.trace(laplacian))
    eigensum = float(np.sum(values).real)
    disc = float(np.max(np.abs(values - 1.0)))
    real = values[np.abs(values.imag) <= tolerances.match].real
    zero_multiplicity = count_near(spec, 0.0, tolerances.match)
    weak, _ = nb_components(nb)
    passed = (trace == 2 * g.m
              and abs(eigensum - 2 * g.m) <= tolerances.spectrum * 2 * g.m
              and disc <= 1.0 + tolerances.spectrum
              and np.all(real >= -tolerances.spectrum) and np.all(real <= 2.0 + tolerances.spectrum)
              and float(np.min(np.abs(values))) <= tolerances.spectrum
              and zero_multiplicity == weak)
    return report('bauer', g, passed, trace=trace, eigensum=eigensum, disc_radius=disc, zero_multiplicity=zero_multiplicity, weak_components=weak)


def check_regular_transfer(g, tolerances=None):
    """
    Checks that g is (k+1)-regular exactly when its non-backtracking graph is k-regular, and that the Laplacian
    spectrum of a regular g is 1 - sigma(B)/k. Isolated vertices are ignored.
    """
    tolerances = tolerances or TOLERANCES
    nb = build_nb_graph(g)
    if not g.m:
        return _skip('regular', g, 'graph has no edges')
    active = degrees(g)[degrees(g) > 0]
    regular = bool(np.all(active == active[0]))
    nb_regular = bool(np.all(nb.nb_degrees == nb.nb_degrees[0]))
    passed = regular == nb_regular
    witness = {'regular': regular, 'nb_regular': nb_regular}
    k = int(nb.nb_degrees[0])
    if regular and k >= 1:
        expected = eigenvalues(nb.adjacency).affine(-1.0 / k, 1.0)
        witness['distance'] = match_multisets(eigenvalues(nb_laplacian(nb)).values, expected.values)
        passed = passed and witness['distance'] <= tolerances.match
    return report('regular', g, passed, **witness)


def check_node_edge_counts(g):
    """
    Checks that the non-backtracking graph has 2M nodes and sum(deg^2) - 2M arcs.
    """
    try:
        _require_min_degree(g)
    except PreconditionError as e:
        return _skip('counts', g, str(e))
    nb = build_nb_graph(g)
    expected_arcs = int(np.sum(degrees(g) ** 2)) - 2 * g.m
    return report('counts', g, nb.node_count == 2 * g.m and nb.arc_count == expected_arcs, nodes=nb.node_count, arcs=nb.arc_count, expected_arcs=expected_arcs)


def _geometric_multiplicity(laplacian, lam, rank_tol=1e-9):
    return laplacian.shape[0] - int(np.linalg.matrix_rank(laplacian - lam * np.eye(laplacian.shape[0]), tol=rank_tol))


def check_cycle_multiplicity(g, d, tolerances=None):
    """
    Compares the multiplicity of 1 -+ 1/(d-1) with the d-regular chordless cycles of g.

    The eigenfunctions of the cycles span a space whose dimension is the rank reported here; it is smaller than the
    cycle count when the cycles are dependent, as for the four triangles of K4. The check asserts that the geometric
    and algebraic multiplicities are at least that rank.
    """
    tolerances = tolerances or TOLERANCES
    try:
        _require_min_degree(g)
    except PreconditionError as e:
        return _skip('multiplicity', g, str(e))
    nb = build_nb_graph(g)
    laplacian = nb_laplacian(nb)
    spec = eigenvalues(laplacian)
    cycles = [c for c in find_chordless_cycles(g) if all(g.degree(v) == d for v in c)]
    witness = {'d': d}
    passed = True
    for name, sign, selected in (('minus', -1, cycles), ('plus', 1, [c for c in cycles if c.length % 2 == 0])):
        lam = 1.0 + sign / (d - 1)
        functions = [_support_function(nb, c.vertices, float(d - 1), sign) for c in selected]
        rank = int(np.linalg.matrix_rank(np.column_stack(functions))) if functions else 0
        geometric = _geometric_multiplicity(laplacian, lam)
        algebraic = count_near(spec, lam, tolerances.match)
        witness[name] = {'lambda': lam, 'cycles': len(selected), 'rank': rank, 'geometric': geometric, 'algebraic': algebraic}
        passed = passed and geometric >= rank and algebraic >= rank
    return report('multiplicity', g, passed, **witness)


def check_cycles(g, tolerances=None):
    """
    Certifies the eigenpairs of every chordless cycle of g and the multiplicity bound of every regular cycle degree.
    """
    tolerances = tolerances or TOLERANCES
    try:
        _require_min_degree(g)
    except PreconditionError as e:
        return _skip('cycles', g, str(e))
    certificates = []
    cycles = find_chordless_cycles(g)
    cycle_graph = is_cycle_graph(g)
    for c in cycles:
        degs = {g.degree(v) for v in c}
        if len(degs) == 1:
            d = degs.pop()
            signs = ('-', '+') if c.length % 2 == 0 else ('-',)
            certificates.extend(cycle_eigenpair_regular(g, c, d, s, tolerances) for s in signs)
        elif not cycle_graph:
            hubs = [g.degree(v) for v in c if g.degree(v) > 2]
            if len(hubs) == 1:
                signs = ('-', '+') if c.length % 2 == 0 else ('-',)
                certificates.extend(cycle_eigenpair_hub(g, c, hubs[0], s, tolerances) for s in signs)
        if not cycle_graph:
            certificate = cycle_support_eigenpair(g, c, tolerances)
            if certificate is not None:
                certificates.append(certificate)
    worst = max((c.residual for c in certificates), default=0.0)
    multiplicities = [check_cycle_multiplicity(g, d, tolerances) for d in sorted({g.degree(c.vertices[0]) for c in cycles if len({g.degree(v) for v in c}) == 1})]
    passed = all(c.certified for c in certificates) and all(r['pass'] for r in multiplicities)
    return report('cycles', g, passed, cycles=len(cycles), certificates=len(certificates), max_residual=worst, multiplicity=[r['witness'] for r in multiplicities])


def find_tight_irregular(graphs, tolerances=None):
    """
    Yields the irregular graphs with minimum degree at least 2 whose spectral gap from 1 equals 1/(Delta - 1).
    """
    for g in graphs:
        if not g.n or g.min_degree < 2 or g.min_degree == g.max_degree:
            continue
        r = check_gap_bound(g, tolerances)
        if r['witness']['tight']:
            yield g


_RUNNERS = {
    'counts': lambda g, t, s: check_node_edge_counts(g),
    'connectivity': lambda g, t, s: check_connectivity_theorem(g),
    'bipartite': lambda g, t, s: check_bipartite_transfer(g, t),
    'regular': lambda g, t, s: check_regular_transfer(g, t),
    'bauer': lambda g, t, s: check_bauer_properties(g, t),
    'pt': lambda g, t, s: check_pt_and_padjoint(g, t),
    'ap': lambda g, t, s: check_ap_spectrum(g, t),
    'gap': lambda g, t, s: check_gap_bound(g, t),
    'ihara': lambda g, t, s: ihara_bass_check(g, seed=s, tolerances=t),
    'cycles': lambda g, t, s: check_cycles(g, t),
}


def run_checks(g, names=('all',), tolerances=None, seed=0):
    """
    Runs the named checks on a graph.

    :param Graph g:          A graph.
    :param list  names:      Check names from :data:`CHECKS`, or ``all``.
    :param obj   tolerances: A :class:`~nbspec.config.Tolerances` instance.
    :param int   seed:       The seed of the randomized checks.
    :return:                 The list of reports.
    """
    selected = list(CHECKS) if 'all' in names else list(names)
    unknown = [n for n in selected if n not in _RUNNERS]
    if unknown:
        raise PreconditionError('Checks [{}] not in [{}]'.format(', '.join(unknown), ', '.join(CHECKS)))
    reports = []
    for name in selected:
        try:
            r = _RUNNERS[name](g, tolerances or TOLERANCES, seed)
        except CheckFailure as e:
            r = e.report
        if r['pass'] is False:
            logger.warning('Check %s failed on %s: %s', r['check'], r['graph6'], r['witness'])
        reports.append(r)
    return reports
