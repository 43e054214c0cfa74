# -*- coding: utf-8 -*-
"""
This module provides the necessary definitions to orient the edges of a graph and build its non-backtracking graph, together with the dense operators derived from both.

Oriented edges are indexed 0 ... 2M-1: index i < M is the i-th edge in lexicographic order oriented from its smaller
endpoint, and index i + M is its inverse.
"""

import logging

import numpy as np
import networkx as nx

from nbspec.errors import DegreeDeficiencyError, PreconditionError
from nbspec.graph import degrees, remove_isolated

#: The operator tags in census order.
OPERATOR_TAGS = ('a', 'l', 'nba', 'nbl')

#: Display labels of the operator tags.
OPERATOR_LABELS = {
    'a': 'A',
    'l': 'L',
    'nba': 'NB-A',
    'nbl': 'NB-L~',
}

logger = logging.getLogger(__name__)


class OrientedEdgeList(object):
    """
    OrientedEdgeList fixes the orientation e_0 ... e_{2M-1} of the edges of a graph.

    :ivar int        m:   The edge count M.
    :ivar np.ndarray inp: The input vertex of every oriented edge.
    :ivar np.ndarray out: The output vertex of every oriented edge.
    """

    def __init__(self, m, inp, out):
        self.m = m
        self.inp = np.asarray(inp, dtype=int)
        self.out = np.asarray(out, dtype=int)
        self._index = {(int(u), int(v)): i for i, (u, v) in enumerate(zip(self.inp, self.out))}

    def __len__(self):
        return 2 * self.m

    def __repr__(self):
        return 'OrientedEdgeList(m={})'.format(self.m)

    def index(self, u, v):
        """
        Returns the index of the oriented edge [u, v].

        :raises KeyError: if {u, v} is not an edge.
        """
        return self._index[(u, v)]

    def pairs(self):
        """
        Returns the oriented edges as a list of (inp, out) tuples in index order.
        """
        return [(int(u), int(v)) for u, v in zip(self.inp, self.out)]

    def inverse(self, i):
        return (i + self.m) % (2 * self.m)


def orient_edges(g):
    """
    Orients the edges of g lexicographically and appends their inverses.

    :param Graph g: A graph.
    :return:        An :class:`OrientedEdgeList` instance.
    """
    forward = sorted(g.edges)
    inp = [u for u, _ in forward] + [v for _, v in forward]
    out = [v for _, v in forward] + [u for u, _ in forward]
    return OrientedEdgeList(len(forward), inp, out)


class NbGraph(object):
    """
    NbGraph is the non-backtracking graph of a simple graph: its nodes are the oriented edges and e -> f is an arc
    when out(e) = inp(f) and inp(e) != out(f).

    :ivar Graph           graph:      The underlying graph G.
    :ivar OrientedEdgeList edges:     The orientation fixing the node order.
    :ivar np.ndarray      adjacency:  The 2M x 2M 0/1 matrix B.
    :ivar np.ndarray      nb_degrees: The out-degree of every node, deg_G(out(e)) - 1.
    """

    def __init__(self, graph, edges, adjacency):
        self.graph = graph
        self.edges = edges
        self.adjacency = adjacency
        self.nb_degrees = adjacency.sum(axis=1).astype(int)

    def __repr__(self):
        return 'NbGraph(node_count={}, arc_count={})'.format(self.node_count, self.arc_count)

    @property
    def node_count(self):
        return 2 * self.edges.m

    @property
    def arc_count(self):
        return int(self.adjacency.sum())

    def to_networkx(self):
        """
        Returns the non-backtracking graph as a :class:`networkx.DiGraph` on the nodes 0 ... 2M-1.
        """
        graph = nx.DiGraph()
        graph.add_nodes_from(range(self.node_count))
        graph.add_edges_from(zip(*np.nonzero(self.adjacency)))
        return graph


def build_nb_graph(g):
    """
    Builds the non-backtracking graph of g.

    :param Graph g: A graph; degree-0 and degree-1 vertices are allowed.
    :return:        An :class:`NbGraph` instance.
    """
    edges = orient_edges(g)
    inp, out = edges.inp, edges.out
    b = (out[:, None] == inp[None, :]) & (inp[:, None] != out[None, :])
    nb = NbGraph(g, edges, b.astype(float))
    logger.debug('Built %r for %r', nb, g)
    return nb


def _inverse_degrees(values):
    values = np.asarray(values, dtype=float)
    inverse = np.zeros_like(values)
    np.divide(1.0, values, out=inverse, where=values > 0)
    return inverse


def nb_degree_matrix(nb):
    """
    Returns the diagonal out-degree matrix of the non-backtracking graph.
    """
    return np.diag(nb.nb_degrees.astype(float))


def transition_matrix(nb):
    """
    Returns the row-stochastic transition matrix of the non-backtracking random walk; rows of out-degree-0 nodes are zero.
    """
    return _inverse_degrees(nb.nb_degrees)[:, None] * nb.adjacency


def nb_laplacian(nb):
    """
    Returns the non-backtracking Laplacian I - D^-1 B.

    :param NbGraph nb: A non-backtracking graph without out-degree-0 nodes.
    :return:           The 2M x 2M matrix.
    :raises DegreeDeficiencyError: if some node has out-degree zero.
    """
    deficient = np.flatnonzero(nb.nb_degrees == 0)
    if deficient.size:
        u, v = nb.edges.pairs()[deficient[0]]
        raise DegreeDeficiencyError('Oriented edge [{}, {}] has non-backtracking out-degree 0; use nb_laplacian_tilde for graphs with degree-1 vertices'.format(u, v))
    return np.eye(nb.node_count) - transition_matrix(nb)


def nb_laplacian_tilde(nb, convention='literal'):
    """
    Returns the degree-robust operator built from D~ B, where D~ inverts the positive out-degrees and zeroes the others.

    :param NbGraph nb:         A non-backtracking graph.
    :param str     convention: ``literal`` returns D~ B, ``laplacian`` returns I - D~ B.
    :return:                   The 2M x 2M matrix.
    """
    t = transition_matrix(nb)
    if convention == 'literal':
        return t
    if convention == 'laplacian':
        return np.eye(nb.node_count) - t
    raise PreconditionError('Unknown convention [{}]; expected literal or laplacian'.format(convention))


def parity_matrix(m):
    """
    Returns the 2M x 2M involution P swapping every oriented edge with its inverse.
    """
    if m < 0:
        raise PreconditionError('Edge count must be non-negative, not {}'.format(m))
    p = np.zeros((2 * m, 2 * m))
    idx = np.arange(m)
    p[idx, idx + m] = 1.0
    p[idx + m, idx] = 1.0
    return p


def ap_matrix(nb):
    """
    Returns the product B P.
    """
    return nb.adjacency @ parity_matrix(nb.edges.m)


def nb_components(nb):
    """
    Returns the (weakly connected, strongly connected) component counts of the non-backtracking graph.
    """
    graph = nb.to_networkx()
    if not graph.number_of_nodes():
        return 0, 0
    return nx.number_weakly_connected_components(graph), nx.number_strongly_connected_components(graph)


def adjacency_matrix(g):
    return g.adjacency_matrix()


def degree_matrix(g):
    return g.degree_matrix()


def random_walk_laplacian(g):
    """
    Returns the random walk Laplacian I - D~ A; the row of an isolated vertex is the identity row.
    """
    return np.eye(g.n) - _inverse_degrees(degrees(g))[:, None] * g.adjacency_matrix()


def operator_matrix(g, tag, convention='literal'):
    """
    Returns the census matrix of an operator tag.

    Non-backtracking operators are built on g with its degree-0 vertices removed.

    :param Graph g:          A graph.
    :param str   tag:        One of ``a``, ``l``, ``nba`` and ``nbl``.
    :param str   convention: The ``nbl`` convention, see :func:`nb_laplacian_tilde`.
    :return:                 A square float array.
    """
    if tag == 'a':
        return adjacency_matrix(g)
    if tag == 'l':
        return random_walk_laplacian(g)
    if tag == 'nba':
        return build_nb_graph(remove_isolated(g)).adjacency
    if tag == 'nbl':
        return nb_laplacian_tilde(build_nb_graph(remove_isolated(g)), convention)
    raise PreconditionError('Operator [{}] not in [{}]'.format(tag, ', '.join(OPERATOR_TAGS)))
