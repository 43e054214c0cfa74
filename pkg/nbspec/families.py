# -*- coding: utf-8 -*-
"""
This module provides named graph families used by the checks, the command line and the tests.
"""

import networkx as nx

from nbspec.graph import Graph


def empty(n):
    return Graph(n)


def complete(n):
    return Graph.from_networkx(nx.complete_graph(n))


def cycle(n):
    """
    Returns the cycle graph C_n on 0-1-...-(n-1)-0.
    """
    return Graph.from_networkx(nx.cycle_graph(n))


def path(n):
    return Graph.from_networkx(nx.path_graph(n))


def complete_bipartite(a, b):
    """
    Returns K_{a,b} with parts 0 ... a-1 and a ... a+b-1.
    """
    return Graph.from_networkx(nx.complete_bipartite_graph(a, b))


def petersen():
    return Graph.from_networkx(nx.petersen_graph())


def prism():
    """
    Returns the triangular prism: triangles 0-1-2 and 3-4-5 joined by the rungs 0-3, 1-4 and 2-5.
    """
    return Graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)])


def bowtie():
    """
    Returns two triangles sharing the hub vertex 0.
    """
    return Graph(5, [(0, 1), (1, 2), (0, 2), (0, 3), (3, 4), (0, 4)])


def cycles_sharing_vertex(length=4):
    """
    Returns two cycles of the given length sharing the hub vertex 0.
    """
    n = 2 * length - 1
    first = [0] + list(range(1, length))
    second = [0] + list(range(length, n))
    edges = []
    for ring in (first, second):
        edges.extend((ring[i], ring[(i + 1) % length]) for i in range(length))
    return Graph(n, edges)


def theta():
    """
    Returns the 6-cycle 0-1-2-3-4-5-0 with vertex 6 adjacent to 0 and 2.

    The 6-cycle carries two degree-3 vertices placed asymmetrically, the 4-cycle 0-1-2-6 two adjacent ones.
    """
    return Graph(7, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (0, 5), (0, 6), (2, 6)])


def pendant_triangle():
    """
    Returns the triangle 0-1-2 with the pendant paths 0-3, 1-4, 2-5 closed by vertex 6 adjacent to 3, 4 and 5.

    The graph is irregular with maximum degree 3 and its triangle is 3-regular.
    """
    return Graph(7, [(0, 1), (1, 2), (0, 2), (0, 3), (1, 4), (2, 5), (3, 6), (4, 6), (5, 6)])


def erdos_renyi(n, p, seed=0):
    """
    Returns a G(n, p) random graph drawn with the given seed.
    """
    return Graph.from_networkx(nx.gnp_random_graph(n, p, seed=seed))


#: Families addressable by name from the command line.
NAMED = {
    'bowtie': bowtie,
    'petersen': petersen,
    'prism': prism,
    'theta': theta,
    'pendant-triangle': pendant_triangle,
    'cycles-sharing-vertex': cycles_sharing_vertex,
}
