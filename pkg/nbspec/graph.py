# -*- coding: utf-8 -*-
"""
This module provides the simple graph data model, the graph6 codec, degree and connectivity utilities and the small non-isomorphic graph generator used by self-contained censuses.
"""

import io
import logging
import itertools
import functools
import collections

import numpy as np
import networkx as nx

from nbspec.errors import GraphError, Graph6ParseError, UnsupportedSizeError

#: The optional graph6 header.
GRAPH6_HEADER = '>>graph6<<'

#: The largest vertex count handled by the built-in generator and the canonical form.
GENERATOR_MAX_N = 7

logger = logging.getLogger(__name__)


class Graph(object):
    """
    Graph is an immutable simple undirected graph on the vertices 0 ... n-1.

    :ivar int       n:     The vertex count.
    :ivar frozenset edges: The edges as (u, v) pairs with u < v.
    """
    __slots__ = ('n', 'edges', '_neighbors')

    def __init__(self, n, edges=()):
        """
        Constructor.

        :param int      n:     The vertex count.
        :param iterable edges: The edges as vertex pairs in any orientation.
        :raises GraphError:    on a self-loop, a duplicate edge or an endpoint out of range.
        """
        if n < 0:
            raise GraphError('Vertex count must be non-negative, not {}'.format(n))
        normalized = set()
        neighbors = [set() for _ in range(n)]
        for pair in edges:
            u, v = (int(x) for x in pair)
            if u == v:
                raise GraphError('Self-loop on vertex {}'.format(u))
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError('Edge [{}, {}] has an endpoint outside [0, {})'.format(u, v, n))
            key = (min(u, v), max(u, v))
            if key in normalized:
                raise GraphError('Duplicate edge [{}, {}]'.format(*key))
            normalized.add(key)
            neighbors[u].add(v)
            neighbors[v].add(u)
        object.__setattr__(self, 'n', int(n))
        object.__setattr__(self, 'edges', frozenset(normalized))
        object.__setattr__(self, '_neighbors', tuple(frozenset(s) for s in neighbors))

    def __setattr__(self, name, value):
        raise AttributeError('Graph is immutable')

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.edges == other.edges

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return 'Graph(n={}, m={})'.format(self.n, self.m)

    def __getstate__(self):
        return (self.n, sorted(self.edges))

    def __setstate__(self, state):
        n, edges = state
        Graph.__init__(self, n, edges)

    @classmethod
    def from_edges(cls, n, edges):
        """
        Creates a validated :class:`Graph` from a vertex count and an edge iterable.
        """
        return cls(n, edges)

    @classmethod
    def from_networkx(cls, graph):
        """
        Creates a :class:`Graph` from a :class:`networkx.Graph`; vertices are relabeled 0 ... n-1 in sorted order.

        :param networkx.Graph graph: An undirected simple graph.
        :return:                     A :class:`Graph` instance.
        """
        if graph.is_directed() or graph.is_multigraph():
            raise GraphError('Only simple undirected graphs are supported')
        try:
            order = sorted(graph.nodes())
        except TypeError:
            order = list(graph.nodes())
        index = {v: i for i, v in enumerate(order)}
        return cls(len(order), ((index[u], index[v]) for u, v in graph.edges()))

    def to_networkx(self):
        """
        Returns the graph as a :class:`networkx.Graph` on the nodes 0 ... n-1.
        """
        graph = nx.Graph()
        graph.add_nodes_from(range(self.n))
        graph.add_edges_from(sorted(self.edges))
        return graph

    @property
    def m(self):
        """
        The edge count.
        """
        return len(self.edges)

    def neighbors(self, v):
        """
        Returns the sorted neighbours of v.
        """
        return sorted(self._neighbors[v])

    def neighbor_set(self, v):
        return self._neighbors[v]

    def degree(self, v):
        return len(self._neighbors[v])

    def has_edge(self, u, v):
        return v in self._neighbors[u]

    @property
    def max_degree(self):
        return max((len(s) for s in self._neighbors), default=0)

    @property
    def min_degree(self):
        return min((len(s) for s in self._neighbors), default=0)

    def adjacency_matrix(self):
        """
        Returns the N x N adjacency matrix A as a float array.
        """
        a = np.zeros((self.n, self.n))
        for u, v in self.edges:
            a[u, v] = a[v, u] = 1.0
        return a

    def degree_matrix(self):
        """
        Returns the N x N diagonal degree matrix D as a float array.
        """
        return np.diag(degrees(self).astype(float))

    def relabel(self, permutation):
        """
        Returns the graph with vertex v renamed permutation[v].
        """
        return Graph(self.n, ((permutation[u], permutation[v]) for u, v in self.edges))


class ComponentPartition(collections.namedtuple('ComponentPartition', ['labels', 'count'])):
    """
    ComponentPartition maps every vertex to the index of its connected component.

    :ivar tuple labels: The per-vertex component index; components are numbered by their smallest vertex.
    :ivar int   count:  The number of components.
    """
    __slots__ = ()

    def members(self, label):
        return [v for v, own in enumerate(self.labels) if own == label]


def _upper_triangle_bits(g, order=None):
    """
    Yields the upper-triangle adjacency bits x(i, j), i < j, column by column.
    """
    order = order or range(g.n)
    for j in range(1, g.n):
        for i in range(j):
            yield 1 if g.has_edge(order[i], order[j]) else 0


def _encode_size(n):
    if n <= 62:
        return [n + 63]
    if n <= 258047:
        return [126] + [((n >> shift) & 63) + 63 for shift in (12, 6, 0)]
    if n <= 68719476735:
        return [126, 126] + [((n >> shift) & 63) + 63 for shift in (30, 24, 18, 12, 6, 0)]
    raise GraphError('Vertex count {} exceeds the graph6 range'.format(n))


def write_graph6(g):
    """
    Encodes a graph as a graph6 record without header or newline.

    :param Graph g: A graph.
    :return:        The graph6 text.
    """
    data = _encode_size(g.n)
    bits = list(_upper_triangle_bits(g))
    bits.extend([0] * (-len(bits) % 6))
    for k in range(0, len(bits), 6):
        value = 0
        for b in bits[k:k + 6]:
            value = (value << 1) | b
        data.append(value + 63)
    return ''.join(chr(c) for c in data)


def _decode_size(data):
    """
    Decodes the vertex count prefix.

    :return: A (n, offset of the first adjacency byte) tuple.
    """
    if not data:
        raise Graph6ParseError('Empty graph6 record', 0)
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] == 126:
        if len(data) < 8:
            raise Graph6ParseError('Truncated 36-bit vertex count', len(data))
        chunks, offset = data[2:8], 8
    else:
        if len(data) < 4:
            raise Graph6ParseError('Truncated 18-bit vertex count', len(data))
        chunks, offset = data[1:4], 4
    n = 0
    for c in chunks:
        n = (n << 6) | (c - 63)
    return n, offset


def parse_graph6(line):
    """
    Decodes one graph6 record.

    :param str line: The record; an optional ``>>graph6<<`` header and surrounding whitespace are ignored.
    :return:         A :class:`Graph` instance.
    :raises Graph6ParseError: on a malformed size prefix, a wrong record length, a character outside 63 ... 126 or nonzero padding.
    """
    if isinstance(line, bytes):
        line = line.decode('ascii', errors='replace')
    text = line.strip()
    start = 0
    if text.startswith(GRAPH6_HEADER):
        start = len(GRAPH6_HEADER)
    body = text[start:]
    for k, c in enumerate(body):
        if not 63 <= ord(c) <= 126:
            raise Graph6ParseError('Character [{}] outside the graph6 range 63..126'.format(c), start + k)
    data = [ord(c) for c in body]
    n, offset = _decode_size(data)

    nbits = n * (n - 1) // 2
    expected = (nbits + 5) // 6
    payload = data[offset:]
    if len(payload) != expected:
        raise Graph6ParseError('Expected {} adjacency bytes for n={}, found {}'.format(expected, n, len(payload)), start + offset + min(len(payload), expected))

    bits = []
    for c in payload:
        value = c - 63
        bits.extend((value >> shift) & 1 for shift in range(5, -1, -1))
    if any(bits[nbits:]):
        raise Graph6ParseError('Nonzero padding bits', start + offset + len(payload) - 1)

    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return Graph(n, edges)


def read_graph6_file(path):
    """
    Streams the graphs of a graph6 file; blank lines are skipped.

    :param str path: The file path.
    :return:         A generator of :class:`Graph` instances.
    :raises Graph6ParseError: with the 1-based line number attached.
    """
    with io.open(path, 'r', encoding='ascii', errors='replace') as f:
        count = 0
        for number, line in enumerate(f, 1):
            if not line.strip():
                continue
            try:
                yield parse_graph6(line)
            except Graph6ParseError as e:
                raise Graph6ParseError(e.reason, e.offset, line=number)
            count += 1
        logger.debug('Read %d graphs from %s', count, path)


def degrees(g):
    """
    Returns the vertex degrees as an integer vector; the entries sum to 2M.
    """
    return np.array([g.degree(v) for v in range(g.n)], dtype=int)


def components(g):
    """
    Returns the :class:`ComponentPartition` of g.
    """
    labels = [0] * g.n
    parts = sorted((sorted(c) for c in nx.connected_components(g.to_networkx())), key=lambda c: c[0])
    for label, part in enumerate(parts):
        for v in part:
            labels[v] = label
    return ComponentPartition(tuple(labels), len(parts))


def is_bipartite(g):
    return nx.is_bipartite(g.to_networkx())


def is_cycle_graph(g):
    """
    Returns True when g is connected and 2-regular.
    """
    return g.n >= 3 and all(g.degree(v) == 2 for v in range(g.n)) and components(g).count == 1


def remove_isolated(g):
    """
    Drops the degree-0 vertices and relabels the remaining ones 0 ... n'-1 in increasing order.
    """
    keep = [v for v in range(g.n) if g.degree(v) > 0]
    index = {v: i for i, v in enumerate(keep)}
    return Graph(len(keep), ((index[u], index[v]) for u, v in g.edges))


def two_core(g):
    """
    Returns the vertex set of the 2-core of g (iterated removal of vertices of degree at most 1).
    """
    return frozenset(nx.k_core(g.to_networkx(), 2).nodes())


def canonical_form(g):
    """
    Returns the graph6 text of the canonical relabeling of g.

    The canonical relabeling is the one with the lexicographically smallest upper-triangle bit string among the
    vertex orders listing vertices by non-increasing degree.

    :param Graph g: A graph with at most :data:`GENERATOR_MAX_N` vertices.
    :return:        The canonical graph6 text.
    """
    if g.n > GENERATOR_MAX_N:
        raise UnsupportedSizeError('Canonical form supports n <= {}, not {}'.format(GENERATOR_MAX_N, g.n))
    classes = collections.defaultdict(list)
    for v in range(g.n):
        classes[g.degree(v)].append(v)
    groups = [classes[d] for d in sorted(classes, reverse=True)]
    best, best_order = None, list(range(g.n))
    for parts in itertools.product(*(itertools.permutations(group) for group in groups)):
        order = [v for part in parts for v in part]
        bits = tuple(_upper_triangle_bits(g, order))
        if best is None or bits < best:
            best, best_order = bits, order
    permutation = {v: i for i, v in enumerate(best_order)}
    return write_graph6(g.relabel(permutation))


@functools.lru_cache(maxsize=1)
def _atlas():
    return tuple(Graph.from_networkx(h) for h in nx.graph_atlas_g())


def generate_nonisomorphic(n, min_degree=0):
    """
    Generates one representative per isomorphism class of simple graphs on n vertices.

    :param int n:          The vertex count, at most :data:`GENERATOR_MAX_N`.
    :param int min_degree: The minimum degree filter.
    :return:               A generator of :class:`Graph` instances.
    :raises UnsupportedSizeError: for n larger than :data:`GENERATOR_MAX_N`.
    """
    if n > GENERATOR_MAX_N:
        raise UnsupportedSizeError('The built-in generator supports n <= {}; supply larger corpora as graph6 files with --input'.format(GENERATOR_MAX_N))
    for g in _atlas():
        if g.n == n and (n == 0 or g.min_degree >= min_degree):
            yield g


def dedupe(graphs):
    """
    Drops isomorphic duplicates from a graph stream, keeping the first representative of each class.

    :param iterable graphs: The :class:`Graph` instances.
    :return:                A generator of pairwise non-isomorphic graphs.
    """
    buckets = collections.defaultdict(list)
    dropped = 0
    for g in graphs:
        h = g.to_networkx()
        key = (g.n, g.m, tuple(sorted(degrees(g))), nx.weisfeiler_lehman_graph_hash(h, iterations=3))
        if any(nx.is_isomorphic(h, other) for other in buckets[key]):
            dropped += 1
            continue
        buckets[key].append(h)
        yield g
    if dropped:
        logger.info('Dropped %d isomorphic duplicates', dropped)
