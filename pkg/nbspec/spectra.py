# -*- coding: utf-8 -*-
"""
This module provides the dense eigenvalue computations, the spectral gap and radius measurements and the rounded spectral fingerprints compared by the census.
"""

import logging

import numpy as np
import scipy.linalg
import scipy.optimize
import networkx as nx

from nbspec.errors import EigensolverError, PreconditionError
from nbspec.graph import degrees
from nbspec.nb import OPERATOR_LABELS, OPERATOR_TAGS, operator_matrix

#: The rounding rule recorded by every fingerprint.
ROUNDING = 'half-away-from-zero'

logger = logging.getLogger(__name__)


class ComplexSpectrum(object):
    """
    ComplexSpectrum is the multiset of eigenvalues of a square matrix, one entry per algebraic multiplicity.

    :ivar np.ndarray values: The complex eigenvalues.
    """

    def __init__(self, values):
        self.values = np.asarray(values, dtype=complex).ravel()

    def __len__(self):
        return self.values.size

    def __iter__(self):
        return iter(self.values)

    def __repr__(self):
        return 'ComplexSpectrum({})'.format(self.values.size)

    def sorted(self):
        """
        Returns the eigenvalues sorted by (real, imaginary) part.
        """
        return self.values[np.lexsort((self.values.imag, self.values.real))]

    def to_rows(self):
        """
        Returns the eigenvalues as sorted (re, im) float pairs.
        """
        return [(float(z.real), float(z.imag)) for z in self.sorted()]

    def affine(self, scale, shift):
        """
        Returns the spectrum of shift * I + scale * M.
        """
        return ComplexSpectrum(shift + scale * self.values)


class SpectralFingerprint(object):
    """
    SpectralFingerprint is the canonical rounded form of a spectrum.

    :ivar str   operator_tag: The operator tag.
    :ivar int   dimension:    The matrix dimension.
    :ivar tuple rounded:      The rounded (re, im) pairs sorted lexicographically.
    :ivar int   precision:    The number of decimals kept.
    :ivar str   rounding:     The rounding rule.
    """

    def __init__(self, operator_tag, dimension, rounded, precision=6, rounding=ROUNDING):
        self.operator_tag = operator_tag
        self.dimension = dimension
        self.rounded = tuple(rounded)
        self.precision = precision
        self.rounding = rounding

    def __repr__(self):
        return 'SpectralFingerprint({}, dimension={})'.format(self.operator_tag, self.dimension)

    def __eq__(self, other):
        return isinstance(other, SpectralFingerprint) and self.key() == other.key()

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(self.key())

    def values(self):
        return [complex(re, im) for re, im in self.rounded]

    def key(self, include_dimension=True):
        """
        Returns the serialized grouping key.

        :param bool include_dimension: When False the dimension is left out of the key.
        :return:                       The key text.
        """
        spec = '{{:.{}f}}'.format(self.precision)
        body = ';'.join('{},{}'.format(spec.format(re), spec.format(im)) for re, im in self.rounded)
        head = '{}|{}'.format(self.operator_tag, self.dimension) if include_dimension else self.operator_tag
        return '{}|{}'.format(head, body)


def round_half_away(x, precision=6):
    """
    Rounds half away from zero at the given number of decimals; negative zero is normalized to zero.
    """
    scale = 10.0 ** precision
    x = np.asarray(x, dtype=float)
    return np.sign(x) * np.floor(np.abs(x) * scale + 0.5) / scale + 0.0


def _check_square(m):
    m = np.asarray(m)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise PreconditionError('Expected a square matrix, not shape {}'.format(m.shape))
    if not np.all(np.isfinite(m)):
        raise PreconditionError('Matrix has non-finite entries')
    return m


def _solve(block):
    try:
        return scipy.linalg.eigvals(block, check_finite=False)
    except (np.linalg.LinAlgError, ValueError) as e:
        raise EigensolverError(block.shape[0], str(e))


def eigenvalues(m):
    """
    Computes all eigenvalues of a real or complex square matrix, with algebraic multiplicity.

    The matrix is split along the strongly connected components of its support graph: a 1 x 1 diagonal block
    contributes its entry exactly, larger blocks are solved by the LAPACK balance, Hessenberg and shifted QR pipeline.

    :param np.ndarray m: A square matrix with finite entries.
    :return:             A :class:`ComplexSpectrum` instance.
    :raises EigensolverError: if the QR iteration does not converge.
    """
    m = _check_square(m)
    n = m.shape[0]
    if n == 0:
        return ComplexSpectrum([])
    support = nx.DiGraph()
    support.add_nodes_from(range(n))
    rows, cols = np.nonzero(m)
    support.add_edges_from((int(i), int(j)) for i, j in zip(rows, cols) if i != j)
    values = []
    blocks = 0
    for scc in nx.strongly_connected_components(support):
        idx = sorted(scc)
        if len(idx) == 1:
            values.append(m[idx[0], idx[0]])
        else:
            values.extend(_solve(m[np.ix_(idx, idx)]))
            blocks += 1
    logger.debug('Solved %dx%d matrix with %d dense blocks', n, n, blocks)
    return ComplexSpectrum(values)


def eigenvalues_symmetric(m):
    """
    Computes the eigenvalues of a real symmetric matrix.
    """
    m = _check_square(m)
    if m.shape[0] == 0:
        return ComplexSpectrum([])
    try:
        return ComplexSpectrum(scipy.linalg.eigvalsh(m, check_finite=False))
    except (np.linalg.LinAlgError, ValueError) as e:
        raise EigensolverError(m.shape[0], str(e))


def eigenpairs(m):
    """
    Computes the eigenvalues and unit eigenvectors of a square matrix.

    :param np.ndarray m: A square matrix with finite entries.
    :return:             A (:class:`ComplexSpectrum`, vectors) tuple; column k of vectors belongs to eigenvalue k.
    """
    m = _check_square(m)
    try:
        w, v = scipy.linalg.eig(m, check_finite=False)
    except (np.linalg.LinAlgError, ValueError) as e:
        raise EigensolverError(m.shape[0], str(e))
    return ComplexSpectrum(w), v


def operator_spectrum(g, tag, convention='literal'):
    """
    Computes the spectrum of one census operator of g.

    A and L use the symmetric solver, L through the similar matrix D~^1/2 A D~^1/2; the non-backtracking operators
    use :func:`eigenvalues`.

    :param Graph g:          A graph.
    :param str   tag:        One of ``a``, ``l``, ``nba`` and ``nbl``.
    :param str   convention: The ``nbl`` convention.
    :return:                 A :class:`ComplexSpectrum` instance.
    """
    if tag == 'a':
        return eigenvalues_symmetric(g.adjacency_matrix())
    if tag == 'l':
        deg = degrees(g).astype(float)
        scale = np.zeros_like(deg)
        np.divide(1.0, np.sqrt(deg), out=scale, where=deg > 0)
        normalized = scale[:, None] * g.adjacency_matrix() * scale[None, :]
        return eigenvalues_symmetric(normalized).affine(-1.0, 1.0)
    if tag in OPERATOR_TAGS:
        return eigenvalues(operator_matrix(g, tag, convention))
    raise PreconditionError('Operator [{}] not in [{}]'.format(tag, ', '.join(OPERATOR_TAGS)))


def fingerprint(spec, tag, precision=6):
    """
    Returns the canonical rounded form of a spectrum.

    :param ComplexSpectrum spec:      A spectrum.
    :param str             tag:       The operator tag recorded in the fingerprint.
    :param int             precision: The number of decimals kept.
    :return:                          A :class:`SpectralFingerprint` instance.
    """
    re = round_half_away(spec.values.real, precision)
    im = round_half_away(spec.values.imag, precision)
    order = np.lexsort((im, re))
    rounded = [(float(re[k]), float(im[k])) for k in order]
    return SpectralFingerprint(tag, len(spec), rounded, precision)


def spectral_gap_from_one(spec):
    """
    Returns min |1 - lambda| over the spectrum.
    """
    if not len(spec):
        return float('inf')
    return float(np.min(np.abs(1.0 - spec.values)))


def spectral_radius(spec):
    """
    Returns max |lambda| over the spectrum.
    """
    if not len(spec):
        return 0.0
    return float(np.max(np.abs(spec.values)))


def match_multisets(a, b):
    """
    Returns the largest distance between matched elements under the optimal matching of two complex multisets.

    :param iterable a: Complex values.
    :param iterable b: Complex values, as many as in a.
    :return:           The largest matched distance; 0 for empty multisets.
    """
    a = np.asarray(list(a), dtype=complex)
    b = np.asarray(list(b), dtype=complex)
    if a.size != b.size:
        raise PreconditionError('Cannot match multisets of sizes {} and {}'.format(a.size, b.size))
    if not a.size:
        return 0.0
    cost = np.abs(a[:, None] - b[None, :])
    rows, cols = scipy.optimize.linear_sum_assignment(cost)
    return float(cost[rows, cols].max())


def count_near(spec, mu, tol=1e-6):
    """
    Returns the number of eigenvalues within tol of mu.
    """
    return int(np.count_nonzero(np.abs(spec.values - mu) < tol))


def contains(spec, mu, tol=1e-6):
    return count_near(spec, mu, tol) > 0


def is_conjugate_closed(spec, tol=1e-9):
    """
    Returns True when the non-real eigenvalues pair up with their conjugates.
    """
    return match_multisets(spec.values, np.conj(spec.values)) <= tol


def label(tag):
    return OPERATOR_LABELS.get(tag, tag)
