# -*- coding: utf-8 -*-
"""
Main __init__.py for the nbspec package
"""
try:
    from importlib.metadata import version, PackageNotFoundError
except ImportError:
    from importlib_metadata import version, PackageNotFoundError
try:
    __version__ = version("nbspec")
except PackageNotFoundError:
    __version__ = "0.0.0.0"

from nbspec.graph import Graph, parse_graph6, write_graph6, generate_nonisomorphic
from nbspec.nb import OrientedEdgeList, NbGraph, orient_edges, build_nb_graph, nb_laplacian, nb_laplacian_tilde, parity_matrix
from nbspec.spectra import ComplexSpectrum, SpectralFingerprint, eigenvalues, fingerprint, spectral_gap_from_one, spectral_radius
from nbspec.census import CensusUniverse, CensusTable, run_census

__all__ = [
    'Graph',
    'parse_graph6',
    'write_graph6',
    'generate_nonisomorphic',
    'OrientedEdgeList',
    'NbGraph',
    'orient_edges',
    'build_nb_graph',
    'nb_laplacian',
    'nb_laplacian_tilde',
    'parity_matrix',
    'ComplexSpectrum',
    'SpectralFingerprint',
    'eigenvalues',
    'fingerprint',
    'spectral_gap_from_one',
    'spectral_radius',
    'CensusUniverse',
    'CensusTable',
    'run_census',
]
