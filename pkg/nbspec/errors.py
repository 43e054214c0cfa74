# -*- coding: utf-8 -*-
"""
This module provides the exception hierarchy shared by all nbspec modules.

Every exception derives from :class:`NBSpecError` and from the closest builtin exception so callers may catch either.
"""


class NBSpecError(Exception):
    """
    Base class of all nbspec errors.
    """


class GraphError(NBSpecError, ValueError):
    """
    Raised when graph data violates the simple graph invariants.
    """


class Graph6ParseError(NBSpecError, ValueError):
    """
    Raised when a graph6 record cannot be decoded.

    :ivar str reason: The error message without position information.
    :ivar int offset: The byte offset of the offending character within the record.
    :ivar int line:   The 1-based line number of the record in its file; None when parsing a single string.
    """

    def __init__(self, message, offset, line=None):
        """
        Constructor.

        :param str message: The human readable error message.
        :param int offset:  The byte offset of the offending character.
        :param int line:    The optional line number of the record.
        """
        self.reason = message
        self.offset = offset
        self.line = line
        if line is not None:
            message = 'line {}: {}'.format(line, message)
        super(Graph6ParseError, self).__init__('{} (byte offset {})'.format(message, offset))

    def __reduce__(self):
        return (self.__class__, (self.reason, self.offset, self.line))


class UnsupportedSizeError(NBSpecError, ValueError):
    """
    Raised when the built-in generator is asked for graphs it cannot enumerate.
    """


class PreconditionError(NBSpecError, ValueError):
    """
    Raised when the inputs of an operation violate its precondition.
    """


class DegreeDeficiencyError(PreconditionError):
    """
    Raised when the non-backtracking Laplacian is requested for a graph whose non-backtracking graph has a node of out-degree zero.
    """


class EigensolverError(NBSpecError, RuntimeError):
    """
    Raised when the dense eigensolver fails to converge.

    :ivar int dimension: The dimension of the offending matrix.
    """

    def __init__(self, dimension, reason=''):
        self.dimension = dimension
        self.reason = reason
        super(EigensolverError, self).__init__('Eigensolver did not converge on a {0}x{0} matrix{1}'.format(dimension, ': ' + reason if reason else ''))

    def __reduce__(self):
        return (self.__class__, (self.dimension, self.reason))


class CheckFailure(NBSpecError, AssertionError):
    """
    Raised when a theorem check fails.

    :ivar dict report: The JSON-ready report of the failing check.
    """

    def __init__(self, report):
        self.report = report
        super(CheckFailure, self).__init__('Check [{}] failed on graph [{}]'.format(report.get('check'), report.get('graph6')))

    def __reduce__(self):
        return (self.__class__, (self.report,))


class ConfigError(NBSpecError, ValueError):
    """
    Raised when a configuration value is missing or out of range.
    """
