# -*- coding: utf-8 -*-
"""
This module provides the configuration layer: the packaged template configuration, its parser and the :class:`RunConfig` object handed to every workflow.
"""

import os
import logging
import configparser

from nbspec.errors import ConfigError

#: The packaged template configuration.
TEMPLATE = os.path.join(os.path.dirname(os.path.realpath(__file__)), 'data', 'nbspec.cfg')

#: The main configuration section.
SECTION = 'nbspec'

#: The tolerance section.
TOLERANCE_SECTION = 'nbspec.tolerance'

#: The environment variable consulted when no worker count is given on the command line.
WORKERS_ENVIRONMENT_VARIABLE = 'NBSPEC_WORKERS'

OPERATORS = ('a', 'l', 'nba', 'nbl')
GROUPINGS = ('nm', 'n', 'm', 'global')
FORMATS = ('csv', 'md', 'json')
CONVENTIONS = ('literal', 'laplacian')

logger = logging.getLogger(__name__)


class NBSpecConfigParser(configparser.ConfigParser):
    """
    NBSpecConfigParser extends :class:`~configparser.ConfigParser` with list handling.
    """

    def __init__(self, *args, **kwargs):
        kwargs.setdefault('interpolation', configparser.ExtendedInterpolation())
        super(NBSpecConfigParser, self).__init__(*args, **kwargs)

    def getlist(self, section, option, fallback=None, delimiters=','):
        """
        Returns the option value as a list of stripped, non-empty strings.

        :param str section:    The section key.
        :param str option:     The option key.
        :param list fallback:  The value returned when the option does not exist.
        :param str delimiters: The characters separating the items; an empty string splits on lines only.
        :return:               A list of strings.
        """
        if not self.has_option(section, option):
            return fallback if fallback is not None else []
        value = self.get(section, option)
        items = value.splitlines()
        for d in delimiters:
            items = [part for item in items for part in item.split(d)]
        return [i.strip() for i in items if i.strip()]


def load_config(paths=None):
    """
    Reads the packaged template and layers the optional user files over it.

    :param list paths: Additional configuration files; later files win.
    :return:           A :class:`NBSpecConfigParser` instance.
    """
    config = NBSpecConfigParser()
    if TEMPLATE not in config.read([TEMPLATE]):
        raise ConfigError('Could not read nbspec template configuration file {}.'.format(TEMPLATE))
    for path in paths or []:
        if path not in config.read([path]):
            raise ConfigError('Could not read configuration file {}.'.format(path))
        logger.debug('Layered configuration file %s', path)
    return config


class Tolerances(object):
    """
    Tolerances groups the numeric thresholds of the spectral and theorem checks.

    :ivar float match:       Eigenvalue matching tolerance (six-decimal census precision).
    :ivar float spectrum:    Tolerance for spectra with a closed form.
    :ivar float symmetry:    Tolerance for the P-transpose identities.
    :ivar float gap:         Slack on the spectral gap lower bound.
    :ivar float certificate: Maximum residual of a certified eigenpair.
    :ivar float ihara:       Maximum Ihara-Bass relative residual.
    :ivar float walk:        Tolerance between walk formulas and the exact oracle.
    :ivar float isotropy:    Tolerance of the P-isotropy of non-real eigenvectors.
    """
    __defaults__ = {
        'match': 1e-6,
        'spectrum': 1e-8,
        'symmetry': 1e-14,
        'gap': 1e-9,
        'certificate': 1e-10,
        'ihara': 1e-8,
        'walk': 1e-12,
        'isotropy': 1e-8,
    }

    def __init__(self, **kwargs):
        for name, default in self.__defaults__.items():
            value = kwargs.get(name)
            setattr(self, name, float(value) if value is not None else default)

    @classmethod
    def from_section(cls, config, section=TOLERANCE_SECTION):
        """
        Creates a :class:`Tolerances` from a :class:`~configparser.ConfigParser` section.
        """
        if section not in config:
            raise ConfigError('Section [{}] not found in [{}]'.format(section, ', '.join(config.sections())))
        return cls(**{name: config.getfloat(section, name) for name in cls.__defaults__ if config.has_option(section, name)})


#: Process-wide default tolerances.
TOLERANCES = Tolerances()


class RunConfig(object):
    """
    RunConfig encapsulates the options of one command line workflow.

    :ivar str   subcommand:      The subcommand being run.
    :ivar list  inputs:          The graph6 input paths.
    :ivar list  operators:       The operator tags, a subset of ``a, l, nba, nbl``.
    :ivar int   precision:       The number of decimals kept by spectral fingerprints.
    :ivar str   rounding:        The rounding rule recorded in outputs.
    :ivar int   seed:            The seed of every random generator.
    :ivar int   workers:         The number of census worker processes.
    :ivar str   grouping:        The census grouping scope.
    :ivar str   format:          The output format.
    :ivar str   nbl_convention:  Either ``literal`` (D~A) or ``laplacian`` (I - D~A).
    :ivar int   min_n:           The smallest vertex count of the built-in census universe.
    :ivar int   max_n:           The largest vertex count of the built-in census universe.
    :ivar int   min_degree:      The minimum degree filter of the census universe.
    :ivar obj   tolerances:      A :class:`Tolerances` instance.
    """

    def __init__(self, **kwargs):
        self._import(kwargs)
        self.validate()

    def _import(self, datadict):
        """
        Internal method to import instance variables data from a dictionary.

        :param dict datadict: The dictionary containing variables values.
        """
        self.subcommand = datadict.get('subcommand', None)
        self.inputs = list(datadict.get('inputs', []))
        self.operators = list(datadict.get('operators', OPERATORS))
        self.precision = int(datadict.get('precision', 6))
        self.rounding = datadict.get('rounding', 'half-away-from-zero')
        self.seed = int(datadict.get('seed', 0))
        self.workers = int(datadict.get('workers', 1))
        self.grouping = datadict.get('grouping', 'n')
        self.format = datadict.get('format', 'md')
        self.nbl_convention = datadict.get('nbl_convention', 'literal')
        self.min_n = int(datadict.get('min_n', 4))
        self.max_n = int(datadict.get('max_n', 7))
        self.min_degree = int(datadict.get('min_degree', 0))
        self.tolerances = datadict.get('tolerances', None) or TOLERANCES

    def validate(self):
        """
        Checks the invariants of the configuration.

        :raises ConfigError: if any value is out of range.
        """
        if self.precision < 1:
            raise ConfigError('Precision must be at least 1, not {}'.format(self.precision))
        if self.workers < 1:
            raise ConfigError('Worker count must be at least 1, not {}'.format(self.workers))
        unknown = [o for o in self.operators if o not in OPERATORS]
        if unknown or not self.operators:
            raise ConfigError('Operators [{}] not in [{}]'.format(', '.join(unknown), ', '.join(OPERATORS)))
        for name, value, allowed in (('grouping', self.grouping, GROUPINGS), ('format', self.format, FORMATS), ('nbl_convention', self.nbl_convention, CONVENTIONS)):
            if value not in allowed:
                raise ConfigError('Value [{}] for {} not in [{}]'.format(value, name, ', '.join(allowed)))
        if self.min_n < 0 or self.max_n < self.min_n:
            raise ConfigError('Invalid vertex range [{}, {}]'.format(self.min_n, self.max_n))

    @classmethod
    def from_section(cls, config, section=SECTION, **kwargs):
        """
        Creates a :class:`RunConfig` from a :class:`~configparser.ConfigParser` section.

        :param ConfigParser config:  A :class:`NBSpecConfigParser` instance.
        :param str          section: A section key.
        :param              kwargs:  Overrides; values that are None are ignored.
        :return:                     A valid :class:`RunConfig` instance.
        """
        if section not in config:
            raise ConfigError('Section [{}] not found in [{}]'.format(section, ', '.join(config.sections())))

        args = {
            'operators': config.getlist(section, 'operators', fallback=list(OPERATORS)),
            'precision': config.getint(section, 'precision', fallback=6),
            'rounding': config.get(section, 'rounding', fallback='half-away-from-zero'),
            'seed': config.getint(section, 'seed', fallback=0),
            'workers': config.getint(section, 'workers', fallback=1),
            'grouping': config.get(section, 'grouping', fallback='n'),
            'format': config.get(section, 'format', fallback='md'),
            'nbl_convention': config.get(section, 'nbl_convention', fallback='literal'),
            'min_n': config.getint(section, 'min_n', fallback=4),
            'max_n': config.getint(section, 'max_n', fallback=7),
            'min_degree': config.getint(section, 'min_degree', fallback=0),
        }
        if config.has_section(TOLERANCE_SECTION):
            args['tolerances'] = Tolerances.from_section(config)

        environment_workers = os.environ.get(WORKERS_ENVIRONMENT_VARIABLE)
        if environment_workers:
            try:
                args['workers'] = int(environment_workers)
            except ValueError:
                raise ConfigError('{} must be an integer, not [{}]'.format(WORKERS_ENVIRONMENT_VARIABLE, environment_workers))

        # Override the file values with the override values.
        for k, v in kwargs.items():
            if v is not None:
                args[k] = v
        return cls(**args)
