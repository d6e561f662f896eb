#!/usr/bin/env python
# -*- coding: utf-8 -*-

# Created on 10/3/26 by Pat Daburu
"""
.. currentmodule:: hardylab.config
.. moduleauthor:: Pat Daburu <pat@daburu.net>

Tolerances, run settings and the knobs you can turn from the environment.
"""
import logging
import os
from typing import Mapping, NamedTuple, Tuple
from .errors import HardylabException

logger = logging.getLogger(__name__)

#: the environment variable that caps the verification thread pool
THREADS_ENV: str = 'HARDYLAB_THREADS'

#: the sub-commands
COMMANDS: Tuple[str, ...] = (
    'build', 'coeffs', 'means', 'exponent', 'geometry', 'verify', 'report'
)

#: the sub-commands that need a function
FUNCTION_COMMANDS: Tuple[str, ...] = (
    'build', 'coeffs', 'means', 'exponent', 'geometry'
)

#: the tables `report` can emit
REPORT_TABLES: Tuple[str, ...] = ('hardy', 'omega', 'trace')


class BadConfigException(HardylabException):
    """
    Raised when a run configuration (or the environment) doesn't make sense.
    """


class Tolerances(NamedTuple):
    """
    Every tolerance the checks use.
    """
    equality: float = 1e-8  #: exact identities (coefficients, moments)
    grid: float = 1e-9  #: pointwise inequalities on a sample grid
    prawitz: float = 1e-6  #: the integrated Prawitz inequality
    exponent: float = 0.05  #: estimated critical exponents (relative)
    asymptotic: float = 0.02  #: coefficient asymptotics (relative)
    theta: float = 0.02  #: angles at infinity (radians)
    appendix: float = 1e-9  #: the appendix measure theorem

    def scaled(self, factor: float) -> 'Tolerances':
        """
        Get a copy with every tolerance multiplied by a factor.

        :param factor: the factor
        :return: the new tolerances
        """
        return Tolerances(*(t * factor for t in self))


class RunConfig(NamedTuple):
    """
    Everything a single CLI invocation needs to know.
    """
    command: str  #: the sub-command
    family: str or None = None  #: the function family (with aliases)
    params: Mapping[str, object] = {}  #: the family parameters
    order: int = 64  #: the truncation order
    p: float or None = None  #: the integral-means exponent
    radii: Tuple[float, ...] or None = None  #: an explicit radius ladder
    seed: int = 0  #: the random seed
    out: str or None = None  #: the output path (`None` for stdout)
    format: str = 'json'  #: `json` or `csv`
    suite: str = 'all'  #: the verification suite
    tolerances: Tolerances = Tolerances()  #: the tolerances
    derivative: bool = False  #: analyze `f'` rather than `f`
    pole: bool = False  #: also examine the boundary pole at `1`
    table: str = 'hardy'  #: the table `report` emits

    def validate(self) -> 'RunConfig':
        """
        Make sure the configuration is usable.

        :return: this configuration
        :raises BadConfigException: if it isn't
        """
        if self.command not in COMMANDS:
            raise BadConfigException(f'Unknown command: {self.command!r}.')
        if self.command in FUNCTION_COMMANDS and not self.family:
            raise BadConfigException(
                f'The {self.command} command needs a --family.'
            )
        if self.table not in REPORT_TABLES:
            raise BadConfigException(f'Unknown table: {self.table!r}.')
        if self.order < 2:
            raise BadConfigException(
                f'The order must be at least 2 (got {self.order}).'
            )
        if self.format not in ('json', 'csv'):
            raise BadConfigException(f'Unknown format: {self.format!r}.')
        if self.p is not None and not self.p > 0.0:
            raise BadConfigException(f"'p' must be positive (got {self.p}).")
        if self.radii is not None and not all(0.0 < r < 1.0
                                              for r in self.radii):
            raise BadConfigException('Every radius must lie in (0, 1).')
        return self


def max_workers() -> int:
    """
    Get the number of worker threads the verification suite may use.

    :return: the value of `HARDYLAB_THREADS` (`1` if it isn't set)
    :raises BadConfigException: if the variable isn't a positive integer
    """
    raw = os.environ.get(THREADS_ENV)
    if raw is None or not raw.strip():
        return 1
    try:
        workers = int(raw)
    except ValueError as vex:
        raise BadConfigException(
            f'{THREADS_ENV} must be a positive integer (got {raw!r}).',
            inner=vex
        )
    if workers < 1:
        raise BadConfigException(
            f'{THREADS_ENV} must be a positive integer (got {raw!r}).'
        )
    logger.debug('Using %d worker thread(s).', workers)
    return workers
