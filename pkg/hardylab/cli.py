#!/usr/bin/env python
# -*- coding: utf-8 -*-

# Created on 10/7/26 by Pat Daburu
"""
.. currentmodule:: hardylab.cli
.. moduleauthor:: Pat Daburu <pat@daburu.net>

This is the entry point for the command-line interface (CLI) application.

.. note::

    Every sub-command builds a :py:class:`hardylab.config.RunConfig` and hands
    it to :py:func:`run`, which writes a JSON (or CSV) report and returns the
    exit status: `0` on success, `1` when a check fails, `2` for a bad
    configuration and `3` when the report can't be written.
"""
import csv
import io
import json
import logging
import math
from enum import Enum
from pathlib import Path
from typing import Any, Callable, Dict, List, Mapping, Tuple
import click
import numpy as np
from .config import BadConfigException, RunConfig, Tolerances
from .errors import HardylabException
from .geometry import (
    half_tangents,
    lower_order,
    radial_A_limit,
    starlike_slit_tip
)
from .herglotz import InvalidMeasureException
from .means import (
    DEFAULT_LADDER,
    TruncationRadiusException,
    blowup_exponent,
    hardy_critical_exponent,
    means_profile,
    radial_trace
)
from .series import PointEvaluator, ts_derivative
from .verify import SUITES, hardy_table, run_suite, summary_table
from .version import __version__
from .xchg import SCHEMA_VERSION, complex_pair
from .zoo import (
    DEFAULT_ORDER,
    Family,
    FunctionSpec,
    NotInOmegaException,
    ParamOutOfRangeException,
    UnknownFamilyException,
    ZooFunction,
    build,
    eps0_solve,
    family_of,
    omega_sweep
)

logger = logging.getLogger(__name__)

#: the exit status when a check fails (or the numerics give up)
EXIT_FAILURE: int = 1

#: the exit status for a bad configuration
EXIT_CONFIG: int = 2

#: the exit status when a report can't be written
EXIT_IO: int = 3

#: short names for families
ALIASES: Mapping[str, Family] = {
    'lpr': Family.LPR_PHI,
    'koebe': Family.KOEBE_DILATED
}

#: the suffix that asks for the derivative of a family member
DERIVATIVE_SUFFIX: str = '-deriv'

#: the family parameters that come straight from real-valued flags
REAL_PARAMS: Tuple[str, ...] = ('alpha', 't', 'r', 'eps', 'beta', 'theta')

#: errors that mean the configuration (rather than the numerics) is at fault
CONFIG_ERRORS = (
    BadConfigException,
    InvalidMeasureException,
    NotInOmegaException,
    ParamOutOfRangeException,
    TruncationRadiusException,
    UnknownFamilyException,
    ValueError
)


class IoFailureException(HardylabException):
    """
    Raised when a report can't be written.
    """


def resolve_family(tag: str) -> Tuple[Family, bool]:
    """
    Resolve a family tag given on the command line.

    :param tag: the tag (an alias or a family name, optionally ending in
        `-deriv`)
    :return: the family and whether the derivative was asked for
    :raises UnknownFamilyException: if the tag names no family
    """
    derivative = tag.endswith(DERIVATIVE_SUFFIX)
    if derivative:
        tag = tag[:-len(DERIVATIVE_SUFFIX)]
    tag = tag.replace('-', '_')
    family = ALIASES.get(tag)
    return (family if family else family_of(tag)), derivative


def function_spec(config: RunConfig) -> Tuple[FunctionSpec, bool]:
    """
    Get the function a configuration names.

    :param config: the configuration
    :return: the spec and whether to analyze the derivative
    :raises BadConfigException: if no family is given or a measure won't parse
    """
    if not config.family:
        raise BadConfigException('This command needs a --family.')
    family, derivative = resolve_family(config.family)
    params = dict(config.params)
    measure = params.get('measure')
    if isinstance(measure, str):
        try:
            params['measure'] = json.loads(measure)
        except ValueError as vex:
            raise BadConfigException(
                "The measure must be a JSON list of {arg_over_pi, weight} "
                "atoms.", inner=vex
            )
    return (
        FunctionSpec(family, params, config.order),
        derivative or config.derivative
    )


def _jsonable(value: Any) -> Any:
    if hasattr(value, 'export'):
        return _jsonable(value.export())
    if hasattr(value, '_asdict'):
        return _jsonable(value._asdict())
    if isinstance(value, Enum):
        return value.value
    if isinstance(value, (bool, str)) or value is None:
        return value
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (float, np.floating)):
        return float(value)
    if isinstance(value, (complex, np.complexfloating)):
        return complex_pair(value)
    if isinstance(value, Mapping):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple, np.ndarray)):
        return [_jsonable(v) for v in value]
    return str(value)


def _csv_cell(value: Any) -> str:
    if isinstance(value, bool):
        return 'true' if value else 'false'
    if isinstance(value, (float, np.floating)):
        return format(float(value), '.17g')
    if value is None:
        return ''
    return str(value)


def csv_text(rows: List[Mapping[str, Any]]) -> str:
    """
    Render table rows as CSV (17 significant digits, no locale).

    :param rows: the rows (the first row's keys make the header)
    :return: the text
    """
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator='\n')
    if rows:
        header = list(rows[0].keys())
        writer.writerow(header)
        for row in rows:
            writer.writerow([_csv_cell(row.get(k)) for k in header])
    return buffer.getvalue()


def json_text(document: Mapping[str, Any]) -> str:
    """
    Render a report document as JSON (sorted keys, so equal documents are
    byte-identical).

    :param document: the document
    :return: the text
    """
    return json.dumps(_jsonable(document), sort_keys=True, indent=2) + '\n'


def _emit(config: RunConfig, document: Mapping[str, Any], rows):
    text = (
        json_text(document) if config.format == 'json' else csv_text(rows)
    )
    if config.out is None:
        click.echo(text, nl=False)
        return
    try:
        Path(config.out).write_text(text, encoding='utf-8')
    except OSError as oex:
        raise IoFailureException(
            f'Could not write the report to {config.out}.', inner=oex
        )
    logger.info('Wrote %s.', config.out)


def _document(config: RunConfig, **content) -> Dict[str, Any]:
    document = {'schema_version': SCHEMA_VERSION, 'command': config.command}
    document.update(content)
    return document


def _evaluator(zf: ZooFunction, derivative: bool) -> PointEvaluator:
    return zf.df if derivative else zf.f


def _build(config: RunConfig):
    spec, _ = function_spec(config)
    zf = build(spec)
    evaluators = {
        'f': zf.f.kind,
        'df': zf.df.kind,
        'd2f': zf.d2f.kind
    }
    # A series truncated at z^2 says nothing about a3.
    a3 = zf.series[3] if zf.series.order >= 3 else None
    document = _document(
        config, function=spec, a2=zf.series[2], a3=a3,
        evaluators=evaluators, meta=zf.meta
    )
    rows = [{
        'family': spec.family.value,
        'order': spec.order,
        'a2_re': zf.series[2].real,
        'a2_im': zf.series[2].imag,
        'a3_re': None if a3 is None else a3.real,
        'a3_im': None if a3 is None else a3.imag,
        'f_kind': zf.f.kind.value
    }]
    return document, rows, 0


def _coeffs(config: RunConfig):
    spec, derivative = function_spec(config)
    series = build(spec).series
    if derivative:
        series = ts_derivative(series)
    rows = [
        {'n': n, 're': c.real, 'im': c.imag, 'abs': abs(c)}
        for n, c in enumerate(series.coeffs)
    ]
    document = _document(config, function=spec, derivative=derivative,
                         coefficients=rows)
    return document, rows, 0


def _means(config: RunConfig):
    spec, derivative = function_spec(config)
    evaluator = _evaluator(build(spec), derivative)
    profile = means_profile(
        evaluator,
        config.p if config.p is not None else 1.0,
        config.radii or DEFAULT_LADDER
    )
    document = _document(config, function=spec, derivative=derivative,
                         profile=profile)
    return document, profile.rows(), 0


def _exponent(config: RunConfig):
    spec, derivative = function_spec(config)
    evaluator = _evaluator(build(spec), derivative)
    radii = config.radii or DEFAULT_LADDER
    estimate = (
        blowup_exponent(evaluator, config.p, radii) if config.p is not None
        else hardy_critical_exponent(evaluator, radii=radii)
    )
    bracket = estimate.bracket or (None, None)
    rows = [{
        'gamma': estimate.gamma,
        'stderr': estimate.stderr,
        'slope': estimate.slope,
        'p': estimate.p,
        'p_star': estimate.p_star,
        'bracket_lo': bracket[0],
        'bracket_hi': bracket[1]
    }]
    document = _document(config, function=spec, derivative=derivative,
                         estimate=estimate)
    return document, rows, 0


def _geometry(config: RunConfig):
    spec, _ = function_spec(config)
    zf = build(spec)
    estimate = lower_order(zf)
    content: Dict[str, Any] = {
        'function': spec,
        'a2': zf.a2,
        'lower_order': estimate
    }
    row: Dict[str, Any] = {
        'beta': estimate.beta,
        'abs_a2': abs(zf.a2),
        'argmin_re': estimate.argmin_point.real,
        'argmin_im': estimate.argmin_point.imag
    }
    if spec.family is Family.STARLIKE_EXTREMAL:
        content['slit_tip'] = starlike_slit_tip(spec.real('alpha'))
    if config.pole:
        limit = radial_A_limit(zf, 1.0)
        tangents = half_tangents(zf.f, 0.0)
        content.update(radial_A_limit=limit, theta_radial=math.pi * limit,
                       half_tangents=tangents)
        row.update(theta_radial=math.pi * limit,
                   theta_half_tangents=tangents.delta)
    return _document(config, **content), [row], 0


def _verify(config: RunConfig):
    if config.suite not in SUITES:
        raise BadConfigException(
            f'{config.suite!r} is not a suite; try one of {SUITES}.'
        )
    results = run_suite(config.suite, config.seed, config.tolerances)
    click.echo(summary_table(results), err=True)
    rows = [
        {
            'check_id': r.check_id,
            'margin': r.margin,
            'passed': r.passed,
            'samples': r.samples
        }
        for r in results
    ]
    document = _document(config, suite=config.suite, seed=config.seed,
                         results=results)
    return document, rows, 0 if all(r.passed for r in results) else EXIT_FAILURE


def _hardy_rows() -> List[Dict[str, Any]]:
    rows = []
    for row in hardy_table():
        zf = build(row.spec)
        estimate = hardy_critical_exponent(
            _evaluator(zf, row.derivative),
            (0.25 * row.p_star, 2.5 * row.p_star)
        )
        rows.append({
            'family': row.spec.family.value,
            'alpha': row.spec.params.get('alpha'),
            't': row.spec.params.get('t'),
            'derivative': row.derivative,
            'predicted': row.p_star,
            'estimated': estimate.p_star,
            'relative_error': abs(estimate.p_star - row.p_star) / row.p_star
        })
    return rows


def _report(config: RunConfig):
    if config.table == 'hardy':
        rows = _hardy_rows()
        return _document(config, table='hardy', rows=rows), rows, 0
    if config.table == 'omega':
        rows = [
            {'r': r, 'eps': eps, 'eps0': eps0_solve(r), 'a2': a2}
            for r, eps, a2 in omega_sweep()
        ]
        return _document(config, table='omega', rows=rows), rows, 0
    # Otherwise it's a trace along the positive real axis.
    spec, derivative = function_spec(config)
    trace = radial_trace(_evaluator(build(spec), derivative), 0.0,
                         config.radii or DEFAULT_LADDER)
    rows = [
        {'r': r, 'modulus': m} for r, m in zip(trace.radii, trace.moduli)
    ]
    document = _document(config, table='trace', function=spec,
                         derivative=derivative, trace=trace)
    return document, rows, 0


_handlers: Dict[str, Callable[[RunConfig], Tuple[Any, Any, int]]] = {
    'build': _build,
    'coeffs': _coeffs,
    'means': _means,
    'exponent': _exponent,
    'geometry': _geometry,
    'verify': _verify,
    'report': _report
}


def run(config: RunConfig) -> int:
    """
    Carry out a configured command and write its report.

    :param config: the configuration
    :return: the exit status
    """
    try:
        document, rows, status = _handlers[config.validate().command](config)
        _emit(config, document, rows)
        return status
    except IoFailureException as iox:
        logger.error(iox.message)
        return EXIT_IO
    except CONFIG_ERRORS as cex:
        logger.error(getattr(cex, 'message', str(cex)))
        return EXIT_CONFIG
    except HardylabException as hlex:
        logger.error(hlex.message)
        return EXIT_FAILURE


def _parse_radii(_ctx, _param, value: str or None) -> Tuple[float, ...] or None:
    if not value:
        return None
    try:
        return tuple(float(r) for r in value.split(','))
    except ValueError:
        raise click.BadParameter('Radii are comma-separated numbers.')


def _function_options(fn):
    options = [
        click.option('--family', type=str, default=None,
                     help='The function family (add -deriv for f\').'),
        click.option('--derivative', is_flag=True, default=False,
                     help="Analyze f' rather than f."),
        click.option('--alpha', type=float, default=None),
        click.option('--t', type=float, default=None),
        click.option('--r', type=float, default=None),
        click.option('--eps', type=float, default=None),
        click.option('--beta', type=float, default=None),
        click.option('--theta', type=float, default=None),
        click.option('--measure', type=str, default=None,
                     help='A JSON list of {arg_over_pi, weight} atoms.'),
        click.option('--order', type=int, default=DEFAULT_ORDER,
                     show_default=True)
    ]
    for option in reversed(options):
        fn = option(fn)
    return fn


def _output_options(fn):
    options = [
        click.option('--out', type=click.Path(dir_okay=False), default=None,
                     help='Write the report here (rather than stdout).'),
        click.option('--format', 'format_', type=click.Choice(['json', 'csv']),
                     default='json', show_default=True),
        click.option('--seed', type=int, default=0, show_default=True)
    ]
    for option in reversed(options):
        fn = option(fn)
    return fn


def _config(command: str, **options) -> RunConfig:
    params = {}
    for name in REAL_PARAMS + ('measure',):
        value = options.pop(name, None)
        if value is not None:
            params[name] = value
    return RunConfig(
        command=command,
        family=options.get('family'),
        params=params,
        order=options.get('order', DEFAULT_ORDER),
        p=options.get('p'),
        radii=options.get('radii'),
        seed=options.get('seed', 0),
        out=options.get('out'),
        format=options.get('format_', 'json'),
        suite=options.get('suite', 'all'),
        tolerances=Tolerances(),
        derivative=options.get('derivative', False),
        pole=options.get('pole', False),
        table=options.get('table', 'hardy')
    )


def _invoke(command: str, **options):
    click.get_current_context().exit(run(_config(command, **options)))


@click.group()
@click.option('--verbose', '-v', count=True, help='Enable verbose output.')
@click.option('--quiet', '-q', is_flag=True, help='Only report errors.')
@click.version_option(version=__version__)
def cli(verbose: int, quiet: bool):
    """
    Explore univalent functions, their integral means and their geometry.
    """
    level = logging.ERROR if quiet else max(
        logging.DEBUG, logging.WARNING - 10 * verbose
    )
    logging.basicConfig(level=level)


@cli.command(name='build')
@_function_options
@_output_options
def build_command(**options):
    """
    Build a function and describe it.
    """
    _invoke('build', **options)


@cli.command(name='coeffs')
@_function_options
@_output_options
def coeffs_command(**options):
    """
    List the Taylor coefficients of a function.
    """
    _invoke('coeffs', **options)


@cli.command(name='means')
@_function_options
@click.option('--p', type=float, default=None, help='The exponent (1).')
@click.option('--radii', callback=_parse_radii, default=None,
              help='Comma-separated radii.')
@_output_options
def means_command(**options):
    """
    Compute integral means over a ladder of radii.
    """
    _invoke('means', **options)


@cli.command(name='exponent')
@_function_options
@click.option('--p', type=float, default=None,
              help='Fit the blow-up at this exponent instead of finding p*.')
@click.option('--radii', callback=_parse_radii, default=None,
              help='Comma-separated radii.')
@_output_options
def exponent_command(**options):
    """
    Estimate the critical Hardy exponent (or a blow-up rate).
    """
    _invoke('exponent', **options)


@cli.command(name='geometry')
@_function_options
@click.option('--pole', is_flag=True, default=False,
              help='Also examine the boundary pole at 1.')
@_output_options
def geometry_command(**options):
    """
    Estimate the lower order (and the angle at a boundary pole).
    """
    _invoke('geometry', **options)


@cli.command(name='verify')
@click.option('--suite', type=click.Choice(SUITES), default='all',
              show_default=True)
@_output_options
def verify_command(**options):
    """
    Run a verification suite (the exit status is 1 if any check fails).
    """
    _invoke('verify', **options)


@cli.command(name='report')
@click.option('--table', type=click.Choice(['hardy', 'omega', 'trace']),
              default='hardy', show_default=True)
@_function_options
@click.option('--radii', callback=_parse_radii, default=None,
              help='Comma-separated radii.')
@_output_options
def report_command(**options):
    """
    Emit a plot-ready table.
    """
    _invoke('report', **options)
