#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
.. currentmodule:: hardylab
.. moduleauthor:: Pat Daburu <pat@daburu.net>

A numerical lab for univalent functions, Hardy exponents and Herglotz
measures.
"""
from .config import BadConfigException, RunConfig, Tolerances
from .errors import HardylabException
from .herglotz import (
    DiscreteMeasure,
    angle_at_infinity_measure,
    appendix_theorem_check,
    boundary_rotation,
    caratheodory_series,
    moment
)
from .geometry import (
    half_tangents,
    koebe_transform,
    lower_order,
    pre_schwarzian_A,
    radial_A_limit,
    sector_containment
)
from .means import (
    blowup_exponent,
    hardy_critical_exponent,
    hl_smoothness_rate,
    integral_means,
    max_modulus,
    prawitz_check
)
from .series import (
    EvaluatorKind,
    PointEvaluator,
    TaylorSeries,
    ts_compose,
    ts_div,
    ts_exp,
    ts_log,
    ts_mul,
    ts_pow
)
from .special import gamma_function, hayman_gamma
from .verify import CheckResult, run_suite, summary_table
from .version import __version__, __release__
from .xchg import Exportable, load_any
from .zoo import (
    Family,
    FunctionSpec,
    ZooFunction,
    build,
    eps0_solve,
    lpr_composition,
    zoo_function
)
