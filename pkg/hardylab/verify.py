#!/usr/bin/env python
# -*- coding: utf-8 -*-

# Created on 10/6/26 by Pat Daburu
"""
.. currentmodule:: hardylab.verify
.. moduleauthor:: Pat Daburu <pat@daburu.net>

Checks: one per inequality or identity, each with a margin you can read.

.. note::

    A positive margin means the inequality holds with room to spare.  A check
    passes when its margin is no worse than the negative of its tolerance.
"""
from concurrent.futures import ThreadPoolExecutor
import json
import logging
import math
from typing import Any, Callable, Dict, Iterable, List, Mapping, NamedTuple, \
    Sequence, Tuple
import zlib
import numpy as np
from .config import Tolerances, max_workers
from .errors import HardylabException
from .geometry import (
    half_tangents,
    koebe_transform,
    lower_order,
    pre_schwarzian_A,
    radial_A_limit,
    sector_containment,
    gronwall_bounds
)
from .herglotz import (
    DiscreteMeasure,
    angle_at_infinity_measure,
    random_measure,
    search_appendix_counterexamples
)
from .means import (
    DEFAULT_LADDER,
    KOEBE,
    baernstein_check,
    hardy_critical_exponent,
    hl_smoothness_rate,
    max_modulus,
    prawitz_check
)
from .series import closed_form, ts_derivative, ts_div
from .special import hayman_gamma, sector_coefficient_limit
from .types import pyfqn
from .xchg import Exportable
from .zoo import (
    Family,
    FunctionSpec,
    ZooFunction,
    build,
    eps0_solve,
    omega_sweep,
    zoo_function
)

logger = logging.getLogger(__name__)

#: the radii of the canonical grid
CANONICAL_RADII: Tuple[float, ...] = tuple(
    float(r) for r in 1.0 - np.geomspace(0.96, 0.01, 24)
)

#: the number of angles on each circle of the canonical grid
CANONICAL_ANGLES: int = 256

#: random measures drawn for the appendix search in a full suite
APPENDIX_TRIALS: int = 100_000

#: random convex maps drawn for the convex suite
RANDOM_CONVEX_MAPS: int = 100

#: the suites `run_suite` knows
SUITES: Tuple[str, ...] = ('all', 'construction', 'convex', 'geometry', 'hardy')


class NotZeroA2Exception(HardylabException):
    """
    Raised when a check that needs `a2 = 0` gets a function with `a2 != 0`.
    """


class CheckResult(NamedTuple):
    """
    The outcome of one check.
    """
    check_id: str  #: identifies the check (and what it was run on)
    function_spec: FunctionSpec or None  #: the function checked (if any)
    params: Mapping[str, Any]  #: the details behind the margin
    margin: float  #: positive when satisfied with slack
    passed: bool  #: `True` if `margin >= -tol`
    samples: int  #: how many points (or cases) were examined

    def export(self) -> Mapping[str, Any]:
        """
        Export the instance as a mapping of simple types.

        :return: the mapping
        """
        return {
            '__type__': pyfqn(self),
            'check_id': self.check_id,
            'function_spec': (
                self.function_spec.export() if self.function_spec else None
            ),
            'params': dict(self.params),
            'margin': self.margin,
            'passed': self.passed,
            'samples': self.samples
        }

    @classmethod
    def load(cls, data: Mapping[str, Any]) -> 'CheckResult' or None:
        """
        Create an instance from a mapping.

        :param data: the data
        :return: the instance
        """
        if not data:
            return None
        return cls(
            check_id=data['check_id'],
            function_spec=FunctionSpec.load(data.get('function_spec')),
            params=dict(data.get('params', {})),
            margin=data['margin'],
            passed=data['passed'],
            samples=data['samples']
        )


Exportable.register(CheckResult)


def _label(spec: FunctionSpec) -> str:
    params = ','.join(
        f'{k}={v:g}' if isinstance(v, (int, float)) and not isinstance(v, bool)
        else f'{k}#{zlib.crc32(json.dumps(v, sort_keys=True).encode()):08x}'
        for k, v in sorted(spec.params.items())
    )
    return f'{spec.family.value}({params})'


def _result(
        name: str,
        spec: FunctionSpec or None,
        margin: float,
        tol: float,
        samples: int,
        **params
) -> CheckResult:
    margin = float(margin)
    return CheckResult(
        check_id=name if spec is None else f'{name}:{_label(spec)}',
        function_spec=spec,
        params=params,
        margin=margin,
        passed=bool(margin >= -tol),
        samples=int(samples)
    )


def _trusted_radius(zf: ZooFunction) -> float:
    return min(zf.f.max_radius, zf.df.max_radius, zf.d2f.max_radius)


def canonical_grid(max_radius: float = 1.0) -> Tuple[np.ndarray, np.ndarray]:
    """
    Get the canonical grid (24 radii by 256 angles).

    :param max_radius: leave out the circles beyond this radius
    :return: the points and their moduli
    """
    radii = np.array([r for r in CANONICAL_RADII if r <= max_radius])
    theta = 2.0 * math.pi * np.arange(CANONICAL_ANGLES) / CANONICAL_ANGLES
    return (
        np.outer(radii, np.exp(1j * theta)).ravel(),
        np.repeat(radii, CANONICAL_ANGLES)
    )


def _relative(bound: np.ndarray, value: np.ndarray) -> float:
    # min (bound - value)/bound
    return float(np.min((bound - value) / np.maximum(np.abs(bound),
                                                     np.finfo(float).tiny)))


def check_gronwall(
        zf: ZooFunction,
        tolerances: Tolerances = Tolerances()
) -> List[CheckResult]:
    """
    Check `l_alpha(r) <= |f| <= s_alpha(r)` and the same sandwich for `f'`,
    with `alpha = |a2|`.

    :param zf: a convex map
    :param tolerances: the tolerances
    :return: one result for `f` and one for `f'`
    """
    alpha = min(1.0, abs(zf.a2))
    z, rho = canonical_grid(_trusted_radius(zf))
    envelopes = np.array([gronwall_bounds(alpha, r) for r in rho]).T
    lower, upper, lower_prime, upper_prime = envelopes
    modulus, slope = np.abs(zf.f(z)), np.abs(zf.df(z))
    results = []
    for name, lo, value, hi in (
            ('gronwall.modulus', lower, modulus, upper),
            ('gronwall.derivative', lower_prime, slope, upper_prime)
    ):
        upper_margin = _relative(hi, value)
        lower_margin = float(np.min((value - lo) / lo))
        results.append(_result(
            name, zf.spec, min(upper_margin, lower_margin), tolerances.grid,
            z.size, alpha=alpha, upper_margin=upper_margin,
            lower_margin=lower_margin
        ))
    return results


def check_coeff_bound(
        zf: ZooFunction,
        tolerances: Tolerances = Tolerances()
) -> CheckResult:
    """
    Check `|a_n| <= exp((|a2|^2 - 1)/2)`, the half-order starlikeness behind
    it and the Lebedev-Milin chain that carries the argument.

    :param zf: a convex map
    :param tolerances: the tolerances
    :return: the result (the margin is the least of the three)
    """
    f = zf.series
    a2 = abs(zf.a2)
    bound = math.exp((a2 * a2 - 1.0) / 2.0)
    coefficient_margin = float(
        np.min((bound - np.abs(f.coeffs[2:])) / bound)
    )
    # Re(z f'/f) > 1/2 on the grid
    z, _ = canonical_grid(_trusted_radius(zf))
    starlike_margin = float(np.min(np.real(z * zf.df(z) / zf.f(z)))) - 0.5
    # h = 2 z f'/f - 1 has coefficients c_k; then
    # |a_(n+1)|^2 <= exp(sum_(k <= n) (|c_k|^2 - 4)/(4k)).
    h = 2.0 * ts_div(ts_derivative(f), f.divided_by_z()) - 1.0
    k = np.arange(1, h.order + 1)
    exponents = np.cumsum((np.abs(h.coeffs[1:]) ** 2 - 4.0) / (4.0 * k))
    rhs = np.exp(exponents)
    lhs = np.abs(f.coeffs[2:h.order + 2]) ** 2
    milin_margin = _relative(rhs[:lhs.size], lhs)
    return _result(
        'coeff_bound', zf.spec,
        min(coefficient_margin, starlike_margin, milin_margin),
        tolerances.grid, f.order - 1 + z.size,
        bound=bound,
        coefficient_margin=coefficient_margin,
        starlike_margin=starlike_margin,
        milin_margin=milin_margin
    )


def check_coeff_asymptotics(
        spec: FunctionSpec,
        n_max: int = 2000,
        tolerances: Tolerances = Tolerances()
) -> CheckResult:
    """
    Check the long coefficient tail of a convex map.  For a sector map the
    limit `n^(1 - alpha) a_n -> 2^(alpha - 1)/Gamma(alpha + 1)` is checked
    (for the strip map `alpha = 0`, `n a_n` is `1` at odd `n` and `0` at even
    `n`).  No limit is known for other maps, so the tail is held to
    `|a_n| <= exp((|a2|^2 - 1)/2)` out to `n_max` instead.  The largest
    `n^(1 - |a2|) |a_n|` is reported either way.

    :param spec: a convex map
    :param n_max: the order to go out to
    :param tolerances: the tolerances
    :return: the result
    """
    zf = build(spec.with_order(n_max))
    coeffs = np.abs(zf.series.coeffs)
    a2 = abs(zf.a2)
    n = np.arange(1, n_max + 1, dtype=float)
    scaled = n ** (1.0 - a2) * coeffs[1:]
    params = {'sup_scaled': float(np.max(scaled)), 'n_max': n_max}
    if spec.family not in (Family.SECTOR, Family.HALF_PLANE):
        bound = math.exp((a2 * a2 - 1.0) / 2.0)
        worst = float(np.max(coeffs[2:]))
        params.update(bound=bound, max_coefficient=worst)
        return _result('coeff_asymptotics', spec, (bound - worst) / bound,
                       tolerances.grid, n_max, **params)
    alpha = spec.real('alpha', 1.0)
    if alpha > 0.0:
        limit = sector_coefficient_limit(alpha)
        error = abs(scaled[-1] - limit) / limit
        params.update(limit=limit, relative_error=float(error))
    else:
        # The odd subsequence of n a_n sits at 1: it doesn't tend to 0.
        odd_tail, even_tail = scaled[0::2][-1], scaled[1::2][-1]
        error = max(abs(odd_tail - 1.0), abs(even_tail))
        params.update(odd_tail=float(odd_tail), even_tail=float(even_tail))
    return _result('coeff_asymptotics', spec, tolerances.asymptotic - error,
                   0.0, n_max, **params)


def check_a3_bounds(
        zf: ZooFunction,
        tolerances: Tolerances = Tolerances()
) -> CheckResult:
    """
    Check `|a3| <= (1 + 2|a2|^2)/3` and `|a3 - a2^2| <= (1 - |a2|^2)/3`.

    :param zf: a convex map
    :param tolerances: the tolerances
    :return: the result (absolute margins; sectors are the equality case)
    """
    a2, a3 = zf.series[2], zf.series[3]
    first = (1.0 + 2.0 * abs(a2) ** 2) / 3.0 - abs(a3)
    second = (1.0 - abs(a2) ** 2) / 3.0 - abs(a3 - a2 * a2)
    return _result(
        'a3_bounds', zf.spec, min(first, second), tolerances.equality, 2,
        first_margin=first,
        second_margin=second,
        equality_case=zf.family in (Family.SECTOR, Family.HALF_PLANE)
    )


def lipschitz_exponent_a2zero(a3: complex) -> float:
    """
    Get the boundary smoothness implied by the distortion bound of a convex
    map with `a2 = 0`.

    :param a3: the third coefficient
    :return: `(1 - g)/(3 + g)` with `g = 3|a3|`
    """
    g = 3.0 * abs(a3)
    return (1.0 - g) / (3.0 + g)


def check_distortion_a2zero(
        zf: ZooFunction,
        tolerances: Tolerances = Tolerances()
) -> CheckResult:
    """
    Check `|f'(z)| <= (1 - |z|)^(-2(1 + g)/(3 + g))`, `g = 3|a3|`, for a convex
    map with `a2 = 0`, and the Schwarz-Pick bound behind it.

    :param zf: a convex map with `a2 = 0`
    :param tolerances: the tolerances
    :return: the result
    :raises NotZeroA2Exception: if `a2 != 0`
    """
    if abs(zf.a2) > 1e-10:
        raise NotZeroA2Exception(
            f'The distortion check needs a2 = 0 (got {zf.a2}).'
        )
    a3 = zf.series[3]
    g = 3.0 * abs(a3)
    exponent = 2.0 * (1.0 + g) / (3.0 + g)
    z, rho = canonical_grid(_trusted_radius(zf))
    distortion_margin = _relative((1.0 - rho) ** -exponent, np.abs(zf.df(z)))
    # psi = (f''/f') / (z (2 + z f''/f')) is a self-map of the disk with
    # psi(0) = 3 a3.
    ratio = zf.d2f(z) / zf.df(z)
    psi = ratio / (z * (2.0 + z * ratio))
    pick_margin = float(np.min((g + rho) / (1.0 + g * rho) - np.abs(psi)))
    return _result(
        'distortion_a2zero', zf.spec, min(distortion_margin, pick_margin),
        tolerances.grid, z.size,
        exponent=exponent,
        lipschitz_exponent=lipschitz_exponent_a2zero(a3),
        distortion_margin=distortion_margin,
        pick_margin=pick_margin
    )


def check_convex_preschwarzian(
        zf: ZooFunction,
        tolerances: Tolerances = Tolerances()
) -> CheckResult:
    """
    Check `(1 - |z|^2) |f''/f'| <= 2 (1 + |a2|)`.

    :param zf: a convex map
    :param tolerances: the tolerances
    :return: the result
    """
    z, rho = canonical_grid(_trusted_radius(zf))
    bound = 2.0 * (1.0 + abs(zf.a2))
    value = (1.0 - rho ** 2) * np.abs(zf.d2f(z) / zf.df(z))
    return _result('convex_preschwarzian', zf.spec,
                   _relative(np.full(value.shape, bound), value),
                   tolerances.grid, z.size, bound=bound)


class HardyRow(NamedTuple):
    """
    A line of the table of critical exponents.
    """
    spec: FunctionSpec  #: the function
    derivative: bool  #: `True` to examine `f'` rather than `f`
    p_star: float  #: the predicted critical exponent


def hardy_table() -> List[HardyRow]:
    """
    Get the predicted critical exponents of the extremal functions.

    :return: the rows
    """
    rows = [
        HardyRow(FunctionSpec(Family.SECTOR, {'alpha': a}), True, 1.0 / (1.0 + a))
        for a in (0.0, 0.5, 1.0)
    ]
    rows.extend(
        HardyRow(FunctionSpec(Family.SECTOR, {'alpha': a}), False, 1.0 / a)
        for a in (0.5, 1.0)
    )
    rows.extend(
        HardyRow(FunctionSpec(Family.STARLIKE_EXTREMAL, {'alpha': a}), True,
                 2.0 / (4.0 + a))
        for a in (0.0, 1.0, 2.0)
    )
    rows.extend([
        HardyRow(FunctionSpec(Family.STARLIKE_EXTREMAL, {'alpha': 1.0}),
                 False, 2.0 / 3.0),
        HardyRow(FunctionSpec(Family.KOEBE_DILATED, {'r': 1.0}), True,
                 1.0 / 3.0),
        HardyRow(FunctionSpec(Family.KOEBE_DILATED, {'r': 1.0}), False, 0.5),
        HardyRow(FunctionSpec(Family.CTC_EXTREMAL, {'t': 0.5}), True,
                 1.0 / 3.0),
        HardyRow(FunctionSpec(Family.CTC_EXTREMAL, {'t': 0.5}), False, 0.5),
        HardyRow(FunctionSpec(Family.R_EXAMPLE), True, 0.5),
        HardyRow(FunctionSpec(Family.R_EXAMPLE), False, 1.0)
    ])
    return rows


def check_hardy_row(
        row: HardyRow,
        tolerances: Tolerances = Tolerances()
) -> CheckResult:
    """
    Estimate one critical exponent and compare it with the prediction.

    :param row: the table row
    :param tolerances: the tolerances
    :return: the result
    """
    zf = build(row.spec)
    evaluator = zf.df if row.derivative else zf.f
    estimate = hardy_critical_exponent(
        evaluator, (0.25 * row.p_star, 2.5 * row.p_star)
    )
    error = abs(estimate.p_star - row.p_star) / row.p_star
    return _result(
        'hardy.derivative' if row.derivative else 'hardy.function',
        row.spec, tolerances.exponent - error, 0.0, len(DEFAULT_LADDER),
        predicted=row.p_star, estimated=estimate.p_star,
        relative_error=error
    )


def check_hardy_table(
        tolerances: Tolerances = Tolerances()
) -> List[CheckResult]:
    """
    Compare every estimated critical exponent with the table.

    :param tolerances: the tolerances
    :return: one result per row
    """
    return [check_hardy_row(row, tolerances) for row in hardy_table()]


def check_smoothness(
        alpha: float,
        tolerances: Tolerances = Tolerances()
) -> CheckResult:
    """
    Check that the fitted smoothness of `s_alpha` (at `p = 1`) is `1 - alpha`.

    :param alpha: the opening
    :param tolerances: the tolerances
    :return: the result
    """
    zf = zoo_function(Family.SECTOR, alpha=alpha)
    t_hat = hl_smoothness_rate(zf.df, 1.0)
    error = abs(t_hat - (1.0 - alpha))
    return _result('smoothness', zf.spec, tolerances.exponent - error, 0.0,
                   len(DEFAULT_LADDER), t_hat=t_hat, predicted=1.0 - alpha)


#: the functions (and the identity, `None`) the Prawitz check runs on
PRAWITZ_FUNCTIONS: Tuple[FunctionSpec or None, ...] = (
    None,
    FunctionSpec(Family.KOEBE_DILATED, {'r': 1.0}),
    FunctionSpec(Family.SECTOR, {'alpha': 0.5}),
    FunctionSpec(Family.STARLIKE_EXTREMAL, {'alpha': 1.0})
)

_IDENTITY = closed_form(lambda z: z)


def check_prawitz(
        spec: FunctionSpec or None,
        exponents: Sequence[float] = (0.3, 0.45),
        radii: Sequence[float] = (0.5, 0.9),
        tolerances: Tolerances = Tolerances()
) -> CheckResult:
    """
    Check `M_p^p(r, f) <= p integral_0^r M_inf^p(t, f)/t dt`.

    :param spec: the function (`None` for the identity)
    :param exponents: the exponents
    :param radii: the radii
    :param tolerances: the tolerances
    :return: the result (the least relative margin)
    """
    f = _IDENTITY if spec is None else build(spec).f
    margins = []
    for p in exponents:
        for r in radii:
            check = prawitz_check(f, p, r, tol=tolerances.prawitz)
            margins.append((check.rhs - check.lhs) / check.rhs)
    name = 'prawitz:identity' if spec is None else 'prawitz'
    return _result(name, spec, min(margins), tolerances.prawitz,
                   len(margins))


def check_baernstein(
        spec: FunctionSpec,
        exponents: Sequence[float] = (0.5, 1.0),
        radii: Sequence[float] = (0.5, 0.9),
        tolerances: Tolerances = Tolerances()
) -> CheckResult:
    """
    Check `M_p(r, f) <= M_p(r, k)` against the Koebe function.

    :param spec: a univalent function
    :param exponents: the exponents
    :param radii: the radii
    :param tolerances: the tolerances
    :return: the result
    """
    f = build(spec).f
    margins = []
    for p in exponents:
        for r in radii:
            check = baernstein_check(f, p, r, tol=tolerances.prawitz)
            margins.append((check.rhs - check.lhs) / check.rhs)
    return _result('baernstein', spec, min(margins), tolerances.prawitz,
                   len(margins))


def check_hayman(
        r: float = 1.0 - 2.0 ** -12,
        tolerances: Tolerances = Tolerances()
) -> CheckResult:
    """
    Check Hayman's constant for the Koebe function: `(1 - r)^2 M_inf(r, k)`
    tends to `gamma(2) = 1`.

    :param r: the radius
    :param tolerances: the tolerances
    :return: the result
    """
    gamma = hayman_gamma(2.0).gamma
    observed = (1.0 - r) ** 2 * max_modulus(KOEBE, r)
    alphas = np.linspace(0.0, 2.0, 41)
    lams = [hayman_gamma(a).lam for a in alphas]
    error = abs(observed - gamma) / gamma
    return _result(
        'hayman', FunctionSpec(Family.KOEBE_DILATED, {'r': 1.0}),
        tolerances.asymptotic - error, 0.0, len(alphas),
        gamma=gamma, observed=observed,
        lambda_decreasing=bool(np.all(np.diff(lams) < 0.0))
    )


def theta_measure(m: float) -> DiscreteMeasure:
    """
    Get a measure with mass `m` at `1` and the rest spread over `exp(+-2 pi
    i/3)`.

    :param m: the pole mass
    :return: the measure
    """
    if m >= 1.0:
        return DiscreteMeasure.point_mass(0.0)
    rest = (1.0 - m) / 2.0
    return DiscreteMeasure.from_args([0.0, 2.0 / 3.0, -2.0 / 3.0],
                                     [m, rest, 1.0 - m - rest])


def check_theta_consistency(
        m: float,
        tolerances: Tolerances = Tolerances()
) -> CheckResult:
    """
    Check that the angle at infinity of a convex map agrees three ways: from
    its measure, from the radial limit of `A_f` and from the half tangents.

    :param m: the pole mass, `m >= 1/2`
    :param tolerances: the tolerances
    :return: the result
    """
    mu = theta_measure(m)
    spec = FunctionSpec(Family.CONVEX_FROM_MEASURE, {'measure': mu})
    zf = build(spec)
    angles = (
        angle_at_infinity_measure(mu, 1.0),
        math.pi * radial_A_limit(zf, 1.0),
        half_tangents(zf.f, 0.0).delta
    )
    spread = max(angles) - min(angles)
    return _result('theta_consistency', spec, tolerances.theta - spread, 0.0,
                   3, m=m, measure=angles[0], radial=angles[1],
                   half_tangents=angles[2])


def check_lower_order(
        spec: FunctionSpec,
        expected: float or None = None,
        tolerances: Tolerances = Tolerances()
) -> CheckResult:
    """
    Check the estimated lower order against a known value (or, without one,
    against the upper bound `|a2|`).

    :param spec: the function
    :param expected: the known lower order
    :param tolerances: the tolerances
    :return: the result
    """
    zf = build(spec)
    estimate = lower_order(zf)
    if expected is None:
        margin = abs(zf.a2) + 1e-9 - estimate.beta
    else:
        margin = 1e-6 - abs(estimate.beta - expected)
    return _result('lower_order', spec, margin, 0.0, estimate.samples,
                   beta=estimate.beta, expected=expected,
                   argmin=[estimate.argmin_point.real,
                           estimate.argmin_point.imag])


def check_sector_containment(
        alpha: float,
        slack: float = 0.05,
        samples: int = 10_000
) -> CheckResult:
    """
    Check that `s_alpha` fits in a sector of aperture `alpha pi + slack` and
    not in one of aperture `alpha pi - slack`.

    :param alpha: the opening
    :param slack: how far the apertures stray from `alpha pi`
    :param samples: the number of boundary samples
    :return: the result
    """
    zf = zoo_function(Family.SECTOR, alpha=alpha)
    wide = sector_containment(zf.f, alpha * math.pi + slack, samples)
    narrow = sector_containment(zf.f, alpha * math.pi - slack, samples)
    ok = wide.contained and not narrow.contained
    return _result(
        'sector_containment', zf.spec, 1.0 if ok else -1.0, 0.0, samples,
        wide=wide.contained, narrow=narrow.contained,
        apex=[wide.apex.real, wide.apex.imag] if wide.apex is not None
        else None
    )


def check_koebe_transform(
        spec: FunctionSpec,
        points: Iterable[complex],
        tolerances: Tolerances = Tolerances()
) -> CheckResult:
    """
    Check that the second coefficient of each Koebe transform is the
    pre-Schwarzian at its point.

    :param spec: the function
    :param points: the points
    :param tolerances: the tolerances
    :return: the result
    """
    zf = build(spec)
    points = list(points)
    errors = [
        abs(koebe_transform(zf.series, zeta, spec.order)[2]
            - pre_schwarzian_A(zf.series, zeta))
        for zeta in points
    ]
    return _result('koebe_transform', spec, 1e-10 - max(errors), 0.0,
                   len(points), worst=max(errors))


def check_sector_coefficients(
        alphas: Sequence[float] = (0.0, 0.25, 0.5, 0.75, 1.0),
        order: int = 64
) -> CheckResult:
    """
    Check `a2 = alpha` and `a3 = (1 + 2 alpha^2)/3` for sector maps.

    :param alphas: the openings
    :param order: the truncation order
    :return: the result
    """
    worst = 0.0
    for alpha in alphas:
        s = zoo_function(Family.SECTOR, order, alpha=alpha).series
        worst = max(worst, abs(s[2] - alpha),
                    abs(s[3] - (1.0 + 2.0 * alpha * alpha) / 3.0))
    return _result('sector_coefficients', None, 1e-12 - worst, 0.0,
                   len(alphas), worst=worst)


def check_lpr_construction(
        samples: int = 20,
        order: int = 16,
        tolerances: Tolerances = Tolerances()
) -> CheckResult:
    """
    Check the composition construction: `a2 = 2r + eps/4` across the
    admissible set, `eps0` residuals, the reach of the sweep and the range
    bound `|g| < 2^eps/(1 - 3 eps)`.

    :param samples: how many `(r, eps)` pairs to build
    :param order: the truncation order
    :param tolerances: the tolerances
    :return: the result
    """
    sweep = omega_sweep()
    picks = sweep[::max(1, len(sweep) // samples)][:samples]
    a2_error = 0.0
    for r, eps, a2 in picks:
        zf = zoo_function(Family.LPR_COMPOSITION, order, r=r, eps=eps)
        a2_error = max(a2_error, abs(zf.a2 - a2))
    residual = max(
        abs(2.0 ** eps0_solve(r) / (1.0 - 3.0 * eps0_solve(r)) * r - 1.0)
        for r, _, _ in picks
    )
    reach = (min(a for _, _, a in sweep), max(a for _, _, a in sweep))
    # The range of g on a circle close to the boundary.
    range_margin = math.inf
    theta = 2.0 * math.pi * np.arange(256) / 256
    for eps in (0.05, 0.25):
        g = zoo_function(Family.PFALTZGRAFF, order, eps=eps)
        bound = 2.0 ** eps / (1.0 - 3.0 * eps)
        modulus = float(np.max(np.abs(g.f(0.99 * np.exp(1j * theta)))))
        range_margin = min(range_margin, (bound - modulus) / bound)
    margin = min(
        1e-10 - a2_error,
        1e-12 - residual,
        0.01 - reach[0],
        reach[1] - 1.99,
        range_margin
    )
    return _result('lpr_construction', None, margin, 0.0, len(picks),
                   a2_error=a2_error, eps0_residual=residual,
                   a2_min=reach[0], a2_max=reach[1],
                   range_margin=range_margin)


def check_appendix(
        seed: int,
        trials: int = APPENDIX_TRIALS,
        tolerances: Tolerances = Tolerances()
) -> CheckResult:
    """
    Search for a counterexample to the two-antipodal-atoms theorem (and
    expect to find none).

    :param seed: the random seed
    :param trials: how many measures to try
    :param tolerances: the tolerances
    :return: the result
    """
    outcome = search_appendix_counterexamples(
        np.random.default_rng(seed), trials, tol=tolerances.appendix
    )
    return _result('appendix', None, -float(len(outcome.counterexamples)),
                   0.0, trials, triggered=outcome.triggered, seed=seed)


def random_convex_specs(seed: int, count: int) -> List[FunctionSpec]:
    """
    Get convex maps built from seeded random measures.

    :param seed: the random seed
    :param count: how many
    :return: the specs
    """
    rng = np.random.default_rng(seed)
    return [
        FunctionSpec(Family.CONVEX_FROM_MEASURE,
                     {'measure': random_measure(rng)})
        for _ in range(count)
    ]


def _convex_tasks(
        seed: int,
        tolerances: Tolerances
) -> List[Callable[[], Any]]:
    specs = [
        FunctionSpec(Family.SECTOR, {'alpha': a}) for a in (0.0, 0.5, 1.0)
    ] + [
        FunctionSpec(Family.STRIP, {'alpha': 0.5}),
        FunctionSpec(Family.HALF_PLANE),
        FunctionSpec(Family.POLYLOG, {'t': 0.5}),
        FunctionSpec(Family.POLYLOG, {'t': 1.0})
    ] + random_convex_specs(seed, RANDOM_CONVEX_MAPS)
    tasks = []
    for spec in specs:
        tasks.append(lambda s=spec: check_gronwall(build(s), tolerances))
        tasks.append(lambda s=spec: check_coeff_bound(build(s), tolerances))
        tasks.append(lambda s=spec: check_a3_bounds(build(s), tolerances))
        tasks.append(
            lambda s=spec: check_convex_preschwarzian(build(s), tolerances)
        )
    a2_zero = [
        FunctionSpec(Family.SECTOR, {'alpha': 0.0}),
        FunctionSpec(Family.CONVEX_FROM_MEASURE, {
            'measure': DiscreteMeasure.from_args([0.5, -0.5], [0.5, 0.5])
        })
    ]
    tasks.extend(
        lambda s=spec: check_distortion_a2zero(build(s), tolerances)
        for spec in a2_zero
    )
    tasks.extend(
        lambda a=alpha: check_coeff_asymptotics(
            FunctionSpec(Family.SECTOR, {'alpha': a}), tolerances=tolerances)
        for alpha in (0.0, 0.5, 1.0)
    )
    return tasks


def _hardy_tasks(tolerances: Tolerances) -> List[Callable[[], Any]]:
    tasks: List[Callable[[], Any]] = [
        lambda row=row: check_hardy_row(row, tolerances)
        for row in hardy_table()
    ]
    tasks.extend(
        lambda a=alpha: check_smoothness(a, tolerances) for alpha in (0.0, 0.5)
    )
    tasks.extend(
        lambda s=spec: check_prawitz(s, tolerances=tolerances)
        for spec in PRAWITZ_FUNCTIONS
    )
    tasks.extend(
        lambda s=spec: check_baernstein(s, tolerances=tolerances)
        for spec in (
            FunctionSpec(Family.SECTOR, {'alpha': 0.5}),
            FunctionSpec(Family.STARLIKE_EXTREMAL, {'alpha': 1.0}),
            FunctionSpec(Family.CTC_EXTREMAL, {'t': 0.5}),
            FunctionSpec(Family.R_EXAMPLE)
        )
    )
    tasks.append(lambda: check_hayman(tolerances=tolerances))
    return tasks


def _geometry_tasks(
        seed: int,
        tolerances: Tolerances
) -> List[Callable[[], Any]]:
    tasks: List[Callable[[], Any]] = [
        lambda a=alpha: check_lower_order(
            FunctionSpec(Family.SECTOR, {'alpha': a}), a, tolerances)
        for alpha in (0.25, 0.5, 0.75, 1.0)
    ]
    tasks.extend(
        lambda s=spec: check_lower_order(s, None, tolerances)
        for spec in random_convex_specs(seed, 2)
    )
    tasks.extend(
        lambda m=m: check_theta_consistency(m, tolerances)
        for m in (0.5, 0.625, 0.75, 1.0)
    )
    tasks.extend(
        lambda a=alpha: check_sector_containment(a)
        for alpha in (0.25, 0.5, 0.75)
    )
    rng = np.random.default_rng(seed)
    points = 0.5 * np.sqrt(rng.uniform(size=10)) * np.exp(
        2j * math.pi * rng.uniform(size=10))
    tasks.extend(
        lambda s=spec: check_koebe_transform(s, points, tolerances)
        for spec in (
            FunctionSpec(Family.SECTOR, {'alpha': 0.5}),
            FunctionSpec(Family.KOEBE_DILATED, {'r': 1.0}),
            FunctionSpec(Family.CTC_EXTREMAL, {'t': 0.5})
        )
    )
    return tasks


def _construction_tasks(
        seed: int,
        tolerances: Tolerances
) -> List[Callable[[], Any]]:
    return [
        check_sector_coefficients,
        lambda: check_lpr_construction(tolerances=tolerances),
        lambda: check_appendix(seed, tolerances=tolerances)
    ]


def suite_tasks(
        name: str,
        seed: int = 0,
        tolerances: Tolerances = Tolerances()
) -> List[Callable[[], Any]]:
    """
    Get the checks that make up a suite.

    :param name: the suite (`convex`, `hardy`, `geometry`, `construction` or
        `all`)
    :param seed: the random seed
    :param tolerances: the tolerances
    :return: zero-argument callables returning results (or lists of them)
    """
    builders: Dict[str, Callable[[], List[Callable[[], Any]]]] = {
        'convex': lambda: _convex_tasks(seed, tolerances),
        'hardy': lambda: _hardy_tasks(tolerances),
        'geometry': lambda: _geometry_tasks(seed, tolerances),
        'construction': lambda: _construction_tasks(seed, tolerances)
    }
    if name == 'all':
        return [task for key in sorted(builders) for task in builders[key]()]
    try:
        return builders[name]()
    except KeyError:
        raise ValueError(f'{name!r} is not a suite; try one of {SUITES}.')


def run_suite(
        name: str = 'all',
        seed: int = 0,
        tolerances: Tolerances = Tolerances(),
        workers: int = None
) -> List[CheckResult]:
    """
    Run a suite of checks.

    :param name: the suite
    :param seed: the random seed
    :param tolerances: the tolerances
    :param workers: the size of the thread pool (`None` reads
        `HARDYLAB_THREADS`)
    :return: the results, sorted by `check_id`
    """
    tasks = suite_tasks(name, seed, tolerances)
    workers = max_workers() if workers is None else max(1, int(workers))
    logger.info('Running %d %s checks on %d thread(s).',
                len(tasks), name, workers)
    with ThreadPoolExecutor(max_workers=workers) as pool:
        outcomes = list(pool.map(lambda task: task(), tasks))
    results: List[CheckResult] = []
    for outcome in outcomes:
        if isinstance(outcome, CheckResult):
            results.append(outcome)
        else:
            results.extend(outcome)
    for result in results:
        if not result.passed:
            logger.warning('%s failed (margin %.3g).', result.check_id,
                           result.margin)
    return sorted(results, key=lambda r: r.check_id)


def summary_table(results: Iterable[CheckResult]) -> str:
    """
    Get a fixed-width table of results.

    :param results: the results
    :return: the table
    """
    results = list(results)
    width = max([len('check_id')] + [len(r.check_id) for r in results])
    lines = [f"{'check_id':<{width}}  {'margin':>12}  passed"]
    lines.extend(
        f'{r.check_id:<{width}}  {r.margin:>12.4e}  '
        f"{'yes' if r.passed else 'NO'}"
        for r in results
    )
    passed = sum(1 for r in results if r.passed)
    lines.append(f'{passed}/{len(results)} passed')
    return '\n'.join(lines)
