#!/usr/bin/env python
# -*- coding: utf-8 -*-

# Created on 10/4/26 by Pat Daburu
"""
.. currentmodule:: hardylab.means
.. moduleauthor:: Pat Daburu <pat@daburu.net>

Integral means on circles, how fast they blow up, and the Hardy exponents
you can read off of that.

.. note::

    Means are computed with the periodic trapezoidal rule, which converges
    geometrically for the (analytic, periodic) integrands we meet as long as
    the circle stays clear of the boundary singularities.  The number of
    points grows like `1/(1 - r)` so that it always does.
"""
from functools import lru_cache
import logging
import math
from typing import Any, Iterable, List, Mapping, NamedTuple, Sequence, Tuple
import numpy as np
from scipy import integrate, optimize, stats
from .errors import HardylabException
from .series import PointEvaluator, closed_form
from .types import pyfqn
from .xchg import Exportable

logger = logging.getLogger(__name__)

#: the default radius ladder `1 - 2^-k`, `k = 3..12`
DEFAULT_LADDER: Tuple[float, ...] = tuple(1.0 - 2.0 ** -k for k in range(3, 13))

#: how many of the outermost rungs go into a slope fit
FIT_RUNGS: int = 6

#: the fewest quadrature points on a circle
MIN_THETA: int = 2048

#: quadrature points per unit of `1/(1 - r)`
THETA_PER_GAP: int = 64

#: circles of samples kept for reuse between means (a ladder plus two)
SAMPLE_CACHE_SIZE: int = len(DEFAULT_LADDER) + 2

#: the slack allowed when asserting that means don't decrease
MONOTONE_SLACK: float = 1e-9

#: the relative drift (when the point count doubles) that earns a warning
DRIFT_WARNING: float = 1e-6

#: the Koebe function, the yardstick for univalent means
KOEBE: PointEvaluator = closed_form(lambda z: z / (1.0 - z) ** 2)


class NonFiniteSampleException(HardylabException):
    """
    Raised when a function produces a `NaN` or an infinity on a circle.
    """


class RegressionIllConditionedException(HardylabException):
    """
    Raised when there aren't enough (distinct) rungs to fit a slope.
    """


class NoBracketException(HardylabException):
    """
    Raised when the fitted slope doesn't change sign across a bracket of
    exponents.
    """


class QuadratureDivergedException(HardylabException):
    """
    Raised when adaptive quadrature fails to converge.
    """


class TruncationRadiusException(HardylabException):
    """
    Raised when a Horner evaluator is asked for values beyond the radius it
    can be trusted to.
    """


class NonMonotoneMeansException(HardylabException):
    """
    Raised when sampled means decrease with the radius (which they can't, so
    the quadrature has gone wrong).
    """


class MeansProfile(NamedTuple):
    """
    Integral means of one function over a ladder of radii.
    """
    p: float  #: the exponent
    radii: Tuple[float, ...]  #: the (increasing) radii
    values: Tuple[float, ...]  #: `M_p(r, f)` for each radius
    n_theta: Tuple[int, ...]  #: the quadrature points used for each radius
    evaluator_kind: str  #: how the function was evaluated

    def rows(self) -> List[Mapping[str, Any]]:
        """
        Get the profile as table rows (`p`, `r`, `n_theta`, `M_p`).

        :return: the rows
        """
        return [
            {'p': self.p, 'r': r, 'n_theta': n, 'M_p': m}
            for r, n, m in zip(self.radii, self.n_theta, self.values)
        ]

    def export(self) -> Mapping[str, Any]:
        """
        Export the instance as a mapping of simple types.

        :return: the mapping
        """
        return {
            '__type__': pyfqn(self),
            'p': self.p,
            'radii': list(self.radii),
            'values': list(self.values),
            'n_theta': list(self.n_theta),
            'evaluator_kind': self.evaluator_kind
        }

    @classmethod
    def load(cls, data: Mapping[str, Any]) -> 'MeansProfile' or None:
        """
        Create an instance from a mapping.

        :param data: the data
        :return: the instance
        """
        if not data:
            return None
        return cls(
            p=float(data['p']),
            radii=tuple(data['radii']),
            values=tuple(data['values']),
            n_theta=tuple(int(n) for n in data['n_theta']),
            evaluator_kind=data['evaluator_kind']
        )


class ExponentEstimate(NamedTuple):
    """
    A fitted blow-up rate and (optionally) the critical Hardy exponent.
    """
    gamma: float  #: `max(0, slope)`
    stderr: float  #: the standard error of the slope
    p_star: float or None = None  #: the critical exponent
    bracket: Tuple[float, float] or None = None  #: where `p_star` lies
    slope: float or None = None  #: the raw fitted slope
    p: float or None = None  #: the exponent the slope was fitted at

    def export(self) -> Mapping[str, Any]:
        """
        Export the instance as a mapping of simple types.

        :return: the mapping
        """
        return {
            '__type__': pyfqn(self),
            'gamma': self.gamma,
            'stderr': self.stderr,
            'p_star': self.p_star,
            'bracket': list(self.bracket) if self.bracket else None,
            'slope': self.slope,
            'p': self.p
        }

    @classmethod
    def load(cls, data: Mapping[str, Any]) -> 'ExponentEstimate' or None:
        """
        Create an instance from a mapping.

        :param data: the data
        :return: the instance
        """
        if not data:
            return None
        return cls(
            gamma=data['gamma'],
            stderr=data['stderr'],
            p_star=data.get('p_star'),
            bracket=tuple(data['bracket']) if data.get('bracket') else None,
            slope=data.get('slope'),
            p=data.get('p')
        )


class BoundCheck(NamedTuple):
    """
    Both sides of an inequality and whether it holds.
    """
    lhs: float  #: the left-hand side
    rhs: float  #: the right-hand side
    holds: bool  #: `True` if `lhs <= rhs` (within the tolerance)


class RadialTrace(NamedTuple):
    """
    Moduli along a ray, for inspection.
    """
    theta: float  #: the ray's argument
    radii: Tuple[float, ...]  #: the radii
    moduli: Tuple[float, ...]  #: `|f(r exp(i theta))|`
    max_min_ratio: float  #: the largest modulus over the smallest
    log_variation: float  #: the total variation of `log |f|`


# The exports are documents too.
Exportable.register(MeansProfile)
Exportable.register(ExponentEstimate)


def n_theta_for(r: float) -> int:
    """
    Get the number of quadrature points that resolves the boundary peak of a
    circle of radius `r`.

    :param r: the radius
    :return: `max(2048, 64/(1 - r))`
    """
    return max(MIN_THETA, int(math.ceil(THETA_PER_GAP / (1.0 - r))))


def _check_radius(f: PointEvaluator, r: float):
    if not 0.0 < r < 1.0:
        raise ValueError(f"'r' must lie in (0, 1) (got {r}).")
    if r > f.max_radius:
        raise TruncationRadiusException(
            f'A Horner evaluator of order {f.order} cannot be trusted at '
            f'r = {r} (its limit is {f.max_radius}).'
        )


def _moduli(f: PointEvaluator, r: float, n_theta: int) -> np.ndarray:
    """
    Get `|f|` at equally spaced points of a circle.
    """
    theta = 2.0 * math.pi * np.arange(n_theta) / n_theta
    moduli = np.abs(f(r * np.exp(1j * theta)))
    if not np.all(np.isfinite(moduli)):
        raise NonFiniteSampleException(
            f'The function is not finite on the circle of radius {r}.'
        )
    moduli.setflags(write=False)
    return moduli


@lru_cache(maxsize=SAMPLE_CACHE_SIZE)
def _abs_samples(f: PointEvaluator, r: float, n_theta: int) -> np.ndarray:
    # Bisection on p revisits the same circles.
    return _moduli(f, r, n_theta)


def _power_mean(f: PointEvaluator, p: float, r: float, n_theta: int) -> float:
    # M_p(r, f)^p
    return float(np.mean(_abs_samples(f, r, n_theta) ** p))


def integral_means(
        f: PointEvaluator,
        p: float,
        r: float,
        n_theta: int = None
) -> float:
    """
    Get the integral mean `M_p(r, f)`.

    :param f: the function
    :param p: the exponent (`p > 0`)
    :param r: the radius (`0 < r < 1`)
    :param n_theta: the number of quadrature points (at least `64`); `None`
        picks it from the radius
    :return: the mean
    :raises NonFiniteSampleException: if `f` isn't finite on the circle
    :raises TruncationRadiusException: if `f` is a Horner evaluator that can't
        be trusted at `r`
    """
    if not p > 0.0:
        raise ValueError(f"'p' must be positive (got {p}).")
    _check_radius(f, r)
    n_theta = n_theta_for(r) if n_theta is None else int(n_theta)
    if n_theta < 64:
        raise ValueError(f"'n_theta' must be at least 64 (got {n_theta}).")
    return _power_mean(f, p, r, n_theta) ** (1.0 / p)


def max_modulus(f: PointEvaluator, r: float, n_theta: int = MIN_THETA) -> float:
    """
    Get the maximum modulus `M_inf(r, f)`.

    :param f: the function
    :param r: the radius
    :param n_theta: the number of grid points
    :return: the grid maximum, polished by one Newton step in the angle
    """
    _check_radius(f, r)
    moduli = _moduli(f, r, int(n_theta))
    k = int(np.argmax(moduli))
    best = float(moduli[k])
    step = 2.0 * math.pi / n_theta
    theta = k * step
    # One Newton step on |f|^2 with centred differences.
    h = step / 8.0
    g0, gm, gp = (
        abs(complex(f(r * np.exp(1j * (theta + d))))) ** 2
        for d in (0.0, -h, h)
    )
    curvature = (gp - 2.0 * g0 + gm) / (h * h)
    if curvature < 0.0:
        shift = -((gp - gm) / (2.0 * h)) / curvature
        shift = max(-step, min(step, shift))
        best = max(best, abs(complex(f(r * np.exp(1j * (theta + shift))))))
    return best


def means_profile(
        f: PointEvaluator,
        p: float,
        radii: Sequence[float] = DEFAULT_LADDER,
        n_theta: int = None
) -> MeansProfile:
    """
    Get the integral means of a function over a ladder of radii.

    :param f: the function
    :param p: the exponent
    :param radii: the (increasing) radii
    :param n_theta: the number of quadrature points (`None` picks it from
        each radius)
    :return: the profile
    :raises NonMonotoneMeansException: if the means decrease
    """
    radii = tuple(float(r) for r in radii)
    if any(b <= a for a, b in zip(radii, radii[1:])):
        raise ValueError('The radii must increase strictly.')
    counts = tuple(
        n_theta_for(r) if n_theta is None else int(n_theta) for r in radii
    )
    values = tuple(
        integral_means(f, p, r, n) for r, n in zip(radii, counts)
    )
    for (r0, m0), (r1, m1) in zip(zip(radii, values), zip(radii[1:],
                                                           values[1:])):
        if m1 < m0 - MONOTONE_SLACK * max(1.0, m0):
            raise NonMonotoneMeansException(
                f'M_p({r1}) = {m1!r} < M_p({r0}) = {m0!r}.'
            )
    return MeansProfile(
        p=float(p),
        radii=radii,
        values=values,
        n_theta=counts,
        evaluator_kind=f.kind.value
    )


def quadrature_drift(
        f: PointEvaluator,
        p: float,
        r: float,
        n_theta: int = None
) -> float:
    """
    Get the relative change in `M_p(r, f)` when the number of quadrature
    points doubles.

    :param f: the function
    :param p: the exponent
    :param r: the radius
    :param n_theta: the base number of points
    :return: the relative drift
    """
    n_theta = n_theta_for(r) if n_theta is None else int(n_theta)
    coarse = integral_means(f, p, r, n_theta)
    fine = integral_means(f, p, r, 2 * n_theta)
    drift = abs(fine - coarse) / max(abs(fine), np.finfo(float).tiny)
    if drift > DRIFT_WARNING:
        logger.warning(
            'M_%g at r = %g drifts by %.3g when %d points become %d.',
            p, r, drift, n_theta, 2 * n_theta
        )
    return drift


def _differenced_slope(
        f: PointEvaluator,
        p: float,
        radii: Sequence[float],
        rungs: int
) -> Tuple[float, float]:
    """
    Fit the growth rate of `M_p^p` on the outermost rungs of a ladder.

    :return: the slope and its standard error
    """
    radii = sorted(float(r) for r in radii)[-rungs:]
    if len(radii) < 3:
        raise RegressionIllConditionedException(
            f'A slope needs at least 3 rungs (got {len(radii)}).'
        )
    for r in radii:
        _check_radius(f, r)
    powers = np.array([_power_mean(f, p, r, n_theta_for(r)) for r in radii])
    # Successive differences cancel the additive constant, and turn
    # logarithmic growth into a flat line.
    increments = np.diff(powers)
    x = -np.log1p(-np.array(radii[1:]))
    if np.ptp(x) == 0.0:
        raise RegressionIllConditionedException('The rungs coincide.')
    if np.any(increments <= 0.0):
        # The means have saturated: the function is bounded on this ladder.
        logger.debug('M_%g^p saturates on %s.', p, radii)
        return -1.0, 0.0
    fit = stats.linregress(x, np.log(increments))
    logger.debug('M_%g^p slope %.6g (stderr %.3g).', p, fit.slope, fit.stderr)
    return float(fit.slope), float(fit.stderr)


def blowup_exponent(
        f: PointEvaluator,
        p: float,
        radii: Sequence[float] = DEFAULT_LADDER,
        rungs: int = FIT_RUNGS
) -> ExponentEstimate:
    """
    Estimate how fast `M_p(r, f)^p` blows up as `r -> 1`.

    :param f: the function
    :param p: the exponent
    :param radii: the ladder (geometric in `1 - r`)
    :param rungs: how many of the outermost rungs to fit
    :return: the estimate, with `gamma ~ max(0, p a - 1)` for a pole of order
        `a`
    :raises RegressionIllConditionedException: if there aren't enough rungs
    """
    slope, stderr = _differenced_slope(f, p, radii, rungs)
    return ExponentEstimate(
        gamma=max(0.0, slope),
        stderr=stderr,
        slope=slope,
        p=float(p)
    )


def hardy_critical_exponent(
        f: PointEvaluator,
        p_bracket: Tuple[float, float] = (0.05, 4.0),
        radii: Sequence[float] = DEFAULT_LADDER,
        threshold: float = 0.0,
        xtol: float = 1e-4
) -> ExponentEstimate:
    """
    Estimate the exponent `p*` at which `f` leaves `H^p`.

    :param f: the function
    :param p_bracket: exponents on either side of `p*`
    :param radii: the ladder
    :param threshold: the slope that counts as the crossing
    :param xtol: the width to which the crossing is bracketed
    :return: the estimate
    :raises NoBracketException: if the slope doesn't cross the threshold
        inside the bracket
    """
    def _excess(p: float) -> float:
        return _differenced_slope(f, p, radii, FIT_RUNGS)[0] - threshold

    lo, hi = p_bracket
    if not 0.0 < lo < hi:
        raise ValueError(f'{p_bracket} is not a bracket of exponents.')
    if _excess(lo) > 0.0 or _excess(hi) <= 0.0:
        raise NoBracketException(
            f'The fitted slope does not cross {threshold} in {p_bracket}.'
        )
    p_star = optimize.bisect(_excess, lo, hi, xtol=xtol)
    slope, stderr = _differenced_slope(f, p_star, radii, FIT_RUNGS)
    logger.debug('p* = %.6g (slope there %.3g).', p_star, slope)
    return ExponentEstimate(
        gamma=max(0.0, slope),
        stderr=stderr,
        p_star=p_star,
        bracket=(max(lo, p_star - xtol), min(hi, p_star + xtol)),
        slope=slope,
        p=p_star
    )


def hl_smoothness_rate(
        f_prime: PointEvaluator,
        p: float,
        radii: Sequence[float] = DEFAULT_LADDER
) -> float:
    """
    Estimate the smoothness `t` in `M_p(r, f') = O((1 - r)^(t - 1))`.

    :param f_prime: the derivative
    :param p: the exponent (`p >= 1`)
    :param radii: the ladder
    :return: `1 - max(0, slope)/p`
    """
    if p < 1.0:
        raise ValueError(f"'p' must be at least 1 (got {p}).")
    slope, _ = _differenced_slope(f_prime, p, radii, FIT_RUNGS)
    return 1.0 - max(0.0, slope) / p


def hardy_littlewood_exponent(p: float) -> float:
    """
    Get the exponent `q` with `f' in H^p => f in H^q` (for `p < 1`).

    :param p: the derivative's exponent, `0 < p < 1`
    :return: `p/(1 - p)`
    """
    if not 0.0 < p < 1.0:
        raise ValueError(f"'p' must lie in (0, 1) (got {p}).")
    return p / (1.0 - p)


def prawitz_check(
        f: PointEvaluator,
        p: float,
        r: float,
        n_theta: int = MIN_THETA,
        tol: float = 1e-6,
        limit: int = 200
) -> BoundCheck:
    """
    Check `M_p(r, f)^p <= p integral_0^r M_inf(t, f)^p / t dt`.

    :param f: a normalized univalent function
    :param p: the exponent
    :param r: the radius
    :param n_theta: the grid used for the maximum modulus
    :param tol: the relative slack on the right-hand side
    :param limit: the subinterval limit of the adaptive quadrature
    :return: both sides
    :raises QuadratureDivergedException: if the quadrature fails

    .. note::

        With `t = r u^(1/p)` the right-hand side becomes
        `r^p integral_0^1 (M_inf(t)/t)^p du`, which is regular at `u = 0`.
    """
    lhs = integral_means(f, p, r) ** p

    def _integrand(u: float) -> float:
        t = r * u ** (1.0 / p)
        if t <= 0.0:
            return 1.0
        return (max_modulus(f, t, n_theta) / t) ** p

    result = integrate.quad(_integrand, 0.0, 1.0, epsabs=0.0, epsrel=1e-8,
                            limit=limit, full_output=1)
    if len(result) > 3:
        raise QuadratureDivergedException(
            f'The Prawitz integral did not converge: {result[3]}'
        )
    rhs = r ** p * result[0]
    return BoundCheck(lhs=lhs, rhs=rhs, holds=lhs <= rhs * (1.0 + tol))


def baernstein_check(
        f: PointEvaluator,
        p: float,
        r: float,
        tol: float = 1e-6
) -> BoundCheck:
    """
    Check `M_p(r, f) <= M_p(r, k)` against the Koebe function `k`.

    :param f: a normalized univalent function
    :param p: the exponent
    :param r: the radius
    :param tol: the relative slack on the right-hand side
    :return: both sides
    """
    lhs = integral_means(f, p, r)
    rhs = integral_means(KOEBE, p, r)
    return BoundCheck(lhs=lhs, rhs=rhs, holds=lhs <= rhs * (1.0 + tol))


def radial_trace(
        f: PointEvaluator,
        theta: float,
        radii: Iterable[float] = DEFAULT_LADDER
) -> RadialTrace:
    """
    Sample `|f|` along a ray.

    :param f: the function
    :param theta: the ray's argument
    :param radii: the radii
    :return: the trace with its oscillation statistics
    """
    radii = tuple(float(r) for r in radii)
    moduli = np.abs(f(np.array(radii) * np.exp(1j * theta)))
    if not np.all(np.isfinite(moduli)):
        raise NonFiniteSampleException(
            f'The function is not finite along the ray at {theta}.'
        )
    logs = np.log(np.maximum(moduli, np.finfo(float).tiny))
    return RadialTrace(
        theta=float(theta),
        radii=radii,
        moduli=tuple(float(m) for m in moduli),
        max_min_ratio=float(np.max(moduli) / max(np.min(moduli),
                                                 np.finfo(float).tiny)),
        log_variation=float(np.sum(np.abs(np.diff(logs))))
    )
