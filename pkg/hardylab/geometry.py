#!/usr/bin/env python
# -*- coding: utf-8 -*-

# Created on 10/5/26 by Pat Daburu
"""
.. currentmodule:: hardylab.geometry
.. moduleauthor:: Pat Daburu <pat@daburu.net>

The shape of an image domain: the pre-Schwarzian, lower order, angles at
infinity and the sectors that contain it.
"""
import logging
import math
from typing import Any, List, Mapping, NamedTuple, Sequence, Tuple
import numpy as np
from numpy.polynomial import Polynomial
from scipy import optimize
from shapely.geometry import MultiPoint, Polygon
from .errors import HardylabException
from .means import DEFAULT_LADDER
from .series import (
    PointEvaluator,
    TaylorSeries,
    ts_compose,
    ts_derivative,
    ts_div
)
from .types import pyfqn
from .xchg import Exportable

logger = logging.getLogger(__name__)

#: the hyperbolic step between the rings of the lower-order grid
RING_STEP: float = 1.0 / 8.0

#: how many of the best grid points seed a local descent
DESCENT_SEEDS: int = 5

#: the boundary levels `k` (with `tau = 2^-k`) used for half tangents
HALF_TANGENT_LEVELS: Tuple[int, ...] = tuple(range(4, 21))

#: the largest jump in argument allowed between consecutive chords
MAX_ARG_JUMP: float = math.pi / 2.0


class DerivativeVanishesException(HardylabException):
    """
    Raised when `f'` vanishes (or can't be evaluated) where it is needed.
    """


class ArgUnwrapFailureException(HardylabException):
    """
    Raised when the argument of a boundary path jumps too far to follow.
    """


class LowerOrderEstimate(NamedTuple):
    """
    An upper bound for the lower order `inf |A_f|`.
    """
    beta: float  #: the smallest `|A_f|` found
    argmin_point: complex  #: where it was found
    samples: int  #: the number of grid points
    method: str  #: `grid` or `grid_plus_local_descent`

    def export(self) -> Mapping[str, Any]:
        """
        Export the instance as a mapping of simple types.

        :return: the mapping
        """
        return {
            '__type__': pyfqn(self),
            'beta': self.beta,
            'argmin_point': [self.argmin_point.real, self.argmin_point.imag],
            'samples': self.samples,
            'method': self.method
        }

    @classmethod
    def load(cls, data: Mapping[str, Any]) -> 'LowerOrderEstimate' or None:
        """
        Create an instance from a mapping.

        :param data: the data
        :return: the instance
        """
        if not data:
            return None
        return cls(
            beta=data['beta'],
            argmin_point=complex(*data['argmin_point']),
            samples=data['samples'],
            method=data['method']
        )


class HalfTangentEstimate(NamedTuple):
    """
    The limiting directions of the image boundary on either side of a pole.
    """
    theta_plus: float  #: the direction as `t -> t0+`
    theta_minus: float  #: the direction as `t -> t0-`
    delta: float  #: the angle at infinity, reduced into `[-pi/2, 3pi/2)`
    t0: float  #: the boundary parameter of the pole

    def export(self) -> Mapping[str, Any]:
        """
        Export the instance as a mapping of simple types.

        :return: the mapping
        """
        return {
            '__type__': pyfqn(self),
            'theta_plus': self.theta_plus,
            'theta_minus': self.theta_minus,
            'delta': self.delta,
            't0': self.t0
        }

    @classmethod
    def load(cls, data: Mapping[str, Any]) -> 'HalfTangentEstimate' or None:
        """
        Create an instance from a mapping.

        :param data: the data
        :return: the instance
        """
        if not data:
            return None
        return cls(**{k: data[k] for k in cls._fields})


class ContainmentResult(NamedTuple):
    """
    Whether (and where) a sector holds the sampled image.
    """
    contained: bool  #: `True` if a sector was found
    apex: complex or None  #: the sector's apex
    shift: float or None  #: how far the apex sits behind the origin
    aperture: float  #: the sector's opening


Exportable.register(LowerOrderEstimate)
Exportable.register(HalfTangentEstimate)


def _derivatives(f) -> Tuple[PointEvaluator, PointEvaluator]:
    """
    Get evaluators of `f'` and `f''` from a series, a zoo function or a pair
    of evaluators.
    """
    if isinstance(f, TaylorSeries):
        df = ts_derivative(f)
        return df.evaluator(), ts_derivative(df).evaluator()
    if hasattr(f, 'df') and hasattr(f, 'd2f'):
        return f.df, f.d2f
    df, d2f = f
    return df, d2f


def _pre_schwarzian(df: PointEvaluator, d2f: PointEvaluator, zeta):
    zeta = np.asarray(zeta, dtype=complex)
    with np.errstate(divide='ignore', invalid='ignore'):
        return (
            0.5 * (1.0 - np.abs(zeta) ** 2) * d2f(zeta) / df(zeta)
            - np.conj(zeta)
        )


def pre_schwarzian_A(f, zeta: complex) -> complex:
    """
    Get `A_f(zeta) = (1 - |zeta|^2) f''(zeta) / (2 f'(zeta)) - conj(zeta)`.

    :param f: a series, a zoo function or an `(f', f'')` pair of evaluators
    :param zeta: the point (`|zeta| < 1`)
    :return: the value (`a2` at `zeta = 0`)
    :raises DerivativeVanishesException: if `f'(zeta)` vanishes
    """
    zeta = complex(zeta)
    if not abs(zeta) < 1.0:
        raise ValueError(f"'zeta' must lie in the unit disk (got {zeta}).")
    df, d2f = _derivatives(f)
    slope = complex(df(zeta))
    if slope == 0 or not np.isfinite(slope):
        raise DerivativeVanishesException(f"f' vanishes at {zeta}.")
    return 0.5 * (1.0 - abs(zeta) ** 2) * complex(d2f(zeta)) / slope \
        - zeta.conjugate()


def koebe_transform(f: TaylorSeries, zeta: complex, order: int) -> TaylorSeries:
    """
    Get the Koebe transform
    `F(z) = (f((zeta + z)/(1 + conj(zeta) z)) - f(zeta)) / ((1 - |zeta|^2)
    f'(zeta))`.

    :param f: the series
    :param zeta: the point (`|zeta| < 1`)
    :param order: the truncation order
    :return: the normalized series (whose second coefficient is `A_f(zeta)`)
    :raises DerivativeVanishesException: if `f'(zeta)` vanishes
    """
    zeta = complex(zeta)
    if not abs(zeta) < 1.0:
        raise ValueError(f"'zeta' must lie in the unit disk (got {zeta}).")
    order = min(order, f.order)
    # Re-center: the coefficients of f(zeta + w) in w.
    centered = Polynomial(f.coeffs)(Polynomial([zeta, 1.0])).coef
    shifted = np.zeros(order + 1, dtype=complex)
    head = centered[:order + 1]
    shifted[:head.size] = head
    slope = shifted[1] if order >= 1 else 0
    if slope == 0:
        raise DerivativeVanishesException(f"f' vanishes at {zeta}.")
    shifted[0] = 0.0
    # w(z) = (zeta + z)/(1 + conj(zeta) z) - zeta = (1 - |zeta|^2) z / (1 +
    # conj(zeta) z)
    scale = 1.0 - abs(zeta) ** 2
    w = ts_div(TaylorSeries.monomial(1, order, scale),
               TaylorSeries(np.concatenate(([1.0, zeta.conjugate()],
                                            np.zeros(order - 1)))))
    return ts_compose(TaylorSeries(shifted), w) / (scale * slope)


def _ring_grid(max_radius: float, levels: int) -> np.ndarray:
    """
    Get hyperbolically uniform points: rings at `tanh(k/8)` with a number of
    angles proportional to `1/(1 - rho)`.
    """
    points: List[np.ndarray] = [np.zeros(1, dtype=complex)]
    for k in range(1, levels + 1):
        rho = math.tanh(k * RING_STEP)
        if rho > max_radius:
            break
        count = max(8, int(math.ceil(16.0 / (1.0 - rho))))
        phi = 2.0 * math.pi * np.arange(count) / count
        points.append(rho * np.exp(1j * phi))
    return np.concatenate(points)


def lower_order(
        f,
        grid_density: int = 24,
        descent_steps: int = 200
) -> LowerOrderEstimate:
    """
    Estimate the lower order `beta = inf |A_f|` from above.

    :param f: a series, a zoo function or an `(f', f'')` pair of evaluators
    :param grid_density: the number of grid rings
    :param descent_steps: iterations of the local descent from each of the
        best grid points (`0` for none)
    :return: the estimate
    """
    df, d2f = _derivatives(f)
    max_radius = min(df.max_radius, d2f.max_radius)
    if max_radius >= 1.0:
        max_radius = 1.0 - 1e-12
    grid = _ring_grid(max_radius, grid_density)
    moduli = np.abs(_pre_schwarzian(df, d2f, grid))
    # Points where f' vanishes (or overflows) don't count.
    moduli = np.where(np.isfinite(moduli), moduli, np.inf)
    best = int(np.argmin(moduli))
    beta, argmin = float(moduli[best]), complex(grid[best])
    logger.debug('Lower order grid: %d points, min %.9g at %s.',
                 grid.size, beta, argmin)
    if descent_steps <= 0:
        return LowerOrderEstimate(beta, argmin, int(grid.size), 'grid')

    def _to_disk(x: np.ndarray) -> complex:
        return complex(x[0], x[1]) / math.sqrt(1.0 + x[0] ** 2 + x[1] ** 2)

    def _objective(x: np.ndarray) -> float:
        zeta = _to_disk(x)
        if abs(zeta) > max_radius:
            return math.inf
        value = abs(complex(_pre_schwarzian(df, d2f, zeta)))
        return value if math.isfinite(value) else math.inf

    for k in np.argsort(moduli, kind='stable')[:DESCENT_SEEDS]:
        zeta = complex(grid[k])
        stretch = 1.0 / math.sqrt(1.0 - abs(zeta) ** 2)
        x0 = np.array([zeta.real * stretch, zeta.imag * stretch])
        result = optimize.minimize(
            _objective, x0, method='Nelder-Mead',
            options={'maxiter': descent_steps, 'xatol': 1e-12, 'fatol': 1e-14}
        )
        if result.fun < beta:
            beta, argmin = float(result.fun), _to_disk(result.x)
    logger.debug('Lower order after descent: %.12g at %s.', beta, argmin)
    return LowerOrderEstimate(beta, argmin, int(grid.size),
                              'grid_plus_local_descent')


def radial_A_limit(
        f,
        lam0: complex = 1.0,
        radii: Sequence[float] = DEFAULT_LADDER
) -> float:
    """
    Get the limit of `Re(lam0 A_f(t lam0))` as `t -> 1`.

    :param f: a series, a zoo function or an `(f', f'')` pair of evaluators
    :param lam0: the preimage of infinity
    :param radii: the ladder (halving `1 - t`)
    :return: the Richardson extrapolation of the last two rungs (`Theta/pi`
        for a convex map)
    """
    df, d2f = _derivatives(f)
    lam0 = complex(lam0)
    radii = sorted(radii)
    values = np.real(lam0 * _pre_schwarzian(df, d2f, lam0 * np.array(radii)))
    if not np.all(np.isfinite(values)):
        raise DerivativeVanishesException(
            f"f' vanishes (or overflows) on the radius toward {lam0}."
        )
    if len(values) < 2:
        return float(values[-1])
    return float(2.0 * values[-1] - values[-2])


def _chord_directions(
        f: PointEvaluator,
        t0: float,
        side: float,
        levels: Sequence[int]
) -> np.ndarray:
    """
    Follow the arguments of chords between successive boundary-near points
    approaching the pole from one side.
    """
    tau = 2.0 ** -np.array(levels, dtype=float)
    z = (1.0 - tau ** 2) * np.exp(1j * (t0 + side * tau))
    chords = np.diff(f(z))
    raw = np.angle(chords)
    jumps = np.angle(np.exp(1j * np.diff(raw)))
    if np.any(np.abs(jumps) > MAX_ARG_JUMP):
        raise ArgUnwrapFailureException(
            f'The boundary argument jumps by {np.max(np.abs(jumps)):.3g} '
            f'near t0 = {t0}.'
        )
    return raw[0] + np.concatenate(([0.0], np.cumsum(jumps)))


def half_tangents(
        f: PointEvaluator,
        t0: float = 0.0,
        levels: Sequence[int] = HALF_TANGENT_LEVELS
) -> HalfTangentEstimate:
    """
    Estimate the limiting directions of the image boundary on either side of a
    boundary pole.

    :param f: the function
    :param t0: the boundary parameter of the pole
    :param levels: the levels `k` of the approach `tau = 2^-k`
    :return: the estimate
    :raises ArgUnwrapFailureException: if the argument can't be followed
    """
    def _limit(side: float) -> float:
        theta = _chord_directions(f, t0, side, levels)
        # One Richardson step removes the term linear in tau.
        return float(2.0 * theta[-1] - theta[-2])

    theta_plus, theta_minus = _limit(1.0), _limit(-1.0)
    delta = (theta_plus - theta_minus + math.pi / 2.0) % (2.0 * math.pi) \
        - math.pi / 2.0
    return HalfTangentEstimate(
        theta_plus=theta_plus,
        theta_minus=theta_minus,
        delta=delta,
        t0=float(t0)
    )


def half_tangent_trace(
        f: PointEvaluator,
        t0: float = 0.0,
        levels: Sequence[int] = HALF_TANGENT_LEVELS
) -> List[Mapping[str, float]]:
    """
    Get the chord arguments behind :py:func:`half_tangents` as table rows.

    :param f: the function
    :param t0: the boundary parameter of the pole
    :param levels: the levels `k` of the approach `tau = 2^-k`
    :return: rows of `t` and `arg_f`
    """
    rows = []
    for side in (-1.0, 1.0):
        theta = _chord_directions(f, t0, side, levels)
        tau = 2.0 ** -np.array(levels[1:], dtype=float)
        rows.extend(
            {'t': float(t0 + side * s), 'arg_f': float(a)}
            for s, a in zip(tau, theta)
        )
    return sorted(rows, key=lambda row: row['t'])


def _boundary_samples(pole: complex, samples: int) -> Tuple[np.ndarray, int]:
    """
    Get points of the unit circle: half of them uniform (never on the pole or
    its antipode), half of them crowding geometrically toward the pole.

    :return: the points and how many of them (at the front) are uniform
    """
    n_uniform = 2 * max(1, samples // 4)
    t = 2.0 * math.pi * (np.arange(n_uniform) + 0.5) / n_uniform
    n_geo = max(1, (samples - n_uniform) // 2)
    near = 2.0 ** -np.linspace(1.0, 60.0, n_geo)
    t = np.concatenate((t, near, -near))
    return complex(pole) * np.exp(1j * t), n_uniform


def _sector_polygon(
        apex: complex,
        axis: complex,
        aperture: float,
        radius: float,
        arc_steps: int = 64
) -> Polygon:
    """
    Get a polygon that agrees with a sector inside the given radius.
    """
    step = aperture / arc_steps
    outer = radius / math.cos(step / 2.0)
    phi = np.angle(axis) + np.linspace(-aperture / 2.0, aperture / 2.0,
                                       arc_steps + 1)
    arc = apex + outer * np.exp(1j * phi)
    return Polygon([(apex.real, apex.imag)] + [(w.real, w.imag) for w in arc])


def sector_containment(
        f: PointEvaluator,
        aperture: float,
        samples: int = 10_000,
        pole: complex = 1.0
) -> ContainmentResult:
    """
    Look for a sector of the given aperture that holds the image of the
    boundary, sliding its apex back along the axis of the pole.

    :param f: the function
    :param aperture: the sector's opening, `0 < aperture <= pi`
    :param samples: the number of boundary samples
    :param pole: the preimage of infinity (the image runs off along its axis)
    :return: the result (with the apex closest to the origin that works)
    """
    if not 0.0 < aperture <= math.pi:
        raise ValueError(f"'aperture' must lie in (0, pi] (got {aperture}).")
    pole = complex(pole)
    points, n_uniform = _boundary_samples(pole, samples)
    values = f(points)
    uniform = values[:n_uniform]
    bulk = float(np.max(np.abs(uniform[np.isfinite(uniform)])))
    values = values[np.isfinite(values)]
    # The axis is the direction in which f runs off toward the pole.
    chord = complex(f((1.0 - 2.0 ** -40) * pole)) \
        - complex(f((1.0 - 2.0 ** -39) * pole))
    axis = chord / abs(chord) if chord != 0 and np.isfinite(chord) else 1.0
    max_shift = 4.0 * bulk / math.sin(aperture / 2.0)
    cloud = MultiPoint([(w.real, w.imag) for w in values])

    def _holds(shift: float) -> bool:
        apex = -shift * axis
        radius = 1.01 * float(np.max(np.abs(values - apex))) + 1.0
        return _sector_polygon(apex, axis, aperture, radius).covers(cloud)

    if not _holds(max_shift):
        logger.debug('No sector of aperture %.6g holds the image.', aperture)
        return ContainmentResult(False, None, None, aperture)
    lo, hi = 0.0, max_shift
    if _holds(lo):
        hi = lo
    else:
        # Sliding back only ever helps, so bisect for the shortest slide.
        for _ in range(50):
            mid = 0.5 * (lo + hi)
            if _holds(mid):
                hi = mid
            else:
                lo = mid
    return ContainmentResult(True, -hi * axis, hi, aperture)


def gronwall_bounds(alpha: float, r: float) -> Tuple[float, float, float, float]:
    """
    Get the envelopes `l_alpha(r)`, `s_alpha(r)`, `l_alpha'(r)` and
    `s_alpha'(r)` that bound a convex map with `|a2| = alpha` (and its
    derivative) on the circle of radius `r`.

    :param alpha: the second coefficient's modulus, `0 <= alpha <= 1`
    :param r: the radius, `0 <= r < 1`
    :return: the four envelopes
    """
    if not 0.0 <= alpha <= 1.0:
        raise ValueError(f"'alpha' must lie in [0, 1] (got {alpha}).")
    if not 0.0 <= r < 1.0:
        raise ValueError(f"'r' must lie in [0, 1) (got {r}).")
    if alpha == 1.0:
        lower = r / (1.0 + r)
    else:
        s = math.sqrt(1.0 - alpha * alpha)
        lower = (math.atan((r + alpha) / s) - math.atan(alpha / s)) / s
    log_w = math.log1p(r) - math.log1p(-r)
    upper = 0.5 * log_w if alpha == 0.0 else math.expm1(alpha * log_w) / (
        2.0 * alpha)
    lower_prime = 1.0 / (1.0 + 2.0 * alpha * r + r * r)
    upper_prime = (1.0 - r) ** (-1.0 - alpha) * (1.0 + r) ** (alpha - 1.0)
    return lower, upper, lower_prime, upper_prime


def starlike_slit_tip(alpha: float) -> complex:
    """
    Get the tip (in the upper half-plane) of the slits omitted by the
    two-slit starlike map with second coefficient `alpha`.

    :param alpha: the second coefficient, `0 <= alpha <= 2`
    :return: the tip
    """
    if not 0.0 <= alpha <= 2.0:
        raise ValueError(f"'alpha' must lie in [0, 2] (got {alpha}).")
    modulus = (2.0 - alpha) ** (-(2.0 - alpha) / 4.0) \
        * (2.0 + alpha) ** (-(2.0 + alpha) / 4.0)
    return modulus * complex(math.cos(math.pi * (2.0 + alpha) / 4.0),
                             math.sin(math.pi * (2.0 + alpha) / 4.0))
