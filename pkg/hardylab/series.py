#!/usr/bin/env python
# -*- coding: utf-8 -*-

# Created on 10/2/26 by Pat Daburu
"""
.. currentmodule:: hardylab.series
.. moduleauthor:: Pat Daburu <pat@daburu.net>

Every function in the lab is a truncated Taylor series, usually with a
closed-form point evaluator riding along.  This is where the arithmetic
lives.

.. note::

    Truncation orders only ever shrink: the result of an operation on two
    series is known to the smaller of the two orders and nothing beyond it.
"""
from enum import Enum
import logging
import math
from typing import Any, Callable, Dict, Iterable, Mapping, NamedTuple, Tuple
import numpy as np
from numpy.polynomial import legendre, polynomial
from scipy.signal import lfilter
from .errors import HardylabException
from .types import pyfqn
from .xchg import Exportable, complex_pair, from_pair

logger = logging.getLogger(__name__)

#: how far a constant term may stray from one and still count as one
UNIT_CONSTANT_TOL: float = 1e-14

#: Gauss-Legendre panels graded toward the end of a path, indexed by depth and
#: node count
_panel_cache: Dict[Tuple[int, int], Tuple[np.ndarray, np.ndarray]] = {}


class NonFiniteCoefficientException(HardylabException):
    """
    Raised when a series operation produces (or is handed) a `NaN` or an
    infinite coefficient.
    """


class ZeroConstantTermException(HardylabException):
    """
    Raised when a series with a vanishing constant term is used as a divisor.
    """


class InnerConstantNonzeroException(HardylabException):
    """
    Raised when the inner series of a composition doesn't vanish at zero.
    """


class LogConstantNotOneException(HardylabException):
    """
    Raised when the logarithm of a series whose constant term isn't `1` is
    requested.
    """


class ConstantNotOneException(HardylabException):
    """
    Raised when a real power of a series whose constant term isn't `1` is
    requested without asking for normalization.
    """


class EvaluatorKind(Enum):
    """
    How a point evaluator computes its values.
    """
    CLOSED_FORM = 'closed_form'  #: a formula, accurate up to the boundary
    HORNER_SERIES = 'horner_series'  #: Horner evaluation of a truncation
    PATH_QUADRATURE = 'path_quadrature'  #: integration of a known derivative


def _checked(coeffs: np.ndarray, operation: str) -> np.ndarray:
    """
    Make sure the coefficients an operation produced are all finite.

    :param coeffs: the coefficients
    :param operation: the name of the operation (for the message)
    :return: the same coefficients
    :raises NonFiniteCoefficientException: if any coefficient isn't finite
    """
    if not np.all(np.isfinite(coeffs)):
        bad = int(np.argmin(np.isfinite(coeffs)))
        raise NonFiniteCoefficientException(
            f"{operation} produced a non-finite coefficient at z^{bad}."
        )
    return coeffs


class TaylorSeries(Exportable):
    """
    A complex power series truncated at a fixed order.  Instances are
    immutable.
    """
    __slots__ = ['_coeffs']

    def __init__(self, coeffs: Iterable[complex]):
        """

        :param coeffs: the coefficients (index `n` is the coefficient of
            `z^n`)
        :raises NonFiniteCoefficientException: if a coefficient isn't finite
        """
        _coeffs = np.array(
            list(coeffs) if not isinstance(coeffs, np.ndarray) else coeffs,
            dtype=complex
        )
        if _coeffs.ndim != 1 or _coeffs.size == 0:
            raise ValueError('A series needs at least one coefficient.')
        _checked(_coeffs, 'construction')
        _coeffs.setflags(write=False)
        self._coeffs = _coeffs  #: the coefficients

    @property
    def coeffs(self) -> np.ndarray:
        """
        Get the (read-only) coefficient array.
        """
        return self._coeffs

    @property
    def order(self) -> int:
        """
        Get the truncation order.
        """
        return self._coeffs.size - 1

    @classmethod
    def constant(cls, c: complex, order: int) -> 'TaylorSeries':
        """
        Get a constant series.

        :param c: the constant
        :param order: the truncation order
        :return: the series
        """
        coeffs = np.zeros(order + 1, dtype=complex)
        coeffs[0] = c
        return cls(coeffs)

    @classmethod
    def monomial(cls, n: int, order: int, c: complex = 1) -> 'TaylorSeries':
        """
        Get the series `c z^n`.

        :param n: the power
        :param order: the truncation order
        :param c: the coefficient
        :return: the series
        """
        coeffs = np.zeros(order + 1, dtype=complex)
        if n <= order:
            coeffs[n] = c
        return cls(coeffs)

    @classmethod
    def identity(cls, order: int) -> 'TaylorSeries':
        """
        Get the series of `z`.

        :param order: the truncation order
        :return: the series
        """
        return cls.monomial(1, order)

    def truncate(self, order: int) -> 'TaylorSeries':
        """
        Get this series truncated at a lower order.

        :param order: the new order
        :return: the truncated series
        :raises ValueError: if the order exceeds what this series knows
        """
        if order > self.order:
            raise ValueError(
                f'Cannot extend a series of order {self.order} to {order}.'
            )
        return TaylorSeries(self._coeffs[:order + 1])

    def times_z(self) -> 'TaylorSeries':
        """
        Multiply the series by `z` (the order grows by one).

        :return: the product
        """
        return TaylorSeries(np.concatenate(([0j], self._coeffs)))

    def divided_by_z(self) -> 'TaylorSeries':
        """
        Divide a series that vanishes at zero by `z`.

        :return: the quotient
        :raises ZeroConstantTermException: if the series doesn't vanish at zero
        """
        if self._coeffs[0] != 0:
            raise ZeroConstantTermException(
                'Only a series that vanishes at zero can be divided by z.'
            )
        if self.order == 0:
            return TaylorSeries([0j])
        return TaylorSeries(self._coeffs[1:])

    def is_real(self, tol: float = 0.0) -> bool:
        """
        Are all of the coefficients real?

        :param tol: the largest imaginary part that still counts as zero
        :return: `True` if they are
        """
        return bool(np.all(np.abs(self._coeffs.imag) <= tol))

    def is_odd(self) -> bool:
        """
        Do all of the even-indexed coefficients vanish identically?

        :return: `True` if they do
        """
        return bool(np.all(self._coeffs[0::2] == 0))

    def evaluator(self) -> 'PointEvaluator':
        """
        Get a Horner point evaluator for this series.

        :return: the evaluator
        """
        return PointEvaluator(
            eval=lambda z: ts_eval(self, z),
            kind=EvaluatorKind.HORNER_SERIES,
            order=self.order
        )

    def export(self) -> Mapping[str, Any]:
        """
        Export the instance as a mapping of simple types.

        :return: the mapping
        """
        return {
            '__type__': pyfqn(self),
            'order': self.order,
            'coeffs': [complex_pair(c) for c in self._coeffs]
        }

    @classmethod
    def load(cls, data: Mapping[str, Any]) -> 'TaylorSeries' or None:
        """
        Create an instance from a mapping.

        :param data: the data
        :return: the instance
        """
        if not data:
            return None
        return cls([from_pair(c) for c in data['coeffs']])

    def __getitem__(self, n: int) -> complex:
        return complex(self._coeffs[n])

    def __len__(self):
        return self._coeffs.size

    def __call__(self, z):
        return ts_eval(self, z)

    def __neg__(self):
        return TaylorSeries(-self._coeffs)

    def __add__(self, other):
        if isinstance(other, TaylorSeries):
            n = min(self.order, other.order)
            return TaylorSeries(
                _checked(self._coeffs[:n + 1] + other.coeffs[:n + 1], 'add')
            )
        coeffs = self._coeffs.copy()
        coeffs[0] += other
        return TaylorSeries(_checked(coeffs, 'add'))

    def __radd__(self, other):
        return self.__add__(other)

    def __sub__(self, other):
        return self.__add__(-other)

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        if isinstance(other, TaylorSeries):
            return ts_mul(self, other)
        return TaylorSeries(_checked(self._coeffs * other, 'scale'))

    def __rmul__(self, other):
        return self.__mul__(other)

    def __truediv__(self, other):
        if isinstance(other, TaylorSeries):
            return ts_div(self, other)
        return TaylorSeries(_checked(self._coeffs / other, 'scale'))

    def __eq__(self, other):
        if not isinstance(other, TaylorSeries):
            return False
        return (
            self.order == other.order
            and bool(np.array_equal(self._coeffs, other.coeffs))
        )

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash(self._coeffs.tobytes())

    def __repr__(self):
        head = ', '.join(f'{c:.6g}' for c in self._coeffs[:4])
        more = ', ...' if self.order > 3 else ''
        return f"{self.__class__.__name__}(order={self.order}, [{head}{more}])"


class PointEvaluator(NamedTuple):
    """
    Maps points of the unit disk (scalars or arrays) to function values.
    """
    eval: Callable  #: the function itself (vectorized over numpy arrays)
    kind: EvaluatorKind  #: how the values are computed
    order: int or None = None  #: the truncation order behind a Horner kind

    @property
    def max_radius(self) -> float:
        """
        Get the largest radius at which this evaluator is trustworthy.
        """
        if self.kind == EvaluatorKind.HORNER_SERIES and self.order:
            return max(0.0, 1.0 - 10.0 / self.order)
        return 1.0

    def __call__(self, z):
        return self.eval(np.asarray(z, dtype=complex))


def closed_form(fn: Callable) -> PointEvaluator:
    """
    Wrap a formula as a point evaluator.

    :param fn: the formula (vectorized over numpy arrays)
    :return: the evaluator
    """
    return PointEvaluator(eval=fn, kind=EvaluatorKind.CLOSED_FORM)


def ts_mul(a: TaylorSeries, b: TaylorSeries) -> TaylorSeries:
    """
    Multiply two series (the Cauchy product).

    :param a: the first factor
    :param b: the second factor
    :return: the product, truncated at the smaller order
    """
    n = min(a.order, b.order)
    return TaylorSeries(
        _checked(
            np.convolve(a.coeffs[:n + 1], b.coeffs[:n + 1])[:n + 1],
            'ts_mul'
        )
    )


def ts_div(a: TaylorSeries, b: TaylorSeries) -> TaylorSeries:
    """
    Divide one series by another.

    :param a: the dividend
    :param b: the divisor
    :return: the quotient `q` with `q b = a` to the smaller order
    :raises ZeroConstantTermException: if `b(0) = 0`
    """
    if b[0] == 0:
        raise ZeroConstantTermException('The divisor vanishes at zero.')
    n = min(a.order, b.order)
    # Power-series division is the impulse response of the rational filter
    # a(z)/b(z).
    impulse = np.zeros(n + 1, dtype=complex)
    impulse[0] = 1.0
    return TaylorSeries(
        _checked(
            lfilter(a.coeffs[:n + 1], b.coeffs[:n + 1], impulse),
            'ts_div'
        )
    )


def ts_compose(outer: TaylorSeries, inner: TaylorSeries) -> TaylorSeries:
    """
    Compose two series (`outer(inner(z))`) by Horner's scheme.

    :param outer: the outer series
    :param inner: the inner series
    :return: the composition, truncated at the smaller order
    :raises InnerConstantNonzeroException: if `inner(0) != 0`

    .. note::

        Each Horner step is a truncated Cauchy product, so the whole
        composition costs `O(N^3)`.
    """
    if inner[0] != 0:
        raise InnerConstantNonzeroException(
            f'The inner series must vanish at zero (got {inner[0]}).'
        )
    n = min(outer.order, inner.order)
    _inner = inner.coeffs[:n + 1]
    result = np.zeros(n + 1, dtype=complex)
    result[0] = outer.coeffs[n]
    for k in range(n - 1, -1, -1):
        result = np.convolve(result, _inner)[:n + 1]
        result[0] += outer.coeffs[k]
    return TaylorSeries(_checked(result, 'ts_compose'))


def ts_exp(a: TaylorSeries) -> TaylorSeries:
    """
    Get the exponential of a series.

    :param a: the series
    :return: `exp(a)` to the same order
    """
    n = a.order
    ka = np.arange(n + 1) * a.coeffs
    b = np.zeros(n + 1, dtype=complex)
    b[0] = np.exp(a[0])
    # b' = a' b, so n b_n = sum_k k a_k b_(n-k).
    for m in range(1, n + 1):
        b[m] = np.dot(ka[1:m + 1], b[m - 1::-1]) / m
    return TaylorSeries(_checked(b, 'ts_exp'))


def ts_log(a: TaylorSeries) -> TaylorSeries:
    """
    Get the principal logarithm of a series whose constant term is `1`.

    :param a: the series
    :return: `log(a)` to the same order, with `log(a)(0) = 0`
    :raises LogConstantNotOneException: if `a(0)` isn't `1`
    """
    if abs(a[0] - 1.0) > UNIT_CONSTANT_TOL:
        raise LogConstantNotOneException(
            f'The logarithm needs a(0) = 1 (got {a[0]}).'
        )
    n = a.order
    coeffs = a.coeffs
    kl = np.zeros(n + 1, dtype=complex)
    # a' = a l', so m a_m = m l_m + sum_(k<m) k l_k a_(m-k).
    for m in range(1, n + 1):
        kl[m] = m * coeffs[m] - np.dot(kl[1:m], coeffs[m - 1:0:-1])
    ks = np.arange(n + 1, dtype=float)
    ks[0] = 1.0
    return TaylorSeries(_checked(kl / ks, 'ts_log'))


def ts_pow(
        a: TaylorSeries,
        alpha: float,
        normalize: bool = False
) -> TaylorSeries:
    """
    Raise a series to a real power.

    :param a: the series
    :param alpha: the exponent
    :param normalize: `True` to factor a constant term other than `1` out
        through the principal branch of `c^alpha`
    :return: `a^alpha` to the same order
    :raises ConstantNotOneException: if `a(0) != 1` and normalization wasn't
        requested
    :raises ZeroConstantTermException: if `a(0) = 0`
    """
    c = a[0]
    if c == 0:
        raise ZeroConstantTermException('Cannot raise a series to a power '
                                        'when it vanishes at zero.')
    scale = 1.0 + 0j
    coeffs = a.coeffs
    if abs(c - 1.0) > UNIT_CONSTANT_TOL:
        if not normalize:
            raise ConstantNotOneException(
                f'A real power needs a(0) = 1 (got {c}).'
            )
        scale = np.power(c, alpha)
        coeffs = coeffs / c
    n = a.order
    b = np.zeros(n + 1, dtype=complex)
    b[0] = 1.0
    # J.C.P. Miller's recurrence: n b_n = sum_k ((alpha + 1) k - n) a_k b_(n-k)
    for m in range(1, n + 1):
        k = np.arange(1, m + 1)
        b[m] = np.dot(((alpha + 1.0) * k - m) * coeffs[1:m + 1],
                      b[m - 1::-1]) / m
    return TaylorSeries(_checked(scale * b, 'ts_pow'))


def ts_derivative(a: TaylorSeries) -> TaylorSeries:
    """
    Differentiate a series term by term.

    :param a: the series
    :return: the derivative (its order is one less, but never below zero)
    """
    if a.order == 0:
        return TaylorSeries([0j])
    return TaylorSeries(np.arange(1, a.order + 1) * a.coeffs[1:])


def ts_integrate(a: TaylorSeries) -> TaylorSeries:
    """
    Integrate a series term by term from zero.

    :param a: the series
    :return: the antiderivative vanishing at zero (its order is one more)
    """
    return TaylorSeries(
        np.concatenate(([0j], a.coeffs / np.arange(1, a.order + 2)))
    )


def ts_substitute_power(a: TaylorSeries, k: int, order: int) -> TaylorSeries:
    """
    Get the series of `a(z^k)`.

    :param a: the series
    :param k: the (positive) power substituted for `z`
    :param order: the order of the result (at most `k` times the order of
        `a`)
    :return: the substituted series
    """
    if k < 1:
        raise ValueError("'k' must be a positive integer.")
    order = min(order, k * a.order)
    coeffs = np.zeros(order + 1, dtype=complex)
    coeffs[0::k] = a.coeffs[:order // k + 1]
    return TaylorSeries(coeffs)


def ts_eval(a: TaylorSeries, z):
    """
    Evaluate a series by Horner's scheme.

    :param a: the series
    :param z: a point (or array of points) with `|z| < 1`
    :return: the value(s)

    .. note::

        Past `|z| = 1 - 10/N` the truncation error dominates; the evaluation
        still happens, but we log a warning.
    """
    _z = np.asarray(z, dtype=complex)
    if a.order >= 10 and _z.size:
        rmax = float(np.max(np.abs(_z)))
        if rmax > 1.0 - 10.0 / a.order:
            logger.warning(
                'Evaluating a series of order %d at |z| = %.6g, beyond its '
                'trustworthy radius %.6g.',
                a.order, rmax, 1.0 - 10.0 / a.order
            )
    values = polynomial.polyval(_z, a.coeffs)
    return complex(values) if np.ndim(values) == 0 else values


def _graded_panels(depth: int, nodes: int) -> Tuple[np.ndarray, np.ndarray]:
    """
    Get Gauss-Legendre nodes and weights on `[0, 1]` for panels that halve in
    length toward `1`.

    :param depth: the number of halvings
    :param nodes: the number of nodes per panel
    :return: the nodes and the weights
    """
    try:
        return _panel_cache[(depth, nodes)]
    except KeyError:
        x, w = legendre.leggauss(nodes)
        edges = np.concatenate((1.0 - 0.5 ** np.arange(depth + 1), [1.0]))
        lo, hi = edges[:-1], edges[1:]
        half = (hi - lo) / 2.0
        s = (lo[:, None] + half[:, None] * (x[None, :] + 1.0)).ravel()
        ws = (half[:, None] * w[None, :]).ravel()
        _panel_cache[(depth, nodes)] = (s, ws)
        return s, ws


def integrate_evaluator(
        df: PointEvaluator,
        nodes: int = 16,
        chunk: int = 4096
) -> PointEvaluator:
    """
    Get an evaluator of `f(z) = z * integral_0^1 f'(sz) ds` from an evaluator
    of `f'`.

    :param df: the derivative's evaluator
    :param nodes: Gauss-Legendre nodes per panel
    :param chunk: how many points to integrate at a time
    :return: the evaluator of `f` (with `f(0) = 0`)

    .. note::

        Panels are graded geometrically toward the end of the path so that
        the peak of `f'` near a boundary singularity is resolved; the depth
        follows the largest `|z|` in each batch.
    """
    def _f(z: np.ndarray):
        flat = np.atleast_1d(z).ravel()
        out = np.empty(flat.shape, dtype=complex)
        for start in range(0, flat.size, chunk):
            part = flat[start:start + chunk]
            rmax = float(np.max(np.abs(part))) if part.size else 0.0
            depth = (
                60 if rmax >= 1.0
                else min(60, max(4, math.ceil(-math.log2(1.0 - rmax)) + 4))
            )
            s, ws = _graded_panels(depth, nodes)
            out[start:start + chunk] = part * (
                df(np.multiply.outer(part, s)) @ ws
            )
        return complex(out[0]) if np.ndim(z) == 0 else out.reshape(np.shape(z))
    return PointEvaluator(eval=_f, kind=EvaluatorKind.PATH_QUADRATURE)
