#!/usr/bin/env python
# -*- coding: utf-8 -*-

# Created on 10/3/26 by Pat Daburu
"""
.. currentmodule:: hardylab.zoo
.. moduleauthor:: Pat Daburu <pat@daburu.net>

The zoo: every named univalent function and extremal family, each as a
truncated series with point evaluators riding along.

.. note::

    Families are identified by :py:class:`Family` tags and parameterized by
    :py:class:`FunctionSpec` documents.  Call :py:func:`build` to get a
    :py:class:`ZooFunction`.
"""
from enum import Enum
import json
import logging
import math
from types import MappingProxyType
from typing import (
    Any,
    Callable,
    Dict,
    Iterable,
    List,
    Mapping,
    NamedTuple,
    Tuple
)
import numpy as np
from scipy.optimize import bisect
from .errors import HardylabException
from .herglotz import (
    DiscreteMeasure,
    InvalidMeasureException,
    caratheodory_series,
    caratheodory_value
)
from .series import (
    EvaluatorKind,
    PointEvaluator,
    TaylorSeries,
    closed_form,
    integrate_evaluator,
    ts_compose,
    ts_derivative,
    ts_div,
    ts_exp,
    ts_integrate,
    ts_mul,
    ts_pow,
    ts_substitute_power
)
from .xchg import Exportable, complex_pair

logger = logging.getLogger(__name__)

#: the truncation order used when nobody asks for another one
DEFAULT_ORDER: int = 64

#: the bracket in which `eps0` is sought
EPS0_BRACKET: Tuple[float, float] = (1e-9, 1.0 / 3.0 - 1e-9)

#: how far `f(0)` and `f'(0) - 1` may stray from zero in a normalized series
NORMALIZATION_TOL: float = 1e-12

#: below this modulus, quotient formulas hand over to the series
_SMALL_Z: float = 1e-3


class ParamOutOfRangeException(HardylabException):
    """
    Raised when a family parameter is missing or outside its admissible range.
    """


class NotInOmegaException(HardylabException):
    """
    Raised when `(r, eps)` falls outside the admissible set of the
    composition construction.
    """


class UnknownFamilyException(HardylabException):
    """
    Raised when a family tag isn't one the zoo knows.
    """


class Family(Enum):
    """
    The function families in the zoo.
    """
    SECTOR = 'sector'  #: convex maps onto sectors (and a strip for `0`)
    STRIP = 'strip'  #: the strip lower envelope
    KOEBE_DILATED = 'koebe_dilated'  #: `k(rz)/r`
    HALF_PLANE = 'half_plane'  #: `z/(1 - z)`
    POLYLOG = 'polylog'  #: `sum z^n / n^t`
    LPR_PHI = 'lpr_phi'  #: the lacunary-exponential bounded map
    CONVEX_FROM_MEASURE = 'convex_from_measure'  #: Herglotz-built convex maps
    ALEXANDER_STARLIKE = 'alexander_starlike'  #: `z h'(z)`
    STARLIKE_EXTREMAL = 'starlike_extremal'  #: two-slit starlike maps
    CTC_EXTREMAL = 'ctc_extremal'  #: Koebe plus strip, close-to-convex
    CTC_THREE_ATOM = 'ctc_three_atom'  #: close-to-convex with `a2 = 0` tuning
    R_EXAMPLE = 'r_example'  #: `z/(1 + z^2)`
    SQRT_TRANSFORM = 'sqrt_transform'  #: the odd square-root transform
    PFALTZGRAFF = 'pfaltzgraff'  #: `integral f'(z)^eps`
    LPR_COMPOSITION = 'lpr_composition'  #: `k_r` composed with Pfaltzgraff


#: families whose members are convex
CONVEX_FAMILIES = frozenset({
    Family.SECTOR,
    Family.STRIP,
    Family.HALF_PLANE,
    Family.POLYLOG,
    Family.CONVEX_FROM_MEASURE
})


def _simple(value: Any) -> Any:
    """
    Reduce a parameter value to the simple types a document can hold.
    """
    if isinstance(value, FunctionSpec):
        return value.export()
    if isinstance(value, DiscreteMeasure):
        return value.to_list()
    if isinstance(value, LacunarySequence):
        return list(value.exponents)
    if isinstance(value, (bool, str)) or value is None:
        return value
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (float, np.floating)):
        return float(value)
    if isinstance(value, (complex, np.complexfloating)):
        return complex_pair(value)
    if isinstance(value, Mapping):
        return {str(k): _simple(v) for k, v in value.items()}
    if isinstance(value, (list, tuple, np.ndarray)):
        return [_simple(v) for v in value]
    raise ParamOutOfRangeException(
        f'{type(value).__name__} is not a valid parameter type.'
    )


class LacunarySequence(NamedTuple):
    """
    Strictly increasing positive exponents, the first of which is `1`.
    """
    exponents: Tuple[int, ...] = (1,)  #: the exponents

    @classmethod
    def of(cls, exponents: Iterable[int]) -> 'LacunarySequence':
        """
        Create a (validated) sequence.

        :param exponents: the exponents
        :return: the sequence
        :raises ParamOutOfRangeException: if the exponents don't start at `1`
            or don't strictly increase
        """
        _exponents = tuple(int(n) for n in exponents)
        if not _exponents or _exponents[0] != 1:
            raise ParamOutOfRangeException(
                'A lacunary sequence must start at 1.'
            )
        if any(b <= a for a, b in zip(_exponents, _exponents[1:])):
            raise ParamOutOfRangeException(
                'A lacunary sequence must increase strictly.'
            )
        return cls(_exponents)

    @classmethod
    def default(cls, order: int) -> 'LacunarySequence':
        """
        Get the default sequence `1, 4, 16, 64, ...` up to an order.

        :param order: the largest admissible exponent
        :return: the sequence
        """
        exponents = [1]
        while exponents[-1] * 4 <= order:
            exponents.append(exponents[-1] * 4)
        return cls(tuple(exponents))


class FunctionSpec(Exportable):
    """
    Names a member of the zoo: a family, its parameters and a truncation order.
    """
    __slots__ = ['_family', '_params', '_order']

    def __init__(
            self,
            family: Family or str,
            params: Mapping[str, Any] = None,
            order: int = DEFAULT_ORDER
    ):
        """

        :param family: the family
        :param params: the parameters (reduced to simple types)
        :param order: the truncation order
        :raises UnknownFamilyException: if the family isn't in the zoo
        :raises ParamOutOfRangeException: if the order is below 2 (so that
            `a2` is always known)
        """
        self._family: Family = family_of(family)  #: the family
        self._params: Dict[str, Any] = _simple(dict(params or {}))  #: params
        self._order: int = int(order)  #: the truncation order
        if self._order < 2:
            raise ParamOutOfRangeException(
                f'The order must be at least 2 (got {order}).'
            )

    @property
    def family(self) -> Family:
        """
        Get the family.
        """
        return self._family

    @property
    def params(self) -> Mapping[str, Any]:
        """
        Get the (read-only) parameters.
        """
        return MappingProxyType(self._params)

    @property
    def order(self) -> int:
        """
        Get the truncation order.
        """
        return self._order

    def real(self, name: str, default: float = None) -> float:
        """
        Get a real parameter.

        :param name: the parameter name
        :param default: the value if the parameter is absent (`None` makes
            the parameter required)
        :return: the value
        :raises ParamOutOfRangeException: if a required parameter is absent
            or the value isn't a finite real number
        """
        value = self._params.get(name, default)
        if value is None:
            raise ParamOutOfRangeException(
                f"The {self._family.value} family requires '{name}'."
            )
        try:
            value = float(value)
        except (TypeError, ValueError) as tex:
            raise ParamOutOfRangeException(
                f"'{name}' must be a real number (got {value!r}).", inner=tex
            )
        if not math.isfinite(value):
            raise ParamOutOfRangeException(f"'{name}' must be finite.")
        return value

    def with_order(self, order: int) -> 'FunctionSpec':
        """
        Get a copy of this spec with another truncation order.

        :param order: the order
        :return: the copy
        """
        return FunctionSpec(self._family, self._params, order)

    def export(self) -> Mapping[str, Any]:
        """
        Export the instance as a mapping of simple types.

        :return: the mapping
        """
        return {
            'family': self._family.value,
            'params': json.loads(json.dumps(self._params)),
            'order': self._order
        }

    @classmethod
    def load(cls, data: Mapping[str, Any]) -> 'FunctionSpec' or None:
        """
        Create an instance from a mapping.

        :param data: the data
        :return: the instance
        """
        if not data:
            return None
        return cls(
            family=data['family'],
            params=data.get('params', {}),
            order=data.get('order', DEFAULT_ORDER)
        )

    def __eq__(self, other):
        if not isinstance(other, FunctionSpec):
            return False
        return self.export() == other.export()

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash(json.dumps(self.export(), sort_keys=True))

    def __repr__(self):
        return (
            f"{self.__class__.__name__}({self._family.value!r}, "
            f"{self._params!r}, order={self._order})"
        )


def family_of(family: Family or str) -> Family:
    """
    Get the family a tag names.

    :param family: the tag (or the family itself)
    :return: the family
    :raises UnknownFamilyException: if the tag names no family
    """
    if isinstance(family, Family):
        return family
    try:
        return Family(str(family).strip().lower())
    except ValueError as vex:
        raise UnknownFamilyException(
            f'{family!r} is not a family in the zoo.', inner=vex
        )


class ZooFunction(NamedTuple):
    """
    A constructed member of the zoo.
    """
    spec: FunctionSpec  #: what was built
    series: TaylorSeries  #: the truncated series of `f`
    f: PointEvaluator  #: evaluates `f`
    df: PointEvaluator  #: evaluates `f'`
    d2f: PointEvaluator  #: evaluates `f''`
    log_df: PointEvaluator or None = None  #: evaluates `log f'` (if known)
    meta: Mapping[str, Any] = {}  #: family-specific extras

    @property
    def a2(self) -> complex:
        """
        Get the second coefficient.
        """
        return self.series[2]

    @property
    def family(self) -> Family:
        """
        Get the family.
        """
        return self.spec.family


def _require(ok: bool, message: str):
    if not ok:
        raise ParamOutOfRangeException(message)


def _poly(coeffs: Iterable[complex], order: int) -> TaylorSeries:
    """
    Get a polynomial as a series of a given order.
    """
    _coeffs = np.zeros(order + 1, dtype=complex)
    head = np.asarray(list(coeffs), dtype=complex)[:order + 1]
    _coeffs[:head.size] = head
    return TaylorSeries(_coeffs)


_KIND_RANK: Dict[EvaluatorKind, int] = {
    EvaluatorKind.CLOSED_FORM: 0,
    EvaluatorKind.PATH_QUADRATURE: 1,
    EvaluatorKind.HORNER_SERIES: 2
}  #: the worse the kind, the higher the rank


def _derived(fn: Callable, *parts: PointEvaluator) -> PointEvaluator:
    """
    Wrap a formula built from other evaluators; it is only as good as the
    worst of them.
    """
    kind = max((p.kind for p in parts), key=_KIND_RANK.get,
               default=EvaluatorKind.CLOSED_FORM)
    orders = [p.order for p in parts if p.order]
    return PointEvaluator(
        eval=fn,
        kind=kind,
        order=min(orders) if kind == EvaluatorKind.HORNER_SERIES else None
    )


def _patched(z: np.ndarray, values, fallback: TaylorSeries):
    """
    Replace values near the origin (where quotient formulas are `0/0`) with
    Horner evaluations of the series.
    """
    near = np.abs(z) < _SMALL_Z
    if not np.any(near):
        return values
    return np.where(near, fallback(np.where(near, z, 0.0)), values)


# Series constructors ---------------------------------------------------------


def _sector_prime_series(alpha: float, order: int) -> TaylorSeries:
    # s_a'(z) = (1 - z)^(-1-a) (1 + z)^(a-1)
    return ts_mul(
        ts_pow(_poly([1, -1], order), -1.0 - alpha),
        ts_pow(_poly([1, 1], order), alpha - 1.0)
    )


def sector(alpha: float, order: int) -> TaylorSeries:
    """
    Get the convex map onto a sector of opening `alpha pi`.

    :param alpha: the opening (in units of `pi`), `0 <= alpha <= 1`
    :param order: the truncation order
    :return: the series of `s_alpha` (`alpha = 0` is the strip map
        `log((1 + z)/(1 - z))/2`)
    :raises ParamOutOfRangeException: if `alpha` is out of range
    """
    _require(0.0 <= alpha <= 1.0, f"'alpha' must lie in [0, 1] (got {alpha}).")
    return ts_integrate(_sector_prime_series(alpha, order - 1))


def strip_ell(alpha: float, order: int) -> TaylorSeries:
    """
    Get the lower-envelope strip map `l_alpha` with
    `l_alpha'(z) = 1/(1 + 2 alpha z + z^2)`.

    :param alpha: the parameter, `0 <= alpha < 1`
    :param order: the truncation order
    :return: the series (with `a2 = -alpha`)
    :raises ParamOutOfRangeException: if `alpha` is out of range
    """
    _require(0.0 <= alpha < 1.0, f"'alpha' must lie in [0, 1) (got {alpha}).")
    return ts_integrate(
        ts_div(TaylorSeries.constant(1.0, order - 1),
               _poly([1.0, 2.0 * alpha, 1.0], order - 1))
    )


def koebe_dilated(r: float, order: int) -> TaylorSeries:
    """
    Get the dilated Koebe function `k(rz)/r`.

    :param r: the dilation, `0 < r <= 1`
    :param order: the truncation order
    :return: the series (`a_n = n r^(n-1)`)
    :raises ParamOutOfRangeException: if `r` is out of range
    """
    _require(0.0 < r <= 1.0, f"'r' must lie in (0, 1] (got {r}).")
    n = np.arange(order + 1, dtype=float)
    coeffs = np.zeros(order + 1)
    coeffs[1:] = n[1:] * np.power(r, n[1:] - 1.0)
    return TaylorSeries(coeffs)


def polylog(t: float, order: int) -> TaylorSeries:
    """
    Get the polylogarithm `sum z^n / n^t`.

    :param t: the exponent, `t >= 0`
    :param order: the truncation order
    :return: the series
    :raises ParamOutOfRangeException: if `t` is negative
    """
    _require(t >= 0.0, f"'t' must be non-negative (got {t}).")
    coeffs = np.zeros(order + 1)
    coeffs[1:] = np.power(np.arange(1, order + 1, dtype=float), -t)
    return TaylorSeries(coeffs)


def lpr_phi_prime(seq: LacunarySequence, order: int) -> TaylorSeries:
    """
    Get `Phi'(z) = exp(sum z^n_p / 2)`.

    :param seq: the lacunary exponents
    :param order: the truncation order
    :return: the series
    """
    log_coeffs = np.zeros(order + 1)
    for n in seq.exponents:
        if n <= order:
            log_coeffs[n] += 0.5
    return ts_exp(TaylorSeries(log_coeffs))


def lpr_phi(seq: LacunarySequence, order: int) -> TaylorSeries:
    """
    Get the bounded map `Phi(z) = integral_0^z exp(sum w^n_p / 2) dw`.

    :param seq: the lacunary exponents
    :param order: the truncation order
    :return: the series (with `a2 = 1/4`)
    :raises ParamOutOfRangeException: if an exponent exceeds the order
    """
    _require(
        seq.exponents[-1] <= order,
        f'Exponent {seq.exponents[-1]} exceeds the order {order}.'
    )
    return ts_integrate(lpr_phi_prime(seq, order - 1))


def _measure_log_df_series(mu: DiscreteMeasure, order: int) -> TaylorSeries:
    # log f' = -2 sum t_j log(1 - lambda_j z) = sum_k (2 m_k / k) z^k
    h = caratheodory_series(mu, order)
    k = np.arange(order + 1, dtype=float)
    k[0] = 1.0
    coeffs = h.coeffs / k
    coeffs[0] = 0.0
    return TaylorSeries(coeffs)


def convex_from_measure(mu: DiscreteMeasure, order: int) -> TaylorSeries:
    """
    Get the convex map whose `1 + z f''/f'` is the Caratheodory function of a
    measure.

    :param mu: the measure
    :param order: the truncation order
    :return: the series (with `a2` equal to the first moment)
    """
    return ts_integrate(ts_exp(_measure_log_df_series(mu, order - 1)))


def alexander_starlike(h_convex: TaylorSeries) -> TaylorSeries:
    """
    Get the starlike map `z h'(z)` of a (normalized) convex map.

    :param h_convex: the convex map
    :return: the starlike map (at the same order)
    """
    return ts_derivative(h_convex).times_z()


def starlike_extremal(alpha: float, order: int) -> TaylorSeries:
    """
    Get the two-slit starlike map
    `z / ((1 - z)^(1 + alpha/2) (1 + z)^(1 - alpha/2))`.

    :param alpha: the second coefficient, `0 <= alpha <= 2`
    :param order: the truncation order
    :return: the series
    :raises ParamOutOfRangeException: if `alpha` is out of range
    """
    _require(0.0 <= alpha <= 2.0, f"'alpha' must lie in [0, 2] (got {alpha}).")
    return ts_mul(
        ts_pow(_poly([1, -1], order - 1), -(1.0 + alpha / 2.0)),
        ts_pow(_poly([1, 1], order - 1), -(1.0 - alpha / 2.0))
    ).times_z()


def ctc_extremal(t: float, order: int) -> TaylorSeries:
    """
    Get the close-to-convex map `t k(z) + (1 - t) s_0(z)`.

    :param t: the Koebe weight, `0 < t <= 1`
    :param order: the truncation order
    :return: the series (with `a2 = 2t`)
    :raises ParamOutOfRangeException: if `t` is out of range
    """
    _require(0.0 < t <= 1.0, f"'t' must lie in (0, 1] (got {t}).")
    return t * koebe_dilated(1.0, order) + (1.0 - t) * sector(0.0, order)


def three_atom_measure(t: float, theta: float) -> DiscreteMeasure:
    """
    Get the measure with mass `t` at `exp(+-i theta)` and `1 - 2t` at `1`.

    :param t: the mass of each conjugate atom, `0 < t < 1/2`
    :param theta: the argument of the conjugate atoms, `0 < theta < pi`
    :return: the measure
    :raises ParamOutOfRangeException: if the parameters are out of range
    """
    _require(0.0 < t < 0.5, f"'t' must lie in (0, 1/2) (got {t}).")
    _require(0.0 < theta < math.pi,
             f"'theta' must lie in (0, pi) (got {theta}).")
    mu = complex(math.cos(theta), math.sin(theta))
    return DiscreteMeasure([(mu, t), (mu.conjugate(), t), (1.0, 1.0 - 2.0 * t)])


def a2_zero_tuning(beta: float) -> Tuple[float, float]:
    """
    Get the `(t, theta)` that make the three-atom close-to-convex map's second
    coefficient vanish.

    :param beta: the sector parameter, `0 <= beta < 1`
    :return: `t = (3 + beta)/8` and `theta` with
        `cos(theta) = -(1 + 3 beta)/(3 + beta)`
    """
    _require(0.0 <= beta < 1.0, f"'beta' must lie in [0, 1) (got {beta}).")
    return (3.0 + beta) / 8.0, math.acos(-(1.0 + 3.0 * beta) / (3.0 + beta))


def ctc_three_atom(
        beta: float,
        t: float,
        theta: float,
        order: int
) -> TaylorSeries:
    """
    Get the close-to-convex map with `f' = s_beta' h`, where `h` is the
    Caratheodory function of :py:func:`three_atom_measure`.

    :param beta: the sector parameter, `0 <= beta < 1`
    :param t: the mass of each conjugate atom, `0 < t < 1/2`
    :param theta: the argument of the conjugate atoms, `0 < theta < pi`
    :param order: the truncation order
    :return: the series (with `a2 = beta + 2t cos(theta) + 1 - 2t`)
    :raises ParamOutOfRangeException: if the parameters are out of range
    """
    _require(0.0 <= beta < 1.0, f"'beta' must lie in [0, 1) (got {beta}).")
    mu = three_atom_measure(t, theta)
    return ts_integrate(
        ts_mul(_sector_prime_series(beta, order - 1),
               caratheodory_series(mu, order - 1))
    )


def r_example(order: int) -> TaylorSeries:
    """
    Get `z/(1 + z^2) = z - z^3 + z^5 - ...`.

    :param order: the truncation order
    :return: the series
    """
    coeffs = np.zeros(order + 1)
    coeffs[1::4] = 1.0
    coeffs[3::4] = -1.0
    return TaylorSeries(coeffs)


def _check_normalized(f: TaylorSeries, what: str):
    if (
            abs(f[0]) > NORMALIZATION_TOL
            or f.order < 1
            or abs(f[1] - 1.0) > NORMALIZATION_TOL
    ):
        raise ParamOutOfRangeException(
            f'The {what} needs a normalized series (f(0) = 0, f\'(0) = 1).'
        )


def sqrt_transform(f: TaylorSeries, order: int) -> TaylorSeries:
    """
    Get the odd function `g(z) = sqrt(f(z^2))`.

    :param f: a normalized series
    :param order: the truncation order
    :return: the series of `g` (known to at most `2 f.order - 1`)
    :raises ParamOutOfRangeException: if `f` isn't normalized
    """
    _check_normalized(f, 'square-root transform')
    # Write f(w) = w q(w) with q(0) = 1; then g(z) = z sqrt(q(z^2)).
    root = ts_pow(TaylorSeries(f.coeffs[1:]), 0.5)
    return ts_substitute_power(root, 2, order - 1).times_z()


def pfaltzgraff(f: TaylorSeries, eps: float, order: int) -> TaylorSeries:
    """
    Get `g(z) = integral_0^z f'(w)^eps dw`.

    :param f: a normalized series
    :param eps: the exponent, `0 < eps <= 1/4`
    :param order: the truncation order
    :return: the series of `g`
    :raises ParamOutOfRangeException: if `eps` is out of range or `f` isn't
        normalized
    """
    _require(0.0 < eps <= 0.25, f"'eps' must lie in (0, 1/4] (got {eps}).")
    _check_normalized(f, 'Pfaltzgraff transform')
    g = ts_integrate(ts_pow(ts_derivative(f), eps))
    return g.truncate(min(order, g.order))


def eps0_solve(r: float) -> float:
    """
    Solve `2^eps0 / (1 - 3 eps0) = 1/r` for `eps0`.

    :param r: the dilation, `0 < r < 1`
    :return: `eps0(r)`
    :raises ParamOutOfRangeException: if `r` is out of range
    """
    _require(0.0 < r < 1.0, f"'r' must lie in (0, 1) (got {r}).")

    def _gap(eps: float) -> float:
        return r * math.pow(2.0, eps) - (1.0 - 3.0 * eps)

    lo, hi = EPS0_BRACKET
    # The gap increases with eps; outside the bracket, clamp to its ends.
    if _gap(lo) >= 0.0:
        return lo
    if _gap(hi) <= 0.0:
        return hi
    eps0 = bisect(_gap, lo, hi, xtol=1e-15, maxiter=200)
    logger.debug('eps0(%.17g) = %.17g', r, eps0)
    return eps0


def eps0_derivative(r: float) -> float:
    """
    Get the derivative of `eps0` at `r`.

    :param r: the dilation, `0 < r < 1`
    :return: `-2^eps0 / (3 + r 2^eps0 log 2)` (always negative)
    """
    two_eps = math.pow(2.0, eps0_solve(r))
    return -two_eps / (3.0 + r * two_eps * math.log(2.0))


def in_omega(r: float, eps: float) -> bool:
    """
    Is `(r, eps)` admissible for the composition construction?

    :param r: the dilation
    :param eps: the Pfaltzgraff exponent
    :return: `True` if `0 < r < 1` and `0 < eps <= min(eps0(r), 1/4)`
    """
    if not 0.0 < r < 1.0:
        return False
    return 0.0 < eps <= min(eps0_solve(r), 0.25) + 1e-15


def lpr_composition(
        r: float,
        eps: float,
        seq: LacunarySequence,
        order: int
) -> TaylorSeries:
    """
    Get `f = k_r o g`, where `g` is the Pfaltzgraff transform of `Phi`.

    :param r: the dilation
    :param eps: the Pfaltzgraff exponent
    :param seq: the lacunary exponents of `Phi`
    :param order: the truncation order
    :return: the series (with `a2 = 2r + eps/4`)
    :raises NotInOmegaException: if `(r, eps)` isn't admissible
    """
    if not in_omega(r, eps):
        raise NotInOmegaException(
            f'({r}, {eps}) is not in the admissible set.'
        )
    g = pfaltzgraff(lpr_phi(seq, order), eps, order)
    return ts_compose(koebe_dilated(r, order), g)


def omega_sweep(count: int = 50) -> List[Tuple[float, float, float]]:
    """
    Sweep the admissible set of the composition construction.

    :param count: the number of radii
    :return: `(r, eps, a2)` triples reaching `a2 <= 0.01` and `a2 >= 1.99`
    """
    sweep = []
    for r in np.linspace(0.004, 0.996, count):
        eps_max = min(eps0_solve(float(r)), 0.25)
        for fraction in (0.01, 0.5, 1.0):
            eps = fraction * eps_max
            sweep.append((float(r), eps, 2.0 * float(r) + eps / 4.0))
    return sweep


# Point evaluators ------------------------------------------------------------


def _sector_evaluators(alpha: float) -> Tuple[PointEvaluator, ...]:
    def _log_df(z):
        return -(1.0 + alpha) * np.log1p(-z) + (alpha - 1.0) * np.log1p(z)

    def _f(z):
        log_w = np.log1p(z) - np.log1p(-z)
        if alpha == 0.0:
            return 0.5 * log_w
        return np.expm1(alpha * log_w) / (2.0 * alpha)

    def _d2f(z):
        return np.exp(_log_df(z)) * 2.0 * (alpha + z) / (1.0 - z * z)

    return (
        closed_form(_f),
        closed_form(lambda z: np.exp(_log_df(z))),
        closed_form(_d2f),
        closed_form(_log_df)
    )


def _build_sector(spec: FunctionSpec) -> ZooFunction:
    alpha = spec.real('alpha')
    series = sector(alpha, spec.order)
    return ZooFunction(spec, series, *_sector_evaluators(alpha))


def _build_half_plane(spec: FunctionSpec) -> ZooFunction:
    return ZooFunction(
        spec,
        sector(1.0, spec.order),
        closed_form(lambda z: z / (1.0 - z)),
        closed_form(lambda z: 1.0 / (1.0 - z) ** 2),
        closed_form(lambda z: 2.0 / (1.0 - z) ** 3),
        closed_form(lambda z: -2.0 * np.log1p(-z))
    )


def _build_strip(spec: FunctionSpec) -> ZooFunction:
    alpha = spec.real('alpha')
    series = strip_ell(alpha, spec.order)
    s = math.sqrt(1.0 - alpha * alpha)
    lam = complex(alpha, s)
    return ZooFunction(
        spec,
        series,
        closed_form(
            lambda z: (1j / (2.0 * s)) * (np.log1p(lam.conjugate() * z)
                                          - np.log1p(lam * z))
        ),
        closed_form(lambda z: 1.0 / (1.0 + 2.0 * alpha * z + z * z)),
        closed_form(
            lambda z: -(2.0 * alpha + 2.0 * z)
            / (1.0 + 2.0 * alpha * z + z * z) ** 2
        ),
        closed_form(lambda z: -np.log1p(lam * z) - np.log1p(lam.conjugate() * z)),
        {'rotation': -1.0}
    )


def _build_koebe_dilated(spec: FunctionSpec) -> ZooFunction:
    r = spec.real('r', 1.0)
    series = koebe_dilated(r, spec.order)
    return ZooFunction(
        spec,
        series,
        closed_form(lambda z: z / (1.0 - r * z) ** 2),
        closed_form(lambda z: (1.0 + r * z) / (1.0 - r * z) ** 3),
        closed_form(lambda z: r * (4.0 + 2.0 * r * z) / (1.0 - r * z) ** 4),
        closed_form(lambda z: np.log1p(r * z) - 3.0 * np.log1p(-r * z))
    )


def _build_polylog(spec: FunctionSpec) -> ZooFunction:
    t = spec.real('t')
    series = polylog(t, spec.order)
    if t == 0.0:
        return ZooFunction(spec, series, *_build_half_plane(spec)[2:6])
    if t == 1.0:
        return ZooFunction(
            spec,
            series,
            closed_form(lambda z: -np.log1p(-z)),
            closed_form(lambda z: 1.0 / (1.0 - z)),
            closed_form(lambda z: 1.0 / (1.0 - z) ** 2),
            closed_form(lambda z: -np.log1p(-z))
        )
    # Otherwise there is no elementary closed form, so we fall back to Horner.
    df = ts_derivative(series)
    return ZooFunction(
        spec,
        series,
        series.evaluator(),
        df.evaluator(),
        ts_derivative(df).evaluator()
    )


def _sequence(spec: FunctionSpec) -> LacunarySequence:
    exponents = spec.params.get('exponents')
    if exponents is None:
        return LacunarySequence.default(spec.order)
    return LacunarySequence.of(exponents)


def _lpr_phi_evaluators(seq: LacunarySequence) -> Tuple[PointEvaluator, ...]:
    exponents = np.array(seq.exponents, dtype=int)

    def _log_df(z):
        return 0.5 * (z[..., None] ** exponents).sum(axis=-1)

    def _d2f(z):
        return np.exp(_log_df(z)) * 0.5 * (
            exponents * z[..., None] ** (exponents - 1)
        ).sum(axis=-1)

    df = closed_form(lambda z: np.exp(_log_df(z)))
    return integrate_evaluator(df), df, closed_form(_d2f), closed_form(_log_df)


def _build_lpr_phi(spec: FunctionSpec) -> ZooFunction:
    seq = _sequence(spec)
    return ZooFunction(
        spec,
        lpr_phi(seq, spec.order),
        *_lpr_phi_evaluators(seq),
        {'exponents': list(seq.exponents)}
    )


def _measure(spec: FunctionSpec) -> DiscreteMeasure:
    atoms = spec.params.get('measure')
    if not atoms:
        raise ParamOutOfRangeException(
            f"The {spec.family.value} family requires a 'measure'."
        )
    try:
        return DiscreteMeasure.from_list(atoms)
    except (KeyError, TypeError) as kex:
        raise InvalidMeasureException(
            "A measure is a list of {arg_over_pi, weight} mappings.", inner=kex
        )


def _build_convex_from_measure(spec: FunctionSpec) -> ZooFunction:
    mu = _measure(spec)
    lams, weights = mu.lams, mu.weights

    def _log_df(z):
        return -2.0 * (np.log1p(-np.multiply.outer(z, lams)) @ weights)

    def _d2f(z):
        return np.exp(_log_df(z)) * (
            (2.0 * lams / (1.0 - np.multiply.outer(z, lams))) @ weights
        )

    df = closed_form(lambda z: np.exp(_log_df(z)))
    return ZooFunction(
        spec,
        convex_from_measure(mu, spec.order),
        integrate_evaluator(df),
        df,
        closed_form(_d2f),
        closed_form(_log_df),
        {'measure': mu}
    )


def _source(spec: FunctionSpec, default: FunctionSpec) -> ZooFunction:
    data = spec.params.get('source')
    source = FunctionSpec.load(data) if data else default
    return build(source.with_order(spec.order))


def _build_alexander_starlike(spec: FunctionSpec) -> ZooFunction:
    h = _source(spec, FunctionSpec(Family.HALF_PLANE))
    series = alexander_starlike(h.series)
    d2f = ts_derivative(ts_derivative(series))
    return ZooFunction(
        spec,
        series,
        _derived(lambda z: z * h.df(z), h.df),
        _derived(lambda z: h.df(z) + z * h.d2f(z), h.df, h.d2f),
        d2f.evaluator(),
        meta={'source': h.spec}
    )


def _build_starlike_extremal(spec: FunctionSpec) -> ZooFunction:
    alpha = spec.real('alpha')
    series = starlike_extremal(alpha, spec.order)
    a, b = 2.0 + alpha / 2.0, 2.0 - alpha / 2.0

    def _power_part(z):
        return np.exp(-a * np.log1p(-z) - b * np.log1p(z))

    def _quadratic(z):
        return 1.0 + alpha * z + z * z

    def _d2f(z):
        return _power_part(z) * (
            (alpha + 2.0 * z) + _quadratic(z) * (a / (1.0 - z) - b / (1.0 + z))
        )

    return ZooFunction(
        spec,
        series,
        closed_form(
            lambda z: z * np.exp(-(1.0 + alpha / 2.0) * np.log1p(-z)
                                 - (1.0 - alpha / 2.0) * np.log1p(z))
        ),
        closed_form(lambda z: _quadratic(z) * _power_part(z)),
        closed_form(_d2f)
    )


def _build_ctc_extremal(spec: FunctionSpec) -> ZooFunction:
    t = spec.real('t')
    series = ctc_extremal(t, spec.order)
    return ZooFunction(
        spec,
        series,
        closed_form(
            lambda z: t * z / (1.0 - z) ** 2
            + (1.0 - t) * 0.5 * (np.log1p(z) - np.log1p(-z))
        ),
        closed_form(
            lambda z: t * (1.0 + z) / (1.0 - z) ** 3
            + (1.0 - t) / (1.0 - z * z)
        ),
        closed_form(
            lambda z: t * (4.0 + 2.0 * z) / (1.0 - z) ** 4
            + (1.0 - t) * 2.0 * z / (1.0 - z * z) ** 2
        )
    )


def _build_ctc_three_atom(spec: FunctionSpec) -> ZooFunction:
    beta = spec.real('beta', 0.0)
    t0, theta0 = a2_zero_tuning(beta)
    t, theta = spec.real('t', t0), spec.real('theta', theta0)
    series = ctc_three_atom(beta, t, theta, spec.order)
    mu = three_atom_measure(t, theta)
    _, s_df, s_d2f, _ = _sector_evaluators(beta)

    def _dh(z):
        lz = np.multiply.outer(z, mu.lams)
        return (2.0 * mu.lams / (1.0 - lz) ** 2) @ mu.weights

    df = closed_form(lambda z: s_df(z) * caratheodory_value(mu, z))
    return ZooFunction(
        spec,
        series,
        integrate_evaluator(df),
        df,
        closed_form(
            lambda z: s_d2f(z) * caratheodory_value(mu, z) + s_df(z) * _dh(z)
        ),
        meta={'t': t, 'theta': theta, 'measure': mu}
    )


def _build_r_example(spec: FunctionSpec) -> ZooFunction:
    return ZooFunction(
        spec,
        r_example(spec.order),
        closed_form(lambda z: z / (1.0 + z * z)),
        closed_form(lambda z: (1.0 - z * z) / (1.0 + z * z) ** 2),
        closed_form(lambda z: (2.0 * z ** 3 - 6.0 * z) / (1.0 + z * z) ** 3)
    )


def _build_sqrt_transform(spec: FunctionSpec) -> ZooFunction:
    src = _source(spec, FunctionSpec(Family.LPR_PHI))
    series = sqrt_transform(src.series, spec.order)
    dseries = ts_derivative(series)
    d2series = ts_derivative(dseries)

    def _g(z):
        w = z * z
        with np.errstate(divide='ignore', invalid='ignore'):
            g = z * np.sqrt(src.f(w) / w)
        return _patched(z, g, series)

    def _dg(z):
        with np.errstate(divide='ignore', invalid='ignore'):
            dg = z * src.df(z * z) / _g(z)
        return _patched(z, dg, dseries)

    def _d2g(z):
        w = z * z
        with np.errstate(divide='ignore', invalid='ignore'):
            d2g = (src.df(w) + 2.0 * w * src.d2f(w) - _dg(z) ** 2) / _g(z)
        return _patched(z, d2g, d2series)

    return ZooFunction(
        spec,
        series,
        _derived(_g, src.f),
        _derived(_dg, src.f, src.df),
        _derived(_d2g, src.f, src.df, src.d2f),
        meta={'source': src.spec}
    )


def _pfaltzgraff_evaluators(
        src: ZooFunction,
        eps: float
) -> Tuple[PointEvaluator, ...]:
    def _log_dg(z):
        if src.log_df is not None:
            return eps * src.log_df(z)
        return eps * np.log(src.df(z))

    dg = _derived(lambda z: np.exp(_log_dg(z)), src.df)
    d2g = _derived(
        lambda z: eps * np.exp(_log_dg(z)) * src.d2f(z) / src.df(z),
        src.df, src.d2f
    )
    return (
        integrate_evaluator(dg),
        dg,
        d2g,
        _derived(_log_dg, src.log_df or src.df)
    )


def _build_pfaltzgraff(spec: FunctionSpec) -> ZooFunction:
    eps = spec.real('eps')
    src = _source(spec, FunctionSpec(Family.LPR_PHI))
    return ZooFunction(
        spec,
        pfaltzgraff(src.series, eps, spec.order),
        *_pfaltzgraff_evaluators(src, eps),
        meta={'source': src.spec}
    )


def _build_lpr_composition(spec: FunctionSpec) -> ZooFunction:
    r = spec.real('r')
    if not 0.0 < r < 1.0:
        raise NotInOmegaException(f"'r' must lie in (0, 1) (got {r}).")
    eps0 = eps0_solve(r)
    eps = spec.real('eps', min(eps0, 0.25))
    seq = _sequence(spec)
    series = lpr_composition(r, eps, seq, spec.order)
    phi = build(FunctionSpec(Family.LPR_PHI,
                             {'exponents': seq},
                             spec.order))
    g, dg, d2g, _ = _pfaltzgraff_evaluators(phi, eps)

    def _dk(w):
        return (1.0 + r * w) / (1.0 - r * w) ** 3

    def _d2k(w):
        return r * (4.0 + 2.0 * r * w) / (1.0 - r * w) ** 4

    def _df(z):
        return _dk(g(z)) * dg(z)

    def _d2f(z):
        gz, dgz = g(z), dg(z)
        return _d2k(gz) * dgz ** 2 + _dk(gz) * d2g(z)

    return ZooFunction(
        spec,
        series,
        _derived(lambda z: g(z) / (1.0 - r * g(z)) ** 2, g),
        _derived(_df, g, dg),
        _derived(_d2f, g, dg, d2g),
        meta={
            'eps0': eps0,
            'eps': eps,
            'exponents': list(seq.exponents),
            'range_bound': math.pow(2.0, eps) / (1.0 - 3.0 * eps)
        }
    )


_builders: Dict[Family, Callable[[FunctionSpec], ZooFunction]] = {
    Family.SECTOR: _build_sector,
    Family.STRIP: _build_strip,
    Family.KOEBE_DILATED: _build_koebe_dilated,
    Family.HALF_PLANE: _build_half_plane,
    Family.POLYLOG: _build_polylog,
    Family.LPR_PHI: _build_lpr_phi,
    Family.CONVEX_FROM_MEASURE: _build_convex_from_measure,
    Family.ALEXANDER_STARLIKE: _build_alexander_starlike,
    Family.STARLIKE_EXTREMAL: _build_starlike_extremal,
    Family.CTC_EXTREMAL: _build_ctc_extremal,
    Family.CTC_THREE_ATOM: _build_ctc_three_atom,
    Family.R_EXAMPLE: _build_r_example,
    Family.SQRT_TRANSFORM: _build_sqrt_transform,
    Family.PFALTZGRAFF: _build_pfaltzgraff,
    Family.LPR_COMPOSITION: _build_lpr_composition
}  #: how each family is built


def build(spec: FunctionSpec) -> ZooFunction:
    """
    Build a member of the zoo.

    :param spec: names the member
    :return: the series and its point evaluators
    :raises UnknownFamilyException: if no builder knows the family
    """
    try:
        builder = _builders[spec.family]
    except KeyError:
        raise UnknownFamilyException(f'{spec.family} has no builder.')
    zf = builder(spec)
    logger.debug('Built %r (a2 = %s).', spec, zf.series[2]
                 if zf.series.order >= 2 else None)
    return zf


def zoo_function(
        family: Family or str,
        order: int = DEFAULT_ORDER,
        **params
) -> ZooFunction:
    """
    Build a member of the zoo from keyword parameters.

    :param family: the family
    :param order: the truncation order
    :param params: the family parameters
    :return: the constructed function
    """
    return build(FunctionSpec(family, params, order))
