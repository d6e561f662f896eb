#!/usr/bin/env python
# -*- coding: utf-8 -*-
import json
import logging
import math
import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from hardylab.series import (
    ConstantNotOneException,
    EvaluatorKind,
    InnerConstantNonzeroException,
    LogConstantNotOneException,
    NonFiniteCoefficientException,
    TaylorSeries,
    ZeroConstantTermException,
    closed_form,
    integrate_evaluator,
    ts_compose,
    ts_derivative,
    ts_div,
    ts_eval,
    ts_exp,
    ts_integrate,
    ts_log,
    ts_mul,
    ts_pow,
    ts_substitute_power
)
from hardylab.xchg import load_any

_coefficient = st.complex_numbers(
    max_magnitude=1.0, allow_nan=False, allow_infinity=False
)
_series = st.lists(_coefficient, min_size=8, max_size=8).map(TaylorSeries)


@pytest.fixture(scope='module', name='geometric')
def geometric_fix() -> TaylorSeries:
    """
    Get the series of `1/(1 - z)` to order 32.

    :return: the series
    """
    return TaylorSeries(np.ones(33))


def test_constructors():
    """
    Arrange/Act: Build constant, monomial and identity series.
    Assert: The coefficients sit where they should.
    """
    assert TaylorSeries.constant(2.5, 4).coeffs.tolist() == [2.5, 0, 0, 0, 0]
    assert TaylorSeries.monomial(3, 4, 2j)[3] == 2j
    assert TaylorSeries.monomial(5, 4).coeffs.tolist() == [0, 0, 0, 0, 0]
    assert TaylorSeries.identity(3).coeffs.tolist() == [0, 1, 0, 0]
    assert TaylorSeries.identity(3).order == 3


def test_non_finite_coefficient_raises():
    """
    Arrange/Act: Build a series with a NaN coefficient.
    Assert: The constructor raises `NonFiniteCoefficientException`.
    """
    with pytest.raises(NonFiniteCoefficientException):
        TaylorSeries([1.0, math.nan])


def test_coefficients_are_read_only(geometric):
    """
    Arrange: Get a series.
    Act: Try to overwrite a coefficient.
    Assert: numpy refuses.

    :param geometric: the geometric series
    """
    with pytest.raises(ValueError):
        geometric.coeffs[0] = 2.0


def test_mul_truncates_at_smaller_order():
    """
    Arrange: Get `1 + z` (order 1) and `1 - z` (order 3).
    Act: Multiply them.
    Assert: The product is `1 - z^2` truncated at order 1, i.e. `1`.
    """
    product = ts_mul(TaylorSeries([1, 1]), TaylorSeries([1, -1, 0, 0]))
    assert product.order == 1
    assert product.coeffs.tolist() == [1, 0]


def test_div_geometric(geometric):
    """
    Arrange: Get `1` and `1 - z`.
    Act: Divide the first by the second.
    Assert: The quotient is the geometric series.

    :param geometric: the geometric series
    """
    one = TaylorSeries.constant(1.0, 32)
    one_minus_z = TaylorSeries([1.0, -1.0] + [0.0] * 31)
    assert np.allclose(ts_div(one, one_minus_z).coeffs, geometric.coeffs,
                       rtol=0.0, atol=1e-15)


def test_div_by_zero_constant_raises(geometric):
    """
    Arrange/Act: Divide by a series that vanishes at zero.
    Assert: The call raises `ZeroConstantTermException`.

    :param geometric: the geometric series
    """
    with pytest.raises(ZeroConstantTermException):
        ts_div(geometric, TaylorSeries.identity(32))


def test_compose_mobius_inverse():
    """
    Arrange: Get `z/(1 - z)` and its inverse `z/(1 + z)`.
    Act: Compose them.
    Assert: The composition is `z`.
    """
    n = 24
    outer = TaylorSeries([0.0] + [1.0] * n)
    inner = TaylorSeries([0.0] + [(-1.0) ** (k - 1) for k in range(1, n + 1)])
    assert np.allclose(ts_compose(outer, inner).coeffs,
                       TaylorSeries.identity(n).coeffs, atol=1e-12)


def test_compose_inner_constant_raises(geometric):
    """
    Arrange/Act: Compose with an inner series that doesn't vanish at zero.
    Assert: The call raises `InnerConstantNonzeroException`.

    :param geometric: the geometric series
    """
    with pytest.raises(InnerConstantNonzeroException):
        ts_compose(geometric, geometric)


def test_exp_of_z():
    """
    Arrange/Act: Exponentiate `z`.
    Assert: The coefficients are `1/n!`.
    """
    e = ts_exp(TaylorSeries.identity(15))
    expected = [1.0 / math.factorial(n) for n in range(16)]
    assert np.allclose(e.coeffs, expected, rtol=1e-14, atol=0.0)


def test_log_of_one_minus_z():
    """
    Arrange/Act: Take the logarithm of `1 - z`.
    Assert: The coefficients are `-1/n` (and `0` at zero).
    """
    log = ts_log(TaylorSeries([1.0, -1.0] + [0.0] * 19))
    expected = [0.0] + [-1.0 / n for n in range(1, 21)]
    assert np.allclose(log.coeffs, expected, rtol=1e-14, atol=1e-16)


def test_log_constant_not_one_raises():
    """
    Arrange/Act: Take the logarithm of a series with constant term `2`.
    Assert: The call raises `LogConstantNotOneException`.
    """
    with pytest.raises(LogConstantNotOneException):
        ts_log(TaylorSeries([2.0, 1.0]))


@pytest.mark.parametrize(
    'alpha,expected',
    [
        (-2.0, [n + 1.0 for n in range(10)]),
        (-1.0, [1.0] * 10),
        (1.0, [1.0, -1.0] + [0.0] * 8),
        (0.0, [1.0] + [0.0] * 9)
    ]
)
def test_pow_of_one_minus_z(alpha, expected):
    """
    Arrange: Get the series of `1 - z`.
    Act: Raise it to a power.
    Assert: The coefficients match the binomial series.

    :param alpha: the exponent
    :param expected: the expected coefficients
    """
    b = ts_pow(TaylorSeries([1.0, -1.0] + [0.0] * 8), alpha)
    assert np.allclose(b.coeffs, expected, rtol=1e-14, atol=1e-15)


def test_pow_normalizes_constant():
    """
    Arrange: Get `4 + 4z`.
    Act: Take its square root with normalization.
    Assert: The result is `2 (1 + z)^(1/2)`; without normalization the call
        raises `ConstantNotOneException`.
    """
    a = TaylorSeries([4.0, 4.0, 0.0, 0.0])
    root = ts_pow(a, 0.5, normalize=True)
    assert np.allclose(root.coeffs, [2.0, 1.0, -0.25, 0.125], rtol=1e-14)
    with pytest.raises(ConstantNotOneException):
        ts_pow(a, 0.5)


def test_pow_zero_constant_raises():
    """
    Arrange/Act: Raise `z` to a real power.
    Assert: The call raises `ZeroConstantTermException`.
    """
    with pytest.raises(ZeroConstantTermException):
        ts_pow(TaylorSeries.identity(4), 0.5)


def test_derivative_and_integral(geometric):
    """
    Arrange: Get the geometric series.
    Act: Integrate it, then differentiate the integral.
    Assert: We are back where we started, and the integral is `-log(1 - z)`.

    :param geometric: the geometric series
    """
    integral = ts_integrate(geometric)
    assert integral.order == geometric.order + 1
    assert integral[0] == 0
    assert integral[5] == pytest.approx(1.0 / 5.0)
    assert np.allclose(ts_derivative(integral).coeffs, geometric.coeffs,
                       rtol=1e-15, atol=0.0)


def test_substitute_power(geometric):
    """
    Arrange: Get the geometric series.
    Act: Substitute `z^2` for `z`.
    Assert: Only the even coefficients survive.

    :param geometric: the geometric series
    """
    even = ts_substitute_power(geometric, 2, 10)
    assert even.coeffs.tolist() == [1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1]
    with pytest.raises(ValueError):
        ts_substitute_power(geometric, 0, 10)


def test_divided_by_z_and_times_z(geometric):
    """
    Arrange: Multiply the geometric series by `z`.
    Act: Divide the product by `z`.
    Assert: The round trip is exact and dividing a series that doesn't vanish
        at zero raises `ZeroConstantTermException`.

    :param geometric: the geometric series
    """
    assert geometric.times_z().divided_by_z() == geometric
    with pytest.raises(ZeroConstantTermException):
        geometric.divided_by_z()


def test_parity_and_reality():
    """
    Arrange/Act: Build an odd real series and a complex one.
    Assert: `is_odd` and `is_real` tell them apart.
    """
    odd = TaylorSeries([0.0, 1.0, 0.0, 1.0 / 3.0])
    assert odd.is_odd()
    assert odd.is_real()
    assert not TaylorSeries([0.0, 1.0, 0.5j]).is_real()
    assert not TaylorSeries([0.0, 1.0, 0.5]).is_odd()


def test_eval_geometric(geometric):
    """
    Arrange: Get the geometric series.
    Act: Evaluate it at `1/2` and at an array of points.
    Assert: The values approximate `1/(1 - z)`.

    :param geometric: the geometric series
    """
    assert ts_eval(geometric, 0.5) == pytest.approx(2.0, rel=1e-9)
    z = np.array([0.1, -0.2j, 0.3 + 0.1j])
    assert np.allclose(geometric(z), 1.0 / (1.0 - z), rtol=1e-12)


def test_eval_beyond_radius_warns(geometric, caplog):
    """
    Arrange: Get a series of order 32.
    Act: Evaluate it close to the unit circle.
    Assert: A warning is logged.

    :param geometric: the geometric series
    :param caplog: the log capture fixture
    """
    with caplog.at_level(logging.WARNING, logger='hardylab.series'):
        ts_eval(geometric, 0.9)
    assert any('trustworthy radius' in r.message for r in caplog.records)


def test_evaluator_radius(geometric):
    """
    Arrange/Act: Get Horner and closed-form evaluators.
    Assert: Only the Horner evaluator limits its trustworthy radius.

    :param geometric: the geometric series
    """
    horner = geometric.evaluator()
    assert horner.kind == EvaluatorKind.HORNER_SERIES
    assert horner.max_radius == pytest.approx(1.0 - 10.0 / 32.0)
    assert closed_form(lambda z: z).max_radius == 1.0


@pytest.mark.parametrize('r', [0.5, 0.9, 0.999])
def test_integrate_evaluator_half_plane(r):
    """
    Arrange: Get the closed-form derivative of `z/(1 - z)`.
    Act: Integrate it along radii with the path quadrature.
    Assert: The values match `z/(1 - z)` to near machine precision.

    :param r: the radius
    """
    f = integrate_evaluator(closed_form(lambda z: 1.0 / (1.0 - z) ** 2))
    assert f.kind == EvaluatorKind.PATH_QUADRATURE
    z = r * np.exp(1j * np.linspace(0.0, 2.0 * np.pi, 64, endpoint=False))
    assert np.allclose(f(z), z / (1.0 - z), rtol=1e-11, atol=0.0)
    assert isinstance(f(0.25), complex)


def test_export_load(geometric):
    """
    Arrange: Export a series to JSON.
    Act: Load the export data to create a new series.
    Assert: The loaded series is equivalent to the original.

    :param geometric: the geometric series
    """
    s = geometric * (1.0 + 0.5j)
    loaded = load_any(json.loads(json.dumps(s.export())))
    assert loaded == s
    assert hash(loaded) == hash(s)


@settings(max_examples=50, deadline=None)
@given(a=_series, b=_series, c=_series)
def test_mul_ring_axioms(a, b, c):
    """
    Arrange: Draw three random series.
    Act: Multiply and add them in different groupings.
    Assert: Multiplication is commutative, associative and distributive.

    :param a: a series
    :param b: a series
    :param c: a series
    """
    assert np.allclose(ts_mul(a, b).coeffs, ts_mul(b, a).coeffs, atol=1e-12)
    assert np.allclose(ts_mul(ts_mul(a, b), c).coeffs,
                       ts_mul(a, ts_mul(b, c)).coeffs, atol=1e-11)
    assert np.allclose(ts_mul(a, b + c).coeffs,
                       (ts_mul(a, b) + ts_mul(a, c)).coeffs, atol=1e-12)


@settings(max_examples=50, deadline=None)
@given(a=_series, tail=st.lists(_coefficient, min_size=7, max_size=7))
def test_div_inverts_mul(a, tail):
    """
    Arrange: Draw a random series and a divisor with constant term `1`.
    Act: Multiply by the divisor and divide again.
    Assert: We are back where we started.

    :param a: a series
    :param tail: the divisor's other coefficients
    """
    b = TaylorSeries([1.0] + [0.1 * c for c in tail])
    assert np.allclose(ts_div(ts_mul(a, b), b).coeffs, a.coeffs,
                       rtol=1e-9, atol=1e-9)


@settings(max_examples=50, deadline=None)
@given(tail=st.lists(_coefficient, min_size=7, max_size=7))
def test_exp_inverts_log(tail):
    """
    Arrange: Draw a series with constant term `1`.
    Act: Take its logarithm and exponentiate.
    Assert: We are back where we started.

    :param tail: the other coefficients
    """
    a = TaylorSeries([1.0] + [0.2 * c for c in tail])
    assert np.allclose(ts_exp(ts_log(a)).coeffs, a.coeffs, atol=1e-12)
