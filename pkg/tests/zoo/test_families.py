#!/usr/bin/env python
# -*- coding: utf-8 -*-
import math
import numpy as np
import pytest
from hardylab.herglotz import DiscreteMeasure, moment
from hardylab.series import EvaluatorKind
from hardylab.zoo import (
    Family,
    FunctionSpec,
    LacunarySequence,
    ParamOutOfRangeException,
    a2_zero_tuning,
    build,
    convex_from_measure,
    koebe_dilated,
    lpr_phi,
    polylog,
    r_example,
    sector,
    starlike_extremal,
    strip_ell,
    zoo_function
)

#: one member of every family
MEMBERS = [
    (Family.SECTOR, {'alpha': 0.5}),
    (Family.STRIP, {'alpha': 0.5}),
    (Family.KOEBE_DILATED, {'r': 0.5}),
    (Family.HALF_PLANE, {}),
    (Family.POLYLOG, {'t': 0.5}),
    (Family.POLYLOG, {'t': 1.0}),
    (Family.LPR_PHI, {}),
    (Family.CONVEX_FROM_MEASURE, {
        'measure': DiscreteMeasure.from_args([0.0, 0.5], [0.6, 0.4])
    }),
    (Family.ALEXANDER_STARLIKE, {}),
    (Family.STARLIKE_EXTREMAL, {'alpha': 1.0}),
    (Family.CTC_EXTREMAL, {'t': 0.5}),
    (Family.CTC_THREE_ATOM, {}),
    (Family.R_EXAMPLE, {}),
    (Family.SQRT_TRANSFORM, {}),
    (Family.PFALTZGRAFF, {'eps': 0.25}),
    (Family.LPR_COMPOSITION, {'r': 0.5})
]


@pytest.mark.parametrize('alpha', [0.0, 0.25, 0.5, 0.75, 1.0])
def test_sector_coefficients(alpha):
    """
    Arrange/Act: Build the sector map of order 64.
    Assert: `a2 = alpha` and `a3 = (1 + 2 alpha^2)/3` to `1e-12`.

    :param alpha: the opening
    """
    s = sector(alpha, 64)
    assert s.order == 64
    assert s[0] == 0 and s[1] == pytest.approx(1.0, abs=1e-15)
    assert abs(s[2] - alpha) < 1e-12
    assert abs(s[3] - (1.0 + 2.0 * alpha * alpha) / 3.0) < 1e-12


def test_sector_zero_is_odd():
    """
    Arrange/Act: Build `s_0`.
    Assert: Its coefficients are `1/(2k + 1)` at odd indices and zero
        elsewhere.
    """
    s = sector(0.0, 21)
    assert np.allclose(s.coeffs[1::2], [1.0 / n for n in range(1, 22, 2)],
                       atol=1e-15)
    assert np.allclose(s.coeffs[0::2], 0.0, atol=1e-15)


@pytest.mark.parametrize('alpha', [-0.1, 1.5])
def test_sector_out_of_range(alpha):
    """
    Arrange/Act: Ask for a sector with an impossible opening.
    Assert: The call raises `ParamOutOfRangeException`.

    :param alpha: the opening
    """
    with pytest.raises(ParamOutOfRangeException):
        sector(alpha, 16)


def test_strip_ell():
    """
    Arrange/Act: Build the strip map for `alpha = 1/2`.
    Assert: `a2 = -alpha` and the rotation is recorded.
    """
    assert strip_ell(0.5, 32)[2] == pytest.approx(-0.5)
    zf = zoo_function(Family.STRIP, alpha=0.5)
    assert zf.meta['rotation'] == -1.0
    with pytest.raises(ParamOutOfRangeException):
        strip_ell(1.0, 16)


def test_koebe_dilated():
    """
    Arrange/Act: Build `k(rz)/r` for `r = 1/2`.
    Assert: `a_n = n r^(n - 1)`, and `r = 0` is rejected.
    """
    k = koebe_dilated(0.5, 10)
    assert k.coeffs.real.tolist() == [n * 0.5 ** (n - 1) if n else 0.0
                                      for n in range(11)]
    with pytest.raises(ParamOutOfRangeException):
        koebe_dilated(0.0, 10)


def test_polylog():
    """
    Arrange/Act: Build the polylogarithm for `t = 1`.
    Assert: `a2 = 1/2`, `a3 = 1/3`, and a negative `t` is rejected.
    """
    p = polylog(1.0, 16)
    assert p[2] == pytest.approx(0.5)
    assert p[3] == pytest.approx(1.0 / 3.0)
    with pytest.raises(ParamOutOfRangeException):
        polylog(-1.0, 16)


def test_lpr_phi():
    """
    Arrange/Act: Build the lacunary map of order 64.
    Assert: `a2 = 1/4`; an exponent beyond the order is rejected.
    """
    phi = lpr_phi(LacunarySequence.default(64), 64)
    assert phi[2] == pytest.approx(0.25, abs=1e-15)
    with pytest.raises(ParamOutOfRangeException):
        lpr_phi(LacunarySequence.of([1, 4, 100]), 64)


@pytest.mark.parametrize('exponents', [[2, 4], [1, 4, 4], []])
def test_lacunary_sequence_validation(exponents):
    """
    Arrange/Act: Create sequences that don't start at 1 or don't increase.
    Assert: The call raises `ParamOutOfRangeException`.

    :param exponents: the exponents
    """
    with pytest.raises(ParamOutOfRangeException):
        LacunarySequence.of(exponents)


def test_lacunary_default():
    """
    Arrange/Act: Get the default sequence up to 64.
    Assert: It is `1, 4, 16, 64`.
    """
    assert LacunarySequence.default(64).exponents == (1, 4, 16, 64)


def test_convex_from_point_mass():
    """
    Arrange: Get the point mass at `1`.
    Act: Build its convex map.
    Assert: It is the half-plane map `z/(1 - z)` and `a2` is the first moment.
    """
    mu = DiscreteMeasure.point_mass(0.0)
    f = convex_from_measure(mu, 20)
    assert np.allclose(f.coeffs[1:], 1.0, atol=1e-13)
    assert f[2] == pytest.approx(moment(mu, 1))


def test_alexander_of_half_plane_is_koebe():
    """
    Arrange/Act: Build the Alexander transform of the half-plane map.
    Assert: It is the Koebe function.
    """
    zf = zoo_function(Family.ALEXANDER_STARLIKE, 16)
    assert np.allclose(zf.series.coeffs.real[1:16], np.arange(1, 16),
                       atol=1e-12)


@pytest.mark.parametrize('alpha', [0.0, 1.0, 2.0])
def test_starlike_extremal(alpha):
    """
    Arrange/Act: Build the two-slit starlike map.
    Assert: `a2 = alpha`.

    :param alpha: the second coefficient
    """
    assert starlike_extremal(alpha, 16)[2] == pytest.approx(alpha, abs=1e-14)


def test_ctc_extremal():
    """
    Arrange/Act: Build the close-to-convex map with Koebe weight `t`.
    Assert: `a2 = 2t`.
    """
    zf = zoo_function(Family.CTC_EXTREMAL, t=0.3)
    assert zf.a2 == pytest.approx(0.6, abs=1e-14)


@pytest.mark.parametrize('beta', [0.0, 0.25, 0.5])
def test_ctc_three_atom_tuning(beta):
    """
    Arrange: Get the tuning that should make `a2` vanish.
    Act: Build the three-atom close-to-convex map with it.
    Assert: `a2` vanishes.

    :param beta: the sector parameter
    """
    t, theta = a2_zero_tuning(beta)
    zf = zoo_function(Family.CTC_THREE_ATOM, beta=beta, t=t, theta=theta)
    assert abs(zf.a2) < 1e-12


def test_r_example():
    """
    Arrange/Act: Build `z/(1 + z^2)`.
    Assert: The coefficients are `1, 0, -1, 0, 1, ...` from `z` on.
    """
    assert r_example(6).coeffs.real.tolist() == [0, 1, 0, -1, 0, 1, 0]


def test_sqrt_transform_of_koebe():
    """
    Arrange/Act: Build the square-root transform of the Koebe function.
    Assert: It is the odd map `z/(1 - z^2)`.
    """
    zf = zoo_function(
        Family.SQRT_TRANSFORM, 24,
        source=FunctionSpec(Family.KOEBE_DILATED, {'r': 1.0})
    )
    assert zf.series.is_odd()
    assert np.allclose(zf.series.coeffs[1::2], 1.0, atol=1e-12)


def test_pfaltzgraff_out_of_range():
    """
    Arrange/Act: Ask for a Pfaltzgraff exponent above 1/4.
    Assert: The call raises `ParamOutOfRangeException`.
    """
    with pytest.raises(ParamOutOfRangeException):
        zoo_function(Family.PFALTZGRAFF, eps=0.3)


@pytest.mark.parametrize('family,params', MEMBERS)
def test_every_family_is_normalized(family, params):
    """
    Arrange/Act: Build a member of each family.
    Assert: The series is normalized, and the point evaluators agree with it
        well inside the disk.

    :param family: the family
    :param params: the parameters
    """
    zf = zoo_function(family, 32, **params)
    assert abs(zf.series[0]) < 1e-12
    assert abs(zf.series[1] - 1.0) < 1e-12
    z = 0.3 * np.exp(1j * np.linspace(0.0, 2.0 * math.pi, 12, endpoint=False))
    assert np.allclose(zf.f(z), zf.series(z), rtol=1e-8, atol=1e-12)
    assert zf.family is family


def test_horner_fallback_kind():
    """
    Arrange/Act: Build a polylogarithm with no closed form.
    Assert: Its evaluators are Horner evaluators.
    """
    zf = zoo_function(Family.POLYLOG, t=0.5)
    assert zf.f.kind == EvaluatorKind.HORNER_SERIES
    assert zf.f.max_radius < 1.0


def test_build_uses_spec_order():
    """
    Arrange/Act: Build from a spec with order 20.
    Assert: The series has order 20.
    """
    assert build(FunctionSpec('sector', {'alpha': 0.5}, 20)).series.order == 20
