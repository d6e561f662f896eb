#!/usr/bin/env python
# -*- coding: utf-8 -*-
import math
import pytest
from hardylab.series import TaylorSeries
from hardylab.zoo import (
    Family,
    LacunarySequence,
    NotInOmegaException,
    ParamOutOfRangeException,
    eps0_derivative,
    eps0_solve,
    in_omega,
    lpr_composition,
    omega_sweep,
    sqrt_transform,
    zoo_function
)


@pytest.mark.parametrize('r', [0.01, 0.25, 0.5, 0.75, 0.99])
def test_eps0_solves_its_equation(r):
    """
    Arrange/Act: Solve for `eps0(r)`.
    Assert: `r 2^eps0 = 1 - 3 eps0` to `1e-12`, and `eps0` decreases in `r`.

    :param r: the dilation
    """
    eps0 = eps0_solve(r)
    assert 0.0 < eps0 < 1.0 / 3.0
    assert abs(r * math.pow(2.0, eps0) - (1.0 - 3.0 * eps0)) < 1e-12
    assert eps0_derivative(r) < 0.0


@pytest.mark.parametrize('r', [0.0, 1.0, -0.5])
def test_eps0_rejects_bad_radius(r):
    """
    Arrange/Act: Solve for `eps0` outside `(0, 1)`.
    Assert: The call raises `ParamOutOfRangeException`.

    :param r: the dilation
    """
    with pytest.raises(ParamOutOfRangeException):
        eps0_solve(r)


@pytest.mark.parametrize('r,eps,expected', [
    (0.5, 0.05, True),
    (0.9, 0.2, False),
    (0.5, 0.0, False),
    (1.0, 0.01, False)
])
def test_in_omega(r, eps, expected):
    """
    Arrange/Act: Ask whether a pair is admissible.
    Assert: The answer is as expected.

    :param r: the dilation
    :param eps: the exponent
    :param expected: the expected answer
    """
    assert in_omega(r, eps) == expected


@pytest.mark.parametrize('r', [0.1, 0.5, 0.9])
def test_lpr_composition_a2(r):
    """
    Arrange: Take the largest admissible exponent for `r`.
    Act: Build the composition.
    Assert: `a2 = 2r + eps/4`.

    :param r: the dilation
    """
    eps = min(eps0_solve(r), 0.25)
    f = lpr_composition(r, eps, LacunarySequence.default(32), 32)
    assert f[2] == pytest.approx(2.0 * r + eps / 4.0, abs=1e-12)


def test_lpr_composition_outside_omega():
    """
    Arrange/Act: Build the composition with an inadmissible exponent.
    Assert: The call raises `NotInOmegaException`.
    """
    with pytest.raises(NotInOmegaException):
        lpr_composition(0.9, 0.2, LacunarySequence.default(16), 16)


def test_lpr_composition_meta():
    """
    Arrange/Act: Build the composition through the zoo with default `eps`.
    Assert: The metadata records `eps = min(eps0, 1/4)` and the range bound.
    """
    zf = zoo_function(Family.LPR_COMPOSITION, 16, r=0.5)
    eps = zf.meta['eps']
    assert eps == pytest.approx(min(zf.meta['eps0'], 0.25))
    assert zf.meta['range_bound'] == pytest.approx(
        math.pow(2.0, eps) / (1.0 - 3.0 * eps)
    )
    assert zf.meta['exponents'] == [1, 4, 16]


def test_omega_sweep_reaches_both_ends():
    """
    Arrange/Act: Sweep the admissible set.
    Assert: The second coefficients reach below `0.01` and above `1.99`.
    """
    a2s = [a2 for _, _, a2 in omega_sweep()]
    assert min(a2s) <= 0.01
    assert max(a2s) >= 1.99


def test_sqrt_transform_needs_normalized_series():
    """
    Arrange/Act: Take the square-root transform of `2z`.
    Assert: The call raises `ParamOutOfRangeException`.
    """
    with pytest.raises(ParamOutOfRangeException):
        sqrt_transform(TaylorSeries([0.0, 2.0]), 8)
