#!/usr/bin/env python
# -*- coding: utf-8 -*-
import math
import numpy as np
import pytest
from scipy import special
from hardylab.special import (
    gamma_function,
    hayman_gamma,
    sector_coefficient_limit
)


@pytest.mark.parametrize('x', list(np.linspace(0.5, 5.0, 19)))
def test_gamma_against_scipy(x):
    """
    Arrange/Act: Evaluate the Lanczos gamma function on `[0.5, 5]`.
    Assert: It agrees with scipy to a relative `1e-10`.

    :param x: the argument
    """
    assert gamma_function(x) == pytest.approx(special.gamma(x), rel=1e-10)


@pytest.mark.parametrize('n', range(1, 11))
def test_gamma_of_integers(n):
    """
    Arrange/Act: Evaluate `Gamma(n + 1)`.
    Assert: It is `n!`.

    :param n: the integer
    """
    assert gamma_function(n + 1.0) == pytest.approx(math.factorial(n),
                                                    rel=1e-10)


def test_gamma_reflection():
    """
    Arrange/Act: Evaluate the gamma function below one half.
    Assert: `Gamma(1/4)` agrees with scipy, and `Gamma(x)` is undefined for
        `x <= 0`.
    """
    assert gamma_function(0.25) == pytest.approx(special.gamma(0.25),
                                                 rel=1e-10)
    for x in (0.0, -1.5):
        with pytest.raises(ValueError):
            gamma_function(x)


@pytest.mark.parametrize('alpha,lam,gamma', [
    (2.0, 0.5, 1.0),
    (0.0, 1.0 / (2.0 - math.sqrt(2.0)), None),
    (1.0, 1.0, 4.0 * math.exp(-2.0))
])
def test_hayman_constants(alpha, lam, gamma):
    """
    Arrange/Act: Get the constants for a second coefficient.
    Assert: `lambda` and `gamma` have their closed-form values (`gamma = 1`
        for the Koebe function).

    :param alpha: the second coefficient
    :param lam: the expected `lambda`
    :param gamma: the expected `gamma` (`None` to skip)
    """
    constants = hayman_gamma(alpha)
    assert constants.lam == pytest.approx(lam)
    if gamma is not None:
        assert constants.gamma == pytest.approx(gamma)


def test_hayman_lambda_decreases():
    """
    Arrange/Act: Get `lambda` across `[0, 2]`.
    Assert: It decreases, and `alpha` outside `[0, 2]` is rejected.
    """
    lams = [hayman_gamma(a).lam for a in np.linspace(0.0, 2.0, 21)]
    assert all(b < a for a, b in zip(lams, lams[1:]))
    with pytest.raises(ValueError):
        hayman_gamma(2.5)


@pytest.mark.parametrize('alpha,expected', [
    (1.0, 1.0),
    (0.5, 2.0 ** -0.5 / special.gamma(1.5))
])
def test_sector_coefficient_limit(alpha, expected):
    """
    Arrange/Act: Get the limit of `n^(1 - alpha) a_n` for the sector map.
    Assert: It has its closed-form value, and `alpha = 0` is rejected.

    :param alpha: the opening
    :param expected: the expected limit
    """
    assert sector_coefficient_limit(alpha) == pytest.approx(expected,
                                                            rel=1e-10)
    with pytest.raises(ValueError):
        sector_coefficient_limit(0.0)
