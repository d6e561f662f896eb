#!/usr/bin/env python
# -*- coding: utf-8 -*-

# Created on 10/5/26 by Pat Daburu
"""
.. currentmodule:: hardylab.special
.. moduleauthor:: Pat Daburu <pat@daburu.net>

A couple of special functions and constants the checks lean on.
"""
import math
from typing import NamedTuple, Tuple

#: the Lanczos parameter
LANCZOS_G: float = 7.0

#: the Lanczos coefficients for `g = 7` (nine terms)
LANCZOS_COEFFICIENTS: Tuple[float, ...] = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7
)


def gamma_function(x: float) -> float:
    """
    Get `Gamma(x)` by the Lanczos approximation.

    :param x: the argument (`x > 0`)
    :return: the value (relative error below `1e-10` on `[0.5, 5]`)
    """
    if not x > 0.0:
        raise ValueError(f"'x' must be positive (got {x}).")
    # Below 1/2 we reflect: Gamma(x) Gamma(1 - x) = pi / sin(pi x).
    if x < 0.5:
        return math.pi / (math.sin(math.pi * x) * gamma_function(1.0 - x))
    x -= 1.0
    series = LANCZOS_COEFFICIENTS[0]
    for i, c in enumerate(LANCZOS_COEFFICIENTS[1:], start=1):
        series += c / (x + i)
    t = x + LANCZOS_G + 0.5
    return math.sqrt(2.0 * math.pi) * t ** (x + 0.5) * math.exp(-t) * series


class HaymanConstants(NamedTuple):
    """
    The constants in the growth of starlike maps with a given `a2`.
    """
    lam: float  #: `1/(2 - sqrt(2 - alpha))`
    gamma: float  #: `4 lam^2 exp(2 - 4 lam)`, the limit of `(1 - r)^2 M_inf`


def hayman_gamma(alpha: float) -> HaymanConstants:
    """
    Get the constants `lambda` and `gamma` for second coefficient `alpha`.

    :param alpha: the second coefficient, `0 <= alpha <= 2`
    :return: the constants (`gamma = 1` for the Koebe function, `alpha = 2`)
    """
    if not 0.0 <= alpha <= 2.0:
        raise ValueError(f"'alpha' must lie in [0, 2] (got {alpha}).")
    lam = 1.0 / (2.0 - math.sqrt(2.0 - alpha))
    return HaymanConstants(
        lam=lam,
        gamma=4.0 * lam * lam * math.exp(2.0 - 4.0 * lam)
    )


def sector_coefficient_limit(alpha: float) -> float:
    """
    Get `lim n^(1 - alpha) a_n` for the sector map `s_alpha`.

    :param alpha: the opening, `0 < alpha <= 1`
    :return: `2^(alpha - 1) / Gamma(alpha + 1)`
    """
    if not 0.0 < alpha <= 1.0:
        raise ValueError(f"'alpha' must lie in (0, 1] (got {alpha}).")
    return 2.0 ** (alpha - 1.0) / gamma_function(alpha + 1.0)
