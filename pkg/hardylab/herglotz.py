#!/usr/bin/env python
# -*- coding: utf-8 -*-

# Created on 10/3/26 by Pat Daburu
"""
.. currentmodule:: hardylab.herglotz
.. moduleauthor:: Pat Daburu <pat@daburu.net>

Probability measures on the unit circle and the Caratheodory functions they
generate.  Every convex map in the lab starts life as one of these.

.. note::

    Only finitely atomic measures are represented.
"""
import logging
import math
from typing import Any, Iterable, List, Mapping, NamedTuple, Sequence, Tuple
import numpy as np
from scipy.optimize import nnls
from .errors import HardylabException
from .series import TaylorSeries
from .types import pyfqn
from .xchg import Exportable

logger = logging.getLogger(__name__)

#: atoms closer than this (arc length) are the same atom
MERGE_ARC: float = 1e-12

#: how far the total mass (and each `|lambda|`) may stray from one
MASS_TOL: float = 1e-14

#: the default tolerance of the appendix-theorem check
APPENDIX_TOL: float = 1e-9


class InvalidMeasureException(HardylabException):
    """
    Raised when atoms don't make up a probability measure on the circle.
    """


class NoPoleMassException(HardylabException):
    """
    Raised when a measure has less than half of its mass at a point that is
    supposed to be the preimage of infinity.
    """


class Atom(NamedTuple):
    """
    A point mass on the unit circle.
    """
    lam: complex  #: the location (unimodular)
    weight: float  #: the mass

    @property
    def angle(self) -> float:
        """
        Get the argument of the location in `[0, 2 pi)`.
        """
        return math.atan2(self.lam.imag, self.lam.real) % (2.0 * math.pi)


def _arc_distance(a: float, b: float) -> float:
    d = abs(a - b) % (2.0 * math.pi)
    return min(d, 2.0 * math.pi - d)


class DiscreteMeasure(Exportable):
    """
    A finitely atomic probability measure on the unit circle.
    """
    __slots__ = ['_atoms']

    def __init__(self, atoms: Iterable[Atom or Tuple[complex, float]]):
        """

        :param atoms: the atoms (locations and weights)
        :raises InvalidMeasureException: if a location isn't unimodular, a
            weight isn't positive or the weights don't sum to one
        """
        _atoms = [Atom(complex(lam), float(w)) for lam, w in atoms]
        if not _atoms:
            raise InvalidMeasureException('A measure needs at least one atom.')
        for atom in _atoms:
            if abs(abs(atom.lam) - 1.0) > MASS_TOL:
                raise InvalidMeasureException(
                    f'{atom.lam} is not on the unit circle.'
                )
            if not atom.weight > 0.0:
                raise InvalidMeasureException(
                    f'Atom weights must be positive (got {atom.weight}).'
                )
        total = math.fsum(a.weight for a in _atoms)
        if abs(total - 1.0) > MASS_TOL:
            raise InvalidMeasureException(
                f'The weights sum to {total!r}, not 1.'
            )
        self._atoms: Tuple[Atom, ...] = self._merged(_atoms)  #: the atoms

    @staticmethod
    def _merged(atoms: List[Atom]) -> Tuple[Atom, ...]:
        # Sort by angle so that the representation is canonical, then fold
        # together neighbours that sit on (numerically) the same point.
        ordered = sorted(atoms, key=lambda a: a.angle)
        merged: List[Atom] = []
        for atom in ordered:
            if merged and _arc_distance(atom.angle,
                                        merged[-1].angle) <= MERGE_ARC:
                merged[-1] = Atom(merged[-1].lam,
                                  merged[-1].weight + atom.weight)
            else:
                merged.append(atom)
        # The circle closes on itself: the last atom may be the first one.
        if (
                len(merged) > 1
                and _arc_distance(merged[0].angle,
                                  merged[-1].angle) <= MERGE_ARC
        ):
            merged[0] = Atom(merged[0].lam,
                             merged[0].weight + merged.pop().weight)
        return tuple(merged)

    @classmethod
    def from_args(
            cls,
            args_over_pi: Sequence[float],
            weights: Sequence[float]
    ) -> 'DiscreteMeasure':
        """
        Create a measure from atom arguments (in units of `pi`) and weights.

        :param args_over_pi: the arguments divided by `pi`
        :param weights: the weights
        :return: the measure
        """
        if len(args_over_pi) != len(weights):
            raise InvalidMeasureException(
                'There must be exactly one weight per atom.'
            )
        return cls(
            (complex(math.cos(math.pi * a), math.sin(math.pi * a)), w)
            for a, w in zip(args_over_pi, weights)
        )

    @classmethod
    def point_mass(cls, arg_over_pi: float = 0.0) -> 'DiscreteMeasure':
        """
        Get the point mass at `exp(i pi arg_over_pi)`.

        :param arg_over_pi: the argument divided by `pi`
        :return: the measure
        """
        return cls.from_args([arg_over_pi], [1.0])

    @classmethod
    def from_list(cls, atoms: Sequence[Mapping[str, float]]) -> 'DiscreteMeasure':
        """
        Create a measure from its document form.

        :param atoms: a list of `{arg_over_pi, weight}` mappings
        :return: the measure
        """
        return cls.from_args(
            [float(a['arg_over_pi']) for a in atoms],
            [float(a['weight']) for a in atoms]
        )

    def to_list(self) -> List[Mapping[str, float]]:
        """
        Get the document form of the measure.

        :return: a list of `{arg_over_pi, weight}` mappings
        """
        return [
            {
                'arg_over_pi': math.atan2(a.lam.imag, a.lam.real) / math.pi,
                'weight': a.weight
            }
            for a in self._atoms
        ]

    @property
    def atoms(self) -> Tuple[Atom, ...]:
        """
        Get the atoms (sorted by argument).
        """
        return self._atoms

    @property
    def lams(self) -> np.ndarray:
        """
        Get the atom locations.
        """
        return np.array([a.lam for a in self._atoms], dtype=complex)

    @property
    def angles(self) -> np.ndarray:
        """
        Get the atom arguments in `[0, 2 pi)`.
        """
        return np.array([a.angle for a in self._atoms])

    @property
    def weights(self) -> np.ndarray:
        """
        Get the atom weights.
        """
        return np.array([a.weight for a in self._atoms])

    def mass_at(self, lam: complex, tol: float = MERGE_ARC) -> float:
        """
        Get the mass the measure places at a point of the circle.

        :param lam: the point
        :param tol: how close (in arc length) an atom must be to count
        :return: the mass
        """
        angle = math.atan2(complex(lam).imag, complex(lam).real)
        return math.fsum(
            a.weight for a in self._atoms
            if _arc_distance(a.angle, angle) <= tol
        )

    def export(self) -> Mapping[str, Any]:
        """
        Export the instance as a mapping of simple types.

        :return: the mapping
        """
        return {
            '__type__': pyfqn(self),
            'atoms': self.to_list()
        }

    @classmethod
    def load(cls, data: Mapping[str, Any]) -> 'DiscreteMeasure' or None:
        """
        Create an instance from a mapping.

        :param data: the data
        :return: the instance
        """
        if not data:
            return None
        return cls.from_list(data['atoms'])

    def __len__(self):
        return len(self._atoms)

    def __eq__(self, other):
        if not isinstance(other, DiscreteMeasure):
            return False
        return self._atoms == other.atoms

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash(self._atoms)

    def __repr__(self):
        return f"{self.__class__.__name__}({self.to_list()!r})"


def moment(mu: DiscreteMeasure, k: int) -> complex:
    """
    Get a moment of a measure.

    :param mu: the measure
    :param k: the (non-negative) order of the moment
    :return: the sum of `t_j lambda_j^k`
    """
    if k < 0:
        raise ValueError("'k' must be non-negative.")
    powers = np.exp(1j * k * mu.angles)
    return complex(np.dot(mu.weights, powers))


def caratheodory_series(mu: DiscreteMeasure, order: int) -> TaylorSeries:
    """
    Get the series of `h(z) = integral (1 + lambda z)/(1 - lambda z) dmu`.

    :param mu: the measure
    :param order: the truncation order
    :return: `h`, with `c_0 = 1` and `c_n = 2 moment(mu, n)`
    """
    n = np.arange(order + 1)
    coeffs = 2.0 * (np.exp(1j * np.outer(n, mu.angles)) @ mu.weights)
    coeffs[0] = 1.0
    return TaylorSeries(coeffs)


def caratheodory_value(mu: DiscreteMeasure, z):
    """
    Evaluate `h(z) = integral (1 + lambda z)/(1 - lambda z) dmu` directly.

    :param mu: the measure
    :param z: the point(s)
    :return: the value(s)
    """
    z = np.asarray(z, dtype=complex)
    lz = np.multiply.outer(z, mu.lams)
    return ((1.0 + lz) / (1.0 - lz)) @ mu.weights


def boundary_rotation(mu: DiscreteMeasure, arc: Tuple[float, float]) -> float:
    """
    Get the boundary rotation that corresponds to an arc of the circle.

    :param mu: the measure
    :param arc: the half-open parameter interval `[t_a, t_b)` (radians); a
        width of `2 pi` or more is the whole circle
    :return: `2 pi` times the mass of the arc
    """
    t_a, t_b = arc
    width = t_b - t_a
    if width >= 2.0 * math.pi:
        return 2.0 * math.pi * math.fsum(mu.weights)
    width %= 2.0 * math.pi
    return 2.0 * math.pi * math.fsum(
        a.weight for a in mu.atoms
        if (a.angle - t_a) % (2.0 * math.pi) < width
    )


def angle_at_infinity_measure(mu: DiscreteMeasure, lam0: complex) -> float:
    """
    Get the angle at infinity of the convex map a measure generates.

    :param mu: the measure
    :param lam0: the preimage of infinity
    :return: `(2 mu(lam0) - 1) pi`
    :raises NoPoleMassException: if `mu(lam0) < 1/2`
    """
    m = mu.mass_at(lam0)
    if m < 0.5 - MASS_TOL:
        raise NoPoleMassException(
            f'The measure has mass {m} < 1/2 at {lam0}; the map is bounded '
            f'there.'
        )
    return (2.0 * m - 1.0) * math.pi


class AppendixVerdict(NamedTuple):
    """
    The outcome of checking a measure against the two-antipodal-atoms theorem.
    """
    conforms: bool  #: `False` only for a genuine counterexample
    triggered: bool  #: `True` if the theorem's hypotheses hold (within `tol`)
    witness: Mapping[str, float] or None  #: the quantities behind the verdict


def appendix_theorem_check(
        mu: DiscreteMeasure,
        tol: float = APPENDIX_TOL
) -> AppendixVerdict:
    """
    Check a measure against the theorem: a vanishing first moment and an atom
    of mass at least one half force `mu = (delta(lam0) + delta(-lam0))/2`.

    :param mu: the measure
    :param tol: the tolerance on the first moment and on the heavy mass
    :return: the verdict

    .. note::

        Within the tolerance the conclusion is checked in the form the
        argument produces it: the heavy mass is at most `1/2 + tol/2`, and the
        rest of the mass, weighted by `1 + Re(conj(lam0) lambda)`, is at most
        `3 tol` (so it sits at `-lam0`).
    """
    m1 = moment(mu, 1)
    heavy = [a for a in mu.atoms if a.weight >= 0.5 - tol]
    # If the hypotheses don't hold, the theorem has nothing to say.
    if abs(m1) > tol or not heavy:
        return AppendixVerdict(conforms=True, triggered=False, witness=None)
    lam0 = max(heavy, key=lambda a: a.weight)
    rest = [a for a in mu.atoms if a is not lam0]
    spread = math.fsum(
        a.weight * (1.0 + (lam0.lam.conjugate() * a.lam).real) for a in rest
    )
    witness = {
        'first_moment': abs(m1),
        'heavy_mass': lam0.weight,
        'heavy_arg_over_pi': math.atan2(lam0.lam.imag,
                                        lam0.lam.real) / math.pi,
        'spread': spread,
        'atoms': float(len(mu))
    }
    conforms = (
        abs(lam0.weight - 0.5) <= tol
        and spread <= 3.0 * tol + 8.0 * np.finfo(float).eps
    )
    return AppendixVerdict(conforms=conforms, triggered=True, witness=witness)


def random_measure(
        rng: np.random.Generator,
        min_atoms: int = 2,
        max_atoms: int = 5
) -> DiscreteMeasure:
    """
    Draw a random measure: a uniform number of atoms at uniform arguments with
    Dirichlet-uniform weights.

    :param rng: the random number generator
    :param min_atoms: the fewest atoms
    :param max_atoms: the most atoms
    :return: the measure
    """
    k = int(rng.integers(min_atoms, max_atoms + 1))
    args = rng.uniform(-1.0, 1.0, size=k)
    weights = rng.dirichlet(np.ones(k))
    weights = weights / math.fsum(weights)
    return DiscreteMeasure.from_args(list(args), list(weights))


class SearchOutcome(NamedTuple):
    """
    What a randomized counterexample search found.
    """
    trials: int  #: measures generated
    triggered: int  #: measures that met the theorem's hypotheses
    counterexamples: List[DiscreteMeasure]  #: measures that broke it


def search_appendix_counterexamples(
        rng: np.random.Generator,
        trials: int,
        max_atoms: int = 5,
        tol: float = APPENDIX_TOL
) -> SearchOutcome:
    """
    Look for a measure with a vanishing first moment, an atom of mass at least
    one half and anything other than two antipodal half masses.

    :param rng: the random number generator
    :param trials: how many measures to generate
    :param max_atoms: the most atoms per measure
    :param tol: the tolerance handed to :py:func:`appendix_theorem_check`
    :return: the outcome (its counterexample list should be empty)
    """
    triggered = 0
    counterexamples: List[DiscreteMeasure] = []
    for _ in range(trials):
        arg0 = float(rng.uniform(-1.0, 1.0))
        # A quarter of the draws sit exactly on the boundary case m = 1/2.
        m = 0.5 if rng.random() < 0.25 else float(rng.uniform(0.5, 1.0))
        k = int(rng.integers(1, max_atoms))
        args = list(rng.uniform(-1.0, 1.0, size=k))
        # Half of the draws include the antipode among the other atoms.
        if rng.random() < 0.5:
            args[0] = arg0 + 1.0 if arg0 <= 0.0 else arg0 - 1.0
        lams = np.exp(1j * np.pi * np.asarray(args))
        # Project the remaining mass onto a vanishing first moment if we can.
        a = np.vstack((lams.real, lams.imag, np.ones(k)))
        b = np.array([
            -m * math.cos(math.pi * arg0),
            -m * math.sin(math.pi * arg0),
            1.0 - m
        ])
        w, residual = nnls(a, b)
        if residual > tol or not np.any(w > 0.0):
            w = rng.dirichlet(np.ones(k)) * (1.0 - m)
        keep = w > 0.0
        weights = np.concatenate(([m], w[keep]))
        weights = weights / math.fsum(weights)
        mu = DiscreteMeasure.from_args(
            [arg0] + [x for x, kept in zip(args, keep) if kept],
            list(weights)
        )
        verdict = appendix_theorem_check(mu, tol=tol)
        if verdict.triggered:
            triggered += 1
            if not verdict.conforms:
                logger.warning('Appendix counterexample candidate: %r (%r)',
                               mu, verdict.witness)
                counterexamples.append(mu)
    logger.debug('Appendix search: %d trials, %d triggered, %d violations.',
                 trials, triggered, len(counterexamples))
    return SearchOutcome(
        trials=trials,
        triggered=triggered,
        counterexamples=counterexamples
    )
