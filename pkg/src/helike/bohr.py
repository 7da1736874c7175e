"""Bohr's correlated two-electron model.

Both electrons sit on opposite sides of the nucleus, ``r1 = -a * r2`` with
``a > 0``. Under that constraint the two-electron Schroedinger equation has
closed-form eigenvalues, which this module evaluates, minimizes over `a`, and
uses to locate the critical nuclear charge below which the model ion no
longer binds its second electron.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from scipy.optimize import bisect

from ._search import seeded_minimize
from .core import InternalError, check_charge, check_correlation, check_quantum_number

A_MIN = 1e-3
A_MAX = 1e3
LOG_A_TOL = 1e-10
THRESHOLD_BRACKET = (0.5, 1.5)
THRESHOLD_XTOL = 1e-10


@dataclass(frozen=True)
class MinimizationResult:
    a_star: float
    e_min: float
    evaluations: int
    at_boundary: bool = False


def bohr_energy(a: float, z: float, n: int = 1) -> float:
    """Eigenvalue of the correlated model for ratio `a`, charge `z`, level `n`.

    ``E = -(1+a)^2 / (2 n^2 (1+a^2)) * (z - a/(1+a)^2)^2``
    """
    a = check_correlation(a)
    z = check_charge(z)
    n = check_quantum_number(n)
    s = (1.0 + a) ** 2
    return -s / (2.0 * n * n * (1.0 + a * a)) * (z - a / s) ** 2


def hydrogenic_energy(z: float, n: int = 1) -> float:
    """One-electron energy ``-z^2 / (2 n^2)``."""
    z = check_charge(z)
    n = check_quantum_number(n)
    return -z * z / (2.0 * n * n)


def ionization_energy(a: float, z: float) -> float:
    """Energy needed to strip one electron from the ground state.

    Positive when the two-electron system is bound relative to the
    hydrogenic ion left behind.
    """
    return hydrogenic_energy(z, 1) - bohr_energy(a, z, 1)


def optimal_correlation(z: float, n: int = 1) -> MinimizationResult:
    """Minimize `bohr_energy` over ``a`` in [1e-3, 1e3].

    The search runs in ``log a``, where the ``a <-> 1/a`` symmetry of the
    energy becomes a reflection about zero. A 256-point coarse grid seeds a
    golden-section refinement. For ``z`` below about 0.75 the infimum sits at
    the edge of the interval (the ``a -> 0`` limit beats ``a = 1``); the edge
    point is then returned with ``at_boundary=True``.

    Examples
    --------
    >>> r = optimal_correlation(2.0)
    >>> round(r.a_star, 6), r.e_min
    (1.0, -3.0625)
    """
    z = check_charge(z)
    n = check_quantum_number(n)

    def f(log_a):
        return bohr_energy(math.exp(log_a), z, n)

    x, _, evals, edge = seeded_minimize(f, math.log(A_MIN), math.log(A_MAX), LOG_A_TOL)
    if edge:
        a_star = A_MIN if x < 0 else A_MAX
    else:
        a_star = math.exp(x)
    return MinimizationResult(a_star, bohr_energy(a_star, z, n), evals, edge)


def critical_charge() -> float:
    """Nuclear charge at which the ``a = 1`` ion stops binding: ``1/2 + sqrt(1/8)``."""
    return 0.5 + math.sqrt(0.125)


def critical_charge_numeric() -> float:
    """Root of ``z -> ionization_energy(1, z)`` by bisection on [0.5, 1.5]."""
    lo, hi = THRESHOLD_BRACKET

    def g(z):
        return ionization_energy(1.0, z)

    if not g(lo) < 0 < g(hi):
        raise InternalError(f"threshold bracket {THRESHOLD_BRACKET} does not straddle a root")
    return bisect(g, lo, hi, xtol=THRESHOLD_XTOL)
