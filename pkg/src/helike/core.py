"""Shared constants, unit conversions and error types.

All energies are in Hartree atomic units unless a name says otherwise.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

# CODATA 2018
ALPHA = 7.2973525693e-3
HARTREE_EV = 27.211386245988


class HeLikeError(Exception):
    """Base class for every error raised by this package."""

    exit_code = 1


class InvalidInputError(HeLikeError, ValueError):
    """Malformed or non-finite input (bad CSV, bad flag, NaN, ...)."""

    exit_code = 2


class SchemaError(InvalidInputError):
    """Unrecognized CSV header."""


class ValidationError(InvalidInputError):
    """Input parsed but violates a data invariant."""


class DomainError(HeLikeError, ValueError):
    """Argument outside the mathematical domain of a formula."""

    exit_code = 3


class NoSolutionError(DomainError):
    """A root search target lies outside the attainable range."""


class InternalError(HeLikeError, RuntimeError):
    """An internal invariant failed (bracket lost, vendored data corrupted)."""

    exit_code = 4


@dataclass(frozen=True)
class PhysicalConstants:
    alpha: float = ALPHA
    hartree_ev: float = HARTREE_EV

    def __post_init__(self):
        for name in ("alpha", "hartree_ev"):
            value = getattr(self, name)
            if not (math.isfinite(value) and value > 0):
                raise InvalidInputError(f"{name} must be finite and positive, got {value!r}")

    def with_overrides(self, alpha: float | None = None, hartree_ev: float | None = None):
        changes = {}
        if alpha is not None:
            changes["alpha"] = alpha
        if hartree_ev is not None:
            changes["hartree_ev"] = hartree_ev
        return replace(self, **changes) if changes else self


DEFAULT_CONSTANTS = PhysicalConstants()


def _finite(x: float, name: str) -> float:
    try:
        x = float(x)
    except (TypeError, ValueError):
        raise InvalidInputError(f"{name} must be a real number, got {x!r}") from None
    if not math.isfinite(x):
        raise InvalidInputError(f"{name} must be finite, got {x!r}")
    return x


def check_charge(z: float) -> float:
    z = _finite(z, "z")
    if z <= 0:
        raise DomainError(f"nuclear charge must be positive, got z={z!r}")
    return z


def check_correlation(a: float) -> float:
    a = _finite(a, "a")
    if a <= 0:
        raise DomainError(f"correlation parameter must be positive, got a={a!r}")
    return a


def check_quantum_number(n: int) -> int:
    if isinstance(n, bool) or int(n) != n or n < 1:
        raise DomainError(f"principal quantum number must be an integer >= 1, got n={n!r}")
    return int(n)


def ev_to_hartree(e: float, constants: PhysicalConstants = DEFAULT_CONSTANTS) -> float:
    """Convert an energy in eV to Hartree."""
    return _finite(e, "energy") / constants.hartree_ev


def hartree_to_ev(e: float, constants: PhysicalConstants = DEFAULT_CONSTANTS) -> float:
    """Convert an energy in Hartree to eV."""
    return _finite(e, "energy") * constants.hartree_ev
