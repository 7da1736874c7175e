"""Relativistic and QED corrections to two-electron ground-state energies."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .closed_forms import P_DEFAULT, MethodId, evaluate
from .core import DEFAULT_CONSTANTS, PhysicalConstants, check_charge

# relativistic bracket: z^2 - 3.606 z + 3.29 + 0.05/z
REL_C1 = 3.606
REL_C0 = 3.29
REL_CINV = 0.05

# QED bracket: (3.745 - ln z) - (5.97 - 1.31 ln z)/z + (3.08 - 0.28 ln z)/z^2
QED_A0, QED_A1 = 3.745, 1.0
QED_B0, QED_B1 = 5.97, 1.31
QED_C0, QED_C1 = 3.08, 0.28


@dataclass(frozen=True)
class EnergyBreakdown:
    base: float
    relativistic: float
    qed: float
    total: float
    method: MethodId
    z: float


def relativistic_correction(z: float, constants: PhysicalConstants = DEFAULT_CONSTANTS) -> float:
    """``-(alpha^2/8) z^2 (z^2 - 3.606 z + 3.29 + 0.05/z)``; negative for every z > 0."""
    z = check_charge(z)
    bracket = z * z - REL_C1 * z + REL_C0 + REL_CINV / z
    return -(constants.alpha**2) / 8.0 * z * z * bracket


def qed_bracket(z: float) -> float:
    z = check_charge(z)
    lz = math.log(z)
    return (
        (QED_A0 - QED_A1 * lz)
        - (QED_B0 - QED_B1 * lz) / z
        + (QED_C0 - QED_C1 * lz) / (z * z)
    )


def qed_correction(z: float, constants: PhysicalConstants = DEFAULT_CONSTANTS) -> float:
    """Radiative shift ``16 z^4 alpha^3 / (6 pi)`` times a log-polynomial bracket in 1/z."""
    z = check_charge(z)
    prefactor = 16.0 * z**4 * constants.alpha**3 / (6.0 * math.pi)
    return prefactor * qed_bracket(z)


def corrected_energy(
    method,
    z: float,
    p: float = P_DEFAULT,
    constants: PhysicalConstants = DEFAULT_CONSTANTS,
    corrections: bool = True,
) -> EnergyBreakdown:
    """Base energy from `method` plus relativistic and QED corrections.

    With ``corrections=False`` both correction fields are zero and
    ``total == base``.
    """
    method = MethodId.parse(method)
    base = evaluate(method, z, p)
    z = float(z)
    if corrections:
        rel = relativistic_correction(z, constants)
        qed = qed_correction(z, constants)
    else:
        rel = qed = 0.0
    return EnergyBreakdown(base, rel, qed, base + rel + qed, method, z)
