"""Closed-form ground-state energies of two-electron ions.

Every formula here is a screened-hydrogenic expression ``-(z - sigma)^2`` or
a short expansion in ``z``. The interpolation formula joins the small-``z``
Bohr limit (``sigma = 1/4``) to the large-``z`` variational limit
(``sigma = 5/16``) through ``(1 - Z0/z)^p``.
"""

from __future__ import annotations

import enum

from .bohr import bohr_energy, critical_charge
from .core import DomainError, InvalidInputError, check_charge

# Hylleraas constant term; the O(1/z) remainder is dropped
HYLLERAAS_CONSTANT = 0.157652
VARIATIONAL_SIGMA = 5.0 / 16.0
ASYMPTOTE_SIGMA = 0.25

P_DEFAULT = 0.5
P_MAX = 2.0

Z0 = critical_charge()


class MethodId(str, enum.Enum):
    BOHR = "bohr"
    ASYMPTOTE = "asymptote"
    VARIATIONAL = "variational"
    PERTURBATION = "perturbation"
    INTERPOLATION = "interpolation"
    HYLLERAAS = "hylleraas"

    @classmethod
    def parse(cls, tag) -> "MethodId":
        if isinstance(tag, cls):
            return tag
        try:
            return cls(str(tag).strip().lower())
        except ValueError:
            known = ", ".join(m.value for m in cls)
            raise InvalidInputError(f"unknown method {tag!r}; expected one of: {known}") from None


def asymptote_energy(z: float) -> float:
    """Small-charge limit ``-(z - 1/4)^2``, identical to the Bohr energy at ``a = 1``."""
    z = check_charge(z)
    return -((z - ASYMPTOTE_SIGMA) ** 2)


def variational_energy(z: float) -> float:
    """One-parameter effective-charge variational energy ``-(z - 5/16)^2``."""
    z = check_charge(z)
    return -((z - VARIATIONAL_SIGMA) ** 2)


def perturbation_energy(z: float) -> float:
    z = check_charge(z)
    return -z * z + 0.625 * z


def hylleraas_energy(z: float) -> float:
    """Hylleraas series ``-z^2 + 5z/8 - 0.157652`` truncated before the 1/z term."""
    z = check_charge(z)
    return -z * z + 0.625 * z - HYLLERAAS_CONSTANT


def _check_exponent(p: float) -> float:
    try:
        p = float(p)
    except (TypeError, ValueError):
        raise InvalidInputError(f"exponent must be a real number, got {p!r}") from None
    if not 0.0 < p <= P_MAX:
        raise DomainError(f"exponent p must lie in (0, {P_MAX}], got p={p!r}")
    return p


def screening_sigma(z: float, p: float = P_DEFAULT) -> float:
    """Effective screening ``(1 + (1 - Z0/z)^p / 4) / 4`` of the interpolation formula.

    Lies in [1/4, 5/16): exactly 1/4 at ``z = Z0`` and approaching 5/16 as
    ``z`` grows.

    Raises
    ------
    DomainError
        If ``z < Z0`` (the power of a negative base is undefined) or `p` is
        outside (0, 2].
    """
    z = check_charge(z)
    p = _check_exponent(p)
    if z < Z0:
        raise DomainError(f"z={z!r} is below critical charge Z0={Z0!r}")
    return (1.0 + 0.25 * (1.0 - Z0 / z) ** p) / 4.0


def interpolated_energy(z: float, p: float = P_DEFAULT) -> float:
    """Interpolation formula ``-(z - sigma(z, p))^2``; ``p = 1/2`` is the published form."""
    return -((z - screening_sigma(z, p)) ** 2)


def evaluate(method, z: float, p: float = P_DEFAULT) -> float:
    """Dispatch to one of the energy formulas by `MethodId` (or its tag string).

    `p` is only used by the interpolation formula; the Bohr energy is taken
    at ``a = 1, n = 1``.
    """
    method = MethodId.parse(method)
    if method is MethodId.BOHR:
        return bohr_energy(1.0, z, 1)
    if method is MethodId.INTERPOLATION:
        return interpolated_energy(z, p)
    return _DIRECT[method](z)


_DIRECT = {
    MethodId.ASYMPTOTE: asymptote_energy,
    MethodId.VARIATIONAL: variational_energy,
    MethodId.PERTURBATION: perturbation_energy,
    MethodId.HYLLERAAS: hylleraas_energy,
}
