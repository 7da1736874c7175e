"""Fitting the exponent ``p`` of the interpolation formula to reference energies."""

from __future__ import annotations

from dataclasses import dataclass, field

from scipy.optimize import bisect

from ._search import seeded_minimize
from .closed_forms import MethodId
from .core import (
    DEFAULT_CONSTANTS,
    DomainError,
    NoSolutionError,
    PhysicalConstants,
    ValidationError,
)
from .corrections import corrected_energy
from .reference import IonRecord, ReferenceSet

P_LO = 0.1
P_HI = 1.5
SOLVE_XTOL = 1e-10
FIT_TOL = 1e-8


@dataclass(frozen=True)
class FitResult:
    p: float
    objective: float
    residuals: tuple[tuple[int, float], ...]
    evaluations: int
    excluded: tuple[tuple[int, str], ...] = field(default=())


def model_energy(z, p, with_corrections=True, constants=DEFAULT_CONSTANTS) -> float:
    return corrected_energy(MethodId.INTERPOLATION, z, p, constants, corrections=with_corrections).total


def solve_p_for_ion(
    record: IonRecord,
    with_corrections: bool = True,
    constants: PhysicalConstants = DEFAULT_CONSTANTS,
) -> float:
    """Exponent at which the interpolation formula reproduces ``record.e_exp`` exactly.

    The model energy decreases strictly with ``p`` for any fixed ``z > Z0``,
    so a sign change across [0.1, 1.5] pins a unique root, found by
    bisection to 1e-10.

    Raises
    ------
    NoSolutionError
        If ``record.e_exp`` is outside the energies reachable on [0.1, 1.5].
    """
    if record.z < 1:
        raise DomainError(f"exponent solve needs z >= 1, got z={record.z}")

    def g(p):
        return model_energy(record.z, p, with_corrections, constants) - record.e_exp

    g_lo, g_hi = g(P_LO), g(P_HI)
    if g_lo == 0.0:
        return P_LO
    if g_hi == 0.0:
        return P_HI
    if g_lo * g_hi > 0:
        e_lo, e_hi = g_hi + record.e_exp, g_lo + record.e_exp
        raise NoSolutionError(
            f"z={record.z}: target energy {record.e_exp!r} outside the attainable interval "
            f"[{e_lo!r}, {e_hi!r}] for p in [{P_LO}, {P_HI}]"
        )
    return bisect(g, P_LO, P_HI, xtol=SOLVE_XTOL)


def fit_global_p(
    refs: ReferenceSet,
    with_corrections: bool = True,
    weighting: str = "relative",
    constants: PhysicalConstants = DEFAULT_CONSTANTS,
) -> FitResult:
    """Least-squares exponent over a whole reference set.

    Minimizes ``sum_z ((E_model(z, p) - e_exp) / e_exp)^2`` (or the plain
    squared difference with ``weighting="absolute"``) over p in [0.1, 1.5]
    with a grid-seeded golden-section search. Records the model cannot
    evaluate are dropped and listed in ``FitResult.excluded``.
    """
    if weighting not in ("relative", "absolute"):
        raise ValidationError(f"weighting must be 'relative' or 'absolute', got {weighting!r}")
    if len(refs) == 0:
        raise ValidationError("cannot fit an empty reference set")

    usable, excluded = [], []
    for r in refs:
        try:
            model_energy(r.z, 0.5, with_corrections, constants)
        except DomainError as exc:
            excluded.append((r.z, str(exc)))
        else:
            usable.append(r)
    if not usable:
        raise ValidationError("no reference record is inside the model's domain")

    def residuals(p):
        out = []
        for r in usable:
            diff = model_energy(r.z, p, with_corrections, constants) - r.e_exp
            out.append((r.z, diff / r.e_exp if weighting == "relative" else diff))
        return out

    def objective(p):
        return sum(d * d for _, d in residuals(p))

    p, _, evals, _ = seeded_minimize(objective, P_LO, P_HI, FIT_TOL, n_grid=64)
    res = residuals(p)
    return FitResult(p, sum(d * d for _, d in res), tuple(res), evals, tuple(excluded))
