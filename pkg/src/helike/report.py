"""Tabulated comparisons with experiment and Bohr-surface scans, plus CSV output."""

from __future__ import annotations

import csv
import dataclasses
import io
from dataclasses import dataclass

import numpy as np

from .bohr import bohr_energy
from .closed_forms import P_DEFAULT, MethodId
from .core import DEFAULT_CONSTANTS, PhysicalConstants, ValidationError, check_charge, check_quantum_number
from .corrections import corrected_energy
from .reference import ReferenceSet


@dataclass(frozen=True)
class TableRow:
    z: int
    symbol: str
    e_exp: float
    e_interp_corrected: float
    e_hylleraas_corrected: float


@dataclass(frozen=True)
class FigureRow:
    z: int
    rel_diff_interp: float
    rel_diff_hylleraas: float


@dataclass(frozen=True)
class ScanRow:
    a: float
    z: float
    n: int
    e: float


def relative_difference(e_exp: float, e_theory: float) -> float:
    """``(E_e - E_t) / E_e``; positive when theory is less bound than experiment."""
    return (e_exp - e_theory) / e_exp


def table_rows(
    refs: ReferenceSet,
    p: float = P_DEFAULT,
    constants: PhysicalConstants = DEFAULT_CONSTANTS,
) -> list[TableRow]:
    if len(refs) == 0:
        raise ValidationError("reference set is empty")
    rows = []
    for r in refs:
        interp = corrected_energy(MethodId.INTERPOLATION, r.z, p, constants).total
        hyll = corrected_energy(MethodId.HYLLERAAS, r.z, p, constants).total
        rows.append(TableRow(r.z, r.symbol, r.e_exp, interp, hyll))
    return rows


def figure_rows(
    refs: ReferenceSet,
    p: float = P_DEFAULT,
    constants: PhysicalConstants = DEFAULT_CONSTANTS,
) -> list[FigureRow]:
    return [
        FigureRow(
            t.z,
            relative_difference(t.e_exp, t.e_interp_corrected),
            relative_difference(t.e_exp, t.e_hylleraas_corrected),
        )
        for t in table_rows(refs, p, constants)
    ]


def scan_rows(z: float, n: int, a_min: float, a_max: float, count: int) -> list[ScanRow]:
    """Sample `bohr_energy` on a log-spaced grid of ``count`` points in [a_min, a_max]."""
    z = check_charge(z)
    n = check_quantum_number(n)
    if not (0 < a_min < a_max):
        raise ValidationError(f"need 0 < a_min < a_max, got a_min={a_min!r}, a_max={a_max!r}")
    if isinstance(count, bool) or int(count) != count or count < 2:
        raise ValidationError(f"count must be an integer >= 2, got {count!r}")
    grid = np.geomspace(a_min, a_max, int(count))
    # pin the endpoints to the requested values; geomspace goes through exp/log
    grid[0], grid[-1] = a_min, a_max
    return [ScanRow(float(a), z, n, bohr_energy(float(a), z, n)) for a in grid]


def _fmt(value) -> str:
    if isinstance(value, float):
        return f"{value:.12g}"
    if isinstance(value, MethodId):
        return value.value
    return str(value)


def rows_to_csv(rows, fields=None) -> str:
    """Render dataclass rows as CSV, floats at 12 significant digits."""
    if fields is None:
        if not rows:
            raise ValidationError("no rows to write")
        fields = [f.name for f in dataclasses.fields(rows[0])]
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(fields)
    for row in rows:
        w.writerow([_fmt(getattr(row, name)) for name in fields])
    return buf.getvalue()
