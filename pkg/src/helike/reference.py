"""Experimental ground-state energies of the helium isoelectronic sequence.

Two CSV layouts are understood, told apart by their header row:

``z,symbol,e_exp_au,source``
    total two-electron energy in Hartree (schema A).
``z,symbol,ie2e_ev,ie1e_ev,source``
    the two successive ionization energies in eV (schema B); the total
    energy is ``-(ie2e_ev + ie1e_ev)`` converted to Hartree.

Lines starting with ``#`` and blank lines are ignored.
"""

from __future__ import annotations

import csv
import hashlib
import io
import math
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .core import (
    DEFAULT_CONSTANTS,
    InternalError,
    InvalidInputError,
    PhysicalConstants,
    SchemaError,
    ValidationError,
    ev_to_hartree,
)

SCHEMA_A = ("z", "symbol", "e_exp_au", "source")
SCHEMA_B = ("z", "symbol", "ie2e_ev", "ie1e_ev", "source")

BUNDLED_FILE = "helium_sequence_nist.csv"
BUNDLED_SHA256 = "51d40e97d435fda91b27b55eb9b1b5495dacce93e31d6e3002e1f315c4f5c11f"

Z_MAX = 118


@dataclass(frozen=True)
class IonRecord:
    z: int
    symbol: str
    e_exp: float
    source: str = ""

    def __post_init__(self):
        if isinstance(self.z, bool) or not isinstance(self.z, int) or not 1 <= self.z <= Z_MAX:
            raise ValidationError(f"z must be an integer in 1..{Z_MAX}, got {self.z!r}")
        if not math.isfinite(self.e_exp):
            raise ValidationError(f"z={self.z}: energy must be finite, got {self.e_exp!r}")
        if self.e_exp >= 0:
            raise ValidationError(f"z={self.z}: ground-state energy must be negative, got {self.e_exp!r}")
        if self.e_exp >= -self.z * self.z / 2:
            raise ValidationError(
                f"z={self.z}: energy {self.e_exp!r} is not below the hydrogenic threshold "
                f"{-self.z * self.z / 2!r} (ionization energy would be non-positive)"
            )


@dataclass(frozen=True)
class ReferenceSet:
    records: tuple[IonRecord, ...]

    def __post_init__(self):
        zs = [r.z for r in self.records]
        if len(set(zs)) != len(zs):
            dup = sorted({z for z in zs if zs.count(z) > 1})
            raise ValidationError(f"duplicate z in reference set: {dup}")
        if zs != sorted(zs):
            object.__setattr__(self, "records", tuple(sorted(self.records, key=lambda r: r.z)))

    def __iter__(self):
        return iter(self.records)

    def __len__(self):
        return len(self.records)

    def by_z(self, z: int) -> IonRecord:
        for r in self.records:
            if r.z == z:
                return r
        raise KeyError(z)

    def without(self, zs) -> "ReferenceSet":
        drop = set(zs)
        return ReferenceSet(tuple(r for r in self.records if r.z not in drop))


def _data_lines(text: str):
    for lineno, line in enumerate(io.StringIO(text, newline=None), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        yield lineno, line


def _parse_int(value: str, lineno: int) -> int:
    try:
        f = float(value)
    except ValueError:
        raise InvalidInputError(f"line {lineno}: z is not numeric: {value!r}") from None
    if not f.is_integer():
        raise ValidationError(f"line {lineno}: z must be an integer, got {value!r}")
    return int(f)


def _parse_float(value: str, field: str, lineno: int) -> float:
    try:
        f = float(value)
    except ValueError:
        raise InvalidInputError(f"line {lineno}: field {field} is not numeric: {value!r}") from None
    if not math.isfinite(f):
        raise InvalidInputError(f"line {lineno}: field {field} is not finite: {value!r}")
    return f


def parse_reference_csv(text: str, constants: PhysicalConstants = DEFAULT_CONSTANTS) -> ReferenceSet:
    """Parse reference energies in either schema; records come back sorted by z."""
    if text.startswith("\ufeff"):
        text = text[1:]
    lines = list(_data_lines(text))
    if not lines:
        raise SchemaError("no header row found")
    linenos = [n for n, _ in lines]
    rows = csv.reader(line for _, line in lines)
    header = tuple(h.strip() for h in next(rows))
    if header not in (SCHEMA_A, SCHEMA_B):
        raise SchemaError(
            f"unrecognized header {','.join(header)!r}; expected "
            f"{','.join(SCHEMA_A)!r} or {','.join(SCHEMA_B)!r}"
        )

    records = []
    seen = {}
    for lineno, row in zip(linenos[1:], rows):
        row = [c.strip() for c in row]
        if len(row) != len(header):
            raise InvalidInputError(f"line {lineno}: expected {len(header)} fields, got {len(row)}")
        z = _parse_int(row[0], lineno)
        if header == SCHEMA_A:
            e_exp = _parse_float(row[2], "e_exp_au", lineno)
        else:
            ie2 = _parse_float(row[2], "ie2e_ev", lineno)
            ie1 = _parse_float(row[3], "ie1e_ev", lineno)
            e_exp = -ev_to_hartree(ie2 + ie1, constants)
        if z in seen:
            raise ValidationError(f"line {lineno}: duplicate z={z} (first seen on line {seen[z]})")
        seen[z] = lineno
        try:
            records.append(IonRecord(z, row[1], e_exp, row[-1]))
        except ValidationError as exc:
            raise ValidationError(f"line {lineno}: {exc}") from None
    return ReferenceSet(tuple(sorted(records, key=lambda r: r.z)))


def serialize_reference_csv(refs: ReferenceSet) -> str:
    """Write `refs` in schema A with round-trip float precision."""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(SCHEMA_A)
    for r in refs:
        w.writerow([r.z, r.symbol, repr(r.e_exp), r.source])
    return buf.getvalue()


def load_reference(path, constants: PhysicalConstants = DEFAULT_CONSTANTS) -> ReferenceSet:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InvalidInputError(f"cannot read reference file {str(path)!r}: {exc.strerror}") from None
    except UnicodeDecodeError:
        raise InvalidInputError(f"reference file {str(path)!r} is not UTF-8") from None
    return parse_reference_csv(text, constants)


def bundled_reference(constants: PhysicalConstants = DEFAULT_CONSTANTS) -> ReferenceSet:
    """The vendored NIST-derived set for z = 1..10 (H- through Ne8+).

    Raises
    ------
    InternalError
        If the vendored file no longer matches its recorded checksum.
    """
    raw = resources.files("helike.data").joinpath(BUNDLED_FILE).read_bytes()
    digest = hashlib.sha256(raw).hexdigest()
    if digest != BUNDLED_SHA256:
        raise InternalError(f"vendored {BUNDLED_FILE} checksum mismatch: {digest}")
    return parse_reference_csv(raw.decode("utf-8"), constants)
