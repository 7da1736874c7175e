"""Closed-form ground-state energies of two-electron atoms and ions.

Bohr's correlated model, the small- and large-charge screening limits, an
interpolation formula joining them, the Hylleraas series, relativistic and
QED corrections, and comparison against NIST-derived reference energies.
"""

from .bohr import (
    MinimizationResult,
    bohr_energy,
    critical_charge,
    critical_charge_numeric,
    hydrogenic_energy,
    ionization_energy,
    optimal_correlation,
)
from .closed_forms import (
    Z0,
    MethodId,
    asymptote_energy,
    evaluate,
    hylleraas_energy,
    interpolated_energy,
    perturbation_energy,
    screening_sigma,
    variational_energy,
)
from .core import (
    DEFAULT_CONSTANTS,
    DomainError,
    HeLikeError,
    InternalError,
    InvalidInputError,
    NoSolutionError,
    PhysicalConstants,
    SchemaError,
    ValidationError,
    ev_to_hartree,
    hartree_to_ev,
)
from .corrections import EnergyBreakdown, corrected_energy, qed_correction, relativistic_correction
from .fit import FitResult, fit_global_p, solve_p_for_ion
from .reference import (
    IonRecord,
    ReferenceSet,
    bundled_reference,
    load_reference,
    parse_reference_csv,
    serialize_reference_csv,
)
from .report import FigureRow, ScanRow, TableRow, figure_rows, rows_to_csv, scan_rows, table_rows

__version__ = "0.1.0"
