"""Certified lower bounds on the three-tangle of three-qubit mixed states."""

from .certify import (
    BoundReport,
    Decomposition,
    ErrorEstimate,
    Verdict,
    boundary_lambda,
    error_estimate,
    lower_bound,
    spectral_upper_bound,
    subspace_decomposition_search,
)
from .normal_form import NormalFormResult, normal_form
from .optimize import Criterion, OptResult, optimize
from .symmetric import (
    SymCoords,
    WitnessKind,
    ghz_w_line,
    sym_coords,
    tau3_symmetric_approx,
    tau3_symmetric_exact,
    witness_expectation,
)
from .tangle import hyperdeterminant, tau3_pure
from .twirl import coords, pit_project, project, tau3_approx_rho

__all__ = [
    "BoundReport", "Criterion", "Decomposition", "ErrorEstimate", "NormalFormResult",
    "OptResult", "SymCoords", "Verdict", "WitnessKind", "boundary_lambda", "coords",
    "error_estimate", "ghz_w_line", "hyperdeterminant", "lower_bound", "normal_form",
    "optimize", "pit_project", "project", "spectral_upper_bound",
    "subspace_decomposition_search", "sym_coords", "tau3_approx_rho", "tau3_pure",
    "tau3_symmetric_approx", "tau3_symmetric_exact", "witness_expectation",
]
