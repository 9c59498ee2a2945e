"""Three-proton one-electron ion in a finite-rank separable potential.

Energies are in Rydberg, lengths in Bohr.
"""

from ._h3sep import (
    AMatrix2,
    Factor,
    Geometry,
    HydrogenRoot,
    IntegralSet,
    LambdaVector,
    DomainError,
    InconsistencyError,
    NoBoundState,
    PesRow,
    PsiParams,
    QuadratureFailure,
    SecularRoot,
    StabilityReport,
    a_matrix,
    comparison_curve,
    excited_root,
    f_overlap,
    find_hydrogen_roots,
    ground_state_root,
    i0,
    integral_set,
    lambda_vector,
    normalize,
    nuclear_repulsion,
    parse_angle,
    psi,
    psi_grid,
    raw_params,
    scan_r,
    secular_det,
    secular_factors,
    stability_report,
)

__all__ = [name for name in dir() if not name.startswith("_")]
