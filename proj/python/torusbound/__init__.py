"""Curvature-induced bound states of a quantum particle confined to a torus.

Thin wrapper over the C++ core: surface-of-revolution curvature utilities,
Fourier-Galerkin assembly of the angular eigenproblem, a generalized
eigensolver with parity sectors, and bound-state scans.
"""

from ._core import (
    BoundStateTable,
    CurvatureBundle,
    Eigenstate,
    FullOperatorPair,
    ModeSpec,
    MongeSurface,
    OperatorPair,
    Parity,
    SolverError,
    Spectrum,
    TableDiffReport,
    TableTarget,
    TargetKind,
    TorusGeometry,
    assemble_full,
    assemble_sector,
    bound_state_scan,
    converge_spectrum,
    count_nodes,
    cutoff_m,
    evaluate_series,
    magic_radius_check,
    measure_gram,
    monge_curvatures,
    norm_weight,
    normalize_state,
    parity_project,
    pencil_residual,
    quadrature_oracle,
    reproduce_tables,
    solve_pair,
    torus_curvatures,
)

__version__ = "0.1.0"

__all__ = [
    "BoundStateTable",
    "CurvatureBundle",
    "Eigenstate",
    "FullOperatorPair",
    "ModeSpec",
    "MongeSurface",
    "OperatorPair",
    "Parity",
    "SolverError",
    "Spectrum",
    "TableDiffReport",
    "TableTarget",
    "TargetKind",
    "TorusGeometry",
    "assemble_full",
    "assemble_sector",
    "bound_state_scan",
    "converge_spectrum",
    "count_nodes",
    "cutoff_m",
    "evaluate_series",
    "magic_radius_check",
    "measure_gram",
    "monge_curvatures",
    "norm_weight",
    "normalize_state",
    "parity_project",
    "pencil_residual",
    "quadrature_oracle",
    "reproduce_tables",
    "solve_pair",
    "torus_curvatures",
]
