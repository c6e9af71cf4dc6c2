"""Exact computation of genus-0 invariants of even (2,2) intersections.

Reconstructs all genus-zero correlators of an even n-dimensional smooth
intersection of two quadrics (n >= 4) as exact polynomials in the one
undetermined length-(n+3) correlator, checks the cutoff Euler-multiplication
semisimplicity criterion, and replays the dimension-4 conic count in exact
rational and dual-number arithmetic.
"""

from .ambient import ambient_correlator
from .engine import (
    CorrelatorEngine,
    DivisionGuardError,
    convergence_witness,
    get_engine,
    index_triple,
)
from .geometry import (
    conic_pipeline,
    conic_plane_in_conjectural_quadric,
    dual_uniqueness,
    epsilon_gram,
    intersection_dim,
    intersection_number,
    no_conic_through_meeting_points,
    only_base_plane_meets_all_windows,
    plane_meeting_system,
    plucker_relations,
    sigma_interval_class,
    window_sum_inequality,
)
from .matrices import (
    DualSolution,
    DualSolveError,
    ExactMatrix,
    dual_solve,
    mat_charpoly,
    mat_det,
    mat_nullspace,
    mat_rank,
)
from .model import (
    ModelParams,
    ambient_3pt_tau,
    eta_inverse,
    eta_pairing,
    euler_coeffs_tau,
    f1_jet,
    t_tau_transition,
)
from .polynomials import UniPoly, poly_gcd, squarefree
from .scalars import DualNumber, GaussianRational
from .semisimple import (
    branch_discriminant,
    closed_form_charpoly,
    cutoff_matrix,
    semisimple_scan,
    zn_minus_az_plus_1_squarefree,
)

__all__ = [
    "CorrelatorEngine",
    "DivisionGuardError",
    "DualNumber",
    "DualSolution",
    "DualSolveError",
    "ExactMatrix",
    "GaussianRational",
    "ModelParams",
    "UniPoly",
    "ambient_3pt_tau",
    "ambient_correlator",
    "branch_discriminant",
    "closed_form_charpoly",
    "conic_pipeline",
    "conic_plane_in_conjectural_quadric",
    "convergence_witness",
    "cutoff_matrix",
    "dual_solve",
    "dual_uniqueness",
    "epsilon_gram",
    "eta_inverse",
    "eta_pairing",
    "euler_coeffs_tau",
    "f1_jet",
    "get_engine",
    "index_triple",
    "intersection_dim",
    "intersection_number",
    "mat_charpoly",
    "mat_det",
    "mat_nullspace",
    "mat_rank",
    "no_conic_through_meeting_points",
    "only_base_plane_meets_all_windows",
    "plane_meeting_system",
    "plucker_relations",
    "poly_gcd",
    "semisimple_scan",
    "sigma_interval_class",
    "squarefree",
    "t_tau_transition",
    "window_sum_inequality",
    "zn_minus_az_plus_1_squarefree",
]

__version__ = "0.1.0"
