"""Self-adjoint boundary conditions for the 1-D Dirac operator on two
half-lines joined by a junction: parameter maps in both directions,
proof-construction verification oracles, and a plane-wave scattering
solver for the junction's spin-flip / phase-shift behavior."""

from .boundary import (
    AlphaBC,
    BDForm,
    ClassReport,
    RhoBC,
    alpha_to_bd,
    apply_alpha,
    bd_to_alpha,
    current,
    invert_alpha,
    make_phase_shift,
    make_spin_flip,
    satisfies_rho,
    validate_class,
)
from .correspondence import (
    ExtensionClass,
    Separating,
    Transmitting,
    alpha_to_u2,
    classify,
    closed_form_u2_candidate,
    compare_closed_form,
    diagonal_u2_to_rho,
    mu_constant,
    oracle_alpha_from_u2,
    oracle_rho_from_diagonal,
    rho_to_diagonal_u2,
    u2_to_alpha,
)
from .deficiency import (
    BoundaryPair,
    DeficiencyFunction,
    Island,
    Sign,
    boundary_form,
    boundary_form_quadrature,
    gram_matrix,
    ode_residual,
    verify_selfadjoint_domain,
)
from .matrix2 import (
    DEFAULT_TOL,
    QuaternionForm,
    compose,
    decompose_u2,
    is_diagonal,
    is_su2,
    is_unitary,
)
from .scattering import (
    PlaneWaveBasis,
    ScatteringResult,
    plane_spinors,
    scatter_alpha,
    scatter_rho,
    sweep,
    switch_demo,
)

__version__ = "0.1.0"

__all__ = [
    "AlphaBC",
    "BDForm",
    "BoundaryPair",
    "ClassReport",
    "DEFAULT_TOL",
    "DeficiencyFunction",
    "ExtensionClass",
    "Island",
    "PlaneWaveBasis",
    "QuaternionForm",
    "RhoBC",
    "ScatteringResult",
    "Separating",
    "Sign",
    "Transmitting",
    "alpha_to_bd",
    "alpha_to_u2",
    "apply_alpha",
    "bd_to_alpha",
    "boundary_form",
    "boundary_form_quadrature",
    "classify",
    "closed_form_u2_candidate",
    "compare_closed_form",
    "compose",
    "current",
    "decompose_u2",
    "diagonal_u2_to_rho",
    "gram_matrix",
    "invert_alpha",
    "is_diagonal",
    "is_su2",
    "is_unitary",
    "make_phase_shift",
    "make_spin_flip",
    "mu_constant",
    "ode_residual",
    "oracle_alpha_from_u2",
    "oracle_rho_from_diagonal",
    "plane_spinors",
    "rho_to_diagonal_u2",
    "satisfies_rho",
    "scatter_alpha",
    "scatter_rho",
    "sweep",
    "switch_demo",
    "u2_to_alpha",
    "validate_class",
    "verify_selfadjoint_domain",
]
