"""Radial workbench for weighted nonlinear Schrodinger eigenproblems.

Exponent/regime calculus, a log-radial discretization of the weighted
energy space, scaling-manifold Rayleigh minimization for the first
nonlinear eigenvalue, negative-level minimization of coercive subscaled
energies, and Pohozaev-based verification of computed solutions.
"""

from .errors import (
    Diverged,
    DomainError,
    EmptyGridError,
    HypothesisViolation,
    InlsError,
    NotCoerciveConfig,
    SearchFailed,
    SingularHessian,
    ZeroProfileError,
)
from .functionals import (
    FunctionalReport,
    TermSpec,
    I_energy,
    J_energy,
    eigen_relation_residual,
    el_residual,
    functional_report,
    grad_phi,
    phi,
    pohozaev_residual,
    project_to_M,
    rayleigh,
    scale_profile,
)
from .grid import (
    ProfileFamily,
    RadialGrid,
    RadialProfile,
    dirichlet_energy,
    load_profile,
    make_grid,
    sample_function,
    save_profile,
    scale,
    sphere_area,
    weighted_integral,
)
from .regimes import (
    EmbeddingInterval,
    Params,
    Regime,
    RegimeVerdict,
    WeightedPair,
    classify_pair,
    critical_exponent,
    derive_params,
    ell_of,
    gamma_mu_roots,
    interpolation_pair,
    lower_endpoint,
    nonexistence,
    ps_threshold,
    region_map,
    region_map_csv,
    scaled_threshold,
    tilde_s_root,
)
from .solver import (
    SolveOptions,
    SolveReport,
    minimize_coercive,
    minimize_rayleigh,
    newton_refine,
    probe_best_constant,
)

__version__ = "0.1.0"

__all__ = [
    "Diverged",
    "DomainError",
    "EmptyGridError",
    "EmbeddingInterval",
    "FunctionalReport",
    "HypothesisViolation",
    "InlsError",
    "NotCoerciveConfig",
    "Params",
    "ProfileFamily",
    "RadialGrid",
    "RadialProfile",
    "Regime",
    "RegimeVerdict",
    "SearchFailed",
    "SingularHessian",
    "SolveOptions",
    "SolveReport",
    "TermSpec",
    "WeightedPair",
    "ZeroProfileError",
    "I_energy",
    "J_energy",
    "classify_pair",
    "critical_exponent",
    "derive_params",
    "dirichlet_energy",
    "eigen_relation_residual",
    "el_residual",
    "ell_of",
    "functional_report",
    "gamma_mu_roots",
    "grad_phi",
    "interpolation_pair",
    "load_profile",
    "lower_endpoint",
    "make_grid",
    "minimize_coercive",
    "minimize_rayleigh",
    "newton_refine",
    "nonexistence",
    "phi",
    "pohozaev_residual",
    "probe_best_constant",
    "project_to_M",
    "ps_threshold",
    "rayleigh",
    "region_map",
    "region_map_csv",
    "sample_function",
    "save_profile",
    "scale",
    "scale_profile",
    "scaled_threshold",
    "sphere_area",
    "tilde_s_root",
    "weighted_integral",
]
