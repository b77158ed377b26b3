"""Curvature invariants and soliton-equation checks for almost contact
B-metric structures realized as left-invariant geometry on Lie groups.

The pipeline: build a Lie algebra and a compatible (phi, xi, eta, g)
structure, derive the Levi-Civita connection and curvature of both
B-metrics, classify the structure (Sasaki-like or not), then evaluate the
generalized Ricci-flow stationarity equations for vertical or conformal
potentials and report per-identity residuals.
"""

from .definitions import (
    ManifoldDefinition,
    load_definition,
    parse_definition,
    save_definition,
)
from .errors import (
    AntisymmetryViolation,
    DegenerateMetric,
    DegenerateParameter,
    DimensionMismatch,
    EmptyGrid,
    GeometryError,
    JacobiViolation,
    NotSasakiLike,
    NotSymmetric,
    ParseError,
    SingularFit,
    StructureViolation,
    UnsupportedPotential,
    WrongSignature,
    ZeroTransform,
)
from .geometry import (
    Connection,
    CurvaturePackage,
    FundamentalTensor,
    LieAlgebra,
    SasakiLikeResult,
    classify_sasaki_like,
    curvature_package,
    fundamental_tensor,
    levi_civita,
    reeb_derivative_residual,
    ricci,
    riemann,
    scalar_invariants,
    tau_tilde,
)
from .scenarios import (
    Example1Point,
    Example2Params,
    SweepResult,
    SweepRow,
    build_example2,
    example1_curve,
    example2_expected_curvature,
    example2_state,
    flat_carrier_structure,
    run_example1_report,
    run_example2_report,
    sweep,
)
from .solitons import (
    Check,
    ConformalPotential,
    EinsteinLikeFit,
    LeftInvariantPotential,
    SolitonSpec,
    TheoremReport,
    VerticalPotential,
    VerticalScalar,
    divergence,
    einstein_like_fit,
    eta_rb_residual,
    is_degenerate_beta,
    lie_derivative_metric,
    rb_like_residual,
    solve_vertical_soliton,
    verify_conformal_theorem,
    vertical_lie_closed_form,
)
from .structure import (
    AccRStructure,
    associated_metric,
    contact_homothetic_transform,
    metric_signature,
    validate_structure,
)
from .tensors import (
    DEFAULT_TOL,
    Frame,
    MetricPair,
    Tensor,
    invert_metric,
    max_abs,
    phi_trace,
    trace_g,
)

__all__ = [
    "AccRStructure",
    "AntisymmetryViolation",
    "Check",
    "ConformalPotential",
    "Connection",
    "CurvaturePackage",
    "DEFAULT_TOL",
    "DegenerateMetric",
    "DegenerateParameter",
    "DimensionMismatch",
    "EinsteinLikeFit",
    "EmptyGrid",
    "Example1Point",
    "Example2Params",
    "Frame",
    "FundamentalTensor",
    "GeometryError",
    "JacobiViolation",
    "LeftInvariantPotential",
    "LieAlgebra",
    "ManifoldDefinition",
    "MetricPair",
    "NotSasakiLike",
    "NotSymmetric",
    "ParseError",
    "SasakiLikeResult",
    "SingularFit",
    "SolitonSpec",
    "StructureViolation",
    "SweepResult",
    "SweepRow",
    "Tensor",
    "TheoremReport",
    "UnsupportedPotential",
    "VerticalPotential",
    "VerticalScalar",
    "WrongSignature",
    "ZeroTransform",
    "associated_metric",
    "build_example2",
    "classify_sasaki_like",
    "contact_homothetic_transform",
    "curvature_package",
    "divergence",
    "einstein_like_fit",
    "eta_rb_residual",
    "example1_curve",
    "example2_expected_curvature",
    "example2_state",
    "flat_carrier_structure",
    "fundamental_tensor",
    "invert_metric",
    "is_degenerate_beta",
    "levi_civita",
    "lie_derivative_metric",
    "load_definition",
    "max_abs",
    "metric_signature",
    "parse_definition",
    "phi_trace",
    "rb_like_residual",
    "reeb_derivative_residual",
    "ricci",
    "riemann",
    "run_example1_report",
    "run_example2_report",
    "save_definition",
    "scalar_invariants",
    "solve_vertical_soliton",
    "sweep",
    "tau_tilde",
    "trace_g",
    "validate_structure",
    "verify_conformal_theorem",
    "vertical_lie_closed_form",
]

__version__ = "0.1.0"
