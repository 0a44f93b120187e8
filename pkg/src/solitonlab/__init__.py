"""Coordinate-chart tensor calculus with exact second-order jets, and
verification of gradient Yamabe-type soliton structures on explicit
metric families."""

from .autodiff import Jet2, eval_jet2, finite_diff_jet2
from .curvature import (
    CurvatureAtPoint,
    christoffel,
    covariant_hessian,
    curvature_at,
    curvature_from,
    gradient_and_norm,
    laplace_beltrami,
)
from .errors import (
    ConfigError,
    DomainError,
    ExpressionSyntaxError,
    NonPositiveEtaPrimeError,
    NonPositiveWarpingError,
    QuadratureFailureError,
    SignatureMismatchError,
    SingularMetricError,
    SolitonLabError,
    UnknownVariableError,
)
from .expressions import (
    ScalarField,
    constant_field,
    coordinate_field,
    cos,
    exp,
    format_expression,
    ln,
    parse_expression,
    sin,
    sqrt,
)
from .families import (
    GRWSpec,
    LaplacianReport,
    QuadratureProfile,
    StaticSpec,
    Walker3Construction,
    Walker3Spec,
    Walker4Spec,
    WarpedProductSpec,
    assemble_warped_metric,
    grw_lambda_map,
    grw_potential,
    grw_potential_field,
    grw_system_residual,
    laplacian_report,
    static_system_residual,
    walker3_closed_forms,
    walker3_construct,
    walker3_metric,
    walker3_pde_residual,
    walker4_closed_forms,
    walker4_construct,
    walker4_metric,
    walker4_pde_residual,
)
from .grids import grid_points
from .metrics import (
    MetricAtPoint,
    MetricField,
    flat_metric,
    metric_at,
    parse_signature,
    sphere_metric,
)
from .quadrature import adaptive_simpson
from .soliton import (
    LambdaEstimate,
    ResidualReport,
    SolitonData,
    ThetaCheck,
    WarpedConditions,
    classify,
    gqy_residual,
    gys_residual,
    infer_lambda,
    residual_report,
    theta_check,
    theta_substitution,
    warped_conditions_check,
)

__version__ = "0.1.0"

__all__ = [
    "Jet2",
    "eval_jet2",
    "finite_diff_jet2",
    "CurvatureAtPoint",
    "christoffel",
    "covariant_hessian",
    "curvature_at",
    "curvature_from",
    "gradient_and_norm",
    "laplace_beltrami",
    "ConfigError",
    "DomainError",
    "ExpressionSyntaxError",
    "NonPositiveEtaPrimeError",
    "NonPositiveWarpingError",
    "QuadratureFailureError",
    "SignatureMismatchError",
    "SingularMetricError",
    "SolitonLabError",
    "UnknownVariableError",
    "ScalarField",
    "constant_field",
    "coordinate_field",
    "cos",
    "exp",
    "format_expression",
    "ln",
    "parse_expression",
    "sin",
    "sqrt",
    "GRWSpec",
    "LaplacianReport",
    "QuadratureProfile",
    "StaticSpec",
    "Walker3Construction",
    "Walker3Spec",
    "Walker4Spec",
    "WarpedProductSpec",
    "assemble_warped_metric",
    "grw_lambda_map",
    "grw_potential",
    "grw_potential_field",
    "grw_system_residual",
    "laplacian_report",
    "static_system_residual",
    "walker3_closed_forms",
    "walker3_construct",
    "walker3_metric",
    "walker3_pde_residual",
    "walker4_closed_forms",
    "walker4_construct",
    "walker4_metric",
    "walker4_pde_residual",
    "grid_points",
    "MetricAtPoint",
    "MetricField",
    "flat_metric",
    "metric_at",
    "parse_signature",
    "sphere_metric",
    "adaptive_simpson",
    "LambdaEstimate",
    "ResidualReport",
    "SolitonData",
    "ThetaCheck",
    "WarpedConditions",
    "classify",
    "gqy_residual",
    "gys_residual",
    "infer_lambda",
    "residual_report",
    "theta_check",
    "theta_substitution",
    "warped_conditions_check",
    "__version__",
]
