"""Bloch seminorms, pseudohyperbolic geometry, and verification suites
on unit balls of finite-dimensional complex l^p spaces.
"""

from .automorphisms import (
    DiscMobius,
    GenPermIsometry,
    HilbertMobius,
    PolydiscAuto,
    point_automorphism,
    pullback_derivative_norm,
    pullback_expr,
)
from .catalog import (
    CatalogEntry,
    all_entries,
    bounded_entries,
    lookup,
    random_polynomial,
)
from .errors import (
    ArityError,
    DimensionMismatch,
    EvaluationPoisoned,
    OutsideDomain,
    ParseError,
    UnsupportedSpace,
)
from .expressions import (
    eval_gradient,
    eval_gradient_batch,
    eval_value,
    eval_value_batch,
    max_variable,
    parse,
    substitute,
    to_text,
)
from .geometry import (
    INF,
    BallSpace,
    dual_norm,
    hyperbolic,
    hyperbolic_distance,
    norm,
    pseudo_distance,
    schwarz_rho_bound,
)
from .sampling import DivergenceInfo, SupEstimate, estimate_supremum
from .seminorms import (
    LipschitzReport,
    estimate_sup,
    inv_density,
    lipschitz_check,
    nat_density,
    oracle_wlogw_sup,
    sup_norm_estimate,
)
from .suites import COVERAGE, SUITE_NAMES, emit_report, run_all, run_suite

__version__ = "0.1.0"

__all__ = [
    "ArityError",
    "BallSpace",
    "COVERAGE",
    "CatalogEntry",
    "DimensionMismatch",
    "DiscMobius",
    "DivergenceInfo",
    "EvaluationPoisoned",
    "GenPermIsometry",
    "HilbertMobius",
    "INF",
    "LipschitzReport",
    "OutsideDomain",
    "ParseError",
    "PolydiscAuto",
    "SUITE_NAMES",
    "SupEstimate",
    "UnsupportedSpace",
    "all_entries",
    "bounded_entries",
    "dual_norm",
    "emit_report",
    "estimate_sup",
    "estimate_supremum",
    "eval_gradient",
    "eval_gradient_batch",
    "eval_value",
    "eval_value_batch",
    "hyperbolic",
    "hyperbolic_distance",
    "inv_density",
    "lipschitz_check",
    "lookup",
    "max_variable",
    "nat_density",
    "norm",
    "oracle_wlogw_sup",
    "parse",
    "point_automorphism",
    "pseudo_distance",
    "pullback_derivative_norm",
    "pullback_expr",
    "random_polynomial",
    "run_all",
    "run_suite",
    "schwarz_rho_bound",
    "substitute",
    "sup_norm_estimate",
    "to_text",
    "__version__",
]
