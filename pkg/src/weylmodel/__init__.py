"""Weyl-chamber cells, convex exponential potentials, moment images, and
highest-weight occurrence/square-integrability verdicts for compact
semi-simple groups, with a multiplicity-one model sweep over all cells."""

from .root_system import (
    RootDatum,
    RootSystemSpec,
    Weight,
    build_root_datum,
    inner_product,
    is_dominant,
)
from .cells import (
    Cell,
    cell_of_subset,
    cell_of_weight,
    closure_contains,
    complementary_cell,
    contains,
    enumerate_cells,
    free_coords,
    weight_from_free_coords,
)
from .potential import (
    DEFAULT_NEWTON,
    MomentPoint,
    NewtonConfig,
    Potential,
    Term,
    canonical_potential,
    evaluate,
    gradient,
    hessian,
    hessian_pd_check,
    invert_moment,
    is_canonical,
    legendre_image_probe,
    moment_map,
    spans_dual,
)
from .classifier import (
    ClassificationReport,
    ConvergenceReport,
    QuadratureConfig,
    l2_norm_integral,
    occurs_in_sections,
    square_integrable,
)
from .model import (
    ModelCatalog,
    build_model_catalog,
    dominant_weights,
    summary_line,
    verify_multiplicity_one,
)

__version__ = "0.1.0"

__all__ = [
    "RootDatum",
    "RootSystemSpec",
    "Weight",
    "build_root_datum",
    "inner_product",
    "is_dominant",
    "Cell",
    "cell_of_subset",
    "cell_of_weight",
    "closure_contains",
    "complementary_cell",
    "contains",
    "enumerate_cells",
    "free_coords",
    "weight_from_free_coords",
    "DEFAULT_NEWTON",
    "MomentPoint",
    "NewtonConfig",
    "Potential",
    "Term",
    "canonical_potential",
    "evaluate",
    "gradient",
    "hessian",
    "hessian_pd_check",
    "invert_moment",
    "is_canonical",
    "legendre_image_probe",
    "moment_map",
    "spans_dual",
    "ClassificationReport",
    "ConvergenceReport",
    "QuadratureConfig",
    "l2_norm_integral",
    "occurs_in_sections",
    "square_integrable",
    "ModelCatalog",
    "build_model_catalog",
    "dominant_weights",
    "summary_line",
    "verify_multiplicity_one",
]
