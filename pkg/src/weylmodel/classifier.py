"""Occurrence and square-integrability verdicts for dominant integral weights.

A weight occurs over a cell exactly when it lies in the cell closure.  It
is square-integrable when it lies in the open moment image of the chosen
potential: for the canonical potential that is the exact coordinate test
"every free coordinate positive", otherwise a Newton inversion decides
attainment.  Independently, ``l2_norm_integral`` estimates the reduced
norm integral of exp(-F(y) + 2 lambda(y)) over nested boxes and reports
convergent/divergent/inconclusive from the shell increments; for rank one
and the canonical potential the convergent limit is the Gamma value
Gamma(2c) obtained by substituting u = e^t.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from typing import Mapping

import numpy as np

from .cells import Cell, closure_contains, free_coords
from .errors import (
    BudgetExceededError,
    DimensionMismatchError,
    DimensionTooLargeError,
    ExponentOverflowError,
    NotDominantIntegralError,
    WeightOutsideCellError,
)
from .potential import (
    DEFAULT_NEWTON,
    EXP_BOUND_DEFAULT,
    MomentPoint,
    NewtonConfig,
    Potential,
    invert_moment,
    is_canonical,
    term_arrays,
)
from .root_system import Weight

__all__ = [
    "L2_YES",
    "L2_NO",
    "L2_UNKNOWN",
    "ClassificationReport",
    "occurs_in_sections",
    "square_integrable",
    "QuadratureConfig",
    "ConvergenceReport",
    "l2_norm_integral",
]

L2_YES = "yes"
L2_NO = "no"
L2_UNKNOWN = "unknown"

VERDICT_CONVERGENT = "convergent"
VERDICT_DIVERGENT = "divergent"
VERDICT_INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class ClassificationReport:
    weight: Weight
    cell: Cell
    occurs: bool
    in_l2: str
    method: str  # "exact" or "newton"
    details: Mapping = field(default_factory=dict)

    def __post_init__(self):
        if self.in_l2 == L2_YES and not self.occurs:
            raise ValueError("square-integrable weights must occur")


def _require_dominant_integral(weight: Weight) -> None:
    if not (weight.is_dominant and weight.is_integral):
        raise NotDominantIntegralError(f"weight {weight} is not dominant integral")


def _require_same_cell(cell: Cell, potential: Potential) -> None:
    if potential.cell != cell:
        raise DimensionMismatchError("potential lives on a different cell")


def occurs_in_sections(cell: Cell, weight: Weight) -> bool:
    """Whether the irreducible with this highest weight occurs over the cell."""
    _require_dominant_integral(weight)
    return closure_contains(cell, weight)


def square_integrable(
    cell: Cell,
    potential: Potential,
    weight: Weight,
    tol: float = 1e-10,
    newton: NewtonConfig = DEFAULT_NEWTON,
) -> ClassificationReport:
    """Occurrence plus moment-image membership for one dominant integral weight.

    Weights with a nonzero coordinate on a pinned simple root live outside
    the cell's weight space and are reported occurs=False, in_l2="no"
    rather than projected.
    """
    _require_dominant_integral(weight)
    _require_same_cell(cell, potential)
    occurs = closure_contains(cell, weight)
    if not occurs:
        return ClassificationReport(
            weight, cell, False, L2_NO, "exact",
            {"reason": "weight not in the cell closure"},
        )
    free = free_coords(cell, weight)
    if is_canonical(potential):
        # moment image of the canonical potential is exactly the open cell
        verdict = L2_YES if all(c > 0 for c in free) else L2_NO
        return ClassificationReport(weight, cell, True, verdict, "exact", {})
    target = MomentPoint(tuple(float(c) for c in free))
    try:
        result = invert_moment(potential, target, tol, newton)
    except BudgetExceededError as exc:
        return ClassificationReport(
            weight, cell, True, L2_UNKNOWN, "newton",
            {"iterations": exc.iterations, "residual": exc.residual, "reason": str(exc)},
        )
    verdict = L2_YES if result.attained else L2_NO
    details = {"iterations": result.iterations, "residual": result.residual}
    if result.reason:
        details["reason"] = result.reason
    return ClassificationReport(weight, cell, True, verdict, "newton", details)


@dataclass(frozen=True)
class QuadratureConfig:
    radii: tuple[float, ...] = (2.0, 4.0, 8.0, 16.0, 32.0)
    rel_eps: float = 1e-6
    growth_factor: float = 1.5
    exp_bound: float = EXP_BOUND_DEFAULT
    panel_width: float | None = None  # None: per-dimension default
    gl_order: int | None = None

    def __post_init__(self):
        if len(self.radii) < 3:
            raise ValueError("need at least three radii to reach a verdict")
        if any(r <= 0 for r in self.radii) or any(
            b <= a for a, b in zip(self.radii, self.radii[1:])
        ):
            raise ValueError("radii must be positive and strictly increasing")
        if not self.rel_eps > 0:
            raise ValueError("rel_eps must be positive")
        if not self.growth_factor > 1:
            raise ValueError("growth_factor must exceed 1")


@dataclass(frozen=True)
class ConvergenceReport:
    radii: tuple[float, ...]
    partial_integrals: tuple[float, ...]
    verdict: str
    limit_estimate: float | None

    def __post_init__(self):
        # the integrand is positive, so the box integrals can only grow
        if any(b < a for a, b in zip(self.partial_integrals, self.partial_integrals[1:])):
            raise ValueError("partial integrals must be non-decreasing")


# (panel width, Gauss-Legendre order) per dimension; tuned so the rank-1
# Gamma values come out to far better than 1e-3 relative error.
_PANEL_DEFAULTS = {1: (0.5, 8), 2: (1.0, 8), 3: (2.0, 6)}


@lru_cache(maxsize=None)
def _gl_rule(order: int) -> tuple[tuple[float, ...], tuple[float, ...]]:
    nodes, weights = np.polynomial.legendre.leggauss(order)
    return tuple(nodes), tuple(weights)


def _axis_rule(a: float, b: float, width: float, order: int) -> tuple[np.ndarray, np.ndarray]:
    """Composite Gauss-Legendre nodes/weights on [a, b] with panels <= width wide."""
    panels = max(1, math.ceil((b - a) / width))
    base_nodes, base_weights = (np.array(v) for v in _gl_rule(order))
    edges = np.linspace(a, b, panels + 1)
    half = np.diff(edges) / 2.0
    mid = (edges[:-1] + edges[1:]) / 2.0
    nodes = (mid[:, None] + half[:, None] * base_nodes[None, :]).reshape(-1)
    weights = (half[:, None] * base_weights[None, :]).reshape(-1)
    return nodes, weights


def _bcast(vec: np.ndarray, axis: int, m: int) -> np.ndarray:
    shape = [1] * m
    shape[axis] = vec.size
    return vec.reshape(shape)


def _box_quadrature(
    coeffs: np.ndarray,
    forms: np.ndarray,
    offset: float,
    two_lam: np.ndarray,
    bounds: tuple[tuple[float, float], ...],
    width: float,
    order: int,
    exp_bound: float,
) -> float:
    """Tensor-product quadrature of exp(-F(y) + 2 lambda(y)) over one box."""
    m = len(bounds)
    rules = [_axis_rule(a, b, width, order) for a, b in bounds]
    shape = tuple(r[0].size for r in rules)
    f_grid = np.zeros(shape)
    for c, form in zip(coeffs, forms):
        exps = sum(float(form[axis]) * _bcast(rules[axis][0], axis, m) for axis in range(m))
        if float(np.max(exps)) > exp_bound:
            raise ExponentOverflowError("potential exponent exceeds the overflow bound")
        f_grid = f_grid + c * np.exp(exps)
    log_integrand = sum(
        float(two_lam[axis]) * _bcast(rules[axis][0], axis, m) for axis in range(m)
    ) - (f_grid + offset)
    if float(np.max(log_integrand)) > exp_bound:
        raise ExponentOverflowError("integrand exponent exceeds the overflow bound")
    values = np.exp(log_integrand)
    for rule in rules:  # contract leading axis with its weight vector
        values = np.tensordot(rule[1], values, axes=(0, 0))
    return float(values)


def _shell_boxes(prev: float | None, r: float, m: int) -> list[tuple[tuple[float, float], ...]]:
    """Decompose [-r, r]^m minus [-prev, prev]^m into axis-aligned boxes."""
    if prev is None:
        return [((-r, r),) * m]
    segments = ((-r, -prev), (-prev, prev), (prev, r))
    boxes = []
    for choice in product(range(3), repeat=m):
        if all(c == 1 for c in choice):
            continue  # interior box already counted
        boxes.append(tuple(segments[c] for c in choice))
    return boxes


def _verdict(partials: list[float], config: QuadratureConfig) -> tuple[str, float | None]:
    increments = [b - a for a, b in zip(partials, partials[1:])]

    def rel(i: int) -> float:
        denom = partials[i + 1]
        return 0.0 if denom == 0 else increments[i] / denom

    k = len(increments)
    if k >= 2 and rel(k - 1) < config.rel_eps and rel(k - 2) < config.rel_eps:
        return VERDICT_CONVERGENT, partials[-1]
    if (
        k >= 3
        and increments[-2] > 0
        and increments[-3] > 0
        and increments[-1] / increments[-2] >= config.growth_factor
        and increments[-2] / increments[-3] >= config.growth_factor
    ):
        return VERDICT_DIVERGENT, None
    return VERDICT_INCONCLUSIVE, None


def l2_norm_integral(
    cell: Cell,
    potential: Potential,
    weight: Weight,
    config: QuadratureConfig = QuadratureConfig(),
) -> ConvergenceReport:
    """Quadrature oracle for the reduced norm integral over nested boxes.

    The weight may be any rational weight in the cell's weight space (zero
    on the pinned indices); integrality is not required, so half-integral
    Gamma checks run through the same code path.
    """
    m = cell.m
    if m > 3:
        raise DimensionTooLargeError(f"quadrature oracle supports at most 3 free directions, cell has {m}")
    _require_same_cell(cell, potential)
    if len(weight.coords) != cell.datum.n:
        raise DimensionMismatchError(f"weight must have {cell.datum.n} coordinates")
    if any(weight.coords[i - 1] != 0 for i in cell.S):
        raise WeightOutsideCellError("weight has a nonzero coordinate on a pinned simple root")

    if m == 0:
        value = math.exp(-potential.offset)
        partials = tuple(value for _ in config.radii)
        return ConvergenceReport(tuple(config.radii), partials, VERDICT_CONVERGENT, value)

    width, order = _PANEL_DEFAULTS[m]
    if config.panel_width is not None:
        width = config.panel_width
    if config.gl_order is not None:
        order = config.gl_order

    two_lam = np.array([2.0 * float(c) for c in free_coords(cell, weight)])
    coeffs, forms = term_arrays(potential)

    partials: list[float] = []
    total = 0.0
    prev = None
    for r in config.radii:
        for bounds in _shell_boxes(prev, r, m):
            total += _box_quadrature(
                coeffs, forms, potential.offset, two_lam, bounds, width, order, config.exp_bound
            )
        partials.append(total)
        prev = r
    verdict, limit = _verdict(partials, config)
    return ConvergenceReport(tuple(config.radii), tuple(partials), verdict, limit)
