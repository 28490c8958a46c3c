"""Strictly convex exponential-sum potentials on a cell's flat directions.

A potential is F(y) = offset + sum_j c_j exp(mu_j . y) in coordinates dual
to the cell's free fundamental weights, so the canonical potential is
literally sum_i exp(y_i).  The moment map is half the gradient; a target
covector lies in the moment image exactly when damped Newton descent on
F(y) - 2 target . y reaches an interior minimizer.  Targets outside the
closed image cone send the iterates past the escape radius; targets on the
cone boundary drive the residual below any tolerance while the Newton step
stays order one (the minimizing sequence runs off along a recession
direction), and both signals are reported as non-attainment.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from . import rational
from .cells import Cell
from .errors import (
    BudgetExceededError,
    DegeneratePotentialError,
    DimensionMismatchError,
    ExponentOverflowError,
    ToleranceInvalidError,
)
from .util import map_ordered

__all__ = [
    "EXP_BOUND_DEFAULT",
    "Term",
    "Potential",
    "MomentPoint",
    "canonical_potential",
    "is_canonical",
    "evaluate",
    "gradient",
    "hessian",
    "moment_map",
    "spans_dual",
    "ConvexityReport",
    "hessian_pd_check",
    "InversionStatus",
    "InversionResult",
    "NewtonConfig",
    "DEFAULT_NEWTON",
    "invert_moment",
    "ProbeOutcome",
    "legendre_image_probe",
    "term_arrays",
]

EXP_BOUND_DEFAULT = 700.0


@dataclass(frozen=True)
class Term:
    """One summand c * exp(form . y); the form is exact, the coefficient is not."""

    coefficient: float
    form: tuple[Fraction, ...]

    def __post_init__(self):
        if not (math.isfinite(self.coefficient) and self.coefficient > 0):
            raise ValueError("term coefficient must be positive and finite")
        if not any(self.form):
            raise ValueError("zero exponent form is not allowed; use Potential.offset for constant shifts")


@dataclass(frozen=True)
class Potential:
    """F(y) = offset + sum_j c_j exp(mu_j . y) on the cell's free coordinates."""

    cell: Cell
    terms: tuple[Term, ...]
    offset: float = 0.0

    def __post_init__(self):
        m = self.cell.m
        for term in self.terms:
            if len(term.form) != m:
                raise DimensionMismatchError(f"term form has {len(term.form)} entries for an m={m} cell")
        if not math.isfinite(self.offset):
            raise ValueError("offset must be finite")

    @property
    def m(self) -> int:
        return self.cell.m


@dataclass(frozen=True)
class MomentPoint:
    """A covector on the cell in free-fundamental-weight coordinates."""

    coords: tuple[float, ...]

    def __post_init__(self):
        if not all(math.isfinite(c) for c in self.coords):
            raise ValueError("moment coordinates must be finite")

    @classmethod
    def of(cls, *coords) -> "MomentPoint":
        return cls(tuple(float(c) for c in coords))

    @classmethod
    def from_seq(cls, coords: Iterable) -> "MomentPoint":
        return cls(tuple(float(c) for c in coords))


def canonical_potential(cell: Cell) -> Potential:
    """Unit exponential on each free coordinate; its moment image is the open cell."""
    m = cell.m
    terms = tuple(
        Term(1.0, tuple(Fraction(int(i == j)) for j in range(m)))
        for i in range(m)
    )
    return Potential(cell, terms)


def is_canonical(potential: Potential) -> bool:
    m = potential.m
    if potential.offset != 0.0 or len(potential.terms) != m:
        return False
    return all(
        term.coefficient == 1.0
        and term.form == tuple(Fraction(int(i == j)) for j in range(m))
        for i, term in enumerate(potential.terms)
    )


def term_arrays(potential: Potential) -> tuple[np.ndarray, np.ndarray]:
    """Float views: coefficients with shape (k,), exponent forms with shape (k, m)."""
    k, m = len(potential.terms), potential.m
    coeffs = np.array([t.coefficient for t in potential.terms], dtype=float).reshape(k)
    forms = np.array(
        [[float(x) for x in t.form] for t in potential.terms], dtype=float
    ).reshape(k, m)
    return coeffs, forms


def _as_point(potential: Potential, y) -> np.ndarray:
    arr = np.asarray(y, dtype=float).reshape(-1)
    if arr.shape != (potential.m,):
        raise DimensionMismatchError(f"point must have {potential.m} coordinates, got {arr.shape[0]}")
    if not np.all(np.isfinite(arr)):
        raise ValueError("point coordinates must be finite")
    return arr


def _exponents(forms: np.ndarray, y: np.ndarray, exp_bound: float) -> np.ndarray:
    exps = forms @ y
    if exps.size and float(np.max(exps)) > exp_bound:
        raise ExponentOverflowError(
            f"exponent {float(np.max(exps)):.6g} exceeds the overflow bound {exp_bound:g}"
        )
    return exps


def evaluate(potential: Potential, y, exp_bound: float = EXP_BOUND_DEFAULT) -> float:
    """F(y); raises ExponentOverflowError when any term exponent exceeds the bound."""
    yv = _as_point(potential, y)
    coeffs, forms = term_arrays(potential)
    exps = _exponents(forms, yv, exp_bound)
    return potential.offset + float(coeffs @ np.exp(exps))


def gradient(potential: Potential, y, exp_bound: float = EXP_BOUND_DEFAULT) -> np.ndarray:
    """Gradient of F at y, as coefficients on the free fundamental weights."""
    yv = _as_point(potential, y)
    coeffs, forms = term_arrays(potential)
    weights = coeffs * np.exp(_exponents(forms, yv, exp_bound))
    return forms.T @ weights


def hessian(potential: Potential, y, exp_bound: float = EXP_BOUND_DEFAULT) -> np.ndarray:
    yv = _as_point(potential, y)
    coeffs, forms = term_arrays(potential)
    weights = coeffs * np.exp(_exponents(forms, yv, exp_bound))
    return forms.T @ (weights[:, None] * forms)


def moment_map(potential: Potential, y, exp_bound: float = EXP_BOUND_DEFAULT) -> MomentPoint:
    """Half the gradient of F at y = log a."""
    return MomentPoint(tuple(0.5 * gradient(potential, y, exp_bound)))


def spans_dual(potential: Potential) -> bool:
    """Exact rank test: do the exponent forms span the coordinate dual?

    A spanning set makes the Hessian sum of c_j e^{mu_j.y} mu_j mu_j^T
    positive definite at every point, certifying strict convexity globally.
    """
    return rational.rank([list(t.form) for t in potential.terms]) == potential.m


@dataclass(frozen=True)
class ConvexityReport:
    span_ok: bool
    min_eigenvalue: float | None
    samples_checked: int
    passed: bool


def hessian_pd_check(potential: Potential, samples: Sequence) -> ConvexityReport:
    """Sampled positive-definiteness plus the symbolic span certificate."""
    span_ok = spans_dual(potential)
    if potential.m == 0:
        return ConvexityReport(span_ok, None, 0, span_ok)
    if not samples:
        raise ValueError("need at least one sample point when m >= 1")
    min_eig = math.inf
    for y in samples:
        try:
            eig = float(np.linalg.eigvalsh(hessian(potential, y))[0])
        except ExponentOverflowError:
            eig = math.inf  # curvature blows up but stays positive
        min_eig = min(min_eig, eig)
    return ConvexityReport(span_ok, min_eig, len(samples), span_ok and min_eig > 0)


class InversionStatus(Enum):
    CONVERGED = "converged"
    NOT_ATTAINED = "not-attained"


@dataclass(frozen=True)
class InversionResult:
    status: InversionStatus
    point: tuple[float, ...] | None
    residual: float
    iterations: int
    reason: str = ""

    @property
    def attained(self) -> bool:
        return self.status is InversionStatus.CONVERGED


@dataclass(frozen=True)
class NewtonConfig:
    max_iterations: int = 200
    escape_radius: float = 1e4
    step_tolerance: float = 1e-6
    recession_window: int = 5
    armijo_slope: float = 1e-4
    max_backtracks: int = 60
    exp_bound: float = EXP_BOUND_DEFAULT


DEFAULT_NEWTON = NewtonConfig()


def _newton_step(h: np.ndarray, g: np.ndarray) -> np.ndarray:
    try:
        return np.linalg.solve(h, -g)
    except np.linalg.LinAlgError:
        ridge = 1e-12 * max(1.0, float(np.trace(h)) / h.shape[0])
        for _ in range(8):
            try:
                return np.linalg.solve(h + ridge * np.eye(h.shape[0]), -g)
            except np.linalg.LinAlgError:
                ridge *= 100.0
    return -g


def invert_moment(
    potential: Potential,
    target: MomentPoint,
    tol: float,
    config: NewtonConfig = DEFAULT_NEWTON,
) -> InversionResult:
    """Solve (1/2) grad F(y) = target by damped Newton descent.

    Returns CONVERGED with the preimage point when the residual drops below
    ``tol`` at an interior stationary point (small final Newton step), or
    NOT_ATTAINED when the descent finds a recession direction: either the
    iterates escape ``config.escape_radius`` while the objective keeps
    decreasing (target outside the closed image cone) or the residual
    vanishes with a persistently large Newton step (target on the cone
    boundary, infimum not attained).  Raises BudgetExceededError when the
    budget ends without either signal, and ToleranceInvalidError or
    DegeneratePotentialError on bad inputs.
    """
    if not (isinstance(tol, (int, float)) and math.isfinite(tol) and tol > 0):
        raise ToleranceInvalidError("tolerance must be a positive finite number")
    if len(target.coords) != potential.m:
        raise DimensionMismatchError(f"target must have {potential.m} coordinates")
    if not spans_dual(potential):
        raise DegeneratePotentialError("exponent forms do not span the coordinate dual")
    m = potential.m
    if m == 0:
        return InversionResult(InversionStatus.CONVERGED, (), 0.0, 0)

    t = np.array(target.coords, dtype=float)
    coeffs, forms = term_arrays(potential)

    def pieces(y: np.ndarray):
        """Objective F(y) - 2 t.y with gradient and term weights; +inf on overflow."""
        exps = forms @ y
        if not np.all(np.isfinite(exps)) or float(np.max(exps)) > config.exp_bound:
            return math.inf, None, None
        w = coeffs * np.exp(exps)
        obj = potential.offset + float(w.sum()) - 2.0 * float(t @ y)
        return obj, forms.T @ w - 2.0 * t, w

    y = np.zeros(m)
    obj, g, w = pieces(y)
    small_resid_run = 0
    for it in range(1, config.max_iterations + 1):
        resid = 0.5 * float(np.linalg.norm(g))
        h = forms.T @ (w[:, None] * forms)
        step_cap = 10.0 * config.escape_radius

        def capped(v: np.ndarray) -> np.ndarray:
            # inf-norm: squaring inside the 2-norm overflows past ~1e154
            scale = float(np.max(np.abs(v)))
            return v * (step_cap / scale) if scale > step_cap else v

        s = _newton_step(h, g)
        if not np.all(np.isfinite(s)):  # solve overflowed on a nearly flat Hessian
            s = -g
        s = capped(s)  # keep trial points representable; escape check still fires
        slope = float(g @ s)
        if slope >= 0:  # numerical safeguard: fall back to steepest descent
            s = capped(-g)
            slope = float(g @ s)
        step_norm = float(np.linalg.norm(s))
        if resid < tol:
            if step_norm <= config.step_tolerance:
                return InversionResult(InversionStatus.CONVERGED, tuple(map(float, y)), resid, it - 1)
            small_resid_run += 1
            if small_resid_run >= config.recession_window:
                return InversionResult(
                    InversionStatus.NOT_ATTAINED,
                    None,
                    resid,
                    it - 1,
                    reason="residual vanishes along a recession direction (target on the image boundary)",
                )
        else:
            small_resid_run = 0

        g_norm = float(np.linalg.norm(g))
        step = 1.0
        accepted = False
        for _ in range(config.max_backtracks):
            y_new = y + step * s
            obj_new, g_new, w_new = pieces(y_new)
            if obj_new <= obj + config.armijo_slope * step * slope:
                accepted = True
                break
            # near a flat optimum the objective decrease drops below float
            # resolution; a strict gradient-norm decrease still certifies progress
            if g_new is not None and float(np.linalg.norm(g_new)) <= (1.0 - config.armijo_slope * step) * g_norm:
                accepted = True
                break
            step *= 0.5
        if not accepted:
            if resid < tol:
                # cannot move at machine precision and the gradient is gone
                return InversionResult(InversionStatus.CONVERGED, tuple(map(float, y)), resid, it)
            raise BudgetExceededError(
                "line search stagnated before reaching the tolerance",
                iterations=it,
                residual=resid,
            )
        y, obj, g, w = y_new, obj_new, g_new, w_new
        if float(np.linalg.norm(y)) > config.escape_radius:
            return InversionResult(
                InversionStatus.NOT_ATTAINED,
                None,
                0.5 * float(np.linalg.norm(g)),
                it,
                reason="iterates escaped the radius while the objective kept decreasing",
            )
    raise BudgetExceededError(
        "newton budget exhausted without a verdict",
        iterations=config.max_iterations,
        residual=0.5 * float(np.linalg.norm(g)),
    )


@dataclass(frozen=True)
class ProbeOutcome:
    target: MomentPoint
    verdict: str  # "attained" | "not-attained" | "unknown"
    result: InversionResult | None
    error: str = ""


def legendre_image_probe(
    potential: Potential,
    targets: Sequence[MomentPoint],
    tol: float,
    config: NewtonConfig = DEFAULT_NEWTON,
    threads: int | None = None,
) -> list[ProbeOutcome]:
    """Batch attainment verdicts; budget exhaustion maps to "unknown" per target."""

    def probe(target: MomentPoint) -> ProbeOutcome:
        try:
            result = invert_moment(potential, target, tol, config)
        except BudgetExceededError as exc:
            return ProbeOutcome(target, "unknown", None, str(exc))
        verdict = "attained" if result.attained else "not-attained"
        return ProbeOutcome(target, verdict, result)

    return map_ordered(probe, targets, threads)
