"""Sweep the canonical classification over every cell and check the model property.

Each dominant integral weight in the swept box is classified against the
canonical potential of every cell; the model property holds when exactly
one cell accepts it into its square-integrable block, and that cell is the
one matching the weight's zero pattern.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Iterator

from .cells import Cell, cell_of_weight, enumerate_cells
from .classifier import L2_YES, square_integrable
from .errors import DimensionTooLargeError
from .potential import canonical_potential
from .root_system import RootDatum, Weight
from .util import map_ordered

__all__ = [
    "MAX_SWEEP_RANK",
    "Violation",
    "ModelCatalog",
    "MultiplicityReport",
    "dominant_weights",
    "build_model_catalog",
    "verify_multiplicity_one",
    "summary_line",
]

MAX_SWEEP_RANK = 6


@dataclass(frozen=True)
class Violation:
    weight: Weight
    contributors: tuple[Cell, ...]
    note: str


@dataclass(frozen=True)
class ModelCatalog:
    datum: RootDatum
    bound: int
    assignments: tuple[tuple[Weight, Cell], ...]
    violations: tuple[Violation, ...]

    @property
    def weight_count(self) -> int:
        return (self.bound + 1) ** self.datum.n


@dataclass(frozen=True)
class MultiplicityReport:
    ok: bool
    problems: tuple[str, ...]


def dominant_weights(datum: RootDatum, bound: int) -> Iterator[Weight]:
    """Dominant integral weights with coordinates in 0..bound, in product order."""
    for coords in itertools.product(range(bound + 1), repeat=datum.n):
        yield Weight.from_seq(coords)


def build_model_catalog(
    datum: RootDatum,
    bound: int,
    *,
    image_filter: Callable[[Cell, Weight], bool] | None = None,
    threads: int | None = None,
) -> ModelCatalog:
    """Classify every swept weight against every cell's canonical potential.

    ``image_filter`` is a test seam that can veto a cell's contribution to
    exercise the violation bookkeeping; production callers leave it None.
    """
    if bound < 0:
        raise ValueError("bound must be >= 0")
    if datum.n > MAX_SWEEP_RANK:
        raise DimensionTooLargeError(f"model sweep supports rank <= {MAX_SWEEP_RANK}, got {datum.n}")
    pots = [(cell, canonical_potential(cell)) for cell in enumerate_cells(datum)]

    def classify(weight: Weight) -> tuple[Weight, tuple[Cell, ...]]:
        hits = []
        for cell, pot in pots:
            report = square_integrable(cell, pot, weight)
            if report.in_l2 == L2_YES and (image_filter is None or image_filter(cell, weight)):
                hits.append(cell)
        return weight, tuple(hits)

    results = map_ordered(classify, dominant_weights(datum, bound), threads)
    assignments: list[tuple[Weight, Cell]] = []
    violations: list[Violation] = []
    for weight, hits in results:
        expected = cell_of_weight(datum, weight)
        if len(hits) == 1 and hits[0] == expected:
            assignments.append((weight, hits[0]))
        elif len(hits) == 0:
            violations.append(Violation(weight, (), "no cell contributes"))
        elif len(hits) == 1:
            violations.append(
                Violation(weight, hits, "contributing cell differs from the weight's zero-pattern cell")
            )
        else:
            violations.append(Violation(weight, hits, "multiple cells contribute"))
    return ModelCatalog(datum, bound, tuple(assignments), tuple(violations))


def verify_multiplicity_one(catalog: ModelCatalog) -> MultiplicityReport:
    """True iff every swept weight landed in exactly one cell's block."""
    problems = tuple(
        f"weight {v.weight}: {v.note}"
        + (f" ({', '.join('S=' + str(list(c.S)) for c in v.contributors)})" if v.contributors else "")
        for v in catalog.violations
    )
    return MultiplicityReport(not problems, problems)


def summary_line(catalog: ModelCatalog) -> str:
    cells = 2 ** catalog.datum.n
    if catalog.violations:
        return f"MODEL VIOLATION ({len(catalog.violations)} of {catalog.weight_count} weights, {cells} cells)"
    return f"MODEL OK ({catalog.weight_count} weights, {cells} cells)"
