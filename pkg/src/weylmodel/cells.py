"""Stratification of the closed Weyl chamber into cells indexed by subsets of simple roots.

A cell is the locus where a chosen subset S of fundamental-weight
coordinates vanishes and the remaining ones are strictly positive.  Since
(w_i, a_j) = d_j on the diagonal and 0 off it, this coordinate description
is the same as pairing against the simple roots, and all membership tests
are exact rational comparisons.  Cells are in bijection with the parabolic
subgroups containing a fixed Borel, so S is the only state kept.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .errors import DimensionMismatchError, IndexOutOfRangeError, NotDominantError
from .root_system import RootDatum, Weight

__all__ = [
    "Cell",
    "cell_of_subset",
    "contains",
    "closure_contains",
    "cell_of_weight",
    "complementary_cell",
    "enumerate_cells",
    "free_coords",
    "weight_from_free_coords",
    "to_json_dict",
]


@dataclass(frozen=True)
class Cell:
    """Chamber stratum pinning the simple roots in S to zero."""

    datum: RootDatum
    S: tuple[int, ...]

    def __post_init__(self):
        if list(self.S) != sorted(set(self.S)):
            raise IndexOutOfRangeError("pinned indices must be sorted and distinct")
        for i in self.S:
            if not 1 <= i <= self.datum.n:
                raise IndexOutOfRangeError(f"simple-root index {i} outside 1..{self.datum.n}")

    @property
    def m(self) -> int:
        """Dimension of the cell (number of free coordinates)."""
        return self.datum.n - len(self.S)

    @property
    def free(self) -> tuple[int, ...]:
        """Indices of the free fundamental weights, ascending."""
        pinned = set(self.S)
        return tuple(i for i in range(1, self.datum.n + 1) if i not in pinned)

    def __str__(self) -> str:
        inner = ",".join(str(i) for i in self.S)
        return f"cell S={{{inner}}} of {self.datum.spec}"


def cell_of_subset(datum: RootDatum, S: Iterable[int]) -> Cell:
    return Cell(datum, tuple(sorted(set(int(i) for i in S))))


def _check_weight(cell: Cell, weight: Weight) -> None:
    if len(weight.coords) != cell.datum.n:
        raise DimensionMismatchError(f"weight must have {cell.datum.n} coordinates")


def contains(cell: Cell, weight: Weight) -> bool:
    """Exact membership in the open stratum: zero on S, positive elsewhere."""
    _check_weight(cell, weight)
    pinned = set(cell.S)
    return all(
        (c == 0) if (i + 1) in pinned else (c > 0)
        for i, c in enumerate(weight.coords)
    )


def closure_contains(cell: Cell, weight: Weight) -> bool:
    """Membership in the cell closure: zero on S, nonnegative elsewhere."""
    _check_weight(cell, weight)
    pinned = set(cell.S)
    return all(
        (c == 0) if (i + 1) in pinned else (c >= 0)
        for i, c in enumerate(weight.coords)
    )


def cell_of_weight(datum: RootDatum, weight: Weight) -> Cell:
    """The unique cell containing a dominant weight: pin exactly its zero coordinates."""
    if len(weight.coords) != datum.n:
        raise DimensionMismatchError(f"weight must have {datum.n} coordinates")
    if not weight.is_dominant:
        raise NotDominantError(f"weight {weight} has a negative coordinate")
    return Cell(datum, tuple(i + 1 for i, c in enumerate(weight.coords) if c == 0))


def complementary_cell(cell: Cell) -> Cell:
    return Cell(cell.datum, cell.free)


def enumerate_cells(datum: RootDatum) -> list[Cell]:
    """All 2^rank cells, ordered by subset bitmask (bit i-1 set iff root i pinned)."""
    out = []
    for mask in range(1 << datum.n):
        S = tuple(i + 1 for i in range(datum.n) if mask >> i & 1)
        out.append(Cell(datum, S))
    return out


def free_coords(cell: Cell, weight: Weight) -> tuple[Fraction, ...]:
    """Coordinates of a weight on the cell's free fundamental weights."""
    _check_weight(cell, weight)
    return tuple(weight.coords[i - 1] for i in cell.free)


def weight_from_free_coords(cell: Cell, coords: Iterable) -> Weight:
    """Embed free-coordinate values as a weight vanishing on S."""
    values = tuple(Fraction(c) for c in coords)
    if len(values) != cell.m:
        raise DimensionMismatchError(f"expected {cell.m} free coordinates, got {len(values)}")
    full = [Fraction(0)] * cell.datum.n
    for i, c in zip(cell.free, values):
        full[i - 1] = c
    return Weight(tuple(full))


def to_json_dict(cell: Cell) -> dict:
    return {"S": list(cell.S), "m": cell.m}
