"""Exact root data for compact semi-simple groups.

Everything in this module is rational arithmetic: Cartan matrices,
symmetrizers, the Gram matrix of the fundamental weights, and the positive
roots generated by closing the simple roots under root strings.  The
invariant form is normalized so that long roots have squared length 2
within each simple factor, which keeps all derived rationals small;
dominance, cell membership, and convergence verdicts downstream do not
depend on this scale.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from . import rational
from .errors import DimensionMismatchError, IndexOutOfRangeError, UnsupportedTypeError

__all__ = [
    "RootSystemSpec",
    "RootDatum",
    "Weight",
    "build_root_datum",
    "inner_product",
    "is_dominant",
]

# Bourbaki rank ranges per series.
_RANK_LIMITS = {
    "A": (1, None),
    "B": (2, None),
    "C": (3, None),
    "D": (4, None),
    "E": (6, 8),
    "F": (4, 4),
    "G": (2, 2),
}

_FACTOR_TOKEN = re.compile(r"^([A-G])(\d+)$")


@dataclass(frozen=True)
class RootSystemSpec:
    """A product of simple factors, e.g. ``A2``, ``B3`` or ``A1xA1``."""

    factors: tuple[tuple[str, int], ...]

    def __post_init__(self):
        if not self.factors:
            raise UnsupportedTypeError("a semi-simple root system needs at least one simple factor")
        for series, n in self.factors:
            limits = _RANK_LIMITS.get(series)
            if limits is None:
                raise UnsupportedTypeError(f"unknown series {series!r}")
            lo, hi = limits
            if n < lo or (hi is not None and n > hi):
                bound = f"{lo}..{hi}" if hi is not None else f">={lo}"
                raise UnsupportedTypeError(f"{series}{n} is not in the classification (rank {bound})")

    @classmethod
    def parse(cls, text: str) -> "RootSystemSpec":
        """Parse a spec string such as ``"A2"`` or ``"A1xB3"``."""
        factors = []
        for token in text.strip().split("x"):
            match = _FACTOR_TOKEN.match(token.strip().upper())
            if match is None:
                raise UnsupportedTypeError(f"cannot parse root-system factor {token!r}")
            factors.append((match.group(1), int(match.group(2))))
        return cls(tuple(factors))

    @property
    def rank(self) -> int:
        return sum(n for _, n in self.factors)

    def __str__(self) -> str:
        return "x".join(f"{series}{n}" for series, n in self.factors)


@dataclass(frozen=True)
class Weight:
    """A point of the weight space in fundamental-weight coordinates."""

    coords: tuple[Fraction, ...]

    @classmethod
    def of(cls, *coords) -> "Weight":
        return cls(tuple(Fraction(c) for c in coords))

    @classmethod
    def from_seq(cls, coords: Iterable) -> "Weight":
        return cls(tuple(Fraction(c) for c in coords))

    @property
    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coords)

    @property
    def is_dominant(self) -> bool:
        return all(c >= 0 for c in self.coords)

    def __str__(self) -> str:
        return "(" + ",".join(str(c) for c in self.coords) + ")"


@dataclass(frozen=True)
class RootDatum:
    """Exact root data of a compact semi-simple group.

    ``cartan[i][j]`` is 2(a_i, a_j)/(a_j, a_j) for simple roots a_i in
    Bourbaki numbering, ``d[j] = (a_j, a_j)/2``, ``gram_fw`` is the Gram
    matrix of the fundamental weights, and each positive root is stored by
    its integer coordinates in the simple-root basis.
    """

    spec: RootSystemSpec
    n: int
    cartan: tuple[tuple[int, ...], ...]
    d: tuple[Fraction, ...]
    gram_fw: tuple[tuple[Fraction, ...], ...]
    pos_roots: tuple[tuple[int, ...], ...]

    def simple_root(self, j: int) -> Weight:
        """Simple root j (1-based) written in fundamental-weight coordinates."""
        if not 1 <= j <= self.n:
            raise IndexOutOfRangeError(f"simple-root index {j} outside 1..{self.n}")
        return Weight.from_seq(self.cartan[j - 1])


def _factor_cartan(series: str, n: int) -> list[list[int]]:
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def link(i: int, j: int, aij: int = -1, aji: int = -1) -> None:
        a[i][j] = aij
        a[j][i] = aji

    if series == "A":
        for i in range(n - 1):
            link(i, i + 1)
    elif series == "B":
        for i in range(n - 2):
            link(i, i + 1)
        link(n - 2, n - 1, -2, -1)  # last simple root is short
    elif series == "C":
        for i in range(n - 2):
            link(i, i + 1)
        link(n - 2, n - 1, -1, -2)  # last simple root is long
    elif series == "D":
        for i in range(n - 3):
            link(i, i + 1)
        link(n - 3, n - 2)
        link(n - 3, n - 1)
    elif series == "E":
        for i, j in ((0, 2), (2, 3), (3, 4), (4, 5), (1, 3)):
            link(i, j)
        for i in range(5, n - 1):
            link(i, i + 1)
    elif series == "F":
        link(0, 1)
        link(1, 2, -2, -1)
        link(2, 3)
    elif series == "G":
        link(0, 1, -1, -3)  # first simple root is short
    return a


def _factor_symmetrizers(cartan: list[list[int]]) -> list[Fraction]:
    """Positive rationals d with d_j * A_ij symmetric, scaled so max(d) = 1."""
    n = len(cartan)
    d: list[Fraction | None] = [None] * n
    d[0] = Fraction(1)
    stack = [0]
    while stack:  # Dynkin diagrams of simple factors are connected
        i = stack.pop()
        for j in range(n):
            if i != j and cartan[i][j] != 0 and d[j] is None:
                d[j] = d[i] * cartan[j][i] / cartan[i][j]
                stack.append(j)
    values = [x for x in d if x is not None]
    top = max(values)
    return [x / top for x in values]


def _factor_positive_roots(cartan: list[list[int]]) -> list[tuple[int, ...]]:
    """Close the simple roots under root strings, level by level in height."""
    n = len(cartan)
    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    roots = set(simple)
    level = list(simple)
    while level:
        nxt = []
        for beta in level:
            for i in range(n):
                p = 0
                down = list(beta)
                down[i] -= 1
                while tuple(down) in roots:
                    p += 1
                    down[i] -= 1
                pairing = sum(beta[j] * cartan[j][i] for j in range(n))
                if p - pairing > 0:
                    up = list(beta)
                    up[i] += 1
                    t = tuple(up)
                    if t not in roots:
                        roots.add(t)
                        nxt.append(t)
        level = nxt
    return sorted(roots, key=lambda r: (sum(r), r))


def build_root_datum(spec: RootSystemSpec | str) -> RootDatum:
    """Construct the exact root datum for a spec (or spec string)."""
    if isinstance(spec, str):
        spec = RootSystemSpec.parse(spec)
    n = spec.rank
    blocks = [_factor_cartan(series, k) for series, k in spec.factors]

    cartan = [[0] * n for _ in range(n)]
    d: list[Fraction] = []
    pos_roots: list[tuple[int, ...]] = []
    offset = 0
    for block in blocks:
        k = len(block)
        for i in range(k):
            for j in range(k):
                cartan[offset + i][offset + j] = block[i][j]
        d.extend(_factor_symmetrizers(block))
        tail = n - offset - k
        for root in _factor_positive_roots(block):
            pos_roots.append((0,) * offset + root + (0,) * tail)
        offset += k

    inverse = rational.invert(cartan)
    gram = [[inverse[i][j] * d[j] for j in range(n)] for i in range(n)]
    return RootDatum(
        spec=spec,
        n=n,
        cartan=tuple(tuple(row) for row in cartan),
        d=tuple(d),
        gram_fw=tuple(tuple(row) for row in gram),
        pos_roots=tuple(pos_roots),
    )


def inner_product(datum: RootDatum, u: Weight, v: Weight) -> Fraction:
    """Invariant form (u, v), exact in the fundamental-weight basis."""
    if len(u.coords) != datum.n or len(v.coords) != datum.n:
        raise DimensionMismatchError(
            f"weights must have {datum.n} coordinates, got {len(u.coords)} and {len(v.coords)}"
        )
    total = Fraction(0)
    for i, ui in enumerate(u.coords):
        if ui:
            row = datum.gram_fw[i]
            total += ui * sum((row[j] * vj for j, vj in enumerate(v.coords) if vj), Fraction(0))
    return total


def is_dominant(datum: RootDatum, weight: Weight) -> bool:
    """True iff every fundamental-weight coordinate is >= 0."""
    if len(weight.coords) != datum.n:
        raise DimensionMismatchError(f"weight must have {datum.n} coordinates")
    return weight.is_dominant
