import itertools

import pytest

from weylmodel.cells import (
    cell_of_subset,
    cell_of_weight,
    closure_contains,
    complementary_cell,
    contains,
    enumerate_cells,
    free_coords,
    to_json_dict,
    weight_from_free_coords,
)
from weylmodel.errors import IndexOutOfRangeError, NotDominantError
from weylmodel.root_system import Weight, build_root_datum, inner_product

RANK3_SPECS = ["A1", "A2", "A3", "B2", "B3", "C3", "G2"]


def dominant_box(datum, bound):
    for coords in itertools.product(range(bound + 1), repeat=datum.n):
        yield Weight.from_seq(coords)


def test_cell_of_subset_examples():
    a2 = build_root_datum("A2")
    assert cell_of_subset(a2, []).m == 2  # open Weyl chamber
    assert cell_of_subset(a2, [1, 2]).m == 0
    ray = cell_of_subset(a2, [2])
    assert ray.m == 1
    assert ray.free == (1,)
    assert contains(ray, Weight.of(3, 0))  # positive multiple of the first fundamental weight


def test_cell_of_subset_rejects_bad_indices():
    a2 = build_root_datum("A2")
    with pytest.raises(IndexOutOfRangeError):
        cell_of_subset(a2, [3])
    with pytest.raises(IndexOutOfRangeError):
        cell_of_subset(a2, [0])


def test_contains_examples():
    a2 = build_root_datum("A2")
    ray = cell_of_subset(a2, [2])
    assert contains(ray, Weight.of(3, 0))
    assert not contains(ray, Weight.of(3, 1))
    chamber = cell_of_subset(a2, [])
    assert not contains(chamber, Weight.of(0, 5))  # wall point is outside the open cell


def test_closure_contains_examples():
    a2 = build_root_datum("A2")
    ray = cell_of_subset(a2, [2])
    assert closure_contains(ray, Weight.of(0, 0))
    assert closure_contains(ray, Weight.of(2, 0))
    assert not closure_contains(ray, Weight.of(0, 1))


def test_cell_of_weight_examples():
    a2 = build_root_datum("A2")
    assert cell_of_weight(a2, Weight.of(0, 3)).S == (1,)
    assert cell_of_weight(a2, Weight.of(0, 0)).S == (1, 2)
    assert cell_of_weight(a2, Weight.of(2, 3)).S == ()
    with pytest.raises(NotDominantError):
        cell_of_weight(a2, Weight.of(-1, 0))


def test_complementary_cell():
    a2 = build_root_datum("A2")
    assert complementary_cell(cell_of_subset(a2, [2])).S == (1,)
    assert complementary_cell(cell_of_subset(a2, [])).S == (1, 2)
    b2 = build_root_datum("B2")
    cell = cell_of_subset(b2, [1])
    other = complementary_cell(cell)
    assert other.S == (2,)
    assert cell.m + other.m == 2


@pytest.mark.parametrize("spec,count", [("A1", 2), ("A2", 4), ("A3", 8)])
def test_enumerate_cells_counts(spec, count):
    datum = build_root_datum(spec)
    cells = enumerate_cells(datum)
    assert len(cells) == count
    assert cells[0].S == ()  # bitmask order: empty subset first
    assert cells[-1].S == tuple(range(1, datum.n + 1))
    assert len({c.S for c in cells}) == count


@pytest.mark.parametrize("spec", RANK3_SPECS)
def test_partition_of_dominant_weights(spec):
    # every dominant weight lies in exactly one cell, the one pinning its zeros
    datum = build_root_datum(spec)
    cells = enumerate_cells(datum)
    for weight in dominant_box(datum, 10 if datum.n <= 2 else 6):
        members = [cell for cell in cells if contains(cell, weight)]
        assert len(members) == 1
        assert members[0] == cell_of_weight(datum, weight)


@pytest.mark.parametrize("spec", ["A2", "B2", "G2", "A3"])
def test_contains_implies_closure(spec):
    datum = build_root_datum(spec)
    cells = enumerate_cells(datum)
    for weight in dominant_box(datum, 3):
        for cell in cells:
            if contains(cell, weight):
                assert closure_contains(cell, weight)
            if closure_contains(cell, weight) and not contains(cell, weight):
                assert any(weight.coords[i - 1] == 0 for i in cell.free)


@pytest.mark.parametrize("spec", RANK3_SPECS)
def test_coordinate_test_matches_root_pairings(spec):
    # membership via coordinates agrees with pairing against the simple roots
    datum = build_root_datum(spec)
    alphas = [datum.simple_root(j) for j in range(1, datum.n + 1)]
    for cell in enumerate_cells(datum):
        pinned = set(cell.S)
        for weight in dominant_box(datum, 4):
            pairings = [inner_product(datum, weight, a) for a in alphas]
            direct = all(
                (pairings[j] == 0) if (j + 1) in pinned else (pairings[j] > 0)
                for j in range(datum.n)
            )
            assert direct == contains(cell, weight)


def test_complementarity_is_involution():
    datum = build_root_datum("B3")
    for cell in enumerate_cells(datum):
        assert complementary_cell(complementary_cell(cell)) == cell


def test_free_coordinate_embedding_round_trip():
    from fractions import Fraction

    datum = build_root_datum("A3")
    cell = cell_of_subset(datum, [2])
    weight = Weight.of(3, 0, "1/2")
    assert free_coords(cell, weight) == (Fraction(3), Fraction(1, 2))
    rebuilt = weight_from_free_coords(cell, free_coords(cell, weight))
    assert rebuilt == weight


def test_json_dict():
    datum = build_root_datum("A2")
    assert to_json_dict(cell_of_subset(datum, [2])) == {"S": [2], "m": 1}
