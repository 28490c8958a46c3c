from fractions import Fraction as Q

import pytest

from weylmodel import rational
from weylmodel.errors import DimensionMismatchError, IndexOutOfRangeError, UnsupportedTypeError
from weylmodel.root_system import (
    RootSystemSpec,
    Weight,
    build_root_datum,
    inner_product,
    is_dominant,
)

# Positive-root counts from the classification tables
# (A_n: n(n+1)/2, B_n/C_n: n^2, D_n: n(n-1), plus the exceptional values).
POSITIVE_ROOT_COUNTS = {
    "A1": 1, "A2": 3, "A3": 6, "A4": 10, "A5": 15, "A6": 21,
    "B2": 4, "B3": 9, "B4": 16, "B5": 25, "B6": 36,
    "C3": 9, "C4": 16, "C5": 25, "C6": 36,
    "D4": 12, "D5": 20, "D6": 30,
    "G2": 6, "F4": 24, "E6": 36,
}


def test_parse_spec_strings():
    assert str(RootSystemSpec.parse("A2")) == "A2"
    assert str(RootSystemSpec.parse("a1xb3")) == "A1xB3"
    assert RootSystemSpec.parse("A1xA1").rank == 2


@pytest.mark.parametrize("bad", ["Z9", "", "A", "B1", "C2", "D3", "E5", "E9", "F3", "G3", "A0", "AxB"])
def test_parse_rejects_invalid_specs(bad):
    with pytest.raises(UnsupportedTypeError):
        RootSystemSpec.parse(bad)


def test_a1_datum_smallest_case():
    datum = build_root_datum("A1")
    assert datum.cartan == ((2,),)
    assert datum.d == (Q(1),)
    assert datum.pos_roots == ((1,),)
    assert datum.gram_fw == ((Q(1, 2),),)


def test_a2_datum_hand_inverted_gram():
    # Cartan [[2,-1],[-1,2]] inverted by hand: (1/3)[[2,1],[1,2]]; d = (1,1).
    datum = build_root_datum("A2")
    assert datum.cartan == ((2, -1), (-1, 2))
    assert datum.gram_fw == ((Q(2, 3), Q(1, 3)), (Q(1, 3), Q(2, 3)))
    assert len(datum.pos_roots) == 3
    assert set(datum.pos_roots) == {(1, 0), (0, 1), (1, 1)}


def test_g2_datum():
    datum = build_root_datum("G2")
    assert len(datum.pos_roots) == 6
    assert datum.d == (Q(1, 3), Q(1))
    assert max(datum.d) / min(datum.d) == 3
    # closing the two simple roots under root strings gives the known list
    assert set(datum.pos_roots) == {(1, 0), (0, 1), (1, 1), (2, 1), (3, 1), (3, 2)}


@pytest.mark.parametrize("spec,count", sorted(POSITIVE_ROOT_COUNTS.items()))
def test_positive_root_counts(spec, count):
    assert len(build_root_datum(spec).pos_roots) == count


def test_product_datum_blocks():
    datum = build_root_datum("A1xA1")
    assert datum.n == 2
    assert datum.cartan == ((2, 0), (0, 2))
    assert set(datum.pos_roots) == {(1, 0), (0, 1)}
    assert datum.gram_fw == ((Q(1, 2), Q(0)), (Q(0), Q(1, 2)))

    mixed = build_root_datum("A2xG2")
    assert mixed.n == 4
    assert len(mixed.pos_roots) == 3 + 6
    # factors are orthogonal under the invariant form
    for i in (0, 1):
        for j in (2, 3):
            assert mixed.gram_fw[i][j] == 0


@pytest.mark.parametrize("spec", ["A2", "A3", "B2", "B3", "C3", "D4", "F4", "G2", "E6", "A1xB2"])
def test_cartan_round_trip(spec):
    # 2(a_i, a_j)/(a_j, a_j) recovers the Cartan matrix from the Gram matrix.
    datum = build_root_datum(spec)
    alphas = [datum.simple_root(j) for j in range(1, datum.n + 1)]
    for i in range(datum.n):
        for j in range(datum.n):
            pairing = inner_product(datum, alphas[i], alphas[j])
            assert 2 * pairing / (2 * datum.d[j]) == datum.cartan[i][j]


@pytest.mark.parametrize("spec", ["A2", "B3", "C3", "G2", "F4", "A1xA1"])
def test_fundamental_weight_pairing(spec):
    # (w_i, a_j) = delta_ij d_j is the defining property of the basis.
    datum = build_root_datum(spec)
    for i in range(1, datum.n + 1):
        omega = Weight.from_seq(int(i == k) for k in range(1, datum.n + 1))
        for j in range(1, datum.n + 1):
            expected = datum.d[j - 1] if i == j else Q(0)
            assert inner_product(datum, omega, datum.simple_root(j)) == expected


@pytest.mark.parametrize("spec", ["A1", "A3", "B3", "C3", "D4", "G2", "F4", "E6", "A2xB2"])
def test_gram_positive_definite(spec):
    datum = build_root_datum(spec)
    minors = rational.leading_principal_minors([list(r) for r in datum.gram_fw])
    assert all(minor > 0 for minor in minors)
    for i in range(datum.n):
        for j in range(datum.n):
            assert datum.gram_fw[i][j] == datum.gram_fw[j][i]


def test_inner_product_examples():
    a2 = build_root_datum("A2")
    assert inner_product(a2, Weight.of(1, 0), Weight.of(0, 1)) == Q(1, 3)
    assert inner_product(a2, Weight.of(0, 0), Weight.of(5, -7)) == 0
    a1 = build_root_datum("A1")
    assert inner_product(a1, Weight.of(1), Weight.of(1)) == Q(1, 2)


def test_inner_product_bilinear_symmetric():
    datum = build_root_datum("B3")
    u, v, w = Weight.of(1, 2, 3), Weight.of("1/2", 0, -1), Weight.of(0, "2/5", 7)
    assert inner_product(datum, u, v) == inner_product(datum, v, u)
    uv = inner_product(datum, u, w) + inner_product(datum, v, w)
    combined = Weight.from_seq(a + b for a, b in zip(u.coords, v.coords))
    assert inner_product(datum, combined, w) == uv


def test_inner_product_dimension_mismatch():
    datum = build_root_datum("A2")
    with pytest.raises(DimensionMismatchError):
        inner_product(datum, Weight.of(1), Weight.of(1, 2))


def test_is_dominant():
    datum = build_root_datum("A2")
    assert is_dominant(datum, Weight.of(1, 2))
    assert not is_dominant(datum, Weight.of(-1, 0))
    assert is_dominant(datum, Weight.of(0, 0))
    with pytest.raises(DimensionMismatchError):
        is_dominant(datum, Weight.of(1))


def test_weight_predicates():
    assert Weight.of(1, 2).is_integral
    assert not Weight.of("1/2", 1).is_integral
    assert Weight.of("1/2", 1).is_dominant


def test_simple_root_index_range():
    datum = build_root_datum("A2")
    with pytest.raises(IndexOutOfRangeError):
        datum.simple_root(3)
    with pytest.raises(IndexOutOfRangeError):
        datum.simple_root(0)
