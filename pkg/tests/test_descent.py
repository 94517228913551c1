from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given, strategies as st

import oracles
from leapers.board import Leaper, classify_cycle_types, decompose_center_board
from leapers.descent import (
    IDENTITY,
    LIFT_MATRICES,
    Ecf,
    cycle_length_ratio,
    cycle_type_table,
    descent_of,
    descent_of_ecf,
    ecf_of_descent,
    ecf_value,
    leaper_of_descent,
    matrix_product,
    matvec,
)
from leapers.errors import InvalidEcf, NotSkewBasic

core = st.text(alphabet="fgh", max_size=7)


def basic_pairs(limit):
    return [(p, q) for s in range(3, limit + 1, 2) for p in range(1, (s + 1) // 2) if gcd(p, s - p) == 1 for q in [s - p]]


class TestDescent:
    @pytest.mark.parametrize("pq,e", [((18, 41), "hfgh"), ((1, 2), ""), ((3, 4), "gg"), ((2, 3), "g"), ((1, 4), "f")])
    def test_known(self, pq, e):
        assert descent_of(*pq) == e

    @pytest.mark.parametrize("p,q", [(1, 3), (2, 4), (0, 1), (3, 3)])
    def test_rejects_non_basic(self, p, q):
        with pytest.raises(NotSkewBasic):
            descent_of(p, q)

    @pytest.mark.parametrize("p,q", basic_pairs(41))
    def test_matches_oracle(self, p, q):
        assert descent_of(p, q) == oracles.peel(p, q)

    @given(core)
    def test_round_trip(self, e):
        L = leaper_of_descent(e)
        assert (L.p, L.q) == oracles.unpeel(e)
        assert descent_of(L.p, L.q) == e


class TestMatrices:
    def test_product(self):
        assert matvec(matrix_product("hfgh"), (1, 2)) == (18, 41)
        assert matrix_product("") == IDENTITY
        assert matvec(LIFT_MATRICES["h"], (0, 1)) == (1, 2)

    @given(core)
    def test_unimodular(self, e):
        (a, b), (c, d) = matrix_product(e)
        assert abs(a * d - b * c) == 1


class TestEcf:
    def test_hfgh(self):
        ecf = ecf_of_descent("hfgh")
        assert str(ecf) == "[2+,4-,2+,2]"
        assert ecf_value(ecf) == Fraction(41, 18)

    def test_small(self):
        assert str(ecf_of_descent("g")) == "[2-,2]"
        assert ecf_value(ecf_of_descent("g")) == Fraction(3, 2)
        assert ecf_value(ecf_of_descent("")) == 2
        assert ecf_value(Ecf((2,), ())) == Fraction(2)
        assert ecf_value(Ecf((2, 2), ("+",))) == Fraction(5, 2)

    @given(core)
    def test_value_is_slope(self, e):
        L = leaper_of_descent(e)
        ecf = ecf_of_descent(e)
        assert ecf_value(ecf) == Fraction(L.q, L.p)
        assert ecf_value(ecf) == oracles.ecf_eval(ecf.terms, ecf.signs)
        assert descent_of_ecf(ecf) == e

    @pytest.mark.parametrize("terms,signs", [((), ()), ((2, 3), ("+",)), ((2, 2), ()), ((2, 2), ("*",)), ((2, 0), ("+",))])
    def test_invalid(self, terms, signs):
        with pytest.raises(InvalidEcf):
            Ecf(terms, signs)


class TestLengths:
    def test_examples(self):
        assert cycle_length_ratio(ecf_of_descent("g"), 2) == Fraction(4, 3)
        assert cycle_length_ratio(ecf_of_descent("h"), 2) == Fraction(8, 3)
        assert cycle_length_ratio(ecf_of_descent("g"), 1) == 2

    def test_index_range(self):
        with pytest.raises(ValueError):
            cycle_length_ratio(ecf_of_descent("g"), 3)


class TestTable:
    def test_23(self):
        t = cycle_type_table(2, 3)
        assert [(r.i, r.second_leaper, r.count, r.length, r.third_leaper) for r in t] == [
            (1, Leaper(1, 2), 1, 8, False),
            (2, Leaper(0, 1), 1, 16, True),
        ]

    def test_25(self):
        t = cycle_type_table(2, 5)
        assert [(r.second_leaper, r.count, r.length, r.third_leaper) for r in t] == [
            (Leaper(1, 2), 1, 8, False),
            (Leaper(0, 1), 1, 32, True),
        ]

    def test_38(self):
        t = cycle_type_table(3, 8)
        assert [r.second_leaper for r in t] == [Leaper(2, 3), Leaper(1, 2), Leaper(0, 1)]
        assert [r.count for r in t] == [1, 1, 1]
        # frozen from the brute-force component sizes (8, 32, 56) of the 11x11 board
        assert sorted(r.length for r in t) == oracles.cycle_lengths(3, 8)[1]

    @pytest.mark.parametrize("p,q", basic_pairs(17))
    def test_matches_decomposition(self, p, q):
        L = Leaper(p, q)
        types = classify_cycle_types(decompose_center_board(L), L)
        table = cycle_type_table(p, q)
        assert len(types) == len(table)
        for (i, cycles), r in zip(types, table):
            assert i == r.i
            assert len(cycles) == r.count
            assert {len(c) for c in cycles} == {r.length}
            assert r.length % 4 == 0 and gcd(r.l, r.d) == 1
