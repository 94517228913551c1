import pytest
from hypothesis import given, strategies as st

from leapers.board import Leaper, classify_cycle_types, decompose_center_board
from leapers.descent import HBAR, leaper_of_descent
from leapers.dirgraph import canonical_labels, cycle_labels, equivalent_as_cycles
from leapers.errors import InconsistentSignature, NotRealizable
from leapers.signatures import (
    BASE,
    all_descents,
    bar,
    canonical_signature,
    companion,
    corner_side_of_descent,
    direct_counts,
    double_bar,
    equivalent_descents,
    expand_pair,
    flip,
    fundamental_cycle,
    generate_labels,
    ns_nc,
    recover_descent,
    rearrange,
    rewrite,
    second_fundamental,
    signature_of_cycle,
    signature_of_descent,
)

extended = st.text(alphabet="fgh" + HBAR, max_size=5)
core = st.text(alphabet="fgh", max_size=4)


def rotation_of(a, b):
    return len(a) == len(b) and a in b + b


class TestRewrite:
    def test_f(self):
        assert rewrite("f", BASE) == "sSCS" * 4

    def test_g(self):
        assert rewrite("g", BASE) == "CSCc" * 4

    def test_h(self):
        assert rewrite("h", BASE) == "SCSCSscs" * 4

    @given(st.sampled_from("fgh" + HBAR), st.text(alphabet="SCsc", max_size=12))
    def test_commutes_with_bar(self, kind, s):
        # barring the input bars the output
        assert rewrite(kind, bar(s)) == bar(rewrite(kind, s))

    def test_bars(self):
        assert bar("SCsc") == "scSC"
        assert double_bar("SCsc") == "csCS"


class TestRearrange:
    def test_f(self):
        assert rearrange("f", ("S", "C")) == ("CSC", "c")

    def test_g(self):
        assert rearrange("g", ("S", "C")) == ("s", "SCS")

    def test_h(self):
        assert rearrange("h", ("S", "C")) == ("SCSCS", "scs")

    @given(extended)
    def test_pair_counts_follow_the_flip(self, e):
        assert direct_counts(expand_pair(corner_side_of_descent(e))) == ns_nc(flip(e))


class TestSignatureOfDescent:
    def test_examples(self):
        assert signature_of_descent("") == BASE
        assert corner_side_of_descent("") == ("S", "C")
        assert signature_of_descent("f") == "sSCS" * 4
        assert signature_of_descent("g") == "CSCc" * 4

    @pytest.mark.parametrize("e", ["", "f", "g", "h", "gg", "hg", "fgh"])
    def test_read_off_real_cycle(self, e):
        # the deepest cycle type of leaper(e) has descent e
        L = leaper_of_descent(e)
        types = classify_cycle_types(decompose_center_board(L), L)
        C = types[-1][1][0]
        got = signature_of_cycle(L, C)
        want = signature_of_descent(e)
        assert any(rotation_of(s, want) for s in (got, bar(got)[::-1], signature_of_cycle(L, C[::-1])))

    def test_canonical_signature_rotation(self):
        s = signature_of_descent("h")
        assert canonical_signature(s) == canonical_signature(s[3:] + s[:3])


class TestFundamental:
    def test_empty(self):
        assert canonical_labels(cycle_labels(fundamental_cycle(""))) == canonical_labels([1, 4, 7, 2, 5, 8, 3, 6])
        assert rotation_of("14725836", "47258361")

    def test_second_g(self):
        assert canonical_labels(cycle_labels(second_fundamental("g", ""))) == canonical_labels([2, 5, 4, 7, 6, 1, 8, 3])

    def test_second_h(self):
        assert canonical_labels(cycle_labels(second_fundamental("h", ""))) == canonical_labels([3, 4, 5, 6, 7, 8, 1, 2])

    def test_bad_origin(self):
        with pytest.raises(ValueError):
            second_fundamental("x", "")

    def test_inconsistent(self):
        with pytest.raises(InconsistentSignature):
            generate_labels("SS", "L")

    @given(extended)
    def test_length(self, e):
        a, b = ns_nc(e)
        assert fundamental_cycle(e).n == a + b


class TestCounts:
    @pytest.mark.parametrize("e,want", [("", (4, 4)), ("f", (12, 4)), ("h", (20, 12))])
    def test_examples(self, e, want):
        assert ns_nc(e) == want

    @given(extended)
    def test_recurrence_equals_direct_count(self, e):
        assert ns_nc(e) == direct_counts(signature_of_descent(e))

    @given(extended)
    def test_recover(self, e):
        assert recover_descent(ns_nc(e)) == e
        assert recover_descent(signature_of_descent(e)) == e

    @pytest.mark.parametrize("counts,e", [((12, 4), "f"), ((4, 4), ""), ((20, 12), "h")])
    def test_recover_examples(self, counts, e):
        assert recover_descent(counts) == e

    @pytest.mark.parametrize("counts", [(3, 4), (8, 8), (5, 4)])
    def test_unrealisable(self, counts):
        with pytest.raises(NotRealizable):
            recover_descent(counts)


class TestFlipCompanion:
    def test_examples(self):
        assert flip("f") == "g"
        assert flip("hfgh") == "hfgh"
        assert companion("hħ") == "ħh"

    def test_equivalence_examples(self):
        assert equivalent_descents("fh", "għ")
        assert equivalent_descents("hħ", "ħh")
        assert not equivalent_descents("hh", "hħ")

    @given(extended)
    def test_involutions(self, e):
        assert flip(flip(e)) == e
        assert companion(companion(e)) == e

    def test_agrees_with_cycle_search(self):
        ds = list(all_descents(2))
        for e1 in ds:
            for e2 in ds:
                cyc = equivalent_as_cycles(fundamental_cycle(e1), fundamental_cycle(e2)) is not None
                assert cyc == equivalent_descents(e1, e2), (e1, e2)


def test_all_descents_counts():
    assert [sum(1 for e in all_descents(k, "fgh") if len(e) == k) for k in range(4)] == [1, 3, 9, 27]
