import pytest
from hypothesis import given, settings, strategies as st

import oracles
from leapers.board import Leaper, build_leaper_graph, rect_board, canonical_cycle, classify_cycle_types, decompose_center_board
from leapers.descent import LIFT_MATRICES, leaper_of_descent, matrix_product
from leapers.dirgraph import (
    DIRECTION_MATRICES,
    IDENTITY_PERM,
    PI_G,
    PI_H,
    PI_II,
    PI_REFLECT,
    PI_SHIFT,
    ZERO,
    DirectionGraph,
    apply_perm,
    canonical_labels,
    cycle_graph,
    cycle_graphs_equal,
    cycle_labels,
    direction_of_move,
    distance,
    equivalent_as_cycles,
    extract,
    find_duality,
    instantiate,
    is_coherent,
    madd,
    mmul,
    verify_dual_pair,
)
from leapers.errors import AmbiguousDirection, NontrivialCycleError, NotACycleGraph, NotALeaperMove
from leapers.frames import build_frame
from leapers.signatures import fundamental_cycle, second_fundamental

KNIGHT_LABELS = [4, 7, 2, 5, 8, 3, 6, 1]
descents = st.text(alphabet="fgh", max_size=4)


def knight_cycle():
    return decompose_center_board(Leaper(1, 2)).cycles[0]


def same_up_to_rotation(a, b):
    return canonical_labels(a) == canonical_labels(b)


class TestDirections:
    def test_knight_moves(self):
        L = Leaper(1, 2)
        assert direction_of_move(L, (4, 2)) == 1
        assert direction_of_move(L, (-2, 4)) == 3

    def test_orthogonal_is_ambiguous(self):
        with pytest.raises(AmbiguousDirection):
            direction_of_move(Leaper(0, 1), (0, 2))

    def test_not_a_move(self):
        with pytest.raises(NotALeaperMove):
            direction_of_move(Leaper(1, 2), (2, 2))

    @given(st.integers(1, 9), st.integers(1, 9))
    def test_matches_angular_order(self, p, dq):
        # frozen against the oracle's counterclockwise sort starting at ENE
        L = Leaper(p, p + dq)
        for i, (x, y) in oracles.direction_vectors(L.p, L.q).items():
            assert direction_of_move(L, (2 * x, 2 * y)) == i


class TestExtract:
    def test_knight_cycle(self):
        G = extract(build_leaper_graph(Leaper(1, 2), knight_cycle()))
        assert same_up_to_rotation(cycle_labels(G), KNIGHT_LABELS)

    def test_labels_match_oracle(self):
        C = knight_cycle()
        ordinary = [(x // 2, y // 2) for x, y in C]
        want = oracles.labels_of_cycle(1, 2, ordinary)
        G = extract(build_leaper_graph(Leaper(1, 2), C))
        assert oracles.same_cyclic(cycle_labels(G), want)

    @pytest.mark.parametrize("L", [Leaper(1, 2), Leaper(1, 3)])
    def test_nontrivial_cycle(self, L):
        # the 4x4 board already holds a 6-cycle whose direction matrices do not cancel
        with pytest.raises(NontrivialCycleError):
            extract(build_leaper_graph(L, rect_board(4, 4)))

    def test_single_edge(self):
        G = extract(build_leaper_graph(Leaper(1, 2), [(0, 0), (2, 4)]))
        assert G.n == 2
        assert sorted(i for _, _, i in G.arcs) == [2, 6]


class TestDistance:
    def setup_method(self):
        self.G = cycle_graph(KNIGHT_LABELS)

    def test_zero(self):
        assert distance(self.G, 3, 3) == ZERO

    def test_adjacent(self):
        assert distance(self.G, 0, 1) == DIRECTION_MATRICES[4]

    def test_antipodal(self):
        # four consecutive labels; summed entrywise by hand
        want = ((2, -2), (0, 0))
        total = ZERO
        for i in (4, 7, 2, 5):
            total = madd(total, DIRECTION_MATRICES[i])
        assert total == want
        assert distance(self.G, 0, 4) == want
        assert oracles.matrix_bfs_distance(self.G.arcs, DIRECTION_MATRICES, 0, 4) == want

    @settings(max_examples=20, deadline=None)
    @given(descents, st.data())
    def test_matches_bfs_oracle(self, e, data):
        G = fundamental_cycle(e)
        x = data.draw(st.integers(0, G.n - 1))
        y = data.draw(st.integers(0, G.n - 1))
        assert distance(G, x, y) == oracles.matrix_bfs_distance(G.arcs, DIRECTION_MATRICES, x, y)


class TestCoherence:
    def test_extracted(self):
        assert is_coherent(extract(build_leaper_graph(Leaper(2, 3), decompose_center_board(Leaper(2, 3)).cycles[0])))

    def test_missing_arc(self):
        # vertices 0,1 joined by direction 1; vertices 2,3 sit at the same offset with no arc
        G = DirectionGraph.from_arcs(4, [(0, 1, 1), (0, 2, 2), (2, 3, 1), (1, 3, 2)])
        bad = DirectionGraph.from_arcs(4, [(0, 1, 1), (0, 2, 2), (1, 3, 2)])
        assert is_coherent(G)
        assert not is_coherent(bad)

    def test_single_vertex(self):
        assert is_coherent(DirectionGraph(1, frozenset()))


class TestInstantiate:
    def test_knight(self):
        where, edges = instantiate(cycle_graph(KNIGHT_LABELS), Leaper(1, 2), (0, 0))
        squares = set(where.values())
        shift = min(squares)
        target = decompose_center_board(Leaper(1, 2)).cycles[0]
        t = (shift[0] - min(target)[0], shift[1] - min(target)[1])
        assert {(x - t[0], y - t[1]) for x, y in squares} == set(target)
        assert len(edges) == 8

    def test_23_shell(self):
        where, _ = instantiate(cycle_graph(KNIGHT_LABELS), Leaper(2, 3), (0, 0))
        sq = set(where.values())
        L = Leaper(2, 3)
        shell = dict(classify_cycle_types(decompose_center_board(L), L))[1][0]
        dx = min(shell)[0] - min(sq)[0]
        dy = min(shell)[1] - min(sq)[1]
        assert {(x + dx, y + dy) for x, y in sq} == set(shell)
        assert set(shell) <= build_frame(2, 3).shell

    def test_single_vertex(self):
        where, edges = instantiate(DirectionGraph(1, frozenset()), Leaper(1, 2), (4, 6))
        assert where == {0: (4, 6)} and not edges

    @settings(max_examples=20, deadline=None)
    @given(descents, st.integers(1, 6), st.integers(1, 7))
    def test_round_trip(self, e, p, dq):
        L = Leaper(p, p + dq)
        G = fundamental_cycle(e)
        where, edges = instantiate(G, L, (0, 0))
        if len(set(where.values())) < G.n:
            return  # squares collide for this leaper
        try:
            back = extract(build_leaper_graph(L, set(where.values())))
        except NontrivialCycleError:
            return  # extra moves for this leaper; finitely many such cases
        if len(back.arcs) == len(G.arcs):
            assert cycle_graphs_equal(back, G)

    def test_round_trip_collision_excluded(self):
        where, _ = instantiate(fundamental_cycle("g"), Leaper(1, 2), (0, 0))
        with pytest.raises(NontrivialCycleError):
            extract(build_leaper_graph(Leaper(1, 2), set(where.values())))


class TestPermutations:
    def test_shift_order(self):
        assert PI_SHIFT ** 8 == IDENTITY_PERM
        assert PI_SHIFT ** 3 != IDENTITY_PERM

    def test_II_g_is_h(self):
        assert PI_II @ PI_G == PI_H

    def test_reflect_involution(self):
        assert PI_REFLECT @ PI_REFLECT == IDENTITY_PERM


class TestEquivalence:
    def test_self(self):
        G = fundamental_cycle("gh")
        assert equivalent_as_cycles(G, G) is not None

    @pytest.mark.parametrize("e,c", [("f", "g"), ("h", "ħ"), ("fh", "għ"), ("hħ", "ħh")])
    def test_companions(self, e, c):
        assert equivalent_as_cycles(fundamental_cycle(e), fundamental_cycle(c)) is not None

    def test_hh_vs_hhbar(self):
        assert equivalent_as_cycles(fundamental_cycle("hh"), fundamental_cycle("hħ")) is None

    def test_not_a_cycle(self):
        with pytest.raises(NotACycleGraph):
            cycle_labels(DirectionGraph.from_arcs(2, [(0, 1, 1)]))


class TestDuality:
    def test_identity_rejected(self):
        G = fundamental_cycle("")
        assert not verify_dual_pair(G, G, {k: k for k in range(G.n)}, DIRECTION_MATRICES[2])

    def test_empty_g(self):
        got = find_duality(second_fundamental("g", ""), fundamental_cycle(""), matrix=LIFT_MATRICES["g"])
        assert got is not None

    @pytest.mark.parametrize("e", ["", "f", "g", "h", "gh", "fg"])
    @pytest.mark.parametrize("o", ["g", "h"])
    def test_extracted_pairs(self, e, o):
        # both leaper graphs over the second cycle's squares, vertex-aligned by square
        from leapers.frames import canonical_second_cycle
        from leapers.duality import psi_for_descent

        L = leaper_of_descent(e + o)
        C = dict(classify_cycle_types(decompose_center_board(L), L))[psi_for_descent(e)][0]
        M, D = canonical_second_cycle(L.p, L.q, C)
        sq = D.squares()
        G2 = extract(build_leaper_graph(M, sq))
        G1 = extract(build_leaper_graph(L, sq))
        assert verify_dual_pair(G2, G1, {k: k for k in range(G2.n)}, matrix_product(e + o))

    def test_size_mismatch(self):
        assert find_duality(fundamental_cycle(""), fundamental_cycle("g")) is None


def test_apply_perm_keeps_shape():
    G = fundamental_cycle("h")
    H = apply_perm(PI_SHIFT, G)
    assert H.n == G.n and len(H.arcs) == len(G.arcs)
    assert cycle_labels(H) == [PI_SHIFT(i) for i in cycle_labels(G)]


def test_mmul_identity():
    I = DIRECTION_MATRICES[2]
    for A in DIRECTION_MATRICES.values():
        assert mmul(A, I) == A == mmul(I, A)
