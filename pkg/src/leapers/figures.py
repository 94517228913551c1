"""Named figures used for the committed golden drawings."""

from __future__ import annotations

from .board import Leaper, build_leaper_graph, decompose_center_board, classify_cycle_types, square_board
from .frames import canonical_second_cycle
from .pinwheel import PinwheelSpec, build_pinwheel
from .svg import PALETTE, Overlay, RenderSpec, edge_overlays, render_svg


def knight_3x3() -> str:
    L = Leaper(1, 2)
    dec = decompose_center_board(L)
    return render_svg(square_board(3), RenderSpec(overlays=tuple(Overlay(c) for c in dec.cycles)))


def _pair_overlays(L: Leaper, second: bool):
    out = []
    for i, cycles in classify_cycle_types(decompose_center_board(L), L):
        colour = PALETTE[(i - 1) % len(PALETTE)]
        for C in sorted(cycles):
            pts = canonical_second_cycle(L.p, L.q, C)[1].cycle() if second else C
            out.append(Overlay(tuple(pts), colour))
    return tuple(out)


def pair_23(second: bool = False) -> str:
    """The 5x5 board with the (2,3) cycles, or with their second-leaper cycles."""
    L = Leaper(2, 3)
    return render_svg(square_board(5), RenderSpec(overlays=_pair_overlays(L, second)))


def pinwheel_w4_12() -> str:
    W = build_pinwheel(PinwheelSpec(4, 1, 2))
    G = build_leaper_graph(W.spec.leaper, W.squares)
    return render_svg(W.squares, RenderSpec(cell_px=8, overlays=edge_overlays(G, width=1), show_grid=True, dots=True))


FIGURES = {
    "knight-3x3": knight_3x3,
    "pair-2-3": lambda: pair_23(False),
    "pair-2-3-second": lambda: pair_23(True),
    "pinwheel-4-1-2": pinwheel_w4_12,
}
