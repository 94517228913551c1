"""Grow a dual board from a seed cycle and check both tours over it.

    python demos/dual_boards.py
"""

from leapers.board import Leaper, build_leaper_graph
from leapers.descent import HBAR
from leapers.dirgraph import cycle_labels, extract
from leapers.duality import verify_dual_board
from leapers.perfect import build_dual_board, check_perfect, dual_cycle, long_cycle


def show(M, o, e):
    D = dual_cycle(M, o, e)
    B, L = build_dual_board(M, o, e)
    rep = check_perfect(D)
    dual = verify_dual_board(B, M, L)
    print(f"seed {M}, origin {o}, lifts {e or '-'}: {len(B)} squares, partner {L}, "
          f"perfect={rep.ok}, dual={dual}")
    return D, L


def main():
    show(Leaper(1, 2), "g", "")
    show(Leaper(2, 3), "g", "")
    D, L = show(Leaper(0, 1), "h", "h" + HBAR)

    # the long tour over that board, read back as direction labels
    G = extract(build_leaper_graph(L, long_cycle(D)))
    labels = "".join(map(str, cycle_labels(G)))
    print(f"{L} tour has {len(labels)} moves; first twenty directions {labels[:20]}")


if __name__ == "__main__":
    main()
