"""Walk through the cycles of a leaper on its (p+q)-square board.

    python demos/second_leaper.py 3 8
"""

import sys

from leapers.board import Leaper, classify_cycle_types, decompose_center_board
from leapers.descent import cycle_type_table, descent_of, ecf_of_descent, ecf_value
from leapers.frames import canonical_second_cycle, third_leaper_cycle
from leapers.errors import Inapplicable


def main(p=3, q=8):
    L = Leaper(p, q)
    e = descent_of(p, q)
    ecf = ecf_of_descent(e)
    print(f"{L}: descent {e or '(empty)'}, continued fraction {ecf} = {ecf_value(ecf)}")

    dec = decompose_center_board(L)
    print(f"{len(dec.isolated)} squares have no move; the rest split into {len(dec.cycles)} cycles")

    table = {r.i: r for r in cycle_type_table(p, q)}
    for i, cycles in classify_cycle_types(dec, L):
        r = table[i]
        M, D = canonical_second_cycle(p, q, cycles[0])
        print(f"  type {i}: {len(cycles)} x {len(cycles[0])}-cycle, predicted {r.count} x {r.length}; "
              f"also toured by {M}")
        if M == Leaper(0, 1):
            try:
                T = third_leaper_cycle(D)
                print(f"    every third square of that tour is a knight's tour of length {len(T)}")
            except Inapplicable as err:
                print(f"    no knight's tour from every third square ({err})")


if __name__ == "__main__":
    main(*map(int, sys.argv[1:3]))
