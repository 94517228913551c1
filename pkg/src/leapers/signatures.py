"""Signatures, rewrites, rearrangements and fundamental direction cycles.

Signature characters are serialized as ``S`` (+s), ``C`` (+c), ``s`` (-s)
and ``c`` (-c), so barring a character is just a case swap.
"""

from __future__ import annotations

from typing import Sequence

from .board import Leaper, Square
from .descent import HBAR, check_descent
from .dirgraph import DirectionGraph, cycle_graph, direction_of_move, least_rotation
from .errors import InconsistentSignature, NotRealizable

BASE = "SC" * 4

REWRITES = {
    "f": {"S": "s", "C": "SCS", "s": "S", "c": "scs"},
    "g": {"S": "CSC", "C": "c", "s": "csc", "c": "C"},
    "h": {"S": "SCSCS", "C": "scs", "s": "scscs", "c": "SCS"},
    HBAR: {"S": "csc", "C": "CSCSC", "s": "CSC", "c": "cscsc"},
}

_DOUBLE_BAR = str.maketrans("SCsc", "csCS")


def bar(s: str) -> str:
    return s.swapcase()


def double_bar(s: str) -> str:
    return s.translate(_DOUBLE_BAR)


def rewrite(kind: str, s: str) -> str:
    rule = REWRITES[kind]
    return "".join(rule[c] for c in s)


def rearrange(kind: str, pair: tuple[str, str]) -> tuple[str, str]:
    corner, side = pair
    if kind == "f":
        return side + corner + side, bar(side)
    if kind == "g":
        return bar(corner), corner + side + corner
    if kind == "h":
        return corner + side + corner + side + corner, bar(corner + side + corner)
    if kind == HBAR:
        return bar(side + corner + side), side + corner + side + corner + side
    raise ValueError(f"unknown lift {kind!r}")


def signature_of_descent(e: str) -> str:
    s = BASE
    for c in reversed(check_descent(e, extended=True)):
        s = rewrite(c, s)
    return s


def corner_side_of_descent(e: str) -> tuple[str, str]:
    pair = ("S", "C")
    for c in reversed(check_descent(e, extended=True)):
        pair = rearrange(c, pair)
    return pair


def expand_pair(pair: tuple[str, str]) -> str:
    return (pair[0] + pair[1]) * 4


def canonical_signature(s: str) -> str:
    k = least_rotation(s)
    return s[k:] + s[:k]


def _scheme(rows: dict) -> dict:
    return {c: {int(t[0]): int(t[1]) for t in pairs.split(",")} for c, pairs in rows.items()}


LABEL_SCHEMES = {
    "L": _scheme({"S": "14,36,58,72", "C": "25,47,61,83", "s": "27,41,63,85", "c": "16,38,52,74"}),
    "g": _scheme({"S": "25,47,61,83", "C": "18,32,54,76", "s": "16,38,52,74", "c": "23,45,67,81"}),
    "h": _scheme({"S": "12,34,56,78", "C": "23,45,67,81", "s": "21,43,65,87", "c": "18,32,54,76"}),
    "f": _scheme({"S": "21,43,65,87", "C": "14,36,58,72", "s": "12,34,56,78", "c": "27,41,63,85"}),
}


def generate_labels(sig: str, scheme: str) -> list[int]:
    """Out-direction of every vertex when walking the signature."""
    table = LABEL_SCHEMES[scheme]
    if not sig:
        raise InconsistentSignature("empty signature")
    start = 1 if 1 in table[sig[0]] else 2
    d = start
    out = []
    for c in sig:
        nxt = table[c].get(d)
        if nxt is None:
            raise InconsistentSignature(f"no move out of {c!r} after direction {d}")
        out.append(nxt)
        d = nxt
    if d != start:
        raise InconsistentSignature("walk does not close up")
    return out


def fundamental_cycle(e: str) -> DirectionGraph:
    return cycle_graph(generate_labels(signature_of_descent(e), "L"))


def second_fundamental(o: str, e: str) -> DirectionGraph:
    if o not in ("f", "g", "h"):
        raise ValueError(f"unknown origin {o!r}")
    return cycle_graph(generate_labels(expand_pair(corner_side_of_descent(e)), o))


def signature_of_cycle(L: Leaper, cycle: Sequence[Square], scheme: str = "L") -> str:
    """Read a signature off an oriented cycle of a skew leaper."""
    lookup = {(i, o): c for c, rows in LABEL_SCHEMES[scheme].items() for i, o in rows.items()}
    N = len(cycle)
    dirs = [
        direction_of_move(L, (cycle[(j + 1) % N][0] - cycle[j][0], cycle[(j + 1) % N][1] - cycle[j][1]))
        for j in range(N)
    ]
    return "".join(lookup[(dirs[j - 1], dirs[j])] for j in range(N))


def direct_counts(sig: str) -> tuple[int, int]:
    return sum(c in "Ss" for c in sig), sum(c in "Cc" for c in sig)


def ns_nc(e: str) -> tuple[int, int]:
    s, c = 4, 4
    for k in reversed(check_descent(e, extended=True)):
        if k == "f":
            s, c = s + 2 * c, c
        elif k == "g":
            s, c = s, 2 * s + c
        elif k == "h":
            s, c = 3 * s + 2 * c, 2 * s + c
        else:
            s, c = s + 2 * c, 2 * s + 3 * c
    return s, c


def recover_descent(counts) -> str:
    """Invert ns_nc; also accepts a signature string."""
    a, b = direct_counts(counts) if isinstance(counts, str) else counts
    out = []
    while (a, b) != (4, 4):
        if a > 2 * b:
            out.append("f")
            a, b = a - 2 * b, b
        elif 2 * a < b:
            out.append("g")
            a, b = a, b - 2 * a
        elif b < a < 2 * b:
            out.append("h")
            a, b = 2 * b - a, 2 * a - 3 * b
        elif a < b < 2 * a:
            out.append(HBAR)
            a, b = 2 * b - 3 * a, 2 * a - b
        else:
            raise NotRealizable(f"counts ({a},{b}) fit no lift")
        if a < 4 or b < 4:
            raise NotRealizable(f"counts drop below the base at ({a},{b})")
    return "".join(out)


_FLIP = str.maketrans("fg", "gf")
_COMPANION = str.maketrans({"f": "g", "g": "f", "h": HBAR, HBAR: "h"})


def flip(e: str) -> str:
    return check_descent(e, extended=True)[::-1].translate(_FLIP)


def companion(e: str) -> str:
    return check_descent(e, extended=True).translate(_COMPANION)


def equivalent_descents(e1: str, e2: str) -> bool:
    return e1 == e2 or companion(e1) == e2


def all_descents(max_len: int, alphabet: str = "fgh" + HBAR):
    """Every string over ``alphabet`` of length at most max_len, shortest first."""
    layer = [""]
    for _ in range(max_len + 1):
        yield from layer
        layer = [e + c for e in layer for c in alphabet]
