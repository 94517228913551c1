"""JSON encodings of boards, cycles, direction graphs and reports.

Every square is a pair of doubled coordinates and every document carries
``"coords": "doubled"``.
"""

from __future__ import annotations

import json

from .board import Board, Leaper
from .dirgraph import DirectionGraph
from .errors import InvalidSpec

COORDS = "doubled"


def _check(doc: dict, kind: str) -> dict:
    if doc.get("coords") != COORDS:
        raise InvalidSpec('expected "coords": "doubled"')
    if doc.get("type") != kind:
        raise InvalidSpec(f"expected a {kind} document, got {doc.get('type')!r}")
    return doc


def board_to_json(B: Board) -> dict:
    return {"type": "board", "coords": COORDS, "parity": list(B.parity), "squares": [list(a) for a in sorted(B.squares)]}


def board_from_json(doc: dict) -> Board:
    _check(doc, "board")
    return Board.from_squares(tuple(a) for a in doc["squares"])


def cycle_to_json(cycle, leaper: Leaper | None = None) -> dict:
    doc = {"type": "cycle", "coords": COORDS, "squares": [list(a) for a in cycle]}
    if leaper is not None:
        doc["leaper"] = [leaper.p, leaper.q]
    return doc


def cycle_from_json(doc: dict) -> tuple:
    _check(doc, "cycle")
    return tuple(tuple(a) for a in doc["squares"])


def _name(x):
    return list(x) if isinstance(x, tuple) else x


def dirgraph_to_json(G: DirectionGraph) -> dict:
    doc = {"type": "dirgraph", "coords": COORDS, "vertices": G.n, "arcs": [list(a) for a in G.half_arcs()]}
    if G.names:
        doc["names"] = [_name(x) for x in G.names]
    return doc


def dirgraph_from_json(doc: dict) -> DirectionGraph:
    _check(doc, "dirgraph")
    names = tuple(tuple(x) if isinstance(x, list) else x for x in doc.get("names", ()))
    return DirectionGraph.from_arcs(doc["vertices"], (tuple(a) for a in doc["arcs"]), names)


def dumps(doc) -> str:
    return json.dumps(doc, sort_keys=True, ensure_ascii=False)
