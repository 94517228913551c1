"""Squares, boards, leapers and leaper graphs.

Squares are ``(x2, y2)`` tuples holding twice the coordinates of the cell
center.  Doubling keeps integer-centered and half-integer-centered cells in
exact integer arithmetic, so a leaper translation ``(p, q)`` moves a square by
``(2p, 2q)``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from math import gcd
from typing import Iterable, Sequence

from .errors import DegreeViolation, LeaperError, UnmatchedClass

Square = tuple[int, int]


@dataclass(frozen=True, order=True)
class Leaper:
    p: int
    q: int

    def __post_init__(self):
        if self.p < 0 or self.q < 0:
            raise LeaperError(f"negative leaper component: {self.p},{self.q}")
        if (self.p, self.q) == (0, 0):
            raise LeaperError("(0,0) is not a leaper")
        if self.p > self.q:
            raise LeaperError(f"leaper must be given with p <= q, got {self.p},{self.q}")

    @classmethod
    def of(cls, a: int, b: int) -> "Leaper":
        a, b = abs(a), abs(b)
        return cls(min(a, b), max(a, b))

    @property
    def orthogonal(self) -> bool:
        return self.p == 0

    @property
    def diagonal(self) -> bool:
        return self.p == self.q

    @property
    def skew(self) -> bool:
        return 0 < self.p < self.q

    @property
    def basic(self) -> bool:
        return gcd(self.p, self.q) == 1 and (self.p + self.q) % 2 == 1

    def translations(self) -> tuple:
        """Distinct move vectors in ordinary (undoubled) units, sorted."""
        return _translations(self.p, self.q, 1)

    def moves2(self) -> tuple:
        return _translations(self.p, self.q, 2)

    def __str__(self):
        return f"({self.p},{self.q})"


@lru_cache(maxsize=None)
def _translations(p: int, q: int, scale: int) -> tuple:
    vs = {(sx * a * scale, sy * b * scale) for a, b in ((p, q), (q, p)) for sx in (1, -1) for sy in (1, -1)}
    return tuple(sorted(vs))


@dataclass(frozen=True)
class Board:
    parity: tuple[int, int]
    squares: frozenset

    def __post_init__(self):
        px, py = self.parity
        for x, y in self.squares:
            if (x - px) % 2 or (y - py) % 2:
                raise LeaperError(f"square {(x, y)} does not match board parity {self.parity}")

    @classmethod
    def from_squares(cls, squares: Iterable[Square]) -> "Board":
        sq = frozenset((int(x), int(y)) for x, y in squares)
        if not sq:
            return cls((0, 0), sq)
        x, y = min(sq)
        return cls((x % 2, y % 2), sq)

    def __len__(self):
        return len(self.squares)

    def __contains__(self, a):
        return a in self.squares

    def __iter__(self):
        return iter(sorted(self.squares))


def rect_board(width: int, height: int) -> Board:
    """Origin-centered width x height rectangle."""
    xs = range(-(width - 1), width, 2)
    ys = range(-(height - 1), height, 2)
    return Board.from_squares((x, y) for x in xs for y in ys)


def square_board(size: int) -> Board:
    return rect_board(size, size)


def move_targets(L: Leaper, a: Square) -> list[Square]:
    x, y = a
    return [(x + dx, y + dy) for dx, dy in L.moves2()]


@dataclass(frozen=True)
class LeaperGraph:
    leaper: Leaper
    board: Board
    edges: frozenset = field(repr=False)

    def adjacency(self) -> dict:
        adj = {a: [] for a in self.board.squares}
        for a, b in self.edges:
            adj[a].append(b)
            adj[b].append(a)
        for nbrs in adj.values():
            nbrs.sort()
        return adj


def build_leaper_graph(L: Leaper, B: Board | Iterable[Square]) -> LeaperGraph:
    if not isinstance(B, Board):
        B = Board.from_squares(B)
    sq = B.squares
    edges = set()
    for a in sq:
        for b in move_targets(L, a):
            if b in sq and a < b:
                edges.add((a, b))
    return LeaperGraph(L, B, frozenset(edges))


def neighbors(L: Leaper, squares, a: Square) -> list[Square]:
    return sorted(b for b in move_targets(L, a) if b in squares)


def components(adj: dict) -> list[list[Square]]:
    seen = set()
    out = []
    for start in sorted(adj):
        if start in seen:
            continue
        comp = [start]
        seen.add(start)
        todo = deque([start])
        while todo:
            u = todo.popleft()
            for v in adj[u]:
                if v not in seen:
                    seen.add(v)
                    comp.append(v)
                    todo.append(v)
        out.append(sorted(comp))
    return out


def is_free(L: Leaper, B: Board | Iterable[Square]) -> bool:
    sq = B.squares if isinstance(B, Board) else frozenset(B)
    if not sq:
        raise LeaperError("is_free needs a nonempty board")
    start = min(sq)
    seen = {start}
    todo = [start]
    while todo:
        a = todo.pop()
        for b in move_targets(L, a):
            if b in sq and b not in seen:
                seen.add(b)
                todo.append(b)
    return len(seen) == len(sq)


def knuth_free_predicate(L: Leaper, width: int, height: int) -> bool:
    if width < 1 or height < 1 or width * height == 1:
        raise LeaperError("board must be larger than 1x1")
    p, q = min(L.p, L.q), max(L.p, L.q)
    return L.basic and min(width, height) >= p + q and max(width, height) >= 2 * q


def canonical_cycle(seq: Sequence[Square]) -> tuple:
    """Rotate to the least square and orient toward its lesser neighbor."""
    seq = list(seq)
    n = len(seq)
    if n < 3:
        return tuple(seq)
    i = seq.index(min(seq))
    fwd, back = seq[(i + 1) % n], seq[i - 1]
    if fwd <= back:
        return tuple(seq[i:] + seq[:i])
    rev = seq[::-1]
    j = n - 1 - i
    return tuple(rev[j:] + rev[:j])


def trace_cycle(adj: dict, start: Square) -> list[Square]:
    """Walk a component in which every vertex has degree two."""
    first = min(adj[start])
    cyc = [start]
    prev, cur = start, first
    while cur != start:
        cyc.append(cur)
        a, b = adj[cur]
        prev, cur = cur, (b if a == prev else a)
    return cyc


def cycle_edges(cycle: Sequence[Square]) -> set:
    n = len(cycle)
    return {tuple(sorted((cycle[i], cycle[(i + 1) % n]))) for i in range(n)}


def is_leaper_cycle(L: Leaper, cycle: Sequence[Square]) -> bool:
    n = len(cycle)
    if n < 3 or len(set(cycle)) != n:
        return False
    moves = set(L.moves2())
    return all(
        (cycle[(i + 1) % n][0] - cycle[i][0], cycle[(i + 1) % n][1] - cycle[i][1]) in moves
        for i in range(n)
    )


def graph_is_cycle(L: Leaper, squares, cycle: Sequence[Square] | None = None) -> bool:
    """True iff the L-graph over ``squares`` is a single Hamiltonian cycle
    (equal to ``cycle`` when one is given)."""
    G = build_leaper_graph(L, squares)
    adj = G.adjacency()
    if len(adj) < 3 or any(len(v) != 2 for v in adj.values()):
        return False
    cyc = trace_cycle(adj, min(adj))
    if len(cyc) != len(adj):
        return False
    if cycle is not None:
        return canonical_cycle(cyc) == canonical_cycle(cycle)
    return True


@dataclass(frozen=True)
class CycleDecomposition:
    isolated: frozenset
    cycles: tuple


def decompose_center_board(L: Leaper) -> CycleDecomposition:
    if not L.skew:
        raise LeaperError(f"{L} is not skew")
    p, q = L.p, L.q
    B = square_board(p + q)
    adj = build_leaper_graph(L, B).adjacency()
    h = q - p
    isolated = frozenset(a for a, nb in adj.items() if not nb)
    central = frozenset(a for a in B.squares if abs(a[0]) < h and abs(a[1]) < h)
    if isolated != central:
        raise DegreeViolation(f"isolated squares of {L} are not the central block")
    for a, nb in adj.items():
        if a not in central and len(nb) != 2:
            raise DegreeViolation(f"square {a} has degree {len(nb)} under {L}")
    seen = set(isolated)
    cycles = []
    for a in sorted(B.squares):
        if a in seen:
            continue
        cyc = trace_cycle(adj, a)
        seen.update(cyc)
        cycles.append(tuple(cyc))
    return CycleDecomposition(isolated, tuple(cycles))


def translation_key(squares) -> frozenset:
    x0, y0 = min(squares)
    return frozenset((x - x0, y - y0) for x, y in squares)


def classify_cycle_types(decomp: CycleDecomposition, L: Leaper) -> list:
    """Group cycles into translation classes and attach the type records."""
    from .descent import cycle_type_table

    classes: dict = {}
    for cyc in decomp.cycles:
        classes.setdefault(translation_key(cyc), []).append(cyc)
    table = cycle_type_table(L.p, L.q)
    by_len = {}
    for rec in table:
        if rec.length in by_len:
            raise UnmatchedClass(f"two cycle types of length {rec.length}")
        by_len[rec.length] = rec
    out = []
    for cycles in classes.values():
        rec = by_len.get(len(cycles[0]))
        if rec is None:
            raise UnmatchedClass(f"no type of length {len(cycles[0])} for {L}")
        out.append((rec.i, cycles))
    out.sort(key=lambda t: t[0])
    if [i for i, _ in out] != [rec.i for rec in table]:
        raise UnmatchedClass(f"classes of {L} do not match its type table")
    return out


def reduce_to_basic(p: int, q: int) -> tuple[Leaper, int, int]:
    if (p, q) == (0, 0):
        raise LeaperError("(0,0) is not a leaper")
    p, q = abs(p), abs(q)
    d = gcd(p, q)
    a, b = p // d, q // d
    if (a + b) % 2:
        return Leaper.of(a, b), d, 0
    return Leaper.of(abs(a - b) // 2, (a + b) // 2), d, 45


def rotate90(a: Square, k: int = 1) -> Square:
    x, y = a
    for _ in range(k % 4):
        x, y = -y, x
    return (x, y)
