"""Frames, the f/g/h lifts, proper cycles and canonical second-leaper cycles.

An (m, n)-frame is the origin-centered (m+n)x(m+n) board with the central
(n-m)x(n-m) block removed.  Its eight sections are indexed 0..7 counter-
clockwise starting from E; even indices are side sections, odd ones corners.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .board import (
    Leaper,
    Square,
    build_leaper_graph,
    is_leaper_cycle,
    move_targets,
    reduce_to_basic,
    rotate90,
)
from .descent import HBAR, lift_params
from .errors import (
    Inapplicable,
    InvalidOrigin,
    InvalidProportions,
    LeaperError,
    NotACycleOfL,
    NotAFrameCycle,
    NotProper,
    NotSkewBasic,
)

DIRS = ("E", "NE", "N", "NW", "W", "SW", "S", "SE")
_SIGNS = {(1, 0): 0, (1, 1): 1, (0, 1): 2, (-1, 1): 3, (-1, 0): 4, (-1, -1): 5, (0, -1): 6, (1, -1): 7}


@dataclass(frozen=True)
class Frame:
    m: int
    n: int
    squares: frozenset
    sections: tuple
    shell: frozenset
    core: frozenset

    def section_of(self, a: Square) -> int | None:
        x, y = a
        h, o = self.n - self.m, self.m + self.n
        if max(abs(x), abs(y)) >= o:
            return None
        sx = 1 if x > h else -1 if x < -h else 0
        sy = 1 if y > h else -1 if y < -h else 0
        return _SIGNS.get((sx, sy))

    def section(self, name: str) -> frozenset:
        return self.sections[DIRS.index(name)]


def _in_shell(m: int, n: int, a: Square, i: int) -> bool:
    x, y = rotate90(a, -(i // 2))
    if 2 * m >= n:
        s = n - m
        if i % 2 == 0:
            return s < x < 3 * s and abs(y) < s
        return x > 3 * m - n and y > 3 * m - n
    if 3 * m > n:
        s = 3 * m - n
        if i % 2 == 0:
            return x > m + n - 2 * s and abs(y) < s
        return n - m < x < n - m + 2 * s and n - m < y < n - m + 2 * s
    return False


@lru_cache(maxsize=None)
def build_frame(m: int, n: int) -> Frame:
    if not 0 <= m < n:
        raise InvalidProportions(f"frame needs 0 <= m < n, got ({m},{n})")
    h, o = n - m, m + n
    cells = [(x, y) for x in range(-(o - 1), o, 2) for y in range(-(o - 1), o, 2)]
    sq = frozenset(a for a in cells if not (abs(a[0]) < h and abs(a[1]) < h))
    probe = Frame(m, n, sq, (), frozenset(), frozenset())
    secs = [set() for _ in range(8)]
    shell = set()
    for a in sq:
        i = probe.section_of(a)
        secs[i].add(a)
        if _in_shell(m, n, a, i):
            shell.add(a)
    return Frame(m, n, sq, tuple(frozenset(s) for s in secs), frozenset(shell), sq - frozenset(shell))


def lift_vectors(kind: str, m: int, n: int) -> list[Square]:
    """Doubled translation for each of the eight sections."""
    side, corner = {
        "f": ((m + n, 0), (m, m)),
        "g": ((n - m, 0), (n, n)),
        "h": ((m + n, 0), (n, n)),
    }[kind]
    side = (2 * side[0], 2 * side[1])
    corner = (2 * corner[0], 2 * corner[1])
    out = []
    for k in range(4):
        out += [rotate90(side, k), rotate90(corner, k)]
    return out


def target_frame(kind: str, F: Frame) -> Frame:
    return build_frame(*lift_params(kind, F.m, F.n))


def lift_set(kind: str, F: Frame, S) -> frozenset:
    S = frozenset(S)
    if not S <= F.squares:
        raise NotAFrameCycle("set is not inside the frame")
    H = target_frame(kind, F)
    out = set()
    for (vx, vy), sec in zip(lift_vectors(kind, F.m, F.n), H.sections):
        out.update(b for b in ((x + vx, y + vy) for x, y in S) if b in sec)
    return frozenset(out)


def _images(kind: str, F: Frame, H: Frame, a: Square) -> list[Square]:
    return [
        (a[0] + vx, a[1] + vy)
        for (vx, vy), sec in zip(lift_vectors(kind, F.m, F.n), H.sections)
        if (a[0] + vx, a[1] + vy) in sec
    ]


# squares produced by one square of a side / corner section
REPLACEMENT_SIZES = {"f": (1, 3), "g": (3, 1), "h": (5, 3)}


def _as_path(L: Leaper, pts: list[Square]) -> list[Square]:
    if len(pts) == 1:
        return pts
    pool = set(pts)
    nb = {a: [b for b in move_targets(L, a) if b in pool] for a in pts}
    ends = sorted(a for a in pts if len(nb[a]) == 1)
    if len(ends) != 2 or any(len(v) > 2 for v in nb.values()):
        raise NotAFrameCycle("images of a square do not form a path")
    path = [ends[0]]
    while len(path) < len(pts):
        nxt = [b for b in nb[path[-1]] if b not in path[-2:]]
        path.append(nxt[0])
    return path


def lift_cycle(kind: str, F: Frame, C: Sequence[Square]) -> list[Square]:
    """Replace every square of an L_F-cycle by the path of its images."""
    LF = Leaper(F.m, F.n)
    if not is_leaper_cycle(LF, C) or not set(C) <= F.squares:
        raise NotAFrameCycle(f"not a cycle of {LF} inside the ({F.m},{F.n})-frame")
    H = target_frame(kind, F)
    LH = Leaper(H.m, H.n)
    moves = set(LH.moves2())
    side_n, corner_n = REPLACEMENT_SIZES[kind]

    def linked(a, b):
        return (b[0] - a[0], b[1] - a[1]) in moves

    pieces = []
    for a in C:
        imgs = _images(kind, F, H, a)
        want = corner_n if F.section_of(a) % 2 else side_n
        if len(imgs) != want:
            raise LeaperError(f"{kind}-lift of {a} gave {len(imgs)} squares, expected {want}")
        pieces.append(_as_path(LH, imgs))
    for first in (pieces[0], pieces[0][::-1]):
        out = list(first)
        ok = True
        for P in pieces[1:]:
            if linked(out[-1], P[0]):
                out += P
            elif linked(out[-1], P[-1]):
                out += P[::-1]
            else:
                ok = False
                break
        if ok and linked(out[-1], out[0]):
            return out
    raise LeaperError(f"{kind}-lift replacement paths do not close into a cycle")


def _shift(path, v):
    return tuple((x + v[0], y + v[1]) for x, y in path)


def _rev(path):
    return tuple(reversed(path))


def _cat(*paths):
    out = ()
    for P in paths:
        out += tuple(P)
    return out


def lift_paths(kind: str, paths, p: int, q: int) -> tuple:
    """The eight paths of the lifted partitioned cycle (doubled coordinates)."""
    a = paths
    side = 2 * (q - p if kind == "g" else p + q), 0
    corner = (2 * p, 2 * p) if kind == "f" else (2 * q, 2 * q)
    out = []
    for k in range(4):
        j = 2 * k
        A = lambda i: a[(j + i) % 8]
        if kind == "f":
            bs = _cat(_rev(A(5)), _rev(A(4)), _rev(A(3)))
            bc = A(1)
        elif kind == "g":
            bs = A(0)
            bc = _cat(_rev(A(6)), _rev(A(5)), _rev(A(4)))
        elif kind == "h":
            bs = _cat(_rev(A(6)), _rev(A(5)), _rev(A(4)), _rev(A(3)), _rev(A(2)))
            bc = _cat(A(0), A(1), A(2))
        elif kind == HBAR:
            bs = _cat(A(7), A(0), A(1))
            bc = _cat(_rev(A(7)), _rev(A(6)), _rev(A(5)), _rev(A(4)), _rev(A(3)))
        else:
            raise ValueError(f"unknown lift {kind!r}")
        out.append(_shift(bs, rotate90(side, k)))
        out.append(_shift(bc, rotate90(corner, k)))
    return tuple(out)


def initial_paths(M: Leaper, o: str) -> tuple:
    r, s = M.p, M.q
    if o == "f":
        if r == 0:
            raise InvalidOrigin("origin f needs r != 0")
        e, c = (r + s, 0), (r, r)
    elif o == "g":
        if r == s:
            raise InvalidOrigin("origin g needs r != s")
        e, c = (s - r, 0), (s, s)
    elif o == "h":
        e, c = (r + s, 0), (s, s)
    else:
        raise InvalidOrigin(f"unknown origin {o!r}")
    e, c = (2 * e[0], 2 * e[1]), (2 * c[0], 2 * c[1])
    out = []
    for k in range(4):
        out += [(rotate90(e, k),), (rotate90(c, k),)]
    return tuple(out)


def identity_translation(i: int, p: int, q: int) -> Square:
    """Doubled translation carrying paths i, i+1 onto the reversed i+5, i+4."""
    if i % 2 == 0:
        return rotate90((-2 * q, -2 * p), i // 2)
    return rotate90((-2 * p, -2 * q), (i - 1) // 2)


def translation_failures(paths, p: int, q: int, which=range(8)) -> list[int]:
    bad = []
    for i in which:
        lhs = _shift(_cat(paths[i], paths[(i + 1) % 8]), identity_translation(i, p, q))
        rhs = _cat(_rev(paths[(i + 5) % 8]), _rev(paths[(i + 4) % 8]))
        if lhs != rhs:
            bad.append(i)
    return bad


@dataclass(frozen=True)
class EightPathCycle:
    """A cycle split into eight consecutive paths a^E .. a^SE."""

    leaper: Leaper
    params: tuple
    paths: tuple

    def cycle(self) -> list[Square]:
        return [a for P in self.paths for a in P]

    def squares(self) -> frozenset:
        return frozenset(self.cycle())

    def __len__(self):
        return sum(len(P) for P in self.paths)

    def path(self, name: str) -> tuple:
        return self.paths[DIRS.index(name)]

    def translated(self, v: Square):
        return type(self)(self.leaper, self.params, tuple(_shift(P, v) for P in self.paths))


class ProperCycle(EightPathCycle):
    pass


def proper_failures(D: EightPathCycle) -> list[str]:
    p, q = D.params
    F = build_frame(p, q)
    out = []
    for i, P in enumerate(D.paths):
        if not P:
            out.append(f"path {DIRS[i]} is empty")
        elif any(a not in F.sections[i] for a in P):
            out.append(f"path {DIRS[i]} leaves its section")
    for i in translation_failures(D.paths, p, q):
        out.append(f"translation identity at {DIRS[i]}/{DIRS[(i + 1) % 8]} fails")
    if not is_leaper_cycle(D.leaper, D.cycle()):
        out.append(f"consecutive squares are not {D.leaper}-moves")
    return out


def check_proper(D: EightPathCycle) -> ProperCycle:
    bad = proper_failures(D)
    if bad:
        raise NotProper("; ".join(bad))
    return D if isinstance(D, ProperCycle) else ProperCycle(D.leaper, D.params, D.paths)


def lift_proper(kind: str, F: Frame, D: ProperCycle) -> ProperCycle:
    if tuple(D.params) != (F.m, F.n):
        raise NotProper("proper cycle belongs to a different frame")
    check_proper(D)
    paths = lift_paths(kind, D.paths, F.m, F.n)
    return check_proper(ProperCycle(D.leaper, lift_params(kind, F.m, F.n), paths))


def _peel(m: int, n: int) -> tuple[str, int, int]:
    if 3 * m < n:
        return "f", m, n - 2 * m
    if 2 * m > n:
        return "g", 2 * m - n, m
    return "h", n - 2 * m, m


def _second(m: int, n: int, S: frozenset) -> tuple[Leaper, ProperCycle]:
    H = build_frame(m, n)
    if (m, n) == (1, 2):
        if S != H.squares:
            raise NotACycleOfL("not the (1,2)-frame cycle")
        M = Leaper(0, 1)
        return M, ProperCycle(M, (1, 2), initial_paths(M, "h"))
    kind, m2, n2 = _peel(m, n)
    if kind != "f" and S <= H.shell:
        M = Leaper(m2, n2)
        seed = initial_paths(M, kind)
        (ex, ey), = [a for a in S if H.section_of(a) == 0]
        t = (ex - seed[0][0][0], ey - seed[0][0][1])
        D = ProperCycle(M, (m, n), tuple(_shift(P, t) for P in seed))
        if D.squares() != S:
            raise NotACycleOfL("shell squares do not form a shell cycle")
        return M, D
    F = build_frame(m2, n2)
    vecs = lift_vectors(kind, m2, n2)
    pre = set()
    for a in S:
        vx, vy = vecs[H.section_of(a)]
        b = (a[0] - vx, a[1] - vy)
        if b not in F.squares:
            raise NotACycleOfL(f"square {a} has no preimage under {kind}")
        pre.add(b)
    M, D = _second(m2, n2, frozenset(pre))
    D = lift_proper(kind, F, D)
    if D.squares() != S:
        raise NotACycleOfL("lifted cycle does not reproduce the input squares")
    return M, D


def canonical_second_cycle(p: int, q: int, C: Sequence[Square]) -> tuple[Leaper, ProperCycle]:
    L = Leaper.of(p, q)
    if not L.skew or (L.p + L.q) % 2 == 0:
        raise NotSkewBasic(f"{L} is not skew with odd sum")
    if not is_leaper_cycle(L, C):
        raise NotACycleOfL(f"input is not a cycle of {L}")
    base, d, _ = reduce_to_basic(L.p, L.q)
    if d == 1:
        return _second(L.p, L.q, frozenset(C))
    # every square of C shares one residue class modulo d
    half = (d - 1) // 2
    cx, cy = ((C[0][0] // 2 + half) % d - half, (C[0][1] // 2 + half) % d - half)
    small = frozenset(((x // 2 - cx) // d * 2, (y // 2 - cy) // d * 2) for x, y in C)
    M, D = _second(base.p, base.q, small)
    big = tuple(tuple((d * x + 2 * cx, d * y + 2 * cy) for x, y in P) for P in D.paths)
    M = Leaper(d * M.p, d * M.q)
    return M, ProperCycle(M, (L.p, L.q), big)


def third_leaper_cycle(D: EightPathCycle) -> list[Square]:
    """Every third square of a (0,1) Hamiltonian cycle."""
    if D.leaper != Leaper(0, 1):
        raise Inapplicable("needs a (0,1)-cycle")
    cyc = D.cycle()
    N = len(cyc)
    if N % 3 == 0:
        raise Inapplicable("cycle length divisible by three")
    out = [cyc[(3 * i) % N] for i in range(1, N + 1)]
    if not is_leaper_cycle(Leaper(1, 2), out):
        raise Inapplicable("every third square does not give a (1,2)-cycle")
    return out


def section_visit_counts(F: Frame, C) -> dict:
    cnt = Counter(F.section_of(a) for a in C)
    if None in cnt:
        raise NotAFrameCycle("cycle leaves the frame")
    return {DIRS[i]: cnt.get(i, 0) for i in range(8)}


def full_graph_is(L: Leaper, cycle: Sequence[Square]) -> bool:
    """True iff the L-graph over the cycle's squares has exactly its edges."""
    from .board import cycle_edges

    G = build_leaper_graph(L, cycle)
    return set(G.edges) == cycle_edges(cycle)
