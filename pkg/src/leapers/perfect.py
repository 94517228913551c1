"""Perfect cycles, their six checkable properties and the dual boards they span."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .board import Board, Leaper, Square, build_leaper_graph, canonical_cycle, rotate90
from .descent import lift_params, matrix_product, matvec
from .errors import NotPerfectInput
from .frames import (
    DIRS,
    EightPathCycle,
    full_graph_is,
    identity_translation,
    initial_paths,
    lift_paths,
    translation_failures,
)

PROPERTIES = ("translation", "symmetry", "separation", "simplicity", "coherence", "protocoherence")


class PerfectCycle(EightPathCycle):
    pass


def initial_cycle(M: Leaper, o: str) -> PerfectCycle:
    paths = initial_paths(M, o)
    return PerfectCycle(M, lift_params(o, M.p, M.q), paths)


@dataclass
class PerfectionReport:
    results: dict = field(default_factory=dict)
    diagnostics: dict = field(default_factory=dict)

    def __getattr__(self, name):
        if name in PROPERTIES:
            return self.results[name]
        raise AttributeError(name)

    @property
    def ok(self) -> bool:
        return all(self.results.get(k, False) for k in PROPERTIES)

    def failures(self) -> dict:
        return {k: self.diagnostics.get(k, "") for k in PROPERTIES if not self.results.get(k)}


def _ray(i: int) -> Square:
    return rotate90((1, 0), i // 2) if i % 2 == 0 else rotate90((1, 1), i // 2)


def _reflect(a: Square, i: int) -> Square:
    """Mirror image of a in the line through the ray of direction i."""
    x, y = a
    c, s = [(1, 0), (0, 1), (-1, 0), (0, -1)][i % 4]  # cos, sin of 90°·i
    return (x * c + y * s, x * s - y * c)


def _symmetry_problem(paths) -> str | None:
    for i, P in enumerate(paths):
        if len(P) % 2 == 0:
            return f"path {DIRS[i]} has even length"
        mx, my = P[len(P) // 2]
        rx, ry = _ray(i)
        # on the open ray: a positive multiple of the ray direction
        t = mx * rx + my * ry
        if t <= 0 or mx * ry - my * rx != 0:
            return f"middle of {DIRS[i]} is off its ray"
        if tuple(_reflect(a, i) for a in P) != tuple(reversed(P)):
            return f"path {DIRS[i]} is not mirror symmetric"
        if tuple(rotate90(a) for a in P) != tuple(paths[(i + 2) % 8]):
            return f"quarter turn does not carry {DIRS[i]} onto {DIRS[(i + 2) % 8]}"
    return None


def _separation_problem(paths) -> str | None:
    for i in range(8):
        P, Q = paths[i], paths[(i + 1) % 8]
        if len(P) % 2 == 0 or len(Q) % 2 == 0:
            return "even path length"
        stretch = list(P[len(P) // 2 + 1:]) + list(Q[: len(Q) // 2])
        for a in stretch:
            x, y = rotate90(a, -(i // 2))
            inside = 0 < y < x if i % 2 == 0 else 0 < x < y
            if not inside:
                return f"square {a} between {DIRS[i]} and {DIRS[(i + 1) % 8]} leaves its sector"
    return None


def _orient(ax, ay, bx, by, cx, cy):
    return np.sign((bx - ax) * (cy - ay) - (by - ay) * (cx - ax))


def polygon_is_simple(points) -> bool:
    """Exact test that the closed broken line through ``points`` is simple."""
    n = len(points)
    if n < 3 or len(set(points)) != n:
        return False
    P = np.asarray(points, dtype=np.int64)
    Q = np.roll(P, -1, axis=0)
    R = np.roll(P, -2, axis=0)
    # consecutive segments may only share their common endpoint
    d1, d2 = Q - P, R - Q
    cross = d1[:, 0] * d2[:, 1] - d1[:, 1] * d2[:, 0]
    dot = (d1 * d2).sum(axis=1)
    if np.any((cross == 0) & (dot < 0)):
        return False
    if n == 3:
        return True
    lo = np.minimum(P, Q)
    hi = np.maximum(P, Q)
    idx = np.arange(n)
    block = 256
    for start in range(0, n, block):
        r = idx[start:start + block][:, None]
        c = idx[None, :]
        # pairs j < k that are not neighbours along the loop
        keep = (c > r + 1) & ~((r == 0) & (c == n - 1))
        rows = r[:, 0]
        near = (
            (lo[rows, None, 0] <= hi[None, :, 0])
            & (lo[None, :, 0] <= hi[rows, None, 0])
            & (lo[rows, None, 1] <= hi[None, :, 1])
            & (lo[None, :, 1] <= hi[rows, None, 1])
            & keep
        )
        jj, kk = np.nonzero(near)
        if len(jj) == 0:
            continue
        jj = rows[jj]
        a, b, c2, d = P[jj], Q[jj], P[kk], Q[kk]
        o1 = _orient(a[:, 0], a[:, 1], b[:, 0], b[:, 1], c2[:, 0], c2[:, 1])
        o2 = _orient(a[:, 0], a[:, 1], b[:, 0], b[:, 1], d[:, 0], d[:, 1])
        o3 = _orient(c2[:, 0], c2[:, 1], d[:, 0], d[:, 1], a[:, 0], a[:, 1])
        o4 = _orient(c2[:, 0], c2[:, 1], d[:, 0], d[:, 1], b[:, 0], b[:, 1])
        crossing = (o1 * o2 <= 0) & (o3 * o4 <= 0)
        # the bounding boxes overlap, so a collinear pair with o1*o2 == 0 touches
        if np.any(crossing):
            return False
    return True


def _protocoherence_problem(D: EightPathCycle) -> str | None:
    p, q = D.params
    S = D.squares()
    for shift in ((4 * q, 0), (2 * (p + q), 2 * (p + q))):
        for a in sorted(S):
            for vx, vy in D.leaper.moves2():
                if (a[0] + vx - shift[0], a[1] + vy - shift[1]) in S:
                    return f"square {a} reaches the copy shifted by {shift}"
    return None


def check_perfect(D: EightPathCycle) -> PerfectionReport:
    rep = PerfectionReport()
    p, q = D.params
    bad = translation_failures(D.paths, p, q, which=range(4))
    rep.results["translation"] = not bad
    if bad:
        rep.diagnostics["translation"] = f"identities fail at {[DIRS[i] for i in bad]}"
    for name, problem in (
        ("symmetry", _symmetry_problem(D.paths)),
        ("separation", _separation_problem(D.paths)),
    ):
        rep.results[name] = problem is None
        if problem:
            rep.diagnostics[name] = problem
    rep.results["simplicity"] = polygon_is_simple(D.cycle())
    cyc = D.cycle()
    rep.results["coherence"] = len(set(cyc)) == len(cyc) and full_graph_is(D.leaper, cyc)
    problem = _protocoherence_problem(D)
    rep.results["protocoherence"] = problem is None
    if problem:
        rep.diagnostics["protocoherence"] = problem
    return rep


def lift_perfect(kind: str, D: EightPathCycle, check: bool = True) -> PerfectCycle:
    if check and not check_perfect(D).ok:
        raise NotPerfectInput(f"input is not {D.params}-perfect")
    p, q = D.params
    return PerfectCycle(D.leaper, lift_params(kind, p, q), lift_paths(kind, D.paths, p, q))


def dual_cycle(M: Leaper, o: str, e: str) -> PerfectCycle:
    """The initial cycle of (M, o) lifted by e, last character first."""
    D = initial_cycle(M, o)
    for c in reversed(e):
        D = lift_perfect(c, D, check=False)
    return D


def build_dual_board(M: Leaper, o: str, e: str) -> tuple[Board, Leaper]:
    D = dual_cycle(M, o, e)
    p, q = matvec(matrix_product(e + o), (M.p, M.q))
    assert (p, q) == tuple(D.params)
    return Board.from_squares(D.cycle()), Leaper(p, q)


def translation_edges(D: EightPathCycle) -> set:
    """L-edges forced by the translation identities, L being the params leaper."""
    p, q = D.params
    out = set()
    for i in range(8):
        lhs = list(D.paths[i]) + list(D.paths[(i + 1) % 8])
        tx, ty = identity_translation(i, p, q)
        for a in lhs:
            out.add(tuple(sorted((a, (a[0] + tx, a[1] + ty)))))
    return out


def long_cycle(D: EightPathCycle) -> list[Square]:
    """The params-leaper cycle over D's squares, traced from the forced edges."""
    adj = {}
    for a, b in translation_edges(D):
        adj.setdefault(a, []).append(b)
        adj.setdefault(b, []).append(a)
    if set(adj) != D.squares() or any(len(v) != 2 for v in adj.values()):
        raise NotPerfectInput("translation edges do not form a 2-regular graph")
    start = min(adj)
    cyc = [start]
    prev, cur = start, min(adj[start])
    while cur != start:
        cyc.append(cur)
        a, b = adj[cur]
        prev, cur = cur, (b if a == prev else a)
    if len(cyc) != len(adj):
        raise NotPerfectInput("translation edges split into several cycles")
    return cyc


def long_coherence_holds(D: EightPathCycle) -> bool:
    L = Leaper(*D.params)
    return set(build_leaper_graph(L, D.cycle()).edges) == translation_edges(D)


def perfect_partition_sets(squares, p: int, q: int) -> list[frozenset]:
    """Recover the section sets of a perfect cycle from its squares alone."""
    S = frozenset(squares)
    out = []
    for i in range(8):
        k = i // 2
        u = rotate90((2 * q, 2 * p), k)
        w = rotate90((2 * q, -2 * p), k) if i % 2 == 0 else rotate90((2 * p, 2 * q), k)
        out.append(frozenset(a for a in S if (a[0] - u[0], a[1] - u[1]) in S and (a[0] - w[0], a[1] - w[1]) in S))
    return out


def dual_board_problems(M: Leaper, o: str, e: str) -> list[str]:
    """Everything that keeps B^M_o(e) from being a verified dual board."""
    D = dual_cycle(M, o, e)
    out = [f"{k}: {v}" for k, v in check_perfect(D).failures().items()]
    L = Leaper(*D.params)
    try:
        lc = long_cycle(D)
    except NotPerfectInput as err:
        return out + [str(err)]
    if not full_graph_is(L, lc):
        out.append(f"{L}-graph over the board is not the traced cycle")
    if L == M:
        out.append("both leapers coincide")
    sets = perfect_partition_sets(D.cycle(), *D.params)
    if sets != [frozenset(P) for P in D.paths]:
        out.append("lifted partition differs from the recovered one")
    return out


def same_cycle(a, b) -> bool:
    return canonical_cycle(a) == canonical_cycle(b)
