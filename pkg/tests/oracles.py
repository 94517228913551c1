"""Slow, independent reference implementations used to derive expected values.

Nothing here imports the library except plain data types, so a bug in the
library cannot leak into the expectations.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product


def moves(p, q):
    """Leaper translations in ordinary units."""
    out = set()
    for a, b in ((p, q), (q, p)):
        for sa, sb in product((1, -1), repeat=2):
            out.add((sa * a, sb * b))
    return out


def board(w, h):
    """Cells of a w x h board as integer pairs, lower-left at (0, 0)."""
    return [(x, y) for x in range(w) for y in range(h)]


def edges(p, q, cells):
    cells = list(cells)
    mv = moves(p, q)
    out = set()
    for i, a in enumerate(cells):
        for b in cells[i + 1:]:
            if (b[0] - a[0], b[1] - a[1]) in mv:
                out.add(frozenset((a, b)))
    return out


def connected(cells, es) -> bool:
    cells = list(cells)
    parent = {c: c for c in cells}

    def find(c):
        while parent[c] != c:
            parent[c] = parent[parent[c]]
            c = parent[c]
        return c

    for e in es:
        a, b = tuple(e)
        parent[find(a)] = find(b)
    return len({find(c) for c in cells}) <= 1


def cycle_lengths(p, q):
    """Component sizes of the (p,q)-graph on the (p+q)-square board."""
    n = p + q
    cells = board(n, n)
    es = edges(p, q, cells)
    adj = {c: set() for c in cells}
    for e in es:
        a, b = tuple(e)
        adj[a].add(b)
        adj[b].add(a)
    seen, sizes, isolated = set(), [], 0
    for c in cells:
        if c in seen:
            continue
        if not adj[c]:
            isolated += 1
            seen.add(c)
            continue
        stack, comp = [c], 0
        seen.add(c)
        while stack:
            u = stack.pop()
            comp += 1
            for v in adj[u]:
                if v not in seen:
                    seen.add(v)
                    stack.append(v)
        sizes.append(comp)
    return isolated, sorted(sizes)


def ecf_eval(terms, signs):
    """Evaluate c1 s1 1/(c2 s2 1/(...)) from the bottom up."""
    v = Fraction(terms[-1])
    for c, s in zip(reversed(terms[:-1]), reversed(signs)):
        v = c + (1 / v if s == "+" else -1 / v)
    return v


def peel(p, q):
    """Descent by repeated case analysis, written out independently."""
    out = ""
    while (p, q) != (1, 2):
        if 3 * p < q:
            out += "f"
            p, q = p, q - 2 * p
        elif 2 * p > q:
            out += "g"
            p, q = 2 * p - q, p
        else:
            out += "h"
            p, q = q - 2 * p, p
    return out


def unpeel(e):
    """Inverse of peel using the frame recurrences."""
    m, n = 1, 2
    for c in reversed(e):
        if c == "f":
            m, n = m, 2 * m + n
        elif c == "g":
            m, n = n, 2 * n - m
        else:
            m, n = n, m + 2 * n
    return m, n


DIRS = {1: (1, 0), 2: (0, 1)}


def direction_vectors(p, q):
    """Direction i -> move (ordinary units), counterclockwise from ENE."""
    import math

    vs = sorted(moves(p, q), key=lambda v: math.atan2(v[1], v[0]) % (2 * math.pi))
    return {i + 1: v for i, v in enumerate(vs)}


def labels_of_cycle(p, q, cyc):
    """Direction labels along a cycle given in ordinary units."""
    inv = {v: i for i, v in direction_vectors(p, q).items()}
    n = len(cyc)
    return [inv[(cyc[(j + 1) % n][0] - cyc[j][0], cyc[(j + 1) % n][1] - cyc[j][1])] for j in range(n)]


def same_cyclic(a, b) -> bool:
    """Equal up to rotation, or reversal with every label negated."""
    neg = lambda i: (i + 3) % 8 + 1
    if len(a) != len(b):
        return False
    rb = [neg(i) for i in reversed(b)]
    doubled = list(a) + list(a)
    n = len(a)
    return any(doubled[k:k + n] == list(b) or doubled[k:k + n] == rb for k in range(n))


def matrix_bfs_distance(arcs, mats, x, y):
    """Sum of direction matrices along a BFS path."""
    from collections import deque

    adj = {}
    for u, v, i in arcs:
        adj.setdefault(u, []).append((v, i))
    prev = {x: None}
    todo = deque([x])
    while todo:
        u = todo.popleft()
        for v, i in adj.get(u, []):
            if v not in prev:
                prev[v] = (u, i)
                todo.append(v)
    total = [[0, 0], [0, 0]]
    cur = y
    while prev[cur] is not None:
        u, i = prev[cur]
        A = mats[i]
        for r in range(2):
            for c in range(2):
                total[r][c] += A[r][c]
        cur = u
    return tuple(map(tuple, total))
