"""Direction graphs: moves abstracted to the eight skew directions.

Direction ``i`` (1..8, counterclockwise from east-northeast) of a skew
(p, q)-leaper is the move ``A_i @ (p, q)``.  A direction graph stores arcs
``(u, v, i)`` in both orientations; its vertices are opaque integers.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .board import Leaper, LeaperGraph
from .errors import (
    AmbiguousDirection,
    LeaperError,
    NontrivialCycleError,
    NotACycleGraph,
    NotALeaperMove,
    NotConnected,
    NotDual,
    Unsupported,
)

DIRECTION_MATRICES = {
    1: ((0, 1), (1, 0)),
    2: ((1, 0), (0, 1)),
    3: ((-1, 0), (0, 1)),
    4: ((0, -1), (1, 0)),
    5: ((0, -1), (-1, 0)),
    6: ((-1, 0), (0, -1)),
    7: ((1, 0), (0, -1)),
    8: ((0, 1), (-1, 0)),
}
ZERO = ((0, 0), (0, 0))
_MATRIX_DIRECTION = {A: i for i, A in DIRECTION_MATRICES.items()}


def neg(i: int) -> int:
    return (i + 3) % 8 + 1


def shift(i: int, k: int = 1) -> int:
    return (i - 1 + k) % 8 + 1


def madd(A, B):
    (a, b), (c, d) = A
    (e, f), (g, h) = B
    return ((a + e, b + f), (c + g, d + h))


def msub(A, B):
    (a, b), (c, d) = A
    (e, f), (g, h) = B
    return ((a - e, b - f), (c - g, d - h))


def mmul(A, B):
    (a, b), (c, d) = A
    (e, f), (g, h) = B
    return ((a * e + b * g, a * f + b * h), (c * e + d * g, c * f + d * h))


def mdet(A):
    return A[0][0] * A[1][1] - A[0][1] * A[1][0]


def mtranspose(A):
    return ((A[0][0], A[1][0]), (A[0][1], A[1][1]))


def minv(A):
    """Inverse of a unimodular integer matrix."""
    d = mdet(A)
    if d not in (1, -1):
        raise LeaperError(f"matrix {A} is not unimodular")
    return ((A[1][1] * d, -A[0][1] * d), (-A[1][0] * d, A[0][0] * d))


def is_direction_matrix(A) -> bool:
    return A in _MATRIX_DIRECTION


def direction_of_move(L: Leaper, v2) -> int:
    """Direction of the doubled translation ``v2`` for a skew leaper."""
    if not L.skew:
        raise AmbiguousDirection(f"{L} is not skew")
    x2, y2 = v2
    if x2 % 2 or y2 % 2:
        raise NotALeaperMove(f"{v2} is not a leaper translation")
    v = (x2 // 2, y2 // 2)
    for i, A in DIRECTION_MATRICES.items():
        if (A[0][0] * L.p + A[0][1] * L.q, A[1][0] * L.p + A[1][1] * L.q) == v:
            return i
    raise NotALeaperMove(f"{v} is not a move of {L}")


def apply_direction(i: int, L: Leaper) -> tuple[int, int]:
    """Doubled translation of direction ``i``."""
    A = DIRECTION_MATRICES[i]
    return (2 * (A[0][0] * L.p + A[0][1] * L.q), 2 * (A[1][0] * L.p + A[1][1] * L.q))


@dataclass(frozen=True)
class DirectionGraph:
    n: int
    arcs: frozenset
    names: tuple = field(default=(), compare=False, repr=False)

    def __post_init__(self):
        for u, v, i in self.arcs:
            if (v, u, neg(i)) not in self.arcs:
                raise LeaperError(f"arc {(u, v, i)} lacks its reverse")

    @classmethod
    def from_arcs(cls, n: int, arcs: Iterable, names=()) -> "DirectionGraph":
        full = set()
        for u, v, i in arcs:
            full.add((u, v, i))
            full.add((v, u, neg(i)))
        return cls(n, frozenset(full), tuple(names))

    def out_arcs(self) -> dict:
        adj = {u: [] for u in range(self.n)}
        for u, v, i in sorted(self.arcs):
            adj[u].append((v, i))
        return adj

    def half_arcs(self) -> list:
        """One arc per symmetric pair, the one leaving the smaller vertex."""
        return sorted(a for a in self.arcs if a[0] < a[1])


def _tree_path(parent, x):
    out = [x]
    while parent[out[-1]] is not None:
        out.append(parent[out[-1]])
    return out


def potentials(G: DirectionGraph) -> tuple[dict, dict]:
    """Matrix potential per vertex and component root per vertex.

    Raises NontrivialCycleError (holding a vertex cycle) when the sum of
    direction matrices does not vanish around some cycle.
    """
    adj = G.out_arcs()
    pot, root, parent = {}, {}, {}
    for r in range(G.n):
        if r in pot:
            continue
        pot[r], root[r], parent[r] = ZERO, r, None
        todo = deque([r])
        while todo:
            u = todo.popleft()
            for v, i in adj[u]:
                want = madd(pot[u], DIRECTION_MATRICES[i])
                if v not in pot:
                    pot[v], root[v], parent[v] = want, r, u
                    todo.append(v)
                elif pot[v] != want:
                    pu, pv = _tree_path(parent, u), _tree_path(parent, v)
                    common = set(pu) & set(pv)
                    pu = pu[: next(k for k, x in enumerate(pu) if x in common) + 1]
                    pv = pv[: next(k for k, x in enumerate(pv) if x in common)]
                    raise NontrivialCycleError(pu[::-1] + pv)
    return pot, root


def is_valid(G: DirectionGraph) -> bool:
    try:
        potentials(G)
    except NontrivialCycleError:
        return False
    return True


def extract(G: LeaperGraph) -> DirectionGraph:
    L = G.leaper
    names = tuple(sorted(G.board.squares))
    idx = {a: k for k, a in enumerate(names)}
    arcs = []
    for a, b in sorted(G.edges):
        i = direction_of_move(L, (b[0] - a[0], b[1] - a[1]))
        arcs.append((idx[a], idx[b], i))
    D = DirectionGraph.from_arcs(len(names), arcs, names)
    try:
        potentials(D)
    except NontrivialCycleError as err:
        raise NontrivialCycleError([names[k] for k in err.cycle]) from None
    return D


def distance(G: DirectionGraph, x: int, y: int, pots=None):
    pot, root = pots or potentials(G)
    if root[x] != root[y]:
        raise NotConnected(f"{x} and {y} lie in different components")
    return msub(pot[y], pot[x])


def is_coherent(G: DirectionGraph) -> bool:
    pot, root = potentials(G)
    where = {}
    for v in range(G.n):
        key = (root[v], pot[v])
        if key in where:
            return False
        where[key] = v
    for x in range(G.n):
        for i, A in DIRECTION_MATRICES.items():
            y = where.get((root[x], madd(pot[x], A)))
            if y is not None and (x, y, i) not in G.arcs:
                return False
    return True


def is_connected(G: DirectionGraph) -> bool:
    if G.n == 0:
        return True
    _, root = potentials(G)
    return len(set(root.values())) == 1


def instantiate(G: DirectionGraph, L: Leaper, anchor) -> tuple[dict, set]:
    """Place the graph with leaper L; ``anchor`` is a square or a dict from
    component root to square.  Returns (vertex -> square, edge set)."""
    pot, root = potentials(G)
    where = {}
    for v in range(G.n):
        a = anchor[root[v]] if isinstance(anchor, dict) else anchor
        A = pot[v]
        dx = A[0][0] * L.p + A[0][1] * L.q
        dy = A[1][0] * L.p + A[1][1] * L.q
        where[v] = (a[0] + 2 * dx, a[1] + 2 * dy)
    edges = {tuple(sorted((where[u], where[v]))) for u, v, _ in G.arcs}
    return where, edges


# cycle-shaped graphs


def cycle_graph(labels: Sequence[int]) -> DirectionGraph:
    N = len(labels)
    return DirectionGraph.from_arcs(N, [(j, (j + 1) % N, labels[j]) for j in range(N)])


def cycle_labels(G: DirectionGraph) -> list[int]:
    adj = G.out_arcs()
    if G.n < 3 or any(len(v) != 2 for v in adj.values()):
        raise NotACycleGraph("not every vertex has degree two")
    out, seen = [], set()
    prev, cur = None, 0
    for _ in range(G.n):
        seen.add(cur)
        nxt, lab = next((v, i) for v, i in adj[cur] if v != prev)
        out.append(lab)
        prev, cur = cur, nxt
    if cur != 0 or len(seen) != G.n:
        raise NotACycleGraph("graph is not a single cycle")
    return out


def least_rotation(s: Sequence) -> int:
    """Booth's algorithm: start index of the lexicographically least rotation."""
    s = list(s) * 2
    f = [-1] * len(s)
    k = 0
    for j in range(1, len(s)):
        sj = s[j]
        i = f[j - k - 1]
        while i != -1 and sj != s[k + i + 1]:
            if sj < s[k + i + 1]:
                k = j - i - 1
            i = f[i]
        if sj != s[k + i + 1]:
            if sj < s[k]:
                k = j
            f[j - k] = -1
        else:
            f[j - k] = i + 1
    return k


def canonical_labels(labels: Sequence[int]) -> tuple:
    """Least rotation over both traversal directions."""
    labels = list(labels)
    back = [neg(i) for i in reversed(labels)]
    out = []
    for seq in (labels, back):
        k = least_rotation(seq)
        out.append(tuple(seq[k:] + seq[:k]))
    return min(out)


def cycle_graphs_equal(G1: DirectionGraph, G2: DirectionGraph) -> bool:
    return canonical_labels(cycle_labels(G1)) == canonical_labels(cycle_labels(G2))


# equivalence permutations


@dataclass(frozen=True)
class EquivPermutation:
    table: tuple
    name: str = field(default="", compare=False)

    def __post_init__(self):
        if sorted(self.table) != list(range(1, 9)):
            raise LeaperError(f"{self.table} is not a permutation of 1..8")

    def __call__(self, i: int) -> int:
        return self.table[i - 1]

    def __matmul__(self, other: "EquivPermutation") -> "EquivPermutation":
        """Composition: (self @ other)(i) = self(other(i))."""
        name = f"{self.name}∘{other.name}" if self.name and other.name else ""
        return EquivPermutation(tuple(self(other(i)) for i in range(1, 9)), name)

    def __pow__(self, k: int) -> "EquivPermutation":
        out = EquivPermutation(tuple(range(1, 9)), "id")
        for _ in range(k):
            out = self @ out
        return out


def _perm(digits: str, name: str) -> EquivPermutation:
    return EquivPermutation(tuple(int(c) for c in digits.split()), name)


PI_G = _perm("2 7 8 5 6 3 4 1", "g")
PI_H = _perm("7 2 5 8 3 6 1 4", "h")
PI_II = _perm("4 7 6 1 8 3 2 5", "II")
PI_F = _perm("2 3 8 1 6 7 4 5", "f")
PI_REFLECT = _perm("8 7 6 5 4 3 2 1", "Reflect")
PI_PINWHEEL = _perm("3 8 5 2 7 4 1 6", "Pinwheel")
PI_SHIFT = _perm("2 3 4 5 6 7 8 1", "Shift")
IDENTITY_PERM = _perm("1 2 3 4 5 6 7 8", "id")


def named_permutations() -> dict:
    return {
        "g": PI_G,
        "h": PI_H,
        "II": PI_II,
        "f": PI_F,
        "Reflect": PI_REFLECT,
        "Pinwheel": PI_PINWHEEL,
        "Shift": PI_SHIFT,
    }


# Inducing matrices written as (integer matrix, exponent k) meaning M / sqrt(2)^k.
INDUCING_MATRICES = {
    "g": ((((1, 1), (1, -1)), 1), (((1, -1), (1, 1)), 1)),
    "h": ((((1, 1), (1, -1)), 1), (((1, 1), (1, -1)), 1)),
    "f": ((((-1, 1), (1, 1)), 1), (((1, 1), (-1, 1)), 1)),
    "Shift": ((((1, -1), (1, 1)), 1), (((-1, 1), (1, 1)), 1)),
    "II": ((((1, 0), (0, 1)), 0), (((1, 0), (0, -1)), 0)),
    "Pinwheel": ((((1, 0), (0, 1)), 0), (((0, 1), (-1, 0)), 0)),
}


def apply_perm(pi: EquivPermutation, G: DirectionGraph) -> DirectionGraph:
    return DirectionGraph(G.n, frozenset((u, v, pi(i)) for u, v, i in G.arcs), G.names)


def equivalence_candidates() -> list[EquivPermutation]:
    out = []
    for k in range(8):
        s = PI_SHIFT ** k
        out += [EquivPermutation(s.table, f"Shift^{k}"), EquivPermutation((PI_REFLECT @ s).table, f"Reflect∘Shift^{k}")]
    return out


def equivalent_as_cycles(G1: DirectionGraph, G2: DirectionGraph) -> EquivPermutation | None:
    target = canonical_labels(cycle_labels(G2))
    labels = cycle_labels(G1)
    if len(labels) != len(target):
        return None
    for pi in equivalence_candidates():
        if canonical_labels([pi(i) for i in labels]) == target:
            return pi
    return None


# dual direction graphs


def _unlabeled_iso_known(G1: DirectionGraph, G2: DirectionGraph) -> bool:
    if G1.n != G2.n:
        return False
    try:
        return len(cycle_labels(G1)) == len(cycle_labels(G2))
    except NotACycleGraph:
        pass
    strip = lambda G: {(u, v) for u, v, _ in G.arcs}
    if strip(G1) == strip(G2):
        return True
    raise Unsupported("unlabeled isomorphism check needs cycles or identical arc sets")


def dual_pair_failure(G, Gc, eta: dict, A) -> str | None:
    """Why (G, Gc, eta, A) is not a dual pair, or None when it is."""
    for X, tag in ((G, "first"), (Gc, "second")):
        if not is_connected(X):
            return f"{tag} graph is disconnected"
        if not is_coherent(X):
            return f"{tag} graph is not coherent"
    if is_direction_matrix(A):
        return f"matrix {A} is a direction matrix"
    if abs(mdet(A)) != 1:
        return f"matrix {A} is not unimodular"
    if sorted(eta) != list(range(G.n)) or sorted(eta.values()) != list(range(Gc.n)):
        return "eta is not a bijection"
    if not _unlabeled_iso_known(G, Gc):
        return "graphs are not isomorphic as unlabeled graphs"
    back = {v: k for k, v in eta.items()}
    pots = potentials(G)
    for u, v, i in sorted(Gc.arcs):
        d = distance(G, back[u], back[v], pots)
        if d != mmul(DIRECTION_MATRICES[i], A):
            return f"arc {(u, v, i)}: distance {d} != A_{i}·A"
    return None


def verify_dual_pair(G, Gc, eta: dict, A) -> bool:
    return dual_pair_failure(G, Gc, eta, A) is None


def require_dual_pair(G, Gc, eta: dict, A) -> None:
    why = dual_pair_failure(G, Gc, eta, A)
    if why:
        raise NotDual(why)


def find_duality(G: DirectionGraph, Gc: DirectionGraph, matrix=None):
    """Search for (eta, A) making Gc a complement of G, optionally with A fixed.

    Works for any connected coherent pair: eta is forced to satisfy
    pot_G(eta^-1(x)) = c + pot_Gc(x)·A, so each choice of images for the
    two ends of one arc of Gc fixes both A and c.
    """
    if G.n != Gc.n or G.n < 2:
        return None
    if not (is_connected(G) and is_connected(Gc) and is_coherent(G) and is_coherent(Gc)):
        return None
    pot, _ = potentials(G)
    potc, _ = potentials(Gc)
    where = {pot[v]: v for v in range(G.n)}
    x0, x1, i0 = min(Gc.arcs)
    Ai_t = mtranspose(DIRECTION_MATRICES[i0])
    order = sorted(range(Gc.n), key=lambda x: (x != x1, x))
    seen = set()
    for a in range(G.n):
        for b in range(G.n):
            if a == b:
                continue
            A = mmul(Ai_t, msub(pot[b], pot[a]))
            if abs(mdet(A)) != 1 or is_direction_matrix(A):
                continue
            if matrix is not None and A != tuple(map(tuple, matrix)):
                continue
            c = msub(pot[a], mmul(potc[x0], A))
            if (A, c) in seen:
                continue
            seen.add((A, c))
            back = {}
            for x in order:
                v = where.get(madd(c, mmul(potc[x], A)))
                if v is None:
                    break
                back[x] = v
            else:
                eta = {v: x for x, v in back.items()}
                if len(eta) == G.n and verify_dual_pair(G, Gc, eta, A):
                    return eta, A
    return None
