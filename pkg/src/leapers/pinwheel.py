"""Four-wing pinwheel boards, their reflection map and direction graphs.

A square of wing ``i`` is ``a_i + (4kq, 4lq)`` in doubled coordinates and
carries the triplet ``(i, k, l)``.  Wings are numbered 0..3 counterclockwise.
"""

from __future__ import annotations

from dataclasses import dataclass

import networkx as nx
from networkx.algorithms import isomorphism

from .board import Board, Leaper, Square, build_leaper_graph, components, rotate90
from .descent import LIFT_MATRICES, matmul
from .dirgraph import (
    PI_PINWHEEL,
    PI_REFLECT,
    DirectionGraph,
    apply_perm,
    dual_pair_failure,
    extract,
)
from .errors import InvalidSpec, NotOnBoard

WING_NAMES = ("I", "II", "III", "IV")

# mirror lines x = 0, y = 0, y = x, y = -x
REFLECTIONS = (
    lambda a: (-a[0], a[1]),
    lambda a: (a[0], -a[1]),
    lambda a: (a[1], a[0]),
    lambda a: (-a[1], -a[0]),
)


@dataclass(frozen=True)
class PinwheelSpec:
    n: int
    p: int
    q: int
    d: int = 0
    augmented: bool = False

    def __post_init__(self):
        if self.n < 1:
            raise InvalidSpec(f"order must be positive, got {self.n}")
        if self.d < 0:
            raise InvalidSpec(f"margin must be nonnegative, got {self.d}")
        if self.q <= 0 or self.p < 0:
            raise InvalidSpec(f"need q > 0 and p >= 0, got ({self.p},{self.q})")
        if self.d > 0 and self.p == 0:
            raise InvalidSpec("a positive margin needs p != 0")
        if self.augmented and self.d:
            raise InvalidSpec("augmentation is only defined for margin 0")

    @property
    def leaper(self) -> Leaper:
        return Leaper.of(self.p, self.q)

    @property
    def partner(self) -> Leaper:
        return pinwheel_partner(self.n, self.p, self.q)


def pinwheel_matrix(n: int):
    return ((0, 1), (1, 2 * n))


def pinwheel_partner(n: int, p: int, q: int | None = None) -> Leaper:
    if isinstance(p, Leaper):
        p, q = p.p, p.q
    return Leaper.of(q, p + 2 * n * q)


def wing_anchor(i: int, p: int, q: int) -> Square:
    return rotate90((p + q, p - q), i)


def wing_center(i: int, spec: PinwheelSpec) -> Square:
    c = spec.p + spec.n * spec.q
    return rotate90((c, c), i)


@dataclass(frozen=True)
class PinwheelBoard:
    spec: PinwheelSpec
    wings: tuple  # four frozensets of squares
    triplets: dict  # square -> (wing, k, l)
    extra: frozenset = frozenset()

    @property
    def squares(self) -> frozenset:
        return frozenset(self.triplets)

    @property
    def board(self) -> Board:
        return Board.from_squares(self.triplets)

    @property
    def wing_centers(self) -> tuple:
        return tuple(wing_center(i, self.spec) for i in range(4))

    def wing_of(self, a: Square) -> int:
        try:
            return self.triplets[a][0]
        except KeyError:
            raise NotOnBoard(f"{a} is not on the board") from None

    def __len__(self):
        return len(self.triplets)


def _wing_offsets(n: int, d: int):
    """(k, l) of wing I: the rectangle in triplet units."""
    for k in range(-(n + d) - d, n + 2 * d + 1):
        for l in range(-(n + d) - d, n + 2 * d + 1):
            if -d <= k + l <= n + d and -(n + d) + 1 <= l - k <= n + d:
                yield k, l


def build_pinwheel(spec: PinwheelSpec) -> PinwheelBoard:
    p, q, n = spec.p, spec.q, spec.n
    offsets = list(_wing_offsets(n, spec.d))
    trip = {}
    wings = []
    for i in range(4):
        ax, ay = wing_anchor(i, p, q)
        w = set()
        for k, l in offsets:
            # the rotated wing, indexed from its own anchor
            u = rotate90((4 * k * q, 4 * l * q), i)
            a = (ax + u[0], ay + u[1])
            if a in trip:
                raise InvalidSpec(f"wings overlap at {a}")
            trip[a] = (i, (a[0] - ax) // (4 * q), (a[1] - ay) // (4 * q))
            w.add(a)
        wings.append(frozenset(w))
    extra = set()
    if spec.augmented:
        for i in range(4):
            a = rotate90((p + q + 4 * n * q, p - q), i)
            ax, ay = wing_anchor(i, p, q)
            if a in trip:
                raise InvalidSpec(f"augmenting square {a} is already on the board")
            # attached to the wing it extends
            trip[a] = (i, (a[0] - ax) // (4 * q), (a[1] - ay) // (4 * q))
            extra.add(a)
    return PinwheelBoard(spec, tuple(wings), trip, frozenset(extra))


def phi_map(W: PinwheelBoard, a: Square) -> Square:
    cx, cy = wing_center(W.wing_of(a), W.spec)
    return (2 * cx - a[0], 2 * cy - a[1])


def _edges_match(L: Leaper, M: Leaper, src, f) -> str | None:
    Lm, Mm = set(L.moves2()), set(M.moves2())
    src = sorted(src)
    for x, a in enumerate(src):
        fa = f[a]
        for b in src[x + 1:]:
            fb = f[b]
            le = (b[0] - a[0], b[1] - a[1]) in Lm
            me = (fb[0] - fa[0], fb[1] - fa[1]) in Mm
            if le != me:
                return f"pair {a}, {b}: L-edge {le}, M-edge {me} after the map"
    return None


def _reflection_onto(image: frozenset, target: frozenset):
    if image == target:
        return lambda a: a
    for r in REFLECTIONS:
        if frozenset(map(r, image)) == target:
            return r
    return None


def pinwheel_witness(W: PinwheelBoard) -> tuple[dict | None, str | None]:
    """Square map carrying the L-graph onto the M-graph over the same board."""
    L, M = W.spec.leaper, W.spec.partner
    if L == M:
        return None, "both leapers coincide"
    S = W.squares
    core = S - W.extra
    phi = {a: phi_map(W, a) for a in core}
    if len(set(phi.values())) != len(phi):
        return None, "phi is not injective"
    why = _edges_match(L, M, core, phi)
    if why:
        return None, why
    if not W.extra:
        r = _reflection_onto(frozenset(phi.values()), S)
        if r is None:
            return None, "phi(W) is neither W nor a reflection of it"
        return {a: r(b) for a, b in phi.items()}, None
    # phi does not reach the augmenting squares; fall back to a matcher
    gl, gm = nx.Graph(), nx.Graph()
    gl.add_nodes_from(S)
    gm.add_nodes_from(S)
    gl.add_edges_from(build_leaper_graph(L, S).edges)
    gm.add_edges_from(build_leaper_graph(M, S).edges)
    f = next(isomorphism.GraphMatcher(gl, gm).isomorphisms_iter(), None)
    if f is None:
        return None, "the two leaper graphs over the augmented board are not isomorphic"
    return f, None


def verify_pinwheel_dual(spec: PinwheelSpec | PinwheelBoard, report: bool = False):
    W = spec if isinstance(spec, PinwheelBoard) else build_pinwheel(spec)
    L = W.spec.leaper
    why = None
    if len(components(build_leaper_graph(L, W.squares).adjacency())) != 1:
        why = f"{L}-graph over the board is disconnected"
    else:
        f, why = pinwheel_witness(W)
    ok = why is None
    return (ok, why) if report else ok


def is_unicyclic(L: Leaper, squares) -> bool:
    G = build_leaper_graph(L, squares)
    return len(components(G.adjacency())) == 1 and len(G.edges) == len(G.board.squares)


def triplet_graph(W: PinwheelBoard, L: Leaper | None = None) -> DirectionGraph:
    """Direction graph of the L-graph over W with triplets as vertex names."""
    L = L or W.spec.leaper
    G = extract(build_leaper_graph(L, W.squares))
    names = tuple(sorted(W.triplets[a] for a in W.squares))
    idx = {t: k for k, t in enumerate(names)}
    old = {k: idx[W.triplets[a]] for k, a in enumerate(G.names)}
    arcs = frozenset((old[u], old[v], i) for u, v, i in G.arcs)
    return DirectionGraph(len(names), arcs, names)


def pinwheel_direction_graph(n: int, d: int = 0, check_with: tuple = ((1, 2), (2, 3))) -> DirectionGraph:
    graphs = [triplet_graph(build_pinwheel(PinwheelSpec(n, p, q, d))) for p, q in check_with]
    first = graphs[0]
    for G, pq in zip(graphs[1:], check_with[1:]):
        if G != first or G.names != first.names:
            raise InvalidSpec(f"direction graph over {pq} differs from the one over {check_with[0]}")
    return first


def pinwheel_complement(G: DirectionGraph, n: int) -> DirectionGraph:
    pi = PI_PINWHEEL if n % 2 else PI_REFLECT @ PI_PINWHEEL
    return apply_perm(pi, G)


def eta_from_phi(n: int, d: int = 0, p: int = 1, q: int = 2) -> list[dict]:
    """Triplet maps induced by phi, one per reflection that closes it up."""
    W = build_pinwheel(PinwheelSpec(n, p, q, d))
    S = W.squares
    out = []
    for r in [lambda a: a, *REFLECTIONS]:
        img = {a: r(phi_map(W, a)) for a in S}
        if set(img.values()) == S:
            out.append({W.triplets[a]: W.triplets[b] for a, b in img.items()})
    return out


def eta_formula(n: int, K: int | None = None, Lc: int | None = None):
    """The shifted-negation map on triplets; defaults to the odd-order constants."""
    K = (n - 1) // 2 if K is None else K
    Lc = (n + 1) // 2 if Lc is None else Lc
    return lambda t: (t[0], K - t[1], Lc - t[2])


def pinwheel_duality(n: int, d: int = 0):
    """(G, Gc, eta as id map, matrix) for the pinwheel direction graph, or the
    reasons every candidate failed."""
    G = pinwheel_direction_graph(n, d)
    Gc = pinwheel_complement(G, n)
    A = pinwheel_matrix(n)
    idx = {t: k for k, t in enumerate(G.names)}
    tried = []
    cands = [("phi", e) for e in eta_from_phi(n, d)]
    span = range(-n - 2 * d - 2, n + 2 * d + 3)
    cands += [(f"shift({K},{Lc})", eta_formula(n, K, Lc)) for K in span for Lc in span]
    for tag, e in cands:
        f = e if callable(e) else e.__getitem__
        try:
            eta = {idx[t]: idx[f(t)] for t in G.names}
        except KeyError:
            continue
        why = dual_pair_failure(G, Gc, eta, A)
        if why is None:
            return G, Gc, eta, A, tag
        tried.append(f"{tag}: {why}")
    return G, Gc, None, A, tried


def coordinate_identity_holds(W: PinwheelBoard) -> bool:
    """Doubled coordinates equal (2A^i + [[0,4k],[0,4l]])·(p,q)."""
    p, q = W.spec.p, W.spec.q
    for a, (i, k, l) in W.triplets.items():
        (m00, m01), (m10, m11) = _half_matrix(i)
        x = m00 * p + (m01 + 4 * k) * q
        y = m10 * p + (m11 + 4 * l) * q
        if (x, y) != a:
            return False
    return True


def _half_matrix(i: int):
    """Twice the wing matrix; its columns are the doubled anchor's p and q parts."""
    u = rotate90((1, 1), i)
    v = rotate90((1, -1), i)
    return ((u[0], v[0]), (u[1], v[1]))


def pinwheel_matrix_factored(n: int):
    A = LIFT_MATRICES["h"]
    for _ in range(n - 1):
        A = matmul(LIFT_MATRICES["f"], A)
    return A

