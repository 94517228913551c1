"""The explicit isomorphism between a cycle and its second-leaper cycle,
displacement multisets and dual-board verification."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Callable, Sequence

from .board import (
    Board,
    Leaper,
    Square,
    build_leaper_graph,
    components,
    decompose_center_board,
    classify_cycle_types,
)
from .descent import leaper_of_descent, matrix_product, split_points
from .dirgraph import (
    DIRECTION_MATRICES,
    direction_of_move,
    distance,
    extract,
    mmul,
    potentials,
    verify_dual_pair,
)
from .errors import MismatchedSquares, NotBijective, Unsupported
from .frames import EightPathCycle, canonical_second_cycle


def upsilon(eps: int, j: int, m: int, n: int) -> int:
    return m + n + 2 * ((eps * m - j) % (m + n)) + 1


@dataclass(frozen=True)
class IsoWitness:
    psi: tuple  # psi[j - 1] = ψ(j)
    m: int
    n: int

    def __call__(self, j: int) -> int:
        return self.psi[(j - 1) % len(self.psi)]

    def increments(self) -> list[int]:
        N = len(self.psi)
        return [(self(j + 1) - self(j)) % N for j in range(1, N + 1)]


def psi_permutation(m: int, n: int) -> IsoWitness:
    if m < 1 or n < 1 or (m + n) % 2:
        raise NotBijective(f"need m, n >= 1 with m + n even, got ({m},{n})")
    N = 4 * (m + n)
    out = [1]
    while len(out) < N:
        j = out[-1]
        out.append((j + upsilon(j % 2, j, m, n) - 1) % N + 1)
    if sorted(out) != list(range(1, N + 1)):
        raise NotBijective(f"psi for ({m},{n}) is not a permutation")
    return IsoWitness(tuple(out), m, n)


def section_sizes(D: EightPathCycle) -> tuple[int, int]:
    """(squares per side path, squares per corner path)."""
    sides = {len(P) for P in D.paths[0::2]}
    corners = {len(P) for P in D.paths[1::2]}
    if len(sides) != 1 or len(corners) != 1:
        raise MismatchedSquares("section paths are not uniform")
    return sides.pop(), corners.pop()


def iso_from_psi(C: Sequence[Square], D: EightPathCycle, L: Leaper | None = None) -> dict:
    """Square map a_j -> a_psi(j) along D; checked to carry D onto C's graph."""
    a = D.cycle()
    if set(a) != set(C):
        raise MismatchedSquares("C and D cover different squares")
    L = L or Leaper.of(*D.params)
    w = psi_permutation(*section_sizes(D))
    moves = set(L.moves2())
    N = len(a)
    for j in range(1, N + 1):
        x, y = a[w(j) - 1], a[w(j + 1) - 1]
        if (y[0] - x[0], y[1] - x[1]) not in moves:
            raise NotBijective(f"psi does not carry D's edge {j} onto an {L}-move")
    return {a[j - 1]: a[w(j) - 1] for j in range(1, N + 1)}


@dataclass(frozen=True)
class DisplacementReport:
    mu: int
    alpha: int
    beta: int
    d_displacements: tuple
    c_displacements: tuple

    def law_holds(self) -> bool:
        want = lambda r: Counter({x: 8 for x in range(self.mu, 3 * self.mu + 1) if x % 4 == r})
        return (
            self.alpha in (1, 3)
            and self.alpha == self.beta
            and Counter(self.d_displacements) == want(self.alpha)
            and Counter(self.c_displacements) == want(self.beta)
        )


def displacement_report(C: Sequence[Square], D: EightPathCycle | Sequence[Square]) -> DisplacementReport:
    d = D.cycle() if isinstance(D, EightPathCycle) else list(D)
    C = list(C)
    if set(C) != set(d) or len(C) != len(d):
        raise MismatchedSquares("C and D cover different squares")
    N = len(C)
    iC = {a: k for k, a in enumerate(C)}
    iD = {a: k for k, a in enumerate(d)}
    dd = tuple((iD[C[(iC[a] + 1) % N]] - iD[a]) % N for a in d)
    cc = tuple((iC[d[(iD[a] + 1) % N]] - iC[a]) % N for a in C)
    return DisplacementReport(N // 4, dd[0] % 4, cc[0] % 4, dd, cc)


def verify_dual_board(B, L: Leaper, M: Leaper, witness: Callable | dict | None = None) -> bool:
    """Both leaper graphs over B connected and isomorphic."""
    sq = B.squares if isinstance(B, Board) else frozenset(B)
    if L == M:
        raise ValueError("the two leapers must differ")
    GL, GM = build_leaper_graph(L, sq), build_leaper_graph(M, sq)
    for G in (GL, GM):
        if len(components(G.adjacency())) != 1:
            return False
    if len(GL.edges) != len(GM.edges):
        return False
    degs = lambda G: all(len(v) == 2 for v in G.adjacency().values())
    if witness is None:
        if degs(GL) and degs(GM):
            return True
        raise Unsupported("general graph isomorphism is not attempted")
    f = witness if callable(witness) else witness.__getitem__
    image = {a: f(a) for a in sq}
    if set(image.values()) != set(sq):
        return False
    mapped = {tuple(sorted((image[a], image[b]))) for a, b in GL.edges}
    return mapped == set(GM.edges)


def psi_for_descent(e: str) -> int:
    """Index of the cycle type whose descent is ``e`` inside leaper(e + o)."""
    return len(split_points(e)) + 1


def duality_identity_failures(e: str, o: str) -> list[str]:
    """Check Dist^II(ψ(j), ψ(j+1)) = A^I(j)·A_e·A_o on an actual instance.

    The instance is the cycle of leaper(e + o) created by the o-lift, so its
    descent is e and its canonical second leaper is (1,2).
    """
    L = leaper_of_descent(e + o)
    t = psi_for_descent(e)
    classes = dict(classify_cycle_types(decompose_center_board(L), L))
    C = classes[t][0]
    M, D = canonical_second_cycle(L.p, L.q, C)
    out = []
    if M != Leaper(1, 2):
        return [f"second leaper of type {t} is {M}, expected (1,2)"]
    sq = D.squares()
    G2 = extract(build_leaper_graph(M, sq))
    G1 = extract(build_leaper_graph(L, sq))
    idx = {a: k for k, a in enumerate(G2.names)}
    Aeo = matrix_product(e + o)
    w = psi_permutation(*section_sizes(D))
    a = D.cycle()
    pots = potentials(G2)
    N = len(a)
    for j in range(1, N + 1):
        x, y = a[w(j) - 1], a[w(j + 1) - 1]
        AI = DIRECTION_MATRICES[direction_of_move(L, (y[0] - x[0], y[1] - x[1]))]
        if distance(G2, idx[x], idx[y], pots) != mmul(AI, Aeo):
            out.append(f"identity fails at j={j}")
            break
    if not verify_dual_pair(G2, G1, {k: k for k in range(G2.n)}, Aeo):
        out.append("extracted pair is not dual with matrix A_e·A_o")
    return out


def isoflip_holds(C1: Sequence[Square], D1: EightPathCycle, w: IsoWitness) -> bool:
    """Some cyclic enumeration b of C1 makes b_j -> b_psi(j) an isomorphism onto D1."""
    d = D1.cycle()
    N = len(d)
    if len(C1) != N or len(w.psi) != N:
        return False
    pos = {a: k for k, a in enumerate(d)}
    for seq in (list(C1), list(C1)[::-1]):
        for s in range(N):
            b = seq[s:] + seq[:s]
            if all(
                (pos[b[w(j + 1) - 1]] - pos[b[w(j) - 1]]) % N in (1, N - 1) for j in range(1, N + 1)
            ):
                return True
    return False
