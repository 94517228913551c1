"""Descent strings, lift matrices and even continued fractions.

A descent is a plain string over ``f``, ``g``, ``h`` and, in extended
contexts, ``ħ``.  Lift matrices act on column vectors ``(p, q)``; the product
for a descent is taken left to right, so its last character acts first.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .board import Leaper
from .errors import InvalidEcf, NotSkewBasic

HBAR = "ħ"
CORE = "fgh"
EXTENDED = "fgh" + HBAR

LIFT_MATRICES = {
    "f": ((1, 0), (2, 1)),
    "g": ((0, 1), (-1, 2)),
    "h": ((0, 1), (1, 2)),
    HBAR: ((0, 1), (1, 2)),
}

IDENTITY = ((1, 0), (0, 1))


def matmul(A, B):
    return tuple(
        tuple(sum(A[i][k] * B[k][j] for k in range(2)) for j in range(2)) for i in range(2)
    )


def matvec(A, v):
    return (A[0][0] * v[0] + A[0][1] * v[1], A[1][0] * v[0] + A[1][1] * v[1])


def lift_matrix(kind: str):
    try:
        return LIFT_MATRICES[kind]
    except KeyError:
        raise ValueError(f"unknown lift {kind!r}") from None


def check_descent(e: str, extended: bool = False) -> str:
    allowed = EXTENDED if extended else CORE
    bad = [c for c in e if c not in allowed]
    if bad:
        raise ValueError(f"descent {e!r} has characters outside {allowed!r}")
    return e


def matrix_product(e: str):
    A = IDENTITY
    for c in e:
        A = matmul(A, lift_matrix(c))
    return A


def leaper_of_descent(e: str) -> Leaper:
    return Leaper(*matvec(matrix_product(e), (1, 2)))


def lift_params(kind: str, m: int, n: int) -> tuple[int, int]:
    """Proportions of the frame that ``kind`` lifts an (m, n)-frame to."""
    return matvec(lift_matrix(kind), (m, n))


def descent_of(p: int, q: int) -> str:
    L = Leaper.of(p, q)
    if not (L.skew and L.basic):
        raise NotSkewBasic(f"{L} is not a skew basic leaper")
    p, q = L.p, L.q
    out = []
    while (p, q) != (1, 2):
        if 3 * p < q:
            out.append("f")
            q = q - 2 * p
        elif 2 * p > q:
            out.append("g")
            p, q = 2 * p - q, p
        else:
            out.append("h")
            p, q = q - 2 * p, p
    return "".join(out)


@dataclass(frozen=True)
class Ecf:
    terms: tuple
    signs: tuple

    def __post_init__(self):
        if not self.terms:
            raise InvalidEcf("empty continued fraction")
        if len(self.signs) != len(self.terms) - 1:
            raise InvalidEcf("need exactly one sign between consecutive terms")
        if any(s not in "+-" for s in self.signs):
            raise InvalidEcf(f"bad signs {self.signs}")
        if any(c % 2 for c in self.terms):
            raise InvalidEcf(f"odd term in {self.terms}")
        if self.terms[0] < 0 or any(c <= 0 for c in self.terms[1:]):
            raise InvalidEcf(f"nonpositive term in {self.terms}")

    def __str__(self):
        parts = [f"{c}{s}" for c, s in zip(self.terms, self.signs)]
        return "[" + ",".join(parts + [str(self.terms[-1])]) + "]"


def ecf_of_descent(e: str) -> Ecf:
    check_descent(e)
    terms, signs = [], []
    run = 0
    for c in e:
        if c == "f":
            run += 1
        else:
            terms.append(2 * run + 2)
            signs.append("-" if c == "g" else "+")
            run = 0
    terms.append(2 * run + 2)
    return Ecf(tuple(terms), tuple(signs))


def descent_of_ecf(ecf: Ecf) -> str:
    out = []
    for i, c in enumerate(ecf.terms):
        if c < 2:
            raise InvalidEcf(f"term {c} does not come from a descent")
        out.append("f" * ((c - 2) // 2))
        if i < len(ecf.signs):
            out.append("g" if ecf.signs[i] == "-" else "h")
    return "".join(out)


def _evaluate(terms, signs) -> Fraction:
    v = Fraction(terms[-1])
    for c, s in zip(reversed(terms[:-1]), reversed(signs)):
        if v == 0:
            raise InvalidEcf("vanishing tail in continued fraction")
        v = c + (1 / v if s == "+" else -1 / v)
    return v


def ecf_value(ecf: Ecf) -> Fraction:
    return _evaluate(ecf.terms, ecf.signs)


def cycle_length_ratio(ecf: Ecf, i: int) -> Fraction:
    """l_i / d_i: the terms up to c_i with a ``2-`` wedged between neighbors."""
    k = len(ecf.terms)
    if not 1 <= i <= k:
        raise ValueError(f"type index {i} outside 1..{k}")
    terms, signs = [ecf.terms[0]], []
    for j in range(1, i):
        signs += [ecf.signs[j - 1], "-"]
        terms += [2, ecf.terms[j]]
    return _evaluate(terms, signs)


@dataclass(frozen=True)
class CycleTypeRecord:
    i: int
    second_leaper: Leaper
    count: int
    l: int
    d: int
    length: int
    origin: str | None
    third_leaper: bool

    def as_json(self) -> dict:
        return {
            "i": self.i,
            "second_leaper": [self.second_leaper.p, self.second_leaper.q],
            "count": self.count,
            "l": self.l,
            "d": self.d,
            "length": self.length,
            "origin": self.origin,
            "third_leaper": self.third_leaper,
        }


def split_points(e: str) -> list[int]:
    """Positions of the g/h characters, left to right."""
    return [j for j, c in enumerate(e) if c in "gh" + HBAR]


def cycle_type_table(p: int, q: int) -> list[CycleTypeRecord]:
    e = descent_of(p, q)
    ecf = ecf_of_descent(e)
    cuts = split_points(e)
    k = len(cuts) + 1
    recs = []
    for i in range(1, k + 1):
        if i < k:
            j = cuts[i - 1]
            M = leaper_of_descent(e[j + 1:])
            origin = e[j]
        else:
            M = Leaper(0, 1)
            origin = None
        r = cycle_length_ratio(ecf, i)
        l, d = r.numerator, r.denominator
        assert gcd(l, d) == 1
        third = i == k and ecf.terms[-1] == 2 and l % 3 != 0
        recs.append(CycleTypeRecord(i, M, (M.q - M.p) ** 2, l, d, 4 * l, origin, third))
    return recs
