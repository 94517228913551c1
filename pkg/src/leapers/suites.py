"""Exhaustive sweeps over bounded ranges, one per family of invariants."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from math import gcd
from typing import Callable, Iterator

from .board import (
    Leaper,
    build_leaper_graph,
    canonical_cycle,
    classify_cycle_types,
    cycle_edges,
    decompose_center_board,
    is_free,
    knuth_free_predicate,
    rect_board,
)
from .descent import HBAR, cycle_type_table, descent_of, leaper_of_descent, split_points
from .dirgraph import (
    PI_F,
    PI_G,
    PI_H,
    apply_perm,
    canonical_labels,
    cycle_graphs_equal,
    cycle_labels,
    equivalence_candidates,
    extract,
    is_coherent,
)
from .duality import (
    displacement_report,
    duality_identity_failures,
    isoflip_holds,
    psi_permutation,
    section_sizes,
)
from .errors import Inapplicable, LeaperError, UnknownSuite
from .frames import (
    DIRS,
    build_frame,
    canonical_second_cycle,
    full_graph_is,
    section_visit_counts,
    third_leaper_cycle,
)
from .perfect import build_dual_board, dual_board_problems, dual_cycle, long_cycle
from .pinwheel import (
    PinwheelSpec,
    build_pinwheel,
    is_unicyclic,
    pinwheel_direction_graph,
    pinwheel_duality,
    pinwheel_matrix,
    pinwheel_matrix_factored,
    pinwheel_partner,
    verify_pinwheel_dual,
)
from .signatures import (
    all_descents,
    companion,
    corner_side_of_descent,
    direct_counts,
    equivalent_descents,
    flip,
    fundamental_cycle,
    ns_nc,
    recover_descent,
    rewrite,
    second_fundamental,
    signature_of_descent,
)

DEFAULT_MAX_SUM = {
    "second-leaper": 25,
    "seclen-symm": 25,
    "third-leaper": 25,
    "knuth": 13,
    "dirgraph": 25,
    "flip-equiv": 4,
    "perfect": 3,
    "displacement": 25,
    "pinwheel": 9,
    "counts": 25,
}

Case = tuple  # (case id, diagnostic or None)


@dataclass
class SuiteResult:
    name: str
    cases: int = 0
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    @property
    def exit_code(self) -> int:
        return 0 if self.ok else 1

    def as_json(self) -> dict:
        return {"suite": self.name, "cases": self.cases, "failures": [list(f) for f in self.failures]}


def basic_skew(max_sum: int) -> Iterator[Leaper]:
    for s in range(3, max_sum + 1, 2):
        for p in range(1, (s + 1) // 2):
            if gcd(p, s - p) == 1:
                yield Leaper(p, s - p)


def _typed_cycles(L: Leaper):
    dec = decompose_center_board(L)
    return dec, classify_cycle_types(dec, L)


def cycle_descent(L: Leaper, i: int) -> str:
    e = descent_of(L.p, L.q)
    cuts = split_points(e)
    return e[: cuts[i - 1]] if i <= len(cuts) else e


# second leaper


def _second_leaper(max_sum: int):
    for L in basic_skew(max_sum):
        tab = {r.i: r for r in cycle_type_table(L.p, L.q)}
        try:
            dec, types = _typed_cycles(L)
        except LeaperError as err:
            yield str(L), str(err)
            continue
        if len(dec.isolated) != (L.q - L.p) ** 2:
            yield str(L), f"{len(dec.isolated)} isolated squares"
            continue
        for i, cycles in types:
            rec = tab[i]
            if len(cycles) != rec.count:
                yield f"{L} type {i}", f"{len(cycles)} cycles, expected {rec.count}"
            for C in cycles:
                M, D = canonical_second_cycle(L.p, L.q, C)
                why = None
                if M != rec.second_leaper:
                    why = f"second leaper {M}, table says {rec.second_leaper}"
                elif D.squares() != frozenset(C):
                    why = "second cycle covers other squares"
                elif not full_graph_is(M, D.cycle()):
                    why = f"{M}-graph over the squares is not the constructed cycle"
                yield f"{L} type {i} at {min(C)}", why


# sections and symmetry


SYMMETRIES = (
    lambda x, y: (x, y),
    lambda x, y: (-y, x),
    lambda x, y: (-x, -y),
    lambda x, y: (y, -x),
    lambda x, y: (x, -y),
    lambda x, y: (y, x),
    lambda x, y: (-x, y),
    lambda x, y: (-y, -x),
)


def symmetric_about_centroid(cycle) -> bool:
    n = len(cycle)
    sx, sy = sum(a[0] for a in cycle), sum(a[1] for a in cycle)
    if sx % n or sy % n:
        return False
    c = (sx // n, sy // n)
    edges = cycle_edges(cycle)
    for g in SYMMETRIES:
        f = lambda a: tuple(u + v for u, v in zip(g(a[0] - c[0], a[1] - c[1]), c))
        if {tuple(sorted((f(a), f(b)))) for a, b in edges} != edges:
            return False
    return True


def _seclen_symm(max_sum: int):
    for L in basic_skew(max_sum):
        F = build_frame(L.p, L.q)
        _, types = _typed_cycles(L)
        for i, cycles in types:
            for C in cycles:
                cid = f"{L} type {i} at {min(C)}"
                cnt = section_visit_counts(F, C)
                vals = [cnt[d] for d in DIRS]
                why = None
                if any(v % 2 == 0 for v in vals):
                    why = f"even section count {cnt}"
                elif len(set(vals[0::2])) != 1 or len(set(vals[1::2])) != 1:
                    why = f"section counts not uniform {cnt}"
                elif not symmetric_about_centroid(C):
                    why = "cycle is not symmetric"
                else:
                    _, D = canonical_second_cycle(L.p, L.q, C)
                    if not symmetric_about_centroid(D.cycle()):
                        why = "second cycle is not symmetric"
                yield cid, why


# third leaper


def _third_leaper(max_sum: int):
    checked = 0
    for L in basic_skew(max_sum):
        tab = cycle_type_table(L.p, L.q)
        rec = tab[-1]
        if not rec.third_leaper:
            continue
        e = descent_of(L.p, L.q)
        _, types = _typed_cycles(L)
        for C in dict(types)[rec.i]:
            cid = f"{L} at {min(C)}"
            _, D = canonical_second_cycle(L.p, L.q, C)
            try:
                T = third_leaper_cycle(D)
            except Inapplicable as err:
                yield cid, str(err)
                continue
            checked += 1
            if frozenset(T) != frozenset(C):
                yield cid, "third-leaper cycle covers other squares"
                continue
            full = full_graph_is(Leaper(1, 2), T)
            if e and full != (e[-1] == "g"):
                yield cid, f"full (1,2)-graph {full} but descent ends in {e[-1]!r}"
                continue
            yield cid, None
    if checked == 0:
        yield "range", "no case satisfied the preconditions"


def third_leaper_instances():
    """Lengths for the two small named cases."""
    out = {}
    for L in (Leaper(2, 3), Leaper(2, 5)):
        rec = cycle_type_table(L.p, L.q)[-1]
        out[L] = (rec.third_leaper, rec.length)
    return out


# Knuth


def _knuth(max_sum: int):
    for s in range(2, max_sum + 1):
        for p in range(0, s // 2 + 1):
            L = Leaper(p, s - p)
            q = L.q
            if L.basic:
                if not is_free(L, rect_board(p + q, 2 * q)):
                    yield f"{L} on {p + q}x{2 * q}", "not free"
                else:
                    yield f"{L} on {p + q}x{2 * q}", None
                if is_free(L, rect_board(p + q, 2 * q - 1)):
                    yield f"{L} on {p + q}x{2 * q - 1}", "free"
            for w in range(max(p + q, 1), 2 * q + 3):
                for h in range(max(p + q, 1), 2 * q + 3):
                    if w * h == 1:
                        continue
                    got = is_free(L, rect_board(w, h))
                    want = knuth_free_predicate(L, w, h)
                    yield f"{L} on {w}x{h}", None if got == want else f"predicate {want}, search {got}"


# direction graphs


def _dirgraph(max_sum: int, identity_len: int = 4):
    for L in basic_skew(max_sum):
        tab = {r.i: r for r in cycle_type_table(L.p, L.q)}
        _, types = _typed_cycles(L)
        for i, cycles in types:
            ce = cycle_descent(L, i)
            for C in cycles:
                cid = f"{L} type {i} at {min(C)}"
                G = extract(build_leaper_graph(L, C))
                why = None
                if not is_coherent(G):
                    why = "incoherent"
                elif not cycle_graphs_equal(G, fundamental_cycle(ce)):
                    why = f"not the fundamental cycle of {ce!r}"
                else:
                    M, _ = canonical_second_cycle(L.p, L.q, C)
                    if M.skew:
                        G2 = extract(build_leaper_graph(M, C))
                        if not is_coherent(G2):
                            why = "second graph incoherent"
                        elif not cycle_graphs_equal(G2, second_fundamental(tab[i].origin, ce)):
                            why = "not the second fundamental cycle"
                yield cid, why
    for e in all_descents(identity_len, "fgh"):
        for o in "gh":
            bad = duality_identity_failures(e, o)
            yield f"identity e={e!r} o={o}", "; ".join(bad) or None


# flips and equivalence


def _flip_equiv(max_len: int):
    def R(ch, e):
        s = ch
        for c in reversed(e):
            s = rewrite(c, s)
        return s

    for e in all_descents(max_len):
        f2 = flip(e)
        why = None
        if (R("S", e), R("C", e)) != corner_side_of_descent(f2):
            why = "flip bridge"
        elif ns_nc(e) != direct_counts(signature_of_descent(e)):
            why = "ns/nc recurrence"
        elif recover_descent(ns_nc(e)) != e or recover_descent(signature_of_descent(e)) != e:
            why = "recover_descent"
        else:
            pairs = [(PI_F, "f")] + ([(PI_G, "g"), (PI_H, "h")] if HBAR not in e else [])
            for pi, o in pairs:
                if not cycle_graphs_equal(apply_perm(pi, fundamental_cycle(e)), second_fundamental(o, f2)):
                    why = f"flip graph bridge through {o}"
        yield f"e={e!r}", why
    # equivalence: canonical form under all sixteen permutations
    forms = {}
    for e in all_descents(max_len):
        labels = cycle_labels(fundamental_cycle(e))
        forms[e] = min(canonical_labels([pi(i) for i in labels]) for pi in equivalence_candidates())
    by_form = {}
    for e, k in forms.items():
        by_form.setdefault(k, set()).add(e)
    for e in forms:
        want = {e, companion(e)} & set(forms)
        got = by_form[forms[e]]
        why = None if got == want else f"cycle-equivalent to {sorted(got)}, expected {sorted(want)}"
        if why is None and not all(equivalent_descents(e, x) for x in got):
            why = "equivalent_descents disagrees"
        yield f"equiv e={e!r}", why


# perfect cycles


PERFECT_SEEDS = ((Leaper(0, 1), "gh"), (Leaper(1, 2), "fgh"), (Leaper(1, 4), "fgh"), (Leaper(2, 3), "fgh"))


def _perfect(max_len: int):
    for M, origins in PERFECT_SEEDS:
        for o in origins:
            for e in all_descents(max_len):
                cid = f"M={M} o={o} e={e!r}"
                problems = dual_board_problems(M, o, e)
                if not problems:
                    D = dual_cycle(M, o, e)
                    L = Leaper(*D.params)
                    if L.skew and HBAR not in e:
                        if not cycle_graphs_equal(extract(build_leaper_graph(L, long_cycle(D))), fundamental_cycle(e)):
                            problems.append("long cycle is not the fundamental cycle")
                yield cid, "; ".join(problems) or None
    B, L = build_dual_board(Leaper(0, 1), "h", "h" + HBAR)
    ok = L == Leaper(5, 12) and len(B) == 120
    yield "B(0,1)_h(h" + HBAR + ")", None if ok else f"got {L} over {len(B)} squares"


# displacements


def _displacement(max_sum: int, flip_len: int = 3):
    for L in basic_skew(max_sum):
        _, types = _typed_cycles(L)
        for i, cycles in types:
            for C in cycles:
                cid = f"{L} type {i} at {min(C)}"
                _, D = canonical_second_cycle(L.p, L.q, C)
                why = None
                try:
                    psi_permutation(*section_sizes(D))
                    rep = displacement_report(C, D)
                    if not rep.law_holds():
                        why = f"displacement law fails (alpha={rep.alpha}, beta={rep.beta})"
                except LeaperError as err:
                    why = str(err)
                yield cid, why

    def inst(e):
        Lx = leaper_of_descent(e)
        cls = dict(classify_cycle_types(decompose_center_board(Lx), Lx))
        C = cls[max(cls)][0]
        return C, canonical_second_cycle(Lx.p, Lx.q, C)[1]

    for e1 in all_descents(flip_len, "fgh"):
        e2 = flip(e1)
        C1, D1 = inst(e1)
        C2, D2 = inst(e2)
        w = psi_permutation(*section_sizes(D2))
        yield f"flip {e1!r}/{e2!r}", None if isoflip_holds(C1, D1, w) else "psi does not transfer"


# pinwheels


def _pinwheel(max_sum: int, orders=(1, 2, 3), margins=(0, 1, 2)):
    for s in range(1, max_sum + 1):
        for p in range(0, (s + 1) // 2):
            q = s - p
            if gcd(p, q) != 1 or p >= q:
                continue
            for n in orders:
                for d in margins:
                    if d and p == 0:
                        continue
                    W = build_pinwheel(PinwheelSpec(n, p, q, d))
                    ok, why = verify_pinwheel_dual(W, report=True)
                    if ok and d == 0:
                        for X in (W.spec.leaper, W.spec.partner):
                            if not is_unicyclic(X, W.squares):
                                why = f"{X}-graph is not unicyclic"
                    yield f"W_{n},{d}({p},{q})", why
    for n in orders:
        sizes = []
        for d in margins:
            cid = f"graph W_{n},{d}"
            try:
                G, Gc, eta, A, tag = pinwheel_duality(n, d)
            except LeaperError as err:
                yield cid, str(err)
                continue
            sizes.append(G.n)
            yield cid, None if eta is not None else "no witness: " + "; ".join(tag[:2])
        if sizes != sorted(set(sizes)):
            yield f"growth n={n}", f"sizes {sizes} do not grow with the margin"
    for n in range(1, 9):
        ok = pinwheel_matrix_factored(n) == pinwheel_matrix(n)
        yield f"factor n={n}", None if ok else "matrix factorization"
    named = [((2, 1, 2, 1), Leaper(2, 9))] + [((n, 0, 1, 0), Leaper(1, 2 * n)) for n in orders]
    named.append(((2, 2, 1, 0), Leaper(1, 6)))
    for (n, p, q, d), M in named:
        spec = PinwheelSpec(n, p, q, d)
        ok = pinwheel_partner(n, p, q) == M and verify_pinwheel_dual(spec)
        yield f"named W_{n},{d}({p},{q})~{M}", None if ok else "named instance fails"


# counts


def _counts(max_sum: int, max_len: int = 4):
    for e in all_descents(max_len):
        s = signature_of_descent(e)
        ok = ns_nc(e) == direct_counts(s) and recover_descent(ns_nc(e)) == e
        yield f"counts e={e!r}", None if ok else "count recurrence"
    for L in basic_skew(max_sum):
        dec, types = _typed_cycles(L)
        tab = cycle_type_table(L.p, L.q)
        total = len(dec.isolated) + sum(len(c) for c in dec.cycles)
        why = None
        if total != (L.p + L.q) ** 2:
            why = "squares do not add up"
        elif [len(cs) for _, cs in types] != [r.count for r in tab]:
            why = "class sizes"
        elif [len(cs[0]) for _, cs in types] != [r.length for r in tab]:
            why = "cycle lengths"
        yield f"table {L}", why


SUITES: dict[str, Callable] = {
    "second-leaper": _second_leaper,
    "seclen-symm": _seclen_symm,
    "third-leaper": _third_leaper,
    "knuth": _knuth,
    "dirgraph": _dirgraph,
    "flip-equiv": _flip_equiv,
    "perfect": _perfect,
    "displacement": _displacement,
    "pinwheel": _pinwheel,
    "counts": _counts,
}
ALIASES = {"displ": "displacement"}


def suite_names() -> list[str]:
    return list(SUITES)


def run_suite(name: str, bound: int | None = None, emit: Callable[[str], None] | None = None) -> SuiteResult:
    """Run one sweep. ``bound`` is the largest p+q, or the longest descent
    for the descent-indexed suites. ``emit`` receives JSON lines."""
    key = ALIASES.get(name, name)
    if key not in SUITES:
        raise UnknownSuite(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    bound = DEFAULT_MAX_SUM[key] if bound is None else bound
    res = SuiteResult(key)
    for cid, why in SUITES[key](bound):
        res.cases += 1
        if why:
            res.failures.append((cid, why))
        if emit and (why or res.cases % 100 == 0):
            emit(json.dumps({"suite": key, "case": cid, "n": res.cases, "ok": not why, "why": why}, ensure_ascii=False))
    if emit:
        emit(json.dumps({"suite": key, "done": True, "cases": res.cases, "failures": len(res.failures)}))
    return res
