"""Command line entry point: ``leapers <command> ...``."""

from __future__ import annotations

import argparse
import json
import sys

from . import io
from .board import Board, Leaper, build_leaper_graph, decompose_center_board, classify_cycle_types, reduce_to_basic
from .descent import HBAR, cycle_type_table, descent_of, ecf_of_descent, ecf_value
from .dirgraph import cycle_labels, extract
from .errors import LeaperError
from .figures import FIGURES
from .frames import build_frame, canonical_second_cycle, lift_cycle
from .perfect import build_dual_board, dual_board_problems, dual_cycle
from .pinwheel import PinwheelSpec, build_pinwheel, pinwheel_duality, verify_pinwheel_dual
from .signatures import fundamental_cycle, second_fundamental, signature_of_descent
from .suites import ALIASES, DEFAULT_MAX_SUM, run_suite, suite_names
from .svg import Overlay, RenderSpec, edge_overlays, render_svg


def _descent(s: str) -> str:
    # plain-keyboard alias for the barred h
    return s.replace("H", HBAR)


def _out(args, doc: dict, lines: list[str]) -> None:
    if args.json:
        print(io.dumps(doc))
    else:
        print("\n".join(lines))


def _svg(args, squares, overlays=()) -> None:
    if args.svg:
        with open(args.svg, "w", encoding="utf-8") as fh:
            fh.write(render_svg(squares, RenderSpec(overlays=tuple(overlays))))


def cmd_analyze(args) -> int:
    base, d, rot = reduce_to_basic(args.p, args.q)
    doc = {"leaper": [args.p, args.q], "basic": [base.p, base.q], "scale": d, "rotation": rot}
    lines = [f"leaper ({args.p},{args.q}): basic {base}, scale {d}, rotation {rot}"]
    L = Leaper.of(args.p, args.q)
    if L.skew and L.basic:
        e = descent_of(L.p, L.q)
        ecf = ecf_of_descent(e)
        table = cycle_type_table(L.p, L.q)
        doc.update(descent=e, ecf=str(ecf), value=str(ecf_value(ecf)), types=[r.as_json() for r in table])
        lines.append(f"descent {e or '(empty)'}  ecf {ecf} = {ecf_value(ecf)}")
        for r in table:
            tl = "  third leaper" if r.third_leaper else ""
            lines.append(
                f"  type {r.i}: {r.count} cycles of length {r.length}, second leaper {r.second_leaper}, "
                f"origin {r.origin or '-'}{tl}"
            )
    _out(args, doc, lines)
    return 0


def _center(args):
    L = Leaper.of(args.p, args.q)
    dec = decompose_center_board(L)
    return L, dec, classify_cycle_types(dec, L)


def cmd_cycles(args) -> int:
    L, dec, types = _center(args)
    doc = {"leaper": [L.p, L.q], "coords": io.COORDS, "isolated": [list(a) for a in sorted(dec.isolated)], "types": []}
    lines = [f"{L}: {len(dec.isolated)} isolated squares"]
    for i, cycles in types:
        doc["types"].append({"i": i, "cycles": [[list(a) for a in c] for c in cycles]})
        lines.append(f"  type {i}: {len(cycles)} cycles of length {len(cycles[0])}")
    _out(args, doc, lines)
    _svg(args, [a for c in dec.cycles for a in c] + sorted(dec.isolated), [Overlay(c) for c in dec.cycles])
    return 0


def cmd_second(args) -> int:
    L, dec, types = _center(args)
    doc = {"leaper": [L.p, L.q], "coords": io.COORDS, "cycles": []}
    lines = []
    overlays = []
    for i, cycles in types:
        for C in cycles:
            M, D = canonical_second_cycle(L.p, L.q, C)
            doc["cycles"].append({"type": i, "second_leaper": [M.p, M.q], "second_cycle": [list(a) for a in D.cycle()]})
            lines.append(f"type {i} at {min(C)}: second leaper {M}, {len(D)} squares")
            overlays.append(Overlay(tuple(D.cycle())))
    _out(args, doc, lines)
    _svg(args, [a for c in dec.cycles for a in c], overlays)
    return 0


def cmd_lift(args) -> int:
    L, dec, _ = _center(args)
    F = build_frame(L.p, L.q)
    out = [lift_cycle(args.kind, F, C) for C in dec.cycles]
    doc = {"kind": args.kind, "from": [L.p, L.q], "coords": io.COORDS, "cycles": [[list(a) for a in c] for c in out]}
    _out(args, doc, [f"lifted {len(c)}-cycle from {min(c)}" for c in out])
    _svg(args, [a for c in out for a in c], [Overlay(tuple(c)) for c in out])
    return 0


def cmd_dualboard(args) -> int:
    M = Leaper.of(args.p, args.q)
    e = _descent(args.seed_descent)
    B, L = build_dual_board(M, args.origin, e)
    problems = dual_board_problems(M, args.origin, e)
    doc = io.board_to_json(B)
    doc.update(leapers=[[M.p, M.q], [L.p, L.q]], origin=args.origin, descent=e, problems=problems)
    lines = [f"board of {len(B)} squares, dual for {M} and {L}"] + (problems or ["all checks pass"])
    _out(args, doc, lines)
    _svg(args, B.squares, [Overlay(tuple(dual_cycle(M, args.origin, e).cycle()))])
    return 0 if not problems else 1


def cmd_pinwheel(args) -> int:
    spec = PinwheelSpec(args.n, args.p, args.q, args.margin, args.augmented)
    W = build_pinwheel(spec)
    ok, why = verify_pinwheel_dual(W, report=True)
    M = spec.partner
    doc = io.board_to_json(W.board)
    doc.update(
        order=spec.n, margin=spec.d, augmented=spec.augmented, leapers=[[spec.leaper.p, spec.leaper.q], [M.p, M.q]],
        dual=ok, reason=why, triplets=[[list(a), list(t)] for a, t in sorted(W.triplets.items())],
    )
    lines = [f"W_{spec.n},{spec.d}({spec.p},{spec.q}): {len(W)} squares, leapers {spec.leaper} and {M}"]
    lines.append("dual" if ok else f"not verified: {why}")
    _out(args, doc, lines)
    if args.svg:
        G = build_leaper_graph(spec.leaper, W.squares)
        with open(args.svg, "w", encoding="utf-8") as fh:
            fh.write(render_svg(W.squares, RenderSpec(cell_px=8, overlays=edge_overlays(G, width=1), dots=True)))
    return 0 if ok else 1


def cmd_dirgraph(args) -> int:
    if args.pinwheel is not None:
        G, Gc, eta, A, tag = pinwheel_duality(args.pinwheel, args.margin)
        doc = io.dirgraph_to_json(G)
        doc.update(matrix=[list(r) for r in A], witness=tag if eta is not None else None)
        _out(args, doc, [f"pinwheel graph: {G.n} vertices, {len(G.arcs) // 2} edges",
                         f"dual witness: {tag}" if eta is not None else "no dual witness"])
        return 0 if eta is not None else 1
    if args.p is not None:
        L, dec, types = _center(args)
        docs, lines = [], []
        for i, cycles in types:
            G = extract(build_leaper_graph(L, cycles[0]))
            docs.append({"type": i, "labels": cycle_labels(G)})
            lines.append(f"type {i}: {''.join(map(str, cycle_labels(G)))}")
        _out(args, {"leaper": [L.p, L.q], "types": docs}, lines)
        return 0
    e = _descent(args.seed_descent)
    G = second_fundamental(args.origin, e) if args.origin else fundamental_cycle(e)
    labels = cycle_labels(G)
    _out(args, {"descent": e, "origin": args.origin, "signature": signature_of_descent(e), "labels": labels},
         ["".join(map(str, labels))])
    return 0


def cmd_verify(args) -> int:
    names = suite_names() if args.suite == "all" else [args.suite]
    code = 0
    for name in names:
        res = run_suite(name, args.max_sum, emit=print if args.json else None)
        if not args.json:
            status = "ok" if res.ok else f"{len(res.failures)} failures"
            print(f"{res.name}: {res.cases} cases, {status}")
            for cid, why in res.failures[:10]:
                print(f"  {cid}: {why}")
        code |= res.exit_code
    return code


def cmd_render(args) -> int:
    if args.figure:
        text = FIGURES[args.figure]()
    else:
        with open(args.input, encoding="utf-8") as fh:
            doc = json.load(fh)
        if doc.get("type") == "cycle":
            cyc = io.cycle_from_json(doc)
            text = render_svg(cyc, RenderSpec(overlays=(Overlay(cyc),)))
        else:
            text = render_svg(io.board_from_json(doc))
    if args.svg:
        with open(args.svg, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="leapers", description="Leaper cycles, dual boards and direction graphs.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="print JSON instead of text")
    common.add_argument("--svg", metavar="FILE", help="also write a drawing")
    sub = ap.add_subparsers(dest="cmd", required=True)

    def pq(p):
        p.add_argument("p", type=int)
        p.add_argument("q", type=int)
        return p

    pq(sub.add_parser("analyze", parents=[common], help="descent, ecf and cycle types")).set_defaults(func=cmd_analyze)
    pq(sub.add_parser("cycles", parents=[common], help="cycles on the centred board")).set_defaults(func=cmd_cycles)
    p = sub.add_parser("lift", parents=[common], help="lift every cycle of a leaper by f, g or h")
    p.add_argument("kind", choices="fgh")
    pq(p).set_defaults(func=cmd_lift)
    pq(sub.add_parser("second-leaper", parents=[common], help="second-leaper cycles")).set_defaults(func=cmd_second)
    p = pq(sub.add_parser("dualboard", parents=[common], help="dual board from a perfect seed (p q is the seed leaper)"))
    p.add_argument("--origin", "-o", choices="fgh", required=True)
    p.add_argument("--seed-descent", "--descent", "-e", dest="seed_descent", default="", help="lift string over f, g, h and H (barred h)")
    p.set_defaults(func=cmd_dualboard)
    p = sub.add_parser("pinwheel", parents=[common], help="pinwheel board and its duality check")
    p.add_argument("n", type=int)
    pq(p)
    p.add_argument("--margin", "-d", type=int, default=0)
    p.add_argument("--augmented", action="store_true")
    p.set_defaults(func=cmd_pinwheel)
    p = sub.add_parser("dirgraph", parents=[common], help="direction graphs")
    p.add_argument("p", type=int, nargs="?")
    p.add_argument("q", type=int, nargs="?")
    p.add_argument("--seed-descent", "--descent", "-e", dest="seed_descent", default="")
    p.add_argument("--origin", "-o", choices="fgh")
    p.add_argument("--pinwheel", type=int, metavar="N")
    p.add_argument("--margin", "-d", type=int, default=0)
    p.set_defaults(func=cmd_dirgraph)
    p = sub.add_parser("verify", parents=[common], help="run a sweep")
    p.add_argument("suite", choices=suite_names() + list(ALIASES) + ["all"])
    p.add_argument("--max-sum", type=int, help="range bound (default per suite: %s)" % DEFAULT_MAX_SUM)
    p.set_defaults(func=cmd_verify)
    p = sub.add_parser("render", parents=[common], help="draw a named figure or a JSON board/cycle")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--figure", choices=sorted(FIGURES))
    g.add_argument("--input", metavar="JSON")
    p.set_defaults(func=cmd_render)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "p", None) is not None and args.q is None:
        build_parser().error("give both p and q")
    try:
        return args.func(args)
    except LeaperError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
