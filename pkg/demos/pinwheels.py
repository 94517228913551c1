"""Pinwheel boards: one board, two leapers, the same graph.

    python demos/pinwheels.py
"""

from leapers.pinwheel import PinwheelSpec, build_pinwheel, pinwheel_duality, verify_pinwheel_dual


def main():
    for n, p, q, d in [(1, 0, 1, 0), (2, 1, 2, 0), (2, 1, 2, 1), (3, 1, 2, 2), (2, 2, 1, 0)]:
        spec = PinwheelSpec(n, p, q, d)
        W = build_pinwheel(spec)
        ok, why = verify_pinwheel_dual(W, report=True)
        print(f"n={n} margin={d} {spec.leaper} -> {spec.partner}: {len(W)} squares, "
              + ("isomorphic" if ok else why))

    for aug in (1, 2, 3):
        ok, why = verify_pinwheel_dual(PinwheelSpec(aug, 0, 1, augmented=True), report=True)
        print(f"augmented n={aug}: " + ("isomorphic" if ok else why))

    for n in (1, 2, 3):
        G, _, eta, A, tag = pinwheel_duality(n)
        print(f"direction graph n={n}: {G.n} vertices, matrix {A}, witness {tag if eta else 'none'}")


if __name__ == "__main__":
    main()
