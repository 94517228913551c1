"""Deterministic SVG drawings of boards with cycle and edge overlays."""

from __future__ import annotations

from dataclasses import dataclass, field

from .board import Board, LeaperGraph
from .errors import EmptyBoard, InvalidSpec

PALETTE = ("#c0392b", "#2471a3", "#1e8449", "#7d3c98", "#b9770e", "#17202a")


@dataclass(frozen=True)
class Overlay:
    points: tuple
    stroke: str = PALETTE[0]
    width: float = 2.0
    closed: bool = True
    dashed: bool = False


@dataclass(frozen=True)
class RenderSpec:
    cell_px: int = 24
    overlays: tuple = field(default=())
    show_grid: bool = True
    dots: bool = False

    def __post_init__(self):
        if self.cell_px < 4:
            raise InvalidSpec(f"cell_px must be at least 4, got {self.cell_px}")


def _num(v) -> str:
    v = round(v, 3)
    return str(int(v)) if v == int(v) else f"{v:g}"


def edge_overlays(G: LeaperGraph, stroke: str = PALETTE[1], width: float = 1.5, dashed: bool = False):
    return tuple(Overlay((a, b), stroke, width, closed=False, dashed=dashed) for a, b in sorted(G.edges))


def render_svg(B, spec: RenderSpec | None = None) -> str:
    spec = spec or RenderSpec()
    squares = sorted(B.squares if isinstance(B, Board) else B)
    if not squares:
        raise EmptyBoard("nothing to draw")
    c = spec.cell_px
    # doubled coordinates: centre at (x2/2, -y2/2) cells
    pos = lambda a: (a[0] * c / 2, -a[1] * c / 2)
    xs = [a[0] for a in squares]
    ys = [a[1] for a in squares]
    x0, x1 = min(xs) * c / 2 - c, max(xs) * c / 2 + c
    y0, y1 = -max(ys) * c / 2 - c, -min(ys) * c / 2 + c
    w, h = x1 - x0, y1 - y0
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_num(w)}" height="{_num(h)}" '
        f'viewBox="{_num(x0)} {_num(y0)} {_num(w)} {_num(h)}">'
    ]
    stroke = ' stroke="#555" stroke-width="1"' if spec.show_grid else ""
    for a in squares:
        x, y = pos(a)
        out.append(
            f'<rect x="{_num(x - c / 2)}" y="{_num(y - c / 2)}" width="{c}" height="{c}" fill="#eee"{stroke}/>'
        )
    for ov in spec.overlays:
        pts = list(ov.points) + ([ov.points[0]] if ov.closed else [])
        pts = " ".join(f"{_num(x)},{_num(y)}" for x, y in map(pos, pts))
        dash = ' stroke-dasharray="4 3"' if ov.dashed else ""
        out.append(
            f'<polyline points="{pts}" fill="none" stroke="{ov.stroke}" stroke-width="{_num(ov.width)}"{dash}/>'
        )
    if spec.dots:
        for a in squares:
            x, y = pos(a)
            out.append(f'<circle cx="{_num(x)}" cy="{_num(y)}" r="{_num(c / 8)}" fill="#000"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
