"""SVG and ASCII renderings of mosaics, puzzles and LR tableaux.

All geometry is exact up to this module; floats appear only when SVG
coordinates are written, always with six decimals.
"""

from __future__ import annotations

from math import sqrt

from . import puzzles as pz
from .combinat import LRTableau
from .geometry import RHOMBUS, SQUARE, TRIANGLE
from .mosaic import Mosaic

SCALE = 40.0
MARGIN = 10.0
TILE_FILL = {TRIANGLE: "#f2d7a6", SQUARE: "#a6c8f2", RHOMBUS: "#d9534f"}
LABEL_COLOUR = {0: "#3a7d44", 1: "#2b59c3", 2: "#c9302c"}
PIECE_FILL = {"0": "#e8f3ea", "1": "#e6ecfa", "2": "#fbe3e2"}


class RenderError(ValueError):
    pass


def _num(x: float) -> str:
    s = f"{x:.6f}"
    return "0.000000" if s == "-0.000000" else s


def _document(points: list, body: list) -> str:
    xs = [p[0] for p in points] or [0.0]
    ys = [p[1] for p in points] or [0.0]
    x0, y0 = min(xs) - MARGIN, min(ys) - MARGIN
    w, h = max(xs) - min(xs) + 2 * MARGIN, max(ys) - min(ys) + 2 * MARGIN
    head = (
        '<?xml version="1.0" encoding="UTF-8"?>\n'
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'viewBox="{_num(x0)} {_num(y0)} {_num(w)} {_num(h)}" width="{_num(w)}" height="{_num(h)}">\n'
    )
    return head + "".join(line + "\n" for line in body) + "</svg>\n"


def _polygon(pts: list, fill: str, stroke: str = "#333333", width: float = 1.0) -> str:
    coords = " ".join(f"{_num(x)},{_num(y)}" for x, y in pts)
    return f'  <polygon points="{coords}" fill="{fill}" stroke="{stroke}" stroke-width="{_num(width)}"/>'


def _screen(p) -> tuple[float, float]:
    x, y = p.to_float()
    return (x * SCALE, -y * SCALE)


def mosaic_svg(m: Mosaic) -> str:
    body = []
    allpts = []
    order = {TRIANGLE: 0, SQUARE: 1, RHOMBUS: 2}
    for t in sorted(m.tiles, key=lambda t: (order[t.kind], t.vertices)):
        pts = [_screen(v) for v in t.vertices]
        allpts.extend(pts)
        body.append(_polygon(pts, TILE_FILL[t.kind]))
    outline = [_screen(v) for v in m.region.vertices]
    allpts.extend(outline)
    body.append(_polygon(outline, "none", "#000000", 2.0))
    for name in m.region.nest_names:
        x, y = _screen(m.region.vertex(name))
        body.append(f'  <text x="{_num(x)}" y="{_num(y)}" font-size="12" fill="#000000">{name}</text>')
    return _document(allpts, body)


def _lattice(p) -> tuple[float, float]:
    i, j = p
    return ((i + j / 2) * SCALE, -(j * sqrt(3) / 2) * SCALE)


def puzzle_svg(p: pz.Puzzle) -> str:
    body = []
    allpts = []
    for tri, labs in sorted(p.triangle_labels().items()):
        pts = [_lattice(v) for v in pz.triangle_vertices(tri)]
        allpts.extend(pts)
        key = "2" if 2 in labs else str(labs[0])
        body.append(_polygon(pts, PIECE_FILL[key], "none", 0.0))
    for key, label in p.labels:
        a, b = (_lattice(v) for v in pz.edge_endpoints(key))
        body.append(
            f'  <line x1="{_num(a[0])}" y1="{_num(a[1])}" x2="{_num(b[0])}" y2="{_num(b[1])}" '
            f'stroke="{LABEL_COLOUR[label]}" stroke-width="3.000000"/>'
        )
    return _document(allpts, body)


def tableau_svg(t: LRTableau) -> str:
    body = []
    allpts = []
    top = len(t.outer)
    entries = t.as_dict()
    for r, length in enumerate(t.outer):
        for c in range(length):
            x, y = c * SCALE, (top - 1 - r) * SCALE
            pts = [(x, y), (x + SCALE, y), (x + SCALE, y + SCALE), (x, y + SCALE)]
            allpts.extend(pts)
            inner = (r, c) not in entries
            body.append(_polygon(pts, "#dddddd" if inner else "#ffffff"))
            if not inner:
                body.append(
                    f'  <text x="{_num(x + SCALE / 2)}" y="{_num(y + SCALE * 0.65)}" font-size="16" '
                    f'text-anchor="middle">{entries[(r, c)]}</text>'
                )
    return _document(allpts, body)


def tableau_ascii(t: LRTableau) -> str:
    """Rows from top to bottom with French diagrams (the longest row printed last); ``.`` marks the inner shape."""
    entries = t.as_dict()
    lines = []
    for r in range(len(t.outer) - 1, -1, -1):
        lines.append(" ".join(str(entries[(r, c)]) if (r, c) in entries else "." for c in range(t.outer[r])))
    return "".join(line + "\n" for line in lines)


def puzzle_ascii(p: pz.Puzzle) -> str:
    """Two lines per row of triangles, top row first: the slanted edges west to east, then the
    horizontal edges below them.  A bipuzzle starts with its top side."""
    m = p.label_map()
    lines = []
    if p.region == pz.RHOMBUS_REGION:
        lines.append(" " * p.n + " ".join(str(m[("h", i, p.n)]) for i in range(p.n)))
    for j in range(p.n - 1, -1, -1):
        width = p.n - j if p.region == pz.TRIANGLE_REGION else p.n
        slanted = []
        for i in range(width):
            slanted += [m[("u", i, j)], m[("d", i, j)]]
        if p.region == pz.RHOMBUS_REGION:
            slanted.append(m[("u", p.n, j)])
        lines.append(" " * j + " ".join(map(str, slanted)))
        lines.append(" " * j + " ".join(str(m[("h", i, j)]) for i in range(width)))
    return "".join(line + "\n" for line in lines)


def render(obj, fmt: str) -> str:
    if fmt == "svg":
        if isinstance(obj, Mosaic):
            return mosaic_svg(obj)
        if isinstance(obj, pz.Puzzle):
            return puzzle_svg(obj)
        if isinstance(obj, LRTableau):
            return tableau_svg(obj)
    if fmt == "ascii":
        if isinstance(obj, pz.Puzzle):
            return puzzle_ascii(obj)
        if isinstance(obj, LRTableau):
            return tableau_ascii(obj)
    raise RenderError(f"cannot render {type(obj).__name__} as {fmt}")
