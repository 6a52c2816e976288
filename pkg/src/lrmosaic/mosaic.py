"""Mosaics, bimosaics, nests and flocks, and the straightening bijection with puzzles.

The hexagon ``A'AB'BC'C`` is placed with ``A`` at the origin, ``E_A`` along
0 degrees and ``N_A`` along 150 degrees.  Directions are counted in steps of
30 degrees.  A puzzle edge pointing at ``60 t`` degrees with label ``l``
becomes a mosaic edge at ``60 t + 120 - 30 l`` degrees, so 0-edges keep
their slope up to a global turn and 1-edges tilt by a further 30 degrees.
Squares are the images of rhombus pieces; thin rhombi collapse to segments
and live only in the nests.

Every nest is a 150-degree cone spanned by ``E`` and ``N`` (``N`` is ``E``
turned 150 degrees counterclockwise).  A rhombus packed in the nest is the
cell ``(i, j)``: the parallelogram ``corner + i E + j N + [0,1] E + [0,1] N``
with ``0 <= i < n-d`` and ``0 <= j < d``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from . import puzzles as pz
from .combinat import (
    BoxParams,
    LRTableau,
    SkewShape,
    cells,
    complement,
    enumerate_lr,
    partition,
    partition_of_string,
    shape_of_cells,
    string_of_partition,
    validate_lr,
    yamanouchi,
)
from .geometry import (
    ORIGIN,
    RHOMBUS,
    SQUARE,
    TRIANGLE,
    ExactPoint,
    Tile,
    cross_sign,
    direction_of,
    lattice_coords,
    parallelogram,
    surd_cmp,
    frame_x,
    frame_y,
    unit,
    unit_steps,
    validate_patch_tiling,
)

HEXAGON = "hexagon"
OCTAGON = "octagon"

# Orientation codes, in the order of the variant table:
# (-E,-N), (E,N), (-N,-E), (N,E).
MINUS_EN, PLUS_EN, MINUS_NE, PLUS_NE = "-EN", "+EN", "-NE", "+NE"
ORIENTATIONS = (MINUS_EN, PLUS_EN, MINUS_NE, PLUS_NE)

# (side direction, length factor) walking clockwise from A'; "w" = n-d, "h" = d
_HEX_SIDES = [(6, "w"), (5, "h"), (2, "w"), (1, "h"), (10, "w"), (9, "h")]
_OCT_SIDES = [(6, "w"), (5, "h"), (4, "w"), (3, "h"), (0, "w"), (11, "h"), (10, "w"), (9, "h")]
_HEX_NAMES = ["A'", "A", "B'", "B", "C'", "C"]
_OCT_NAMES = ["A'", "A", "B'", "B", "C'", "C", "D'", "D"]


class MosaicIntegrityError(RuntimeError):
    """A construction that must succeed did not (signals a bug)."""


@dataclass(frozen=True)
class Nest:
    name: str
    corner: ExactPoint
    e_dir: int
    n_dir: int
    width: int  # extent along E, n - d
    height: int  # extent along N, d

    def cell_tile(self, i: int, j: int) -> Tile:
        e, n = unit(self.e_dir), unit(self.n_dir)
        return parallelogram(RHOMBUS, self.corner + e.scale(i) + n.scale(j), e, n)

    def cell_of(self, tile: Tile) -> tuple[int, int] | None:
        """The cell of ``tile`` in this nest's grid, if it is one."""
        if tile.kind != RHOMBUS:
            return None
        best = None
        for v in tile.vertices:
            ij = lattice_coords(v - self.corner, self.e_dir, self.n_dir)
            if ij is None:
                return None
            if best is None or ij < best:
                best = ij
        i, j = best
        if not (0 <= i < self.width and 0 <= j < self.height):
            return None
        return best if self.cell_tile(i, j) == tile else None

    def axes(self, code: str) -> tuple[int, int]:
        """Directions of the (east, north) vectors of an orientation."""
        e, n = self.e_dir, self.n_dir
        if code == PLUS_EN:
            return e, n
        if code == MINUS_EN:
            return (e + 6) % 12, (n + 6) % 12
        if code == PLUS_NE:
            return n, e
        if code == MINUS_NE:
            return (n + 6) % 12, (e + 6) % 12
        raise ValueError(f"unknown orientation {code!r}")

    def code_of_axes(self, e_dir: int, n_dir: int) -> str | None:
        for code in ORIENTATIONS:
            if self.axes(code) == (e_dir % 12, n_dir % 12):
                return code
        return None

    def oriented_dims(self, code: str) -> tuple[int, int]:
        """(rows, columns) of the box as seen in an orientation."""
        return (self.height, self.width) if code[1:] == "EN" else (self.width, self.height)

    def to_oriented(self, code: str, cell: tuple[int, int]) -> tuple[int, int]:
        """Nest cell ``(i, j)`` -> tableau cell ``(row, col)`` in an orientation."""
        i, j = cell
        w, h = self.width, self.height
        if code == PLUS_EN:
            return (j, i)
        if code == MINUS_EN:
            return (h - 1 - j, w - 1 - i)
        if code == PLUS_NE:
            return (i, j)
        return (w - 1 - i, h - 1 - j)

    def from_oriented(self, code: str, rc: tuple[int, int]) -> tuple[int, int]:
        r, c = rc
        w, h = self.width, self.height
        if code == PLUS_EN:
            return (c, r)
        if code == MINUS_EN:
            return (w - 1 - c, h - 1 - r)
        if code == PLUS_NE:
            return (r, c)
        return (w - 1 - r, h - 1 - c)

    def to_json(self) -> dict:
        return {
            "corner": self.corner.to_json(),
            "E": self.e_dir * 30,
            "N": self.n_dir * 30,
            "width": self.width,
            "height": self.height,
        }


def opens_northeast(code: str) -> bool:
    return code[0] == "+"


@dataclass(frozen=True)
class MosaicRegion:
    box: BoxParams
    kind: str
    names: tuple[str, ...]
    vertices: tuple[ExactPoint, ...]
    nests: tuple[Nest, ...]

    def vertex(self, name: str) -> ExactPoint:
        return self.vertices[self.names.index(name)]

    def nest(self, name: str) -> Nest:
        for x in self.nests:
            if x.name == name:
                return x
        raise KeyError(name)

    @property
    def nest_names(self) -> tuple[str, ...]:
        return tuple(x.name for x in self.nests)

    def side_lengths(self) -> list[int]:
        out = []
        m = len(self.vertices)
        for i in range(m):
            d = self.vertices[(i + 1) % m] - self.vertices[i]
            k = 1
            while direction_of(_div(d, k)) is None:
                k += 1
            out.append(k)
        return out

    def interior_angles(self) -> list[int]:
        """Interior angles in degrees at each vertex (clockwise listing)."""
        dirs = []
        m = len(self.vertices)
        for i in range(m):
            d = self.vertices[(i + 1) % m] - self.vertices[i]
            k = self.side_lengths()[i]
            dirs.append(direction_of(_div(d, k)))
        out = []
        for i in range(m):
            turn = (dirs[i - 1] - dirs[i]) % 12  # clockwise turn arriving at vertex i
            out.append(180 - 30 * turn)
        return out

    def ccw_vertices(self) -> list[ExactPoint]:
        return list(reversed(self.vertices))


def _div(p: ExactPoint, k: int) -> ExactPoint:
    if any(x % k for x in (p.a, p.b, p.c, p.e)):
        return ExactPoint(1, 1, 1, 1)  # never a unit vector
    return ExactPoint(p.a // k, p.b // k, p.c // k, p.e // k)


def build_region(box: BoxParams, kind: str = HEXAGON) -> MosaicRegion:
    """The hexagon (mosaics) or octagon (bimosaics) of ``box``, vertices listed clockwise from ``A'``."""
    sides, names = (_HEX_SIDES, _HEX_NAMES) if kind == HEXAGON else (_OCT_SIDES, _OCT_NAMES)
    if kind not in (HEXAGON, OCTAGON):
        raise ValueError(f"unknown region kind {kind!r}")
    lengths = {"w": box.width, "h": box.d}
    a_prime = unit(0).scale(box.width)
    pts = [a_prime]
    for k, which in sides:
        pts.append(pts[-1] + unit(k).scale(lengths[which]))
    if pts[-1] != a_prime:
        raise MosaicIntegrityError("region does not close")
    pts.pop()
    if pts[1] != ORIGIN:
        raise MosaicIntegrityError("A is not at the origin")
    nests = []
    m = len(pts)
    for idx in range(1, m, 2):
        corner = pts[idx]
        e_dir = direction_of(_div(pts[idx - 1] - corner, box.width))
        n_dir = direction_of(_div(pts[(idx + 1) % m] - corner, box.d))
        if e_dir is None or n_dir is None or (n_dir - e_dir) % 12 != 5:
            raise MosaicIntegrityError(f"nest {names[idx]} is not a 150 degree cone")
        nests.append(Nest(names[idx], corner, e_dir, n_dir, box.width, box.d))
    return MosaicRegion(box, kind, tuple(names), tuple(pts), tuple(nests))


# --- mosaics -----------------------------------------------------------------


@dataclass(frozen=True)
class Mosaic:
    """A tiling of the hexagon (mosaic) or octagon (bimosaic) of a box."""

    region: MosaicRegion
    tiles: frozenset

    @property
    def box(self) -> BoxParams:
        return self.region.box

    @property
    def kind(self) -> str:
        return self.region.kind

    def rhombi(self) -> list[Tile]:
        return sorted((t for t in self.tiles if t.kind == RHOMBUS), key=lambda t: t.vertices)

    def locate(self, tile: Tile) -> tuple[str, tuple[int, int]] | None:
        """The (nest, cell) a rhombus is packed at, judged by position only."""
        hits = []
        for nest in self.region.nests:
            cell = nest.cell_of(tile)
            if cell is not None:
                hits.append((nest.name, cell))
        if len(hits) > 1:
            # octagon nests of the same type can overlap; keep the one holding a corner chain
            hits = [h for h in hits if _supported(self, h[0], h[1])] or hits
        return hits[0] if hits else None

    def nest_cells(self, name: str) -> set[tuple[int, int]]:
        nest = self.region.nest(name)
        out = set()
        for t in self.tiles:
            if t.kind == RHOMBUS:
                cell = nest.cell_of(t)
                if cell is not None:
                    out.add(cell)
        return out

    def nest_tiles(self, name: str) -> list[Tile]:
        nest = self.region.nest(name)
        return [t for t in self.rhombi() if nest.cell_of(t) is not None]

    def nest_partition(self, name: str, code: str = PLUS_EN) -> tuple:
        nest = self.region.nest(name)
        return shape_of_cells(nest.to_oriented(code, c) for c in self.nest_cells(name)) if code == PLUS_EN else (
            shape_of_cells(nest.to_oriented(PLUS_NE, c) for c in self.nest_cells(name))
        )

    def boundary(self) -> tuple:
        """Partitions of the nests in their standard orientations."""
        return tuple(self.nest_partition(x) for x in self.region.nest_names)

    def validate(self) -> pz.PuzzleReport:
        rep = validate_patch_tiling(self.region.ccw_vertices(), self.tiles)
        if not rep:
            return pz.PuzzleReport(False, rep.message, rep.where)
        seen = 0
        for name in self.region.nest_names:
            cs = self.nest_cells(name)
            seen += len(cs)
            try:
                shape_of_cells((j, i) for i, j in cs)
            except ValueError:
                return pz.PuzzleReport(False, f"rhombi in nest {name} are not packed", sorted(cs))
        if seen != len(self.rhombi()):
            return pz.PuzzleReport(False, "a rhombus lies outside every nest", None)
        return pz.PuzzleReport(True)

    def to_json(self) -> dict:
        return {
            "box": {"d": self.box.d, "n": self.box.n},
            "kind": self.kind,
            "tiles": [t.to_json() for t in sorted(self.tiles, key=lambda t: (t.kind, t.vertices))],
            "nests": {x.name: list(p) for x, p in zip(self.region.nests, self.boundary())},
        }

    @classmethod
    def from_json(cls, data: dict) -> Mosaic:
        box = BoxParams(int(data["box"]["d"]), int(data["box"]["n"]))
        region = build_region(box, data.get("kind", HEXAGON))
        return cls(region, frozenset(Tile.from_json(t) for t in data["tiles"]))


def _supported(m: Mosaic, name: str, cell) -> bool:
    i, j = cell
    cs = m.nest_cells(name)
    return (i == 0 or (i - 1, j) in cs) and (j == 0 or (i, j - 1) in cs)


def nest_rhombi(nest: Nest, lam) -> list[Tile]:
    """Packed rhombi realizing the partition ``lam`` in the standard orientation."""
    return [nest.cell_tile(c, r) for r, c in cells(partition(lam))]


def decode_transformed_diagram(rhombi: Iterable[Tile], nest: Nest, code: str = PLUS_EN) -> SkewShape:
    """Read packed rhombi as a diagram through an orientation of their nest.

    Opening north-east the cells are a straight diagram; opening south-west
    they are read inside the oriented box, giving a skew diagram.
    """
    cs = set()
    for t in rhombi:
        cell = nest.cell_of(t)
        if cell is None:
            raise ValueError(f"{t} is not packed in nest {nest.name}")
        cs.add(nest.to_oriented(code, cell))
    rows, cols = nest.oriented_dims(code)
    if opens_northeast(code):
        return SkewShape(shape_of_cells(cs), ())
    everything = {(r, c) for r in range(rows) for c in range(cols)}
    return SkewShape(shape_of_cells(everything), shape_of_cells(everything - cs))


# --- straightening -------------------------------------------------------------

_PUZZLE_DIR = {"h": 0, "u": 2, "d": 4}  # in 30-degree steps
_LATTICE_STEP = {0: (1, 0), 2: (0, 1), 4: (-1, 1), 6: (-1, 0), 8: (0, -1), 10: (1, -1)}


def mosaic_direction(puzzle_dir: int, label: int) -> int:
    """Mosaic direction (30-degree steps) of a unit puzzle edge direction with a 0/1 label."""
    return (puzzle_dir + 4 - label) % 12


def puzzle_step(mosaic_dir: int) -> tuple[tuple[int, int], int]:
    """Inverse of :func:`mosaic_direction`: lattice step and label of a mosaic direction."""
    label = mosaic_dir % 2
    return _LATTICE_STEP[(mosaic_dir - 4 + label) % 12], label


def _to_puzzle_coords(p: ExactPoint, origin: ExactPoint) -> tuple[int, int]:
    """The linear straightening map on mosaic points, up to translation."""
    d = p - origin
    x2, x1 = d.e, d.b
    x0, x3 = (d.a - d.e) // 2, (d.c - d.b) // 2
    # images of 1, z, z^2, z^3 under the straightening map
    i = x1 + x2 + x3
    j = -x0 - x1 - x2
    return (i, j)


def puzzle_to_mosaic(p: pz.Puzzle, box: BoxParams | None = None) -> Mosaic:
    """Straighten backwards: every piece becomes a tile, nest rhombi fill the corners."""
    if box is None:
        ones = p.boundary()[0].count("1")
        box = BoxParams(ones, p.n)
    if box.n != p.n:
        raise ValueError("box and puzzle sizes differ")
    kind = HEXAGON if p.region == pz.TRIANGLE_REGION else OCTAGON
    region = build_region(box, kind)
    labels = p.label_map()
    pos = {(0, 0): region.vertex("A'")}
    adj: dict = {}
    for key, lab in labels.items():
        if lab == 2:
            continue
        u, v = pz.edge_endpoints(key)
        adj.setdefault(u, []).append((v, mosaic_direction(_PUZZLE_DIR[key[0]], lab), 1))
        adj.setdefault(v, []).append((u, mosaic_direction(_PUZZLE_DIR[key[0]], lab), -1))
    stack = [(0, 0)]
    while stack:
        u = stack.pop()
        for v, k, sgn in adj.get(u, ()):
            q = pos[u] + (unit(k) if sgn > 0 else -unit(k))
            if v in pos:
                if pos[v] != q:
                    raise MosaicIntegrityError(f"pieces do not close at {v}")
            else:
                pos[v] = q
                stack.append(v)
    tiles = set()
    tri_labels = p.triangle_labels()
    done_rhombus = set()
    for tri, labs in tri_labels.items():
        verts = pz.triangle_vertices(tri)
        if 2 not in labs:
            tiles.add(Tile.make(TRIANGLE, [pos[v] for v in verts]))
            continue
        diag = pz.triangle_edges(tri)[labs.index(2)]
        if diag in done_rhombus:
            continue
        done_rhombus.add(diag)
        a, b = pz.edge_endpoints(diag)
        others = set()
        for t2 in tri_labels:
            if diag in pz.triangle_edges(t2):
                others.update(pz.triangle_vertices(t2))
        apex = sorted(others - {a, b})
        tiles.add(Tile.make(SQUARE, [pos[a], pos[apex[0]], pos[b], pos[apex[1]]]))
    strings = p.boundary()
    for nest, s in zip(region.nests, strings):
        tiles.update(nest_rhombi(nest, partition_of_string(s, box)))
    m = Mosaic(region, frozenset(tiles))
    rep = m.validate()
    if not rep:
        raise MosaicIntegrityError(f"straightened puzzle is not a mosaic: {rep.message}")
    return m


def mosaic_to_puzzle(m: Mosaic) -> pz.Puzzle:
    """Remove the rhombi and pull the remaining tiles straight."""
    origin = m.region.vertex("A'")
    labels: dict = {}
    for t in m.tiles:
        if t.kind == RHOMBUS:
            continue
        coords = [_to_puzzle_coords(v, origin) for v in t.vertices]
        for (u, v), (pu, pv) in zip(t.edges(), zip(coords, coords[1:] + coords[:1])):
            k = direction_of(v - u)
            _, lab = puzzle_step(k)
            key, _ = pz.edge_of(pu, pv)
            if labels.setdefault(key, lab) != lab:
                raise MosaicIntegrityError(f"conflicting labels on {key}")
        if t.kind == SQUARE:
            # the short diagonal of the straightened rhombus carries the hidden label
            for a, b in ((coords[0], coords[2]), (coords[1], coords[3])):
                try:
                    key, _ = pz.edge_of(a, b)
                except ValueError:
                    continue
                labels[key] = 2
                break
            else:
                raise MosaicIntegrityError("square does not straighten to a rhombus piece")
    region = pz.TRIANGLE_REGION if m.kind == HEXAGON else pz.RHOMBUS_REGION
    p = pz.Puzzle.make(m.box.n, labels, region)
    rep = pz.validate_puzzle(p)
    if not rep:
        raise MosaicIntegrityError(f"straightened mosaic is not a puzzle: {rep.message}")
    return p


def mosaic_boundary(m: Mosaic) -> tuple:
    return m.boundary()


def all_mosaics(box: BoxParams, kind: str = HEXAGON) -> list[Mosaic]:
    """Every mosaic (or bimosaic) of the box, via the puzzle engine."""
    region = pz.TRIANGLE_REGION if kind == HEXAGON else pz.RHOMBUS_REGION
    out = []
    for p in pz.all_puzzles(box.n, region=region):
        if p.boundary()[0].count("1") == box.d:
            out.append(puzzle_to_mosaic(p, box))
    return out


def mosaics_with_boundary(box: BoxParams, parts: Sequence) -> list[Mosaic]:
    strings = tuple(string_of_partition(x, box) for x in parts)
    if len(parts) == 3:
        found = pz.enumerate_puzzles(strings)
    else:
        found = pz.enumerate_bipuzzles(strings)
    return [puzzle_to_mosaic(p, box) for p in found]


# --- flocks -----------------------------------------------------------------------


@dataclass(frozen=True)
class Flock:
    """Rhombi of one nest with an orientation and an LR filling.

    ``entries`` holds ``((i, j), value)`` in nest cell coordinates.
    """

    nest: str
    orientation: str
    entries: tuple

    @classmethod
    def make(cls, nest: str, orientation: str, mapping: dict) -> Flock:
        return cls(nest, orientation, tuple(sorted(mapping.items())))

    def as_dict(self) -> dict:
        return dict(self.entries)

    def cells(self) -> set:
        return {c for c, _ in self.entries}

    def __len__(self) -> int:
        return len(self.entries)

    def content(self) -> tuple:
        counts: dict = {}
        for _, v in self.entries:
            counts[v] = counts.get(v, 0) + 1
        return partition(counts.get(k, 0) for k in range(1, len(counts) + 1))

    def to_json(self) -> dict:
        return {
            "nest": self.nest,
            "orientation": self.orientation,
            "entries": [[i, j, v] for (i, j), v in self.entries],
        }

    @classmethod
    def from_json(cls, data: dict) -> Flock:
        return cls.make(data["nest"], data["orientation"], {(i, j): v for i, j, v in data["entries"]})


def flock_shape(m: Mosaic, flock: Flock) -> SkewShape:
    """The skew shape of a flock's cells read through its orientation, placed in the oriented box."""
    nest = m.region.nest(flock.nest)
    code = flock.orientation
    total = {nest.to_oriented(code, c) for c in m.nest_cells(flock.nest)}
    mine = {nest.to_oriented(code, c) for c in flock.cells()}
    if not mine <= total:
        raise ValueError("flock cells are not rhombi of the nest")
    if opens_northeast(code):
        return SkewShape(shape_of_cells(total), shape_of_cells(total - mine))
    rows, cols = nest.oriented_dims(code)
    everything = {(r, c) for r in range(rows) for c in range(cols)}
    return SkewShape(shape_of_cells(everything - (total - mine)), shape_of_cells(everything - total))


def flock_tableau(m: Mosaic, flock: Flock) -> LRTableau:
    nest = m.region.nest(flock.nest)
    shape = flock_shape(m, flock)
    mapping = {nest.to_oriented(flock.orientation, c): v for c, v in flock.entries}
    return LRTableau.make(shape.outer, shape.inner, mapping)


def flock_from_tableau(m: Mosaic, nest_name: str, code: str, t: LRTableau) -> Flock:
    """The flock whose reading through ``code`` is ``t`` (cells must exist in ``m``)."""
    nest = m.region.nest(nest_name)
    mapping = {nest.from_oriented(code, rc): v for rc, v in t.entries}
    f = Flock.make(nest_name, code, mapping)
    if flock_tableau(m, f) != t:
        raise ValueError("tableau does not match the nest contents in this orientation")
    return f


def validate_flock(m: Mosaic, flock: Flock):
    try:
        t = flock_tableau(m, flock)
    except ValueError as exc:
        return pz.PuzzleReport(False, str(exc))
    rep = validate_lr(t)
    return pz.PuzzleReport(rep.ok, rep.condition or "", rep.where)


def is_accessible(m: Mosaic, flock: Flock) -> bool:
    """Whether the flock is the nest contents minus a straight (packed) diagram."""
    total = m.nest_cells(flock.nest)
    mine = flock.cells()
    if not mine <= total:
        return False
    try:
        shape_of_cells((j, i) for i, j in total - mine)
    except ValueError:
        return False
    return True


def canonical_content(shape_cells: set, code: str, nest: Nest) -> tuple:
    """Content of the unique flock on a packed set in an orientation."""
    plus = PLUS_EN if code[1:] == "EN" else PLUS_NE
    return shape_of_cells(nest.to_oriented(plus, c) for c in shape_cells)


def canonical_flock(m: Mosaic, nest_name: str, code: str, cell_set: set | None = None) -> Flock:
    """The unique flock on the packed rhombi of a nest (or a packed subset)."""
    nest = m.region.nest(nest_name)
    mine = set(m.nest_cells(nest_name) if cell_set is None else cell_set)
    try:
        shape_of_cells((j, i) for i, j in mine)
    except ValueError as exc:
        raise ValueError("rhombi are not packed") from exc
    nu = canonical_content(mine, code, nest)
    if opens_northeast(code):
        t = yamanouchi(nu)
        mapping = {nest.from_oriented(code, rc): v for rc, v in t.entries}
        return Flock.make(nest_name, code, mapping)
    rows, cols = nest.oriented_dims(code)
    everything = {(r, c) for r in range(rows) for c in range(cols)}
    oriented = {nest.to_oriented(code, c) for c in mine}
    shape = SkewShape(shape_of_cells(everything), shape_of_cells(everything - oriented))
    found = enumerate_lr(shape, nu)
    if len(found) != 1:
        raise MosaicIntegrityError(f"expected one filling, found {len(found)}")
    mapping = {nest.from_oriented(code, rc): v for rc, v in found[0].entries}
    return Flock.make(nest_name, code, mapping)


def packed_cells_for_content(nu, code: str, nest: Nest) -> set:
    """The unique packed set whose canonical flock in ``code`` has content ``nu``."""
    plus = PLUS_EN if code[1:] == "EN" else PLUS_NE
    return {nest.from_oriented(plus, rc) for rc in cells(partition(nu))}


def _partitions_of(k: int, max_part: int | None = None):
    if k == 0:
        yield ()
        return
    top = k if max_part is None else min(k, max_part)
    for first in range(top, 0, -1):
        for rest in _partitions_of(k - first, first):
            yield (first,) + rest


def accessible_flocks(m: Mosaic, nest_name: str, code: str):
    """Every accessible flock of a nest in one orientation: all packed remainders, all LR fillings."""
    nest = m.region.nest(nest_name)
    total = m.nest_cells(nest_name)
    lam = shape_of_cells((j, i) for i, j in total)
    for mu in _sub_partitions(lam):
        kept = {(c, r) for r, c in cells(mu)}
        mine = total - kept
        probe = Flock.make(nest_name, code, {c: 0 for c in mine})
        shape = flock_shape(m, probe)
        for nu in _partitions_of(len(mine)):
            for t in enumerate_lr(shape, nu):
                yield Flock.make(nest_name, code, {nest.from_oriented(code, rc): v for rc, v in t.entries})


def _sub_partitions(lam):
    def rec(i, cap):
        if i == len(lam):
            yield ()
            return
        for p in range(min(lam[i], cap), -1, -1):
            for rest in rec(i + 1, p):
                yield (p,) + rest

    for mu in rec(0, lam[0] if lam else 0):
        yield partition(mu)


def equivalent(alpha: Iterable[Tile], nest_a: Nest, beta: Iterable[Tile], nest_b: Nest) -> bool:
    """Whether an orientation-preserving isometry carries one packed collection onto the other."""
    steps = (nest_b.e_dir - nest_a.e_dir) % 12
    if (nest_b.n_dir - nest_a.n_dir) % 12 != steps:
        return False
    shift = nest_b.corner - nest_a.corner.rot30(steps)
    moved = {Tile.make(t.kind, [v.rot30(steps) + shift for v in t.vertices]) for t in alpha}
    return moved == set(beta)


def is_complement(alpha: Iterable[Tile], nest_a: Nest, beta: Iterable[Tile], nest_b: Nest, box: BoxParams) -> bool:
    """Whether the two collections, moved into one parallelogram, tile it without overlap."""
    ref = Nest("ref", ORIGIN, 0, 5, box.width, box.d)
    a_cells = set()
    for t in alpha:
        c = nest_a.cell_of(t)
        if c is None:
            return False
        a_cells.add(c)
    b_cells = set()
    for t in beta:
        c = nest_b.cell_of(t)
        if c is None:
            return False
        b_cells.add(c)
    # beta enters the parallelogram turned half way round, corner at the far vertex
    far = unit(0).scale(box.width) + unit(5).scale(box.d)
    placed_a = {ref.cell_tile(i, j) for i, j in a_cells}
    placed_b = set()
    for i, j in b_cells:
        t = ref.cell_tile(i, j)
        placed_b.add(Tile.make(t.kind, [far - v for v in t.vertices]))
    full = {ref.cell_tile(i, j) for i in range(box.width) for j in range(box.d)}
    return not (placed_a & placed_b) and placed_a | placed_b == full


def canonical_mosaic(box: BoxParams, beta, empty: str = "A") -> Mosaic:
    """The unique mosaic with one empty nest, ``beta`` in the next nest clockwise and its complement after."""
    beta = partition(beta)
    if not box.fits(beta):
        raise ValueError(f"{beta} does not fit the box")
    order = ["A", "B", "C"]
    k = order.index(empty)
    parts = [None, None, None]
    parts[k] = ()
    parts[(k + 1) % 3] = beta
    parts[(k + 2) % 3] = complement(beta, box)
    found = mosaics_with_boundary(box, parts)
    if len(found) != 1:
        raise MosaicIntegrityError(f"expected a unique mosaic, found {len(found)}")
    return found[0]


# --- brute-force tiling oracle -------------------------------------------------


def _angle_steps(k_from: int, k_to: int) -> int:
    return (k_to - k_from) % 12


def _segments_cross(p1, p2, q1, q2) -> bool:
    """Proper crossing or partial collinear overlap of two segments."""
    d1 = cross_sign(p1, p2, q1)
    d2 = cross_sign(p1, p2, q2)
    d3 = cross_sign(q1, q2, p1)
    d4 = cross_sign(q1, q2, p2)
    if d1 * d2 < 0 and d3 * d4 < 0:
        return True
    if d1 == 0 and d2 == 0:
        if {p1, p2} == {q1, q2}:
            return False
        # collinear: overlap of positive length?
        k = direction_of(p2 - p1)
        if k is None:
            return False
        a = sorted([frame_x(p1, k), frame_x(p2, k)], key=lambda t: t[0] + t[1] * 1.7320508075688772)
        b = sorted([frame_x(q1, k), frame_x(q2, k)], key=lambda t: t[0] + t[1] * 1.7320508075688772)
        lo = a[0] if surd_cmp(a[0], b[0]) >= 0 else b[0]
        hi = a[1] if surd_cmp(a[1], b[1]) <= 0 else b[1]
        return surd_cmp(lo, hi) < 0
    return False


def brute_force_mosaics(box: BoxParams, kind: str = HEXAGON, empty_nests: Sequence[str] = (), limit: int | None = None):
    """Every tiling of the region by unit triangles, squares and nest-cell rhombi, found by corner filling.

    Independent of the puzzle engine.  Rhombi may only sit on cells of the
    nest grids (nests listed in ``empty_nests`` get none); packing is checked
    when a tiling is complete.
    """
    region = build_region(box, kind)
    nests = [x for x in region.nests if x.name not in empty_nests]
    rhombus_cells = {}
    for nest in nests:
        for i in range(nest.width):
            for j in range(nest.height):
                t = nest.cell_tile(i, j)
                rhombus_cells.setdefault(t, nest)
    start = {}
    ccw = region.ccw_vertices()
    for i in range(len(ccw)):
        for u, v in unit_steps(ccw[i], ccw[(i + 1) % len(ccw)]):
            start[(u, v)] = True
    results = []

    def candidates(v, k_out, room):
        out = []
        # triangle: 60 degrees
        if room >= 2:
            out.append(Tile.make(TRIANGLE, [v, v + unit(k_out), v + unit(k_out + 2)]))
        if room >= 3:
            out.append(Tile.make(SQUARE, [v, v + unit(k_out), v + unit(k_out) + unit(k_out + 3), v + unit(k_out + 3)]))
        for ang in (1, 5):
            if room >= ang:
                t = Tile.make(RHOMBUS, [v, v + unit(k_out), v + unit(k_out) + unit(k_out + ang), v + unit(k_out + ang)])
                if t in rhombus_cells:
                    out.append(t)
        return out

    def rec(edges: dict, placed: list):
        if limit is not None and len(results) >= limit:
            return
        if not edges:
            results.append(frozenset(placed))
            return
        verts = {u for u, _ in edges}
        v = min(verts, key=lambda p: (frame_y(p, 0)[0] + frame_y(p, 0)[1] * 1.7320508075688772, p.to_float()[0]))
        outs = [w for (u, w) in edges if u == v]
        ins = [u for (u, w) in edges if w == v]
        k_out = min(direction_of(w - v) for w in outs)
        back_dirs = sorted(direction_of(u - v) for u in ins)
        room = min(_angle_steps(k_out, kb) or 12 for kb in back_dirs)
        for t in candidates(v, k_out, room):
            new = dict(edges)
            ok = True
            for a, b in t.edges():
                if (a, b) in new:
                    del new[(a, b)]
                elif (b, a) in new:
                    ok = False
                    break
                else:
                    new[(b, a)] = True
            if not ok:
                continue
            if not _tile_inside(t, edges):
                continue
            placed.append(t)
            rec(new, placed)
            placed.pop()

    rec(start, [])
    out = []
    for tiles in results:
        m = Mosaic(region, tiles)
        if m.validate():
            out.append(m)
    return out


def _tile_inside(t: Tile, edges: dict) -> bool:
    """Whether a candidate tile lies in the untiled region bounded by ``edges``."""
    for a, b in edges:
        for p, q in t.edges():
            if _segments_cross(a, b, p, q):
                return False
    # the vertex sum is the centroid scaled by the vertex count
    s = len(t.vertices)
    sample = ORIGIN
    for v in t.vertices:
        sample = sample + v
    scaled = {(a.scale(s), b.scale(s)) for a, b in edges}
    if _winding_point(sample, scaled) != 1:
        return False
    starts = {a for a, _ in edges}
    return all(v in starts or _winding_point(v, edges) == 1 for v in t.vertices)


def _winding_point(p: ExactPoint, edges) -> int:
    wn = 0
    yp = frame_y(p, 0)
    for a, b in edges:
        ya, yb = frame_y(a, 0), frame_y(b, 0)
        if surd_cmp(ya, yp) <= 0:
            if surd_cmp(yb, yp) > 0 and cross_sign(a, b, p) > 0:
                wn += 1
        elif surd_cmp(yb, yp) <= 0 and cross_sign(a, b, p) < 0:
            wn -= 1
    return wn
