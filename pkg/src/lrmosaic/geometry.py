"""Exact planar geometry on the lattice generated by the twelve 30-degree unit vectors.

A point is stored as four integers ``(a, b, c, e)`` with
``x = (a + b*sqrt(3)) / 2`` and ``y = (c + e*sqrt(3)) / 2``.  Every integer
combination of the unit vectors ``unit(k)`` satisfies ``a = e (mod 2)`` and
``b = c (mod 2)``, which keeps rotation by 30 degrees inside the integers.
Points built from half-integers (rotation centres) may carry ``Fraction``
coordinates; everything stays exact.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

TRIANGLE = "triangle"
SQUARE = "square"
RHOMBUS = "rhombus"
TILE_KINDS = (TRIANGLE, SQUARE, RHOMBUS)


def _half(x):
    if type(x) is int and not x & 1:
        return x >> 1
    return Fraction(x) / 2


def surd_sign(p, q) -> int:
    """Sign of ``p + q*sqrt(3)`` for rational ``p``, ``q``."""
    sp = (p > 0) - (p < 0)
    sq = (q > 0) - (q < 0)
    if sp == sq or sq == 0:
        return sp
    if sp == 0:
        return sq
    # opposite signs: compare p^2 with 3 q^2
    lhs, rhs = p * p, 3 * q * q
    if lhs == rhs:
        return 0
    return sp if lhs > rhs else sq


@dataclass(frozen=True, slots=True, order=True)
class ExactPoint:
    a: int
    b: int
    c: int
    e: int

    def __add__(self, other: ExactPoint) -> ExactPoint:
        return ExactPoint(self.a + other.a, self.b + other.b, self.c + other.c, self.e + other.e)

    def __sub__(self, other: ExactPoint) -> ExactPoint:
        return ExactPoint(self.a - other.a, self.b - other.b, self.c - other.c, self.e - other.e)

    def __neg__(self) -> ExactPoint:
        return ExactPoint(-self.a, -self.b, -self.c, -self.e)

    def scale(self, k) -> ExactPoint:
        return ExactPoint(self.a * k, self.b * k, self.c * k, self.e * k)

    def rot30(self, steps: int = 1) -> ExactPoint:
        """Rotate counterclockwise about the origin by ``30 * steps`` degrees."""
        a, b, c, e = self.a, self.b, self.c, self.e
        k = steps % 12
        if k >= 6:
            a, b, c, e, k = -a, -b, -c, -e, k - 6
        if k >= 3:
            a, b, c, e, k = -c, -e, a, b, k - 3
        for _ in range(k):
            a, b, c, e = _half(3 * b - c), _half(a - e), _half(a + 3 * e), _half(b + c)
        return ExactPoint(a, b, c, e)

    def to_float(self) -> tuple[float, float]:
        s = math.sqrt(3.0)
        return ((self.a + self.b * s) / 2.0, (self.c + self.e * s) / 2.0)

    def to_json(self) -> list:
        return [self.a, self.b, self.c, self.e]

    @classmethod
    def from_json(cls, data: Sequence[int]) -> ExactPoint:
        a, b, c, e = data
        return cls(int(a), int(b), int(c), int(e))


ORIGIN = ExactPoint(0, 0, 0, 0)
_UNITS = [ExactPoint(2, 0, 0, 0)]
for _k in range(11):
    _UNITS.append(_UNITS[-1].rot30())
_DIRECTIONS = {u: k for k, u in enumerate(_UNITS)}


def unit(k: int) -> ExactPoint:
    """The unit vector at angle ``30 * k`` degrees."""
    return _UNITS[k % 12]


def direction_of(v: ExactPoint) -> int | None:
    """Return ``k`` if ``v`` is the unit vector at ``30 k`` degrees, else None."""
    return _DIRECTIONS.get(v)


def rotate_point(p: ExactPoint, center: ExactPoint, angle: int) -> ExactPoint:
    """Rotate ``p`` about ``center`` counterclockwise by ``angle`` degrees (a multiple of 30)."""
    if angle % 30:
        raise ValueError(f"unsupported rotation angle {angle}")
    return center + (p - center).rot30(angle // 30)


def frame_x(p: ExactPoint, direction: int) -> tuple:
    """Twice the coordinate of ``p`` along ``unit(direction)``, as ``(p, q)`` meaning ``p + q sqrt 3``."""
    r = p.rot30(-direction)
    return (r.a, r.b)


def frame_y(p: ExactPoint, direction: int) -> tuple:
    r = p.rot30(-direction)
    return (r.c, r.e)


def surd_cmp(u: tuple, v: tuple) -> int:
    return surd_sign(u[0] - v[0], u[1] - v[1])


@dataclass(frozen=True, slots=True)
class ExactArea:
    """The area ``(p + q sqrt 3) / 4``."""

    p: int
    q: int

    def __add__(self, other: ExactArea) -> ExactArea:
        return ExactArea(self.p + other.p, self.q + other.q)

    def __sub__(self, other: ExactArea) -> ExactArea:
        return ExactArea(self.p - other.p, self.q - other.q)

    def to_json(self) -> list:
        return [self.p, self.q]


ZERO_AREA = ExactArea(0, 0)


def polygon_area(vertices: Sequence[ExactPoint]) -> ExactArea:
    """Signed shoelace area; positive for counterclockwise vertex order."""
    p2 = q2 = 0
    m = len(vertices)
    for i in range(m):
        u, v = vertices[i], vertices[(i + 1) % m]
        # x_u y_v - x_v y_u, each product over 4
        p2 += u.a * v.c + 3 * u.b * v.e - v.a * u.c - 3 * v.b * u.e
        q2 += u.a * v.e + u.b * v.c - v.a * u.e - v.b * u.c
    # area = (sum) / 8 = (p + q sqrt3) / 4
    if p2 % 2 or q2 % 2:
        return ExactArea(Fraction(p2, 2), Fraction(q2, 2))
    return ExactArea(p2 // 2, q2 // 2)


def cross_sign(o: ExactPoint, u: ExactPoint, v: ExactPoint) -> int:
    """Sign of the cross product (u - o) x (v - o)."""
    du, dv = u - o, v - o
    p = du.a * dv.c + 3 * du.b * dv.e - dv.a * du.c - 3 * dv.b * du.e
    q = du.a * dv.e + du.b * dv.c - dv.a * du.e - dv.b * du.c
    return surd_sign(p, q)


# --- tiles -----------------------------------------------------------------

_TILE_AREA = {TRIANGLE: ExactArea(0, 1), SQUARE: ExactArea(4, 0), RHOMBUS: ExactArea(2, 0)}


def _canonical_cycle(vertices: Sequence[ExactPoint]) -> tuple[ExactPoint, ...]:
    vs = list(vertices)
    if _area_sign(vs) < 0:
        vs.reverse()
    i = vs.index(min(vs))
    return tuple(vs[i:] + vs[:i])


def _area_sign(vs: Sequence[ExactPoint]) -> int:
    ar = polygon_area(vs)
    return surd_sign(ar.p, ar.q)


@dataclass(frozen=True, slots=True)
class Tile:
    kind: str
    vertices: tuple[ExactPoint, ...]

    @classmethod
    def make(cls, kind: str, vertices: Iterable[ExactPoint]) -> Tile:
        return cls(kind, _canonical_cycle(list(vertices)))

    def edges(self) -> list[tuple[ExactPoint, ExactPoint]]:
        vs = self.vertices
        return [(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs))]

    def edge_keys(self) -> list[frozenset]:
        return [frozenset(e) for e in self.edges()]

    def area(self) -> ExactArea:
        return _TILE_AREA[self.kind]

    def transformed(self, fn) -> Tile:
        return Tile.make(self.kind, [fn(v) for v in self.vertices])

    def translated(self, t: ExactPoint) -> Tile:
        return Tile.make(self.kind, [v + t for v in self.vertices])

    def centroid_x2(self) -> ExactPoint:
        """Sum of the vertices (a scaled centroid, exact)."""
        s = ORIGIN
        for v in self.vertices:
            s = s + v
        return s

    def edge_directions(self) -> set[int]:
        return {direction_of(v - u) for u, v in self.edges()}

    def to_json(self) -> dict:
        return {"kind": self.kind, "vertices": [v.to_json() for v in self.vertices]}

    @classmethod
    def from_json(cls, data: dict) -> Tile:
        return cls.make(data["kind"], [ExactPoint.from_json(v) for v in data["vertices"]])


def parallelogram(kind: str, corner: ExactPoint, u: ExactPoint, v: ExactPoint) -> Tile:
    return Tile.make(kind, [corner, corner + u, corner + u + v, corner + v])


def triangle(corner: ExactPoint, k: int) -> Tile:
    """Equilateral unit triangle with an edge from ``corner`` in direction ``30 k``, interior on the left."""
    p1 = corner + unit(k)
    return Tile.make(TRIANGLE, [corner, p1, p1 + unit(k + 4)])


def check_tile(tile: Tile) -> str | None:
    """Return a description of what is wrong with ``tile``, or None."""
    vs = tile.vertices
    expected = {TRIANGLE: 3, SQUARE: 4, RHOMBUS: 4}[tile.kind]
    if len(vs) != expected:
        return f"{tile.kind} has {len(vs)} vertices"
    dirs = []
    for u, v in tile.edges():
        k = direction_of(v - u)
        if k is None:
            return "edge is not a unit lattice vector"
        dirs.append(k)
    turns = [(dirs[(i + 1) % len(dirs)] - dirs[i]) % 12 for i in range(len(dirs))]
    want = {TRIANGLE: [[4, 4, 4]], SQUARE: [[3, 3, 3, 3]], RHOMBUS: [[1, 5, 1, 5], [5, 1, 5, 1]]}
    if turns not in want[tile.kind]:
        return f"{tile.kind} has exterior turns {turns}"
    return None


Patch = frozenset


def patch_area(patch: Iterable[Tile]) -> ExactArea:
    total = ZERO_AREA
    for t in patch:
        total = total + t.area()
    return total


def region_edges(vertices: Sequence[ExactPoint]) -> set[frozenset]:
    """Unit edges along a lattice polygon's boundary (sides split into unit steps)."""
    out = set()
    m = len(vertices)
    for i in range(m):
        u, v = vertices[i], vertices[(i + 1) % m]
        out.update(frozenset(e) for e in unit_steps(u, v))
    return out


def unit_steps(u: ExactPoint, v: ExactPoint) -> list[tuple[ExactPoint, ExactPoint]]:
    """Split the lattice segment ``u -> v`` (integer length along a lattice direction) into unit steps."""
    delta = v - u
    for k in range(12):
        w = unit(k)
        # delta must equal s * w for a positive integer s
        for comp_d, comp_w in zip((delta.a, delta.b, delta.c, delta.e), (w.a, w.b, w.c, w.e)):
            if comp_w:
                s = comp_d / comp_w
                break
        else:
            continue
        if s > 0 and s == int(s) and w.scale(int(s)) == delta:
            s = int(s)
            return [(u + w.scale(i), u + w.scale(i + 1)) for i in range(s)]
    raise ValueError(f"segment {u} -> {v} is not along a lattice direction")


@dataclass
class ValidationReport:
    ok: bool
    message: str = ""
    where: object = None

    def __bool__(self) -> bool:
        return self.ok


def validate_patch_tiling(region: Sequence[ExactPoint], patch: Iterable[Tile]) -> ValidationReport:
    """Certify that ``patch`` tiles the polygon ``region`` by edge matching and area accounting."""
    patch = list(patch)
    for t in patch:
        problem = check_tile(t)
        if problem:
            return ValidationReport(False, problem, t)
    if len(set(patch)) != len(patch):
        return ValidationReport(False, "duplicate tile", None)
    boundary = region_edges(region)
    uses: dict[frozenset, int] = {}
    for t in patch:
        for key in t.edge_keys():
            uses[key] = uses.get(key, 0) + 1
    for key, count in uses.items():
        if count > 2:
            return ValidationReport(False, f"edge shared by {count} tiles", key)
        if count == 1 and key not in boundary:
            return ValidationReport(False, "unmatched interior edge", key)
        if count == 2 and key in boundary:
            return ValidationReport(False, "boundary edge covered twice", key)
    for key in boundary:
        if key not in uses:
            return ValidationReport(False, "boundary edge not covered", key)
    want = polygon_area(list(region))
    have = patch_area(patch)
    if (want.p, want.q) != (have.p, have.q):
        return ValidationReport(False, f"area deficit {(want - have).to_json()}", None)
    return ValidationReport(True)


def rotate_patch(patch: Iterable[Tile], center: ExactPoint, angle: int) -> frozenset:
    """Rigidly rotate a patch whose union is invariant under the rotation."""
    if angle % 360 not in (120, 180, 240):
        raise ValueError(f"unsupported patch rotation {angle}")
    patch = list(patch)
    rotated = frozenset(t.transformed(lambda p: rotate_point(p, center, angle)) for t in patch)
    if union_boundary(patch) != union_boundary(rotated):
        raise ValueError("patch region is not invariant under the rotation")
    return rotated


def union_boundary(patch: Iterable[Tile]) -> frozenset:
    """Undirected unit edges used by exactly one tile of the patch."""
    uses: dict[frozenset, int] = {}
    for t in patch:
        for key in t.edge_keys():
            uses[key] = uses.get(key, 0) + 1
    return frozenset(k for k, c in uses.items() if c == 1)


def boundary_cycle(patch: Sequence[Tile]) -> list[ExactPoint] | None:
    """Counterclockwise corner list of the union of ``patch`` if it is a simple polygon, else None."""
    directed = {}
    for t in patch:
        for u, v in t.edges():
            directed[(u, v)] = True
    succ: dict[ExactPoint, ExactPoint] = {}
    for (u, v) in directed:
        if (v, u) in directed:
            continue
        if u in succ:
            return None
        succ[u] = v
    if not succ:
        return None
    start = min(succ)
    cycle = [start]
    cur = succ[start]
    while cur != start:
        if cur not in succ or len(cycle) > len(succ):
            return None
        cycle.append(cur)
        cur = succ[cur]
    if len(cycle) != len(succ):
        return None
    corners = []
    m = len(cycle)
    for i in range(m):
        prev, here, nxt = cycle[i - 1], cycle[i], cycle[(i + 1) % m]
        if direction_of(here - prev) != direction_of(nxt - here):
            corners.append(here)
    return corners


def decode_cells(rhombi: Iterable[Tile], corner: ExactPoint, e_dir: int, n_dir: int) -> set[tuple[int, int]]:
    """Cells ``(i, j)`` with rhombus ``corner + i E + j N + [0,1]E + [0,1]N`` for each rhombus.

    ``E = unit(e_dir)``, ``N = unit(n_dir)``; raises ValueError for a rhombus not on that grid.
    """
    e, n = unit(e_dir), unit(n_dir)
    cells = set()
    for t in rhombi:
        got = None
        for v in t.vertices:
            ij = lattice_coords(v - corner, e_dir, n_dir)
            if ij is None:
                break
            if got is None or ij < got:
                got = ij
        else:
            i, j = got
            base = corner + e.scale(i) + n.scale(j)
            if parallelogram(RHOMBUS, base, e, n) == t:
                cells.add(got)
                continue
        raise ValueError(f"rhombus {t} is not a cell of the oriented grid")
    return cells


def lattice_coords(p: ExactPoint, e_dir: int, n_dir: int) -> tuple[int, int] | None:
    """Integers ``(i, j)`` with ``p = i unit(e_dir) + j unit(n_dir)``, if they exist."""
    q = p.rot30(-e_dir)
    rel = (n_dir - e_dir) % 12
    w = unit(rel)
    # q = i*(2,0,0,0) + j*w ; solve using the two irrational-free components
    # w has exactly one of (a, e) carrying the sqrt part; general solve via c/e components
    # Use y-components: q.c = j*w.c, q.e = j*w.e
    if w.c:
        j = Fraction(q.c, w.c)
    elif w.e:
        j = Fraction(q.e, w.e)
    else:
        return None
    if j.denominator != 1:
        return None
    j = int(j)
    rest = q - w.scale(j)
    if rest.b or rest.c or rest.e or rest.a % 2:
        return None
    return (rest.a // 2, j)
