"""Migration of flocks between nests.

A rhombus travels by repeatedly rotating the tiling of a small symmetric
hexagon that contains it and lies weakly to the right of its leftmost point,
where "right" is the migration direction.  Two hexagons occur: the zonogon
tiled by the rhombus, a square and two triangles (rotated 180 degrees) and the
equilateral hexagon with angles alternating 90/150 degrees (rotated 120
degrees, in the sense that leaves a rhombus edge horizontal or vertical).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .combinat import shape_of_cells, standard_order, validate_lr
from .geometry import (
    RHOMBUS,
    SQUARE,
    TRIANGLE,
    ExactPoint,
    Tile,
    boundary_cycle,
    cross_sign,
    direction_of,
    frame_x,
    frame_y,
    surd_cmp,
    validate_patch_tiling,
)
from .mosaic import (
    HEXAGON,
    Flock,
    Mosaic,
    Nest,
    flock_tableau,
    is_accessible,
    opens_northeast,
)

# allowed (source, target) pairs and the physical axis ("E" or "N") of the source nest leading there
HEXAGON_ROUTES = {
    ("A", "B"): "N", ("A", "C"): "E",
    ("B", "C"): "N", ("B", "A"): "E",
    ("C", "A"): "N", ("C", "B"): "E",
}
OCTAGON_ROUTES = {
    ("A", "C"): "N", ("A", "D"): "E",
    ("B", "C"): "N", ("B", "D"): "E",
    ("C", "A"): "N", ("C", "B"): "E",
    ("D", "A"): "N", ("D", "B"): "E",
}

# exactly one rhombus, one square and two triangles, as in both templates
_TEMPLATE_KINDS = {RHOMBUS: 1, SQUARE: 1, TRIANGLE: 2}


class MigrationError(RuntimeError):
    """A migration step found no (or more than one) admissible hexagon, or failed to land."""


@dataclass(frozen=True)
class MigrationFrame:
    """The migration direction (30-degree steps); the frame turns it to the page-right axis."""

    direction: int

    def x(self, p: ExactPoint) -> tuple:
        return frame_x(p, self.direction)

    def y(self, p: ExactPoint) -> tuple:
        return frame_y(p, self.direction)

    def is_axis(self, k: int) -> bool:
        """Whether direction ``k`` is horizontal or vertical in the frame."""
        return (k - self.direction) % 3 == 0


@dataclass(frozen=True)
class JourneyStep:
    corners: tuple  # counterclockwise corners of the hexagon
    rotation: int  # degrees counterclockwise
    before: tuple  # tiles of the hexagon before the rotation
    after: tuple
    rhombus_before: Tile
    rhombus_after: Tile

    def to_json(self) -> dict:
        return {
            "hexagon": [p.to_json() for p in self.corners],
            "rotation": self.rotation,
            "from": self.rhombus_before.to_json(),
            "to": self.rhombus_after.to_json(),
        }


@dataclass
class JourneyTrace:
    start: Tile
    frame: MigrationFrame
    steps: list = field(default_factory=list)

    @property
    def end(self) -> Tile:
        return self.steps[-1].rhombus_after if self.steps else self.start

    def to_json(self) -> dict:
        return {
            "start": self.start.to_json(),
            "direction": self.frame.direction * 30,
            "steps": [s.to_json() for s in self.steps],
        }


class TileIndex:
    """Mutable tiling with an edge lookup, used while rhombi travel."""

    def __init__(self, tiles: Iterable[Tile]):
        self.tiles: set = set()
        self.by_edge: dict = {}
        for t in tiles:
            self.add(t)

    def add(self, t: Tile) -> None:
        self.tiles.add(t)
        for key in t.edge_keys():
            self.by_edge.setdefault(key, set()).add(t)

    def remove(self, t: Tile) -> None:
        self.tiles.remove(t)
        for key in t.edge_keys():
            self.by_edge[key].discard(t)

    def neighbours(self, t: Tile) -> set:
        out = set()
        for key in t.edge_keys():
            out |= self.by_edge.get(key, set())
        out.discard(t)
        return out


def _rotation_shift(corners: list, steps: int) -> ExactPoint | None:
    """Translation ``t`` with ``rot(p) + t`` permuting the corners, if one exists."""
    m = len(corners)
    cs = set(corners)
    for k in range(m):
        t = corners[k] - corners[0].rot30(steps)
        if all(p.rot30(steps) + t in cs for p in corners):
            return t
    return None


def _moved(t: Tile, steps: int, shift: ExactPoint) -> Tile:
    return Tile.make(t.kind, [v.rot30(steps) + shift for v in t.vertices])


def _groups(index: TileIndex, rh: Tile) -> list[frozenset]:
    """Edge-connected four-tile sets containing ``rh`` with the template tile kinds."""
    found = set()

    def grow(group: frozenset, counts: dict):
        if len(group) == 4:
            found.add(group)
            return
        frontier = set()
        for t in group:
            frontier |= index.neighbours(t)
        for t in frontier - group:
            if counts.get(t.kind, 0) >= _TEMPLATE_KINDS.get(t.kind, 0):
                continue
            counts[t.kind] = counts.get(t.kind, 0) + 1
            nxt = group | {t}
            if nxt not in seen:
                seen.add(nxt)
                grow(nxt, counts)
            counts[t.kind] -= 1

    seen: set = set()
    grow(frozenset([rh]), {RHOMBUS: 1})
    return sorted(found, key=lambda g: sorted(t.vertices for t in g))


def _candidates(index: TileIndex, rh: Tile, frame: MigrationFrame) -> list:
    """Every symmetric hexagon of tiles containing ``rh`` weakly right of its leftmost point,
    with the rotation the templates prescribe: (tiles, corners, rotation steps, shift)."""
    left = min((frame.x(v) for v in rh.vertices), key=_surd_key)
    hits = []
    for group in _groups(index, rh):
        # 14 tile edges, 4 of them shared: the union has a 6-edge boundary
        if len({k for t in group for k in t.edge_keys()}) != 10:
            continue
        corners = boundary_cycle(list(group))
        if corners is None or len(corners) != 6:
            continue
        if any(surd_cmp(frame.x(p), left) < 0 for p in corners):
            continue
        if _rotation_shift(corners, 4) is None:
            shift = _rotation_shift(corners, 6)
            if shift is not None:
                hits.append((group, corners, 6, shift))
            continue
        options = []
        for steps in (4, 8):
            shift = _rotation_shift(corners, steps)
            if any(frame.is_axis(k) for k in _moved(rh, steps, shift).edge_directions()):
                options.append((group, corners, steps, shift))
        if len(options) != 1:
            raise MigrationError(f"three-fold hexagon admits {len(options)} rotations")
        hits.append(options[0])
    return hits


def _advance(rh: Tile, hit, frame: MigrationFrame) -> tuple:
    """How far the rotation moves the rhombus centre along the migration direction."""
    _, _, steps, shift = hit
    return frame.x(_moved(rh, steps, shift).centroid_x2() - rh.centroid_x2())


def find_hexagon(index: TileIndex, rh: Tile, frame: MigrationFrame, visited: frozenset = frozenset()):
    """The hexagon for the next step of ``rh``.

    Several hexagons can lie weakly right of the rhombus.  Those sending it
    back to a position in ``visited`` are dropped; of the rest, the one
    carrying it furthest in the migration direction is used, and it must be
    unique.
    """
    hits = [h for h in _candidates(index, rh, frame) if _moved(rh, h[2], h[3]) not in visited]
    if not hits:
        raise MigrationError("no admissible hexagon")
    best = max((_advance(rh, h, frame) for h in hits), key=_surd_key)
    top = [h for h in hits if surd_cmp(_advance(rh, h, frame), best) == 0]
    if len(top) != 1:
        raise MigrationError(f"{len(top)} hexagons advance the rhombus equally far")
    return top[0]


def _surd_key(v: tuple) -> float:
    return v[0] + v[1] * 1.7320508075688772


def _landing(m: Mosaic, index: TileIndex, rh: Tile, source: str) -> str | None:
    """The nest (other than ``source``) into which ``rh`` is now packed, if any."""
    for nest in m.region.nests:
        if nest.name == source:
            continue
        cell = nest.cell_of(rh)
        if cell is None:
            continue
        cs = {nest.cell_of(t) for t in index.tiles if t.kind == RHOMBUS}
        cs.discard(None)
        try:
            shape_of_cells((j, i) for i, j in cs)
        except ValueError:
            continue
        return nest.name
    return None


def migrate_rhombus(m: Mosaic, rh: Tile, frame: MigrationFrame, source: str, index: TileIndex | None = None):
    """Move one rhombus until it is packed into a nest other than ``source``.

    Returns the new mosaic, the final rhombus, its nest and the journey.  If
    ``index`` is given it is updated in place and used instead of ``m.tiles``.
    """
    own = index is None
    if own:
        index = TileIndex(m.tiles)
    if rh not in index.tiles:
        raise ValueError("rhombus is not a tile of the mosaic")
    trace = JourneyTrace(rh, frame)
    budget = 4 * len(index.tiles) + 8
    cur = rh
    while True:
        landed = _landing(m, index, cur, source)
        if landed is not None:
            break
        if len(trace.steps) >= budget:
            raise MigrationError("journey did not terminate")
        visited = frozenset(s.rhombus_before for s in trace.steps)
        group, corners, steps, shift = find_hexagon(index, cur, frame, visited)
        after = tuple(sorted((_moved(t, steps, shift) for t in group), key=lambda t: t.vertices))
        for t in group:
            index.remove(t)
        for t in after:
            index.add(t)
        new = _moved(cur, steps, shift)
        trace.steps.append(
            JourneyStep(tuple(corners), steps * 30, tuple(sorted(group, key=lambda t: t.vertices)), after, cur, new)
        )
        cur = new
    return Mosaic(m.region, frozenset(index.tiles)), cur, landed, trace


# --- flocks ----------------------------------------------------------------------


def routes(m: Mosaic) -> dict:
    return HEXAGON_ROUTES if m.kind == HEXAGON else OCTAGON_ROUTES


def migration_direction(m: Mosaic, source: str, target: str) -> int:
    try:
        axis = routes(m)[(source, target)]
    except KeyError:
        raise ValueError(f"cannot migrate directly from {source} to {target}") from None
    nest = m.region.nest(source)
    return nest.e_dir if axis == "E" else nest.n_dir


def compass(nest: Nest, code: str, direction: int) -> str:
    """Compass name of a physical direction in an orientation of a nest."""
    e, n = nest.axes(code)
    names = {e: "east", n: "north", (e + 6) % 12: "west", (n + 6) % 12: "south"}
    return names[direction % 12]


def induced_orientation(target: Nest, code: str, source: Nest) -> tuple[str, int]:
    """The orientation of the target nest obtained by turning (E, N) at most 60 degrees."""
    e, n = source.axes(code)
    hits = []
    for r in (-2, -1, 0, 1, 2):
        got = target.code_of_axes(e + r, n + r)
        if got is not None:
            hits.append((got, r * 30))
    if len(hits) != 1:
        raise MigrationError(f"{len(hits)} induced orientations")
    return hits[0]


@dataclass
class MigrationResult:
    mosaic: Mosaic
    flock: Flock
    traces: list
    rotation: int  # degrees by which the orientation turned
    direction: str  # compass name in the source orientation
    order: list  # rhombi in the order they travelled, before and after

    def to_json(self) -> dict:
        return {
            "mosaic": self.mosaic.to_json(),
            "flock": self.flock.to_json(),
            "rotation": self.rotation,
            "direction": self.direction,
            "journeys": [t.to_json() for t in self.traces],
        }


def migrate_flock(m: Mosaic, flock: Flock, target: str, check: bool = True) -> MigrationResult:
    """Migrate every rhombus of an accessible flock, in standard order, to the target nest."""
    if not is_accessible(m, flock):
        raise ValueError("flock is not accessible")
    src = m.region.nest(flock.nest)
    direction = migration_direction(m, flock.nest, target)
    frame = MigrationFrame(direction)
    name = compass(src, flock.orientation, direction)
    if opens_northeast(flock.orientation) != (name in ("north", "east")):
        raise MigrationError(f"{name} is not allowed for orientation {flock.orientation}")
    tab = flock_tableau(m, flock)
    order = standard_order(tab)
    if opens_northeast(flock.orientation):
        order = order[::-1]
    values = dict(tab.entries)
    index = TileIndex(m.tiles)
    traces = []
    moved = []
    entries = {}
    for rc in order:
        ij = src.from_oriented(flock.orientation, rc)
        rh = src.cell_tile(*ij)
        _, end, landed, trace = migrate_rhombus(m, rh, frame, flock.nest, index)
        if landed != target:
            raise MigrationError(f"rhombus landed in {landed}, expected {target}")
        traces.append(trace)
        moved.append((rh, end))
        entries[m.region.nest(target).cell_of(end)] = values[rc]
    tgt = m.region.nest(target)
    code, rotation = induced_orientation(tgt, flock.orientation, src)
    out = Mosaic(m.region, frozenset(index.tiles))
    new_flock = Flock.make(target, code, entries)
    result = MigrationResult(out, new_flock, traces, rotation, name, moved)
    if check:
        check_migration(m, flock, result)
    return result


def check_migration(m: Mosaic, flock: Flock, result: MigrationResult) -> None:
    """Raise MigrationError unless the output is a valid mosaic carrying a flock with the same content,
    reached in an order-preserving way."""
    out, new = result.mosaic, result.flock
    rep = validate_patch_tiling(out.region.ccw_vertices(), out.tiles)
    if not rep:
        raise MigrationError(f"migration broke the tiling: {rep.message}")
    if not out.validate():
        raise MigrationError("migration left an unpacked nest")
    t_new = flock_tableau(out, new)
    if not validate_lr(t_new).ok:
        raise MigrationError("migrated flock is not an LR filling")
    t_old = flock_tableau(m, flock)
    if sorted(v for _, v in t_old.entries) != sorted(v for _, v in t_new.entries):
        raise MigrationError("content changed")
    if not is_accessible(out, new):
        raise MigrationError("migrated flock is not accessible")
    if not _order_preserved(m, flock, result):
        raise MigrationError("standard order not preserved")


def _order_preserved(m: Mosaic, flock: Flock, result: MigrationResult) -> bool:
    src = m.region.nest(flock.nest)
    tgt = m.region.nest(result.flock.nest)
    old = flock_tableau(m, flock)
    new = flock_tableau(result.mosaic, result.flock)
    rank_old = {rc: k for k, rc in enumerate(standard_order(old))}
    rank_new = {rc: k for k, rc in enumerate(standard_order(new))}
    for a, b in result.order:
        ra = rank_old[src.to_oriented(flock.orientation, src.cell_of(a))]
        rb = rank_new[tgt.to_oriented(result.flock.orientation, tgt.cell_of(b))]
        if ra != rb:
            return False
    return True


def invert_migration(result_mosaic: Mosaic, flock: Flock, source: str, check: bool = True) -> MigrationResult:
    """Undo a migration by migrating the result back to where it came from."""
    return migrate_flock(result_mosaic, flock, source, check=check)




# --- wakes -----------------------------------------------------------------------


@dataclass
class Wake:
    upper: frozenset
    lower: frozenset
    midline: tuple  # rhombus centres, scaled by 4, from start to finish

    def to_json(self) -> dict:
        return {
            "upper": [t.to_json() for t in sorted(self.upper, key=lambda t: t.vertices)],
            "lower": [t.to_json() for t in sorted(self.lower, key=lambda t: t.vertices)],
            "midline": [p.to_json() for p in self.midline],
        }


def displaced_tiles(trace: JourneyTrace) -> frozenset:
    """Squares and triangles moved by the journey, in their final positions."""
    placed: set = set()
    for s in trace.steps:
        placed -= set(s.before)
        placed |= set(s.after)
    return frozenset(t for t in placed if t.kind != RHOMBUS)


def midline(trace: JourneyTrace) -> tuple:
    pts = [trace.start.centroid_x2()]
    pts += [s.rhombus_after.centroid_x2() for s in trace.steps]
    return tuple(pts)


def side_of_midline(line: tuple, p: ExactPoint, frame: MigrationFrame) -> int:
    """+1 above, -1 below, 0 on the midline or outside its horizontal span.

    ``p`` is on the same scale as ``line``.  The side is the parity of the
    midline segments met by an upward vertical ray from ``p``.
    """
    segs = list(zip(line, line[1:]))
    px = frame.x(p)
    xs = [frame.x(q) for q in line]
    if surd_cmp(px, min(xs, key=_surd_key)) < 0 or surd_cmp(px, max(xs, key=_surd_key)) > 0:
        return 0
    for a, b in segs:
        if cross_sign(a, b, p) == 0 and _between(a, b, p, frame):
            return 0
    # half-open spans, closed on the right at the far end of the midline
    at_end = surd_cmp(px, max(xs, key=_surd_key)) == 0
    crossings = 0
    for a, b in segs:
        c = surd_cmp(frame.x(a), frame.x(b))
        if c == 0:
            continue
        lo, hi = (a, b) if c < 0 else (b, a)
        lo_c, hi_c = surd_cmp(frame.x(lo), px), surd_cmp(frame.x(hi), px)
        inside = (lo_c < 0 <= hi_c) if at_end else (lo_c <= 0 < hi_c)
        if inside and cross_sign(lo, hi, p) < 0:
            crossings += 1
    return -1 if crossings % 2 else 1


def _side_extended(line: tuple, p: ExactPoint, frame: MigrationFrame) -> int:
    """Like :func:`side_of_midline`, with the midline continued by horizontal rays off both ends."""
    for a, b in zip(line, line[1:]):
        if cross_sign(a, b, p) == 0 and _between(a, b, p, frame):
            return 0
    px, py = frame.x(p), frame.y(p)
    first, last = line[0], line[-1]
    crossings = 0
    if surd_cmp(px, frame.x(first)) < 0 and surd_cmp(py, frame.y(first)) < 0:
        crossings += 1
    if surd_cmp(px, frame.x(last)) >= 0 and surd_cmp(py, frame.y(last)) < 0:
        crossings += 1
    for a, b in zip(line, line[1:]):
        c = surd_cmp(frame.x(a), frame.x(b))
        if c == 0:
            continue
        lo, hi = (a, b) if c < 0 else (b, a)
        if surd_cmp(frame.x(lo), px) <= 0 < surd_cmp(frame.x(hi), px) and cross_sign(lo, hi, p) < 0:
            crossings += 1
    return -1 if crossings % 2 else 1


def _between(a: ExactPoint, b: ExactPoint, p: ExactPoint, frame: MigrationFrame) -> bool:
    for coord in (frame.x, frame.y):
        lo, hi = sorted((coord(a), coord(b)), key=_surd_key)
        if surd_cmp(coord(p), lo) < 0 or surd_cmp(coord(p), hi) > 0:
            return False
    return True


def _is_chain(tiles: frozenset) -> bool:
    """Edge-connected, and a path (no tile has three chain neighbours, no cycle)."""
    if not tiles:
        return True
    index = TileIndex(tiles)
    degree = {t: len(index.neighbours(t)) for t in tiles}
    if any(v > 2 for v in degree.values()):
        return False
    edges = sum(degree.values()) // 2
    if edges != len(tiles) - 1:
        return False
    start = next(iter(tiles))
    seen = {start}
    stack = [start]
    while stack:
        for u in index.neighbours(stack.pop()):
            if u not in seen:
                seen.add(u)
                stack.append(u)
    return len(seen) == len(tiles)


class WakeError(MigrationError):
    """The displaced tiles do not split into two chains along the midline."""


def compute_wake(trace: JourneyTrace) -> Wake:
    line = midline(trace)
    if not trace.steps:
        return Wake(frozenset(), frozenset(), line)
    upper, lower = set(), set()
    for t in displaced_tiles(trace):
        side = _tile_side(line, t, trace.frame)
        if side > 0:
            upper.add(t)
        elif side < 0:
            lower.add(t)
        else:
            raise WakeError(f"tile {t} straddles the midline")
    wake = Wake(frozenset(upper), frozenset(lower), line)
    if not (_is_chain(wake.upper) and _is_chain(wake.lower)):
        raise WakeError("a side of the wake is not a one-tile-wide chain")
    return wake


def _tile_side(line: tuple, t: Tile, frame: MigrationFrame) -> int:
    """Side of the midline holding the tile's centre (midline points are centres times 4)."""
    # midline points are 4 x centre; compare everything at 12 x centre
    k = len(t.vertices)
    centre12 = t.centroid_x2().scale(12 // k)
    line12 = tuple(p.scale(3) for p in line)
    return _side_extended(line12, centre12, frame)


@dataclass
class WakeCrossingReport:
    pairs: int = 0  # (earlier, later) pairs where the crossing property applies
    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        return {"pairs": self.pairs, "violations": self.violations}


def _disturbed(trace: JourneyTrace, tiles: frozenset) -> bool:
    return any(t in tiles for s in trace.steps for t in s.before)


def check_wake_crossing(traces: list, report: WakeCrossingReport | None = None) -> WakeCrossingReport:
    """Check the wake crossing property on the journeys of one flock migration.

    For each earlier journey and each later one for which a wake is intact
    and which starts on that side of the midline, the later rhombus must
    stay on that side, and must leave the other wake alone when that one
    is intact as well.
    """
    report = report or WakeCrossingReport()
    wakes = [compute_wake(t) for t in traces]
    for i, (tr, wake) in enumerate(zip(traces, wakes)):
        if not tr.steps:
            continue
        line12 = tuple(p.scale(3) for p in wake.midline)
        intact = {1: True, -1: True}
        for j in range(i + 1, len(traces)):
            later = traces[j]
            start = side_of_midline(line12, later.start.centroid_x2().scale(3), tr.frame)
            for side, tiles, other in ((1, wake.upper, wake.lower), (-1, wake.lower, wake.upper)):
                if start != side or not intact[side]:
                    continue
                report.pairs += 1
                positions = [s.rhombus_after for s in later.steps]
                if any(side_of_midline(line12, p.centroid_x2().scale(3), tr.frame) == -side for p in positions):
                    report.violations.append({"earlier": i, "later": j, "crossed": True})
                elif intact[-side] and _disturbed(later, other):
                    report.violations.append({"earlier": i, "later": j, "disturbed": True})
            if _disturbed(later, wake.upper):
                intact[1] = False
            if _disturbed(later, wake.lower):
                intact[-1] = False
    return report


# --- dividing lines --------------------------------------------------------------


def dividing_line(m: Mosaic) -> list | None:
    """An edge path from B' to D' in the bimosaic made of steps perpendicular to AB' or B'B."""
    reg = m.region
    # AB' runs along N_A and B'B along -E_B
    dirs = set()
    for k in (reg.nest("A").n_dir, reg.nest("B").e_dir):
        dirs |= {(k + 3) % 12, (k + 9) % 12}
    graph: dict = {}
    for t in m.tiles:
        for u, v in t.edges():
            if direction_of(v - u) in dirs:
                graph.setdefault(u, set()).add(v)
                graph.setdefault(v, set()).add(u)
    start, goal = reg.vertex("B'"), reg.vertex("D'")
    prev = {start: None}
    queue = [start]
    for u in queue:
        if u == goal:
            path = [u]
            while prev[path[-1]] is not None:
                path.append(prev[path[-1]])
            return path[::-1]
        for v in graph.get(u, ()):
            if v not in prev:
                prev[v] = u
                queue.append(v)
    return None
