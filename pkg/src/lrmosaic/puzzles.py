"""Puzzles and bipuzzles on the triangular lattice.

Lattice vertices are ``(i, j)`` meaning ``i*p0 + j*p60`` for the unit vectors
at 0 and 60 degrees.  Unit edges are keyed by ``(kind, i, j)``:

* ``("h", i, j)``: ``(i, j) -> (i+1, j)``, direction 0
* ``("u", i, j)``: ``(i, j) -> (i, j+1)``, direction 60
* ``("d", i, j)``: ``(i+1, j) -> (i, j+1)``, direction 120

Edge labels are ``0``, ``1`` or ``2``; a ``2`` marks the internal diagonal of
a rhombus piece and never appears on the outer boundary.  Every unit
triangle reads, clockwise, either ``000``, ``111`` or a cyclic rotation of
:data:`PIECE_CHIRALITY` (the rhombus halves; rotation allowed, reflection not).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

TRIANGLE_REGION = "triangle"
RHOMBUS_REGION = "rhombus"

# Clockwise labels of one half of the rhombus piece.  The mirror image
# (0, 1, 2) is the excluded chirality; tests pin this choice against
# LR-tableau counts.
PIECE_CHIRALITY = (0, 2, 1)
MIRROR_CHIRALITY = (0, 1, 2)


class PuzzleIntegrityError(RuntimeError):
    """A structural claim that must always hold was found violated."""


def allowed_patterns(chirality=PIECE_CHIRALITY) -> frozenset:
    a, b, c = chirality
    return frozenset({(0, 0, 0), (1, 1, 1), (a, b, c), (b, c, a), (c, a, b)})


def edge_endpoints(key) -> tuple[tuple[int, int], tuple[int, int]]:
    kind, i, j = key
    if kind == "h":
        return (i, j), (i + 1, j)
    if kind == "u":
        return (i, j), (i, j + 1)
    return (i + 1, j), (i, j + 1)


def edge_of(p, q):
    """The edge key joining two adjacent lattice vertices, and whether ``p -> q`` is its stored direction."""
    (i1, j1), (i2, j2) = p, q
    di, dj = i2 - i1, j2 - j1
    table = {(1, 0): ("h", 0), (0, 1): ("u", 0), (-1, 1): ("d", 0)}
    if (di, dj) in table:
        kind, _ = table[(di, dj)]
        if kind == "d":
            return ("d", i2, j1), True
        return (kind, i1, j1), True
    if (-di, -dj) in table:
        key, _ = edge_of(q, p)
        return key, False
    raise ValueError(f"{p} and {q} are not adjacent")


def triangles(n: int, region: str) -> list[tuple]:
    """Unit triangles row by row from the bottom, west to east, as ``(kind, i, j)``."""
    out = []
    for j in range(n):
        irange = range(n - j) if region == TRIANGLE_REGION else range(n)
        for i in irange:
            out.append(("U", i, j))
            if region == TRIANGLE_REGION:
                if i + j <= n - 2:
                    out.append(("D", i, j))
            else:
                out.append(("D", i, j))
    return out


def triangle_edges(tri) -> tuple:
    """The three edge keys of a unit triangle in clockwise order."""
    kind, i, j = tri
    if kind == "U":
        return (("u", i, j), ("d", i, j), ("h", i, j))
    return (("h", i, j + 1), ("u", i + 1, j), ("d", i, j))


def triangle_vertices(tri) -> tuple:
    kind, i, j = tri
    if kind == "U":
        return ((i, j), (i, j + 1), (i + 1, j))
    return ((i, j + 1), (i + 1, j + 1), (i + 1, j))


def boundary_edges(n: int, region: str) -> list[list]:
    """Boundary sides as lists of edge keys, read clockwise from the lower-left corner."""
    if region == TRIANGLE_REGION:
        return [
            [("u", 0, j) for j in range(n)],
            [("d", k, n - 1 - k) for k in range(n)],
            [("h", i, 0) for i in range(n - 1, -1, -1)],
        ]
    return [
        [("u", 0, j) for j in range(n)],
        [("h", i, n) for i in range(n)],
        [("u", n, j) for j in range(n - 1, -1, -1)],
        [("h", i, 0) for i in range(n - 1, -1, -1)],
    ]


def all_edges(n: int, region: str) -> list:
    seen = []
    got = set()
    for tri in triangles(n, region):
        for e in triangle_edges(tri):
            if e not in got:
                got.add(e)
                seen.append(e)
    return seen


@dataclass(frozen=True)
class Puzzle:
    """A fully labelled triangle (``region="triangle"``) or rhombus (a bipuzzle)."""

    n: int
    labels: tuple  # sorted ((edge key), label) pairs
    region: str = TRIANGLE_REGION

    @classmethod
    def make(cls, n: int, labels: dict, region: str = TRIANGLE_REGION) -> Puzzle:
        return cls(n, tuple(sorted(labels.items())), region)

    def label_map(self) -> dict:
        return dict(self.labels)

    def boundary(self) -> tuple[str, ...]:
        m = self.label_map()
        return tuple("".join(str(m[e]) for e in side) for side in boundary_edges(self.n, self.region))

    def triangle_labels(self) -> dict:
        m = self.label_map()
        return {tri: tuple(m[e] for e in triangle_edges(tri)) for tri in triangles(self.n, self.region)}

    def to_json(self) -> dict:
        m = self.label_map()
        edges = []
        for key in all_edges(self.n, self.region):
            p, q = edge_endpoints(key)
            edges.append({"from": list(p), "to": list(q), "label": m[key]})
        rows = {}
        for tri, labs in self.triangle_labels().items():
            rows.setdefault(tri[2], []).append("".join(map(str, labs)))
        return {
            "n": self.n,
            "region": self.region,
            "edges": edges,
            "rows": [rows[j] for j in sorted(rows)],
        }

    @classmethod
    def from_json(cls, data: dict) -> Puzzle:
        n = int(data["n"])
        region = data.get("region", TRIANGLE_REGION)
        labels = {}
        if "edges" in data:
            for e in data["edges"]:
                key, _ = edge_of(tuple(e["from"]), tuple(e["to"]))
                labels[key] = int(e["label"])
        else:
            tris = triangles(n, region)
            flat = [s for row in data["rows"] for s in row]
            if len(flat) != len(tris):
                raise ValueError("row form does not match the triangle count")
            for tri, s in zip(tris, flat):
                for key, ch in zip(triangle_edges(tri), s):
                    if labels.setdefault(key, int(ch)) != int(ch):
                        raise ValueError(f"inconsistent label on {key}")
        return cls.make(n, labels, region)


@dataclass
class PuzzleReport:
    ok: bool
    message: str = ""
    where: object = None

    def __bool__(self) -> bool:
        return self.ok


def validate_puzzle(p: Puzzle, chirality=PIECE_CHIRALITY) -> PuzzleReport:
    m = p.label_map()
    expected = set(all_edges(p.n, p.region))
    if set(m) != expected:
        return PuzzleReport(False, "labels do not cover exactly the unit edges", sorted(set(m) ^ expected)[:1])
    allowed = allowed_patterns(chirality)
    for tri in triangles(p.n, p.region):
        labs = tuple(m[e] for e in triangle_edges(tri))
        if labs not in allowed:
            return PuzzleReport(False, f"forbidden piece {labs}", tri)
    for side in boundary_edges(p.n, p.region):
        for e in side:
            if m[e] == 2:
                return PuzzleReport(False, "rhombus diagonal on the boundary", e)
    if p.region == RHOMBUS_REGION:
        ones = {s.count("1") for s in p.boundary()}
        if len(ones) != 1:
            return PuzzleReport(False, "sides carry different numbers of 1s", p.boundary())
    return PuzzleReport(True)


def puzzle_boundary(p: Puzzle) -> tuple[str, ...]:
    return p.boundary()


def _search(n: int, region: str, fixed: dict, chirality) -> list[Puzzle]:
    tris = triangles(n, region)
    allowed = sorted(allowed_patterns(chirality))
    on_boundary = {e for side in boundary_edges(n, region) for e in side}
    labels = dict(fixed)
    out = []

    def rec(k):
        if k == len(tris):
            out.append(Puzzle.make(n, labels, region))
            return
        es = triangle_edges(tris[k])
        for pat in allowed:
            fresh = []
            ok = True
            for e, v in zip(es, pat):
                cur = labels.get(e)
                if cur is None:
                    if v == 2 and e in on_boundary:
                        ok = False
                        break
                    fresh.append(e)
                    labels[e] = v
                elif cur != v:
                    ok = False
                    break
            if ok:
                rec(k + 1)
            for e in fresh:
                del labels[e]

    rec(0)
    return out


def enumerate_puzzles(boundary: Sequence[str], chirality=PIECE_CHIRALITY) -> list[Puzzle]:
    """Every puzzle with boundary data ``(pi, rho, sigma)``."""
    if len(boundary) != 3:
        raise ValueError("a puzzle boundary has three strings")
    n = len(boundary[0])
    if any(len(s) != n for s in boundary):
        raise ValueError("boundary strings have different lengths")
    if len({s.count("1") for s in boundary}) != 1:
        return []
    fixed = {}
    for side, s in zip(boundary_edges(n, TRIANGLE_REGION), boundary):
        for e, ch in zip(side, s):
            fixed[e] = int(ch)
    return _search(n, TRIANGLE_REGION, fixed, chirality)


def enumerate_bipuzzles(boundary: Sequence[str], chirality=PIECE_CHIRALITY) -> list[Puzzle]:
    """Every bipuzzle with boundary data ``(pi, rho, sigma, tau)``."""
    if len(boundary) != 4:
        raise ValueError("a bipuzzle boundary has four strings")
    n = len(boundary[0])
    if any(len(s) != n for s in boundary):
        raise ValueError("boundary strings have different lengths")
    if len({s.count("1") for s in boundary}) != 1:
        return []
    fixed = {}
    for side, s in zip(boundary_edges(n, RHOMBUS_REGION), boundary):
        for e, ch in zip(side, s):
            fixed[e] = int(ch)
    return _search(n, RHOMBUS_REGION, fixed, chirality)


def all_puzzles(n: int, chirality=PIECE_CHIRALITY, region: str = TRIANGLE_REGION) -> list[Puzzle]:
    """Every puzzle of size ``n`` with any boundary."""
    found = _search(n, region, {}, chirality)
    return [p for p in found if validate_puzzle(p, chirality)]


def puzzle_counts(n: int, chirality=PIECE_CHIRALITY) -> dict:
    """Map boundary triple -> number of puzzles, over all puzzles of size ``n``."""
    counts: dict = {}
    for p in all_puzzles(n, chirality):
        b = p.boundary()
        counts[b] = counts.get(b, 0) + 1
    return counts


# --- splitting and gluing ----------------------------------------------------


def _rot180(key, n):
    kind, i, j = key
    if kind == "h":
        return ("h", n - i - 1, n - j)
    if kind == "u":
        return ("u", n - i, n - j - 1)
    return ("d", n - i - 1, n - j - 1)


def split_bipuzzle(bp: Puzzle) -> tuple[Puzzle, Puzzle]:
    """Cut a bipuzzle along the diagonal from its top-left to its bottom-right corner.

    Returns the lower-left puzzle (boundary ``(pi, upsilon, tau)``) and the
    upper-right one rotated by 180 degrees (boundary ``(sigma, upsilon^v, rho)``).
    """
    if bp.region != RHOMBUS_REGION:
        raise ValueError("not a bipuzzle")
    n = bp.n
    m = bp.label_map()
    for k in range(n):
        if m[("d", k, n - 1 - k)] == 2:
            raise PuzzleIntegrityError(f"rhombus straddles the dividing line at {('d', k, n - 1 - k)}")
    lower, upper = {}, {}
    lower_edges = set(all_edges(n, TRIANGLE_REGION))
    for key, v in m.items():
        if key in lower_edges:
            lower[key] = v
        if key not in lower_edges or key[0] == "d" and key[1] + key[2] == n - 1:
            upper[_rot180(key, n)] = v
    return Puzzle.make(n, lower), Puzzle.make(n, upper)


def glue_puzzles(p1: Puzzle, p2: Puzzle) -> Puzzle:
    """Inverse of :func:`split_bipuzzle`: ``p1`` lower-left, ``p2`` the rotated upper-right piece."""
    n = p1.n
    if p2.n != n:
        raise ValueError("puzzles have different sizes")
    ups = p1.boundary()[1]
    mid = p2.boundary()[1]
    if ups[::-1] != mid:
        raise ValueError(f"sides do not match: {ups} vs reversed {mid}")
    labels = dict(p1.label_map())
    for key, v in p2.label_map().items():
        labels[_rot180(key, n)] = v
    return Puzzle.make(n, labels, RHOMBUS_REGION)


def all_zero_puzzle(n: int, label: int = 0, region: str = TRIANGLE_REGION) -> Puzzle:
    return Puzzle.make(n, {e: label for e in all_edges(n, region)}, region)
