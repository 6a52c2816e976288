"""Partitions, 01-strings, skew shapes and Littlewood-Richardson tableaux.

Diagrams use the French convention: cell ``(row, col)`` with row 0 the
bottom row (of length ``parts[0]``) and col 0 the west end of a row.
Partitions are plain tuples with trailing zeros removed.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Iterable, Sequence

Partition = tuple


@dataclass(frozen=True)
class BoxParams:
    d: int
    n: int

    def __post_init__(self):
        if not (0 < self.d < self.n):
            raise ValueError(f"need 0 < d < n, got d={self.d}, n={self.n}")

    @property
    def width(self) -> int:
        return self.n - self.d

    def fits(self, lam: Sequence[int]) -> bool:
        lam = partition(lam)
        return len(lam) <= self.d and (not lam or lam[0] <= self.width)

    def conjugate(self) -> BoxParams:
        return BoxParams(self.n - self.d, self.n)


def partition(parts: Iterable[int]) -> Partition:
    """Normalize to a weakly decreasing tuple without trailing zeros."""
    parts = tuple(int(p) for p in parts)
    if any(p < 0 for p in parts):
        raise ValueError(f"negative part in {parts}")
    if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
        raise ValueError(f"{parts} is not weakly decreasing")
    while parts and parts[-1] == 0:
        parts = parts[:-1]
    return parts


def size(lam: Partition) -> int:
    return sum(lam)


def part(lam: Partition, i: int) -> int:
    return lam[i] if 0 <= i < len(lam) else 0


def contains(outer: Partition, inner: Partition) -> bool:
    return all(part(outer, i) >= p for i, p in enumerate(inner))


def cells(lam: Partition) -> list[tuple[int, int]]:
    return [(r, c) for r, length in enumerate(lam) for c in range(length)]


def shape_of_cells(cs: Iterable[tuple[int, int]]) -> Partition:
    """The partition whose diagram is exactly ``cs``; ValueError otherwise."""
    cs = set(cs)
    rows = []
    r = 0
    while True:
        length = 0
        while (r, length) in cs:
            length += 1
        if length == 0:
            break
        rows.append(length)
        r += 1
    lam = tuple(rows)
    if any(rows[i] < rows[i + 1] for i in range(len(rows) - 1)) or set(cells(lam)) != cs:
        raise ValueError("cells do not form a straight diagram")
    return lam


def partitions_in_box(box: BoxParams) -> list[Partition]:
    """All partitions with at most d parts, each at most n-d, in lexicographic order."""
    out = []

    def rec(prefix, maxpart):
        if len(prefix) == box.d:
            out.append(partition(prefix))
            return
        for p in range(maxpart + 1):
            rec(prefix + [p], p)

    rec([], box.width)
    out.sort()
    assert len(out) == comb(box.n, box.d)
    return out


def string_of_partition(lam: Sequence[int], box: BoxParams) -> str:
    """Boundary path from the southeast corner of the box to the northwest corner.

    A horizontal (westward) step is ``0`` and a vertical (northward) step is ``1``.
    """
    lam = partition(lam)
    if not box.fits(lam):
        raise ValueError(f"{lam} does not fit in the {box.d} x {box.width} box")
    out = []
    col = box.width
    for row in range(box.d):
        target = part(lam, row)
        out.append("0" * (col - target))
        col = target
        out.append("1")
    out.append("0" * col)
    return "".join(out)


def partition_of_string(s: str, box: BoxParams) -> Partition:
    if len(s) != box.n or set(s) - {"0", "1"}:
        raise ValueError(f"{s!r} is not a 01-string of length {box.n}")
    if s.count("1") != box.d:
        raise ValueError(f"{s!r} does not have {box.d} ones")
    col = box.width
    rows = []
    for ch in s:
        if ch == "0":
            col -= 1
        else:
            rows.append(col)
    return partition(rows)


def complement(lam: Sequence[int], box: BoxParams) -> Partition:
    """The 180-degree rotated complement of ``lam`` in the d x (n-d) rectangle."""
    lam = partition(lam)
    if not box.fits(lam):
        raise ValueError(f"{lam} does not fit in the {box.d} x {box.width} box")
    return partition(box.width - part(lam, box.d - 1 - k) for k in range(box.d))


def conjugate(lam: Sequence[int]) -> Partition:
    lam = partition(lam)
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > c) for c in range(lam[0]))


@dataclass(frozen=True)
class SkewShape:
    outer: Partition
    inner: Partition = ()

    def __post_init__(self):
        object.__setattr__(self, "outer", partition(self.outer))
        object.__setattr__(self, "inner", partition(self.inner))
        if not contains(self.outer, self.inner):
            raise ValueError(f"{self.inner} is not contained in {self.outer}")

    def cells(self) -> list[tuple[int, int]]:
        return [(r, c) for r in range(len(self.outer)) for c in range(part(self.inner, r), self.outer[r])]

    def reading_order(self) -> list[tuple[int, int]]:
        """West to east within rows, rows from north to south."""
        return sorted(self.cells(), key=lambda rc: (-rc[0], rc[1]))

    def __len__(self) -> int:
        return size(self.outer) - size(self.inner)


@dataclass(frozen=True)
class LRTableau:
    """A filling of a skew shape; ``entries`` is a sorted tuple of ``((row, col), value)``."""

    shape: SkewShape
    entries: tuple = ()

    @classmethod
    def make(cls, outer, inner, mapping: dict) -> LRTableau:
        shape = SkewShape(outer, inner)
        if set(mapping) != set(shape.cells()):
            raise ValueError("entries do not cover exactly the cells of the shape")
        return cls(shape, tuple(sorted(mapping.items())))

    @classmethod
    def from_rows(cls, outer, inner, rows: Sequence[Sequence]) -> LRTableau:
        """Rows listed bottom first; ``None`` marks cells of the inner shape."""
        mapping = {}
        for r, row in enumerate(rows):
            for c, v in enumerate(row):
                if v is not None:
                    mapping[(r, c)] = int(v)
        return cls.make(outer, inner, mapping)

    @property
    def outer(self) -> Partition:
        return self.shape.outer

    @property
    def inner(self) -> Partition:
        return self.shape.inner

    def as_dict(self) -> dict:
        return dict(self.entries)

    def rows(self) -> list[list]:
        m = self.as_dict()
        return [[m.get((r, c)) for c in range(length)] for r, length in enumerate(self.outer)]

    def reading_word(self) -> list[int]:
        m = self.as_dict()
        return [m[rc] for rc in self.shape.reading_order()]

    def to_json(self) -> dict:
        return {"outer": list(self.outer), "inner": list(self.inner), "rows": self.rows()}

    @classmethod
    def from_json(cls, data: dict) -> LRTableau:
        return cls.from_rows(data["outer"], data.get("inner", []), data["rows"])


@dataclass
class LRReport:
    ok: bool
    condition: str | None = None
    where: object = None

    def __bool__(self) -> bool:
        return self.ok


def validate_lr(t: LRTableau) -> LRReport:
    """Check semistandardness and the lattice (tail) condition."""
    m = t.as_dict()
    for (r, c), v in sorted(m.items()):
        if v < 1:
            return LRReport(False, "positive", (r, c))
        if (r, c + 1) in m and m[(r, c + 1)] < v:
            return LRReport(False, "i", (r, c))
        if (r + 1, c) in m and m[(r + 1, c)] <= v:
            return LRReport(False, "ii", (r, c))
    word = t.reading_word()
    counts: dict[int, int] = {}
    for s in range(len(word) - 1, -1, -1):
        k = word[s]
        counts[k] = counts.get(k, 0) + 1
        if k > 1 and counts[k] > counts.get(k - 1, 0):
            return LRReport(False, "iii", tuple(word[s:]))
    return LRReport(True)


def content(t: LRTableau) -> Partition:
    counts: dict[int, int] = {}
    for _, v in t.entries:
        counts[v] = counts.get(v, 0) + 1
    if not counts:
        return ()
    return partition(counts.get(k, 0) for k in range(1, max(counts) + 1))


def standard_order(t: LRTableau) -> list[tuple[int, int]]:
    """Cells by entry; equal entries from west to east."""
    return [rc for rc, _ in sorted(t.entries, key=lambda item: (item[1], item[0][1], -item[0][0]))]


def enumerate_lr(shape: SkewShape, nu: Sequence[int]) -> list[LRTableau]:
    """All LR tableaux on ``shape`` with content ``nu``."""
    nu = partition(nu)
    if size(nu) != len(shape):
        return []
    # fill in reverse reading order so every prefix is a tail of the reading word
    order = list(reversed(shape.reading_order()))
    counts = [0] * (len(nu) + 2)
    filling: dict[tuple[int, int], int] = {}
    out = []

    def rec(pos):
        if pos == len(order):
            out.append(LRTableau(shape, tuple(sorted(filling.items()))))
            return
        r, c = order[pos]
        hi = len(nu)
        if (r, c + 1) in filling:
            hi = min(hi, filling[(r, c + 1)])
        lo = filling[(r - 1, c)] + 1 if (r - 1, c) in filling else 1
        for v in range(lo, hi + 1):
            if counts[v] >= nu[v - 1]:
                continue
            if v > 1 and counts[v] + 1 > counts[v - 1]:
                continue
            counts[v] += 1
            filling[(r, c)] = v
            rec(pos + 1)
            del filling[(r, c)]
            counts[v] -= 1

    rec(0)
    out.sort(key=lambda t: t.entries)
    return out


def lr_count(nu, mu, lam) -> int:
    """c_{nu mu lam-complement}: LR tableaux of shape lam/mu and content nu."""
    mu, lam = partition(mu), partition(lam)
    if not contains(lam, mu):
        return 0
    return len(enumerate_lr(SkewShape(lam, mu), nu))


def lr_count_by_boundary(nu, mu, lam_vee, box: BoxParams) -> int:
    """Count with the tableau boundary data ``(nu, mu, lam_vee)`` in ``box``."""
    return lr_count(nu, mu, complement(lam_vee, box))


@dataclass(frozen=True)
class LRBitableau:
    outer_tableau: LRTableau  # on lam/kappa
    inner_tableau: LRTableau  # on kappa/mu

    def __post_init__(self):
        if self.outer_tableau.inner != self.inner_tableau.outer:
            raise ValueError("bitableau shapes are not nested")

    @property
    def kappa(self) -> Partition:
        return self.inner_tableau.outer

    def boundary(self, box: BoxParams) -> tuple:
        """``(xi, nu, mu, lam_vee)``."""
        return (
            content(self.outer_tableau),
            content(self.inner_tableau),
            self.inner_tableau.inner,
            complement(self.outer_tableau.outer, box),
        )

    def to_json(self) -> dict:
        return {"outer": self.outer_tableau.to_json(), "inner": self.inner_tableau.to_json()}

    @classmethod
    def from_json(cls, data: dict) -> LRBitableau:
        return cls(LRTableau.from_json(data["outer"]), LRTableau.from_json(data["inner"]))


def partitions_between(inner: Partition, outer: Partition) -> list[Partition]:
    out = []

    def rec(prefix, r):
        if r == len(outer):
            out.append(partition(prefix))
            return
        hi = outer[r] if r == 0 else min(outer[r], prefix[-1])
        for p in range(part(inner, r), hi + 1):
            rec(prefix + [p], r + 1)

    if not contains(outer, inner):
        return []
    rec([], 0)
    return sorted(out)


def enumerate_lr_bitableaux(shape: SkewShape, xi, nu) -> list[LRBitableau]:
    xi, nu = partition(xi), partition(nu)
    if size(xi) + size(nu) != len(shape):
        return []
    out = []
    for kappa in partitions_between(shape.inner, shape.outer):
        if size(kappa) - size(shape.inner) != size(nu):
            continue
        outs = enumerate_lr(SkewShape(shape.outer, kappa), xi)
        if not outs:
            continue
        for g in enumerate_lr(SkewShape(kappa, shape.inner), nu):
            for f in outs:
                out.append(LRBitableau(f, g))
    return out


# --- jeu de taquin -----------------------------------------------------------


def _shape_from_cells(cs: set) -> SkewShape:
    """Tightest skew shape (outer, inner) containing exactly ``cs`` with rows anchored at col 0."""
    if not cs:
        return SkewShape((), ())
    top = max(r for r, _ in cs)
    outer, inner = [], []
    for r in range(top + 1):
        cols = [c for rr, c in cs if rr == r]
        if cols:
            outer.append(max(cols) + 1)
            inner.append(min(cols))
        else:
            outer.append(None)
            inner.append(None)
    # empty rows inherit a consistent value from the row below
    for r in range(top + 1):
        if outer[r] is None:
            below = inner[r - 1] if r > 0 else 0
            outer[r] = inner[r] = below
    return SkewShape(tuple(outer), tuple(inner))


def schuetzenberger_slide(t: LRTableau, corner: tuple[int, int], direction: str = "forward") -> LRTableau:
    """One jeu de taquin slide.

    ``forward``: ``corner`` is a removable cell of the inner shape; the hole
    travels north/east and leaves the outer shape.  ``reverse``: ``corner`` is
    an addable cell of the outer shape; the hole travels south/west into the
    inner shape.
    """
    m = t.as_dict()
    outer, inner = list(t.outer), list(t.inner)
    r, c = corner
    if direction == "forward":
        if not (r < len(inner) and inner[r] == c + 1 and part(tuple(inner), r + 1) <= c):
            raise ValueError(f"{corner} is not an inner corner of {t.shape}")
        hole = (r, c)
        while True:
            east, north = (hole[0], hole[1] + 1), (hole[0] + 1, hole[1])
            ve, vn = m.get(east), m.get(north)
            if ve is None and vn is None:
                break
            if vn is not None and (ve is None or vn <= ve):
                nxt = north
            else:
                nxt = east
            m[hole] = m.pop(nxt)
            hole = nxt
        inner[r] -= 1
        outer[hole[0]] -= 1
    elif direction == "reverse":
        cur = part(tuple(outer), r)
        if not (cur == c and (r == 0 or part(tuple(outer), r - 1) > c)):
            raise ValueError(f"{corner} is not an outer corner of {t.shape}")
        hole = (r, c)
        while True:
            west, south = (hole[0], hole[1] - 1), (hole[0] - 1, hole[1])
            vw, vs = m.get(west), m.get(south)
            if vw is None and vs is None:
                break
            if vs is not None and (vw is None or vs >= vw):
                nxt = south
            else:
                nxt = west
            m[hole] = m.pop(nxt)
            hole = nxt
        while len(outer) <= r:
            outer.append(0)
        outer[r] += 1
        while len(inner) <= hole[0]:
            inner.append(0)
        inner[hole[0]] += 1
    else:
        raise ValueError(f"unknown slide direction {direction!r}")
    return LRTableau.make(partition(outer), partition(inner), m)


def yamanouchi(lam: Sequence[int]) -> LRTableau:
    """The unique LR tableau of straight shape ``lam`` (row r filled with r+1)."""
    lam = partition(lam)
    return LRTableau.make(lam, (), {(r, c): r + 1 for r, c in cells(lam)})


def rotate_180(t: LRTableau, box: BoxParams, relabel=None) -> LRTableau:
    """Rotate a filling by 180 degrees inside the d x (n-d) box."""
    m = t.as_dict()
    new = {}
    for (r, c), v in m.items():
        new[(box.d - 1 - r, box.width - 1 - c)] = relabel(v) if relabel else v
    return LRTableau.make(complement(t.inner, box), complement(t.outer, box), new)


def rotate_transform_tableau(t: LRTableau, box: BoxParams) -> LRTableau:
    """Standardize by reverse standard order, rotate, and slide through a straight tableau.

    ``t`` of shape lam/mu becomes a standard filling of mu^v/lam^v; the unique
    straight tableau on lam^v is then reverse-slid into those cells in label
    order.  The result has content lam^v.
    """
    order = standard_order(t)
    rank = {rc: len(order) - i for i, rc in enumerate(order)}
    m = t.as_dict()
    # standardized entries keyed by cell, then rotated into the box
    tilde = {(box.d - 1 - r, box.width - 1 - c): rank[(r, c)] for (r, c) in m}
    lam_vee = complement(t.outer, box)
    g = yamanouchi(lam_vee)
    for _, cell in sorted((v, rc) for rc, v in tilde.items()):
        g = schuetzenberger_slide(g, cell, "reverse")
    return g


def all_lr_tableaux(box: BoxParams) -> list[LRTableau]:
    """Every LR tableau whose outer shape fits in ``box``."""
    out = []
    parts = partitions_in_box(box)
    for lam in parts:
        for mu in parts:
            if not contains(lam, mu):
                continue
            k = size(lam) - size(mu)
            for nu in parts:
                if size(nu) == k:
                    out.extend(enumerate_lr(SkewShape(lam, mu), nu))
    return out
