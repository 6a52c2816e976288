"""Bijections built from migration: mosaics and LR tableaux, commutors, associators, rotation."""

from __future__ import annotations

from dataclasses import dataclass, field

from .combinat import (
    BoxParams,
    LRBitableau,
    LRTableau,
    complement,
    conjugate,
    content,
    part,
    schuetzenberger_slide,
)
from .geometry import Tile
from .migration import migrate_flock
from .mosaic import (
    HEXAGON,
    MINUS_EN,
    MINUS_NE,
    PLUS_EN,
    PLUS_NE,
    Flock,
    Mosaic,
    canonical_flock,
    canonical_mosaic,
    flock_from_tableau,
    flock_tableau,
)

# orientation on the first nest for each row of the variant table, in order
VARIANTS = (MINUS_EN, PLUS_EN, MINUS_NE, PLUS_NE)
DEFAULT_VARIANT = MINUS_EN


def tableau_data(t: LRTableau, box: BoxParams) -> tuple:
    """(content, inner shape, complement of the outer shape) of a tableau in a box."""
    return (content(t), t.inner, complement(t.outer, box))


def variant_box(box: BoxParams, variant: str) -> BoxParams:
    """The box an LR tableau of the variant lives in (transposed for the north-east-first variants)."""
    return box if variant[1:] == "EN" else box.conjugate()


def variant_data(boundary: tuple, variant: str) -> tuple:
    """Tableau data the variant assigns to a mosaic boundary."""
    a, b, g = boundary
    if variant == MINUS_EN:
        return (a, b, g)
    if variant == PLUS_EN:
        return (a, g, b)
    if variant == MINUS_NE:
        return (conjugate(a), conjugate(b), conjugate(g))
    if variant == PLUS_NE:
        return (conjugate(a), conjugate(g), conjugate(b))
    raise ValueError(f"unknown variant {variant!r}")


def mosaic_to_tableau(m: Mosaic, variant: str = DEFAULT_VARIANT, via: str = "B") -> LRTableau:
    """Give the first nest's contents the variant orientation, migrate them and read the result."""
    f = canonical_flock(m, "A", variant)
    r = migrate_flock(m, f, via)
    return flock_tableau(r.mosaic, r.flock)


def tableau_to_mosaic(t: LRTableau, box: BoxParams) -> Mosaic:
    """Inverse of :func:`mosaic_to_tableau` for the default variant."""
    if not box.fits(t.outer):
        raise ValueError(f"{t.outer} does not fit the box")
    m = canonical_mosaic(box, t.outer, "A")
    g = flock_from_tableau(m, "B", PLUS_EN, t)
    return migrate_flock(m, g, "A").mosaic


def rotate_mosaic(m: Mosaic, turns: int = 1) -> Mosaic:
    """Rotate a mosaic by ``120 * turns`` degrees counterclockwise about the hexagon's centre."""
    if m.kind != HEXAGON:
        raise ValueError("only hexagonal mosaics have three-fold symmetry")
    steps = (4 * turns) % 12
    verts = list(m.region.vertices)
    # rot(p) + shift must permute the hexagon; the nest corners are every other vertex
    shift = None
    for q in verts:
        cand = q - verts[0].rot30(steps)
        if {p.rot30(steps) + cand for p in verts} == set(verts):
            shift = cand
            break
    if shift is None:
        raise ValueError("region is not three-fold symmetric")
    tiles = frozenset(Tile.make(t.kind, [v.rot30(steps) + shift for v in t.vertices]) for t in m.tiles)
    out = Mosaic(m.region, tiles)
    if not out.validate():
        raise ValueError("rotated tiling is not a mosaic")
    return out


def plus_en_tableau(m: Mosaic) -> LRTableau:
    """The bijection with (first nest oriented (E, N), migrated to the second nest)."""
    return mosaic_to_tableau(m, PLUS_EN, "B")


@dataclass
class CheckReport:
    name: str
    cases: int = 0
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {"check": self.name, "cases": self.cases, "failures": self.failures}


def check_tao_coincidence(box: BoxParams, mosaics=None) -> CheckReport:
    """Orientation (E, N) sent to the second nest and (-E, -N) sent to the third give the same tableau."""
    from .mosaic import all_mosaics

    rep = CheckReport("orientation-coincidence")
    for m in mosaics if mosaics is not None else all_mosaics(box):
        rep.cases += 1
        a = mosaic_to_tableau(m, PLUS_EN, "B")
        b = mosaic_to_tableau(m, MINUS_EN, "C")
        if a != b:
            rep.failures.append({"mosaic": m.to_json(), "via_b": a.to_json(), "via_c": b.to_json()})
    return rep


def check_slide_correspondence(box: BoxParams, mosaics=None) -> CheckReport:
    """Moving one rhombus from the second nest to the third (or back) is one slide of the tableau."""
    from .mosaic import all_mosaics

    rep = CheckReport("slide-correspondence")
    for m in mosaics if mosaics is not None else all_mosaics(box):
        t = plus_en_tableau(m)
        # towards the third nest the tableau grows outward (reverse slide), back it shrinks
        for src, dst, kind in (("B", "C", "reverse"), ("C", "B", "forward")):
            cs = m.nest_cells(src)
            for cell in sorted(cs):
                i, j = cell
                if (i + 1, j) in cs or (i, j + 1) in cs:
                    continue
                f = Flock.make(src, PLUS_EN, {cell: 1})
                moved = migrate_flock(m, f, dst).mosaic
                t2 = plus_en_tableau(moved)
                rep.cases += 1
                if not _one_slide(t, t2, kind):
                    rep.failures.append({"mosaic": m.to_json(), "from": src, "cell": list(cell)})
    return rep


def _one_slide(t: LRTableau, t2: LRTableau, kind: str) -> bool:
    """Whether ``t2`` is one slide of ``t`` in the given direction."""
    if kind == "reverse":
        corners = [(r, part(t.outer, r)) for r in range(len(t.outer) + 1)]
    else:
        corners = [(r, t.inner[r] - 1) for r in range(len(t.inner))]
    for corner in corners:
        try:
            if schuetzenberger_slide(t, corner, kind) == t2:
                return True
        except ValueError:
            pass
    return False


# --- commutativity ---------------------------------------------------------------


@dataclass
class CommutorResult:
    mosaic: Mosaic
    orientation_a: str  # orientation left on the first nest
    orientation_b: str  # orientation left on the second nest


def commute_mosaic(m: Mosaic, code_a: str = PLUS_EN, code_b: str = PLUS_EN) -> Mosaic:
    """Swap the first two nests' contents: A to C, then B to A, then C to B."""
    return commute_mosaic_full(m, code_a, code_b).mosaic


def commute_mosaic_full(m: Mosaic, code_a: str = PLUS_EN, code_b: str = PLUS_EN) -> CommutorResult:
    f = canonical_flock(m, "A", code_a)
    g = canonical_flock(m, "B", code_b)
    r1 = migrate_flock(m, f, "C")
    r2 = migrate_flock(r1.mosaic, g, "A")
    r3 = migrate_flock(r2.mosaic, r1.flock, "B")
    return CommutorResult(r3.mosaic, r2.flock.orientation, r3.flock.orientation)


def uncommute_mosaic(m: Mosaic, code_a: str, code_b: str) -> Mosaic:
    """Undo :func:`commute_mosaic` given the orientations it left on A and B."""
    f2 = canonical_flock(m, "B", code_b)
    g2 = canonical_flock(m, "A", code_a)
    r1 = migrate_flock(m, f2, "C")
    r2 = migrate_flock(r1.mosaic, g2, "B")
    r3 = migrate_flock(r2.mosaic, r1.flock, "A")
    return r3.mosaic


def commute_tableau(t: LRTableau, box: BoxParams) -> LRTableau:
    """LR tableau with data (nu, mu, lam^v) to one with data (mu, nu, lam^v).

    The tableau sits as a flock (E, N) in the second nest of the canonical
    mosaic with empty first nest; it migrates to the first nest, followed by
    the unique (-E, -N) flock on the rhombi of the inner shape.
    """
    m = canonical_mosaic(box, t.outer, "A")
    f = flock_from_tableau(m, "B", PLUS_EN, t)
    r1 = migrate_flock(m, f, "A")
    rest = r1.mosaic.nest_cells("B")
    g = canonical_flock(r1.mosaic, "B", MINUS_EN, rest)
    r2 = migrate_flock(r1.mosaic, g, "A")
    return flock_tableau(r2.mosaic, r2.flock)


# --- associativity ---------------------------------------------------------------

# (flock, source, target) moves taking bimosaic data (a, b, c, d) to (d, a, b, c)
ASSOCIATOR_SCHEDULE = (
    ("c", "C", "A"),
    ("b", "B", "C"),
    ("c", "A", "D"),
    ("a", "A", "C"),
    ("a", "C", "B"),
    ("c", "D", "B"),
    ("d", "D", "A"),
    ("c", "B", "D"),
)


@dataclass
class AssociatorResult:
    mosaic: Mosaic
    orientations: dict  # nest -> orientation of the flock it ends up holding


def associate_bimosaic_full(m: Mosaic, codes: dict | None = None) -> AssociatorResult:
    """Shuffle the four nests' flocks by the fixed schedule; the boundary rotates one nest clockwise."""
    if m.kind == HEXAGON:
        raise ValueError("associators act on bimosaics")
    codes = codes or {}
    names = dict(zip("abcd", "ABCD"))
    flocks = {k: canonical_flock(m, nest, codes.get(nest, PLUS_EN)) for k, nest in names.items()}
    for key, src, dst in ASSOCIATOR_SCHEDULE:
        if flocks[key].nest != src:
            raise AssertionError("schedule out of step")
        r = migrate_flock(m, flocks[key], dst)
        m, flocks[key] = r.mosaic, r.flock
    return AssociatorResult(m, {f.nest: f.orientation for f in flocks.values()})


def associate_bimosaic(m: Mosaic, codes: dict | None = None) -> Mosaic:
    return associate_bimosaic_full(m, codes).mosaic


def unassociate_bimosaic(m: Mosaic, orientations: dict) -> Mosaic:
    """Undo :func:`associate_bimosaic` given the orientations it left behind."""
    final = {"a": "B", "b": "C", "c": "D", "d": "A"}
    flocks = {k: canonical_flock(m, nest, orientations[nest]) for k, nest in final.items()}
    for key, src, dst in reversed(ASSOCIATOR_SCHEDULE):
        if flocks[key].nest != dst:
            raise AssertionError("schedule out of step")
        r = migrate_flock(m, flocks[key], src)
        m, flocks[key] = r.mosaic, r.flock
    return m


def associate_bitableau(bt: LRBitableau, box: BoxParams) -> LRBitableau:
    """Bitableau on lam/kappa/mu to one whose contents and innermost shape are permuted.

    Both tableaux sit as (E, N) flocks in the second nest of the canonical
    mosaic with empty first nest, the innermost shape as the unique (-E, -N)
    flock.  The outer flock migrates to the first nest, the middle one to
    the third, the innermost to the first, and the middle one on to the
    first.  The last two flocks form the new bitableau.
    """
    m = canonical_mosaic(box, bt.outer_tableau.outer, "A")
    f = flock_from_tableau(m, "B", PLUS_EN, bt.outer_tableau)
    r1 = migrate_flock(m, f, "A")
    g = flock_from_tableau(r1.mosaic, "B", PLUS_EN, bt.inner_tableau)
    r2 = migrate_flock(r1.mosaic, g, "C")
    h = canonical_flock(r2.mosaic, "B", MINUS_EN)
    r3 = migrate_flock(r2.mosaic, h, "A")
    r4 = migrate_flock(r3.mosaic, r2.flock, "A")
    if r3.flock.orientation != r4.flock.orientation:
        raise AssertionError("the two flocks are read in different orientations")
    inner = flock_tableau(r3.mosaic, r3.flock)
    outer = flock_tableau(r4.mosaic, r4.flock)
    return LRBitableau(outer, inner)


def unassociate_bitableau(bt: LRBitableau, box: BoxParams) -> LRBitableau:
    """Undo :func:`associate_bitableau` by running its schedule backwards.

    The forward schedule ends on the mosaic with empty second nest, where
    both flocks are read (E, N) in the first nest.
    """
    m = canonical_mosaic(box, complement(bt.outer_tableau.outer, box), "B")
    g = flock_from_tableau(m, "A", PLUS_EN, bt.outer_tableau)
    s1 = migrate_flock(m, g, "C")
    h = flock_from_tableau(s1.mosaic, "A", PLUS_EN, bt.inner_tableau)
    s2 = migrate_flock(s1.mosaic, h, "B")
    s3 = migrate_flock(s2.mosaic, s1.flock, "B")
    f = canonical_flock(s3.mosaic, "A", MINUS_EN)
    s4 = migrate_flock(s3.mosaic, f, "B")
    return LRBitableau(flock_tableau(s4.mosaic, s4.flock), flock_tableau(s3.mosaic, s3.flock))
