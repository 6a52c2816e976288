"""Exhaustive property sweeps over small boxes.

Each sweep returns a :class:`SweepReport`.  Work is split into jobs that
run in worker processes (``LRMOSAIC_THREADS`` caps their number); results
are merged in job order, so reports do not depend on scheduling.
"""

from __future__ import annotations

import itertools
import os
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache

from . import puzzles as pz
from .combinat import (
    BoxParams,
    SkewShape,
    all_lr_tableaux,
    complement,
    contains,
    enumerate_lr_bitableaux,
    lr_count,
    partitions_in_box,
    rotate_transform_tableau,
    validate_lr,
)
from .migration import (
    MigrationError,
    WakeCrossingReport,
    WakeError,
    check_wake_crossing,
    compute_wake,
    dividing_line,
    migrate_flock,
    routes,
)
from .mosaic import (
    HEXAGON,
    OCTAGON,
    ORIENTATIONS,
    accessible_flocks,
    all_mosaics,
    brute_force_mosaics,
    mosaic_to_puzzle,
    puzzle_to_mosaic,
)

MAX_WITNESSES = 5


def worker_count() -> int:
    env = os.environ.get("LRMOSAIC_THREADS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def boxes(max_n: int, min_n: int = 2) -> list[BoxParams]:
    return [BoxParams(d, n) for n in range(min_n, max_n + 1) for d in range(1, n)]


@dataclass
class SweepReport:
    name: str
    cases: int = 0
    counts: Counter = field(default_factory=Counter)  # failures by kind, plus informative tallies
    witnesses: list = field(default_factory=list)
    failure_kinds: tuple = ()

    @property
    def failures(self) -> int:
        return sum(self.counts[k] for k in self.failure_kinds)

    @property
    def ok(self) -> bool:
        return self.failures == 0

    def fail(self, kind: str, witness: dict) -> None:
        self.counts[kind] += 1
        if len(self.witnesses) < MAX_WITNESSES:
            self.witnesses.append({"kind": kind, **witness})

    def merge(self, other: SweepReport) -> SweepReport:
        self.cases += other.cases
        self.counts.update(other.counts)
        room = MAX_WITNESSES - len(self.witnesses)
        self.witnesses.extend(other.witnesses[: max(room, 0)])
        return self

    def to_json(self) -> dict:
        return {
            "sweep": self.name,
            "cases": self.cases,
            "failures": self.failures,
            "counts": dict(sorted(self.counts.items())),
            "witnesses": self.witnesses,
            "ok": self.ok,
        }


def run_jobs(fn, jobs: list, workers: int | None = None) -> list:
    workers = worker_count() if workers is None else workers
    if workers <= 1 or len(jobs) <= 1:
        return [fn(j) for j in jobs]
    with ProcessPoolExecutor(max_workers=min(workers, len(jobs))) as ex:
        return list(ex.map(fn, jobs))


def _merged(name: str, kinds: tuple, parts: list) -> SweepReport:
    out = SweepReport(name, failure_kinds=kinds)
    for p in parts:
        out.merge(p)
    return out


@lru_cache(maxsize=None)
def _mosaics(d: int, n: int, kind: str) -> tuple:
    return tuple(all_mosaics(BoxParams(d, n), kind))


# --- migration: soundness, invertibility, wakes ----------------------------------

MIGRATION_FAILURES = ("unsound", "not_inverted", "wake_split", "wake_crossing")


def _migration_job(args) -> SweepReport:
    d, n, kind, idx = args
    m = _mosaics(d, n, kind)[idx]
    rep = SweepReport("migration", failure_kinds=MIGRATION_FAILURES)
    crossing = WakeCrossingReport()
    for nest in m.region.nest_names:
        targets = [t for s, t in routes(m) if s == nest]
        for code in ORIENTATIONS:
            for f in accessible_flocks(m, nest, code):
                if not len(f):
                    continue
                for target in targets:
                    rep.cases += 1
                    where = {"box": [d, n], "kind": kind, "mosaic": idx, "flock": f.to_json(), "target": target}
                    try:
                        r = migrate_flock(m, f, target)
                    except MigrationError as e:
                        rep.fail("unsound", {**where, "error": str(e)})
                        continue
                    try:
                        back = migrate_flock(r.mosaic, r.flock, nest)
                        if back.mosaic != m or back.flock != f:
                            rep.fail("not_inverted", where)
                    except MigrationError as e:
                        rep.fail("not_inverted", {**where, "error": str(e)})
                    rep.counts["journeys"] += len(r.traces)
                    try:
                        for tr in r.traces:
                            compute_wake(tr)
                    except WakeError as e:
                        rep.fail("wake_split", {**where, "error": str(e)})
                        continue
                    before = len(crossing.violations)
                    check_wake_crossing(r.traces, crossing)
                    if len(crossing.violations) > before:
                        rep.fail("wake_crossing", {**where, "violations": crossing.violations[before:]})
    rep.counts["crossing_pairs"] += crossing.pairs
    return rep


def migration_sweep(box: BoxParams, kind: str = HEXAGON, workers: int | None = None) -> SweepReport:
    """Every accessible non-empty flock of every mosaic, in every orientation, along every route.

    Checks the migrated flock (tiling, packing, LR filling, content,
    accessibility, standard order), that migrating back restores the
    input, that each journey's wake splits into two chains, and the wake
    crossing property.
    """
    jobs = [(box.d, box.n, kind, i) for i in range(len(_mosaics(box.d, box.n, kind)))]
    return _merged("migration", MIGRATION_FAILURES, run_jobs(_migration_job, jobs, workers))


# --- bimosaics: dividing lines and bipuzzle splitting ------------------------------

OPPOSITE = (("A", "C"), ("C", "A"), ("B", "D"), ("D", "B"))


def _dividing_job(args) -> SweepReport:
    d, n, idx = args
    m = _mosaics(d, n, OCTAGON)[idx]
    rep = SweepReport("dividing-line", failure_kinds=("no_line",))
    rep.cases += 1
    if dividing_line(m) is None:
        rep.fail("no_line", {"box": [d, n], "mosaic": idx})
    for src, dst in OPPOSITE:
        for code in ORIENTATIONS:
            for f in accessible_flocks(m, src, code):
                if not len(f):
                    continue
                rep.cases += 1
                out = migrate_flock(m, f, dst, check=False).mosaic
                if dividing_line(out) is None:
                    rep.fail("no_line", {"box": [d, n], "mosaic": idx, "flock": f.to_json(), "target": dst})
    return rep


def dividing_line_sweep(box: BoxParams, workers: int | None = None) -> SweepReport:
    """A dividing line exists in every bimosaic and survives every opposite-nest migration."""
    jobs = [(box.d, box.n, i) for i in range(len(_mosaics(box.d, box.n, OCTAGON)))]
    return _merged("dividing-line", ("no_line",), run_jobs(_dividing_job, jobs, workers))


def bipuzzle_split_sweep(n: int) -> SweepReport:
    """Every bipuzzle of size n cuts into two puzzles that glue back to it."""
    rep = SweepReport("bipuzzle-split", failure_kinds=("no_split", "invalid_piece", "not_glued"))
    for bp in pz.all_puzzles(n, region=pz.RHOMBUS_REGION):
        rep.cases += 1
        where = {"n": n, "labels": bp.to_json()}
        try:
            lower, upper = pz.split_bipuzzle(bp)
        except pz.PuzzleIntegrityError:
            rep.fail("no_split", where)
            continue
        if not (pz.validate_puzzle(lower).ok and pz.validate_puzzle(upper).ok):
            rep.fail("invalid_piece", where)
        elif pz.glue_puzzles(lower, upper) != bp:
            rep.fail("not_glued", where)
    return rep


# --- mosaics and puzzles -----------------------------------------------------------


def mosaic_puzzle_sweep(box: BoxParams, kind: str = HEXAGON) -> SweepReport:
    """Straightening is a bijection: round trips both ways, and counts per boundary agree
    with an independent brute-force tiling search."""
    kinds = ("round_trip", "count")
    rep = SweepReport("mosaic-puzzle", failure_kinds=kinds)
    region = pz.TRIANGLE_REGION if kind == HEXAGON else pz.RHOMBUS_REGION
    by_puzzle: Counter = Counter()
    for p in pz.all_puzzles(box.n, region=region):
        if p.boundary()[0].count("1") != box.d:
            continue
        rep.cases += 1
        m = puzzle_to_mosaic(p, box)
        if mosaic_to_puzzle(m) != p or puzzle_to_mosaic(mosaic_to_puzzle(m), box) != m:
            rep.fail("round_trip", {"box": [box.d, box.n], "puzzle": p.to_json()})
        by_puzzle[m.boundary()] += 1
    by_tiling = Counter(m.boundary() for m in brute_force_mosaics(box, kind))
    for key in sorted(set(by_puzzle) | set(by_tiling)):
        if by_puzzle[key] != by_tiling[key]:
            rep.fail("count", {"boundary": list(key), "puzzles": by_puzzle[key], "mosaics": by_tiling[key]})
    return rep


# --- bijections ----------------------------------------------------------------------


def _all_bitableaux(box: BoxParams) -> list:
    parts = partitions_in_box(box)
    out = []
    for lam, mu in itertools.product(parts, repeat=2):
        if contains(lam, mu):
            for xi, nu in itertools.product(parts, repeat=2):
                out.extend(enumerate_lr_bitableaux(SkewShape(lam, mu), xi, nu))
    return out


TABLEAU_FAILURES = ("invalid", "data", "not_injective", "count", "round_trip")


def _tableau_job(args) -> SweepReport:
    from .bijections import (
        DEFAULT_VARIANT,
        mosaic_to_tableau,
        tableau_data,
        tableau_to_mosaic,
        variant_box,
        variant_data,
    )

    d, n, variant = args
    box = BoxParams(d, n)
    rep = SweepReport("tableau-bijection", failure_kinds=TABLEAU_FAILURES)
    tbox = variant_box(box, variant)
    images: dict = {}
    for idx, m in enumerate(_mosaics(d, n, HEXAGON)):
        rep.cases += 1
        where = {"box": [d, n], "variant": variant, "mosaic": idx}
        t = mosaic_to_tableau(m, variant)
        if not validate_lr(t).ok:
            rep.fail("invalid", where)
        data = tableau_data(t, tbox)
        if data != variant_data(m.boundary(), variant):
            rep.fail("data", {**where, "data": list(data)})
        if t in images:
            rep.fail("not_injective", where)
        images[t] = m
        if variant == DEFAULT_VARIANT and tableau_to_mosaic(t, box) != m:
            rep.fail("round_trip", where)
    per_data = Counter(tableau_data(t, tbox) for t in images)
    for (nu, mu, lam_vee), k in sorted(per_data.items()):
        lam = complement(lam_vee, tbox)
        if lr_count(nu, mu, lam) != k:
            rep.fail("count", {"box": [d, n], "variant": variant, "data": [nu, mu, lam_vee], "image": k})
    return rep


def tableau_bijection_sweep(box: BoxParams, workers: int | None = None) -> SweepReport:
    """All four variants: valid LR tableaux with the expected data, injective, image counts equal
    the LR counts (so surjective), and the default variant inverts."""
    from .bijections import VARIANTS

    jobs = [(box.d, box.n, v) for v in VARIANTS]
    return _merged("tableau-bijection", TABLEAU_FAILURES, run_jobs(_tableau_job, jobs, workers))


COMMUTOR_FAILURES = ("boundary", "not_injective", "not_inverted", "not_involution", "count", "data")


def _commutor_job(args) -> SweepReport:
    from .bijections import commute_mosaic, commute_mosaic_full, uncommute_mosaic

    d, n, involution = args
    rep = SweepReport("commutor", failure_kinds=COMMUTOR_FAILURES)
    images = set()
    for idx, m in enumerate(_mosaics(d, n, HEXAGON)):
        rep.cases += 1
        where = {"box": [d, n], "mosaic": idx}
        r = commute_mosaic_full(m)
        a, b, g = m.boundary()
        if r.mosaic.boundary() != (b, a, g):
            rep.fail("boundary", where)
        if r.mosaic in images:
            rep.fail("not_injective", where)
        images.add(r.mosaic)
        if uncommute_mosaic(r.mosaic, r.orientation_a, r.orientation_b) != m:
            rep.fail("not_inverted", where)
        if involution and commute_mosaic(r.mosaic) != m:
            rep.fail("not_involution", where)
    return rep


def _commute_tableau_job(args) -> SweepReport:
    from .bijections import commute_tableau, tableau_data

    d, n, involution = args
    box = BoxParams(d, n)
    rep = SweepReport("commutor", failure_kinds=COMMUTOR_FAILURES)
    images = set()
    for t in all_lr_tableaux(box):
        rep.cases += 1
        where = {"box": [d, n], "tableau": t.to_json()}
        u = commute_tableau(t, box)
        nu, mu, lv = tableau_data(t, box)
        if not validate_lr(u).ok or tableau_data(u, box) != (mu, nu, lv):
            rep.fail("data", where)
        if u in images:
            rep.fail("not_injective", where)
        images.add(u)
        if involution and commute_tableau(u, box) != t:
            rep.fail("not_involution", where)
    return rep


def commutativity_counts(box: BoxParams) -> SweepReport:
    """Counts of mosaics and of LR tableaux are symmetric in the first two boundary arguments."""
    rep = SweepReport("commutativity-counts", failure_kinds=("count",))
    mosaics = Counter(m.boundary() for m in _mosaics(box.d, box.n, HEXAGON))
    parts = partitions_in_box(box)
    for a, b, g in itertools.product(parts, repeat=3):
        rep.cases += 1
        if mosaics[(a, b, g)] != mosaics[(b, a, g)]:
            rep.fail("count", {"box": [box.d, box.n], "mosaics": [a, b, g]})
        lam = complement(g, box)
        if lr_count(a, b, lam) != lr_count(b, a, lam):
            rep.fail("count", {"box": [box.d, box.n], "tableaux": [a, b, g]})
    return rep


def commutor_sweep(box: BoxParams, involution: bool = True, workers: int | None = None) -> SweepReport:
    """Mosaic and tableau commutors: swapped boundary data, injective, inverse, and (optionally)
    self-inverse."""
    jobs = [(box.d, box.n, involution)]
    parts = run_jobs(_commutor_job, jobs, 1) + run_jobs(_commute_tableau_job, jobs, 1)
    return _merged("commutor", COMMUTOR_FAILURES, parts)


ASSOCIATOR_FAILURES = ("boundary", "not_injective", "not_inverted", "not_cyclic", "data", "count")


def bimosaic_associator_sweep(box: BoxParams) -> SweepReport:
    """Boundary rotates by one nest, injective, inverse schedule undoes it, four applications
    return to the original boundary."""
    from .bijections import associate_bimosaic, associate_bimosaic_full, unassociate_bimosaic

    rep = SweepReport("bimosaic-associator", failure_kinds=ASSOCIATOR_FAILURES)
    images = set()
    for idx, m in enumerate(_mosaics(box.d, box.n, OCTAGON)):
        rep.cases += 1
        where = {"box": [box.d, box.n], "mosaic": idx}
        r = associate_bimosaic_full(m)
        a, b, c, d = m.boundary()
        if r.mosaic.boundary() != (d, a, b, c):
            rep.fail("boundary", where)
        if r.mosaic in images:
            rep.fail("not_injective", where)
        images.add(r.mosaic)
        if unassociate_bimosaic(r.mosaic, r.orientations) != m:
            rep.fail("not_inverted", where)
        x = m
        for _ in range(4):
            x = associate_bimosaic(x)
        if x.boundary() != m.boundary():
            rep.fail("not_cyclic", where)
    return rep


def bitableau_associator_sweep(box: BoxParams) -> SweepReport:
    """Data (xi, nu, mu, lam^v) goes to (nu, mu, xi, lam^v), injective, inverse schedule undoes it,
    and the resulting identity between bitableau counts holds."""
    from .bijections import associate_bitableau, unassociate_bitableau

    rep = SweepReport("bitableau-associator", failure_kinds=ASSOCIATOR_FAILURES)
    images = set()
    before: Counter = Counter()
    after: Counter = Counter()
    for bt in _all_bitableaux(box):
        rep.cases += 1
        where = {"box": [box.d, box.n], "bitableau": bt.to_json()}
        out = associate_bitableau(bt, box)
        xi, nu, mu, lv = bt.boundary(box)
        if out.boundary(box) != (nu, mu, xi, lv):
            rep.fail("data", where)
        if out in images:
            rep.fail("not_injective", where)
        images.add(out)
        if unassociate_bitableau(out, box) != bt:
            rep.fail("not_inverted", where)
        before[bt.boundary(box)] += 1
        after[out.boundary(box)] += 1
    for (xi, nu, mu, lv), k in sorted(before.items()):
        if after[(nu, mu, xi, lv)] != k:
            rep.fail("count", {"box": [box.d, box.n], "data": [xi, nu, mu, lv]})
    return rep


def jdt_sweep(box: BoxParams, slides: bool = True) -> SweepReport:
    """Coincidence of the two tableau bijections, rotation against the four-step transform and
    (optionally) single-rhombus migrations against single slides."""
    from .bijections import check_slide_correspondence, check_tao_coincidence, rotate_mosaic, plus_en_tableau

    rep = SweepReport("jdt", failure_kinds=("coincidence", "rotation", "slide"))
    ms = list(_mosaics(box.d, box.n, HEXAGON))
    co = check_tao_coincidence(box, ms)
    rep.cases += co.cases
    for w in co.failures:
        rep.fail("coincidence", w)
    for idx, m in enumerate(ms):
        rep.cases += 1
        if plus_en_tableau(rotate_mosaic(m, 1)) != rotate_transform_tableau(plus_en_tableau(m), box):
            rep.fail("rotation", {"box": [box.d, box.n], "mosaic": idx})
    if slides:
        sl = check_slide_correspondence(box, ms)
        rep.cases += sl.cases
        for w in sl.failures:
            rep.fail("slide", w)
    return rep
