"""End-to-end acceptance checks, one test per criterion.

Each test prints a single ``[criterion k] PASS|FAIL ...`` line.  Runtime
budgets are checked where a criterion states one.
"""

import itertools
import time
from functools import lru_cache

import pytest

from lrmosaic import puzzles as pz
from lrmosaic.combinat import BoxParams, partitions_in_box
from lrmosaic.mosaic import HEXAGON, MINUS_EN, PLUS_EN, brute_force_mosaics, canonical_flock, canonical_mosaic
from lrmosaic.oracle import three_way_sweep, verify_identities
from lrmosaic import sweeps


@pytest.fixture
def report(capsys):
    """Print one result line per criterion, outside pytest's capture."""

    def emit(k: int, ok: bool, detail: str, started: float) -> None:
        with capsys.disabled():
            status = "PASS" if ok else "FAIL"
            print(f"\n[criterion {k}] {status} {detail} ({time.perf_counter() - started:.1f}s)")

    return emit


@lru_cache(maxsize=None)
def _migration_reports() -> tuple:
    return tuple(sweeps.migration_sweep(b) for b in sweeps.boxes(4))


def _total(reports, *kinds) -> int:
    return sum(r.counts[k] for r in reports for k in kinds)


def test_criterion_1_three_way_agreement(report):
    t0 = time.perf_counter()
    rows = [r for b in sweeps.boxes(5) for r in three_way_sweep(b, workers=sweeps.worker_count())]
    bad = [r for r in rows if not r.agree]
    elapsed = time.perf_counter() - t0
    ok = not bad and elapsed < 120
    report(1, ok, f"{len(rows)} triples, {len(bad)} disagreements", t0)
    assert not bad, bad[:3]
    assert elapsed < 120


def test_criterion_2_mosaic_puzzle_bijection(report):
    t0 = time.perf_counter()
    reps = [sweeps.mosaic_puzzle_sweep(b) for b in sweeps.boxes(4)]
    elapsed = time.perf_counter() - t0
    fails = sum(r.failures for r in reps)
    ok = fails == 0 and elapsed < 60
    report(2, ok, f"{sum(r.cases for r in reps)} cases, {fails} failures", t0)
    assert fails == 0, [r.witnesses for r in reps if not r.ok]
    assert elapsed < 60


def test_criterion_3_migration_soundness(report):
    t0 = time.perf_counter()
    reps = _migration_reports()
    fails = _total(reps, "unsound")
    report(3, fails == 0, f"{sum(r.cases for r in reps)} migrations, {fails} unsound", t0)
    assert fails == 0, [w for r in reps for w in r.witnesses]


def test_criterion_4_migration_invertibility(report):
    t0 = time.perf_counter()
    reps = _migration_reports()
    fails = _total(reps, "not_inverted")
    report(4, fails == 0, f"{sum(r.cases for r in reps)} migrations, {fails} not inverted", t0)
    assert fails == 0, [w for r in reps for w in r.witnesses]


def test_criterion_5_commutativity_and_involution(report):
    t0 = time.perf_counter()
    reps = [sweeps.commutativity_counts(b) for b in sweeps.boxes(5)]
    reps += [sweeps.commutor_sweep(b, involution=b.n <= 4) for b in sweeps.boxes(5)]
    fails = sum(r.failures for r in reps)
    report(5, fails == 0, f"{sum(r.cases for r in reps)} cases, {fails} failures", t0)
    assert fails == 0, [r.witnesses for r in reps if not r.ok]


def test_criterion_6_associativity(report):
    t0 = time.perf_counter()
    ids = []
    for b in sweeps.boxes(4):
        ids += [verify_identities(b, "bipuzzle"), verify_identities(b, "bitableau")]
    ids.append(verify_identities(BoxParams(2, 4), "associativity"))
    ids += [verify_identities(BoxParams(1, n), "associativity") for n in range(2, 6)]
    maps = [sweeps.bimosaic_associator_sweep(b) for b in sweeps.boxes(3)]
    maps += [sweeps.bitableau_associator_sweep(b) for b in sweeps.boxes(4)]
    elapsed = time.perf_counter() - t0
    fails = sum(len(r.failures) for r in ids) + sum(r.failures for r in maps)
    cases = sum(r.cases for r in ids) + sum(r.cases for r in maps)
    ok = fails == 0 and elapsed < 300
    report(6, ok, f"{cases} cases, {fails} failures", t0)
    assert fails == 0, [r.failures[:3] for r in ids if not r.ok] + [r.witnesses for r in maps if not r.ok]
    assert elapsed < 300


def test_criterion_7_bipuzzle_splitting(report):
    t0 = time.perf_counter()
    reps = [sweeps.bipuzzle_split_sweep(n) for n in range(1, 5)]
    reps += [sweeps.dividing_line_sweep(b) for b in sweeps.boxes(3)]
    fails = sum(r.failures for r in reps)
    report(7, fails == 0, f"{sum(r.cases for r in reps)} cases, {fails} failures", t0)
    assert fails == 0, [r.witnesses for r in reps if not r.ok]


def test_criterion_8_wakes(report):
    t0 = time.perf_counter()
    reps = _migration_reports()
    fails = _total(reps, "wake_split", "wake_crossing")
    journeys, pairs = _total(reps, "journeys"), _total(reps, "crossing_pairs")
    report(8, fails == 0 and pairs > 0, f"{journeys} journeys, {pairs} crossing pairs, {fails} violations", t0)
    assert fails == 0, [w for r in reps for w in r.witnesses]
    assert pairs > 0


def test_criterion_9_jeu_de_taquin(report):
    t0 = time.perf_counter()
    reps = [sweeps.jdt_sweep(b, slides=b.n <= 3) for b in sweeps.boxes(4)]
    fails = sum(r.failures for r in reps)
    report(9, fails == 0, f"{sum(r.cases for r in reps)} cases, {fails} mismatches", t0)
    assert fails == 0, [r.witnesses for r in reps if not r.ok]


def test_criterion_10_specific_instances(report):
    t0 = time.perf_counter()
    problems = []
    if len(pz.enumerate_puzzles(("001101", "010101", "011001"))) < 1:
        problems.append("known puzzle boundary")
    if len(pz.enumerate_bipuzzles(("0101", "0101", "0011", "1001"))) < 1:
        problems.append("known bipuzzle boundary")
    for box, empty in itertools.product(sweeps.boxes(4), "ABC"):
        found = brute_force_mosaics(box, HEXAGON, empty_nests=(empty,))
        by_beta = {}
        for m in found:
            parts = dict(zip("ABC", m.boundary()))
            nxt = "ABC"[("ABC".index(empty) + 1) % 3]
            by_beta.setdefault(parts[nxt], []).append(m)
        for beta in partitions_in_box(box):
            if by_beta.get(beta) != [canonical_mosaic(box, beta, empty)]:
                problems.append(f"uniqueness {box} {empty} {beta}")
    big = BoxParams(5, 9)
    m = canonical_mosaic(big, (4, 4, 2, 1, 1), "C")
    for code in (PLUS_EN, MINUS_EN):
        if canonical_flock(m, "A", code).content() != (4, 4, 2, 1, 1):
            problems.append(f"large-box flock content {code}")
    report(10, not problems, f"{len(problems)} problems", t0)
    assert not problems, problems
