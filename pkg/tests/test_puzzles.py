import itertools

import pytest

from lrmosaic import puzzles as pz
from lrmosaic.combinat import BoxParams, complement, lr_count, partition_of_string, partitions_in_box, string_of_partition


def test_all_puzzle_totals_are_frozen():
    assert [len(pz.all_puzzles(n)) for n in range(1, 6)] == [2, 5, 14, 43, 144]
    assert [len(pz.all_puzzles(n, region=pz.RHOMBUS_REGION)) for n in range(1, 5)] == [2, 6, 22, 96]


def test_every_enumerated_puzzle_validates():
    for n in range(1, 5):
        for p in pz.all_puzzles(n):
            assert pz.validate_puzzle(p).ok


def test_known_single_solution_boundaries():
    assert len(pz.enumerate_puzzles(("001101", "010101", "011001"))) == 1
    assert len(pz.enumerate_bipuzzles(("0101", "0101", "0011", "1001"))) == 1


def test_boundary_string_counts_must_agree():
    assert pz.enumerate_puzzles(("01", "01", "11")) == []
    with pytest.raises(ValueError):
        pz.enumerate_puzzles(("01", "01"))
    with pytest.raises(ValueError):
        pz.enumerate_puzzles(("01", "01", "011"))


def test_all_zero_puzzle():
    p = pz.all_zero_puzzle(2)
    assert pz.validate_puzzle(p).ok
    assert p.boundary() == ("00", "00", "00")


def test_invalid_pieces_are_reported():
    p = pz.all_zero_puzzle(2)
    labels = p.label_map()
    labels[("h", 0, 1)] = 1
    report = pz.validate_puzzle(pz.Puzzle.make(2, labels))
    assert not report.ok and "forbidden" in report.message
    labels = p.label_map()
    labels[("h", 0, 0)] = 2
    assert not pz.validate_puzzle(pz.Puzzle.make(2, labels)).ok


@pytest.mark.parametrize("d,n", [(1, 3), (2, 4), (2, 5), (3, 5)])
def test_puzzle_counts_match_lr_counts(d, n):
    box = BoxParams(d, n)
    counts = pz.puzzle_counts(n)
    for nu, mu, lam in itertools.product(partitions_in_box(box), repeat=3):
        s = tuple(string_of_partition(x, box) for x in (nu, mu, complement(lam, box)))
        assert counts.get(s, 0) == lr_count(nu, mu, lam)


def test_mirror_chirality_disagrees_with_tableaux():
    bad = 0
    for box in (BoxParams(1, 3), BoxParams(2, 4)):
        counts = pz.puzzle_counts(box.n, pz.MIRROR_CHIRALITY)
        for nu, mu, lam in itertools.product(partitions_in_box(box), repeat=3):
            s = tuple(string_of_partition(x, box) for x in (nu, mu, complement(lam, box)))
            bad += counts.get(s, 0) != lr_count(nu, mu, lam)
    assert bad > 0


def test_json_round_trip_both_forms():
    for p in pz.all_puzzles(3) + pz.all_puzzles(2, region=pz.RHOMBUS_REGION):
        doc = p.to_json()
        assert pz.Puzzle.from_json(doc) == p
        rows_only = {"n": doc["n"], "region": doc["region"], "rows": doc["rows"]}
        assert pz.Puzzle.from_json(rows_only) == p


def test_split_and_glue():
    for bp in pz.all_puzzles(3, region=pz.RHOMBUS_REGION):
        lower, upper = pz.split_bipuzzle(bp)
        assert pz.validate_puzzle(lower).ok and pz.validate_puzzle(upper).ok
        pi, rho, sigma, tau = bp.boundary()
        assert lower.boundary()[0] == pi and lower.boundary()[2] == tau
        assert upper.boundary()[0] == sigma and upper.boundary()[2] == rho
        assert lower.boundary()[1] == upper.boundary()[1][::-1]
        assert pz.glue_puzzles(lower, upper) == bp


def test_split_rejects_triangles():
    with pytest.raises(ValueError):
        pz.split_bipuzzle(pz.all_zero_puzzle(2))


def test_string_helpers_agree_with_boundary_reading():
    box = BoxParams(3, 6)
    (p,) = pz.enumerate_puzzles(("001101", "010101", "011001"))
    nu, mu, lam_vee = (partition_of_string(s, box) for s in p.boundary())
    assert (nu, mu, lam_vee) == ((1, 1), (2, 1), (2, 2))
