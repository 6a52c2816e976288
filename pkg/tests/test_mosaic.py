from collections import Counter

import pytest

from lrmosaic import puzzles as pz
from lrmosaic.combinat import BoxParams, complement, partitions_in_box, validate_lr
from lrmosaic.geometry import validate_patch_tiling
from lrmosaic.mosaic import (
    HEXAGON,
    MINUS_EN,
    OCTAGON,
    ORIENTATIONS,
    PLUS_EN,
    Flock,
    Mosaic,
    accessible_flocks,
    all_mosaics,
    brute_force_mosaics,
    build_region,
    canonical_flock,
    canonical_mosaic,
    decode_transformed_diagram,
    equivalent,
    flock_tableau,
    is_accessible,
    is_complement,
    mosaic_to_puzzle,
    packed_cells_for_content,
    puzzle_to_mosaic,
)

B24 = BoxParams(2, 4)


def test_region_shapes():
    hexagon = build_region(BoxParams(2, 5), HEXAGON)
    assert hexagon.side_lengths() == [3, 2, 3, 2, 3, 2]
    assert hexagon.interior_angles() == [90, 150] * 3
    octagon = build_region(BoxParams(2, 5), OCTAGON)
    assert octagon.side_lengths() == [3, 2] * 4
    assert octagon.interior_angles() == [90, 150, 150, 150, 90, 150, 150, 150]
    assert octagon.nest_names == ("A", "B", "C", "D")


def test_minimal_hexagon():
    r = build_region(BoxParams(1, 2))
    assert r.side_lengths() == [1] * 6


@pytest.mark.parametrize("code", ORIENTATIONS)
def test_oriented_cells_invert(code):
    nest = build_region(BoxParams(2, 5)).nest("B")
    rows, cols = nest.oriented_dims(code)
    seen = set()
    for i in range(nest.width):
        for j in range(nest.height):
            rc = nest.to_oriented(code, (i, j))
            assert 0 <= rc[0] < rows and 0 <= rc[1] < cols
            assert nest.from_oriented(code, rc) == (i, j)
            seen.add(rc)
    assert len(seen) == rows * cols


def test_mosaic_totals_are_frozen():
    hexes = {(d, n): len(all_mosaics(BoxParams(d, n))) for n in range(2, 6) for d in range(1, n)}
    assert hexes == {
        (1, 2): 3, (1, 3): 6, (2, 3): 6, (1, 4): 10, (2, 4): 21, (3, 4): 10,
        (1, 5): 15, (2, 5): 56, (3, 5): 56, (4, 5): 15,
    }
    octs = {(d, n): len(all_mosaics(BoxParams(d, n), OCTAGON)) for n in range(2, 5) for d in range(1, n)}
    assert octs == {(1, 2): 4, (1, 3): 10, (2, 3): 10, (1, 4): 20, (2, 4): 54, (3, 4): 20}


@pytest.mark.parametrize("kind", [HEXAGON, OCTAGON])
def test_mosaics_validate_and_round_trip(kind):
    for m in all_mosaics(B24, kind):
        assert m.validate()
        assert validate_patch_tiling(m.region.ccw_vertices(), m.tiles)
        p = mosaic_to_puzzle(m)
        assert pz.validate_puzzle(p).ok
        assert puzzle_to_mosaic(p, B24) == m
        assert Mosaic.from_json(m.to_json()) == m


def test_boundary_reads_the_puzzle_strings():
    box = BoxParams(3, 6)
    (p,) = pz.enumerate_puzzles(("001101", "010101", "011001"))
    assert puzzle_to_mosaic(p, box).boundary() == ((1, 1), (2, 1), (2, 2))


@pytest.mark.parametrize("kind", [HEXAGON, OCTAGON])
def test_brute_force_tilings_match_straightened_puzzles(kind):
    for box in (BoxParams(1, 3), B24):
        a = {m.tiles for m in all_mosaics(box, kind)}
        b = {m.tiles for m in brute_force_mosaics(box, kind)}
        assert a == b


def test_broken_mosaic_is_rejected():
    m = all_mosaics(B24)[5]
    tiles = set(m.tiles)
    tiles.discard(next(iter(m.rhombi())))
    assert not validate_patch_tiling(m.region.ccw_vertices(), tiles)


@pytest.mark.parametrize("empty", ["A", "B", "C"])
def test_one_mosaic_per_empty_nest_and_beta(empty):
    for box in (BoxParams(1, 3), B24, BoxParams(1, 4), BoxParams(3, 4)):
        found = brute_force_mosaics(box, HEXAGON, empty_nests=(empty,))
        assert len(found) == len(partitions_in_box(box))
        for beta in partitions_in_box(box):
            m = canonical_mosaic(box, beta, empty)
            assert m in found
            parts = dict(zip("ABC", m.boundary()))
            nxt = "ABC"[("ABC".index(empty) + 1) % 3]
            last = "ABC"[("ABC".index(empty) + 2) % 3]
            assert parts[empty] == () and parts[nxt] == beta and parts[last] == complement(beta, box)


def test_canonical_mosaic_rejects_oversized_beta():
    with pytest.raises(ValueError):
        canonical_mosaic(B24, (3,))


def test_decode_transformed_diagram():
    m = canonical_mosaic(B24, (2, 1), "A")
    nest = m.region.nest("B")
    assert decode_transformed_diagram(m.nest_tiles("B"), nest).outer == (2, 1)
    assert decode_transformed_diagram([], nest).outer == ()
    one = [nest.cell_tile(0, 0)]
    assert decode_transformed_diagram(one, nest).outer == (1,)


def test_canonical_flock_content_in_a_large_box():
    box = BoxParams(5, 9)
    m = canonical_mosaic(box, (4, 4, 2, 1, 1), "C")
    assert m.nest_partition("A") == (4, 4, 2, 1, 1)
    for code in (PLUS_EN, MINUS_EN):
        assert canonical_flock(m, "A", code).content() == (4, 4, 2, 1, 1)


def test_canonical_flocks_are_lr_and_orientation_independent_in_content():
    for m in all_mosaics(B24):
        for nest in "ABC":
            plus = canonical_flock(m, nest, PLUS_EN)
            minus = canonical_flock(m, nest, MINUS_EN)
            assert validate_lr(flock_tableau(m, plus)).ok
            assert validate_lr(flock_tableau(m, minus)).ok
            assert plus.content() == minus.content()


def test_packed_cells_realise_each_content():
    nest = build_region(BoxParams(3, 6)).nest("A")
    for nu in partitions_in_box(BoxParams(3, 6)):
        for code in (PLUS_EN, MINUS_EN):
            cells = packed_cells_for_content(nu, code, nest)
            assert len(cells) == sum(nu)


def test_accessible_flocks():
    m = canonical_mosaic(B24, (2, 1), "A")
    flocks = list(accessible_flocks(m, "B", PLUS_EN))
    assert flocks
    for f in flocks:
        assert is_accessible(m, f)
        assert validate_lr(flock_tableau(m, f)).ok
        assert Flock.from_json(f.to_json()) == f
    # a single rhombus at the nest corner cannot leave while others sit on it
    corner = Flock.make("B", PLUS_EN, {(0, 0): 1})
    assert not is_accessible(m, corner)


def test_equivalence_and_complement_follow_partitions():
    ms = all_mosaics(B24)
    for m in ms:
        a, b, g = m.boundary()
        region = m.region
        for x, y in (("A", "B"), ("B", "C"), ("C", "A")):
            px, py = m.nest_partition(x), m.nest_partition(y)
            same = equivalent(m.nest_tiles(x), region.nest(x), m.nest_tiles(y), region.nest(y))
            assert same == (px == py)
            comp = is_complement(m.nest_tiles(x), region.nest(x), m.nest_tiles(y), region.nest(y), B24)
            assert comp == (complement(px, B24) == py)
    assert Counter(m.boundary() for m in ms)[((), (), (2, 2))] == 1
