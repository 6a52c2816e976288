import pytest
from hypothesis import given
from hypothesis import strategies as st

from lrmosaic.geometry import (
    RHOMBUS,
    SQUARE,
    TRIANGLE,
    ExactPoint,
    Tile,
    boundary_cycle,
    check_tile,
    cross_sign,
    direction_of,
    frame_x,
    parallelogram,
    polygon_area,
    rotate_patch,
    surd_cmp,
    triangle,
    unit,
    validate_patch_tiling,
)

ORIGIN = ExactPoint(0, 0, 0, 0)
points = st.builds(
    lambda ks: sum((unit(k) for k in ks), ORIGIN),
    st.lists(st.integers(0, 11), max_size=8),
)


def test_units_have_expected_coordinates():
    assert unit(0) == ExactPoint(2, 0, 0, 0)
    assert unit(3) == ExactPoint(0, 0, 2, 0)
    assert unit(2) == ExactPoint(1, 0, 0, 1)
    assert unit(1) == ExactPoint(0, 1, 1, 0)
    for k in range(12):
        x, y = unit(k).to_float()
        assert abs(x * x + y * y - 1) < 1e-12
        assert direction_of(unit(k)) == k
    assert direction_of(unit(0) + unit(1)) is None


@given(points, points, st.integers(-12, 12))
def test_rotation_is_linear(p, q, k):
    assert (p + q).rot30(k) == p.rot30(k) + q.rot30(k)


@given(points)
def test_twelve_steps_is_the_identity(p):
    assert p.rot30(12) == p
    assert p.rot30(6) == -p
    assert p.rot30(3).rot30(3) == -p


@given(points, points, points)
def test_addition_is_associative(p, q, r):
    assert (p + q) + r == p + (q + r)
    assert p + q == q + p


def test_surd_comparison():
    # 2 < sqrt 3 * 2 ~ 3.46 < 4
    assert surd_cmp((2, 0), (0, 2)) < 0
    assert surd_cmp((4, 0), (0, 2)) > 0
    assert surd_cmp((1, 1), (1, 1)) == 0
    # x = sqrt 3 / 2 for unit(1) along direction 0, doubled
    assert frame_x(unit(1), 0) == (0, 1)


def test_cross_sign():
    assert cross_sign(ORIGIN, unit(0), unit(3)) == 1
    assert cross_sign(ORIGIN, unit(3), unit(0)) == -1
    assert cross_sign(ORIGIN, unit(0), unit(0).scale(2)) == 0


def test_tile_shapes_and_areas():
    tri = triangle(ORIGIN, 0)
    sq = parallelogram(SQUARE, ORIGIN, unit(0), unit(3))
    rh = parallelogram(RHOMBUS, ORIGIN, unit(0), unit(1))
    for t in (tri, sq, rh):
        assert check_tile(t) is None
    assert (polygon_area(tri.vertices).p, polygon_area(tri.vertices).q) == (0, 1)
    assert (sq.area().p, sq.area().q) == (4, 0)
    assert (rh.area().p, rh.area().q) == (2, 0)
    bad = Tile.make(RHOMBUS, [ORIGIN, unit(0), unit(0) + unit(2), unit(2)])
    assert check_tile(bad) is not None


def test_tile_json_round_trip():
    rh = parallelogram(RHOMBUS, unit(4), unit(0), unit(1))
    assert Tile.from_json(rh.to_json()) == rh


def test_cyclic_vertex_order_is_irrelevant():
    vs = [ORIGIN, unit(0), unit(0) + unit(3), unit(3)]
    assert Tile.make(SQUARE, vs) == Tile.make(SQUARE, vs[2:] + vs[:2])


def _zonogon():
    """Rhombus, square and two triangles filling a centrally symmetric hexagon."""
    rh = parallelogram(RHOMBUS, ORIGIN, unit(0), unit(1))
    sq = parallelogram(SQUARE, unit(1), unit(0), unit(3))
    t1 = Tile.make(TRIANGLE, [ORIGIN, unit(1), unit(3)])
    t2 = Tile.make(TRIANGLE, [unit(1), unit(1) + unit(3), unit(3)])
    return [rh, sq, t1, t2]


def test_validate_patch_tiling_accepts_and_rejects():
    patch = _zonogon()
    region = boundary_cycle(patch)
    assert region is not None and len(region) == 6
    assert validate_patch_tiling(region, patch)
    assert not validate_patch_tiling(region, patch[:-1])
    assert not validate_patch_tiling(region, patch + [patch[0]])


def test_zonogon_half_turn_is_a_new_tiling():
    patch = _zonogon()
    region = boundary_cycle(patch)
    far = unit(0) + unit(1) + unit(3)
    turned = [t.transformed(lambda p: far - p) for t in patch]
    assert validate_patch_tiling(region, turned)
    assert set(turned) != set(patch)


def test_rotate_patch_on_a_hexagon_of_triangles():
    hexagon = [triangle(ORIGIN, k) for k in range(0, 12, 2)]
    region = boundary_cycle(hexagon)
    assert validate_patch_tiling(region, hexagon)
    for angle in (120, 180, 240):
        assert rotate_patch(hexagon, ORIGIN, angle) == frozenset(hexagon)


def test_rotate_patch_rejects_asymmetric_region():
    patch = [parallelogram(SQUARE, ORIGIN, unit(0), unit(3))]
    with pytest.raises(ValueError):
        rotate_patch(patch, ORIGIN, 120)
