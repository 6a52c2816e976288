import pytest

from lrmosaic.combinat import BoxParams, content, validate_lr
from lrmosaic.mosaic import (
    MINUS_EN,
    OCTAGON,
    PLUS_EN,
    Flock,
    accessible_flocks,
    all_mosaics,
    canonical_flock,
    canonical_mosaic,
    flock_tableau,
)
from lrmosaic.migration import (
    HEXAGON_ROUTES,
    MigrationError,
    check_wake_crossing,
    compute_wake,
    dividing_line,
    invert_migration,
    migrate_flock,
)

B24 = BoxParams(2, 4)


def test_canonical_flock_migrates_and_returns():
    m = canonical_mosaic(B24, (2, 1), "A")
    f = canonical_flock(m, "B", MINUS_EN)
    r = migrate_flock(m, f, "A")
    assert r.mosaic.validate()
    assert r.flock.nest == "A"
    assert content(flock_tableau(r.mosaic, r.flock)) == content(flock_tableau(m, f))
    assert len(r.traces) == sum(f.content())
    back = invert_migration(r.mosaic, r.flock, "B")
    assert back.mosaic == m and back.flock == f


@pytest.mark.parametrize("route", sorted(HEXAGON_ROUTES))
def test_every_hexagon_route_is_reversible(route):
    source, target = route
    done = 0
    for m in all_mosaics(B24):
        for code in (PLUS_EN, MINUS_EN):
            try:
                r = migrate_flock(m, canonical_flock(m, source, code), target)
            except (MigrationError, ValueError):
                # some orientations face away from the target
                continue
            assert validate_lr(flock_tableau(r.mosaic, r.flock)).ok
            assert invert_migration(r.mosaic, r.flock, source).mosaic == m
            done += 1
    assert done > 0


def test_unknown_route_and_inaccessible_flock_are_rejected():
    m = canonical_mosaic(B24, (2, 1), "A")
    with pytest.raises(ValueError):
        migrate_flock(m, canonical_flock(m, "B", MINUS_EN), "B")
    with pytest.raises(ValueError):
        migrate_flock(m, Flock.make("B", PLUS_EN, {(0, 0): 1}), "A")


def test_accessible_flocks_all_migrate():
    m = canonical_mosaic(B24, (2, 1), "A")
    for f in accessible_flocks(m, "B", MINUS_EN):
        r = migrate_flock(m, f, "A")
        assert r.flock.content() == f.content()


def test_wakes_split_and_cross_correctly():
    m = canonical_mosaic(BoxParams(2, 5), (3, 2), "A")
    r = migrate_flock(m, canonical_flock(m, "B", MINUS_EN), "A")
    for tr in r.traces:
        w = compute_wake(tr)
        assert not (w.upper & w.lower)
        assert set(w.to_json()) == {"upper", "lower", "midline"}
    assert check_wake_crossing(r.traces).ok


def test_result_json():
    m = canonical_mosaic(B24, (1,), "A")
    r = migrate_flock(m, canonical_flock(m, "B", MINUS_EN), "A")
    doc = r.to_json()
    assert doc["flock"]["nest"] == "A"
    assert len(doc["journeys"]) == 1 and doc["journeys"][0]["steps"]


def test_octagon_has_dividing_line():
    for m in all_mosaics(BoxParams(1, 3), OCTAGON):
        path = dividing_line(m)
        assert path is not None and len(path) >= 2
