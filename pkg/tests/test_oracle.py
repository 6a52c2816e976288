import pytest

from lrmosaic.combinat import BoxParams
from lrmosaic.oracle import (
    coefficient_three_way,
    lr_coefficient_algebra,
    pieri_multiply,
    schur_via_jacobi_trudi,
    three_way_sweep,
    verify_identities,
)

B24 = BoxParams(2, 4)
B36 = BoxParams(3, 6)


def test_pieri_examples():
    assert pieri_multiply({(): 1}, 1, B24) == {(1,): 1}
    assert pieri_multiply({(1,): 1}, 1, B24) == {(2,): 1, (1, 1): 1}
    assert pieri_multiply({(2,): 1}, 2, B24) == {(2, 2): 1}
    assert pieri_multiply({(2, 2): 1}, 1, B24) == {}


def test_pieri_rejects_out_of_range_strip():
    with pytest.raises(ValueError):
        pieri_multiply({(): 1}, 3, B24)


def test_jacobi_trudi_examples():
    assert schur_via_jacobi_trudi((2,), B24) == {(2,): 1}
    assert schur_via_jacobi_trudi((1, 1), B24) == {(1, 1): 1}
    assert schur_via_jacobi_trudi((2, 1), B36) == {(2, 1): 1}
    assert schur_via_jacobi_trudi((), B36) == {(): 1}


def test_algebra_coefficients():
    assert lr_coefficient_algebra((), (1,), (1,), B24) == 1
    assert lr_coefficient_algebra((), (1,), (2,), B24) == 0
    assert lr_coefficient_algebra((1,), (1,), (1, 1), B24) == 1
    assert lr_coefficient_algebra((2, 1), (2, 1), (3, 2, 1), B36) == 2


def test_three_way_examples():
    r = coefficient_three_way((), (2, 1), (2, 1), B36)
    assert (r.puzzle, r.tableau, r.algebra) == (1, 1, 1)
    r = coefficient_three_way((1, 1), (2, 1), (3, 1, 1), B36)
    assert r.agree and r.puzzle == 1
    r = coefficient_three_way((2, 1), (2, 1), (3, 2, 1), B36)
    assert (r.puzzle, r.tableau, r.algebra) == (2, 2, 2)


def test_three_way_sweep_small_box():
    rows = three_way_sweep(B24)
    assert len(rows) == 216
    assert all(r.agree for r in rows)
    assert sum(r.algebra for r in rows) == 21


@pytest.mark.parametrize("which", ["commutativity", "associativity", "bipuzzle", "bitableau"])
def test_identities_hold(which):
    report = verify_identities(B24, which)
    assert report.ok, report.failures[:3]
    assert report.cases > 0
    doc = report.to_json()
    assert doc["identity"] == which and doc["failures"] == []


def test_unknown_identity():
    with pytest.raises(ValueError):
        verify_identities(B24, "distributivity")
