from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from lrmosaic.combinat import (
    BoxParams,
    LRBitableau,
    LRTableau,
    SkewShape,
    all_lr_tableaux,
    complement,
    conjugate,
    content,
    enumerate_lr,
    enumerate_lr_bitableaux,
    lr_count,
    partition,
    partition_of_string,
    partitions_in_box,
    rotate_transform_tableau,
    schuetzenberger_slide,
    shape_of_cells,
    standard_order,
    string_of_partition,
    validate_lr,
    yamanouchi,
)

boxes = st.builds(lambda n, k: BoxParams(1 + k % (n - 1), n), st.integers(2, 7), st.integers(0, 10))


@st.composite
def box_and_partition(draw):
    box = draw(boxes)
    parts = partitions_in_box(box)
    return box, parts[draw(st.integers(0, len(parts) - 1))]


def test_partition_normalizes_and_rejects():
    assert partition([3, 1, 0, 0]) == (3, 1)
    with pytest.raises(ValueError):
        partition([1, 2])
    with pytest.raises(ValueError):
        partition([2, -1])


def test_box_rejects_degenerate_parameters():
    with pytest.raises(ValueError):
        BoxParams(0, 3)
    with pytest.raises(ValueError):
        BoxParams(3, 3)


@pytest.mark.parametrize("d,n", [(1, 2), (2, 4), (3, 6), (2, 5)])
def test_partitions_in_box_count(d, n):
    parts = partitions_in_box(BoxParams(d, n))
    assert len(parts) == comb(n, d)
    assert len(set(parts)) == len(parts)


def test_string_examples():
    box = BoxParams(3, 6)
    assert string_of_partition((), box) == "000111"
    assert string_of_partition((3, 3, 3), box) == "111000"
    assert partition_of_string("001101", box) == (1, 1)
    assert partition_of_string("010101", box) == (2, 1)
    assert partition_of_string("011001", box) == (2, 2)


@given(box_and_partition())
def test_string_round_trip(bp):
    box, lam = bp
    s = string_of_partition(lam, box)
    assert len(s) == box.n and s.count("1") == box.d
    assert partition_of_string(s, box) == lam


@given(box_and_partition())
def test_complement_is_string_reversal(bp):
    box, lam = bp
    assert string_of_partition(complement(lam, box), box) == string_of_partition(lam, box)[::-1]
    assert complement(complement(lam, box), box) == lam


@given(box_and_partition())
def test_conjugate_is_an_involution_into_the_transposed_box(bp):
    box, lam = bp
    assert conjugate(conjugate(lam)) == lam
    assert box.conjugate().fits(conjugate(lam))


def test_shape_of_cells():
    assert shape_of_cells({(0, 0), (0, 1), (1, 0)}) == (2, 1)
    assert shape_of_cells(set()) == ()
    with pytest.raises(ValueError):
        shape_of_cells({(0, 0), (1, 1)})


def test_validate_lr_names_the_broken_condition():
    good = LRTableau.from_rows((2, 1), (1,), [[None, 1], [1]])
    assert validate_lr(good).ok
    # row decreases
    bad_row = LRTableau.from_rows((2,), (), [[2, 1]])
    assert validate_lr(bad_row).condition == "i"
    # column not strictly increasing upward
    bad_col = LRTableau.from_rows((1, 1), (), [[1], [1]])
    assert validate_lr(bad_col).condition == "ii"
    # reading word 1 2: the tail "2" has more 2s than 1s
    bad_word = LRTableau.from_rows((2, 1), (1,), [[None, 2], [1]])
    assert validate_lr(bad_word).condition == "iii"


def test_known_coefficients():
    assert lr_count((1,), (1,), (2,)) == 1
    assert lr_count((1,), (1,), (1, 1)) == 1
    assert lr_count((2, 1), (2, 1), (3, 2, 1)) == 2
    assert lr_count((2, 1), (2, 1), (4, 2)) == 1
    assert lr_count((1,), (1,), (2, 1)) == 0
    assert lr_count((), (2, 1), (2, 1)) == 1


@given(boxes)
def test_enumerated_tableaux_are_valid(box):
    for t in all_lr_tableaux(box):
        assert validate_lr(t).ok
        assert box.fits(t.outer)


def test_lr_tableau_totals_are_frozen():
    got = {(d, n): len(all_lr_tableaux(BoxParams(d, n))) for n in range(2, 6) for d in range(1, n)}
    assert got == {
        (1, 2): 3, (1, 3): 6, (2, 3): 6, (1, 4): 10, (2, 4): 21, (3, 4): 10,
        (1, 5): 15, (2, 5): 56, (3, 5): 56, (4, 5): 15,
    }


def test_json_round_trip():
    for t in all_lr_tableaux(BoxParams(2, 4)):
        assert LRTableau.from_json(t.to_json()) == t
    bts = enumerate_lr_bitableaux(SkewShape((2, 1)), (1,), (1, 1))
    assert bts
    for bt in bts:
        assert LRBitableau.from_json(bt.to_json()) == bt


def test_standard_order_breaks_ties_west_to_east():
    t = LRTableau.from_rows((3, 1), (1,), [[None, 1, 1], [2]])
    assert standard_order(t) == [(0, 1), (0, 2), (1, 0)]


def test_yamanouchi_is_the_unique_straight_filling():
    for lam in partitions_in_box(BoxParams(3, 6)):
        ts = enumerate_lr(SkewShape(lam), lam)
        assert ts == [yamanouchi(lam)]


def _inner_corners(t):
    inner = t.inner
    return [(r, inner[r] - 1) for r in range(len(inner)) if r + 1 >= len(inner) or inner[r + 1] < inner[r]]


def test_slides_preserve_lr_and_invert_each_other():
    box = BoxParams(3, 6)
    checked = 0
    for t in all_lr_tableaux(box):
        for corner in _inner_corners(t):
            u = schuetzenberger_slide(t, corner, "forward")
            assert validate_lr(u).ok and content(u) == content(t)
            # the vacated outer cell is where t's outer shape lost a box
            gone = set(SkewShape(t.outer).cells()) - set(SkewShape(u.outer).cells())
            (cell,) = gone
            assert schuetzenberger_slide(u, cell, "reverse") == t
            checked += 1
    assert checked > 0


def test_slide_rejects_non_corners():
    t = LRTableau.from_rows((2, 1), (1,), [[None, 1], [1]])
    with pytest.raises(ValueError):
        schuetzenberger_slide(t, (0, 1), "forward")
    with pytest.raises(ValueError):
        schuetzenberger_slide(t, (0, 0), "reverse")


def test_rotate_transform_has_complement_content():
    box = BoxParams(2, 5)
    for t in all_lr_tableaux(box):
        u = rotate_transform_tableau(t, box)
        assert validate_lr(u).ok
        assert content(u) == complement(t.outer, box)
        assert u.inner == content(t)


def test_bitableau_boundary():
    bt = enumerate_lr_bitableaux(SkewShape((2, 1)), (1,), (1, 1))[0]
    assert bt.boundary(BoxParams(2, 4)) == ((1,), (1, 1), (), (1,))
