import xml.etree.ElementTree as ET

import pytest

from lrmosaic import puzzles as pz
from lrmosaic.combinat import BoxParams, LRTableau
from lrmosaic.mosaic import OCTAGON, all_mosaics, canonical_mosaic
from lrmosaic.render import RenderError, puzzle_ascii, render, tableau_ascii


def _polygons(svg):
    root = ET.fromstring(svg)
    return [e for e in root.iter() if e.tag.endswith("polygon")]


def test_mosaic_svg_draws_every_tile_once():
    m = canonical_mosaic(BoxParams(2, 4), (2, 1), "A")
    svg = render(m, "svg")
    assert len(_polygons(svg)) >= len(m.tiles)
    assert render(m, "svg") == svg


def test_octagon_svg_parses():
    m = all_mosaics(BoxParams(1, 3), OCTAGON)[0]
    assert _polygons(render(m, "svg"))


def test_puzzle_svg_has_one_triangle_per_piece():
    p = pz.all_zero_puzzle(3)
    assert len(_polygons(render(p, "svg"))) >= 9


def test_tableau_svg_parses():
    t = LRTableau.from_rows((2, 1), (1,), [[None, 1], [1]])
    ET.fromstring(render(t, "svg"))


def test_tableau_ascii():
    t = LRTableau.from_rows((3, 1), (1,), [[None, 1, 1], [2]])
    assert tableau_ascii(t) == "2\n. 1 1\n"
    assert tableau_ascii(LRTableau.from_rows((), (), [])) == ""


def test_puzzle_ascii():
    text = puzzle_ascii(pz.all_zero_puzzle(2))
    assert text.splitlines() == [" 0 0", " 0", "0 0 0 0", "0 0"]
    bip = pz.all_puzzles(2, region=pz.RHOMBUS_REGION)[0]
    assert len(puzzle_ascii(bip).splitlines()) == 5


def test_unsupported_formats():
    with pytest.raises(RenderError):
        render(canonical_mosaic(BoxParams(1, 2), ()), "ascii")
    with pytest.raises(RenderError):
        render(pz.all_zero_puzzle(1), "png")
