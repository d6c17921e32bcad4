import xml.etree.ElementTree as ET

from nakaseq.algebra import Indec, selfinjective
from nakaseq.render import BOTH_FILL, EXT_FILL, HOM_FILL, render_ascii, render_svg

SVG = "{http://www.w3.org/2000/svg}"


def test_ascii_layout():
    A = selfinjective(4, 2)
    # S_1 sits at (3, 0); it maps into P_4 = (4,2) at (3, 1) and extends S_2 at (2, 0)
    text = render_ascii(A, Indec(1, 1))
    assert text == " . . . H\n. . E o\n"


def test_ascii_both_regions():
    A = selfinjective(4, 4)
    text = render_ascii(A, Indec(2, 2))
    assert set(text) <= set(" .oHEB\n")
    assert text.count("o") == 1
    assert len(text.splitlines()) == 4


def test_svg_is_deterministic_and_well_formed():
    A = selfinjective(5, 4)
    a = render_svg(A, Indec(2, 2))
    assert a == render_svg(A, Indec(2, 2))
    root = ET.fromstring(a)
    circles = root.findall(f".//{SVG}circle")
    assert len(circles) == 20
    assert all(c.get("r") == "3" for c in circles)
    fills = {p.get("fill") for p in root.findall(f".//{SVG}polygon")}
    assert fills <= {HOM_FILL, EXT_FILL, BOTH_FILL}


def test_svg_pixel_positions():
    A = selfinjective(3, 2)
    root = ET.fromstring(render_svg(A, Indec(3, 1), regions=()))
    pts = {(int(c.get("cx")), int(c.get("cy"))) for c in root.findall(f".//{SVG}circle")}
    margin = 30
    expected = {(margin + 40 * a + 20 * b, margin + 40 - 40 * b) for a in range(3) for b in range(2)}
    assert pts == expected
    assert root.findall(f".//{SVG}polygon") == []


def test_blend():
    assert BOTH_FILL == "#e7e0e5"
