import json
from math import gcd
import xml.etree.ElementTree as ET

from conftest import FIGURE_TWELVE, gps_ends
from loggw.tropical import curve_from_dict, curve_to_dict, curve_to_svg, curves_to_json, enumerate_curves

SVG = "{http://www.w3.org/2000/svg}"


def test_json_round_trip_is_exact():
    doc = curve_to_dict(FIGURE_TWELVE, 12)
    text = json.dumps(doc)
    assert "." not in text  # rationals stay as p/q strings
    assert ["-3", "5/2"] in doc["vertices"]
    assert curve_from_dict(json.loads(text)).canonical() == FIGURE_TWELVE.canonical()
    assert doc["multiplicity"] == 12
    assert sorted(doc["vertex_multiplicities"]) == [1, 1, 2, 2, 3]


def test_bounded_edge_directions_are_primitive():
    doc = curve_to_dict(FIGURE_TWELVE)
    for e in doc["bounded_edges"]:
        dx, dy = e["direction"]
        assert (dx, dy) != (0, 0)
        assert gcd(dx, dy) == 1


def test_curves_to_json_total():
    doc = curves_to_json(enumerate_curves(gps_ends()))
    assert doc["count"] == 18
    assert sorted(c["multiplicity"] for c in doc["curves"]) == [3, 3, 12]


def test_svg_is_well_formed_and_labelled():
    svg = curve_to_svg(FIGURE_TWELVE, title="multiplicity 12")
    root = ET.fromstring(svg.split("\n", 1)[1])
    assert root.tag == SVG + "svg"
    assert root.get("version") == "1.1"
    lines = root.findall(f".//{SVG}line")
    assert len(lines) == len(FIGURE_TWELVE.bounded_edges) + len(FIGURE_TWELVE.unbounded_edges)
    widths = sorted({float(l.get("stroke-width")) for l in lines})
    assert widths == [1.5, 3.0, 4.5]  # weights 1, 2 and 3
    labels = sorted(t.text for t in root.findall(f".//{SVG}text"))
    assert labels == ["1", "1", "2", "2", "3"]


def test_svg_stays_inside_viewport():
    svg = curve_to_svg(FIGURE_TWELVE, points=[(0, 0)])
    root = ET.fromstring(svg.split("\n", 1)[1])
    size = float(root.get("width"))
    for line in root.findall(f".//{SVG}line"):
        for attr in ("x1", "y1", "x2", "y2"):
            assert 0 <= float(line.get(attr)) <= size


def test_svg_is_deterministic():
    assert curve_to_svg(FIGURE_TWELVE) == curve_to_svg(FIGURE_TWELVE.canonical())
