import json
import xml.etree.ElementTree as ET

import pytest

from lib.export import chamber_notes, export_seed, load_seed, render, seed_record
from lib.ingermanson import build_ing_seed
from lib.leclerc import build_lec_seed


def test_ascii_single_crossing(single_crossing):
    lines = render(single_crossing).splitlines()
    assert lines[0] == "1 --\\ /-- 2"
    assert lines[1] == "   1 X"
    assert lines[2] == "2 --/ \\-- 1"
    assert lines[4] == "chi_1 (h=1, solid, frozen): D[1|2] left D[1|1]"


def test_ascii_marks_hollow_crossings(worked_example):
    text = render(worked_example)
    assert text.count(" o") == 2
    assert "chi_5 (h=4, hollow)" in text


def test_svg_is_well_formed(worked_example):
    root = ET.fromstring(render(worked_example, format="svg", annotations="monomials"))
    assert root.tag.endswith("svg")
    circles = [el for el in root.iter() if el.tag.endswith("circle")]
    assert len(circles) == 9
    assert sum(1 for el in circles if el.get("fill") == "white") == 2


def test_shape_notes(single_crossing, top_cell):
    assert chamber_notes(single_crossing, "shapes") == {1: "[1..1]"}
    assert set(chamber_notes(top_cell, "shapes").values()) == {"empty"}


def test_unknown_render_options(single_crossing):
    with pytest.raises(ValueError):
        render(single_crossing, format="png")
    with pytest.raises(ValueError):
        chamber_notes(single_crossing, "colors")


def test_json_export_loads_back(worked_example):
    for seed in (build_ing_seed(worked_example), build_lec_seed(worked_example)):
        text = export_seed(seed)
        assert text.endswith("\n")
        assert load_seed(text) == seed_record(seed)


def test_empty_seed_export(top_cell):
    data = json.loads(export_seed(build_ing_seed(top_cell)))
    assert data["variables"] == []
    assert data["quiver"]["arrows"] == []
    assert data["mask"] == [1, 1, 1]


def test_load_rejects_other_schema(single_crossing):
    data = json.loads(export_seed(build_ing_seed(single_crossing)))
    data["schema"] = 99
    with pytest.raises(ValueError):
        load_seed(json.dumps(data))


def test_dot_export(longest_n3):
    dot = export_seed(build_ing_seed(longest_n3), format="dot")
    assert dot.startswith("digraph ingermanson {")
    assert '1 [shape=box, label="1"];' in dot
    assert '3 [shape=circle, label="3"];' in dot
    assert "2 -> 3;" in dot and "3 -> 1;" in dot
    with pytest.raises(ValueError):
        export_seed(build_ing_seed(longest_n3), format="yaml")


def test_constructions_export_the_same_seed(worked_example):
    d = worked_example
    ing, lec = seed_record(build_ing_seed(d)), seed_record(build_lec_seed(d))
    assert ing.quiver == lec.quiver
    for a, b in zip(ing.variables, lec.variables):
        assert (a.label, a.frozen) == (b.label, b.frozen)
        assert a.rows == d.v.apply(b.rows)
        assert a.cols == d.w.apply(b.cols)
        assert a.monomial is not None and b.monomial is None
