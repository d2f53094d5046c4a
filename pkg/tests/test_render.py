import json

import pytest

from cli.errors import UsageError
from cli.render import (
    ascii_complete,
    ascii_labeling,
    ascii_towers,
    load_drawable,
    svg_complete,
    svg_labeling,
    svg_towers,
)
from models.balanced import RotheLabeling
from models.rothify import CompleteTowerTableau, complete, rothify
from models.tableau import TowerTableau, slide_word
from models.tower import TowerDiagram


def test_ascii_tower_diagram():
    assert ascii_towers(TowerDiagram((0, 1, 4, 2, 1))) == "  #\n  #\n  ##\n ####\n-----"
    assert ascii_towers(TowerDiagram()) == ""


def test_ascii_tableau(sliding_example):
    assert ascii_towers(sliding_example) == "  7\n  6\n  53\n 8421\n-----"


def test_ascii_wide_labels_are_spaced():
    T = TowerTableau(((10,), (2,)))
    assert ascii_towers(T) == "10  2\n-----"


def test_ascii_labeling():
    L = rothify(slide_word((3, 1, 4, 3, 5, 4)))
    assert ascii_labeling(L) == "2....\n.....\n..34.\n..56.\n..1.."
    assert ascii_labeling(RotheLabeling()) == ""


def test_ascii_complete():
    assert ascii_complete(complete(slide_word((3,)))) == " |  1\n-+---\n |...\n |...\n1|..1"
    assert ascii_complete(complete(TowerTableau())) == ""


def test_svg_pictures():
    L = rothify(slide_word((3, 1, 4, 3, 5, 4)))
    picture = svg_labeling(L)
    assert "<svg" in picture
    assert picture.count("</text>") == 6
    assert "<text" not in svg_towers(TowerDiagram((0, 1, 4)))
    assert svg_towers(slide_word((2, 1))).count("</text>") == 2


def test_svg_complete_has_axes():
    picture = svg_complete(complete(slide_word((3,))))
    assert picture.count("</text>") == 3
    assert picture.count("<path") == 2


@pytest.mark.parametrize(
    "raw, kind",
    [
        ("[0, 1, 4]", TowerDiagram),
        ('[{"row": 1, "col": 1, "label": 1}]', RotheLabeling),
        ('{"heights": [1], "labels": [{"col": 1, "ht": 0, "label": 1}]}', TowerTableau),
        ("314354", CompleteTowerTableau),
    ],
)
def test_load_drawable(raw, kind):
    assert isinstance(load_drawable(raw), kind)


def test_load_drawable_complete_json():
    half = {"heights": [0, 0, 1], "labels": [{"col": 3, "ht": 0, "label": 1}]}
    raw = json.dumps({"main": half, "virtual": half})
    assert load_drawable(raw) == complete(slide_word((3,)))


def test_load_drawable_rejects_unknown_objects():
    with pytest.raises(UsageError):
        load_drawable('{"colour": "red"}')
