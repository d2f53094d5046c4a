"""
ASCII and SVG pictures of tower diagrams, tableaux, Rothe labelings and
complete tower tableaux.

Pictures are laid out on unit squares (x, y): the tower cell (i, j) is the
square (i-1, j), a Rothe cell (r, c) sits in the fourth quadrant at
(c-1, -r), and a virtual cell (i', j') is reflected across x + y = 0 into the
third quadrant at (-j'-1, -i'). Rothe row r therefore lines up with virtual
tower r.
"""
from __future__ import annotations

import logging
from typing import Iterable, Mapping, Union

import drawsvg as draw

from cli.errors import UsageError
from cli.inputs import add_command, read_raw, slide_or_fail
from models.balanced import RotheLabeling
from models.perm import Cell
from models.rothify import CompleteTowerTableau, complete, rothify_complete
from models.schemas.common import parse_json
from models.schemas.perm import load_word
from models.schemas.rothe import load_labeling
from models.schemas.tableau import load_complete, load_tableau
from models.schemas.tower import load_heights
from models.tableau import TowerTableau
from models.tower import TowerDiagram

logger = logging.getLogger(__name__)

UNIT = 10
FONT_SIZE = 6

Drawable = Union[TowerDiagram, TowerTableau, RotheLabeling, CompleteTowerTableau]


def _tower_labels(obj: TowerDiagram | TowerTableau) -> dict[Cell, str]:
    if isinstance(obj, TowerDiagram):
        return {cell: "#" for cell in obj.cells()}
    return {cell: str(v) for cell, v in obj.items()}


def _width(labels: Iterable[str]) -> int:
    return max((len(s) for s in labels), default=1)


def _line(fields: list[str], w: int) -> str:
    # one character per unit square unless some label needs more
    sep = "" if w == 1 else " "
    return sep.join(f.rjust(w) for f in fields)


def ascii_towers(obj: TowerDiagram | TowerTableau) -> str:
    labels = _tower_labels(obj)
    if not labels:
        return ""
    width = max(i for i, _ in labels)
    height = max(j for _, j in labels) + 1
    w = _width(labels.values())
    rows = [
        _line([labels.get((i, j), "") for i in range(1, width + 1)], w).rstrip()
        for j in reversed(range(height))
    ]
    rows.append("-" * len(_line([""] * width, w)))
    return "\n".join(rows)


def ascii_grid(cells: Mapping[Cell, str], n: int) -> str:
    """n x n Rothe grid, row 1 on top; '.' marks squares outside the diagram."""
    w = _width(cells.values())
    return "\n".join(
        _line([cells.get((r, c), ".") for c in range(1, n + 1)], w) for r in range(1, n + 1)
    )


def _grid_size(cells: Iterable[Cell]) -> int:
    return max((max(cell) for cell in cells), default=0)


def ascii_labeling(L: RotheLabeling) -> str:
    cells = {cell: str(v) for cell, v in L}
    return ascii_grid(cells, _grid_size(cells))


def ascii_complete(C: CompleteTowerTableau) -> str:
    main = _tower_labels(C.main)
    virtual = _tower_labels(C.virtual_)
    rothe = {cell: str(v) for cell, v in rothify_complete(C)}
    n = max(C.main.shape.width, C.virtual_.shape.width)
    if n == 0:
        return ""
    depth = max(C.virtual_.shape.heights, default=0)
    height = max(C.main.shape.heights, default=0)
    w = _width([*main.values(), *virtual.values()])
    blank_left = _line([""] * depth, w)
    rows = [
        f"{blank_left}|{_line([main.get((i, j), '') for i in range(1, n + 1)], w)}".rstrip()
        for j in reversed(range(height))
    ]
    rows.append("-" * len(blank_left) + "+" + "-" * len(_line([""] * n, w)))
    for r in range(1, n + 1):
        left = _line([virtual.get((r, depth - 1 - k), "") for k in range(depth)], w)
        right = _line([rothe.get((r, c), ".") for c in range(1, n + 1)], w)
        rows.append(f"{left}|{right}".rstrip())
    return "\n".join(rows)


def _drawing(
    squares: Mapping[tuple[int, int], str],
    grid: Iterable[tuple[int, int]] = (),
    axes: bool = False,
) -> draw.Drawing:
    grid = list(grid)
    points = list(squares) + grid
    if axes:
        points += [(0, 0), (-1, -1)]
    if not points:
        return draw.Drawing(0, 0)
    xmin = min(x for x, _ in points)
    xmax = max(x for x, _ in points) + 1
    ymin = min(y for _, y in points)
    ymax = max(y for _, y in points) + 1
    d = draw.Drawing((xmax - xmin) * UNIT, (ymax - ymin) * UNIT)

    def corner(x: int, y: int) -> tuple[int, int]:
        return (x - xmin) * UNIT, (ymax - y - 1) * UNIT

    for x, y in grid:
        sx, sy = corner(x, y)
        d.append(draw.Rectangle(sx, sy, UNIT, UNIT, fill="none", stroke="#cccccc", stroke_width=0.5))
    for (x, y), text in sorted(squares.items()):
        sx, sy = corner(x, y)
        d.append(draw.Rectangle(sx, sy, UNIT, UNIT, fill="white", stroke="black", stroke_width=0.5))
        if text:
            d.append(
                draw.Text(
                    text,
                    FONT_SIZE,
                    sx + UNIT / 2,
                    sy + UNIT / 2,
                    text_anchor="middle",
                    dominant_baseline="central",
                )
            )
    if axes:
        ox, oy = -xmin * UNIT, ymax * UNIT
        d.append(draw.Line(ox, 0, ox, (ymax - ymin) * UNIT, stroke="black", stroke_width=1))
        d.append(draw.Line(0, oy, (xmax - xmin) * UNIT, oy, stroke="black", stroke_width=1))
    return d


def svg_towers(obj: TowerDiagram | TowerTableau) -> str:
    labels = _tower_labels(obj)
    squares = {(i - 1, j): "" if text == "#" else text for (i, j), text in labels.items()}
    return _drawing(squares).as_svg()


def svg_labeling(L: RotheLabeling) -> str:
    n = _grid_size(L.diagram)
    squares = {(c - 1, -r): str(v) for (r, c), v in L}
    grid = [(c - 1, -r) for r in range(1, n + 1) for c in range(1, n + 1)]
    return _drawing(squares, grid).as_svg()


def svg_complete(C: CompleteTowerTableau) -> str:
    n = max(C.main.shape.width, C.virtual_.shape.width)
    squares = {(i - 1, j): str(v) for (i, j), v in C.main.items()}
    squares.update({(-j - 1, -i): str(v) for (i, j), v in C.virtual_.items()})
    squares.update({(c - 1, -r): str(v) for (r, c), v in rothify_complete(C)})
    grid = [(c - 1, -r) for r in range(1, n + 1) for c in range(1, n + 1)]
    return _drawing(squares, grid, axes=n > 0).as_svg()


def ascii_picture(obj: Drawable) -> str:
    if isinstance(obj, CompleteTowerTableau):
        return ascii_complete(obj)
    if isinstance(obj, RotheLabeling):
        return ascii_labeling(obj)
    return ascii_towers(obj)


def svg_picture(obj: Drawable) -> str:
    if isinstance(obj, CompleteTowerTableau):
        return svg_complete(obj)
    if isinstance(obj, RotheLabeling):
        return svg_labeling(obj)
    return svg_towers(obj)


def load_drawable(raw: str) -> Drawable:
    """
    JSON input is read by its form:
    - array of integers: tower heights
    - array of {row, col, label}: Rothe labeling
    - {heights, labels}: tower tableau
    - {main, virtual}: complete tower tableau
    Anything else is a word, drawn as its complete tower tableau.
    """
    text = raw.strip()
    if not text.startswith(("[", "{")):
        return complete(slide_or_fail(load_word(text)))
    data = parse_json(text)
    if isinstance(data, list) and all(isinstance(v, int) for v in data):
        return load_heights(data)
    if isinstance(data, list) and all(isinstance(v, dict) for v in data):
        return load_labeling(data)
    if isinstance(data, dict) and "main" in data:
        return load_complete(data)
    if isinstance(data, dict) and "heights" in data:
        return load_tableau(data)
    raise UsageError("cannot tell what kind of object to draw")


def render_command(args, config) -> str:
    obj = load_drawable(read_raw(args))
    logger.debug("drawing %s", type(obj).__name__)
    return svg_picture(obj) if args.svg else ascii_picture(obj)


def register(subparsers, parents):
    parser = add_command(
        subparsers,
        "render",
        render_command,
        parents,
        help="Draw a diagram, tableau, Rothe labeling or word",
        value_help="JSON object, or a word to draw with its complete tableau",
    )
    style = parser.add_mutually_exclusive_group()
    style.add_argument("--svg", action="store_true", help="SVG with 10-unit squares")
    style.add_argument("--ascii", action="store_true", help="ASCII, one character per square (default)")
