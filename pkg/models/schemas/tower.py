from marshmallow import Schema, fields, post_load

from models.schemas.common import nonnegative_int, parse_int_sequence
from models.tower import TowerDiagram


class TowerDiagramSchema(Schema):
    heights = fields.List(nonnegative_int, required=True)

    @post_load
    def _make_diagram(self, data, **kwargs):
        return TowerDiagram(tuple(data["heights"]))


heights_schema = TowerDiagramSchema()


def load_heights(raw) -> TowerDiagram:
    return heights_schema.load({"heights": parse_int_sequence(raw)})


def dump_heights(diagram: TowerDiagram) -> list[int]:
    return list(diagram.heights)
