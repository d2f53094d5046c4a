from marshmallow import Schema, ValidationError, fields, post_load, validate

from models.balanced import RotheLabeling


class RotheEntrySchema(Schema):
    row = fields.Integer(strict=True, required=True, validate=validate.Range(min=1))
    col = fields.Integer(strict=True, required=True, validate=validate.Range(min=1))
    label = fields.Integer(strict=True, required=True, validate=validate.Range(min=1))

    @post_load
    def _make_entry(self, data, **kwargs):
        return (data["row"], data["col"]), data["label"]


rothe_entries_schema = RotheEntrySchema(many=True)


def load_labeling(raw) -> RotheLabeling:
    if not isinstance(raw, list):
        raise ValidationError("A Rothe labeling is a JSON array of {row, col, label}.")
    entries = rothe_entries_schema.load(raw)
    cells = [cell for cell, _ in entries]
    if len(set(cells)) != len(cells):
        raise ValidationError("Each Rothe cell carries exactly one label.")
    return RotheLabeling(tuple(entries))


def dump_labeling(L: RotheLabeling) -> list[dict]:
    return [{"row": r, "col": c, "label": v} for (r, c), v in L]
