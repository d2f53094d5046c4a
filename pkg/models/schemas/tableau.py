from marshmallow import Schema, ValidationError, fields, post_load, validate, validates_schema

from models.rothify import CompleteTowerTableau
from models.tableau import TowerTableau


class CellLabelSchema(Schema):
    col = fields.Integer(strict=True, required=True, validate=validate.Range(min=1))
    ht = fields.Integer(strict=True, required=True, validate=validate.Range(min=0))
    label = fields.Integer(strict=True, required=True, validate=validate.Range(min=1))


class TowerTableauSchema(Schema):
    heights = fields.List(fields.Integer(strict=True, validate=validate.Range(min=0)), required=True)
    labels = fields.List(fields.Nested(CellLabelSchema), required=True)

    @validates_schema
    def _labels_fill_shape(self, data, **kwargs):
        heights = data.get("heights", [])
        cells = [(e["col"], e["ht"]) for e in data.get("labels", [])]
        if len(set(cells)) != len(cells):
            raise ValidationError("Each cell carries exactly one label.", "labels")
        expected = {(i, j) for i, h in enumerate(heights, start=1) for j in range(h)}
        if set(cells) != expected:
            raise ValidationError("Labels must cover exactly the cells of the shape.", "labels")

    @post_load
    def _make_tableau(self, data, **kwargs):
        return TowerTableau.from_labels({(e["col"], e["ht"]): e["label"] for e in data["labels"]})


class CompleteTowerTableauSchema(Schema):
    main = fields.Nested(TowerTableauSchema, required=True)
    virtual = fields.Nested(TowerTableauSchema, required=True)

    @validates_schema
    def _same_size(self, data, **kwargs):
        if data["main"].size != data["virtual"].size:
            raise ValidationError("Both halves must have the same number of cells.")

    @post_load
    def _make_complete(self, data, **kwargs):
        return CompleteTowerTableau(main=data["main"], virtual_=data["virtual"])


tableau_schema = TowerTableauSchema()
complete_schema = CompleteTowerTableauSchema()


def tableau_to_dict(T: TowerTableau) -> dict:
    return {
        "heights": list(T.shape.heights),
        "labels": [{"col": i, "ht": j, "label": v} for (i, j), v in T.items()],
    }


def load_tableau(raw) -> TowerTableau:
    return tableau_schema.load(raw)


def dump_tableau(T: TowerTableau) -> dict:
    return tableau_schema.dump(tableau_to_dict(T))


def load_complete(raw) -> CompleteTowerTableau:
    return complete_schema.load(raw)


def dump_complete(C: CompleteTowerTableau) -> dict:
    return complete_schema.dump({"main": tableau_to_dict(C.main), "virtual": tableau_to_dict(C.virtual_)})
