from marshmallow import Schema, ValidationError, fields, post_load, validates_schema

from models.perm import Permutation, RotheDiagram, Word
from models.schemas.common import parse_int_sequence, positive_int


class WordSchema(Schema):
    letters = fields.List(positive_int, required=True)

    @post_load
    def _make_word(self, data, **kwargs):
        return tuple(data["letters"])


class PermutationSchema(Schema):
    oneline = fields.List(positive_int, required=True)

    @validates_schema
    def _is_bijection(self, data, **kwargs):
        values = data.get("oneline", [])
        if sorted(values) != list(range(1, len(values) + 1)):
            raise ValidationError(f"{values} is not a permutation of 1..{len(values)}.", "oneline")

    @post_load
    def _make_permutation(self, data, **kwargs):
        return Permutation(tuple(data["oneline"]))


class RotheDiagramSchema(Schema):
    cells = fields.List(fields.Tuple((positive_int, positive_int)), required=True)

    @validates_schema
    def _distinct_cells(self, data, **kwargs):
        cells = data.get("cells", [])
        if len(set(cells)) != len(cells):
            raise ValidationError("Rothe diagram cells must be distinct.", "cells")

    @post_load
    def _make_diagram(self, data, **kwargs):
        return frozenset(data["cells"])


word_schema = WordSchema()
permutation_schema = PermutationSchema()
diagram_schema = RotheDiagramSchema()


def load_word(raw) -> Word:
    return word_schema.load({"letters": parse_int_sequence(raw)})


def dump_word(w: Word) -> list[int]:
    return list(w)


def load_permutation(raw) -> Permutation:
    return permutation_schema.load({"oneline": parse_int_sequence(raw)})


def load_rothe_diagram(raw) -> RotheDiagram:
    return diagram_schema.load({"cells": raw})


def dump_rothe_diagram(diagram: RotheDiagram) -> list[list[int]]:
    return [list(cell) for cell in sorted(diagram)]
