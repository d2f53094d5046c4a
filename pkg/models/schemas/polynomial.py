from marshmallow import Schema, ValidationError, fields, post_load, validate

from models.errors import CoefficientOverflowError
from models.polynomial import MAX_COEFFICIENT, Monomial, Polynomial


class PolynomialTermSchema(Schema):
    coeff = fields.Integer(
        strict=True, required=True, validate=validate.Range(min=1, max=MAX_COEFFICIENT)
    )
    exps = fields.Dict(
        keys=fields.String(validate=validate.Regexp(r"^[1-9][0-9]*$")),
        values=fields.Integer(strict=True, validate=validate.Range(min=0)),
        required=True,
    )

    @post_load
    def _make_term(self, data, **kwargs):
        monomial = Monomial.from_exponents({int(v): e for v, e in data["exps"].items()})
        return monomial, data["coeff"]


terms_schema = PolynomialTermSchema(many=True)


def load_polynomial(raw) -> Polynomial:
    if not isinstance(raw, list):
        raise ValidationError("A polynomial is a JSON array of {coeff, exps}.")
    terms = terms_schema.load(raw)
    monomials = [m for m, _ in terms]
    if len(set(monomials)) != len(monomials):
        raise ValidationError("Each monomial appears in at most one term.")
    try:
        return Polynomial(tuple(terms))
    except CoefficientOverflowError as exc:
        raise ValidationError(exc.message)


def dump_polynomial(p: Polynomial) -> list[dict]:
    return [
        {"coeff": c, "exps": {str(v): e for v, e in m.powers}}
        for m, c in p.terms
    ]
