import json

from marshmallow import ValidationError, fields, validate

positive_int = fields.Integer(strict=True, validate=validate.Range(min=1))
nonnegative_int = fields.Integer(strict=True, validate=validate.Range(min=0))


def parse_int_sequence(raw, digits_as_letters: bool = True) -> list[int]:
    """
    Read an integer sequence from text or an already-decoded JSON value:
    - a JSON array: "[5, 4, 5]"
    - comma separated: "10,2,3"
    - a bare digit string, one letter per digit: "54534562"
    """
    if isinstance(raw, (list, tuple)):
        return list(raw)
    if not isinstance(raw, str):
        raise ValidationError("Expected a sequence of integers.")
    text = raw.strip()
    if not text:
        return []
    if text.startswith("["):
        try:
            value = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ValidationError(f"Invalid JSON array: {exc.msg}.")
        if not isinstance(value, list):
            raise ValidationError("Expected a JSON array.")
        return value
    if "," in text:
        parts = [p.strip() for p in text.split(",")]
        if not all(p.lstrip("-").isdigit() for p in parts):
            raise ValidationError(f"Invalid integer list: {text!r}.")
        return [int(p) for p in parts]
    if text.isdigit() and digits_as_letters:
        return [int(ch) for ch in text]
    if text.isdigit():
        return [int(text)]
    raise ValidationError(f"Cannot read integers from {text!r}.")


def parse_json(raw: str):
    try:
        return json.loads(raw)
    except json.JSONDecodeError as exc:
        raise ValidationError(f"Invalid JSON: {exc.msg} at position {exc.pos}.")
