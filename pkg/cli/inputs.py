"""
Command input: the positional value, else the file named by --in, else
standard input.
"""
from __future__ import annotations

import json
import sys

from marshmallow import ValidationError

from models.balanced import RotheLabeling
from models.errors import NotReducedError
from models.perm import Permutation, Word
from models.schemas.common import parse_json
from models.schemas.perm import load_permutation, load_word
from models.schemas.rothe import load_labeling
from models.schemas.tableau import load_tableau
from models.schemas.tower import load_heights
from models.tableau import TowerTableau, slide_word
from models.tower import Terminated, TowerDiagram

FORMATS = ("pretty", "json", "ascii")


def add_command(subparsers, name, handler, parents, help, value_help):
    parser = subparsers.add_parser(name, parents=parents, help=help, description=help)
    parser.add_argument("value", nargs="?", help=value_help)
    parser.set_defaults(handler=handler)
    return parser


def read_raw(args) -> str:
    if args.value is not None:
        return args.value
    if args.infile:
        try:
            with open(args.infile, encoding="utf-8") as fh:
                return fh.read()
        except OSError as exc:
            raise ValidationError(f"Cannot read {args.infile}: {exc.strerror}.")
    return sys.stdin.read()


def read_word(args) -> Word:
    return load_word(read_raw(args))


def read_permutation(args) -> Permutation:
    return load_permutation(read_raw(args))


def read_heights(args) -> TowerDiagram:
    return load_heights(read_raw(args))


def read_tableau(args) -> TowerTableau:
    return load_tableau(parse_json(read_raw(args)))


def read_labeling(args) -> RotheLabeling:
    return load_labeling(parse_json(read_raw(args)))


def slide_or_fail(word: Word) -> TowerTableau:
    result = slide_word(word)
    if isinstance(result, Terminated):
        raise NotReducedError(
            f"sliding terminated at letter {result.position}",
            details={"word": list(word), "position": result.position},
        )
    return result


def read_word_or_tableau(args) -> TowerTableau:
    """A tableau given as JSON, or the standard tableau of a reduced word."""
    raw = read_raw(args)
    if raw.strip().startswith("{"):
        return load_tableau(parse_json(raw))
    return slide_or_fail(load_word(raw))


def emit(fmt: str, data, pretty: str, ascii: str | None = None) -> str:
    if fmt == "json":
        return json.dumps(data)
    if fmt == "ascii" and ascii is not None:
        return ascii
    return pretty
