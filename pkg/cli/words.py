"""Commands on words, tower diagrams and tower tableaux."""
from __future__ import annotations

import logging

from cli.inputs import (
    add_command,
    emit,
    read_heights,
    read_permutation,
    read_tableau,
    read_word,
    read_word_or_tableau,
    slide_or_fail,
)
from cli.render import ascii_complete, ascii_towers
from models.perm import enumerate_reduced_words, format_word
from models.rothify import CompleteTowerTableau, complete, flag_tableau
from models.schemas.perm import dump_word
from models.schemas.tableau import dump_complete, dump_tableau
from models.schemas.tower import dump_heights
from models.tableau import TowerTableau, is_semistandard, reading_word, standardize
from models.tower import tower_diagram

logger = logging.getLogger(__name__)


def pretty_tableau(T: TowerTableau) -> str:
    """Towers left to right, labels bottom to top; '.' for an empty tower."""
    return " | ".join(" ".join(str(v) for v in col) or "." for col in T.columns)


def tableau_output(fmt: str, T: TowerTableau) -> str:
    return emit(fmt, dump_tableau(T), pretty_tableau(T), ascii_towers(T))


def complete_output(fmt: str, C: CompleteTowerTableau) -> str:
    pretty = f"main: {pretty_tableau(C.main)}\nvirtual: {pretty_tableau(C.virtual_)}"
    return emit(fmt, dump_complete(C), pretty, ascii_complete(C))


def slide_command(args, config) -> str:
    return tableau_output(args.format, slide_or_fail(read_word(args)))


def reading_command(args, config) -> str:
    word = reading_word(read_tableau(args))
    return emit(args.format, dump_word(word), format_word(word))


def shape_command(args, config) -> str:
    shape = tower_diagram(read_permutation(args))
    pretty = ",".join(str(h) for h in shape.heights)
    return emit(args.format, dump_heights(shape), pretty, ascii_towers(shape))


def reduced_words_command(args, config) -> str:
    words = sorted(enumerate_reduced_words(read_permutation(args)))
    logger.debug("%s reduced words", len(words))
    return emit(args.format, [dump_word(w) for w in words], "\n".join(format_word(w) for w in words))


def standardize_command(args, config) -> str:
    return tableau_output(args.format, standardize(read_tableau(args)))


def semistandard_check_command(args, config) -> str:
    verdict = is_semistandard(read_tableau(args))
    return emit(args.format, verdict, "true" if verdict else "false")


def flag_command(args, config) -> str:
    return tableau_output(args.format, flag_tableau(read_heights(args)))


def complete_command(args, config) -> str:
    return complete_output(args.format, complete(read_word_or_tableau(args)))


def register(subparsers, parents):
    add_command(
        subparsers,
        "slide",
        slide_command,
        parents,
        help="Slide a word into the empty tower diagram",
        value_help="word, e.g. 54534562 or 10,2,3",
    )
    add_command(
        subparsers,
        "reading",
        reading_command,
        parents,
        help="Reading word of a standard tower tableau",
        value_help="tableau JSON",
    )
    add_command(
        subparsers,
        "shape",
        shape_command,
        parents,
        help="Tower diagram of a permutation",
        value_help="permutation in one-line notation, e.g. 35421",
    )
    add_command(
        subparsers,
        "reduced-words",
        reduced_words_command,
        parents,
        help="All reduced words of a permutation",
        value_help="permutation in one-line notation",
    )
    add_command(
        subparsers,
        "standardize",
        standardize_command,
        parents,
        help="Standardization of a semi-standard tower tableau",
        value_help="tableau JSON",
    )
    add_command(
        subparsers,
        "semistandard-check",
        semistandard_check_command,
        parents,
        help="Print true if the tableau is semi-standard, false otherwise",
        value_help="tableau JSON",
    )
    add_command(
        subparsers,
        "flag",
        flag_command,
        parents,
        help="Flag tableau of a tower diagram",
        value_help="tower heights, e.g. [0,1,4,2,1,0,3]",
    )
    add_command(
        subparsers,
        "complete",
        complete_command,
        parents,
        help="Complete tower tableau (main and virtual halves)",
        value_help="reduced word or standard tableau JSON",
    )
