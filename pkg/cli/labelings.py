"""Commands on Rothe diagrams and their labelings."""
from __future__ import annotations

from cli.inputs import (
    add_command,
    emit,
    read_labeling,
    read_permutation,
    read_word,
    read_word_or_tableau,
)
from cli.render import ascii_grid, ascii_labeling
from models.balanced import (
    RotheLabeling,
    canonical_labeling,
    is_column_strict,
    is_injective,
    recover_word,
    unbalanced_vertex,
)
from models.perm import format_word, rothe_diagram
from models.rothify import rothify, rothify_ss
from models.schemas.perm import dump_rothe_diagram, dump_word
from models.schemas.rothe import dump_labeling
from models.tableau import is_standard


def pretty_labeling(L: RotheLabeling) -> str:
    return " ".join(f"({r},{c})={v}" for (r, c), v in L)


def labeling_output(fmt: str, L: RotheLabeling) -> str:
    return emit(fmt, dump_labeling(L), pretty_labeling(L), ascii_labeling(L))


def diagram_command(args, config) -> str:
    omega = read_permutation(args)
    diagram = rothe_diagram(omega)
    pretty = " ".join(f"({r},{c})" for r, c in sorted(diagram))
    picture = ascii_grid({cell: "o" for cell in diagram}, omega.n)
    return emit(args.format, dump_rothe_diagram(diagram), pretty, picture)


def rothify_command(args, config) -> str:
    T = read_word_or_tableau(args)
    L = rothify(T) if is_standard(T) else rothify_ss(T)
    return labeling_output(args.format, L)


def canonical_command(args, config) -> str:
    return labeling_output(args.format, canonical_labeling(read_word(args)))


def recover_command(args, config) -> str:
    word = recover_word(read_labeling(args))
    return emit(args.format, dump_word(word), format_word(word))


def balanced_check_command(args, config) -> str:
    L = read_labeling(args)
    vertex = unbalanced_vertex(L)
    data = {
        "balanced": vertex is None,
        "column_strict": is_column_strict(L),
        "injective": is_injective(L),
        "unbalanced_vertex": list(vertex) if vertex else None,
    }
    return emit(args.format, data, "true" if vertex is None else "false")


def register(subparsers, parents):
    add_command(
        subparsers,
        "diagram",
        diagram_command,
        parents,
        help="Rothe diagram of a permutation",
        value_help="permutation in one-line notation",
    )
    add_command(
        subparsers,
        "rothify",
        rothify_command,
        parents,
        help="Rothification of a reduced word or a (semi-)standard tableau",
        value_help="reduced word or tableau JSON",
    )
    add_command(
        subparsers,
        "canonical",
        canonical_command,
        parents,
        help="Canonical labeling of a reduced word",
        value_help="reduced word",
    )
    add_command(
        subparsers,
        "recover",
        recover_command,
        parents,
        help="Recover the reduced word of an injective balanced labeling",
        value_help="Rothe labeling JSON",
    )
    add_command(
        subparsers,
        "balanced-check",
        balanced_check_command,
        parents,
        help="Print true if the labeling is balanced, false otherwise",
        value_help="Rothe labeling JSON",
    )
