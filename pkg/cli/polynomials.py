"""Schubert polynomials and truncated Stanley symmetric functions."""
from __future__ import annotations

import argparse

from cli.inputs import add_command, emit, read_permutation
from models.computed_polynomial import PolynomialKind
from models.perm import Permutation
from models.polynomial import Polynomial
from models.schemas.polynomial import dump_polynomial
from models.schubert import (
    schubert,
    schubert_oracle_bjs,
    schubert_oracle_fgrs,
    stanley_oracle_fgrs,
    stanley_truncated,
)
from utils.decorators import cached_polynomial


@cached_polynomial(PolynomialKind.SCHUBERT)
def compute_schubert(omega: Permutation, variables: int = 0, workers: int = 1) -> Polynomial:
    return schubert(omega, workers)


@cached_polynomial(PolynomialKind.STANLEY)
def compute_stanley(omega: Permutation, variables: int, workers: int = 1) -> Polynomial:
    return stanley_truncated(omega, variables, workers)


def positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer")
    if value < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return value


def polynomial_output(fmt: str, p: Polynomial) -> str:
    return emit(fmt, dump_polynomial(p), str(p))


def schubert_command(args, config) -> str:
    omega = read_permutation(args)
    if args.oracle == "bjs":
        p = schubert_oracle_bjs(omega)
    elif args.oracle == "fgrs":
        p = schubert_oracle_fgrs(omega)
    else:
        p = compute_schubert(omega, 0, cache=args.cache, workers=config.ENUMERATION_WORKERS)
    return polynomial_output(args.format, p)


def stanley_command(args, config) -> str:
    omega = read_permutation(args)
    if args.oracle:
        p = stanley_oracle_fgrs(omega, args.vars)
    else:
        p = compute_stanley(omega, args.vars, cache=args.cache, workers=config.ENUMERATION_WORKERS)
    return polynomial_output(args.format, p)


def register(subparsers, parents):
    parser = add_command(
        subparsers,
        "schubert",
        schubert_command,
        parents,
        help="Schubert polynomial as a sum over flagged tower tableaux",
        value_help="permutation in one-line notation, e.g. 321",
    )
    parser.add_argument(
        "--oracle",
        choices=["bjs", "fgrs"],
        help="use compatible pairs (bjs) or flagged balanced labelings (fgrs) instead",
    )
    parser = add_command(
        subparsers,
        "stanley",
        stanley_command,
        parents,
        help="Stanley symmetric function in x1..xm",
        value_help="permutation in one-line notation",
    )
    parser.add_argument("--vars", type=positive_int, required=True, metavar="M", help="number of variables")
    parser.add_argument(
        "--oracle",
        action="store_true",
        help="sum over column-strict balanced labelings instead",
    )
