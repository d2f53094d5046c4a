import argparse
import logging
import sys

from cli.config import get_config
from cli.errors import EXIT_OK, EXIT_USAGE, handle_error
from cli.inputs import FORMATS
from models import storage

LOG_FORMAT = "%(levelname)-5.5s [%(name)s] %(message)s"

logger = logging.getLogger(__name__)


def create_parser() -> argparse.ArgumentParser:
    """
    Parser factory: every command shares --format, --in, -v and --cache,
    given after the command name.
    """
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default="pretty", help="output format (default: pretty)")
    common.add_argument("--in", dest="infile", metavar="FILE", help="read the input from FILE")
    common.add_argument("-v", "--verbose", action="store_true", help="debug logging on stderr")
    common.add_argument("--cache", action="store_true", help="keep computed polynomials in the result store")

    parser = argparse.ArgumentParser(
        prog="tower-tableaux",
        description="Tower diagrams, Rothe diagrams and Schubert polynomials.",
    )
    subparsers = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    from cli import labelings, polynomials, render, words

    for module in (words, labelings, polynomials, render):
        module.register(subparsers, [common])
    return parser


def _configure_logging(level: str) -> tuple[logging.Handler, int]:
    root = logging.getLogger()
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter(LOG_FORMAT))
    previous = root.level
    root.addHandler(handler)
    root.setLevel(level.upper())
    return handler, previous


def run(argv: list[str] | None = None, config_name: str | None = None) -> int:
    """Parse argv, run one command, print its output; returns the exit code."""
    config = get_config(config_name)
    try:
        args = create_parser().parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE

    handler, previous = _configure_logging("DEBUG" if args.verbose else config.LOG_LEVEL)
    args.cache = args.cache or config.RESULT_CACHE
    try:
        if args.cache and not storage.ready:
            storage.configure(config.DATABASE_URL)
            storage.reload()
        output = args.handler(args, config)
    except Exception as err:
        return handle_error(err, debug=config.DEBUG)
    finally:
        if args.cache:
            storage.close()
        root = logging.getLogger()
        root.removeHandler(handler)
        root.setLevel(previous)

    if output:
        print(output)
    return EXIT_OK
