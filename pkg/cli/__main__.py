"""
Entrypoint: python -m cli COMMAND [VALUE] [--format json|pretty|ascii] [--in FILE] [-v] [--cache]
"""
import sys

from cli import run

if __name__ == "__main__":
    sys.exit(run())
