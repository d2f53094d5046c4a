import json
import os

os.environ.setdefault("APP_ENV", "testing")

import pytest  # noqa: E402

from models import storage  # noqa: E402
from models.db_storage import DBStorage  # noqa: E402
from models.perm import Permutation  # noqa: E402
from models.tableau import TowerTableau, slide_word  # noqa: E402


@pytest.fixture
def sliding_example():
    """The tableau of the word 54534562, shape (0,1,4,2,1)."""
    return slide_word((5, 4, 5, 3, 4, 5, 6, 2))


@pytest.fixture
def semistandard_example():
    """A semi-standard tableau with label sequence 2,3,3,4,7,8,8,9,10,10,10."""
    return TowerTableau(((), (8,), (7, 8, 9, 10), (3, 10), (2,), (), (3, 4, 10)))


@pytest.fixture
def balanced_example():
    """Balanced, column-strict, non-injective labeling of the Rothe diagram of 35421."""
    from models.balanced import RotheLabeling

    return RotheLabeling.from_mapping(
        {
            (1, 1): 2,
            (1, 2): 1,
            (2, 1): 4,
            (2, 2): 3,
            (2, 4): 4,
            (3, 1): 5,
            (3, 2): 2,
            (4, 1): 6,
        }
    )


@pytest.fixture
def omega_35421():
    return Permutation((3, 5, 4, 2, 1))


@pytest.fixture
def store():
    """A private in-memory result store."""
    db = DBStorage("sqlite:///:memory:")
    db.reload()
    yield db
    db.close()


@pytest.fixture
def memory_storage():
    """Point the shared storage at a fresh in-memory database."""
    storage.configure("sqlite:///:memory:")
    storage.reload()
    yield storage
    storage.close()


@pytest.fixture
def cli(capsys):
    """Run the command line; returns (exit code, stdout, last stderr line parsed as JSON or None)."""
    from cli import run

    def invoke(*argv):
        code = run(list(argv), config_name="testing")
        out, err = capsys.readouterr()
        lines = [line for line in err.splitlines() if line.startswith("{")]
        envelope = json.loads(lines[-1]) if lines else None
        return code, out, envelope

    return invoke
