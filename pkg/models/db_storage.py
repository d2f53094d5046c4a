import json
import logging
from os import getenv

from dotenv import load_dotenv
from sqlalchemy import create_engine
from sqlalchemy.exc import SQLAlchemyError
from sqlalchemy.orm import scoped_session, sessionmaker

from models.base_model import Base
from models.computed_polynomial import ComputedPolynomial, PolynomialKind
from models.perm import Permutation
from models.polynomial import Polynomial
from models.schemas.polynomial import dump_polynomial, load_polynomial

load_dotenv()
logger = logging.getLogger(__name__)

DEFAULT_DATABASE_URL = "sqlite:///tower-tableaux.db"


def _key(omega: Permutation) -> str:
    return ",".join(str(v) for v in omega.oneline)


class DBStorage:
    """Store of computed Schubert and Stanley polynomials."""

    __engine = None
    __session = None

    def __init__(self, url: str | None = None):
        self.configure(url)

    def configure(self, url: str | None = None):
        """(Re)bind the engine; DATABASE_URL or a local SQLite file by default."""
        self.url = url or getenv("DATABASE_URL", DEFAULT_DATABASE_URL)
        self.__engine = create_engine(self.url)
        self.__session = None

    @property
    def ready(self) -> bool:
        return self.__session is not None

    def reload(self):
        """Create tables and start session"""
        Base.metadata.create_all(self.__engine)
        session_factory = sessionmaker(bind=self.__engine, expire_on_commit=False)
        self.__session = scoped_session(session_factory)

    def new(self, obj):
        """Add object to session"""
        self.__session.add(obj)

    def save(self):
        """Commit session"""
        try:
            self.__session.commit()
        except SQLAlchemyError:
            self.__session.rollback()
            raise

    def get(self, kind: PolynomialKind, omega: Permutation, variables: int = 0) -> Polynomial | None:
        """Fetch a stored polynomial, or None"""
        row = (
            self.__session.query(ComputedPolynomial)
            .filter_by(kind=kind, permutation=_key(omega), variables=variables)
            .first()
        )
        if row is None:
            logger.debug("cache miss: %s %s %s", kind.value, omega, variables)
            return None
        logger.debug("cache hit: %s %s %s", kind.value, omega, variables)
        return load_polynomial(json.loads(row.terms))

    def put(self, kind: PolynomialKind, omega: Permutation, variables: int, polynomial: Polynomial):
        """Store a polynomial unless the key is already present"""
        if self.get(kind, omega, variables) is not None:
            return
        self.new(
            ComputedPolynomial(
                kind=kind,
                permutation=_key(omega),
                variables=variables,
                terms=json.dumps(dump_polynomial(polynomial), sort_keys=True),
            )
        )
        self.save()

    def count(self) -> int:
        """Count stored polynomials"""
        return self.__session.query(ComputedPolynomial).count()

    def close(self):
        """Remove session"""
        if self.__session is not None:
            self.__session.remove()

    def get_session(self):
        return self.__session
