from enum import Enum

from sqlalchemy import CheckConstraint, Column, Integer, String, Text, UniqueConstraint
from sqlalchemy.types import Enum as SAEnum

from models.base_model import Base, BaseModel


class PolynomialKind(str, Enum):
    SCHUBERT = "schubert"
    STANLEY = "stanley"


class ComputedPolynomial(BaseModel, Base):
    __tablename__ = "computed_polynomials"

    kind = Column(SAEnum(PolynomialKind, name="polynomial_kind", native_enum=False), nullable=False)
    # one-line notation, comma separated
    permutation = Column(String(255), nullable=False)
    # number of variables for truncated Stanley functions; 0 for Schubert polynomials
    variables = Column(Integer, nullable=False, default=0)
    # JSON polynomial as produced by dump_polynomial
    terms = Column(Text, nullable=False)

    __table_args__ = (
        UniqueConstraint("kind", "permutation", "variables", name="uq_computed_key"),
        CheckConstraint("variables >= 0", name="ck_computed_variables_nonnegative"),
    )
