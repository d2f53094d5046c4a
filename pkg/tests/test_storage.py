import logging

from models.computed_polynomial import ComputedPolynomial, PolynomialKind
from models.perm import Permutation
from models.polynomial import Polynomial
from utils.decorators import cached_polynomial

W321 = Permutation((3, 2, 1))


def test_put_and_get(store):
    p = Polynomial.parse("x1^2*x2 + x1*x2^2")
    assert store.get(PolynomialKind.STANLEY, W321, 2) is None
    store.put(PolynomialKind.STANLEY, W321, 2, p)
    assert store.get(PolynomialKind.STANLEY, W321, 2) == p
    assert store.get(PolynomialKind.STANLEY, W321, 3) is None
    assert store.get(PolynomialKind.SCHUBERT, W321, 2) is None
    assert store.count() == 1


def test_put_keeps_first_value(store):
    store.put(PolynomialKind.SCHUBERT, W321, 0, Polynomial.parse("x1^2*x2"))
    store.put(PolynomialKind.SCHUBERT, W321, 0, Polynomial.one())
    assert store.count() == 1
    assert str(store.get(PolynomialKind.SCHUBERT, W321, 0)) == "x1^2*x2"


def test_zero_and_one_are_stored(store):
    store.put(PolynomialKind.STANLEY, W321, 1, Polynomial.zero())
    store.put(PolynomialKind.SCHUBERT, Permutation.identity(), 0, Polynomial.one())
    assert store.get(PolynomialKind.STANLEY, W321, 1) == Polynomial.zero()
    assert store.get(PolynomialKind.SCHUBERT, Permutation.identity(), 0) == Polynomial.one()


def test_row_to_dict(store):
    store.put(PolynomialKind.SCHUBERT, W321, 0, Polynomial.parse("x1^2*x2"))
    row = store.get_session().query(ComputedPolynomial).one()
    data = row.to_dict()
    assert data["__class__"] == "ComputedPolynomial"
    assert data["permutation"] == "3,2,1"
    assert len(data["id"]) == 36


def test_cached_polynomial_computes_once(memory_storage, caplog):
    calls = []

    @cached_polynomial(PolynomialKind.SCHUBERT)
    def compute(omega, variables=0):
        calls.append(omega)
        return Polynomial.parse("x1^2*x2")

    with caplog.at_level(logging.INFO, logger="utils.decorators"):
        first = compute(W321, cache=True)
        second = compute(W321, cache=True)
    assert first == second
    assert calls == [W321]
    assert memory_storage.count() == 1
    assert "stored schubert polynomial of 321" in caplog.text


def test_cached_polynomial_without_cache_is_a_plain_call(memory_storage):
    calls = []

    @cached_polynomial(PolynomialKind.STANLEY)
    def compute(omega, variables):
        calls.append(variables)
        return Polynomial.zero()

    compute(W321, 1)
    compute(W321, 1)
    assert calls == [1, 1]
    assert memory_storage.count() == 0
