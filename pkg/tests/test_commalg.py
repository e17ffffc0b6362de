import pytest

from ncfgl import GF, CommAlgebra, ModeMismatchError, ParameterError


@pytest.fixture
def P():
    return CommAlgebra.with_degrees("t", (2, 6, 14), GF(3))


def test_multiplication_is_commutative(P):
    a = P.gen(1) + P.gen(2)
    b = P.gen(1) * P.gen(3) + P.one().scale(2)
    assert a * b == b * a


def test_degrees_additive(P):
    m = P.gen(1) ** 2 * P.gen(2)
    assert m.degree() == 10


def test_powers(P):
    t1 = P.gen(1)
    assert t1 ** 3 == t1 * t1 * t1
    assert (t1 ** 0) == P.one()


def test_no_zero_terms_stored(P):
    a = P.gen(1).scale(2) + P.gen(1)
    assert a.is_zero()


def test_rendering(P):
    e = P.gen(1) ** 2 * P.gen(2) + P.one().scale(2)
    assert str(e) == "2 + t1^2*t2"


def test_algebra_identity_guard(P):
    other = CommAlgebra.with_degrees("t", (2, 6, 14), GF(5))
    with pytest.raises(ModeMismatchError):
        P.gen(1) * other.gen(1)


def test_bad_generator_index(P):
    with pytest.raises(ParameterError):
        P.gen(4)
    with pytest.raises(ParameterError):
        P.gen(0)


def test_serialization_round_trip(P):
    e = P.gen(2) ** 2 + P.gen(1).scale(2)
    data = e.to_data()
    rebuilt = P.element(
        {tuple(tuple(p) for p in rec["monomial"]): P.ring.parse(rec["coeff"]) for rec in data}
    )
    assert rebuilt == e
