from fractions import Fraction

import pytest

from ncfgl import GF, QQ, ZZ, ModeMismatchError, ParameterError, is_prime


def test_integer_mode_is_exact():
    big = 10 ** 40
    assert ZZ.mul(big, big) == 10 ** 80
    assert ZZ.add(big, ZZ.neg(big)) == 0


def test_rational_values_are_normalized():
    v = QQ.coerce(Fraction(4, -6))
    assert v == Fraction(-2, 3)
    assert v.denominator == 3
    assert QQ.mul(Fraction(1, 3), Fraction(3, 1)) == 1


def test_prime_field_residues():
    F = GF(7)
    assert F.of_int(-1) == 6
    assert F.mul(3, 5) == 1
    assert F.inv(3) == 5
    assert F.add(6, 1) == 0


@pytest.mark.parametrize("bad", [0, 1, 4, 6, 9, 15, 341, 561])
def test_composite_modulus_rejected(bad):
    with pytest.raises(ParameterError):
        GF(bad)


def test_is_prime_matches_small_table():
    primes = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47}
    for n in range(50):
        assert is_prime(n) == (n in primes)


def test_ring_identity():
    assert GF(5) == GF(5)
    assert GF(5) != GF(7)
    assert ZZ != QQ


def test_coerce_rejects_foreign_values():
    with pytest.raises(ModeMismatchError):
        ZZ.coerce(Fraction(1, 2))
    with pytest.raises(ModeMismatchError):
        GF(3).coerce(Fraction(1, 2))


def test_render_parse_round_trip():
    for ring, value in ((ZZ, -12), (QQ, Fraction(3, 7)), (GF(5), 3)):
        v = ring.coerce(value)
        assert ring.parse(ring.render(v)) == v
