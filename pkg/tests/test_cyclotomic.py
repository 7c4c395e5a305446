"""Tests for exact arithmetic in ℚ(ε)."""

from fractions import Fraction

import pytest

from app.fockkit.cyclotomic import CycloNumber, cyclotomic_modulus, eps_power
from app.fockkit.errors import InvalidInput


def test_cyclotomic_modulus() -> None:
    """Φ_1 = x − 1, Φ_2 = x + 1, Φ_3 = x² + x + 1, Φ_4 = x² + 1, Φ_6 = x² − x + 1."""
    assert cyclotomic_modulus(1) == (-1, 1)
    assert cyclotomic_modulus(2) == (1, 1)
    assert cyclotomic_modulus(3) == (1, 1, 1)
    assert cyclotomic_modulus(4) == (1, 0, 1)
    assert cyclotomic_modulus(6) == (1, -1, 1)
    with pytest.raises(InvalidInput):
        cyclotomic_modulus(0)


def test_eps_is_a_root_of_unity() -> None:
    """ε^ℓ = 1 and 1 + ε + … + ε^{ℓ−1} = 0."""
    for level in range(1, 8):
        assert eps_power(level, level) == 1
        assert eps_power(-1, level) * eps_power(1, level) == 1
        if level > 1:
            total = CycloNumber.zero(level)
            for p in range(level):
                total = total + eps_power(p, level)
            assert total.is_zero()


def test_inverse() -> None:
    """x · x⁻¹ = 1 for a few nonzero elements."""
    samples = [
        CycloNumber([1, 2], 5),
        CycloNumber([Fraction(1, 3), 0, -1, 4], 5),
        CycloNumber([2, 1], 6),
        CycloNumber([1, 1], 4),
        CycloNumber([0, 1], 3),
        CycloNumber([Fraction(-7, 2)], 3),
    ]
    for x in samples:
        assert x * x.inverse() == 1
        assert x / x == 1
    with pytest.raises(ZeroDivisionError):
        CycloNumber.zero(3).inverse()


def test_rational_elements_compare_with_numbers() -> None:
    """Rational elements equal and hash like their Fraction."""
    x = CycloNumber.rational(Fraction(3, 4), 5)
    assert x == Fraction(3, 4)
    assert hash(x) == hash(Fraction(3, 4))
    assert x + 1 == Fraction(7, 4)
    assert 2 - x == Fraction(5, 4)
    assert eps_power(1, 3) != 1


def test_levels_do_not_mix() -> None:
    with pytest.raises(InvalidInput):
        _ = eps_power(1, 3) + eps_power(1, 4)


def test_str() -> None:
    """Terms are printed in ascending powers of e."""
    assert str(CycloNumber([Fraction(1, 2), 1, 3], 5)) == "1/2 + e + 3*e^2"
    assert str(CycloNumber.zero(4)) == "0"
    assert str(eps_power(2, 3)) == "-1 + -1*e"


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
