"""Exact arithmetic in the cyclotomic field ℚ(ε), ε a primitive ℓ-th root of unity.

Elements are stored as rational coefficient vectors on 1, ε, …, ε^{φ(ℓ)−1},
reduced modulo the ℓ-th cyclotomic polynomial Φ_ℓ.
"""

from fractions import Fraction
from functools import lru_cache
from typing import Union

from sympy import QQ, Poly, Rational, cyclotomic_poly, invert, symbols

from .errors import InvalidInput

_X = symbols("x")

Scalar = Union[int, Fraction]


@lru_cache(maxsize=None)
def cyclotomic_modulus(level: int) -> tuple[int, ...]:
    """Coefficients of Φ_ℓ in ascending powers (monic, so the last one is 1)."""
    if level < 1:
        raise InvalidInput(f"level must be positive, got {level}")
    poly = Poly(cyclotomic_poly(level, _X), _X)
    return tuple(int(c) for c in reversed(poly.all_coeffs()))


def _reduce(coeffs: list[Fraction], level: int) -> tuple[Fraction, ...]:
    modulus = cyclotomic_modulus(level)
    degree = len(modulus) - 1
    for top in range(len(coeffs) - 1, degree - 1, -1):
        c = coeffs[top]
        if c:
            base = top - degree
            for j in range(degree):
                coeffs[base + j] -= c * modulus[j]
            coeffs[top] = Fraction(0)
    coeffs.extend([Fraction(0)] * (degree - len(coeffs)))
    return tuple(coeffs[:degree])


class CycloNumber:
    """An element of ℚ(ε_ℓ); immutable and hashable."""

    __slots__ = ("level", "coeffs")

    def __init__(self, coeffs: list[Scalar] | tuple[Scalar, ...], level: int) -> None:
        self.level = level
        self.coeffs = _reduce([Fraction(c) for c in coeffs], level)

    @classmethod
    def _raw(cls, coeffs: tuple[Fraction, ...], level: int) -> "CycloNumber":
        obj = cls.__new__(cls)
        obj.level = level
        obj.coeffs = coeffs
        return obj

    @classmethod
    def rational(cls, value: Scalar, level: int) -> "CycloNumber":
        return cls([value], level)

    @classmethod
    def zero(cls, level: int) -> "CycloNumber":
        return cls([], level)

    @classmethod
    def one(cls, level: int) -> "CycloNumber":
        return cls([1], level)

    def _coerce(self, other: Union["CycloNumber", Scalar]) -> "CycloNumber":
        if isinstance(other, CycloNumber):
            if other.level != self.level:
                raise InvalidInput(f"cannot mix levels {self.level} and {other.level}")
            return other
        return CycloNumber.rational(other, self.level)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def __add__(self, other: Union["CycloNumber", Scalar]) -> "CycloNumber":
        other = self._coerce(other)
        return CycloNumber._raw(
            tuple(a + b for a, b in zip(self.coeffs, other.coeffs)), self.level
        )

    __radd__ = __add__

    def __neg__(self) -> "CycloNumber":
        return CycloNumber._raw(tuple(-a for a in self.coeffs), self.level)

    def __sub__(self, other: Union["CycloNumber", Scalar]) -> "CycloNumber":
        return self + (-self._coerce(other))

    def __rsub__(self, other: Scalar) -> "CycloNumber":
        return (-self) + other

    def __mul__(self, other: Union["CycloNumber", Scalar]) -> "CycloNumber":
        if not isinstance(other, CycloNumber):
            factor = Fraction(other)
            return CycloNumber._raw(tuple(a * factor for a in self.coeffs), self.level)
        other = self._coerce(other)
        if len(self.coeffs) == 1:
            return CycloNumber._raw((self.coeffs[0] * other.coeffs[0],), self.level)
        product = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    product[i + j] += a * b
        return CycloNumber(product, self.level)

    __rmul__ = __mul__

    def inverse(self) -> "CycloNumber":
        """Multiplicative inverse, computed as a polynomial inverse modulo Φ_ℓ."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in the cyclotomic field")
        if self.is_rational():
            return CycloNumber.rational(1 / self.coeffs[0], self.level)
        expr = sum(
            Rational(c.numerator, c.denominator) * _X**i for i, c in enumerate(self.coeffs)
        )
        inv = Poly(invert(expr, cyclotomic_poly(self.level, _X), _X), _X, domain=QQ)
        coeffs = [Fraction(int(c.p), int(c.q)) for c in reversed(inv.all_coeffs())]
        return CycloNumber(coeffs, self.level)

    def __truediv__(self, other: Union["CycloNumber", Scalar]) -> "CycloNumber":
        return self * self._coerce(other).inverse()

    def __eq__(self, other: object) -> bool:
        if isinstance(other, CycloNumber):
            return self.level == other.level and self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coeffs[0] == other
        return NotImplemented

    def __hash__(self) -> int:
        if self.is_rational():
            return hash(self.coeffs[0])
        return hash((self.level, self.coeffs))

    def __repr__(self) -> str:
        return f"CycloNumber({self}, level={self.level})"

    def __str__(self) -> str:
        terms = []
        for power, c in enumerate(self.coeffs):
            if not c:
                continue
            if power == 0:
                terms.append(str(c))
            else:
                base = "e" if power == 1 else f"e^{power}"
                terms.append(base if c == 1 else f"{c}*{base}")
        return " + ".join(terms) if terms else "0"

    def to_json(self) -> str:
        return str(self)


@lru_cache(maxsize=None)
def eps_power(p: int, level: int) -> CycloNumber:
    """ε^p, p taken modulo ℓ."""
    coeffs = [Fraction(0)] * level
    coeffs[p % level] = Fraction(1)
    return CycloNumber(coeffs, level)
