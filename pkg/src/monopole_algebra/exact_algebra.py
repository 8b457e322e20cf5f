"""Exact arithmetic substrate: half-integers, rationals, signed square roots.

Angular momentum quantum numbers (j, m, mu) are half-integers stored as
twice their value, so every sum, difference and comparison is plain integer
arithmetic.  Coupling coefficient values live in sign * sqrt(p/q) form,
which is closed under multiplication and division.  General sums of square
roots leave that closure and are lowered to floating point at the point of
use; the one exception is ``add_commensurate``, defined for pairs whose
radicands differ by the square of a rational.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError, IncommensurableRadicandsError

# BigRational is an arbitrary-precision reduced rational with positive
# denominator; fractions.Fraction already guarantees exactly that.
BigRational = Fraction


@dataclass(frozen=True, order=False)
class HalfInt:
    """A half-integer stored exactly as twice its value.

    ``HalfInt(3)`` is 3/2; use :meth:`from_int` or plain ints at call sites
    for whole values.  Arithmetic mixes freely with ints and is exact.
    """

    twice_value: int

    def __post_init__(self) -> None:
        if not isinstance(self.twice_value, int) or isinstance(self.twice_value, bool):
            raise DomainError(f"half-integer needs an int doubled value, got {self.twice_value!r}")

    @classmethod
    def from_int(cls, n: int) -> "HalfInt":
        return cls(2 * n)

    @classmethod
    def parse(cls, text: str) -> "HalfInt":
        """Parse 'p' or 'p/2' with optional sign. Decimals are rejected."""
        s = text.strip()
        body = s[1:] if s[:1] in "+-" else s
        if body.isdigit():
            return cls(2 * int(s))
        if body.endswith("/2") and body[:-2].isdigit():
            return cls(int(s[: s.index("/")]) if s[0] in "+-" else int(s[:-2]))
        raise DomainError(f"not a half-integer (use 'p' or 'p/2'): {text!r}")

    @property
    def is_integer(self) -> bool:
        return self.twice_value % 2 == 0

    def as_fraction(self) -> Fraction:
        return Fraction(self.twice_value, 2)

    def __float__(self) -> float:
        return self.twice_value / 2.0

    def __int__(self) -> int:
        if not self.is_integer:
            raise DomainError(f"{self} is not an integer")
        return self.twice_value // 2

    def __str__(self) -> str:
        if self.is_integer:
            return str(self.twice_value // 2)
        return f"{self.twice_value}/2"

    def __neg__(self) -> "HalfInt":
        return HalfInt(-self.twice_value)

    def __abs__(self) -> "HalfInt":
        return HalfInt(abs(self.twice_value))

    def __add__(self, other: "HalfInt | int") -> "HalfInt":
        return HalfInt(self.twice_value + as_half_int(other).twice_value)

    __radd__ = __add__

    def __sub__(self, other: "HalfInt | int") -> "HalfInt":
        return HalfInt(self.twice_value - as_half_int(other).twice_value)

    def __rsub__(self, other: "HalfInt | int") -> "HalfInt":
        return HalfInt(as_half_int(other).twice_value - self.twice_value)

    def _cmp_key(self, other: "HalfInt | int") -> int:
        return as_half_int(other).twice_value

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (HalfInt, int)) and not isinstance(other, bool):
            return self.twice_value == self._cmp_key(other)
        return NotImplemented

    def __hash__(self) -> int:
        # consistent with == on ints
        if self.is_integer:
            return hash(self.twice_value // 2)
        return hash(Fraction(self.twice_value, 2))

    def __lt__(self, other: "HalfInt | int") -> bool:
        return self.twice_value < self._cmp_key(other)

    def __le__(self, other: "HalfInt | int") -> bool:
        return self.twice_value <= self._cmp_key(other)

    def __gt__(self, other: "HalfInt | int") -> bool:
        return self.twice_value > self._cmp_key(other)

    def __ge__(self, other: "HalfInt | int") -> bool:
        return self.twice_value >= self._cmp_key(other)


def as_half_int(value: "HalfInt | int | str") -> HalfInt:
    """Coerce an int or a string like "3/2" (or pass a HalfInt through)."""
    if isinstance(value, HalfInt):
        return value
    if isinstance(value, int) and not isinstance(value, bool):
        return HalfInt(2 * value)
    if isinstance(value, str):
        return HalfInt.parse(value)
    raise DomainError(f"cannot interpret {value!r} as a half-integer")


# Factorials are memoized up to a configurable cap; beyond the cap they are
# still computed exactly, just not cached, so the cap is never a ceiling.
_FACT_CACHE: list[int] = [1]
_FACT_CACHE_CAP = 200


def set_factorial_cache_cap(cap: int) -> None:
    global _FACT_CACHE_CAP
    if cap < 0:
        raise DomainError("factorial cache cap must be non-negative")
    _FACT_CACHE_CAP = cap
    del _FACT_CACHE[cap + 1:]


def factorial(n: int) -> int:
    """n! as an exact integer; negative n is a domain error."""
    if not isinstance(n, int) or isinstance(n, bool):
        raise DomainError(f"factorial needs an integer, got {n!r}")
    if n < 0:
        raise DomainError(f"factorial of negative argument {n}")
    if n <= _FACT_CACHE_CAP:
        while len(_FACT_CACHE) <= n:
            _FACT_CACHE.append(_FACT_CACHE[-1] * len(_FACT_CACHE))
        return _FACT_CACHE[n]
    return math.factorial(n)


def generalized_binomial(a: "Fraction | int", k: int) -> Fraction:
    """Binomial coefficient C(a, k) = a(a-1)...(a-k+1)/k! for rational a.

    Valid for negative and non-integer a, as needed by Jacobi polynomials
    with parameters below -1.
    """
    if not isinstance(k, int) or isinstance(k, bool) or k < 0:
        raise DomainError(f"binomial lower index must be a non-negative integer, got {k!r}")
    a = Fraction(a)
    num = Fraction(1)
    for i in range(k):
        num *= a - i
    return num / factorial(k)


def _rational_sqrt(q: Fraction) -> "Fraction | None":
    """Exact square root of a non-negative rational, or None if irrational."""
    if q < 0:
        return None
    rn = math.isqrt(q.numerator)
    rd = math.isqrt(q.denominator)
    if rn * rn == q.numerator and rd * rd == q.denominator:
        return Fraction(rn, rd)
    return None


@dataclass(frozen=True)
class SignedSqrtRational:
    """Exact value sign * sqrt(radicand) with a non-negative rational radicand.

    Closed under multiplication and division.  There is deliberately no
    general addition: sums of square roots are not representable here and
    must be lowered to float by the caller.  ``add_commensurate`` covers the
    one exact case the coupling recursions need.
    """

    sign: int
    radicand: Fraction

    def __post_init__(self) -> None:
        if self.sign not in (-1, 0, 1):
            raise DomainError(f"sign must be -1, 0 or +1, got {self.sign!r}")
        if self.radicand < 0:
            raise DomainError(f"radicand must be non-negative, got {self.radicand}")
        # canonical zero: sign 0 iff radicand 0
        if (self.sign == 0) != (self.radicand == 0):
            raise DomainError(f"non-canonical zero: sign={self.sign}, radicand={self.radicand}")

    @classmethod
    def zero(cls) -> "SignedSqrtRational":
        return cls(0, Fraction(0))

    @classmethod
    def one(cls) -> "SignedSqrtRational":
        return cls(1, Fraction(1))

    @classmethod
    def sqrt_of(cls, q: "Fraction | int") -> "SignedSqrtRational":
        """The principal square root of a non-negative rational."""
        q = Fraction(q)
        if q < 0:
            raise DomainError(f"cannot take a real square root of {q}")
        return cls(0, Fraction(0)) if q == 0 else cls(1, q)

    @classmethod
    def from_rational(cls, q: "Fraction | int") -> "SignedSqrtRational":
        """Embed a rational exactly: q maps to sign(q) * sqrt(q^2)."""
        q = Fraction(q)
        if q == 0:
            return cls.zero()
        return cls(1 if q > 0 else -1, q * q)

    @property
    def is_zero(self) -> bool:
        return self.sign == 0

    def __mul__(self, other: "SignedSqrtRational") -> "SignedSqrtRational":
        s = self.sign * other.sign
        if s == 0:
            return SignedSqrtRational.zero()
        return SignedSqrtRational(s, self.radicand * other.radicand)

    def __truediv__(self, other: "SignedSqrtRational") -> "SignedSqrtRational":
        if other.sign == 0:
            raise ZeroDivisionError("division by exact zero")
        if self.sign == 0:
            return SignedSqrtRational.zero()
        return SignedSqrtRational(self.sign * other.sign, self.radicand / other.radicand)

    def __neg__(self) -> "SignedSqrtRational":
        if self.sign == 0:
            return self
        return SignedSqrtRational(-self.sign, self.radicand)

    def scaled_by(self, q: "Fraction | int") -> "SignedSqrtRational":
        """Exact product with a rational factor."""
        return self * SignedSqrtRational.from_rational(q)

    def add_commensurate(self, other: "SignedSqrtRational") -> "SignedSqrtRational":
        """Exact sum, defined only when the radicand ratio is a rational square.

        a*sqrt(r) + b*sqrt(r') with r'/r = t^2 collapses to (a + b*t)*sqrt(r).
        Anything else raises IncommensurableRadicandsError.
        """
        if self.sign == 0:
            return other
        if other.sign == 0:
            return self
        t = _rational_sqrt(other.radicand / self.radicand)
        if t is None:
            raise IncommensurableRadicandsError(
                f"sqrt({self.radicand}) and sqrt({other.radicand}) are not commensurate"
            )
        coeff = self.sign + other.sign * t
        if coeff == 0:
            return SignedSqrtRational.zero()
        return SignedSqrtRational(1 if coeff > 0 else -1, coeff * coeff * self.radicand)

    def to_float(self) -> float:
        # Fraction -> float is correctly rounded, as is math.sqrt, so the
        # result is within 1 ulp of the correctly rounded double.
        return self.sign * math.sqrt(float(self.radicand))

    def render(self) -> str:
        """Exact display form like '-√(1/6)'."""
        if self.sign == 0:
            return "0"
        prefix = "-" if self.sign < 0 else ""
        return f"{prefix}√({self.radicand.numerator}/{self.radicand.denominator})"
