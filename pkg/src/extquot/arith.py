"""Exact integer and Q/Z arithmetic.

Torus points are only ever represented at finite order, as elements of
Q/Z.  ``RationalAngle(j, d)`` stands for the root of unity exp(2 pi i j/d).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering


def _natural(x, name: str = "value") -> int:
    if isinstance(x, bool) or not isinstance(x, int):
        raise TypeError(f"{name} must be an int, got {type(x).__name__}")
    if x < 0:
        raise ValueError(f"{name} must be nonnegative, got {x}")
    return x


def _positive(x, name: str = "n") -> int:
    _natural(x, name)
    if x == 0:
        raise ValueError(f"{name} must be >= 1")
    return x


def gcd(a: int, b: int) -> int:
    return math.gcd(_natural(a, "a"), _natural(b, "b"))


def binomial(n: int, j: int) -> int:
    """C(n, j), zero when j > n."""
    return math.comb(_natural(n, "n"), _natural(j, "j"))


def factorize(n: int) -> dict[int, int]:
    """Prime factorization by trial division."""
    _positive(n)
    out: dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def is_prime(n: int) -> bool:
    if isinstance(n, bool) or not isinstance(n, int) or n < 2:
        return False
    return factorize(n) == {n: 1}


def totient(n: int) -> int:
    _positive(n)
    result = n
    for p in factorize(n):
        result -= result // p
    return result


def divisors(n: int) -> list[int]:
    _positive(n)
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def odd_divisors(n: int) -> list[int]:
    return [d for d in divisors(n) if d % 2 == 1]


def prime_to_part(n: int, p: int) -> int:
    """Largest divisor of n coprime to p."""
    _positive(n)
    while n % p == 0:
        n //= p
    return n


@total_ordering
@dataclass(frozen=True)
class RationalAngle:
    """An element num/den of Q/Z, kept reduced with 0 <= num < den.

    Ordering is by the real value num/den in [0, 1), which makes the
    lexicographic order on tuples of angles a total order.
    """

    num: int
    den: int = 1

    def __post_init__(self):
        if isinstance(self.den, bool) or not isinstance(self.den, int) or self.den < 1:
            raise ValueError(f"denominator must be a positive int, got {self.den!r}")
        if not isinstance(self.num, int) or isinstance(self.num, bool):
            raise TypeError(f"numerator must be an int, got {self.num!r}")
        if not 0 <= self.num < self.den:
            raise ValueError(f"angle {self.num}/{self.den} not in [0, 1)")
        if math.gcd(self.num, self.den) != 1 and not (self.num == 0 and self.den == 1):
            raise ValueError(f"angle {self.num}/{self.den} is not reduced")

    @classmethod
    def of(cls, value) -> "RationalAngle":
        """Reduce any rational (int, Fraction, "a/b" string) modulo 1."""
        f = Fraction(value) % 1
        return cls(f.numerator, f.denominator)

    @classmethod
    def of_parts(cls, num: int, den: int) -> "RationalAngle":
        return cls.of(Fraction(num, den))

    @classmethod
    def zero(cls) -> "RationalAngle":
        return cls(0, 1)

    def as_fraction(self) -> Fraction:
        return Fraction(self.num, self.den)

    @property
    def order(self) -> int:
        """Multiplicative order of the root of unity."""
        return self.den

    def is_zero(self) -> bool:
        return self.num == 0

    @classmethod
    def _reduce(cls, num: int, den: int) -> "RationalAngle":
        num %= den
        g = math.gcd(num, den)
        return cls(num // g, den // g)

    def __add__(self, other: "RationalAngle") -> "RationalAngle":
        if not isinstance(other, RationalAngle):
            return NotImplemented
        if self.den == other.den:
            return RationalAngle._reduce(self.num + other.num, self.den)
        return RationalAngle._reduce(self.num * other.den + other.num * self.den, self.den * other.den)

    def __neg__(self) -> "RationalAngle":
        return RationalAngle((-self.num) % self.den, self.den)

    def __sub__(self, other: "RationalAngle") -> "RationalAngle":
        if not isinstance(other, RationalAngle):
            return NotImplemented
        if self.den == other.den:
            return RationalAngle._reduce(self.num - other.num, self.den)
        return RationalAngle._reduce(self.num * other.den - other.num * self.den, self.den * other.den)

    def __rmul__(self, k: int) -> "RationalAngle":
        if isinstance(k, bool) or not isinstance(k, int):
            return NotImplemented
        return RationalAngle._reduce(k * self.num, self.den)

    def __lt__(self, other: "RationalAngle") -> bool:
        if not isinstance(other, RationalAngle):
            return NotImplemented
        return self.num * other.den < other.num * self.den

    def __str__(self) -> str:
        return f"{self.num}/{self.den}"


def angle_add(x: RationalAngle, y: RationalAngle) -> RationalAngle:
    return x + y


def angle_scale(k: int, x: RationalAngle) -> RationalAngle:
    return k * x


def angle_negate(x: RationalAngle) -> RationalAngle:
    return -x


def parse_angle(text: str) -> RationalAngle:
    """Parse "a/b" or "a" into a reduced angle; raises ValueError on junk."""
    s = text.strip()
    if not s:
        raise ValueError("empty fraction")
    num, sep, den = s.partition("/")
    try:
        a = int(num)
        b = int(den) if sep else 1
    except ValueError:
        raise ValueError(f"not a fraction: {text!r}") from None
    if b == 0:
        raise ValueError(f"zero denominator: {text!r}")
    return RationalAngle.of(Fraction(a, b))
