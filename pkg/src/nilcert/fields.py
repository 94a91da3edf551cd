"""Exact coefficient fields.

Coefficients are plain Python numbers: ``fractions.Fraction`` over the
rationals and ``int`` residues in ``[0, p)`` over a prime field.  A field
object knows how to normalize, invert and print them, which keeps the
polynomial inner loops free of wrapper objects.
"""

from __future__ import annotations

from fractions import Fraction

DEFAULT_PRIME = 32003


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class RationalField:
    """The field of rational numbers."""

    characteristic = 0

    def __call__(self, value) -> Fraction:
        return Fraction(value)

    def normalize(self, c):
        return c

    def inv(self, c: Fraction) -> Fraction:
        if c == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / Fraction(c)

    def from_ratio(self, num: int, den: int) -> Fraction:
        return Fraction(num, den)

    def signed(self, c) -> Fraction:
        return c

    def descriptor(self) -> str:
        return "q"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")

    def __repr__(self):
        return "QQ"


class PrimeField:
    """Integers modulo a prime ``p``."""

    def __init__(self, p: int = DEFAULT_PRIME):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.characteristic = p

    def __call__(self, value) -> int:
        if isinstance(value, Fraction):
            return self.from_ratio(value.numerator, value.denominator)
        return int(value) % self.p

    def normalize(self, c: int) -> int:
        return c % self.p

    def inv(self, c: int) -> int:
        c %= self.p
        if c == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(c, -1, self.p)

    def from_ratio(self, num: int, den: int) -> int:
        return num * self.inv(den) % self.p

    def signed(self, c: int) -> int:
        # symmetric representative, used for printing
        return c - self.p if c > self.p // 2 else c

    def descriptor(self) -> str:
        return f"fp:{self.p}"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def __repr__(self):
        return f"GF({self.p})"


QQ = RationalField()


def field_from_descriptor(text: str):
    """Parse ``"q"`` or ``"fp:P"`` into a field."""
    text = text.strip().lower()
    if text in ("q", "qq"):
        return QQ
    if text.startswith("fp:"):
        try:
            p = int(text[3:])
        except ValueError:
            raise ValueError(f"bad prime in field descriptor {text!r}") from None
        return PrimeField(p)
    raise ValueError(f"unknown field descriptor {text!r}")
