"""Exact fractions m/3^k, the element type of the compact sets."""
from __future__ import annotations

import re
from fractions import Fraction
from functools import total_ordering


def _strip3(n: int) -> tuple[int, int]:
    a = 0
    while n % 3 == 0:
        n //= 3
        a += 1
    return n, a


@total_ordering
class Frac3:
    """The rational ``m / 3**k`` in canonical form.

    Canonical means ``3`` does not divide ``m`` whenever ``k > 0``; integers
    divisible by 3 are kept with ``k = 0``.  Zero is the single instance
    ``Frac3.ZERO``.  Comparison operators follow the usual order of the reals;
    use :func:`reverse_cmp` for the reverse order the compact sets are
    well-ordered by.
    """

    __slots__ = ("m", "k")
    ZERO: "Frac3"

    def __new__(cls, n: int, k: int = 0):
        if n < 0:
            raise ValueError("Frac3 holds non-negative values only")
        if n == 0:
            try:
                return cls.ZERO
            except AttributeError:
                pass
        else:
            m, a = _strip3(n)
            if a > k:
                m, k = m * 3 ** (a - k), 0
            else:
                k -= a
            n = m
        self = object.__new__(cls)
        object.__setattr__(self, "m", n)
        object.__setattr__(self, "k", k if n else 0)
        return self

    def __setattr__(self, name, value):
        raise AttributeError("Frac3 is immutable")

    def __reduce__(self):
        return (Frac3, (self.m, self.k))

    @property
    def is_zero(self) -> bool:
        return self.m == 0

    @property
    def denominator(self) -> int:
        return 3 ** self.k

    def to_fraction(self) -> Fraction:
        return Fraction(self.m, 3 ** self.k)

    def __float__(self) -> float:
        return self.m / 3 ** self.k

    def __eq__(self, other):
        if isinstance(other, Frac3):
            return self.m == other.m and self.k == other.k
        return NotImplemented

    def __hash__(self):
        return hash((self.m, self.k))

    def __lt__(self, other):
        if not isinstance(other, Frac3):
            return NotImplemented
        return self.m * 3 ** other.k < other.m * 3 ** self.k

    def scale3(self, j: int) -> "Frac3":
        """Multiply by ``3**j`` (``j`` may be negative)."""
        if self.m == 0:
            return self
        k = self.k - j
        if k >= 0:
            return Frac3(self.m, k)
        return Frac3(self.m * 3 ** (-k), 0)

    def __mul__(self, other):
        if isinstance(other, int) and other >= 0:
            return Frac3(self.m * other, self.k)
        return NotImplemented

    __rmul__ = __mul__

    def __str__(self) -> str:
        if self.k == 0:
            return str(self.m)
        return f"{self.m}/3^{self.k}"

    def display(self) -> str:
        """Plain ``m/d`` text, as the tables print fractions."""
        if self.k == 0:
            return str(self.m)
        return f"{self.m}/{3 ** self.k}"

    def __repr__(self) -> str:
        return f"Frac3({self.m}, {self.k})"

    _TEXT = re.compile(r"^\s*(\d+)\s*(?:/\s*3\s*\^\s*(\d+))?\s*$")

    @classmethod
    def parse(cls, text: str) -> "Frac3":
        """Parse ``"m/3^k"`` (k >= 1), ``"m"`` or ``"0"``."""
        match = cls._TEXT.match(text)
        if not match:
            raise ValueError(f"not a m/3^k fraction: {text!r}")
        m, k = match.groups()
        if k is not None and int(k) < 1:
            raise ValueError(f"exponent must be >= 1 in {text!r}")
        return cls(int(m), int(k or 0))

    @classmethod
    def from_fraction(cls, q: Fraction) -> "Frac3":
        k, d = _strip3(q.denominator)[::-1]
        if d != 1:
            raise ValueError(f"{q} is not of the form m/3^k")
        return cls(q.numerator, k)


Frac3.ZERO = Frac3(0, 0)


def frac3_make(n: int, k: int) -> Frac3:
    return Frac3(n, k)


def reverse_cmp(a: Frac3, b: Frac3) -> int:
    """-1 if ``a`` strictly precedes ``b`` in the reverse order (a > b), 0 if equal, 1 otherwise."""
    lhs = a.m * 3 ** b.k
    rhs = b.m * 3 ** a.k
    return (lhs < rhs) - (lhs > rhs)


def frac3_scale3(a: Frac3, j: int) -> Frac3:
    return a.scale3(j)
