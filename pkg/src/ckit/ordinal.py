"""Ordinals below omega^omega (plus omega^omega itself) and the index maps
between a compact set, its derived sets and its layers."""
from __future__ import annotations

import re
from dataclasses import dataclass
from functools import total_ordering

MAX_DEGREE = 8


class OrdinalOverflow(OverflowError):
    pass


@total_ordering
@dataclass(frozen=True, eq=True)
class Ordinal:
    """``sum coeffs[i] * w^i`` with trailing zeros trimmed, or the top value ``w^w``."""

    coeffs: tuple[int, ...] = ()
    top: bool = False

    def __post_init__(self):
        c = list(self.coeffs)
        while c and c[-1] == 0:
            c.pop()
        if any(x < 0 for x in c):
            raise ValueError("ordinal coefficients must be non-negative")
        if self.top and c:
            raise ValueError("w^w carries no coefficients")
        if len(c) - 1 > MAX_DEGREE:
            raise OrdinalOverflow(f"degree {len(c) - 1} exceeds the cap {MAX_DEGREE}")
        object.__setattr__(self, "coeffs", tuple(c))

    @classmethod
    def of(cls, n: int) -> "Ordinal":
        return cls((n,))

    @classmethod
    def terms(cls, mapping: dict[int, int]) -> "Ordinal":
        if not mapping:
            return ZERO
        c = [0] * (max(mapping) + 1)
        for e, v in mapping.items():
            c[e] += v
        return cls(tuple(c))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.top and not self.coeffs

    @property
    def is_finite(self) -> bool:
        return not self.top and len(self.coeffs) <= 1

    @property
    def is_limit(self) -> bool:
        return self.top or (bool(self.coeffs) and self.coeffs[0] == 0)

    @property
    def rank(self) -> int:
        """Exponent of the lowest Cantor-normal-form term (0 for 0 and successors).

        In a space of order type w^w + 1 this is the Cantor-Bendixson rank of
        the point at this position."""
        if self.top:
            raise ValueError("w^w has no finite rank")
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return 0

    def _key(self):
        if self.top:
            return (1, 0, ())
        return (0, len(self.coeffs), self.coeffs[::-1])

    def __lt__(self, other):
        if not isinstance(other, Ordinal):
            return NotImplemented
        return self._key() < other._key()

    def __add__(self, other):
        if isinstance(other, int):
            other = Ordinal.of(other)
        if not isinstance(other, Ordinal):
            return NotImplemented
        if self.top:
            if other.is_zero:
                return self
            raise OrdinalOverflow("w^w + a > w^w is out of range")
        if other.top:
            return other
        if other.is_zero:
            return self
        e = other.degree
        c = list(other.coeffs)
        c += [0] * (max(len(self.coeffs), len(c)) - len(c))
        for i in range(e + 1, len(self.coeffs)):
            c[i] = self.coeffs[i]
        if e < len(self.coeffs):
            c[e] += self.coeffs[e]
        return Ordinal(tuple(c))

    def __radd__(self, other):
        if isinstance(other, int):
            return Ordinal.of(other) + self
        return NotImplemented

    def times_omega_pow(self, n: int) -> "Ordinal":
        """Left multiplication ``w^n * self``."""
        if self.top or n == 0:
            return self
        if self.is_zero:
            return self
        return Ordinal((0,) * n + self.coeffs)

    def __str__(self) -> str:
        if self.top:
            return "w^w"
        if self.is_zero:
            return "0"
        parts = []
        for e in range(self.degree, -1, -1):
            c = self.coeffs[e]
            if not c:
                continue
            if e == 0:
                parts.append(str(c))
                continue
            base = "w" if e == 1 else f"w^{e}"
            parts.append(base if c == 1 else f"{base}*{c}")
        return "+".join(parts)

    def __repr__(self) -> str:
        return f"Ordinal({self})"

    _TERM = re.compile(r"^(?:w(?:\^(\d+))?(?:\*(\d+))?|(\d+))$")

    @classmethod
    def parse(cls, text: str) -> "Ordinal":
        text = text.replace(" ", "")
        if text == "w^w":
            return OMEGA_OMEGA
        out: dict[int, int] = {}
        last = None
        for term in text.split("+"):
            m = cls._TERM.match(term)
            if not m:
                raise ValueError(f"bad ordinal term {term!r} in {text!r}")
            exp, coeff, const = m.groups()
            e = 0 if const is not None else int(exp or 1)
            c = int(const) if const is not None else int(coeff or 1)
            if last is not None and e >= last:
                raise ValueError(f"terms must decrease in power: {text!r}")
            last = e
            out[e] = c
        return cls.terms(out)


ZERO = Ordinal()
ONE = Ordinal.of(1)
OMEGA = Ordinal((0, 1))
OMEGA_OMEGA = Ordinal(top=True)


def ord_cmp(a: Ordinal, b: Ordinal) -> int:
    return (a > b) - (a < b)


def derived_index(n: int, alpha: Ordinal) -> Ordinal:
    """Position in K of the point ``K^(n)[alpha]``: ``w^n (1 + alpha)``."""
    return (ONE + alpha).times_omega_pow(n)


def tu_index(u: int, alpha: Ordinal) -> Ordinal:
    """Position in K of ``T_u[alpha]``."""
    if u == 0:
        return alpha if alpha.is_finite else alpha + 1
    return (alpha + 1).times_omega_pow(u)


def limit_index(alpha: Ordinal) -> Ordinal:
    """Position of ``lim_n K[w alpha + n]``: ``w (alpha + 1)``."""
    return (alpha + 1).times_omega_pow(1)


def next_with_rank(prev: Ordinal | None, rank: int) -> Ordinal:
    """Least ordinal above ``prev`` whose lowest term has exponent ``rank``.

    ``prev=None`` asks for the least such ordinal at all (0 for rank 0).
    This is how labels are assigned when walking a prefix top down: the next
    point of Cantor-Bendixson rank ``v`` sits at the next position of rank ``v``.
    """
    if prev is None:
        return ZERO if rank == 0 else Ordinal.terms({rank: 1})
    if prev.top:
        raise OrdinalOverflow("nothing lies above w^w")
    c = list(prev.coeffs) + [0] * max(0, rank + 1 - len(prev.coeffs))
    for i in range(rank):
        c[i] = 0
    c[rank] += 1
    return Ordinal(tuple(c))
