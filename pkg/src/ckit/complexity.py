"""Integer complexity by dynamic programming.

``values[n]`` is the least number of ones needed to write ``n`` with ``+``,
``*`` and parentheses.  Entries are stored one byte each; index 0 is unused.

Exhaustive mode considers every product ``d * e`` and every sum
``a + (n - a)``.  Sums are scanned in increasing ``a`` and the scan stops as
soon as ``3 log3(a (n - a)) > best - 1``: since ``||m|| >= 3 log3 m`` for every
``m``, no later summand pair can beat the current best, so the result is the
same as scanning all ``a <= n/2``.
"""
from __future__ import annotations

import ast
import math
import warnings
from dataclasses import dataclass
from typing import Union

import numba
import numpy as np

from .errors import NotFoundError, ResourceLimitError, TableRangeError, UncertifiedError

DEFAULT_MEMORY_LIMIT = 8 << 30

_LOG3 = math.log(3.0)


@dataclass(frozen=True)
class CutoffPolicy:
    """How sums are scanned.  ``bound=None`` is the exhaustive (exact) mode."""

    bound: int | None = None

    @classmethod
    def exhaustive(cls) -> "CutoffPolicy":
        return cls(None)

    @classmethod
    def bounded(cls, bound: int) -> "CutoffPolicy":
        if bound < 1:
            raise ValueError(f"sum bound must be >= 1, got {bound}")
        return cls(int(bound))

    @property
    def is_exhaustive(self) -> bool:
        return self.bound is None

    @classmethod
    def parse(cls, text: str) -> "CutoffPolicy":
        text = text.strip().lower()
        if text == "exhaustive":
            return cls.exhaustive()
        if text.startswith("bounded:"):
            return cls.bounded(int(text.split(":", 1)[1]))
        raise ValueError(f"unknown cutoff policy {text!r}")

    def __str__(self) -> str:
        return "exhaustive" if self.bound is None else f"bounded:{self.bound}"


EXHAUSTIVE = CutoffPolicy.exhaustive()


@dataclass(frozen=True)
class Split:
    kind: str  # "one", "sum" or "product"
    left: int
    right: int


# -- expression trees ---------------------------------------------------------

@dataclass(frozen=True)
class One:
    def __str__(self) -> str:
        return "1"


@dataclass(frozen=True)
class Plus:
    left: "Expression"
    right: "Expression"

    def __str__(self) -> str:
        return f"{self.left}+{self.right}"


@dataclass(frozen=True)
class Times:
    left: "Expression"
    right: "Expression"

    def __str__(self) -> str:
        def wrap(e):
            return f"({e})" if isinstance(e, Plus) else str(e)
        return f"{wrap(self.left)}*{wrap(self.right)}"


Expression = Union[One, Plus, Times]


def eval_expression(expr: Expression) -> tuple[int, int]:
    """Return ``(value, ones)`` of an expression tree."""
    # explicit stack: parsed literals produce long 1+1+...+1 chains
    results: dict[int, tuple[int, int]] = {}
    stack = [(expr, False)]
    while stack:
        node, expanded = stack.pop()
        if isinstance(node, One):
            results[id(node)] = (1, 1)
        elif expanded:
            lv, lo = results[id(node.left)]
            rv, ro = results[id(node.right)]
            value = lv + rv if isinstance(node, Plus) else lv * rv
            results[id(node)] = (value, lo + ro)
        else:
            stack.append((node, True))
            stack.append((node.right, False))
            stack.append((node.left, False))
    return results[id(expr)]


def _literal(n: int) -> Expression:
    if n < 1:
        raise ValueError("literals must be positive")
    expr: Expression = One()
    for _ in range(n - 1):
        expr = Plus(expr, One())
    return expr


def parse_expression(text: str) -> Expression:
    """Parse an arithmetic formula into a tree over 1, + and *.

    Integer literals ``d`` expand to ``1+...+1`` (d ones) and ``x^e`` (or
    ``x**e``) with a literal exponent expands to ``e`` copies of ``x`` multiplied.
    """
    tree = ast.parse(text.replace("^", "**"), mode="eval").body

    def build(node) -> Expression:
        if isinstance(node, ast.Constant) and isinstance(node.value, int):
            return _literal(node.value)
        if isinstance(node, ast.BinOp):
            if isinstance(node.op, ast.Add):
                return Plus(build(node.left), build(node.right))
            if isinstance(node.op, ast.Mult):
                return Times(build(node.left), build(node.right))
            if isinstance(node.op, ast.Pow):
                if not (isinstance(node.right, ast.Constant) and isinstance(node.right.value, int)):
                    raise ValueError("exponents must be integer literals")
                e = node.right.value
                if e < 1:
                    raise ValueError("exponents must be positive")
                base = build(node.left)
                out = base
                for _ in range(e - 1):
                    out = Times(out, base)
                return out
        raise ValueError(f"unsupported syntax in expression: {ast.dump(node)}")

    return build(tree)


# -- the table ----------------------------------------------------------------

@numba.njit(cache=True)
def _fill_table(values, sum_bound, prod_scratch):
    n_max = values.shape[0] - 1
    values[1] = 1
    for n in range(2, n_max + 1):
        best = int(values[n - 1]) + 1
        if prod_scratch[n] < best:
            best = int(prod_scratch[n])
        half = n // 2
        cap = half
        if sum_bound > 0 and sum_bound < half:
            cap = sum_bound
        a = 2
        while a <= cap:
            if sum_bound == 0:
                if 3.0 * math.log(float(a) * float(n - a)) / _LOG3 > best - 1 + 1e-9:
                    break
            t = int(values[a]) + int(values[n - a])
            if t < best:
                best = t
            a += 1
        values[n] = best
        d = 2
        while d <= n and d * n <= n_max:
            t = int(values[d]) + best
            if t < prod_scratch[d * n]:
                prod_scratch[d * n] = t
            d += 1


@numba.njit(cache=True)
def _fill_naive(values):
    # every sum and every divisor pair, no pruning; reference for tests
    n_max = values.shape[0] - 1
    values[1] = 1
    for n in range(2, n_max + 1):
        best = 255
        for a in range(1, n // 2 + 1):
            t = int(values[a]) + int(values[n - a])
            if t < best:
                best = t
        d = 2
        while d * d <= n:
            if n % d == 0:
                t = int(values[d]) + int(values[n // d])
                if t < best:
                    best = t
            d += 1
        values[n] = best


def estimate_memory(max_n: int) -> int:
    """Peak bytes used while building a table of bound ``max_n``."""
    return 2 * (max_n + 1)


class ComplexityTable:
    """``||n||`` for ``1 <= n <= max_n``; immutable once built."""

    kind = "complexity"

    def __init__(self, values: np.ndarray, policy: CutoffPolicy = EXHAUSTIVE):
        values = np.asarray(values, dtype=np.uint8)
        values.flags.writeable = False
        self.values = values
        self.max_n = len(values) - 1
        self.policy = policy
        self._stable_cache: dict = {}

    @property
    def exact(self) -> bool:
        """False when sums were capped: entries are then only upper bounds."""
        return self.policy.is_exhaustive

    def __len__(self) -> int:
        return self.max_n

    def __repr__(self) -> str:
        return f"ComplexityTable(max_n={self.max_n}, policy={self.policy})"

    def _check(self, n: int) -> None:
        if not 1 <= n <= self.max_n:
            raise TableRangeError(f"n={n} outside table range 1..{self.max_n}")

    def __getitem__(self, n: int) -> int:
        self._check(n)
        return int(self.values[n])

    def split(self, n: int) -> Split:
        """First optimal split: products before sums, smallest left operand first."""
        self._check(n)
        if n == 1:
            return Split("one", 1, 0)
        v = self.values
        target = int(v[n])
        d = 2
        while d * d <= n:
            if n % d == 0 and int(v[d]) + int(v[n // d]) == target:
                return Split("product", d, n // d)
            d += 1
        left = np.arange(1, n // 2 + 1)
        hits = np.flatnonzero(v[left].astype(np.int16) + v[n - left] == target)
        if len(hits) == 0:  # bounded tables may record an unreachable value
            raise NotFoundError(f"no split of {n} attains the stored value {target}")
        a = int(left[hits[0]])
        return Split("sum", a, n - a)


def _assert_ceiling(values: np.ndarray, chunk: int = 1 << 22) -> None:
    # binary expansion gives ||n|| <= 3 log2 n + 1; anything above is a build bug
    for lo in range(2, len(values), chunk):
        n = np.arange(lo, min(lo + chunk, len(values)))
        over = values[n] > 3 * np.log2(n) + 1
        if over.any():
            bad = int(n[np.argmax(over)])
            raise AssertionError(f"complexity of {bad} exceeds the binary-expansion ceiling")


def build_complexity_table(max_n: int, sum_cutoff: CutoffPolicy = EXHAUSTIVE,
                           memory_limit: int = DEFAULT_MEMORY_LIMIT) -> ComplexityTable:
    if max_n < 1:
        raise ValueError(f"table bound must be >= 1, got {max_n}")
    need = estimate_memory(max_n)
    if need > memory_limit:
        raise ResourceLimitError(
            f"table of size {max_n} needs about {need} bytes, limit is {memory_limit}")
    values = np.zeros(max_n + 1, dtype=np.uint8)
    scratch = np.full(max_n + 1, 255, dtype=np.uint8)
    _fill_table(values, sum_cutoff.bound or 0, scratch)
    _assert_ceiling(values)
    return ComplexityTable(values, sum_cutoff)


def build_naive_table(max_n: int) -> ComplexityTable:
    """Unpruned O(N^2) build; an independent route for cross-checking."""
    values = np.zeros(max_n + 1, dtype=np.uint8)
    _fill_naive(values)
    return ComplexityTable(values)


def complexity(table: ComplexityTable, n: int) -> int:
    return table[n]


def witness_expression(table: ComplexityTable, n: int) -> Expression:
    s = table.split(n)
    if s.kind == "one":
        return One()
    left = witness_expression(table, s.left)
    right = witness_expression(table, s.right)
    return Times(left, right) if s.kind == "product" else Plus(left, right)


def largest_with_complexity(table: ComplexityTable, c: int, strict: bool = True) -> int:
    """Largest ``n`` in the table with ``||n|| = c``.

    Every ``n`` with ``||n|| = c`` satisfies ``n**3 <= 3**c``, so the scan is
    certified once the table reaches that bound.
    """
    hits = np.flatnonzero(table.values == c)
    if len(hits) == 0:
        raise NotFoundError(f"no n <= {table.max_n} has complexity {c}")
    if strict and table.max_n ** 3 < 3 ** c:
        raise UncertifiedError(
            f"table bound {table.max_n} is too small to certify complexity {c}")
    return int(hits[-1])


def solid_numbers(table: ComplexityTable, up_to: int) -> list[int]:
    """All ``n <= up_to`` whose every sum split costs strictly more than ``||n||``."""
    if up_to > table.max_n:
        raise TableRangeError(f"up_to={up_to} exceeds table bound {table.max_n}")
    if not table.exact:
        warnings.warn("table built with a bounded sum cutoff; solid list is heuristic")
    v = table.values.astype(np.int16)
    out = []
    for n in range(1, up_to + 1):
        a = np.arange(1, n // 2 + 1)
        if len(a) == 0 or v[n] < (v[a] + v[n - a]).min():
            out.append(n)
    return out
