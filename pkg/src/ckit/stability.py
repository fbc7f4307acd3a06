"""Defect, stable complexity read off a finite table, and the kappa function.

A finite table cannot prove stability.  Everything here is relative to the
table's horizon: the sequence ``||n 3^k|| - 3k`` is non-increasing in ``k``
(because ``||3m|| <= ||m|| + 3``), and a value counts as *settled* when the
sequence was constant over the last ``settle_window`` steps of the horizon.
Unsettled values are upper bounds.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable

import numpy as np

from .errors import TableRangeError

DEFAULT_SETTLE_WINDOW = 3


@dataclass(frozen=True)
class Defect:
    complexity: int
    n: int

    @property
    def value(self) -> float:
        return self.complexity - 3 * math.log(self.n, 3)

    def __float__(self) -> float:
        return self.value


@dataclass(frozen=True)
class StableValue:
    value: int
    horizon: int
    settled: bool
    k_min: int  # first k attaining the minimum


@dataclass(frozen=True)
class KappaValue:
    kappa: int
    u: int
    settled: bool


def layer_of(stable: int) -> tuple[int, int]:
    """Split a stable complexity as ``3 l + 2 - u`` with ``u in {0,1,2}``; return ``(l, u)``."""
    u = (2 - stable) % 3
    return (stable - 2 + u) // 3, u


def _horizon(max_n: int, n: int) -> int:
    h = 0
    while n * 3 ** (h + 1) <= max_n:
        h += 1
    return h


def defect(table, n: int) -> Defect:
    return Defect(table[n], n)


def stable_complexity(table, n: int, settle_window: int = DEFAULT_SETTLE_WINDOW) -> StableValue:
    if n < 1:
        raise ValueError("n must be >= 1")
    if n > table.max_n:
        raise TableRangeError(f"n={n} outside table range 1..{table.max_n}")
    h = _horizon(table.max_n, n)
    seq = [int(table.values[n * 3 ** k]) - 3 * k for k in range(h + 1)]
    best = min(seq)
    settled = h >= settle_window and seq[h - settle_window] == seq[h]
    return StableValue(best, h, settled, seq.index(best))


def is_stable_at_horizon(table, n: int, h: int) -> bool:
    """``||n 3^k|| == ||n|| + 3k`` for every ``0 <= k <= h``."""
    if n * 3 ** h > table.max_n:
        raise TableRangeError(f"n*3^{h}={n * 3 ** h} outside table range 1..{table.max_n}")
    base = int(table.values[n])
    return all(int(table.values[n * 3 ** k]) == base + 3 * k for k in range(h + 1))


def kappa(table, m: int, settle_window: int = DEFAULT_SETTLE_WINDOW) -> KappaValue:
    """Least ``k`` with ``m / 3^k`` in K, for ``3`` not dividing ``m``."""
    if m % 3 == 0:
        raise ValueError(f"kappa is defined for m not divisible by 3, got {m}")
    sv = stable_complexity(table, m, settle_window)
    ell, u = layer_of(sv.value)
    return KappaValue(ell, u, sv.settled)


@dataclass
class GaugeReport:
    checked: int = 0
    skipped: int = 0
    violations: list[tuple[int, int, int]] = field(default_factory=list)  # (n, st(n), st(3n))

    @property
    def ok(self) -> bool:
        return not self.violations


def stability_gauge_check(table, sample: Iterable[int],
                          settle_window: int = DEFAULT_SETTLE_WINDOW) -> GaugeReport:
    """Check ``||3n||_st == ||n||_st + 3`` on every sampled n where both sides settle."""
    report = GaugeReport()
    for n in sample:
        if 3 * n > table.max_n:
            report.skipped += 1
            continue
        a = stable_complexity(table, n, settle_window)
        b = stable_complexity(table, 3 * n, settle_window)
        if not (a.settled and b.settled):
            report.skipped += 1
            continue
        report.checked += 1
        if b.value != a.value + 3:
            report.violations.append((n, a.value, b.value))
    return report


class StableTable:
    """Stable complexity for every ``m <= limit`` at once.

    ``limit`` defaults to ``max_n // 3**settle_window``: below it every entry
    has at least ``settle_window`` steps of horizon to settle on.
    """

    def __init__(self, table, settle_window: int = DEFAULT_SETTLE_WINDOW, limit: int | None = None):
        N = table.max_n
        if limit is None:
            limit = N // 3 ** settle_window
        limit = min(limit, N)
        self.table = table
        self.settle_window = settle_window
        self.limit = limit
        vals = table.values.astype(np.int16)
        m = np.arange(limit + 1, dtype=np.int64)
        value = vals[: limit + 1].copy()
        k_min = np.zeros(limit + 1, dtype=np.int8)
        horizon = np.zeros(limit + 1, dtype=np.int8)
        k = 1
        while 3 ** k <= N:
            top = min(limit, N // 3 ** k)
            if top < 1:
                break
            cand = vals[m[1: top + 1] * 3 ** k] - 3 * k
            cur = value[1: top + 1]
            better = cand < cur
            cur[better] = cand[better]
            k_min[1: top + 1][better] = k
            horizon[1: top + 1] = k
            k += 1
        h = horizon.astype(np.int64)
        back = np.maximum(h - settle_window, 0)
        at_back = vals[np.maximum(m * 3 ** back, 0)] - 3 * back
        settled = (h >= settle_window) & (at_back == value)
        settled[0] = False
        value[0] = 0
        self.value = value
        self.k_min = k_min
        self.horizon = horizon
        self.settled = settled
        ell_u = (2 - value.astype(np.int64)) % 3
        self.u = ell_u.astype(np.int8)
        self.kappa = ((value.astype(np.int64) - 2 + ell_u) // 3).astype(np.int16)
        for arr in (self.value, self.k_min, self.horizon, self.settled, self.u, self.kappa):
            arr.flags.writeable = False

    @classmethod
    def of(cls, table, settle_window: int = DEFAULT_SETTLE_WINDOW) -> "StableTable":
        """Cached per (table, settle window)."""
        cache = table._stable_cache
        if settle_window not in cache:
            cache[settle_window] = cls(table, settle_window)
        return cache[settle_window]

    def _check(self, m: int) -> None:
        if not 1 <= m <= self.limit:
            raise TableRangeError(f"m={m} outside stable range 1..{self.limit}")

    def stable(self, m: int) -> StableValue:
        self._check(m)
        return StableValue(int(self.value[m]), int(self.horizon[m]),
                           bool(self.settled[m]), int(self.k_min[m]))

    def get(self, m: int) -> StableValue:
        """Like :meth:`stable` but falls back to a direct scan above ``limit``."""
        if 1 <= m <= self.limit:
            return self.stable(m)
        return stable_complexity(self.table, m, self.settle_window)
