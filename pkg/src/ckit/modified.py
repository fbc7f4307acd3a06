"""The modified complexity ||n||_1 (products and +1 only) and its compact H.

H is built by the same pipeline as K with ``||.||_1`` in place of ``||.||``.
Comparing prefixes can only fail to find a difference; an empty diff says
nothing about whether H and K agree beyond the horizon.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numba
import numpy as np

from .compact import KPrefix, build_k_prefix
from .complexity import (DEFAULT_MEMORY_LIMIT, ComplexityTable, Split,
                         estimate_memory)
from .errors import NotFoundError, ResourceLimitError
from .frac3 import Frac3
from .stability import DEFAULT_SETTLE_WINDOW

NO_SEPARATION = "no separation found at horizon"


@numba.njit(cache=True)
def _fill_modified(values):
    n_max = values.shape[0] - 1
    values[1] = 1
    for n in range(2, n_max + 1):
        best = int(values[n - 1]) + 1
        d = 2
        while d * d <= n:
            if n % d == 0:
                t = int(values[d]) + int(values[n // d])
                if t < best:
                    best = t
            d += 1
        values[n] = best


class ModifiedTable(ComplexityTable):
    """``||n||_1`` for ``1 <= n <= max_n``."""

    kind = "modified"

    def __repr__(self) -> str:
        return f"ModifiedTable(max_n={self.max_n})"

    @property
    def exact(self) -> bool:
        return True

    def split(self, n: int) -> Split:
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
        if int(v[n - 1]) + 1 == target:
            return Split("sum", 1, n - 1)
        raise NotFoundError(f"no split of {n} attains the stored value {target}")


def build_modified_table(max_n: int, memory_limit: int = DEFAULT_MEMORY_LIMIT) -> ModifiedTable:
    if max_n < 1:
        raise ValueError(f"table bound must be >= 1, got {max_n}")
    need = estimate_memory(max_n)
    if need > memory_limit:
        raise ResourceLimitError(
            f"table of size {max_n} needs about {need} bytes, limit is {memory_limit}")
    values = np.zeros(max_n + 1, dtype=np.uint8)
    _fill_modified(values)
    return ModifiedTable(values)


def build_h_prefix(modtable: ModifiedTable, cutoff: Frac3,
                   settle_window: int = DEFAULT_SETTLE_WINDOW) -> KPrefix:
    return build_k_prefix(modtable, cutoff, settle_window)


def probe_numerators(count: int = 21) -> list[int]:
    """``73 (3^k + 1) + 6`` for ``k < count``: candidates where the two calculi may part."""
    return [73 * (3 ** k + 1) + 6 for k in range(count)]


@dataclass
class PrefixDiff:
    cutoff: Frac3
    horizon: int
    only_in_k: list[Frac3] = field(default_factory=list)
    only_in_h: list[Frac3] = field(default_factory=list)
    label_mismatches: list[tuple[Frac3, str, str]] = field(default_factory=list)
    stable_mismatches: list[tuple[int, int, int]] = field(default_factory=list)  # (n, st, st_1)
    unresolved_probes: list[int] = field(default_factory=list)

    @property
    def empty(self) -> bool:
        return not (self.only_in_k or self.only_in_h or self.label_mismatches
                    or self.stable_mismatches)

    @property
    def verdict(self) -> str:
        if self.empty:
            return NO_SEPARATION
        return "separation found"

    def to_record(self) -> dict:
        return {
            "cutoff": str(self.cutoff),
            "horizon": self.horizon,
            "verdict": self.verdict,
            "only_in_k": [str(f) for f in self.only_in_k],
            "only_in_h": [str(f) for f in self.only_in_h],
            "label_mismatches": [[str(f), a, b] for f, a, b in self.label_mismatches],
            "stable_mismatches": [list(t) for t in self.stable_mismatches],
            "unresolved_probes": self.unresolved_probes,
        }


def compare_prefixes(k: KPrefix, h: KPrefix, probes: list[int] | None = None) -> PrefixDiff:
    """Fractions in exactly one prefix, and numerators whose settled stable values differ."""
    if k.cutoff != h.cutoff:
        raise ValueError(f"prefixes have different cutoffs: {k.cutoff} vs {h.cutoff}")
    horizon = min(k.completeness_horizon, h.completeness_horizon)
    diff = PrefixDiff(k.cutoff, horizon)
    # restrict to numerators both sides cover
    kk = {f: lab for f, lab in zip(k.fracs, k.labels) if f.m <= horizon}
    hh = {f: lab for f, lab in zip(h.fracs, h.labels) if f.m <= horizon}
    diff.only_in_k = sorted(set(kk) - set(hh), reverse=True)
    diff.only_in_h = sorted(set(hh) - set(kk), reverse=True)
    for f in set(kk) & set(hh):
        if kk[f] != hh[f]:
            diff.label_mismatches.append((f, str(kk[f]), str(hh[f])))
    diff.label_mismatches.sort(key=lambda t: t[0], reverse=True)
    if k.stable is not None and h.stable is not None:
        sk, sh = k.stable, h.stable
        lim = min(sk.limit, sh.limit)
        both = sk.settled[1: lim + 1] & sh.settled[1: lim + 1]
        bad = np.flatnonzero(both & (sk.value[1: lim + 1] != sh.value[1: lim + 1])) + 1
        diff.stable_mismatches = [(int(n), int(sk.value[n]), int(sh.value[n])) for n in bad]
        for n in probes if probes is not None else probe_numerators():
            if n > lim or not (sk.settled[n] and sh.settled[n]):
                diff.unresolved_probes.append(n)
    return diff

