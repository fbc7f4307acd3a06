"""Wall time of the exhaustive and unpruned table builds for growing N."""
from __future__ import annotations

import argparse
import time
from dataclasses import dataclass, field

import numpy as np

from ckit import build_complexity_table, build_modified_table
from ckit.complexity import build_naive_table


@dataclass
class Config:
    sizes: list[int] = field(default_factory=lambda: [10**4, 10**5, 10**6, 10**7])
    naive_limit: int = 10**5


def timed(fn, n):
    t0 = time.perf_counter()
    out = fn(n)
    return out, time.perf_counter() - t0


def run(cfg: Config) -> None:
    build_complexity_table(10), build_naive_table(10), build_modified_table(10)  # compile
    print(f"{'N':>10} {'pruned':>9} {'unpruned':>9} {'modified':>9}")
    for n in cfg.sizes:
        t, tp = timed(build_complexity_table, n)
        _, tm = timed(build_modified_table, n)
        naive = "-"
        if n <= cfg.naive_limit:
            ref, tn = timed(build_naive_table, n)
            assert np.array_equal(ref.values, t.values)
            naive = f"{tn:.2f}s"
        print(f"{n:>10} {tp:>8.2f}s {naive:>9} {tm:>8.2f}s")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("sizes", type=int, nargs="*")
    a = ap.parse_args()
    run(Config(sizes=a.sizes) if a.sizes else Config())
