"""Compare prefixes of K and H (the compact of the modified complexity) at one horizon."""
from __future__ import annotations

import argparse
from dataclasses import dataclass

import numpy as np

from _common import cached_table
from ckit import build_h_prefix, build_k_prefix, compare_prefixes
from ckit.frac3 import Frac3


@dataclass
class Config:
    max_n: int = 1_000_000
    cutoff: str = "4/3^2"


def run(cfg: Config) -> None:
    table = cached_table(cfg.max_n)
    mod = cached_table(cfg.max_n, modified=True)
    gap = mod.values[1:].astype(int) - table.values[1:]
    first = int(np.argmax(gap > 0)) + 1 if gap.any() else None
    print(f"||n||_1 - ||n||: max {gap.max()}, {int((gap > 0).sum())} n differ, first at {first}")
    cutoff = Frac3.parse(cfg.cutoff)
    diff = compare_prefixes(build_k_prefix(table, cutoff), build_h_prefix(mod, cutoff))
    print(f"K vs H above {cutoff.display()}: {diff.verdict} (numerators <= {diff.horizon})")
    if not diff.empty:
        print(diff.to_record())
    print(f"probes 73(3^k+1)+6 not decidable here: {len(diff.unresolved_probes)}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max", type=int, default=Config.max_n)
    ap.add_argument("--cutoff", default=Config.cutoff)
    a = ap.parse_args()
    run(Config(max_n=a.max, cutoff=a.cutoff))
