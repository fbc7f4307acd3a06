"""Trace the sporadics of a T_0 section to families of nearby limits.

For each sporadic x the script looks for a limit L = n/3^k below the section
and a split n = a b with additive stable complexity such that
x = b (a 3^r + 1) / 3^(r + k).  Default: the section converging to 76/81.
"""
from __future__ import annotations

import argparse
from dataclasses import dataclass
from fractions import Fraction

from _common import cached_table
from ckit import build_k_prefix, section_at_limit
from ckit.compact import attribute_origins
from ckit.frac3 import Frac3


@dataclass
class Config:
    max_n: int = 45_000_000
    limit: str = "76/81"
    neighbours: int = 6  # later limits of T_1 tried as sources


def run(cfg: Config) -> None:
    table = cached_table(cfg.max_n)
    limit = Frac3.from_fraction(Fraction(cfg.limit))
    prefix = build_k_prefix(table, limit.scale3(-1))
    sec = section_at_limit(prefix, limit, 0)
    below = [f for f, r in zip(prefix.fracs, prefix.ranks) if r >= 1 and f < limit]
    sources = below[: cfg.neighbours]
    found = attribute_origins(sec, table, sources)
    print(f"section ({sec.limit.display()}, {sec.upper.display()}): {len(sec.members)} members, "
          f"{len(sec.sporadics)} sporadics")
    for x in sec.sporadics:
        hit = found.get(x)
        if hit is None:
            print(f"  {x.display():>16}  no family among {[s.display() for s in sources]}")
            continue
        lim, a, b, r = hit
        print(f"  {x.display():>16}  = {b}({a}*3^{r}+1)/3^{r + lim.k}   from {lim.display()}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max", type=int, default=Config.max_n)
    ap.add_argument("--limit", default=Config.limit)
    ap.add_argument("--neighbours", type=int, default=Config.neighbours)
    a = ap.parse_args()
    run(Config(max_n=a.max, limit=a.limit, neighbours=a.neighbours))
