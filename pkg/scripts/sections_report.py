"""Print successive sections of T_0, T_1 and T_2 in the tabular layout of the CLI.

    python3 scripts/sections_report.py --max 45000000 --sections 8
"""
from __future__ import annotations

import argparse
from dataclasses import dataclass

from _common import cached_table
from ckit import build_k_prefix, sections
from ckit.cli import section_text
from ckit.frac3 import Frac3


@dataclass
class Config:
    max_n: int = 45_000_000
    cutoff: str = "1/3^1"
    count: int = 8
    layers: tuple[int, ...] = (0, 1, 2)


def run(cfg: Config) -> None:
    table = cached_table(cfg.max_n)
    prefix = build_k_prefix(table, Frac3.parse(cfg.cutoff))
    print(f"{len(prefix)} points above {cfg.cutoff}, numerators <= {prefix.completeness_horizon}")
    for u in cfg.layers:
        print(f"\n==== T_{u} ====")
        for sec in sections(prefix, u, cfg.count):
            print()
            print(section_text(prefix, sec))


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max", type=int, default=Config.max_n)
    ap.add_argument("--cutoff", default=Config.cutoff)
    ap.add_argument("--sections", type=int, default=Config.count)
    a = ap.parse_args()
    run(Config(max_n=a.max, cutoff=a.cutoff, count=a.sections))
