"""Shared loading for the experiment scripts: cached tables by bound."""
from __future__ import annotations

import time

from ckit import build_complexity_table, build_modified_table
from ckit.cache import default_table_path, load_table, save_table


def cached_table(max_n: int, modified: bool = False):
    kind = "modified" if modified else "exhaustive"
    path = default_table_path(max_n, kind)
    if path.exists():
        return load_table(path)
    t0 = time.perf_counter()
    table = build_modified_table(max_n) if modified else build_complexity_table(max_n)
    print(f"built {kind} table N={max_n} in {time.perf_counter() - t0:.1f}s -> {path}")
    path.parent.mkdir(parents=True, exist_ok=True)
    save_table(table, path)
    return table
