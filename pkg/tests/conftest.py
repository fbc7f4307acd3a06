import os
from fractions import Fraction
from pathlib import Path

import pytest

from ckit import build_complexity_table, build_k_prefix, build_modified_table
from ckit.cache import load_table, save_table
from ckit.frac3 import Frac3

# numerators up to 45e6 / 27 reach every listed entry the tests compare against
BIG_N = 45_000_000


def parse_listing(items):
    """``["2", "*128/81", ...]`` -> ``[(Frac3, sporadic), ...]``."""
    out = []
    for s in items:
        bold = s.startswith("*")
        out.append((Frac3.from_fraction(Fraction(s.lstrip("*"))), bold))
    return out


def frac(text: str) -> Frac3:
    return Frac3.from_fraction(Fraction(text))


@pytest.fixture(scope="session")
def small_table():
    return build_complexity_table(100_000)


@pytest.fixture(scope="session")
def desk_table():
    return build_complexity_table(1_000_000)


@pytest.fixture(scope="session")
def desk_modified():
    return build_modified_table(1_000_000)


@pytest.fixture(scope="session")
def big_table():
    cache_dir = os.environ.get("CKIT_CACHE_DIR")
    path = Path(cache_dir) / f"exhaustive-{BIG_N}.ckit" if cache_dir else None
    if path is not None and path.exists():
        return load_table(path)
    table = build_complexity_table(BIG_N)
    if path is not None:
        path.parent.mkdir(parents=True, exist_ok=True)
        save_table(table, path)
    return table


@pytest.fixture(scope="session")
def big_prefix(big_table):
    return build_k_prefix(big_table, Frac3(1, 1))
