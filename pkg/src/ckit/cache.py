"""On-disk table cache and OEIS b-file reading.

Cache layout: ``b"CKIT"``, version byte ``0x01``, ``N`` as u64 little-endian,
a policy byte (0 exhaustive, 1 bounded followed by ``B`` as u64 LE,
2 modified), then the ``N`` value bytes for ``n = 1..N``.
"""
from __future__ import annotations

import os
import struct
from pathlib import Path

import numpy as np

from .complexity import EXHAUSTIVE, ComplexityTable, CutoffPolicy
from .errors import CacheFormatError
from .modified import ModifiedTable

MAGIC = b"CKIT"
VERSION = 1
CACHE_ENV = "CKIT_CACHE_DIR"

_POLICY_EXHAUSTIVE, _POLICY_BOUNDED, _POLICY_MODIFIED = 0, 1, 2


def encode_header(table: ComplexityTable) -> bytes:
    head = MAGIC + bytes([VERSION]) + struct.pack("<Q", table.max_n)
    if isinstance(table, ModifiedTable):
        return head + bytes([_POLICY_MODIFIED])
    if table.policy.is_exhaustive:
        return head + bytes([_POLICY_EXHAUSTIVE])
    return head + bytes([_POLICY_BOUNDED]) + struct.pack("<Q", table.policy.bound)


def save_table(table: ComplexityTable, path: str | os.PathLike) -> Path:
    path = Path(path)
    tmp = path.with_name(path.name + ".part")
    with open(tmp, "wb") as fh:
        fh.write(encode_header(table))
        fh.write(table.values[1:].tobytes())
    os.replace(tmp, path)
    return path


def load_table(path: str | os.PathLike) -> ComplexityTable:
    path = Path(path)
    data = path.read_bytes()
    if data[:4] != MAGIC:
        raise CacheFormatError(f"{path}: not a table cache (bad magic)")
    if len(data) < 14 or data[4] != VERSION:
        raise CacheFormatError(f"{path}: unsupported cache version")
    (n,) = struct.unpack_from("<Q", data, 5)
    policy_byte = data[13]
    pos = 14
    if policy_byte == _POLICY_BOUNDED:
        if len(data) < 22:
            raise CacheFormatError(f"{path}: truncated header")
        (bound,) = struct.unpack_from("<Q", data, pos)
        pos += 8
        policy = CutoffPolicy.bounded(bound)
    elif policy_byte in (_POLICY_EXHAUSTIVE, _POLICY_MODIFIED):
        policy = EXHAUSTIVE
    else:
        raise CacheFormatError(f"{path}: unknown policy byte {policy_byte}")
    if len(data) - pos != n:
        raise CacheFormatError(f"{path}: expected {n} value bytes, found {len(data) - pos}")
    values = np.zeros(n + 1, dtype=np.uint8)
    values[1:] = np.frombuffer(data, dtype=np.uint8, offset=pos)
    if policy_byte == _POLICY_MODIFIED:
        return ModifiedTable(values)
    return ComplexityTable(values, policy)


def default_cache_dir() -> Path:
    env = os.environ.get(CACHE_ENV)
    if env:
        return Path(env)
    return Path.home() / ".cache" / "ckit"


def default_table_path(max_n: int, kind: str = "exhaustive") -> Path:
    tag = kind.replace(":", "-")
    return default_cache_dir() / f"{tag}-{max_n}.ckit"


class BFileError(ValueError):
    def __init__(self, path, lineno: int, line: str):
        super().__init__(f"{path}:{lineno}: cannot parse b-file line {line!r}")
        self.lineno = lineno


def read_bfile(path: str | os.PathLike) -> dict[int, int]:
    """``n value`` lines; ``#`` starts a comment; blank lines are skipped."""
    out: dict[int, int] = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            parts = line.split()
            if len(parts) != 2:
                raise BFileError(path, lineno, raw.rstrip("\n"))
            try:
                n, v = int(parts[0]), int(parts[1])
            except ValueError:
                raise BFileError(path, lineno, raw.rstrip("\n")) from None
            out[n] = v
    return out
