"""Kostant's partition function with a fixed part count.

``P_n(nu)`` counts multisets of exactly ``n`` positive roots summing to
``nu``. The memoized recurrence walks the positive roots in the fixed order of
:class:`~weylcohom.rootsys.RootSystem` and either skips the current root or
uses one more copy of it.
"""

from __future__ import annotations

import gzip
import json
import os
import threading
from collections import Counter
from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement
from pathlib import Path
from typing import Sequence, Union

from .errors import CacheMismatch, OracleTooLarge
from .rootsys import RootSystem, Weight

RECURRENCE_VERSION = "kostant-dp/1"
CACHE_FORMAT = "weylcohom.partition-table"
ORACLE_CAP = 12

Vector = tuple[int, ...]
NuLike = Union[Weight, Sequence]


def _integral_root_coords(nu: NuLike) -> Vector | None:
    coords = nu.root if isinstance(nu, Weight) else nu
    out = []
    for c in coords:
        c = Fraction(c)
        if c.denominator != 1 or c < 0:
            return None
        out.append(int(c))
    return tuple(out)


class PartitionTable:
    """Memo of ``count(nu, cutoff, parts)``; single writer.

    Every stored value is a pure function of its key, so two tables for the
    same root system can be merged freely (:meth:`merge`).
    """

    def __init__(self, rs: RootSystem):
        self.rs = rs
        self.root_system_id = rs.spec_hash
        self._roots: list[Vector] = [tuple(int(c) for c in b.root) for b in rs.positive_roots]
        self._heights = [sum(b) for b in self._roots]
        self._top = max(self._heights)
        self.memo: dict[tuple[Vector, int, int], int] = {}

    def __len__(self):
        return len(self.memo)

    def partition(self, nu: NuLike, n: int) -> int:
        if n < 0:
            return 0
        vec = _integral_root_coords(nu)
        if vec is None:
            return 0
        return self._count(vec, 0, n)

    __call__ = partition

    def _store(self, key, value: int) -> None:
        self.memo[key] = value

    def _count(self, nu: Vector, k: int, n: int) -> int:
        if n == 0:
            return 0 if any(nu) else 1
        if k == len(self._roots):
            return 0
        h = sum(nu)
        # remaining roots have heights in [heights[k], top]
        if h < n * self._heights[k] or h > n * self._top:
            return 0
        key = (nu, k, n)
        hit = self.memo.get(key)
        if hit is not None:
            return hit
        total = self._count(nu, k + 1, n)
        rest = tuple(a - b for a, b in zip(nu, self._roots[k]))
        if min(rest) >= 0:
            total += self._count(rest, k, n - 1)
        self._store(key, total)
        return total

    def merge(self, other: PartitionTable) -> None:
        if other.root_system_id != self.root_system_id:
            raise CacheMismatch("cannot merge tables for different root systems")
        for key, value in other.memo.items():
            mine = self.memo.setdefault(key, value)
            if mine != value:
                raise AssertionError(f"memo disagreement at {key}: {mine} != {value}")

    # persistence ------------------------------------------------------------

    def save(self, path: os.PathLike | str) -> None:
        payload = {
            "format": CACHE_FORMAT,
            "version": RECURRENCE_VERSION,
            "spec": self.rs.spec.name,
            "spec_hash": self.root_system_id,
            "entries": [[list(nu), k, n, str(v)] for (nu, k, n), v in sorted(self.memo.items())],
        }
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        tmp = path.with_suffix(path.suffix + ".tmp")
        with gzip.open(tmp, "wt", encoding="utf-8") as fh:
            json.dump(payload, fh, separators=(",", ":"))
        os.replace(tmp, path)

    def load(self, path: os.PathLike | str) -> int:
        """Merge entries from ``path``; returns the number loaded.

        Raises :class:`CacheMismatch` on a foreign format, recurrence version or
        root system, and ``ValueError``/``OSError`` on unreadable files.
        """
        with gzip.open(path, "rt", encoding="utf-8") as fh:
            payload = json.load(fh)
        if payload.get("format") != CACHE_FORMAT:
            raise CacheMismatch(f"{path}: not a partition table")
        if payload.get("version") != RECURRENCE_VERSION:
            raise CacheMismatch(f"{path}: recurrence version {payload.get('version')!r} != {RECURRENCE_VERSION!r}")
        if payload.get("spec_hash") != self.root_system_id:
            raise CacheMismatch(f"{path}: table is for {payload.get('spec')}, not {self.rs.spec.name}")
        rank = self.rs.rank
        for nu, k, n, v in payload["entries"]:
            if len(nu) != rank:
                raise ValueError(f"{path}: malformed entry")
            self.memo[(tuple(int(x) for x in nu), int(k), int(n))] = int(v)
        return len(payload["entries"])


class SharedPartitionTable(PartitionTable):
    """Table safe to share between threads.

    Lookups may race with inserts; because every value is determined by its
    key, a lookup either misses (and recomputes) or returns the final value.
    """

    def __init__(self, rs: RootSystem):
        super().__init__(rs)
        self._lock = threading.Lock()

    def _store(self, key, value: int) -> None:
        with self._lock:
            prev = self.memo.setdefault(key, value)
        if prev != value:
            raise AssertionError(f"memo disagreement at {key}")


def cache_path(cache_dir: os.PathLike | str, rs: RootSystem) -> Path:
    return Path(cache_dir) / f"partition-{rs.spec.name}-{rs.spec_hash}.json.gz"


# brute-force oracle --------------------------------------------------------


@lru_cache(maxsize=64)
def multiset_sums(rs: RootSystem, n: int) -> Counter:
    """Tally of root-coordinate sums over all multisets of ``n`` positive roots."""
    roots = [tuple(int(c) for c in b.root) for b in rs.positive_roots]
    tally: Counter = Counter()
    zero = (0,) * rs.rank
    for combo in combinations_with_replacement(range(len(roots)), n):
        total = zero
        for k in combo:
            total = tuple(a + b for a, b in zip(total, roots[k]))
        tally[total] += 1
    return tally


def partition_bruteforce(rs: RootSystem, nu: NuLike, n: int, cap: int = ORACLE_CAP) -> int:
    """Count size-``n`` multisets of positive roots summing to ``nu`` by enumeration."""
    coords = nu.root if isinstance(nu, Weight) else tuple(Fraction(c) for c in nu)
    if n > cap or sum(coords) > cap * rs.height(rs.highest_root):
        raise OracleTooLarge(f"oracle limited to n <= {cap} and height <= {cap} * height(highest root)")
    if n < 0:
        return 0
    vec = _integral_root_coords(coords)
    if vec is None:
        return 0
    return multiset_sums(rs, n)[vec]


def count_all_decompositions(rs: RootSystem, nu: NuLike) -> int:
    """Number of multisets of positive roots (any size) summing to ``nu``."""
    vec = _integral_root_coords(nu.root if isinstance(nu, Weight) else nu)
    if vec is None:
        return 0
    roots = [tuple(int(c) for c in b.root) for b in rs.positive_roots]

    def rec(rest: Vector, k: int) -> int:
        if not any(rest):
            return 1
        if k == len(roots):
            return 0
        total = 0
        cur = rest
        while min(cur) >= 0:
            total += rec(cur, k + 1)
            cur = tuple(a - b for a, b in zip(cur, roots[k]))
        return total

    return rec(vec, 0)
