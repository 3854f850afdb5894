"""Known-plaintext attack based on self-difference matrices (SDMs).

For one pixel position the SDM of its ``n`` values across the known images is
the table of pairwise mod-256 differences. The additive mask is identical for
all images at a given position, so it cancels: the SDM of plain position ``i``
equals the SDM of cipher position ``v[i]``. Matching SDMs gives every plain
position a candidate set of cipher positions. The attack then resolves the
candidates greedily.
"""
from __future__ import annotations

import math
import os
import time
from collections import defaultdict
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .cipher import EquivalentKey, mod_sub
from .errors import InsufficientPairs, LengthMismatch


@dataclass(frozen=True, eq=False)
class Sdm:
    entries: np.ndarray  # (n, n) uint8, symmetric, zero diagonal

    @property
    def n(self) -> int:
        return self.entries.shape[0]

    @property
    def tau(self) -> int:
        return self.n * (self.n - 1) // 2

    def key(self) -> bytes:
        """Canonical form: upper-triangle entries in row-major order."""
        return self.entries[np.triu_indices(self.n, 1)].tobytes()

    def __eq__(self, other):
        if not isinstance(other, Sdm):
            return NotImplemented
        return np.array_equal(self.entries, other.entries)


def compute_sdm(column) -> Sdm:
    """SDM of the ``n`` values one pixel position takes across ``n`` images."""
    col = np.asarray(column, dtype=np.int16)
    if col.ndim != 1 or len(col) < 1:
        raise ValueError("an SDM needs a non-empty 1D column")
    upper = (col[:, None] - col[None, :]) % 256  # row r, column c: p_r - p_c
    entries = np.triu(upper, 1)
    entries = entries + entries.T
    return Sdm(entries.astype(np.uint8))


def sdm_invariance_check(plain_column, cipher_column) -> bool:
    plain_column = np.asarray(plain_column)
    cipher_column = np.asarray(cipher_column)
    if len(plain_column) != len(cipher_column):
        raise LengthMismatch("columns differ in length")
    return compute_sdm(plain_column) == compute_sdm(cipher_column)


def _threads() -> int:
    try:
        return max(1, int(os.environ.get("WORKBENCH_THREADS", "")))
    except ValueError:
        return os.cpu_count() or 1


def sdm_keys(images) -> np.ndarray:
    """Upper-triangle SDM entries for every position at once, shape ``(L, tau)``.

    ``images`` is a sequence of ``n`` flat byte arrays of length ``L``. Row
    ``i`` equals ``compute_sdm(column i).key()`` read as bytes.
    """
    stack = np.stack([np.asarray(x, dtype=np.uint8) for x in images], axis=1)
    n = stack.shape[1]
    rows, cols = np.triu_indices(n, 1)

    def chunk(lo_hi):
        lo, hi = lo_hi
        part = stack[lo:hi]
        return mod_sub(part[:, rows], part[:, cols])

    length = stack.shape[0]
    workers = _threads()
    if workers == 1 or length < 65536:
        return chunk((0, length))
    bounds = np.linspace(0, length, workers + 1).astype(int)
    with ThreadPoolExecutor(max_workers=workers) as pool:
        parts = list(pool.map(chunk, zip(bounds[:-1], bounds[1:])))
    return np.concatenate(parts)


def _row_bytes(keys: np.ndarray) -> list[bytes]:
    width = keys.shape[1]
    raw = np.ascontiguousarray(keys).tobytes()
    return [raw[i:i + width] for i in range(0, len(raw), width)]


class CandidateIndex:
    """Multimap from SDM key to the cipher positions that carry it.

    Each bucket is kept in ascending position order, and consumed positions
    are removed from their bucket. A bucket's current contents are therefore
    exactly the set a full scan over unconsumed positions would return, in the
    same order.
    """

    def __init__(self, cipher_keys: np.ndarray):
        self._buckets: dict[bytes, list[int]] = defaultdict(list)
        for j, key in enumerate(_row_bytes(cipher_keys)):
            self._buckets[key].append(j)

    def candidates(self, key: bytes) -> list[int]:
        return self._buckets.get(key, [])

    def take(self, key: bytes, index: int) -> int:
        return self._buckets[key].pop(index)

    def __len__(self):
        return sum(len(b) for b in self._buckets.values())


@dataclass
class KpaReport:
    n: int
    length: int
    seed: int
    singleton: int = 0
    multi: int = 0
    empty: int = 0
    elapsed: float = 0.0
    deferred: list[int] = field(default_factory=list, repr=False)

    def text(self) -> str:
        return (f"attack: kpa\nn: {self.n}\nL: {self.length}\nseed: {self.seed}\n"
                f"singleton: {self.singleton}\nmulti: {self.multi}\nempty: {self.empty}\n"
                f"elapsed_s: {self.elapsed:.3f}\n")


def _check_pairs(pairs):
    if len(pairs) < 2:
        raise InsufficientPairs(f"the attack needs at least 2 known pairs, got {len(pairs)}")
    length = len(pairs[0].p)
    for pair in pairs:
        if len(pair.p) != length or len(pair.c) != length:
            raise LengthMismatch("all known pairs must share one length")
    return length


def kpa_attack_with_report(pairs, seed: int = 0) -> tuple[EquivalentKey, KpaReport]:
    """Run the SDM attack and also return candidate-set statistics.

    Randomness, drawn from ``np.random.default_rng(seed)``:

    1. ``u = rng.random(L)`` up front, one uniform per plain position.
    2. Plain position ``i`` (ascending) with a non-empty candidate list ``S``
       takes ``S[floor(u[i] * len(S))]``. ``S`` is in ascending order and
       excludes consumed positions.
    3. Plain positions left without candidates are filled in ascending order
       from ``rng.permutation`` of the unconsumed cipher positions (ascending).

    A fixed seed therefore yields the same key no matter how the candidate
    sets are found.
    """
    start = time.perf_counter()
    length = _check_pairs(pairs)
    report = KpaReport(n=len(pairs), length=length, seed=seed)
    plain_keys = _row_bytes(sdm_keys([pr.p for pr in pairs]))
    index = CandidateIndex(sdm_keys([pr.c for pr in pairs]))

    rng = np.random.default_rng(seed)
    draws = rng.random(length)
    v = np.full(length, -1, dtype=np.int64)
    consumed = np.zeros(length, dtype=bool)
    for i, key in enumerate(plain_keys):
        size = len(index.candidates(key))
        if size == 0:
            report.empty += 1
            report.deferred.append(i)
            continue
        if size == 1:
            report.singleton += 1
        else:
            report.multi += 1
        j = index.take(key, int(draws[i] * size))
        v[i] = j
        consumed[j] = True
    if report.deferred:
        leftovers = rng.permutation(np.flatnonzero(~consumed))
        v[np.asarray(report.deferred)] = leftovers

    first = pairs[0]
    k = mod_sub(np.asarray(first.c, dtype=np.uint8)[v], first.p)
    report.elapsed = time.perf_counter() - start
    return EquivalentKey(v, k), report


def kpa_attack(pairs, seed: int = 0) -> EquivalentKey:
    return kpa_attack_with_report(pairs, seed)[0]


def success_threshold(tau: int, length: int) -> bool:
    """Whether ``tau`` SDM degrees of freedom make the attack succeed w.h.p. at size ``length``.

    ``256**tau * prod_{t<tau} (256 - t) / 256`` collapses to the falling
    factorial ``256 * 255 * ... * (256 - tau + 1)``, evaluated exactly.
    """
    if tau < 1:
        raise ValueError(f"tau must be positive, got {tau}")
    return math.perm(256, tau) > length


def min_known_images(length: int) -> int:
    """Smallest image count ``n >= 2`` that passes :func:`success_threshold`."""
    if length < 1:
        raise ValueError(f"length must be positive, got {length}")
    n = 2
    while n * (n - 1) // 2 <= 256:
        if success_threshold(n * (n - 1) // 2, length):
            return n
        n += 1
    raise ValueError(f"no image count satisfies the threshold for L={length}")
