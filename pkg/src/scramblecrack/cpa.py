"""Chosen-plaintext attacks recovering the equivalent key ``(v, k)``.

Three attacks with decreasing query cost:

* :func:`zhang_method1` probes one pixel per query, ``1 + L`` queries.
* :func:`zhang_method2` probes 255 pixels per query with distinct gray
  values, ``1 + ceil(L / 255)`` queries.
* :func:`optimal_cpa` recovers the mask first with a constant image, after
  which the cipher is a pure permutation. Base-256 index images then locate
  every pixel, ``1 + ceil(log256 L)`` queries.
"""
from __future__ import annotations

import numpy as np

from .cipher import EquivalentKey, mod_sub
from .errors import AmbiguousDifference, InvalidIndex
from .oracle import EncryptionOracle


def zhang_method1(oracle: EncryptionOracle) -> EquivalentKey:
    n = oracle.length
    dark = np.zeros(n, dtype=np.uint8)
    c_dark = oracle.chosen_query(dark)
    v = np.empty(n, dtype=np.int64)
    probe = dark.copy()
    for i in range(n):
        probe[i] = 1
        diff = mod_sub(c_dark, oracle.chosen_query(probe))
        probe[i] = 0
        hits = np.flatnonzero(diff)
        if len(hits) != 1:
            raise AmbiguousDifference(f"probe of pixel {i} changed {len(hits)} cipher pixels")
        v[i] = hits[0]
    # dark plaintext: c(v(i)) = 0 + k(i)
    return EquivalentKey(v, c_dark[v])


def method2_query_count(length: int) -> int:
    return 1 + -(-length // 255)


def zhang_method2(oracle: EncryptionOracle) -> EquivalentKey:
    n = oracle.length
    c_dark = oracle.chosen_query(np.zeros(n, dtype=np.uint8))
    v = np.empty(n, dtype=np.int64)
    for start in range(0, n, 255):
        m = min(255, n - start)
        probe = np.zeros(n, dtype=np.uint8)
        probe[start:start + m] = np.arange(1, m + 1)
        diff = mod_sub(oracle.chosen_query(probe), c_dark)
        hits = np.flatnonzero(diff)
        values = diff[hits].astype(np.int64)
        if len(hits) != m or not np.array_equal(np.sort(values), np.arange(1, m + 1)):
            raise AmbiguousDifference(
                f"round at offset {start}: difference image does not hold the values 1..{m} once each")
        # gray value g was placed at plain position start + g - 1
        v[start + values - 1] = hits
    return EquivalentKey(v, c_dark[v])


def recover_mask(oracle: EncryptionOracle, d: int = 0) -> np.ndarray:
    """Mask indexed by cipher position: ``r[j] = c[j] - d`` for a constant image of value ``d``.

    Satisfies ``r[v[i]] == k[i]``.
    """
    if not 0 <= d <= 255:
        raise ValueError(f"constant gray value must be a byte, got {d}")
    c = oracle.chosen_query(np.full(oracle.length, d, dtype=np.uint8))
    return mod_sub(c, d)


def index_image_count(length: int) -> int:
    """Number of base-256 digit images needed to label ``length`` positions."""
    if length < 1:
        raise ValueError("length must be positive")
    # integer form of ceil(log2(L) / 8); immune to float rounding at powers of two
    return -(-(length - 1).bit_length() // 8) if length > 1 else 0


def optimal_query_count(length: int) -> int:
    return 1 + index_image_count(length)


def optimal_cpa(oracle: EncryptionOracle, d: int = 0) -> EquivalentKey:
    n = oracle.length
    r = recover_mask(oracle, d)
    positions = np.arange(n, dtype=np.int64)
    labels = np.zeros(n, dtype=np.int64)
    for t in range(index_image_count(n)):
        digit_image = ((positions >> (8 * t)) & 0xFF).astype(np.uint8)
        digits = mod_sub(oracle.chosen_query(digit_image), r)
        labels |= digits.astype(np.int64) << (8 * t)
    # labels[j] is the plain index whose pixel landed at cipher position j
    if labels.max(initial=0) >= n:
        raise InvalidIndex(f"reassembled plain index {labels.max()} out of range for L={n}")
    if not np.all(np.bincount(labels, minlength=n) == 1):
        raise InvalidIndex("two cipher positions decode to the same plain index")
    v = np.empty(n, dtype=np.int64)
    v[labels] = positions
    return EquivalentKey(v, r[v])

