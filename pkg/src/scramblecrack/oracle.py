"""Simulated challenger that holds the secret and answers attack queries."""
from __future__ import annotations

import threading
from dataclasses import dataclass

import numpy as np

from .cipher import EquivalentKey, encrypt
from .errors import LengthMismatch
from .image_io import GrayImage
from .keystream import SecretKey, derive_keystreams


@dataclass(frozen=True, eq=False)
class KnownPair:
    p: np.ndarray
    c: np.ndarray


class EncryptionOracle:
    """Encrypts chosen plaintexts of a fixed length under a hidden key.

    Keystreams are derived once at construction. Every call to
    :meth:`chosen_query` is counted under a lock. Known-plaintext material
    handed out by :meth:`known_pairs` is not a chosen query and is not counted.
    """

    def __init__(self, key: SecretKey, length: int):
        self._init(derive_keystreams(key, length))

    @classmethod
    def from_keystreams(cls, ks) -> "EncryptionOracle":
        """Build an oracle directly from a ``(v, k)`` carrier, e.g. toy keystreams."""
        oracle = cls.__new__(cls)
        oracle._init(ks)
        return oracle

    def _init(self, ks):
        self._ks = EquivalentKey(ks.v, ks.k)
        self._lock = threading.Lock()
        self._query_count = 0

    @property
    def length(self) -> int:
        return len(self._ks)

    @property
    def query_count(self) -> int:
        return self._query_count

    def chosen_query(self, p) -> np.ndarray:
        p = np.asarray(p)
        if len(p) != self.length:
            raise LengthMismatch(f"oracle encrypts {self.length} pixels, query has {len(p)}")
        c = encrypt(p, self._ks)
        with self._lock:
            self._query_count += 1
        return c

    def known_pairs(self, images) -> list[KnownPair]:
        pairs = []
        for img in images:
            p = img.pixels if isinstance(img, GrayImage) else np.asarray(img, dtype=np.uint8)
            if len(p) != self.length:
                raise LengthMismatch(f"oracle encrypts {self.length} pixels, image has {len(p)}")
            pairs.append(KnownPair(p.copy(), encrypt(p, self._ks)))
        return pairs

    def reveal(self) -> EquivalentKey:
        """Ground-truth ``(v, k)``. Attacks must not call this; it exists for scoring."""
        return self._ks


def chosen_query(oracle: EncryptionOracle, p) -> np.ndarray:
    return oracle.chosen_query(p)


def known_pairs(oracle: EncryptionOracle, images) -> list[KnownPair]:
    return oracle.known_pairs(images)
