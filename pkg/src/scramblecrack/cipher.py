"""Mod-256 masking followed by position scrambling, and its inverse.

Encryption writes ``c[v[i]] = (p[i] + k[i]) mod 256``. Decryption only needs
the pair ``(v, k)``, so a legitimately derived key and an attacker's recovered
key go through the same :func:`decrypt`.
"""
from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .errors import InvalidKey, LengthMismatch
from .keystream import Keystreams, pack_vk, unpack_vk

EQUIVALENT_KEY_MAGIC = b"EQKY"


def is_permutation(v) -> bool:
    v = np.asarray(v)
    if v.ndim != 1:
        return False
    if len(v) == 0:
        return True
    if v.min() < 0 or v.max() >= len(v):
        return False
    return bool(np.all(np.bincount(v, minlength=len(v)) == 1))


@dataclass(frozen=True, eq=False)
class EquivalentKey:
    """Scrambling permutation ``v`` (0-based) and byte mask ``k``."""

    v: np.ndarray
    k: np.ndarray

    def __post_init__(self):
        v = np.asarray(self.v, dtype=np.int64)
        k = np.asarray(self.k)
        if len(v) != len(k):
            raise LengthMismatch(f"v has {len(v)} entries but k has {len(k)}")
        if k.size and (k.min() < 0 or k.max() > 255):
            raise InvalidKey("mask entries must be bytes")
        if not is_permutation(v):
            raise InvalidKey("v is not a permutation of range(L)")
        object.__setattr__(self, "v", v)
        object.__setattr__(self, "k", k.astype(np.uint8))

    def __len__(self):
        return len(self.v)

    def __eq__(self, other):
        if not isinstance(other, EquivalentKey):
            return NotImplemented
        return np.array_equal(self.v, other.v) and np.array_equal(self.k, other.k)

    @classmethod
    def from_keystreams(cls, ks: Keystreams) -> "EquivalentKey":
        return cls(ks.v, ks.k)

    def to_bytes(self) -> bytes:
        return pack_vk(EQUIVALENT_KEY_MAGIC, self.v, self.k)

    @classmethod
    def from_bytes(cls, data: bytes) -> "EquivalentKey":
        return cls(*unpack_vk(EQUIVALENT_KEY_MAGIC, data))

    def save(self, path) -> None:
        Path(path).write_bytes(self.to_bytes())

    @classmethod
    def load(cls, path) -> "EquivalentKey":
        return cls.from_bytes(Path(path).read_bytes())


def mod_add(a, b):
    """``(a + b) mod 256`` for bytes or byte arrays."""
    if np.isscalar(a) and np.isscalar(b):
        return (int(a) + int(b)) % 256
    return ((np.asarray(a, dtype=np.int16) + np.asarray(b, dtype=np.int16)) % 256).astype(np.uint8)


def mod_sub(a, b):
    """``(a - b + 256) mod 256`` for bytes or byte arrays."""
    if np.isscalar(a) and np.isscalar(b):
        return (int(a) - int(b) + 256) % 256
    return ((np.asarray(a, dtype=np.int16) - np.asarray(b, dtype=np.int16)) % 256).astype(np.uint8)


def _as_bytes(seq) -> np.ndarray:
    arr = np.asarray(seq)
    if arr.ndim != 1:
        raise ValueError(f"expected a flat pixel sequence, got shape {arr.shape}")
    if arr.dtype != np.uint8:
        if arr.size and (arr.min() < 0 or arr.max() > 255):
            raise ValueError("pixel values must lie in [0, 255]")
        arr = arr.astype(np.uint8)
    return arr


def encrypt(p, ks) -> np.ndarray:
    """Encrypt the flat pixel sequence ``p``. ``ks`` is anything carrying ``v`` and ``k``."""
    p = _as_bytes(p)
    if len(p) != len(ks.v):
        raise LengthMismatch(f"plaintext has {len(p)} pixels, keystreams cover {len(ks.v)}")
    c = np.empty_like(p)
    c[ks.v] = mod_add(p, ks.k)
    return c


def decrypt(c, ek) -> np.ndarray:
    c = _as_bytes(c)
    if len(c) != len(ek.v):
        raise LengthMismatch(f"ciphertext has {len(c)} pixels, key covers {len(ek.v)}")
    return mod_sub(c[ek.v], ek.k)
