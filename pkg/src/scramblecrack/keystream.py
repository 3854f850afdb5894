"""Keystream generation from the 2D coupled logistic map.

Indices are stored 0-based throughout the package. ``u`` and ``v`` are
permutations of ``range(L)``; the byte mask ``k`` is computed from the 1-based
index, ``k[i] = (u[i] + 1) % 256``, so it matches the textbook definition
``k(i) = u(i) mod 256``.

Orbits are computed with IEEE-754 doubles. They are reproducible on one
platform but may differ across FPU environments. The attacks never depend on
this because they treat the keystreams as opaque.
"""
from __future__ import annotations

import math
import struct
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .errors import BadKeyFile, InvalidKey, LengthMismatch, NonFiniteOrbit

KEYSTREAM_MAGIC = b"KSTM"


@dataclass(frozen=True)
class SecretKey:
    """Initial condition (x0, y0) and control parameters of the coupled map."""

    x0: float
    y0: float
    mu1: float
    mu2: float
    gamma1: float
    gamma2: float

    def __post_init__(self):
        values = self.as_tuple()
        if not all(math.isfinite(v) for v in values):
            raise InvalidKey(f"non-finite key component in {values}")
        if not (0.0 < self.x0 < 1.0 and 0.0 < self.y0 < 1.0):
            raise InvalidKey(f"x0 and y0 must lie in (0, 1), got {self.x0}, {self.y0}")

    def as_tuple(self) -> tuple[float, ...]:
        return (self.x0, self.y0, self.mu1, self.mu2, self.gamma1, self.gamma2)


# Key used for every figure of the original cipher paper's simulations.
PAPER_KEY = SecretKey(0.02145, 0.3678, 2.93, 3.17, 0.179, 0.139)


@dataclass(frozen=True)
class ChaoticOrbit:
    xs: np.ndarray
    ys: np.ndarray

    def __len__(self):
        return len(self.xs)


@dataclass(frozen=True, eq=False)
class Keystreams:
    """Index permutations ``u``, ``v`` (0-based) and the byte mask ``k``."""

    u: np.ndarray
    v: np.ndarray
    k: np.ndarray

    def __len__(self):
        return len(self.v)

    def __eq__(self, other):
        if not isinstance(other, Keystreams):
            return NotImplemented
        return (np.array_equal(self.u, other.u) and np.array_equal(self.v, other.v)
                and np.array_equal(self.k, other.k))


def iterate_map(key: SecretKey, length: int) -> ChaoticOrbit:
    """Iterate the coupled logistic map ``length`` times from ``(x0, y0)``.

    Both coordinates are updated simultaneously from the previous pair. The
    starting point is not part of the returned orbit.
    """
    if length < 1:
        raise ValueError(f"orbit length must be positive, got {length}")
    x, y = key.x0, key.y0
    m1, m2, g1, g2 = key.mu1, key.mu2, key.gamma1, key.gamma2
    xs = [0.0] * length
    ys = [0.0] * length
    isfinite = math.isfinite
    for i in range(length):
        x, y = m1 * x * (1 - x) + g1 * y * y, m2 * y * (1 - y) + g2 * (x * x + x * y)
        if not (isfinite(x) and isfinite(y)):
            raise NonFiniteOrbit(f"orbit diverged at iterate {i + 1} for key {key.as_tuple()}")
        xs[i] = x
        ys[i] = y
    return ChaoticOrbit(np.array(xs, dtype=np.float64), np.array(ys, dtype=np.float64))


def sort_to_index(seq) -> np.ndarray:
    """Return the 0-based indices that sort ``seq`` ascending (stable on ties)."""
    arr = np.asarray(seq, dtype=np.float64)
    if not np.all(np.isfinite(arr)):
        raise ValueError("cannot sort a sequence containing non-finite values")
    return np.argsort(arr, kind="stable")


def mask_from_index(u: np.ndarray) -> np.ndarray:
    return ((np.asarray(u, dtype=np.int64) + 1) % 256).astype(np.uint8)


def keystreams_from_orbit(orbit: ChaoticOrbit) -> Keystreams:
    u = sort_to_index(orbit.xs)
    v = sort_to_index(orbit.ys)
    return Keystreams(u=u, v=v, k=mask_from_index(u))


def derive_keystreams(key: SecretKey, length: int) -> Keystreams:
    return keystreams_from_orbit(iterate_map(key, length))


def random_key(rng: np.random.Generator, length: int = 4096, max_tries: int = 1000) -> SecretKey:
    """Draw a key near the published parameter region whose orbit stays finite.

    Roughly one draw in ten diverges and is discarded. ``length`` is the orbit
    length that must be finite.
    """
    for _ in range(max_tries):
        key = SecretKey(
            float(rng.uniform(0.01, 0.99)),
            float(rng.uniform(0.01, 0.99)),
            float(rng.uniform(2.75, 3.4)),
            float(rng.uniform(2.75, 3.4)),
            float(rng.uniform(0.1, 0.2)),
            float(rng.uniform(0.1, 0.2)),
        )
        try:
            iterate_map(key, length)
        except NonFiniteOrbit:
            continue
        return key
    raise RuntimeError("could not draw a key with a bounded orbit")


# --- key file -----------------------------------------------------------------

def format_key(key: SecretKey) -> str:
    return " ".join(repr(v) for v in key.as_tuple()) + "\n"


def parse_key(text: str) -> SecretKey:
    fields = text.split()
    if len(fields) != 6:
        raise BadKeyFile(f"expected 6 numbers in key file, found {len(fields)}")
    try:
        values = [float(f) for f in fields]
    except ValueError as exc:
        raise BadKeyFile(f"key file holds a non-numeric field: {exc}") from None
    return SecretKey(*values)


def load_key(path) -> SecretKey:
    return parse_key(Path(path).read_text(encoding="utf-8"))


def save_key(key: SecretKey, path) -> None:
    Path(path).write_text(format_key(key), encoding="utf-8")


# --- binary (v, k) dumps shared with the equivalent-key format ----------------

def pack_vk(magic: bytes, v, k) -> bytes:
    v = np.asarray(v)
    k = np.asarray(k)
    if len(v) != len(k):
        raise LengthMismatch(f"v has {len(v)} entries but k has {len(k)}")
    return (magic + struct.pack("<Q", len(v)) + v.astype("<u4").tobytes()
            + k.astype(np.uint8).tobytes())


def unpack_vk(magic: bytes, data: bytes) -> tuple[np.ndarray, np.ndarray]:
    if data[:4] != magic:
        raise BadKeyFile(f"expected magic {magic!r}, found {data[:4]!r}")
    if len(data) < 12:
        raise BadKeyFile("file too short for length field")
    (length,) = struct.unpack("<Q", data[4:12])
    expected = 12 + 5 * length
    if len(data) != expected:
        raise BadKeyFile(f"expected {expected} bytes for L={length}, got {len(data)}")
    v = np.frombuffer(data, dtype="<u4", count=length, offset=12).astype(np.int64)
    k = np.frombuffer(data, dtype=np.uint8, count=length, offset=12 + 4 * length).copy()
    return v, k


def dump_keystreams(ks: Keystreams) -> bytes:
    """Debug dump: only ``v`` and ``k`` are written since they determine the cipher."""
    return pack_vk(KEYSTREAM_MAGIC, ks.v, ks.k)


def load_keystream_dump(data: bytes) -> tuple[np.ndarray, np.ndarray]:
    return unpack_vk(KEYSTREAM_MAGIC, data)
