"""Binary PGM (P5, maxval 255) reading/writing and raster-order flattening."""
from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .errors import BadHeader, BadMagic, LengthMismatch, TruncatedPixels, UnsupportedMaxval

_WHITESPACE = b" \t\n\r\v\f"


@dataclass(frozen=True, eq=False)
class GrayImage:
    width: int
    height: int
    pixels: np.ndarray  # flat, row-major, uint8

    def __post_init__(self):
        if self.width < 1 or self.height < 1:
            raise ValueError(f"image dimensions must be positive, got {self.width}x{self.height}")
        pixels = np.asarray(self.pixels, dtype=np.uint8).reshape(-1)
        if len(pixels) != self.width * self.height:
            raise LengthMismatch(
                f"{self.width}x{self.height} image needs {self.width * self.height} pixels, got {len(pixels)}")
        object.__setattr__(self, "pixels", pixels)

    def __eq__(self, other):
        if not isinstance(other, GrayImage):
            return NotImplemented
        return (self.width, self.height) == (other.width, other.height) and np.array_equal(
            self.pixels, other.pixels)

    @property
    def size(self) -> int:
        return self.width * self.height

    def as_array(self) -> np.ndarray:
        """2D ``(height, width)`` view of the pixels."""
        return self.pixels.reshape(self.height, self.width)

    @classmethod
    def from_array(cls, arr) -> "GrayImage":
        arr = np.asarray(arr)
        if arr.ndim != 2:
            raise ValueError(f"expected a 2D array, got shape {arr.shape}")
        return cls(arr.shape[1], arr.shape[0], arr.reshape(-1))


def _header_tokens(data: bytes, count: int) -> tuple[list[bytes], int]:
    """Pull ``count`` whitespace-separated tokens, skipping ``#`` comments.

    Returns the tokens and the offset just past the single whitespace byte
    that terminates the last one.
    """
    tokens = []
    pos = 0
    n = len(data)
    while len(tokens) < count:
        while pos < n and data[pos] in _WHITESPACE:
            pos += 1
        if pos >= n:
            raise BadHeader("header ended early")
        if data[pos] == ord("#"):
            while pos < n and data[pos] not in b"\r\n":
                pos += 1
            continue
        start = pos
        while pos < n and data[pos] not in _WHITESPACE and data[pos] != ord("#"):
            pos += 1
        tokens.append(data[start:pos])
    if pos >= n or data[pos] not in _WHITESPACE:
        raise BadHeader("missing whitespace after maxval")
    return tokens, pos + 1


def read_pgm(data: bytes) -> GrayImage:
    if data[:2] != b"P5":
        raise BadMagic(f"not a binary PGM: magic {data[:2]!r}")
    tokens, offset = _header_tokens(data[2:], 3)
    offset += 2
    try:
        width, height, maxval = (int(t) for t in tokens)
    except ValueError:
        raise BadHeader(f"non-integer header field in {tokens!r}") from None
    if width < 1 or height < 1:
        raise BadHeader(f"bad dimensions {width}x{height}")
    if maxval != 255:
        raise UnsupportedMaxval(f"only maxval 255 is supported, got {maxval}")
    npix = width * height
    body = data[offset:offset + npix]
    if len(body) < npix:
        raise TruncatedPixels(f"expected {npix} pixel bytes, found {len(body)}")
    return GrayImage(width, height, np.frombuffer(body, dtype=np.uint8).copy())


def write_pgm(img: GrayImage) -> bytes:
    return b"P5\n%d %d\n255\n" % (img.width, img.height) + img.pixels.tobytes()


def load_pgm(path) -> GrayImage:
    return read_pgm(Path(path).read_bytes())


def save_pgm(img: GrayImage, path) -> None:
    Path(path).write_bytes(write_pgm(img))


def to_sequence(img: GrayImage) -> np.ndarray:
    return img.pixels.copy()


def from_sequence(seq, width: int, height: int) -> GrayImage:
    seq = np.asarray(seq)
    if len(seq) != width * height:
        raise LengthMismatch(f"{len(seq)} pixels do not fill a {width}x{height} image")
    return GrayImage(width, height, seq)
