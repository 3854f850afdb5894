"""Recovery rate, difference images and byte histograms."""
from __future__ import annotations

import numpy as np

from .cipher import mod_sub
from .errors import LengthMismatch


def _pair(a, b):
    a = np.asarray(a, dtype=np.uint8)
    b = np.asarray(b, dtype=np.uint8)
    if a.shape != b.shape:
        raise LengthMismatch(f"sequences differ in length: {len(a)} vs {len(b)}")
    return a, b


def recovery_rate(recovered, truth) -> float:
    """Percentage of positions where the two byte sequences agree."""
    recovered, truth = _pair(recovered, truth)
    if recovered.size == 0:
        raise ValueError("recovery rate of an empty image is undefined")
    return 100.0 * np.count_nonzero(recovered == truth) / recovered.size


def difference_image(a, b) -> np.ndarray:
    a, b = _pair(a, b)
    return mod_sub(a, b)


def histogram(seq) -> np.ndarray:
    return np.bincount(np.asarray(seq, dtype=np.uint8).reshape(-1), minlength=256).astype(np.int64)


def histogram_csv(counts) -> str:
    counts = np.asarray(counts)
    if counts.shape != (256,):
        raise ValueError("a histogram has exactly 256 bins")
    lines = ["value,count"] + [f"{value},{int(count)}" for value, count in enumerate(counts)]
    return "\n".join(lines) + "\n"


def parse_histogram_csv(text: str) -> np.ndarray:
    lines = text.strip().splitlines()
    if not lines or lines[0].strip() != "value,count":
        raise ValueError("missing 'value,count' header")
    counts = np.zeros(256, dtype=np.int64)
    for line in lines[1:]:
        value, count = line.split(",")
        counts[int(value)] = int(count)
    return counts
