"""Natural 512x512 gray-scale test images from locally installed packages.

The classic test photographs (Lenna, Baboon, Peppers, ...) are not
redistributable here, so the set is drawn from scikit-image and matplotlib
sample data with the same profile: natural photographs, at least 512x512,
full 8-bit gray range with entropy of at least 7 bits. Low-entropy images such
as ``moon`` break the uniform-difference assumption behind the KPA threshold
and are listed separately.

Requires the ``images`` extra (scikit-image, matplotlib).
"""
from __future__ import annotations

import numpy as np

from .image_io import GrayImage

STANDARD_SET = ("camera", "astronaut", "immunohistochemistry", "grass", "gravel", "grace_hopper")
LOW_ENTROPY_SET = ("moon", "brick")


def _gray(arr: np.ndarray) -> np.ndarray:
    from skimage.color import rgb2gray
    from skimage.util import img_as_ubyte

    if arr.ndim == 3:
        arr = img_as_ubyte(rgb2gray(arr[..., :3]))
    return np.asarray(arr, dtype=np.uint8)


def load_test_image(name: str, size: int = 512) -> GrayImage:
    """Gray-scale ``size`` x ``size`` crop (top-left) of a named sample image."""
    if name == "grace_hopper":
        import matplotlib.cbook
        from skimage.io import imread

        arr = imread(matplotlib.cbook.get_sample_data("grace_hopper.jpg", asfileobj=False))
    else:
        import skimage.data

        arr = getattr(skimage.data, name)()
    arr = _gray(arr)
    if arr.shape[0] < size or arr.shape[1] < size:
        raise ValueError(f"{name} is only {arr.shape[1]}x{arr.shape[0]}")
    return GrayImage.from_array(arr[:size, :size])


def standard_images(size: int = 512) -> dict[str, GrayImage]:
    return {name: load_test_image(name, size) for name in STANDARD_SET}


def entropy(img: GrayImage) -> float:
    counts = np.bincount(img.pixels, minlength=256)
    prob = counts[counts > 0] / img.size
    return float(-(prob * np.log2(prob)).sum())
