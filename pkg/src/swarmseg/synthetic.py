"""Programmatic test imagery with known cluster structure.

Segmentation quality claims need images whose correct answer is known.
Two families cover the test and demo needs:

* solid block images — exact ground truth, every algorithm should
  recover the partition,
* Gaussian color-blob images — noisy mixtures where initialization
  quality decides whether an optimizer finds the good basin.
"""

from __future__ import annotations

import numpy as np

from .imaging import RawImage


def solid_block_image(
    colors: list[tuple[int, int, int]],
    block_width: int = 16,
    height: int = 16,
) -> tuple[RawImage, np.ndarray]:
    """Vertical color bands, one per entry of ``colors``.

    Returns the image and the ground-truth label of every pixel in
    row-major order. Colors must be distinct so the partition is
    unambiguous.
    """
    if len(colors) < 1:
        raise ValueError("need at least one color")
    if len(set(colors)) != len(colors):
        raise ValueError("colors must be distinct")
    if block_width < 1 or height < 1:
        raise ValueError("block dimensions must be positive")
    width = block_width * len(colors)
    rgb = np.zeros((height, width, 3), dtype=np.uint8)
    labels = np.zeros((height, width), dtype=np.int64)
    for i, color in enumerate(colors):
        rgb[:, i * block_width : (i + 1) * block_width] = color
        labels[:, i * block_width : (i + 1) * block_width] = i
    image = RawImage(width=width, height=height, rgb8=rgb.tobytes())
    return image, labels.ravel()


def gaussian_blob_image(
    means: list[tuple[float, float, float]],
    width: int = 64,
    height: int = 64,
    sigma: float = 10.0,
    seed: int = 0,
    weights: list[float] | None = None,
) -> RawImage:
    """Pixels drawn from a Gaussian mixture in color space.

    Each pixel picks a blob (uniformly, or by ``weights``) and samples its
    color from an isotropic Gaussian around that blob's mean with the
    given per-channel standard deviation, clipped to [0, 255]. The spatial
    arrangement is the sampling order; only the color distribution matters
    to the clustering algorithms.
    """
    k = len(means)
    if k < 1:
        raise ValueError("need at least one blob mean")
    if sigma < 0.0:
        raise ValueError("sigma must be non-negative")
    if weights is not None:
        if len(weights) != k:
            raise ValueError("weights must match the number of blobs")
        w = np.asarray(weights, dtype=np.float64)
        if np.any(w < 0.0) or w.sum() <= 0.0:
            raise ValueError("weights must be non-negative and sum positive")
        w = w / w.sum()
    else:
        w = np.full(k, 1.0 / k)

    rng = np.random.default_rng(seed)
    n = width * height
    assignment = rng.choice(k, size=n, p=w)
    mean_arr = np.asarray(means, dtype=np.float64)
    colors = mean_arr[assignment] + rng.normal(0.0, sigma, size=(n, 3))
    rgb = np.clip(np.floor(colors + 0.5), 0, 255).astype(np.uint8)
    return RawImage(width=width, height=height, rgb8=rgb.tobytes())


def random_image(width: int, height: int, seed: int = 0) -> RawImage:
    """Uniform random noise; useful for round-trip and invariant tests."""
    rng = np.random.default_rng(seed)
    rgb = rng.integers(0, 256, size=(height, width, 3), dtype=np.uint8)
    return RawImage(width=width, height=height, rgb8=rgb.tobytes())
