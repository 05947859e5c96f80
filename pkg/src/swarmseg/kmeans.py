"""Lloyd's K-means, the classic hard-clustering baseline.

Deliberately plain: distinct-pixel random initialization, alternating
nearest-center assignment and mean updates, stop when labels settle. No
k-means++ or acceleration tricks, so results reflect the textbook algorithm.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import (
    ClusterConfig,
    DegenerateClusteringError,
    PixelDataset,
    sample_distinct_pixels,
    squared_distances,
    validate_config,
)


@dataclass(frozen=True)
class KmeansResult:
    """Final state of one Lloyd run; ``sse_trajectory`` has one entry per assignment."""

    centers: np.ndarray
    labels: np.ndarray
    sse_trajectory: np.ndarray
    iterations: int
    converged: bool


_MAX_ITERS = 300


def run_kmeans(dataset: PixelDataset, config: ClusterConfig) -> KmeansResult:
    """Cluster the dataset into ``config.cluster_count`` groups with Lloyd's loop.

    Centers start at C pixels with distinct values drawn from the seeded
    generator. Empty clusters are re-seeded to the pixel farthest from its
    assigned center; if that recurs more than C times in a row the instance
    is declared degenerate.
    """
    validate_config(config, dataset)
    rng = np.random.default_rng(config.seed)
    c = config.cluster_count
    centers = sample_distinct_pixels(dataset, c, rng)

    prev_labels: np.ndarray | None = None
    trajectory: list[float] = []
    converged = False
    consecutive_empty = 0
    labels = np.zeros(dataset.n_pixels, dtype=np.intp)

    for _ in range(_MAX_ITERS):
        d2 = squared_distances(dataset.pixels, centers)
        labels = np.argmin(d2, axis=1)
        trajectory.append(float(np.sum(d2[np.arange(dataset.n_pixels), labels])))
        if prev_labels is not None and np.array_equal(labels, prev_labels):
            converged = True
            break
        prev_labels = labels

        new_centers = np.empty_like(centers)
        empty: list[int] = []
        for j in range(c):
            members = dataset.pixels[labels == j]
            if members.shape[0] == 0:
                empty.append(j)
            else:
                new_centers[j] = members.mean(axis=0)
        if empty:
            consecutive_empty += 1
            if consecutive_empty > c:
                raise DegenerateClusteringError(
                    f"empty clusters recurred {consecutive_empty} times in a row"
                )
            dist_to_assigned = d2[np.arange(dataset.n_pixels), labels]
            order = np.argsort(-dist_to_assigned, kind="stable")
            for rank, j in enumerate(empty):
                new_centers[j] = dataset.pixels[order[rank % dataset.n_pixels]]
        else:
            consecutive_empty = 0
        centers = new_centers

    if not converged:
        # iteration cap hit after a center update; realign labels with the
        # centers actually returned
        d2 = squared_distances(dataset.pixels, centers)
        labels = np.argmin(d2, axis=1)
        trajectory.append(float(np.sum(d2[np.arange(dataset.n_pixels), labels])))

    centers = np.clip(centers, 0.0, 255.0)
    return KmeansResult(
        centers=centers,
        labels=labels,
        sse_trajectory=np.array(trajectory),
        iterations=len(trajectory),
        converged=converged,
    )
