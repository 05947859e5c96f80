"""End-to-end segmentation runs under a single interface.

Four algorithms, one entry point:

* ``kmeans`` — Lloyd's algorithm on the pixel cloud,
* ``fcm`` — fuzzy c-means from randomly sampled distinct pixels,
* ``psofcm`` — constant-coefficient particle swarm, best centers handed
  to fuzzy c-means,
* ``apsof`` — adaptive particle swarm (fitness-driven inertia, scheduled
  learning factors), best centers handed to fuzzy c-means.

All four consume the seed the same way: a fresh generator built from
``config.seed`` at the start of the run, so results are reproducible and
directly comparable across algorithms.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, replace

import numpy as np

from .core import ClusterConfig, PixelDataset, sample_distinct_pixels
from .fcm import FcmResult, run_fcm
from .kmeans import run_kmeans
from .swarm import SwarmConfig, SwarmHistory, run_swarm

ALGORITHMS = ("kmeans", "fcm", "psofcm", "apsof")


@dataclass(frozen=True)
class SegmentationResult:
    """Outcome of one algorithm on one dataset.

    ``final_jm`` is the engine's own objective at convergence: the fuzzy
    objective for the c-means family, the sum of squared errors for
    k-means. Cross-algorithm comparisons should recompute a common metric
    from ``centers`` instead of mixing these. ``iterations`` counts all
    optimizer rounds executed (swarm iterations plus c-means alternations
    for the seeded pipelines).
    """

    algorithm: str
    centers: np.ndarray
    labels: np.ndarray
    final_jm: float
    iterations: int
    wall_time: float
    seed: int
    swarm_history: SwarmHistory | None = None
    fcm_result: FcmResult | None = None


def _swarm_then_fcm(
    name: str,
    dataset: PixelDataset,
    config: ClusterConfig,
    sconfig: SwarmConfig,
) -> SegmentationResult:
    start = time.perf_counter()
    seed_centers, history = run_swarm(dataset, config, sconfig)
    fcm_result = run_fcm(dataset, seed_centers, config)
    elapsed = time.perf_counter() - start
    return SegmentationResult(
        algorithm=name,
        centers=fcm_result.centers,
        labels=fcm_result.labels,
        final_jm=fcm_result.jm_trajectory[-1],
        iterations=history.iterations + fcm_result.iterations,
        wall_time=elapsed,
        seed=config.seed,
        swarm_history=history,
        fcm_result=fcm_result,
    )


def run_apsof(
    dataset: PixelDataset,
    config: ClusterConfig,
    sconfig: SwarmConfig | None = None,
) -> SegmentationResult:
    """Adaptive swarm search followed by fuzzy c-means refinement.

    The swarm's best center set becomes the c-means starting point, so the
    final objective can only match or improve on the swarm's answer.
    """
    sconfig = SwarmConfig() if sconfig is None else sconfig
    if sconfig.mode != "adaptive":
        sconfig = replace(sconfig, mode="adaptive")
    return _swarm_then_fcm("apsof", dataset, config, sconfig)


def run_algorithm(
    name: str,
    dataset: PixelDataset,
    config: ClusterConfig,
    sconfig: SwarmConfig | None = None,
) -> SegmentationResult:
    """Run one named algorithm; all share the same seed semantics."""
    sconfig = SwarmConfig() if sconfig is None else sconfig

    if name == "kmeans":
        start = time.perf_counter()
        result = run_kmeans(dataset, config)
        elapsed = time.perf_counter() - start
        return SegmentationResult(
            algorithm=name,
            centers=result.centers,
            labels=result.labels,
            final_jm=result.sse_trajectory[-1],
            iterations=result.iterations,
            wall_time=elapsed,
            seed=config.seed,
        )

    if name == "fcm":
        start = time.perf_counter()
        rng = np.random.default_rng(config.seed)
        initial = sample_distinct_pixels(dataset, config.cluster_count, rng)
        result = run_fcm(dataset, initial, config)
        elapsed = time.perf_counter() - start
        return SegmentationResult(
            algorithm=name,
            centers=result.centers,
            labels=result.labels,
            final_jm=result.jm_trajectory[-1],
            iterations=result.iterations,
            wall_time=elapsed,
            seed=config.seed,
            fcm_result=result,
        )

    if name == "psofcm":
        return _swarm_then_fcm(
            "psofcm", dataset, config, replace(sconfig, mode="classic")
        )

    if name == "apsof":
        return run_apsof(dataset, config, sconfig)

    raise ValueError(
        f"unknown algorithm {name!r}; expected one of {', '.join(ALGORITHMS)}"
    )
