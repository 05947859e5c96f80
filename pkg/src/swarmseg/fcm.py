"""Fuzzy C-means: membership and center updates, objective, iterative loop.

The loop is plain alternating optimization: memberships are the closed-form
optimum for the current centers, centers the weighted-mean optimum for the
current memberships. Recording the objective once per alternation therefore
yields a non-increasing trajectory, which the tests rely on.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import (
    EPS_ZERO,
    ClusterConfig,
    DeadClusterError,
    DegenerateClusteringError,
    PixelDataset,
    squared_distances,
    validate_config,
)


@dataclass(frozen=True)
class FcmResult:
    """Converged state of one fuzzy C-means run.

    ``labels`` is the argmax of each membership row (lowest index on ties);
    ``jm_trajectory`` holds the objective value after every alternation,
    starting with the value at the initial centers.
    """

    centers: np.ndarray
    memberships: np.ndarray
    labels: np.ndarray
    jm_trajectory: np.ndarray
    iterations: int
    converged: bool


def compute_memberships(
    dataset: PixelDataset, centers: np.ndarray, fuzzifier: float
) -> np.ndarray:
    """Closed-form optimal memberships for fixed centers.

    u_ij is the reciprocal of sum_k (d_ij / d_ik)^(2/(m-1)) with d the
    Euclidean distance. Rows touching a center (distance below EPS_ZERO)
    become crisp: 1 on the first such center, 0 elsewhere. Distances are
    normalized by each row's minimum before exponentiation so large
    exponents cannot overflow.
    """
    if not fuzzifier > 1.0:
        raise ValueError("fuzzifier must be > 1")
    centers = np.asarray(centers, dtype=np.float64)
    d2 = squared_distances(dataset.pixels, centers)
    at_center = d2 < EPS_ZERO**2

    # Work on squared distances: (d_ij/d_ik)^(2/(m-1)) == (D_ij/D_ik)^(1/(m-1)).
    # Dividing each row by its minimum keeps every ratio in (0, 1], so large
    # exponents underflow harmlessly instead of overflowing.
    d2_safe = np.maximum(d2, EPS_ZERO**2)
    dmin = d2_safe.min(axis=1, keepdims=True)
    weights = (dmin / d2_safe) ** (1.0 / (fuzzifier - 1.0))
    u = weights / weights.sum(axis=1, keepdims=True)

    crisp_rows = np.where(at_center.any(axis=1))[0]
    if crisp_rows.size:
        u[crisp_rows] = 0.0
        first = np.argmax(at_center[crisp_rows], axis=1)
        u[crisp_rows, first] = 1.0
    return u


def update_centers(
    dataset: PixelDataset, memberships: np.ndarray, fuzzifier: float
) -> np.ndarray:
    """Weighted-mean optimal centers for fixed memberships.

    c_j = sum_i u_ij^m x_i / sum_i u_ij^m. Raises :class:`DeadClusterError`
    when some column's total weight underflows to zero; the iterative loop
    recovers from that, a direct caller cannot.
    """
    centers, dead = _update_centers_partial(dataset, memberships, fuzzifier)
    if dead:
        raise DeadClusterError(dead)
    return centers


def _update_centers_partial(
    dataset: PixelDataset, memberships: np.ndarray, fuzzifier: float
) -> tuple[np.ndarray, list[int]]:
    """Center update that reports dead clusters instead of raising.

    Dead centers are returned as zero rows; callers must overwrite them.
    """
    u = np.asarray(memberships, dtype=np.float64)
    if not fuzzifier > 1.0:
        raise ValueError("fuzzifier must be > 1")
    if u.shape[0] != dataset.n_pixels:
        raise ValueError("membership rows must match the pixel count")
    um = u**fuzzifier
    c = u.shape[1]
    d = dataset.n_channels
    centers = np.zeros((c, d), dtype=np.float64)
    dead: list[int] = []
    for j in range(c):
        w = um[:, j]
        total = np.sum(w)
        if total <= 0.0:
            dead.append(j)
            continue
        centers[j] = np.sum(w[:, None] * dataset.pixels, axis=0) / total
    return centers, dead


def fcm_objective(
    dataset: PixelDataset,
    centers: np.ndarray,
    memberships: np.ndarray,
    fuzzifier: float,
) -> float:
    """Membership-weighted sum of squared pixel-to-center distances."""
    d2 = squared_distances(dataset.pixels, np.asarray(centers, dtype=np.float64))
    u = np.asarray(memberships, dtype=np.float64)
    return float(np.sum((u**fuzzifier) * d2))


def _reseed_dead(
    dataset: PixelDataset, centers: np.ndarray, dead: list[int]
) -> np.ndarray:
    """Move dead centers onto the pixels farthest from their assigned center.

    Membership rows sum to 1, so at least one cluster always survives; the
    dead ones (in index order) take the worst-covered pixels relative to the
    survivors, one pixel per center.
    """
    live = np.delete(centers, dead, axis=0)
    d2 = squared_distances(dataset.pixels, live)
    labels = np.argmin(d2, axis=1)
    dist_to_assigned = d2[np.arange(dataset.n_pixels), labels]
    order = np.argsort(-dist_to_assigned, kind="stable")
    out = centers.copy()
    for rank, j in enumerate(dead):
        out[j] = dataset.pixels[order[rank % dataset.n_pixels]]
    return out


def run_fcm(
    dataset: PixelDataset, initial_centers: np.ndarray, config: ClusterConfig
) -> FcmResult:
    """Alternate membership and center updates from the given initial centers.

    Stops when the objective change falls within ``fcm_rel_tol`` relative to
    its previous value, or after ``fcm_max_iters`` alternations. Dead
    clusters are re-seeded to the farthest poorly-covered pixel; if recovery
    is needed in more than C consecutive alternations the instance is
    declared degenerate.
    """
    validate_config(config, dataset)
    centers = np.array(initial_centers, dtype=np.float64)
    if centers.ndim != 2 or centers.shape[0] != config.cluster_count:
        raise ValueError(
            f"initial_centers must have shape ({config.cluster_count}, d)"
        )
    m = config.fuzzifier

    u = compute_memberships(dataset, centers, m)
    jm = fcm_objective(dataset, centers, u, m)
    trajectory = [jm]
    converged = False
    consecutive_dead = 0

    for _ in range(config.fcm_max_iters):
        new_centers, dead = _update_centers_partial(dataset, u, m)
        if dead:
            consecutive_dead += 1
            if consecutive_dead > config.cluster_count:
                raise DegenerateClusteringError(
                    f"dead clusters recurred {consecutive_dead} times in a row"
                )
            new_centers = _reseed_dead(dataset, new_centers, dead)
        else:
            consecutive_dead = 0
        centers = new_centers
        u = compute_memberships(dataset, centers, m)
        jm_new = fcm_objective(dataset, centers, u, m)
        trajectory.append(jm_new)
        if abs(jm - jm_new) <= config.fcm_rel_tol * max(jm, EPS_ZERO):
            converged = True
            break
        jm = jm_new

    centers = np.clip(centers, 0.0, 255.0)
    labels = np.argmax(u, axis=1)
    return FcmResult(
        centers=centers,
        memberships=u,
        labels=labels,
        jm_trajectory=np.array(trajectory),
        iterations=len(trajectory) - 1,
        converged=converged,
    )
