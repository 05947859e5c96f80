"""Particle swarm search over candidate center sets.

Two modes share one loop:

* ``classic`` — constant inertia and equal constant learning factors,
* ``adaptive`` — per-particle inertia driven by each particle's fitness
  relative to the swarm statistics, plus learning factors that slide
  linearly from self-weighted to socially-weighted over the run.

A particle's position is a flattened (C*d,) array of center coordinates;
its fitness is the total squared distance from every pixel to its nearest
center (the quantization error of that center set). The swarm stops when
the relative fitness variance collapses or the iteration budget runs out.

Determinism contract: one seeded generator drives the whole run, consumed
in a fixed order (initialization particle by particle, then two scalar
draws per particle per step in ascending particle index), so identical
(seed, config, dataset) always reproduce the same history bit for bit.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import (
    EPS_ZERO,
    ClusterConfig,
    PixelDataset,
    min_squared_distances,
    sample_distinct_pixels,
    validate_config,
)

POSITION_LO = 0.0
POSITION_HI = 255.0


@dataclass
class Particle:
    """One candidate center set in flight: position, velocity, personal best."""

    position: np.ndarray
    velocity: np.ndarray
    pbest: np.ndarray
    pbest_fitness: float
    fitness: float


@dataclass
class SwarmState:
    """Whole-swarm snapshot: particles plus the best position seen so far."""

    particles: list[Particle]
    gbest: np.ndarray
    gbest_fitness: float
    iteration: int = 0


@dataclass(frozen=True)
class SwarmStats:
    """Per-iteration fitness statistics: mean, minimum, and population variance."""

    f_avg: float
    f_min: float
    variance: float


@dataclass(frozen=True)
class SwarmConfig:
    """Swarm hyperparameters; the defaults are sized for 64x64 color images.

    ``mode`` selects between ``classic`` (constant_w, constant_c) and
    ``adaptive`` (w from fitness statistics, c1/c2 on linear schedules).
    Schedule endpoints may be equal, which makes the adaptive mode behave
    exactly like the classic one; reversed orderings are rejected.
    """

    swarm_size: int = 20
    n_max: int = 100
    w_max: float = 0.9
    w_min: float = 0.4
    c1_init: float = 2.5
    c1_final: float = 0.5
    c2_init: float = 0.5
    c2_final: float = 2.5
    constant_w: float = 0.7
    constant_c: float = 2.0
    variance_tol: float = 1e-3
    v_max_fraction: float = 0.2
    mode: str = "adaptive"

    def __post_init__(self):
        if self.swarm_size < 1:
            raise ValueError("swarm_size must be positive")
        if self.n_max < 1:
            raise ValueError("n_max must be positive")
        if self.w_max < self.w_min:
            raise ValueError("w_max must not be below w_min")
        if self.mode not in ("classic", "adaptive"):
            raise ValueError(f"mode must be 'classic' or 'adaptive', got {self.mode!r}")
        if self.mode == "adaptive":
            if self.c1_init < self.c2_init or self.c1_final > self.c2_final:
                raise ValueError(
                    "adaptive schedules need c1_init >= c2_init and "
                    "c1_final <= c2_final"
                )
        if self.variance_tol < 0.0:
            raise ValueError("variance_tol must be non-negative")
        if not 0.0 < self.v_max_fraction <= 1.0:
            raise ValueError("v_max_fraction must lie in (0, 1]")


@dataclass(frozen=True)
class SwarmHistory:
    """Per-iteration record of the search: best fitness and spread."""

    gbest_fitness: np.ndarray
    f_avg: np.ndarray
    variance: np.ndarray
    iterations: int
    converged: bool


def particle_fitness(dataset: PixelDataset, position: np.ndarray) -> float:
    """Quantization error of the center set encoded by ``position``.

    Each pixel contributes the squared distance to its nearest center only.
    """
    centers = np.asarray(position, dtype=np.float64).reshape(
        -1, dataset.n_channels
    )
    return float(np.sum(min_squared_distances(dataset, centers)))


def swarm_stats(fitnesses: np.ndarray) -> SwarmStats:
    """Mean, minimum, and population variance of the swarm's fitness values."""
    f = np.asarray(fitnesses, dtype=np.float64)
    if f.size == 0:
        raise ValueError("swarm_stats needs at least one fitness value")
    f_avg = float(np.mean(f))
    return SwarmStats(
        f_avg=f_avg,
        f_min=float(np.min(f)),
        variance=float(np.mean((f - f_avg) ** 2)),
    )


def adaptive_inertia(f_i: float, stats: SwarmStats, config: SwarmConfig) -> float:
    """Per-particle inertia weight from fitness relative to the swarm.

    Better-than-average particles (minimization: fitness below the mean)
    keep the maximum inertia; the rest scale between w_min and w_max with
    their distance from the swarm's best, clamped into [w_min, w_max].
    Degenerate statistics (everyone equally fit) also yield w_max.
    """
    spread = stats.f_avg - stats.f_min
    if f_i < stats.f_avg or spread < EPS_ZERO:
        return config.w_max
    raw = (config.w_max - config.w_min) * (f_i - stats.f_min) / spread
    return min(config.w_max, max(config.w_min, raw))


def adaptive_learning_factors(
    n: int, config: SwarmConfig
) -> tuple[float, float]:
    """Linearly scheduled (c1, c2) at iteration ``n`` of ``n_max``.

    c1 runs from c1_init to c1_final and c2 from c2_init to c2_final, so the
    swarm shifts weight from self-learning to social learning as it ages.
    """
    frac = n / config.n_max
    c1 = config.c1_init + (config.c1_final - config.c1_init) * frac
    c2 = config.c2_init + (config.c2_final - config.c2_init) * frac
    return c1, c2


def step_particle(
    p: Particle,
    gbest: np.ndarray,
    dataset: PixelDataset,
    w: float,
    c1: float,
    c2: float,
    config: SwarmConfig,
    rng: np.random.Generator,
) -> Particle:
    """Advance one particle: velocity update, move, clamp, re-evaluate.

    r1 and r2 are drawn once per call and shared across all dimensions. The
    new velocity is clamped per component to +/- v_max_fraction * 255 and
    the new position to [0, 255]; the personal best is updated when the new
    position improves on it.
    """
    r1 = rng.random()
    r2 = rng.random()
    v_cap = config.v_max_fraction * (POSITION_HI - POSITION_LO)
    velocity = (
        w * p.velocity
        + c1 * r1 * (p.pbest - p.position)
        + c2 * r2 * (gbest - p.position)
    )
    np.clip(velocity, -v_cap, v_cap, out=velocity)
    position = np.clip(p.position + velocity, POSITION_LO, POSITION_HI)
    fitness = particle_fitness(dataset, position)
    if fitness < p.pbest_fitness:
        pbest, pbest_fitness = position.copy(), fitness
    else:
        pbest, pbest_fitness = p.pbest, p.pbest_fitness
    return Particle(
        position=position,
        velocity=velocity,
        pbest=pbest,
        pbest_fitness=pbest_fitness,
        fitness=fitness,
    )


def _init_state(
    dataset: PixelDataset, config: ClusterConfig, sconfig: SwarmConfig,
    rng: np.random.Generator,
) -> SwarmState:
    particles = []
    for _ in range(sconfig.swarm_size):
        pos = sample_distinct_pixels(dataset, config.cluster_count, rng).ravel()
        fit = particle_fitness(dataset, pos)
        particles.append(
            Particle(
                position=pos,
                velocity=np.zeros_like(pos),
                pbest=pos.copy(),
                pbest_fitness=fit,
                fitness=fit,
            )
        )
    best = min(range(len(particles)), key=lambda i: particles[i].pbest_fitness)
    return SwarmState(
        particles=particles,
        gbest=particles[best].pbest.copy(),
        gbest_fitness=particles[best].pbest_fitness,
    )


def run_swarm(
    dataset: PixelDataset, config: ClusterConfig, sconfig: SwarmConfig
) -> tuple[np.ndarray, SwarmHistory]:
    """Search for the center set minimizing the quantization error.

    Every particle starts on C pixels with distinct values (zero velocity).
    Each iteration records the swarm statistics, stops if the relative
    fitness variance has collapsed below ``variance_tol``, and otherwise
    steps all particles with mode-appropriate coefficients. Returns the
    best position found, decoded to a (C, d) center array, plus the
    per-iteration history.
    """
    validate_config(config, dataset)
    rng = np.random.default_rng(config.seed)
    state = _init_state(dataset, config, sconfig, rng)

    gbest_hist: list[float] = []
    favg_hist: list[float] = []
    var_hist: list[float] = []
    converged = False

    for n in range(sconfig.n_max + 1):
        stats = swarm_stats([p.fitness for p in state.particles])
        gbest_hist.append(state.gbest_fitness)
        favg_hist.append(stats.f_avg)
        var_hist.append(stats.variance)
        if stats.variance / max(stats.f_avg**2, EPS_ZERO) <= sconfig.variance_tol:
            converged = True
            break
        if n == sconfig.n_max:
            break

        if sconfig.mode == "adaptive":
            c1, c2 = adaptive_learning_factors(n, sconfig)
        else:
            c1, c2 = sconfig.constant_c, sconfig.constant_c

        for i, p in enumerate(state.particles):
            if sconfig.mode == "adaptive":
                w = adaptive_inertia(p.fitness, stats, sconfig)
            else:
                w = sconfig.constant_w
            state.particles[i] = step_particle(
                p, state.gbest, dataset, w, c1, c2, sconfig, rng
            )
        for p in state.particles:
            if p.pbest_fitness < state.gbest_fitness:
                state.gbest_fitness = p.pbest_fitness
                state.gbest = p.pbest.copy()
        state.iteration = n + 1

    centers = state.gbest.reshape(config.cluster_count, dataset.n_channels)
    centers = np.clip(centers, POSITION_LO, POSITION_HI)
    history = SwarmHistory(
        gbest_fitness=np.array(gbest_hist),
        f_avg=np.array(favg_hist),
        variance=np.array(var_hist),
        iterations=state.iteration,
        converged=converged,
    )
    return centers, history
