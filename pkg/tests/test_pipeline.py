"""Shared run interface wiring the swarm, c-means, and k-means engines."""

import numpy as np
import pytest

from swarmseg.core import ClusterConfig
from swarmseg.imaging import to_dataset
from swarmseg.pipeline import ALGORITHMS, run_algorithm, run_apsof
from swarmseg.swarm import SwarmConfig, run_swarm
from swarmseg.synthetic import solid_block_image

SMALL_SWARM = SwarmConfig(swarm_size=8, n_max=20)


def block_dataset():
    image, truth = solid_block_image(
        [(250, 10, 10), (10, 250, 10), (10, 10, 250)], block_width=4, height=4
    )
    return to_dataset(image), truth


def labels_match_up_to_permutation(predicted, truth):
    mapping = {}
    for p, t in zip(predicted.tolist(), truth.tolist()):
        if mapping.setdefault(p, t) != t:
            return False
    return len(set(mapping.values())) == len(mapping)


def test_algorithm_roster():
    assert ALGORITHMS == ("kmeans", "fcm", "psofcm", "apsof")


def test_unknown_algorithm_rejected():
    ds, _ = block_dataset()
    with pytest.raises(ValueError):
        run_algorithm("zebra", ds, ClusterConfig(cluster_count=3))


def test_every_algorithm_fills_the_result():
    ds, truth = block_dataset()
    config = ClusterConfig(cluster_count=3, seed=0)
    for name in ALGORITHMS:
        result = run_algorithm(name, ds, config, SMALL_SWARM)
        assert result.algorithm == name
        assert result.centers.shape == (3, 3)
        assert result.labels.shape == (ds.n_pixels,)
        assert result.final_jm >= 0.0
        assert result.iterations >= 0
        assert result.wall_time >= 0.0
        assert result.seed == 0


def test_all_algorithms_recover_solid_blocks():
    ds, truth = block_dataset()
    config = ClusterConfig(cluster_count=3, seed=0)
    for name in ALGORITHMS:
        result = run_algorithm(name, ds, config, SMALL_SWARM)
        assert labels_match_up_to_permutation(result.labels, truth), name


def test_refinement_never_worsens_the_swarm_seed():
    ds, _ = block_dataset()
    config = ClusterConfig(cluster_count=3, seed=4)
    result = run_apsof(ds, config, SMALL_SWARM)
    assert result.fcm_result is not None
    traj = result.fcm_result.jm_trajectory
    assert traj[-1] <= traj[0] + 1e-9 * max(traj[0], 1.0)
    assert result.final_jm == traj[-1]


def test_seeded_pipelines_count_both_stages():
    ds, _ = block_dataset()
    config = ClusterConfig(cluster_count=3, seed=2)
    result = run_apsof(ds, config, SMALL_SWARM)
    assert result.swarm_history is not None
    assert result.iterations == (
        result.swarm_history.iterations + result.fcm_result.iterations
    )


def test_apsof_equals_classic_when_schedules_are_flat():
    # freeze the adaptive knobs at the classic constants: same seed, same
    # arithmetic, bitwise-equal outputs
    ds, _ = block_dataset()
    config = ClusterConfig(cluster_count=3, seed=6)
    flat = SwarmConfig(
        swarm_size=8,
        n_max=20,
        w_max=0.7,
        w_min=0.7,
        c1_init=2.0,
        c1_final=2.0,
        c2_init=2.0,
        c2_final=2.0,
        constant_w=0.7,
        constant_c=2.0,
    )
    a = run_algorithm("apsof", ds, config, flat)
    b = run_algorithm("psofcm", ds, config, flat)
    assert np.array_equal(a.centers, b.centers)
    assert np.array_equal(a.labels, b.labels)
    assert a.final_jm == b.final_jm


def test_apsof_forces_adaptive_mode():
    ds, _ = block_dataset()
    config = ClusterConfig(cluster_count=3, seed=1)
    classic = SwarmConfig(swarm_size=8, n_max=20, mode="classic")
    result = run_apsof(ds, config, classic)
    assert result.algorithm == "apsof"
    # deterministic: rerunning with the same inputs reproduces the result
    again = run_apsof(ds, config, classic)
    assert np.array_equal(result.centers, again.centers)


def test_fcm_baseline_matches_direct_composition():
    # the "fcm" pipeline is exactly: sample distinct pixels, then iterate
    ds, _ = block_dataset()
    config = ClusterConfig(cluster_count=3, seed=9)
    via_pipeline = run_algorithm("fcm", ds, config)

    from swarmseg.core import sample_distinct_pixels
    from swarmseg.fcm import run_fcm

    rng = np.random.default_rng(9)
    init = sample_distinct_pixels(ds, 3, rng)
    direct = run_fcm(ds, init, config)
    assert np.array_equal(via_pipeline.centers, direct.centers)
    assert np.array_equal(via_pipeline.labels, direct.labels)


def test_swarm_seed_feeds_the_refiner():
    # the c-means stage must start from the swarm's best centers
    ds, _ = block_dataset()
    config = ClusterConfig(cluster_count=3, seed=12)
    result = run_algorithm("psofcm", ds, config, SMALL_SWARM)
    seed_centers, history = run_swarm(
        ds, config, SwarmConfig(swarm_size=8, n_max=20, mode="classic")
    )
    assert np.array_equal(
        history.gbest_fitness, result.swarm_history.gbest_fitness
    )
    from swarmseg.fcm import run_fcm

    refined = run_fcm(ds, seed_centers, config)
    assert np.array_equal(refined.centers, result.centers)
