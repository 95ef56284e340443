import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import coupled_infected_sets, path_graph, random_graph, star_graph
from fldrank import (
    Graph,
    SiConfig,
    bfs_distances,
    connected_components,
    lambda_from_beta,
    replicate_rng,
    si_step,
    simulate,
    spreading_ability,
    worker_count,
)


def infected_mask(g, labels):
    mask = np.zeros(g.node_count, dtype=bool)
    for label in labels:
        mask[g.label_to_id[label]] = True
    return mask


# --- single step ------------------------------------------------------------


def test_step_zero_rate_infects_nobody(kite):
    mask = infected_mask(kite, ["7"])
    new = si_step(kite, mask, 0.0, replicate_rng(0, 0))
    assert new.size == 0


def test_step_rate_one_is_the_bfs_frontier(kite):
    mask = infected_mask(kite, ["7"])
    new = si_step(kite, mask, 1.0, replicate_rng(0, 0))
    assert sorted(kite.node_labels[i] for i in new) == ["1", "2", "3", "4", "5", "6"]


def test_step_two_node_empirical_rate():
    g = Graph.build([("a", "b")])
    mask = np.array([True, False])
    hits = 0
    reps = 2000
    for k in range(reps):
        new = si_step(g, mask.copy(), 0.5, replicate_rng(123, k))
        hits += new.size
    # 3 sigma binomial band around 0.5
    bound = 3 * math.sqrt(0.25 / reps)
    assert abs(hits / reps - 0.5) < bound


def test_step_returns_unique_sorted_ids():
    g = path_graph(3)
    mask = infected_mask(g, ["0", "2"])
    new = si_step(g, mask, 1.0, replicate_rng(0, 0))
    assert list(new) == [g.label_to_id["1"]]


# --- trajectories -----------------------------------------------------------


def test_wavefront_from_kite_center(kite):
    cfg = SiConfig(lam=1.0, seeds=(kite.label_to_id["7"],), replicates=4, rng_seed=9)
    ensemble = simulate(kite, cfg, keep_replicates=True)
    assert ensemble.mean_f == (1.0, 7.0, 8.0, 9.0, 10.0)
    assert all(v == 0.0 for v in ensemble.std_f)
    for trajectory in ensemble.trajectories:
        assert trajectory.f == (1, 7, 8, 9, 10)
        assert trajectory.terminated_at == 4


def test_zero_rate_trajectory_is_constant(kite):
    cfg = SiConfig(lam=0.0, seeds=(0, 3), replicates=3)
    ensemble = simulate(kite, cfg, keep_replicates=True)
    assert ensemble.mean_f == (2.0,)
    assert ensemble.trajectories[0].terminated_at == 0


def test_config_validation():
    with pytest.raises(ValueError):
        SiConfig(lam=-0.1, seeds=(0,))
    with pytest.raises(ValueError):
        SiConfig(lam=1.1, seeds=(0,))
    with pytest.raises(ValueError):
        SiConfig(lam=0.5, seeds=())
    with pytest.raises(ValueError):
        SiConfig(lam=0.5, seeds=(0,), replicates=0)
    with pytest.raises(ValueError):
        SiConfig(lam=0.5, seeds=(0,), rng_seed=-1)
    assert SiConfig(lam=0.5, seeds=(2, 0, 2)).seeds == (0, 2)


def test_simulate_rejects_out_of_range_seed(kite):
    with pytest.raises(ValueError):
        simulate(kite, SiConfig(lam=0.5, seeds=(99,)))


def test_lambda_from_beta():
    assert lambda_from_beta(3) == 0.125
    assert lambda_from_beta(1) == 0.5


def test_trajectory_monotone_and_bounded(karate):
    cfg = SiConfig(lam=0.2, seeds=(0,), replicates=10, rng_seed=5)
    ensemble = simulate(karate, cfg, keep_replicates=True)
    for trajectory in ensemble.trajectories:
        for a, b in zip(trajectory.f, trajectory.f[1:]):
            assert a <= b
        assert trajectory.f[-1] <= karate.node_count


def test_bounded_by_reachable_set():
    g = Graph.build([("a", "b"), ("x", "y"), ("y", "z")])
    cfg = SiConfig(lam=1.0, seeds=(g.label_to_id["a"],), replicates=2)
    ensemble = simulate(g, cfg)
    assert ensemble.mean_f[-1] == 2.0


def test_saturation_at_high_rate_before_step_cap():
    rng = np.random.default_rng(31)
    for _ in range(5):
        g = random_graph(rng, int(rng.integers(5, 50)), 0.15)
        comp = connected_components(g)
        seed = int(rng.integers(g.node_count))
        reach = comp.component_sizes[comp.component_id[seed]]
        cfg = SiConfig(lam=0.5, seeds=(seed,), replicates=8, rng_seed=int(rng.integers(2**32)))
        ensemble = simulate(g, cfg, keep_replicates=True)
        for trajectory in ensemble.trajectories:
            assert trajectory.f[-1] == reach


def test_susceptible_plus_infected_partition_holds(kite):
    infected = infected_mask(kite, ["7"])
    susceptible = ~infected
    rng = replicate_rng(77, 0)
    for t in range(12):
        assert int(infected.sum()) + int(susceptible.sum()) == kite.node_count
        assert not (infected & susceptible).any()
        new = si_step(kite, infected, 0.35, rng)
        assert not infected[new].any()
        infected[new] = True
        susceptible[new] = False


def test_padding_aligns_replicates_of_different_length():
    g = path_graph(6)
    cfg = SiConfig(lam=0.45, seeds=(0,), replicates=20, rng_seed=1)
    ensemble = simulate(g, cfg, keep_replicates=True)
    length = len(ensemble.mean_f)
    assert len(ensemble.std_f) == length
    assert max(len(tr.f) for tr in ensemble.trajectories) == length
    assert any(len(tr.f) < length for tr in ensemble.trajectories)


# --- monotone coupling ------------------------------------------------------


@settings(max_examples=30, deadline=None)
@given(
    seed=st.integers(0, 2**32 - 1),
    n=st.integers(3, 16),
    p=st.floats(0.15, 0.6),
    lam_lo=st.floats(0.05, 0.5),
    extra=st.floats(0.0, 0.5),
)
def test_infection_grows_with_rate_under_shared_randomness(seed, n, p, lam_lo, extra):
    rng = np.random.default_rng(seed)
    g = random_graph(rng, n, p)
    seeds = {int(rng.integers(n))}
    lam_hi = min(1.0, lam_lo + extra)
    history = coupled_infected_sets(g, seeds, lam_lo, lam_hi, steps=8, rng=rng)
    for lo, hi in history:
        assert lo <= hi


# --- determinism ------------------------------------------------------------


def test_identical_config_identical_ensemble(karate):
    cfg = SiConfig(lam=0.3, seeds=(0, 5), replicates=25, rng_seed=88)
    a = simulate(karate, cfg)
    b = simulate(karate, cfg)
    assert a.mean_f == b.mean_f
    assert a.std_f == b.std_f


def test_thread_count_does_not_change_results(karate, monkeypatch):
    cfg = SiConfig(lam=0.25, seeds=(1, 2, 3), replicates=16, rng_seed=4)
    monkeypatch.setenv("FLDRANK_THREADS", "1")
    serial = simulate(karate, cfg, keep_replicates=True)
    monkeypatch.setenv("FLDRANK_THREADS", "4")
    threaded = simulate(karate, cfg, keep_replicates=True)
    assert serial.mean_f == threaded.mean_f
    assert serial.std_f == threaded.std_f
    assert serial.trajectories == threaded.trajectories


def test_worker_count_parsing(monkeypatch):
    monkeypatch.delenv("FLDRANK_THREADS", raising=False)
    assert worker_count() == 1
    monkeypatch.setenv("FLDRANK_THREADS", "3")
    assert worker_count() == 3
    monkeypatch.setenv("FLDRANK_THREADS", "0")
    assert worker_count() >= 1
    monkeypatch.setenv("FLDRANK_THREADS", "-2")
    with pytest.raises(ValueError):
        worker_count()


# --- per-node spreading ability ----------------------------------------------


def test_isolated_seed_scores_exactly_one():
    g = Graph.build([("a", "b")], nodes=["x"])
    assert spreading_ability(g, g.label_to_id["x"], 0.9, replicates=5) == 1.0


def test_full_rate_reaches_component_size(kite):
    node = kite.label_to_id["7"]
    assert spreading_ability(kite, node, 1.0, t_eval=4, replicates=3) == 10.0
    assert spreading_ability(kite, node, 1.0, t_eval=9, replicates=3) == 10.0


def test_star_center_and_leaf_expectations():
    g = star_graph(4)
    reps = 4000
    center = spreading_ability(g, g.label_to_id["c"], 0.5, t_eval=1, replicates=reps, rng_seed=3)
    leaf = spreading_ability(g, g.label_to_id["l0"], 0.5, t_eval=1, replicates=reps, rng_seed=3)
    # center: 1 + Binomial(4, 1/2); leaf: 1 + Bernoulli(1/2); 3 sigma bands
    assert abs(center - 3.0) < 3 * math.sqrt(1.0 / reps)
    assert abs(leaf - 1.5) < 3 * math.sqrt(0.25 / reps)


def test_t_eval_must_be_positive(kite):
    with pytest.raises(ValueError):
        spreading_ability(kite, 0, 0.5, t_eval=0)
