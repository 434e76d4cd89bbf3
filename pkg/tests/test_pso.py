import numpy as np
import pytest

from pocketswarm import PsoConfig, Swarm, init_swarm, run, step
from pocketswarm.benchmarks import sphere


def count_calls(fn):
    calls = [0]

    def wrapped(x):
        calls[0] += 1
        return fn(x)

    wrapped.calls = calls
    return wrapped


# --- init -------------------------------------------------------------------

def test_init_constant_objective():
    swarm = init_swarm(PsoConfig(dimensions=3, box=(0.0, 1.0), population=4, seed=1), lambda x: 7.0)
    assert swarm.g_best_score == 7.0
    assert np.all(swarm.p_best_scores == 7.0)
    assert swarm.generation == 0
    assert swarm.evaluations == 4


def test_init_deterministic():
    cfg = PsoConfig(dimensions=5, population=2, seed=42)
    a = init_swarm(cfg, sphere)
    b = init_swarm(cfg, sphere)
    assert np.array_equal(a.positions, b.positions)
    assert np.array_equal(a.velocities, b.velocities)
    assert a.g_best_score == b.g_best_score


def test_init_positions_inside_box():
    # 10^4 coordinate draws all land inside the half-open box
    cfg = PsoConfig(dimensions=5, box=(-3.0, 2.0), population=2000, seed=0)
    swarm = init_swarm(cfg, lambda x: 0.0)
    assert swarm.positions.size == 10_000
    assert np.all(swarm.positions >= -3.0) and np.all(swarm.positions < 2.0)
    v_max = cfg.velocity_limit()
    assert np.all(np.abs(swarm.velocities) <= v_max)


def test_rng_pin_vectors():
    # documented draw order on NumPy PCG64, frozen for seed 0
    swarm = init_swarm(PsoConfig(dimensions=2, box=(0.0, 45.0), population=2, seed=0), lambda x: 0.0)
    expected_pos = [[28.663275929465442, 12.140402119374164],
                    [1.843808577128761, 0.7437435987838092]]
    expected_vel = [[2.8194321528024515, 3.714800195499496],
                    [0.959721981904619, 2.0654690488559853]]
    assert swarm.positions.tolist() == expected_pos
    assert swarm.velocities.tolist() == expected_vel


def test_config_validation():
    with pytest.raises(ValueError):
        init_swarm(PsoConfig(dimensions=0), lambda x: 0.0)
    with pytest.raises(ValueError):
        init_swarm(PsoConfig(dimensions=2, population=1), lambda x: 0.0)
    with pytest.raises(ValueError):
        init_swarm(PsoConfig(dimensions=2, box=(1.0, 1.0)), lambda x: 0.0)
    with pytest.raises(ValueError):
        init_swarm(PsoConfig(dimensions=2, v_max=0.0), lambda x: 0.0)


# --- step -------------------------------------------------------------------

def manual_swarm(positions, velocities, p_best, p_scores, g_best, g_score, seed=0):
    return Swarm(
        positions=np.array(positions, dtype=float),
        velocities=np.array(velocities, dtype=float),
        p_best_positions=np.array(p_best, dtype=float),
        p_best_scores=np.array(p_scores, dtype=float),
        g_best_position=np.array(g_best, dtype=float),
        g_best_score=g_score,
        generation=0,
        rng=np.random.default_rng(seed),
        evaluations=len(positions),
    )


def test_step_pure_inertia():
    # W = 1, c1 = c2 = 0: velocity persists, position drifts by v
    cfg = PsoConfig(dimensions=2, box=(0.0, 10.0), population=2, inertia=1.0, c1=0.0, c2=0.0, v_max=5.0)
    swarm = manual_swarm([[4.0, 4.0], [2.0, 2.0]], [[0.5, -0.25], [0.0, 0.125]],
                         [[4.0, 4.0], [2.0, 2.0]], [1.0, 2.0], [4.0, 4.0], 1.0)
    step(swarm, cfg, sphere)
    assert swarm.positions.tolist() == [[4.5, 3.75], [2.0, 2.125]]
    assert swarm.velocities.tolist() == [[0.5, -0.25], [0.0, 0.125]]


def test_step_zero_attraction_at_bests():
    # x = pBest = gBest: both attraction terms vanish, v' = W*v
    cfg = PsoConfig(dimensions=1, box=(0.0, 10.0), population=2, inertia=0.5, v_max=5.0)
    swarm = manual_swarm([[4.0], [4.0]], [[1.0], [-1.0]], [[4.0], [4.0]], [1.0, 1.0], [4.0], 1.0)
    step(swarm, cfg, lambda x: 99.0)  # worse score: bests unchanged
    assert swarm.velocities.tolist() == [[0.5], [-0.5]]


def test_step_hand_computed():
    # one dimension, forced R1 = R2 = 0.5, W = 0.5, c1 = c2 = 1:
    # v' = 0.5*0 + 0.5*(2-1) + 0.5*(3-1) = 1.5; x' = 1 + 1.5 = 2.5
    cfg = PsoConfig(
        dimensions=1, box=(0.0, 45.0), population=2, inertia=0.5,
        c1=1.0, c2=1.0, v_max=10.0, fixed_r1_r2=(0.5, 0.5),
    )
    swarm = manual_swarm([[1.0], [3.0]], [[0.0], [0.0]], [[2.0], [3.0]], [5.0, 1.0], [3.0], 1.0)
    step(swarm, cfg, lambda x: 99.0)
    assert swarm.positions[0, 0] == 2.5
    assert swarm.velocities[0, 0] == 1.5


def test_step_clamps_box_and_zeroes_velocity():
    cfg = PsoConfig(dimensions=1, box=(0.0, 10.0), population=2, inertia=1.0, c1=0.0, c2=0.0, v_max=8.0)
    swarm = manual_swarm([[9.5], [0.5]], [[4.0], [-4.0]], [[9.5], [0.5]], [1.0, 1.0], [9.5], 1.0)
    step(swarm, cfg, lambda x: 99.0)
    assert swarm.positions[0, 0] == np.nextafter(10.0, 0.0)  # half-open upper edge
    assert swarm.positions[1, 0] == 0.0
    assert swarm.velocities.tolist() == [[0.0], [0.0]]


def test_step_updates_bests_and_generation():
    cfg = PsoConfig(dimensions=2, box=(-5.0, 5.0), population=8, seed=3)
    swarm = init_swarm(cfg, sphere)
    for _ in range(5):
        prev_best = swarm.g_best_score
        step(swarm, cfg, sphere)
        assert swarm.g_best_score <= prev_best
        assert swarm.g_best_score == swarm.p_best_scores.min()
        for particle in swarm.particles:
            assert particle.p_best_score <= sphere(particle.position) + 1e-15
    assert swarm.generation == 5
    assert swarm.evaluations == 8 * 6


# --- run --------------------------------------------------------------------

def test_run_constant_objective_stalls():
    cfg = PsoConfig(dimensions=3, box=(0.0, 1.0), population=5, max_generations=100,
                    stall_generations=7, seed=0)
    result = run(cfg, lambda x: 7.0)
    assert result.generations_run == 8  # stall_generations + 1
    assert result.best_score == 7.0
    assert result.evaluations == 5 * (result.generations_run + 1)


def test_run_sphere_sanity_three_seeds():
    for seed in range(3):
        cfg = PsoConfig(dimensions=10, box=(-5.0, 5.0), population=50, max_generations=100, seed=seed)
        assert run(cfg, sphere).best_score < 1e-3


def test_run_bit_identical_per_seed():
    cfg = PsoConfig(dimensions=6, box=(-2.0, 2.0), population=10, max_generations=30, seed=9)
    a = run(cfg, sphere)
    b = run(cfg, sphere)
    assert np.array_equal(a.best_position, b.best_position)
    assert a.best_score == b.best_score
    assert a.history == b.history
    assert a.evaluations == b.evaluations


def test_run_history_monotone_and_final():
    cfg = PsoConfig(dimensions=4, box=(-5.0, 5.0), population=12, max_generations=40, seed=2)
    result = run(cfg, sphere)
    assert all(h2 <= h1 for h1, h2 in zip(result.history, result.history[1:]))
    assert result.history[-1] == result.best_score
    assert len(result.history) == result.generations_run + 1


def test_run_exact_objective_call_count():
    counted = count_calls(sphere)
    cfg = PsoConfig(dimensions=3, box=(-1.0, 1.0), population=7, max_generations=20,
                    stall_generations=20, seed=5)
    result = run(cfg, counted)
    assert counted.calls[0] == result.evaluations == 7 * (result.generations_run + 1)


def test_velocity_geometric_decay():
    # c1 = c2 = 0, W < 1: |v_k| = W^k * |v_0| to within 1e-12
    w = 0.8
    cfg = PsoConfig(dimensions=2, box=(0.0, 45.0), population=2, inertia=w, c1=0.0, c2=0.0, v_max=5.0)
    v0 = np.array([[0.011, -0.007], [0.005, 0.003]])
    swarm = manual_swarm([[20.0, 20.0], [25.0, 25.0]], v0.tolist(),
                         [[20.0, 20.0], [25.0, 25.0]], [1.0, 1.0], [20.0, 20.0], 1.0)
    for k in range(1, 26):
        step(swarm, cfg, lambda x: 99.0)
        assert np.all(np.abs(np.abs(swarm.velocities) - w**k * np.abs(v0)) <= 1e-12)


def test_box_and_velocity_invariants_many_steps():
    cfg = PsoConfig(dimensions=3, box=(0.0, 45.0), population=4, seed=8)
    v_max = cfg.velocity_limit()
    swarm = init_swarm(cfg, sphere)
    for _ in range(100):
        step(swarm, cfg, sphere)
        assert np.all(swarm.positions >= 0.0) and np.all(swarm.positions < 45.0)
        assert np.all(np.abs(swarm.velocities) <= v_max)


def test_per_dimension_box():
    cfg = PsoConfig(dimensions=2, box=[(0.0, 1.0), (10.0, 20.0)], population=6, max_generations=5, seed=0)
    result = run(cfg, lambda x: float(x[0] + x[1]))
    assert 0.0 <= result.best_position[0] < 1.0
    assert 10.0 <= result.best_position[1] < 20.0
