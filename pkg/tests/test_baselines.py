import numpy as np
import pytest

import pocketswarm.baselines as baselines
from pocketswarm import (
    EnergyConfig,
    GaConfig,
    compare,
    enumerate_exact,
    ga_run,
    random_search,
    restricted_objective,
    table_to_text,
)
from pocketswarm.benchmarks import sphere
from pocketswarm.errors import BudgetExceeded


# --- GA ----------------------------------------------------------------------

def test_ga_elitism_never_worsens():
    cfg = GaConfig(population=10, generations=30, crossover_prob=0.0,
                   mutation_prob_per_gene=0.0, elitism=1, seed=0)
    result = ga_run(cfg, sphere, dimensions=5, box=(0.0, 45.0))
    assert all(h2 <= h1 for h1, h2 in zip(result.history, result.history[1:]))


def test_ga_constant_objective():
    cfg = GaConfig(population=2, generations=5, seed=1)
    result = ga_run(cfg, lambda x: 3.5, dimensions=4, box=(0.0, 45.0))
    assert result.best_score == 3.5
    assert result.evaluations == 2 * 6


def test_ga_deterministic():
    cfg = GaConfig(population=8, generations=15, seed=123)
    a = ga_run(cfg, sphere, dimensions=5, box=(0.0, 45.0))
    b = ga_run(cfg, sphere, dimensions=5, box=(0.0, 45.0))
    assert np.array_equal(a.best_position, b.best_position)
    assert a.best_score == b.best_score and a.history == b.history


def test_ga_genes_are_integers_in_box():
    cfg = GaConfig(population=12, generations=10, seed=3)
    result = ga_run(cfg, sphere, dimensions=6, box=(0.0, 45.0))
    assert all(v == int(v) and 0 <= v <= 44 for v in result.best_position)


def test_ga_config_validation():
    with pytest.raises(ValueError):
        ga_run(GaConfig(population=4, elitism=4), sphere, 3)
    with pytest.raises(ValueError):
        ga_run(GaConfig(crossover_prob=1.5), sphere, 3)


def test_ga_improves_on_sphere():
    cfg = GaConfig(population=30, generations=40, seed=0)
    result = ga_run(cfg, sphere, dimensions=5, box=(0.0, 45.0))
    assert result.best_score <= 10.0  # integer lattice: optimum 0 reachable


# --- random search -------------------------------------------------------------

def test_random_search_budget_one():
    result = random_search(1, sphere, dimensions=3, box=(0.0, 45.0), seed=4)
    rng = np.random.default_rng(4)
    assert result.best_score == sphere(rng.uniform(0.0, 45.0, size=3))
    assert result.evaluations == 1


def test_random_search_constant():
    result = random_search(25, lambda x: -2.0, dimensions=3, box=(0.0, 45.0), seed=0)
    assert result.best_score == -2.0


def test_random_search_prefix_monotone():
    small = random_search(100, sphere, dimensions=4, box=(0.0, 45.0), seed=7)
    large = random_search(200, sphere, dimensions=4, box=(0.0, 45.0), seed=7)
    assert large.best_score <= small.best_score
    assert large.history[:100] == small.history  # same seed: identical prefix


def test_random_search_rejects_zero_budget():
    with pytest.raises(ValueError):
        random_search(0, sphere, dimensions=2)


# --- exact oracle ---------------------------------------------------------------

def test_oracle_evaluation_counts(catalog, rhino_site, monkeypatch):
    calls = [0]
    real = baselines.best_over_poses

    def counting(*args, **kwargs):
        calls[0] += 1
        return real(*args, **kwargs)

    monkeypatch.setattr(baselines, "best_over_poses", counting)
    cfg = EnergyConfig()
    enumerate_exact(rhino_site, catalog, [1, 20], 1, cfg)
    assert calls[0] == 2
    calls[0] = 0
    enumerate_exact(rhino_site, catalog, [1, 13, 14, 20, 21, 44], 4, cfg)
    assert calls[0] == 1296


def test_oracle_budget_guard(catalog, rhino_site):
    cfg = EnergyConfig()
    with pytest.raises(BudgetExceeded):
        enumerate_exact(rhino_site, catalog, list(range(9)), 3, cfg)
    with pytest.raises(BudgetExceeded):
        enumerate_exact(rhino_site, catalog, [1, 2], 6, cfg)


def test_oracle_lexicographic_tiebreak(catalog, rhino_site):
    # a valency-1 root ignores the second gene unless it is NULL, so
    # (1,1) and (1,44) tie exactly; the lexicographically first wins
    genome, report = enumerate_exact(rhino_site, catalog, [1, 44], 2, EnergyConfig())
    assert genome.tolist()[:2] == [1.0, 1.0]
    assert all(v == 44.0 for v in genome[2:])


def test_oracle_dominates_heuristics(catalog, rhino_site):
    cfg = EnergyConfig()
    subset, depth = (3, 11, 14, 15, 21, 44), 3
    _, oracle = enumerate_exact(rhino_site, catalog, subset, depth, cfg)
    objective = restricted_objective(rhino_site, catalog, subset, depth, cfg)
    box = (0.0, float(len(subset)))

    from pocketswarm import PsoConfig, run as pso_run

    pso = pso_run(PsoConfig(dimensions=depth, box=box, population=20, max_generations=30, seed=0), objective)
    ga = ga_run(GaConfig(population=20, generations=30, seed=0), objective, dimensions=depth, box=box)
    rnd = random_search(600, objective, dimensions=depth, box=box, seed=0)
    for result in (pso, ga, rnd):
        assert oracle.e_total <= result.best_score + 1e-12


# --- compare ----------------------------------------------------------------------

def test_compare_single_cell(catalog, rhino_site):
    table = compare(rhino_site, catalog, ["random"], seeds=[5], budget=40, population=4)
    assert len(table.rows) == 1 and table.rows[0].scores and table.budget == 40
    direct = random_search(40, __import__("pocketswarm").ligand_objective(rhino_site, catalog, EnergyConfig()),
                           dimensions=15, seed=5)
    assert table.rows[0].scores == (direct.best_score,)
    assert table.rows[0].median == direct.best_score


def test_compare_seed_independence(catalog, rhino_site):
    two = compare(rhino_site, catalog, ["pso"], seeds=[0, 1], budget=40, population=4)
    three = compare(rhino_site, catalog, ["pso"], seeds=[0, 1, 2], budget=40, population=4)
    assert three.rows[0].scores[:2] == two.rows[0].scores


def test_compare_budget_validation(catalog, rhino_site):
    with pytest.raises(ValueError):
        compare(rhino_site, catalog, ["pso"], seeds=[0], budget=55, population=10)
    with pytest.raises(ValueError):
        compare(rhino_site, catalog, ["simulated-annealing"], seeds=[0], budget=50, population=10)


def test_compare_all_algorithms_equal_budget(catalog, rhino_site):
    table = compare(rhino_site, catalog, ["pso", "ga", "random"], seeds=[0], budget=60, population=6)
    assert [row.name for row in table.rows] == ["pso", "ga", "random"]
    text = table_to_text(table)
    assert "table.budget=60" in text
    assert text == table_to_text(table)
    for row in table.rows:
        assert row.best == min(row.scores)
