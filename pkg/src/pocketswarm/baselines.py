"""Baselines and ground truth for judging the swarm results.

Three ways to attack the same objective: a fixed-length genetic
algorithm over integer genomes (tournament selection, single-point
crossover, per-gene uniform-reset mutation, elitism), plain random
search, and -- on deliberately restricted instances -- exhaustive
enumeration, which is exact and therefore the oracle the stochastic
methods are measured against.  ``compare`` runs any mix of algorithms
at an identical evaluation budget across seeds.

All randomness comes from one ``np.random.default_rng(seed)`` per run,
as in the swarm engine.
"""

from __future__ import annotations

import itertools
import math
import statistics
from dataclasses import dataclass

import numpy as np

from .catalog import NULL_INDEX, GroupCatalog
from .energy import EnergyConfig, EnergyReport, best_over_poses, ligand_objective
from .errors import BudgetExceeded
from .ligand import GENOME_LENGTH, decode
from .pso import PsoConfig, RunResult
from .pso import run as pso_run
from .site import ActiveSite


@dataclass(frozen=True)
class GaConfig:
    population: int = 50
    generations: int = 100
    tournament_size: int = 3
    crossover_prob: float = 0.9
    mutation_prob_per_gene: float = 0.05
    elitism: int = 1
    seed: int = 0

    def validate(self) -> None:
        if not (0.0 <= self.crossover_prob <= 1.0 and 0.0 <= self.mutation_prob_per_gene <= 1.0):
            raise ValueError("probabilities must lie in [0, 1]")
        if not (0 <= self.elitism < self.population):
            raise ValueError("elitism must be < population")
        if self.population < 2 or self.generations < 0 or self.tournament_size < 1:
            raise ValueError("population >= 2, generations >= 0, tournament_size >= 1")


def _int_gene_range(box) -> tuple[int, int]:
    lo, hi = float(box[0]), float(box[1])
    low = int(math.ceil(lo))
    high_excl = int(math.floor(hi)) + (1 if hi > math.floor(hi) else 0)
    if high_excl <= low:
        raise ValueError(f"box [{lo}, {hi}) holds no integer genes")
    return low, high_excl


def ga_run(config: GaConfig, objective, dimensions: int, box=(0.0, 45.0)) -> RunResult:
    """Generational GA over fixed-length integer genomes inside the box.

    Every generation evaluates the full population (elite copies
    included), so the evaluation count is population * (generations + 1)
    regardless of operator activity.
    """
    config.validate()
    low, high_excl = _int_gene_range(box)
    rng = np.random.default_rng(config.seed)
    pop = config.population

    genomes = rng.integers(low, high_excl, size=(pop, dimensions)).astype(float)
    scores = np.array([objective(genomes[i]) for i in range(pop)])
    evaluations = pop

    best = int(np.argmin(scores))
    best_score = float(scores[best])
    best_genome = genomes[best].copy()
    history = [best_score]

    for _ in range(config.generations):
        order = np.argsort(scores, kind="stable")
        next_rows = [genomes[i].copy() for i in order[: config.elitism]]

        while len(next_rows) < pop:
            parents = []
            for _ in range(2):
                picks = rng.integers(0, pop, size=config.tournament_size)
                parents.append(genomes[picks[int(np.argmin(scores[picks]))]].copy())
            child_a, child_b = parents
            if dimensions >= 2 and rng.random() < config.crossover_prob:
                point = int(rng.integers(1, dimensions))
                child_a = np.concatenate([parents[0][:point], parents[1][point:]])
                child_b = np.concatenate([parents[1][:point], parents[0][point:]])
            for child in (child_a, child_b):
                # resample vector drawn unconditionally: rng draw count per
                # child does not depend on which genes mutate
                mask = rng.random(dimensions) < config.mutation_prob_per_gene
                fresh = rng.integers(low, high_excl, size=dimensions).astype(float)
                child[mask] = fresh[mask]
                if len(next_rows) < pop:
                    next_rows.append(child)

        genomes = np.array(next_rows)
        scores = np.array([objective(genomes[i]) for i in range(pop)])
        evaluations += pop
        gen_best = int(np.argmin(scores))
        if float(scores[gen_best]) < best_score:
            best_score = float(scores[gen_best])
            best_genome = genomes[gen_best].copy()
        history.append(best_score)

    return RunResult(
        best_position=best_genome,
        best_score=best_score,
        generations_run=config.generations,
        history=tuple(history),
        evaluations=evaluations,
    )


def random_search(budget: int, objective, dimensions: int, box=(0.0, 45.0), seed: int = 0) -> RunResult:
    """Best of `budget` uniform samples; the sample stream is prefix-stable per seed."""
    if budget < 1:
        raise ValueError("budget must be >= 1")
    lo, hi = float(box[0]), float(box[1])
    rng = np.random.default_rng(seed)

    best_score = math.inf
    best_x = None
    history = []
    for _ in range(budget):
        x = rng.uniform(lo, hi, size=dimensions)
        score = objective(x)
        if score < best_score:
            best_score = score
            best_x = x
        history.append(best_score)

    return RunResult(
        best_position=best_x,
        best_score=best_score,
        generations_run=budget,
        history=tuple(history),
        evaluations=budget,
    )


MAX_ORACLE_EVALUATIONS = 10**6


def _restricted_genome(genes, depth: int) -> list[float]:
    return [float(g) for g in genes] + [float(NULL_INDEX)] * (GENOME_LENGTH - depth)


def restricted_objective(site: ActiveSite, catalog: GroupCatalog, subset, depth: int, config: EnergyConfig):
    """Ligand objective over the reduced box [0, len(subset))^depth.

    Position component i picks subset[floor(x_i)] as gene i; genes past
    `depth` are NULL.  Exactly the instance enumerate_exact solves, so
    heuristics and the oracle are comparable point for point.
    """
    groups = sorted(subset)
    n = len(groups)

    def objective(x) -> float:
        genes = [groups[min(int(math.floor(float(v))), n - 1)] for v in x]
        genome = _restricted_genome(genes, depth)
        return best_over_poses(decode(genome, catalog), site, catalog, config).e_total

    return objective


def enumerate_exact(
    site: ActiveSite,
    catalog: GroupCatalog,
    subset,
    depth: int,
    config: EnergyConfig,
) -> tuple[np.ndarray, EnergyReport]:
    """Exhaustively score every gene tuple over the subset; exact minimum.

    Genes beyond `depth` are fixed to NULL.  Ties go to the
    lexicographically smallest tuple.  Raises BudgetExceeded when
    len(subset)**depth would pass a million evaluations.
    """
    groups = sorted(subset)
    if len(groups) > 8 or depth > 5:
        raise BudgetExceeded("oracle instances are limited to 8 groups and depth 5")
    total = len(groups) ** depth
    if total > MAX_ORACLE_EVALUATIONS:
        raise BudgetExceeded(f"{len(groups)}^{depth} = {total} exceeds {MAX_ORACLE_EVALUATIONS}")

    best_genome = None
    best_report = None
    for tup in itertools.product(groups, repeat=depth):
        genome = _restricted_genome(tup, depth)
        report = best_over_poses(decode(genome, catalog), site, catalog, config)
        if best_report is None or report.e_total < best_report.e_total:
            best_report = report
            best_genome = genome
    return np.array(best_genome), best_report


@dataclass(frozen=True)
class ComparisonRow:
    name: str
    scores: tuple[float, ...]  # best e_total per seed, kcal/mol
    median: float
    best: float


@dataclass(frozen=True)
class ComparisonTable:
    rows: tuple[ComparisonRow, ...]
    seeds: tuple[int, ...]
    budget: int  # objective evaluations per run


ALGORITHMS = ("pso", "ga", "random")


def compare(
    site: ActiveSite,
    catalog: GroupCatalog,
    algorithms,
    seeds,
    budget: int,
    population: int = 50,
    energy_config: EnergyConfig | None = None,
) -> ComparisonTable:
    """Run each algorithm per seed on the ligand objective at equal budget.

    The budget must be a multiple of the population so the generational
    algorithms land on it exactly; every run's evaluation count is
    checked against it.
    """
    config = energy_config or EnergyConfig()
    for name in algorithms:
        if name not in ALGORITHMS:
            raise ValueError(f"unknown algorithm {name!r}; choose from {ALGORITHMS}")
    if budget < population or budget % population != 0:
        raise ValueError(f"budget must be a positive multiple of population={population}")
    generations = budget // population - 1

    rows = []
    for name in algorithms:
        scores = []
        for seed in seeds:
            calls = 0
            base = ligand_objective(site, catalog, config)

            def counted(x):
                nonlocal calls
                calls += 1
                return base(x)

            if name == "pso":
                result = pso_run(
                    PsoConfig(
                        dimensions=GENOME_LENGTH,
                        population=population,
                        max_generations=generations,
                        stall_generations=generations,  # never triggers: exact budget
                        seed=seed,
                    ),
                    counted,
                )
            elif name == "ga":
                result = ga_run(
                    GaConfig(population=population, generations=generations, seed=seed),
                    counted,
                    dimensions=GENOME_LENGTH,
                )
            else:
                result = random_search(budget, counted, dimensions=GENOME_LENGTH, seed=seed)
            assert calls == budget, f"{name} consumed {calls} evaluations, expected {budget}"
            scores.append(result.best_score)
        rows.append(
            ComparisonRow(
                name=name,
                scores=tuple(scores),
                median=float(statistics.median(scores)),
                best=min(scores),
            )
        )
    return ComparisonTable(rows=tuple(rows), seeds=tuple(int(s) for s in seeds), budget=budget)


def table_to_text(table: ComparisonTable) -> str:
    """Aligned human table plus a machine-readable key=value block."""
    lines = [
        f"{'algorithm':<10} {'median':>14} {'min':>14}  per-seed best e_total (kcal/mol)",
    ]
    for row in table.rows:
        per_seed = " ".join(f"{s:.4f}" for s in row.scores)
        lines.append(f"{row.name:<10} {row.median:>14.4f} {row.best:>14.4f}  {per_seed}")
    lines.append("")
    lines.append(f"table.budget={table.budget}")
    lines.append(f"table.seeds={','.join(str(s) for s in table.seeds)}")
    for row in table.rows:
        lines.append(f"row.{row.name}.median={row.median!r}")
        lines.append(f"row.{row.name}.min={row.best!r}")
        lines.append(f"row.{row.name}.scores={';'.join(repr(s) for s in row.scores)}")
    return "\n".join(lines) + "\n"
