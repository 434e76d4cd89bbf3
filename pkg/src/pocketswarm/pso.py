"""Box-constrained particle swarm minimizer.

Per particle i and dimension d the velocity update is

    v' = W*v + c1*R1*(p_best_d - x_d) + c2*R2*(g_best_d - x_d)
    x' = x + v'

with W the inertia weight, c1/c2 acceleration coefficients and R1/R2
fresh uniform(0,1) draws per particle per dimension (set
``fixed_r1_r2`` to replace the draws with constants).  Velocities are
clamped to +-v_max; positions are clamped into the half-open box and
the offending velocity component zeroed.

Reproducibility contract: one NumPy PCG64 generator
(``np.random.default_rng(seed)``) drives everything, drawing in this
documented order: initial positions as one uniform (population, dims)
batch, initial velocities as one uniform batch, then per step and per
particle in index order an R1 vector followed by an R2 vector.  The
swarm update is synchronous: all velocity/position moves use the
previous generation's bests, objective evaluations are a separate pure
phase (safe to parallelize), and best updates happen sequentially
afterwards, so identical seeds give bit-identical runs.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

Objective = Callable[[np.ndarray], float]


@dataclass(frozen=True)
class PsoConfig:
    dimensions: int
    box: object = (0.0, 45.0)  # (lo, hi) for all dims, or per-dimension pairs
    population: int = 50
    max_generations: int = 100
    inertia: float = 0.729
    c1: float = 1.49445
    c2: float = 1.49445
    v_max: object = None       # None: 0.1 * (hi - lo) per dimension
    stall_generations: int = 25
    stall_epsilon: float = 1e-6
    seed: int = 0
    fixed_r1_r2: Optional[tuple[float, float]] = None

    def bounds(self) -> tuple[np.ndarray, np.ndarray]:
        box = self.box
        if len(box) == 2 and np.isscalar(box[0]):
            lo = np.full(self.dimensions, float(box[0]))
            hi = np.full(self.dimensions, float(box[1]))
        else:
            pairs = [(float(lo), float(hi)) for lo, hi in box]
            if len(pairs) != self.dimensions:
                raise ValueError(f"box has {len(pairs)} pairs for {self.dimensions} dimensions")
            lo = np.array([p[0] for p in pairs])
            hi = np.array([p[1] for p in pairs])
        if not np.all(lo < hi):
            raise ValueError("box needs lo < hi in every dimension")
        return lo, hi

    def velocity_limit(self) -> np.ndarray:
        lo, hi = self.bounds()
        if self.v_max is None:
            v = 0.1 * (hi - lo)
        elif np.isscalar(self.v_max):
            v = np.full(self.dimensions, float(self.v_max))
        else:
            v = np.asarray(self.v_max, dtype=float)
        if v.shape != (self.dimensions,) or not np.all(v > 0):
            raise ValueError("v_max must be positive (scalar or one value per dimension)")
        return v

    def validate(self) -> None:
        if self.dimensions < 1:
            raise ValueError("dimensions must be >= 1")
        if self.population < 2:
            raise ValueError("population must be >= 2")
        self.bounds()
        self.velocity_limit()


@dataclass(frozen=True)
class Particle:
    """Read-only view of one particle's state."""

    position: np.ndarray
    velocity: np.ndarray
    p_best_position: np.ndarray
    p_best_score: float


@dataclass
class Swarm:
    positions: np.ndarray        # (population, dimensions)
    velocities: np.ndarray
    p_best_positions: np.ndarray
    p_best_scores: np.ndarray
    g_best_position: np.ndarray
    g_best_score: float
    generation: int
    rng: np.random.Generator
    evaluations: int

    @property
    def particles(self) -> tuple[Particle, ...]:
        return tuple(
            Particle(
                position=self.positions[i],
                velocity=self.velocities[i],
                p_best_position=self.p_best_positions[i],
                p_best_score=float(self.p_best_scores[i]),
            )
            for i in range(len(self.positions))
        )


@dataclass(frozen=True)
class RunResult:
    best_position: np.ndarray
    best_score: float
    generations_run: int
    history: tuple[float, ...]  # g_best after init, then after each step
    evaluations: int


def init_swarm(config: PsoConfig, objective: Objective) -> Swarm:
    """Seeded uniform initialization; personal bests start at the first scores."""
    config.validate()
    lo, hi = config.bounds()
    v_max = config.velocity_limit()
    rng = np.random.default_rng(config.seed)

    positions = rng.uniform(lo, hi, size=(config.population, config.dimensions))
    velocities = rng.uniform(-v_max, v_max, size=(config.population, config.dimensions))
    scores = np.array([objective(positions[i]) for i in range(config.population)])

    best = int(np.argmin(scores))
    return Swarm(
        positions=positions,
        velocities=velocities,
        p_best_positions=positions.copy(),
        p_best_scores=scores,
        g_best_position=positions[best].copy(),
        g_best_score=float(scores[best]),
        generation=0,
        rng=rng,
        evaluations=config.population,
    )


def step(swarm: Swarm, config: PsoConfig, objective: Objective) -> Swarm:
    """Advance one synchronous generation in place; returns the same swarm."""
    lo, hi = config.bounds()
    hi_inside = np.nextafter(hi, lo)  # box is half-open: hi itself is outside
    v_max = config.velocity_limit()
    pop = len(swarm.positions)

    for i in range(pop):
        if config.fixed_r1_r2 is not None:
            r1 = np.full(config.dimensions, config.fixed_r1_r2[0])
            r2 = np.full(config.dimensions, config.fixed_r1_r2[1])
        else:
            r1 = swarm.rng.random(config.dimensions)
            r2 = swarm.rng.random(config.dimensions)
        v = (
            config.inertia * swarm.velocities[i]
            + config.c1 * r1 * (swarm.p_best_positions[i] - swarm.positions[i])
            + config.c2 * r2 * (swarm.g_best_position - swarm.positions[i])
        )
        np.clip(v, -v_max, v_max, out=v)
        x = swarm.positions[i] + v
        clipped = np.clip(x, lo, hi_inside)
        v[clipped != x] = 0.0
        swarm.positions[i] = clipped
        swarm.velocities[i] = v

    scores = np.array([objective(swarm.positions[i]) for i in range(pop)])
    swarm.evaluations += pop

    for i in range(pop):
        if scores[i] < swarm.p_best_scores[i]:
            swarm.p_best_scores[i] = scores[i]
            swarm.p_best_positions[i] = swarm.positions[i].copy()
    best = int(np.argmin(swarm.p_best_scores))
    if swarm.p_best_scores[best] < swarm.g_best_score:
        swarm.g_best_score = float(swarm.p_best_scores[best])
        swarm.g_best_position = swarm.p_best_positions[best].copy()

    swarm.generation += 1
    return swarm


def run(config: PsoConfig, objective: Objective) -> RunResult:
    """Full minimization: init, then step until max generations or stall.

    The stall rule stops the run once the best score has improved by
    less than ``stall_epsilon`` for more than ``stall_generations``
    consecutive generations.
    """
    swarm = init_swarm(config, objective)
    history = [swarm.g_best_score]
    stalled = 0
    while swarm.generation < config.max_generations:
        previous = swarm.g_best_score
        step(swarm, config, objective)
        history.append(swarm.g_best_score)
        stalled = stalled + 1 if previous - swarm.g_best_score < config.stall_epsilon else 0
        if stalled > config.stall_generations:
            break
    return RunResult(
        best_position=swarm.g_best_position.copy(),
        best_score=swarm.g_best_score,
        generations_run=swarm.generation,
        history=tuple(history),
        evaluations=swarm.evaluations,
    )
