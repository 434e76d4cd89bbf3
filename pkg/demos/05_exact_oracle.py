"""Checking the swarm against ground truth
==========================================

On a deliberately small instance (4 decoded genes over a 6-group
subset, 1296 possible genomes) the exact minimum is computable by
enumeration.  The swarm, run on the same restricted objective, should
land on it.
"""

from pocketswarm import (
    EnergyConfig,
    PsoConfig,
    data,
    decode,
    enumerate_exact,
    load_catalog,
    parse_site,
    restricted_objective,
    run,
    to_structure_text,
)

catalog = load_catalog(data.default_catalog_path().read_text())
site = parse_site(data.sample_site_path("rhinovirus").read_text())
config = EnergyConfig()

subset = (3, 11, 14, 15, 21, 44)  # CH3, N, O-, SO3-, Gnd+, NULL
depth = 4

genome, oracle = enumerate_exact(site, catalog, subset, depth, config)
print(f"exhaustive minimum over {len(subset)}^{depth} genomes: {oracle.e_total:.4f} kcal/mol")
print(to_structure_text(decode(genome, catalog), catalog))

objective = restricted_objective(site, catalog, subset, depth, config)
hits = 0
for seed in range(5):
    result = run(
        PsoConfig(dimensions=depth, box=(0.0, float(len(subset))), population=50,
                  max_generations=100, stall_generations=100, seed=seed),
        objective,
    )
    found = abs(result.best_score - oracle.e_total) <= 1e-9
    hits += found
    print(f"seed {seed}: swarm best {result.best_score:.4f} kcal/mol "
          f"{'== oracle' if found else '(missed)'}")
print(f"{hits}/5 seeds reached the exact optimum")
