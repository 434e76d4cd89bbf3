"""Swarm vs. baselines
======================

Run the particle swarm, the fixed-length genetic algorithm and plain
random search on the same pocket at an identical evaluation budget and
compare their per-seed best energies.  (The test suite repeats this at
the full 11-seed, 5050-evaluation protocol; a smaller budget keeps the
demo quick.)
"""

from pocketswarm import compare, data, load_catalog, parse_site, table_to_text

catalog = load_catalog(data.default_catalog_path().read_text())
site = parse_site(data.sample_site_path("rhinovirus").read_text())

table = compare(
    site,
    catalog,
    algorithms=["pso", "ga", "random"],
    seeds=[0, 1, 2, 3, 4],
    budget=2550,  # 50 particles x (50 + 1) generations
)
print(table_to_text(table))
