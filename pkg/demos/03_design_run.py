"""A full design run
====================

Minimize the docking energy of the rhinovirus-style sample pocket with
the particle swarm at the standard protocol (population 50, 100
generations), then inspect what was found.
"""

from pocketswarm import (
    EnergyConfig,
    GENOME_LENGTH,
    PsoConfig,
    best_over_poses,
    data,
    decode,
    ligand_objective,
    load_catalog,
    parse_site,
    run,
    to_structure_text,
)

catalog = load_catalog(data.default_catalog_path().read_text())
site = parse_site(data.sample_site_path("rhinovirus").read_text())
config = EnergyConfig()

objective = ligand_objective(site, catalog, config)
result = run(
    PsoConfig(dimensions=GENOME_LENGTH, population=50, max_generations=100, seed=7),
    objective,
)

print(f"evaluations: {result.evaluations}, generations: {result.generations_run}")
print("convergence (every 10th generation):")
for g in range(0, len(result.history), 10):
    print(f"  gen {g:3d}: best e_total {result.history[g]:12.4f} kcal/mol")

tree = decode(result.best_position, catalog)
report = best_over_poses(tree, site, catalog, config)
print(f"\nbest ligand ({len(tree)} nodes, pose {report.pose}, "
      f"extent {report.ligand_extent:.2f} A / pocket {site.length:.2f} A):")
print(to_structure_text(tree, catalog))
print(f"e_total  = {report.e_total:.4f} kcal/mol "
      f"(vdw {report.e_vdw_total:.3f}, elec {report.e_elec_total:.3f}, "
      f"penalties {report.penalty_total:.3f})")
if report.fitness is None:
    print("fitness  = undefined (e_total <= 0; lower e_total is better)")
else:
    print(f"fitness  = {report.fitness:.6f}")
