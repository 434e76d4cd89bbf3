"""pocketswarm: desk-scale 2D ligand design by particle swarm optimization.

Candidate ligands are variable-length trees of functional groups,
decoded from 15-gene real vectors, embedded in a 2D protein pocket and
scored by a Lennard-Jones + Coulomb interaction energy.  A
box-constrained PSO (plus GA and random-search baselines and an
exhaustive oracle) minimizes that energy.
"""

__version__ = "0.1.0"

from .baselines import (
    ComparisonRow,
    ComparisonTable,
    GaConfig,
    compare,
    enumerate_exact,
    ga_run,
    random_search,
    restricted_objective,
    table_to_text,
)
from .catalog import (
    CATALOG_SIZE,
    NULL_INDEX,
    FunctionalGroup,
    GroupCatalog,
    PairParams,
    load_catalog,
    pair_params,
)
from .energy import (
    COULOMB_CONSTANT,
    EMPTY_LIGAND_ENERGY,
    EnergyConfig,
    EnergyReport,
    PairTerm,
    best_over_poses,
    coulomb_energy,
    empty_ligand_report,
    lj_energy,
    ligand_objective,
    pair_residues,
    report_to_text,
    total_energy,
)
from .ligand import (
    GENOME_HIGH,
    GENOME_LENGTH,
    GENOME_LOW,
    LigandNode,
    LigandTree,
    PlacedLigand,
    check_genome,
    decode,
    embed,
    to_structure_text,
)
from .pso import Particle, PsoConfig, RunResult, Swarm, init_swarm, run, step
from .render import render_svg
from .site import ActiveSite, Pose, Residue, parse_site, site_length, site_to_text
from . import benchmarks, data, errors

__all__ = [
    "__version__",
    # catalog
    "CATALOG_SIZE", "NULL_INDEX", "FunctionalGroup", "GroupCatalog", "PairParams",
    "load_catalog", "pair_params",
    # site
    "ActiveSite", "Pose", "Residue", "parse_site", "site_length", "site_to_text",
    # ligand
    "GENOME_LENGTH", "GENOME_LOW", "GENOME_HIGH", "LigandNode", "LigandTree",
    "PlacedLigand", "check_genome", "decode", "embed", "to_structure_text",
    # energy
    "COULOMB_CONSTANT", "EMPTY_LIGAND_ENERGY", "EnergyConfig", "EnergyReport",
    "PairTerm", "best_over_poses", "coulomb_energy", "empty_ligand_report",
    "lj_energy", "ligand_objective", "pair_residues", "report_to_text", "total_energy",
    # pso
    "Particle", "PsoConfig", "RunResult", "Swarm", "init_swarm", "run", "step",
    # baselines
    "ComparisonRow", "ComparisonTable", "GaConfig", "compare", "enumerate_exact",
    "ga_run", "random_search", "restricted_objective", "table_to_text",
    # render
    "render_svg",
    # submodules
    "benchmarks", "data", "errors",
]
