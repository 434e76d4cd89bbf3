"""Docking energy between a placed ligand and an active site.

Per residue, the nearest ligand node is found; pairs closer than
``r_min`` or farther than ``r_max`` (0.7-2.7 A by default) contribute a
soft penalty instead of a pair energy.  In-window pairs contribute a
Lennard-Jones term A/r^12 - B/r^6 plus, when both partners are charged,
a Coulomb term k*q_a*q_b/(dielectric*r).  A ligand whose extent reaches
the pocket length draws an additional oversize penalty.  Energies are
kcal/mol throughout; the report carries every per-pair term so totals
can be re-summed exactly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .catalog import GroupCatalog, pair_params
from .errors import EmptyLigand, NonpositiveDistance
from .ligand import LigandTree, PlacedLigand, decode, embed
from .site import ActiveSite, Residue

# Coulomb prefactor in kcal*A/(mol*e^2), derived from the classroom
# 1/(4*pi*eps0) = 9e9 N*m^2/C^2: convert charges C -> e, distance m -> A,
# energy J -> kcal/mol.  Comes out near 332.5.
_INV_FOUR_PI_EPS0 = 9.0e9            # N*m^2/C^2
_ELEMENTARY_CHARGE = 1.602176634e-19  # C
_AVOGADRO = 6.02214076e23             # 1/mol
_JOULES_PER_KCAL = 4184.0
_METERS_PER_ANGSTROM = 1.0e-10

COULOMB_CONSTANT = (
    _INV_FOUR_PI_EPS0 * _ELEMENTARY_CHARGE**2 / _METERS_PER_ANGSTROM
    * _AVOGADRO / _JOULES_PER_KCAL
)

# Sentinel objective value for the empty ligand, keeping the search
# objective total over the whole genome box.
EMPTY_LIGAND_ENERGY = 1.0e6


@dataclass(frozen=True)
class EnergyConfig:
    """Energy-model knobs. Penalties are invented, tunable defaults."""

    coulomb_constant: float = COULOMB_CONSTANT
    dielectric: float = 1.0
    r_min: float = 0.7            # A, proximity window lower edge
    r_max: float = 2.7            # A, proximity window upper edge
    clash_penalty: float = 50.0   # kcal/mol per residue closer than r_min
    far_penalty: float = 5.0      # kcal/mol per residue beyond r_max
    oversize_penalty: float = 100.0  # kcal/mol per A of ligand-length excess
    residue_vdw_a: float | None = None  # None: catalog median over non-NULL groups
    residue_vdw_b: float | None = None

    def __post_init__(self):
        if self.dielectric < 1.0:
            raise ValueError("dielectric must be >= 1")
        if not 0.0 < self.r_min < self.r_max:
            raise ValueError("need 0 < r_min < r_max")
        if min(self.clash_penalty, self.far_penalty, self.oversize_penalty) < 0:
            raise ValueError("penalties must be >= 0")


@dataclass(frozen=True)
class _PseudoGroup:
    """Van der Waals stand-in for a residue (no per-residue parameters exist)."""

    vdw_a: float
    vdw_b: float


@dataclass(frozen=True)
class PairTerm:
    residue_id: str
    node: int
    distance: float
    e_vdw: float
    e_elec: float


@dataclass(frozen=True)
class EnergyReport:
    pairings: tuple[PairTerm, ...]
    e_vdw_total: float
    e_elec_total: float
    penalty_total: float
    e_total: float
    fitness: float | None  # 1/e_total when e_total > 0, else undefined
    pose: int              # -1 for the empty-ligand sentinel
    ligand_extent: float
    fits_site: bool


def lj_energy(params, r: float) -> float:
    """Lennard-Jones pair energy A/r^12 - B/r^6 at separation r (A)."""
    if r <= 0:
        raise NonpositiveDistance(f"r = {r}")
    r6 = r**6
    return params.a / (r6 * r6) - params.b / r6


def coulomb_energy(q_a: float, q_b: float, r: float, config: EnergyConfig) -> float:
    """Electrostatic pair energy k*q_a*q_b/(dielectric*r) in kcal/mol."""
    if r <= 0:
        raise NonpositiveDistance(f"r = {r}")
    return config.coulomb_constant * q_a * q_b / (config.dielectric * r)


def pair_residues(placed: PlacedLigand, site: ActiveSite) -> list[tuple[Residue, int, float]]:
    """Match every residue with its Euclidean-nearest ligand node.

    Returns one (residue, node index, distance) triple per residue, in
    site order; exact distance ties go to the lowest node index.
    """
    if placed.tree.is_empty:
        raise EmptyLigand("no nodes to pair against")
    out = []
    for residue in site.residues:
        rx, ry = residue.position
        best_node = 0
        best_d2 = math.inf
        for i, (px, py) in enumerate(placed.positions):
            d2 = (px - rx) ** 2 + (py - ry) ** 2
            if d2 < best_d2:
                best_d2 = d2
                best_node = i
        out.append((residue, best_node, math.sqrt(best_d2)))
    return out


def _residue_pseudo_group(catalog: GroupCatalog, config: EnergyConfig) -> _PseudoGroup:
    a = config.residue_vdw_a if config.residue_vdw_a is not None else catalog.median_vdw_a
    b = config.residue_vdw_b if config.residue_vdw_b is not None else catalog.median_vdw_b
    return _PseudoGroup(vdw_a=a, vdw_b=b)


def total_energy(
    placed: PlacedLigand,
    site: ActiveSite,
    catalog: GroupCatalog,
    config: EnergyConfig,
    pose: int = 0,
) -> EnergyReport:
    """Evaluate the full docking energy of one placed ligand at one pose."""
    if placed.tree.is_empty:
        raise EmptyLigand("cannot score an empty ligand")
    pseudo = _residue_pseudo_group(catalog, config)

    pairings = []
    e_vdw_total = 0.0
    e_elec_total = 0.0
    penalty_total = 0.0
    for residue, node, r in pair_residues(placed, site):
        e_vdw = 0.0
        e_elec = 0.0
        if r < config.r_min:
            penalty_total += config.clash_penalty
        elif r > config.r_max:
            penalty_total += config.far_penalty
        else:
            group = catalog[placed.tree.nodes[node].group]
            e_vdw = lj_energy(pair_params(group, pseudo), r)
            if group.charge != 0.0 and residue.charge != 0.0:
                e_elec = coulomb_energy(group.charge, residue.charge, r, config)
            e_vdw_total += e_vdw
            e_elec_total += e_elec
        pairings.append(PairTerm(residue.id, node, r, e_vdw, e_elec))

    pocket = site.length
    fits = placed.extent < pocket
    if not fits:
        penalty_total += config.oversize_penalty * (placed.extent - pocket + 1.0)

    e_total = e_vdw_total + e_elec_total + penalty_total
    return EnergyReport(
        pairings=tuple(pairings),
        e_vdw_total=e_vdw_total,
        e_elec_total=e_elec_total,
        penalty_total=penalty_total,
        e_total=e_total,
        fitness=(1.0 / e_total) if e_total > 0 else None,
        pose=pose,
        ligand_extent=placed.extent,
        fits_site=fits,
    )


def empty_ligand_report(site: ActiveSite) -> EnergyReport:
    """Sentinel report for the empty ligand: a flat, very bad energy."""
    return EnergyReport(
        pairings=(),
        e_vdw_total=0.0,
        e_elec_total=0.0,
        penalty_total=EMPTY_LIGAND_ENERGY,
        e_total=EMPTY_LIGAND_ENERGY,
        fitness=1.0 / EMPTY_LIGAND_ENERGY,
        pose=-1,
        ligand_extent=0.0,
        fits_site=0.0 < site.length,
    )


def best_over_poses(
    tree: LigandTree,
    site: ActiveSite,
    catalog: GroupCatalog,
    config: EnergyConfig,
    poses=None,
) -> EnergyReport:
    """Embed at every pose (or the given subset) and keep the lowest e_total.

    Ties go to the lowest pose index; the empty tree yields the sentinel
    report instead of an error so search objectives stay total.
    """
    if tree.is_empty:
        return empty_ligand_report(site)
    best = None
    for idx in range(len(site.poses)) if poses is None else poses:
        placed = embed(tree, site, idx, catalog)
        report = total_energy(placed, site, catalog, config, pose=idx)
        if best is None or report.e_total < best.e_total:
            best = report
    return best


def ligand_objective(site: ActiveSite, catalog: GroupCatalog, config: EnergyConfig, poses=None):
    """Objective over the genome box: genome -> best-pose e_total (kcal/mol)."""

    def objective(genome) -> float:
        tree = decode(genome, catalog)
        return best_over_poses(tree, site, catalog, config, poses=poses).e_total

    return objective


def report_to_text(report: EnergyReport) -> str:
    """Deterministic key=value serialization (scalars sorted, pairings indexed)."""
    scalars = {
        "e_elec_total": repr(report.e_elec_total),
        "e_total": repr(report.e_total),
        "e_vdw_total": repr(report.e_vdw_total),
        "fitness": "undefined" if report.fitness is None else repr(report.fitness),
        "fits_site": "true" if report.fits_site else "false",
        "ligand_extent": repr(report.ligand_extent),
        "pairings": str(len(report.pairings)),
        "penalty_total": repr(report.penalty_total),
        "pose": str(report.pose),
    }
    lines = [f"{k}={scalars[k]}" for k in sorted(scalars)]
    for i, p in enumerate(report.pairings):
        lines.append(f"pairing.{i}.residue={p.residue_id}")
        lines.append(f"pairing.{i}.node={p.node}")
        lines.append(f"pairing.{i}.distance={p.distance!r}")
        lines.append(f"pairing.{i}.e_vdw={p.e_vdw!r}")
        lines.append(f"pairing.{i}.e_elec={p.e_elec!r}")
    return "\n".join(lines) + "\n"
