"""Genome decoding and 2D embedding of tree-structured ligands.

A genome is 15 reals in [0, 45).  floor() of each gene picks a catalog
group; gene 0 is the root and later genes fill open bond slots breadth
first.  A NULL gene (index 44) closes its slot, so genomes of the same
fixed length decode to ligands of varying size -- possibly empty when
the root itself is NULL.  Unfilled slots are implicit hydrogens and
contribute no energy.

Embedding places the root at a pose anchor and grows the tree along the
pocket axis: each parent->child bond has length (parent.length +
child.length)/2, and a node's children fan out at equal angles across
the 180-degree half-plane facing away from its parent (a single child
continues straight).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .catalog import CATALOG_SIZE, NULL_INDEX, GroupCatalog
from .errors import EmptyLigand
from .site import ActiveSite

GENOME_LENGTH = 15
GENOME_LOW = 0.0
GENOME_HIGH = float(CATALOG_SIZE)  # box is [0, 45): 45 itself is out

Point = tuple[float, float]


@dataclass(frozen=True)
class LigandNode:
    group: int                 # catalog index, never NULL
    parent: int | None         # node index, None for the root
    children: tuple[int, ...]  # node indices, in creation order


@dataclass(frozen=True)
class LigandTree:
    nodes: tuple[LigandNode, ...]

    @property
    def is_empty(self) -> bool:
        return not self.nodes

    def __len__(self) -> int:
        return len(self.nodes)


@dataclass(frozen=True)
class PlacedLigand:
    tree: LigandTree
    positions: tuple[Point, ...]
    extent: float  # max pairwise center distance, 0 for <= 1 node


def check_genome(values) -> list[float]:
    """Validate length and box membership; returns the genes as floats."""
    genes = [float(v) for v in values]
    if len(genes) != GENOME_LENGTH:
        raise ValueError(f"genome needs exactly {GENOME_LENGTH} values, got {len(genes)}")
    for i, v in enumerate(genes):
        if not (GENOME_LOW <= v < GENOME_HIGH):
            raise ValueError(f"gene {i} = {v} outside [{GENOME_LOW}, {GENOME_HIGH})")
    return genes


def decode(genome, catalog: GroupCatalog) -> LigandTree:
    """Decode a genome into a ligand tree (total over the box, deterministic).

    Gene 0 is the root; a NULL root gives the empty tree.  Open bond
    slots are kept in a FIFO queue (root contributes `valency` slots,
    every other node `valency - 1`); each later gene either fills the
    next slot with a new node or, when NULL, closes it.  Decoding stops
    when genes or slots run out.
    """
    genes = check_genome(genome)
    indices = [min(int(math.floor(v)), CATALOG_SIZE - 1) for v in genes]

    root_group = indices[0]
    if root_group == NULL_INDEX:
        return LigandTree(nodes=())

    groups = [root_group]
    parents: list[int | None] = [None]
    children: list[list[int]] = [[]]
    slots: list[int] = [0] * catalog[root_group].valency  # parent node index per open slot
    slot_head = 0

    for gene in indices[1:]:
        if slot_head >= len(slots):
            break
        parent = slots[slot_head]
        slot_head += 1
        if gene == NULL_INDEX:
            continue
        node = len(groups)
        groups.append(gene)
        parents.append(parent)
        children.append([])
        children[parent].append(node)
        slots.extend([node] * (catalog[gene].valency - 1))

    return LigandTree(
        nodes=tuple(
            LigandNode(group=g, parent=p, children=tuple(c))
            for g, p, c in zip(groups, parents, children)
        )
    )


def _rotate(direction: Point, angle: float) -> Point:
    c, s = math.cos(angle), math.sin(angle)
    return (direction[0] * c - direction[1] * s, direction[0] * s + direction[1] * c)


def embed(tree: LigandTree, site: ActiveSite, pose: int, catalog: GroupCatalog) -> PlacedLigand:
    """Place a tree at one pose of the site. Deterministic pure geometry."""
    if tree.is_empty:
        raise EmptyLigand("cannot embed an empty ligand")
    anchor = site.poses[pose].anchor
    growth = site.axis_direction(site.poses[pose].direction)

    positions: list[Point] = [anchor] * len(tree.nodes)
    outgoing: list[Point] = [growth] * len(tree.nodes)
    lengths = [catalog[node.group].length for node in tree.nodes]

    for index, node in enumerate(tree.nodes):  # parents precede children
        k = len(node.children)
        for rank, child in enumerate(node.children):
            angle = 0.0 if k == 1 else -math.pi / 2 + rank * math.pi / (k - 1)
            direction = _rotate(outgoing[index], angle)
            bond = (lengths[index] + lengths[child]) / 2.0
            px, py = positions[index]
            positions[child] = (px + bond * direction[0], py + bond * direction[1])
            outgoing[child] = direction

    extent = 0.0
    for i in range(len(positions)):
        for j in range(i + 1, len(positions)):
            d = math.hypot(positions[i][0] - positions[j][0], positions[i][1] - positions[j][1])
            if d > extent:
                extent = d

    return PlacedLigand(tree=tree, positions=tuple(positions), extent=extent)


def to_structure_text(tree: LigandTree, catalog: GroupCatalog) -> str:
    """Human-readable indented outline, one `label(used/total)` line per node."""
    if tree.is_empty:
        return "(empty ligand)\n"

    lines: list[str] = []

    def walk(index: int, depth: int) -> None:
        node = tree.nodes[index]
        group = catalog[node.group]
        used = len(node.children) + (0 if node.parent is None else 1)
        text = f"{group.label}({used}/{group.valency})"
        if node.parent is None:
            lines.append(f"root: {text}")
        else:
            lines.append("  " * depth + text)
        for child in node.children:
            walk(child, depth + 1)

    walk(0, 0)
    return "\n".join(lines) + "\n"
