"""Functional-group catalog: the 45 building blocks ligands are made of.

A catalog file is UTF-8 text, one entry per line in the form

    index;label;valency;length;charge;vdw_a;vdw_b

with ``#`` comment lines ignored.  Exactly 45 entries must be present,
indexed 0..44.  Entry 44 is the NULL group (all fields zero): decoding a
NULL gene closes a branch, which is how variable-length ligands arise.

Units: length in angstroms, charge in elementary-charge units,
vdw_a in kcal*A^12/mol, vdw_b in kcal*A^6/mol.
"""

from __future__ import annotations

import math
import statistics
from dataclasses import dataclass
from functools import cached_property

from .errors import (
    BadCatalogLine,
    DuplicateIndex,
    MissingEntry,
    NegativeParameter,
    NullGroupViolation,
)

CATALOG_SIZE = 45
NULL_INDEX = 44


@dataclass(frozen=True)
class FunctionalGroup:
    """One building block: bonding capacity, spatial size and force-field terms."""

    index: int
    label: str
    valency: int
    length: float   # angstroms
    charge: float   # elementary charges
    vdw_a: float    # kcal*A^12/mol, repulsion
    vdw_b: float    # kcal*A^6/mol, attraction

    @property
    def is_null(self) -> bool:
        return self.index == NULL_INDEX


@dataclass(frozen=True)
class PairParams:
    """Combined Van der Waals parameters for one interacting pair."""

    a: float
    b: float


@dataclass(frozen=True)
class GroupCatalog:
    groups: tuple[FunctionalGroup, ...]

    def __getitem__(self, index: int) -> FunctionalGroup:
        return self.groups[index]

    def __len__(self) -> int:
        return len(self.groups)

    @cached_property
    def median_vdw_a(self) -> float:
        """Median repulsion parameter over the non-NULL groups."""
        return statistics.median(g.vdw_a for g in self.groups if not g.is_null)

    @cached_property
    def median_vdw_b(self) -> float:
        """Median attraction parameter over the non-NULL groups."""
        return statistics.median(g.vdw_b for g in self.groups if not g.is_null)


def _parse_line(line: str, lineno: int) -> FunctionalGroup:
    parts = line.split(";")
    if len(parts) != 7:
        raise BadCatalogLine(
            f"line {lineno}: expected 7 ';'-separated fields, got {len(parts)}"
        )
    try:
        index = int(parts[0])
        label = parts[1].strip()
        valency = int(parts[2])
        length = float(parts[3])
        charge = float(parts[4])
        vdw_a = float(parts[5])
        vdw_b = float(parts[6])
    except ValueError as exc:
        raise BadCatalogLine(f"line {lineno}: {exc}") from None
    if not label:
        raise BadCatalogLine(f"line {lineno}: empty label")
    if index < 0 or index >= CATALOG_SIZE:
        raise BadCatalogLine(f"line {lineno}: index {index} outside 0..44")
    if valency < 0 or length < 0 or vdw_a < 0 or vdw_b < 0:
        raise NegativeParameter(
            f"line {lineno}: group {index} has a negative valency/length/vdw parameter"
        )
    return FunctionalGroup(index, label, valency, length, charge, vdw_a, vdw_b)


def load_catalog(text: str) -> GroupCatalog:
    """Parse and validate catalog-file content into a :class:`GroupCatalog`.

    Raises MissingEntry, DuplicateIndex, NullGroupViolation,
    NegativeParameter or BadCatalogLine on anything that is not a
    well-formed 45-entry catalog.
    """
    by_index: dict[int, FunctionalGroup] = {}
    n_entries = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        group = _parse_line(line, lineno)
        if group.index in by_index:
            raise DuplicateIndex(f"line {lineno}: index {group.index} already defined")
        by_index[group.index] = group
        n_entries += 1

    if n_entries != CATALOG_SIZE:
        raise MissingEntry(f"expected {CATALOG_SIZE} entries, found {n_entries}")
    # dense 0..44 is implied: 45 distinct in-range indices

    null = by_index[NULL_INDEX]
    if (null.valency, null.length, null.charge, null.vdw_a, null.vdw_b) != (0, 0.0, 0.0, 0.0, 0.0):
        raise NullGroupViolation("entry 44 must have valency=0, length=0, charge=0, vdw_a=0, vdw_b=0")
    for g in by_index.values():
        if not g.is_null and (g.valency < 1 or g.length <= 0):
            raise NullGroupViolation(
                f"group {g.index} ({g.label}): non-NULL groups need valency >= 1 and length > 0"
            )

    return GroupCatalog(tuple(by_index[i] for i in range(CATALOG_SIZE)))


def pair_params(g1, g2) -> PairParams:
    """Combine two groups' Van der Waals parameters by geometric mean.

    Accepts anything with ``vdw_a``/``vdw_b`` attributes, so residue
    pseudo-groups combine with catalog groups through the same rule.
    """
    return PairParams(
        a=math.sqrt(g1.vdw_a * g2.vdw_a),
        b=math.sqrt(g1.vdw_b * g2.vdw_b),
    )
