"""Active-site descriptions: the pocket a ligand is designed against.

A site file is UTF-8 text with ``#`` comments and these line types, in
order:

    site;<name>
    axis;x1;y1;x2;y2
    pose;ax;ay;dir          (one or more; dir is +1 or -1)
    residue;<id>;x;y;charge;polarity   (one or more)

Coordinates are angstroms, charges elementary-charge units.  Polarity is
``polar+``, ``polar-`` or ``nonpolar`` and must agree with the charge
sign.  The axis runs pocket entrance -> end; a pose anchors the ligand
root at a point and grows it along the axis, forward (+1) or back (-1).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .errors import (
    BadHeader,
    BadPoseLine,
    BadResidueLine,
    DegenerateAxis,
    NoPoses,
    NoResidues,
    PolarityChargeMismatch,
    PoseOutOfBounds,
)

POLARITIES = ("polar+", "polar-", "nonpolar")

# How far outside the residue bounding box a pose anchor may sit (A).
ANCHOR_MARGIN = 3.0

Point = tuple[float, float]


@dataclass(frozen=True)
class Residue:
    id: str
    position: Point
    charge: float
    polarity: str


@dataclass(frozen=True)
class Pose:
    anchor: Point
    direction: int  # +1 grows along the axis, -1 against it


@dataclass(frozen=True)
class ActiveSite:
    name: str
    axis: tuple[Point, Point]
    poses: tuple[Pose, ...]
    residues: tuple[Residue, ...]

    @cached_property
    def residue_positions(self) -> np.ndarray:
        """(n_residues, 2) float array, cached for fast energy evaluation."""
        return np.array([r.position for r in self.residues], dtype=float)

    @cached_property
    def length(self) -> float:
        return site_length(self)

    def axis_direction(self, sign: int = 1) -> Point:
        """Unit vector along the pocket axis, flipped when sign is -1."""
        (x1, y1), (x2, y2) = self.axis
        norm = math.hypot(x2 - x1, y2 - y1)
        return ((x2 - x1) / norm * sign, (y2 - y1) / norm * sign)


def site_length(site: ActiveSite) -> float:
    """Pocket length: Euclidean distance between the axis endpoints."""
    (x1, y1), (x2, y2) = site.axis
    return math.hypot(x2 - x1, y2 - y1)


def _fields(line: str, lineno: int, kind: str, n: int, exc) -> list[str]:
    parts = line.split(";")
    if len(parts) != n:
        raise exc(f"line {lineno}: {kind} line needs {n} ';'-separated fields, got {len(parts)}")
    return parts


def parse_site(text: str) -> ActiveSite:
    """Parse and validate site-file content into an :class:`ActiveSite`."""
    lines = [
        (lineno, raw.strip())
        for lineno, raw in enumerate(text.splitlines(), start=1)
        if raw.strip() and not raw.strip().startswith("#")
    ]
    if len(lines) < 2:
        raise BadHeader("site file needs at least a site; and an axis; line")

    lineno, header = lines[0]
    parts = _fields(header, lineno, "site", 2, BadHeader)
    if parts[0] != "site" or not parts[1].strip():
        raise BadHeader(f"line {lineno}: expected `site;<name>`")
    name = parts[1].strip()

    lineno, axis_line = lines[1]
    parts = _fields(axis_line, lineno, "axis", 5, BadHeader)
    if parts[0] != "axis":
        raise BadHeader(f"line {lineno}: expected `axis;x1;y1;x2;y2`")
    try:
        x1, y1, x2, y2 = (float(v) for v in parts[1:])
    except ValueError as exc:
        raise BadHeader(f"line {lineno}: {exc}") from None
    if (x1, y1) == (x2, y2):
        raise DegenerateAxis(f"line {lineno}: axis endpoints coincide at ({x1}, {y1})")

    poses: list[Pose] = []
    residues: list[Residue] = []
    for lineno, line in lines[2:]:
        kind = line.split(";", 1)[0]
        if kind == "pose":
            parts = _fields(line, lineno, "pose", 4, BadPoseLine)
            try:
                ax, ay = float(parts[1]), float(parts[2])
                direction = int(parts[3])
            except ValueError as exc:
                raise BadPoseLine(f"line {lineno}: {exc}") from None
            if direction not in (1, -1):
                raise BadPoseLine(f"line {lineno}: pose direction must be +1 or -1, got {parts[3]}")
            poses.append(Pose(anchor=(ax, ay), direction=direction))
        elif kind == "residue":
            parts = _fields(line, lineno, "residue", 6, BadResidueLine)
            rid = parts[1].strip()
            if not rid:
                raise BadResidueLine(f"line {lineno}: empty residue id")
            try:
                rx, ry, charge = float(parts[2]), float(parts[3]), float(parts[4])
            except ValueError as exc:
                raise BadResidueLine(f"line {lineno}: {exc}") from None
            polarity = parts[5].strip()
            if polarity not in POLARITIES:
                raise BadResidueLine(
                    f"line {lineno}: polarity must be one of {', '.join(POLARITIES)}"
                )
            expected = "polar+" if charge > 0 else "polar-" if charge < 0 else "nonpolar"
            if polarity != expected:
                raise PolarityChargeMismatch(
                    f"line {lineno}: residue {rid} has charge {charge} but polarity {polarity}"
                )
            residues.append(Residue(id=rid, position=(rx, ry), charge=charge, polarity=polarity))
        else:
            raise BadResidueLine(f"line {lineno}: unrecognized line kind {kind!r}")

    if not residues:
        raise NoResidues("site declares no residues")
    if not poses:
        raise NoPoses("site declares no poses")

    xs = [r.position[0] for r in residues]
    ys = [r.position[1] for r in residues]
    lo_x, hi_x = min(xs) - ANCHOR_MARGIN, max(xs) + ANCHOR_MARGIN
    lo_y, hi_y = min(ys) - ANCHOR_MARGIN, max(ys) + ANCHOR_MARGIN
    for i, pose in enumerate(poses):
        ax, ay = pose.anchor
        if not (lo_x <= ax <= hi_x and lo_y <= ay <= hi_y):
            raise PoseOutOfBounds(
                f"pose {i} anchor ({ax}, {ay}) outside residue bounding box expanded by {ANCHOR_MARGIN} A"
            )

    return ActiveSite(name=name, axis=((x1, y1), (x2, y2)), poses=tuple(poses), residues=tuple(residues))


def site_to_text(site: ActiveSite) -> str:
    """Serialize a site back to file format; parse(site_to_text(s)) == s."""
    (x1, y1), (x2, y2) = site.axis
    out = [f"site;{site.name}", f"axis;{x1!r};{y1!r};{x2!r};{y2!r}"]
    for pose in site.poses:
        out.append(f"pose;{pose.anchor[0]!r};{pose.anchor[1]!r};{pose.direction}")
    for r in site.residues:
        out.append(f"residue;{r.id};{r.position[0]!r};{r.position[1]!r};{r.charge!r};{r.polarity}")
    return "\n".join(out) + "\n"
