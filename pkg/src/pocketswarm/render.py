"""SVG pictures of a ligand sitting in its pocket.

Residues draw as labeled circles, ligand nodes as circles of radius
length/2 with bond segments between them, and the pocket axis as a
dashed line.  Output is built with ElementTree, so it is always
well-formed XML; pass ``placed=None`` to draw the site alone.
"""

from __future__ import annotations

import xml.etree.ElementTree as ET

from .catalog import GroupCatalog
from .ligand import PlacedLigand
from .site import ActiveSite

SVG_NS = "http://www.w3.org/2000/svg"


def _bounds(site: ActiveSite, placed: PlacedLigand | None, margin: float):
    points = [r.position for r in site.residues] + list(site.axis)
    if placed is not None:
        points += list(placed.positions)
    xs = [p[0] for p in points]
    ys = [p[1] for p in points]
    return min(xs) - margin, max(xs) + margin, min(ys) - margin, max(ys) + margin


def render_svg(
    placed: PlacedLigand | None,
    site: ActiveSite,
    catalog: GroupCatalog,
    scale: float = 40.0,
    margin: float = 2.0,
) -> str:
    """Return an SVG 1.1 document (text) of the site and optional ligand."""
    lo_x, hi_x, lo_y, hi_y = _bounds(site, placed, margin)
    width = (hi_x - lo_x) * scale
    height = (hi_y - lo_y) * scale

    def to_px(p):  # flip y: SVG grows downward
        return (p[0] - lo_x) * scale, (hi_y - p[1]) * scale

    svg = ET.Element(
        "svg",
        {
            "xmlns": SVG_NS,
            "version": "1.1",
            "width": f"{width:.1f}",
            "height": f"{height:.1f}",
            "viewBox": f"0 0 {width:.1f} {height:.1f}",
        },
    )

    (ax1, ay1) = to_px(site.axis[0])
    (ax2, ay2) = to_px(site.axis[1])
    ET.SubElement(
        svg,
        "line",
        {
            "class": "axis",
            "x1": f"{ax1:.2f}", "y1": f"{ay1:.2f}",
            "x2": f"{ax2:.2f}", "y2": f"{ay2:.2f}",
            "stroke": "#888888",
            "stroke-dasharray": "8 5",
            "stroke-width": "2",
        },
    )

    for residue in site.residues:
        cx, cy = to_px(residue.position)
        fill = "#d94b4b" if residue.charge < 0 else "#4b6bd9" if residue.charge > 0 else "#b0b0b0"
        ET.SubElement(
            svg,
            "circle",
            {
                "class": "residue",
                "cx": f"{cx:.2f}", "cy": f"{cy:.2f}",
                "r": f"{0.45 * scale:.2f}",
                "fill": fill,
                "fill-opacity": "0.5",
                "stroke": "#333333",
            },
        )
        label = ET.SubElement(
            svg,
            "text",
            {
                "class": "residue-label",
                "x": f"{cx:.2f}", "y": f"{cy - 0.55 * scale:.2f}",
                "font-size": f"{0.35 * scale:.1f}",
                "text-anchor": "middle",
            },
        )
        label.text = residue.id

    if placed is not None:
        nodes = placed.tree.nodes
        for index, node in enumerate(nodes):  # bonds under node circles
            if node.parent is None:
                continue
            x1, y1 = to_px(placed.positions[node.parent])
            x2, y2 = to_px(placed.positions[index])
            ET.SubElement(
                svg,
                "line",
                {
                    "class": "bond",
                    "x1": f"{x1:.2f}", "y1": f"{y1:.2f}",
                    "x2": f"{x2:.2f}", "y2": f"{y2:.2f}",
                    "stroke": "#1a7a3a",
                    "stroke-width": "3",
                },
            )
        for index, node in enumerate(nodes):
            group = catalog[node.group]
            cx, cy = to_px(placed.positions[index])
            ET.SubElement(
                svg,
                "circle",
                {
                    "class": "node",
                    "cx": f"{cx:.2f}", "cy": f"{cy:.2f}",
                    "r": f"{group.length / 2 * scale:.2f}",
                    "fill": "#37b24d",
                    "fill-opacity": "0.6",
                    "stroke": "#14532d",
                },
            )
            label = ET.SubElement(
                svg,
                "text",
                {
                    "class": "node-label",
                    "x": f"{cx:.2f}", "y": f"{cy + 0.12 * scale:.2f}",
                    "font-size": f"{0.3 * scale:.1f}",
                    "text-anchor": "middle",
                },
            )
            label.text = group.label

    ET.indent(svg)
    return ET.tostring(svg, encoding="unicode", xml_declaration=True) + "\n"
