"""From genome to structure
===========================

A candidate ligand is a vector of 15 reals in [0, 45).  floor() of each
gene picks a functional group; gene 0 is the root and later genes fill
open bond slots breadth first, with the NULL group (44) closing a
branch.  Here we decode a hand-written genome, print its outline, embed
it in the rhinovirus-style sample pocket and write an SVG picture.
"""

from pathlib import Path

from pocketswarm import (
    EnergyConfig,
    best_over_poses,
    data,
    decode,
    embed,
    load_catalog,
    parse_site,
    render_svg,
    to_structure_text,
)

out_dir = Path(__file__).parent / "output"
out_dir.mkdir(exist_ok=True)

catalog = load_catalog(data.default_catalog_path().read_text())
site = parse_site(data.sample_site_path("rhinovirus").read_text())

# root C (4 slots), then an ammonium, a carboxylate, a methyl and a NULL
# closing the last slot; trailing genes never decode
genome = [12.2, 20.5, 13.1, 3.7, 44.0] + [44.0] * 10

tree = decode(genome, catalog)
print(to_structure_text(tree, catalog))

report = best_over_poses(tree, site, catalog, EnergyConfig())
print(f"best pose {report.pose}: e_total = {report.e_total:.3f} kcal/mol, "
      f"extent {report.ligand_extent:.2f} A, fits pocket: {report.fits_site}")

placed = embed(tree, site, report.pose, catalog)
svg_path = out_dir / "ligand_in_pocket.svg"
svg_path.write_text(render_svg(placed, site, catalog))
print(f"wrote {svg_path}")
