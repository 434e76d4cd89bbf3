"""Command-line entry point.

Subcommands: ``design`` (run an optimizer and write report, structure,
genome and manifest files), ``evaluate`` (score a genome file),
``render`` (emit an SVG picture), ``compare`` (multi-seed algorithm
table) and ``oracle`` (exhaustive minimum of a restricted instance).

Exit codes: 0 success, 2 bad input (unreadable/malformed files), 3
usage errors.  Runs are reproducible byte for byte given the same
inputs and --seed; only the manifest's timestamp line varies.
"""

from __future__ import annotations

import argparse
import hashlib
import sys
from dataclasses import asdict
from datetime import datetime, timezone
from pathlib import Path

from . import __version__, data
from .baselines import GaConfig, compare, enumerate_exact, ga_run, random_search, table_to_text
from .catalog import load_catalog
from .energy import EnergyConfig, best_over_poses, ligand_objective, report_to_text
from .errors import BadGenome, PocketSwarmError
from .ligand import GENOME_LENGTH, check_genome, decode, embed, to_structure_text
from .pso import PsoConfig
from .pso import run as pso_run
from .render import render_svg
from .site import parse_site


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse would exit 2; usage errors are exit 3
        raise _UsageError(message)


def _resolve_input(path: str) -> Path:
    """Accept a real path or the bare name of a shipped sample file."""
    p = Path(path)
    if p.exists():
        return p
    name = p.name
    if name in ("default", "default.cat"):
        return data.default_catalog_path()
    for site_name in data.SAMPLE_SITES:
        if name in (site_name, f"{site_name}.site"):
            return data.sample_site_path(site_name)
    raise FileNotFoundError(f"no such file: {path}")


def _load_inputs(args):
    site_path = _resolve_input(args.site)
    catalog_path = _resolve_input(args.catalog)
    site = parse_site(site_path.read_text(encoding="utf-8"))
    catalog = load_catalog(catalog_path.read_text(encoding="utf-8"))
    return site, catalog, site_path, catalog_path


def _energy_config(args) -> EnergyConfig:
    return EnergyConfig(
        dielectric=args.dielectric,
        clash_penalty=args.clash_penalty,
        far_penalty=args.far_penalty,
        oversize_penalty=args.oversize_penalty,
    )


def _poses(args, site):
    if args.poses is None:
        return None
    poses = [int(p) for p in args.poses.split(",") if p != ""]
    for p in poses:
        if not (0 <= p < len(site.poses)):
            raise ValueError(f"pose index {p} out of range; site has {len(site.poses)} poses")
    return poses


def _parse_genome_file(path: Path) -> list[float]:
    text = path.read_text(encoding="utf-8").strip()
    parts = text.split(";")
    if len(parts) != GENOME_LENGTH:
        raise BadGenome(f"{path}: expected {GENOME_LENGTH} ';'-separated values, got {len(parts)}")
    try:
        return check_genome([float(p) for p in parts])
    except ValueError as exc:
        raise BadGenome(f"{path}: {exc}") from None


def _genome_to_line(genome) -> str:
    return ";".join(repr(float(v)) for v in genome)


def _sha256(path: Path) -> str:
    return hashlib.sha256(path.read_bytes()).hexdigest()


def _write_manifest(out_dir: Path, entries: dict) -> Path:
    entries = dict(entries)
    entries["timestamp"] = datetime.now(timezone.utc).isoformat()
    entries["tool"] = f"pocketswarm {__version__}"
    lines = [f"{k}={entries[k]}" for k in sorted(entries)]
    path = out_dir / "manifest.txt"
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    return path


def _add_common(parser):
    parser.add_argument("--site", required=True, help="site file (or sample name: rhinovirus, falciparum, hiv1)")
    parser.add_argument("--catalog", default="default", help="catalog file (default: shipped catalog)")
    parser.add_argument("--poses", default=None, help="comma-separated pose indices to consider (default: all)")
    parser.add_argument("--dielectric", type=float, default=1.0)
    parser.add_argument("--clash-penalty", type=float, default=50.0)
    parser.add_argument("--far-penalty", type=float, default=5.0)
    parser.add_argument("--oversize-penalty", type=float, default=100.0)


def build_parser() -> _Parser:
    parser = _Parser(prog="pocketswarm", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("design", help="evolve a ligand for a site")
    _add_common(p)
    p.add_argument("--out", required=True, help="output directory")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--pop", type=int, default=50)
    p.add_argument("--gens", type=int, default=100)
    p.add_argument("--algo", choices=("pso", "ga", "random"), default="pso")

    p = sub.add_parser("evaluate", help="score a genome file against a site")
    _add_common(p)
    p.add_argument("--genome", required=True)

    p = sub.add_parser("render", help="draw a genome inside its site as SVG")
    _add_common(p)
    p.add_argument("--genome", required=True)
    p.add_argument("--out", required=True, help="output SVG file")

    p = sub.add_parser("compare", help="run algorithms at equal budget over seeds")
    _add_common(p)
    p.add_argument("--algos", default="pso,ga,random")
    p.add_argument("--seeds", default="0,1,2,3,4,5,6,7,8,9,10")
    p.add_argument("--budget", type=int, default=5050)
    p.add_argument("--pop", type=int, default=50)
    p.add_argument("--out", default=None, help="also write the table to this file")

    p = sub.add_parser("oracle", help="exhaustive minimum of a restricted instance")
    _add_common(p)
    p.add_argument("--subset", required=True, help="comma-separated group indices (max 8)")
    p.add_argument("--depth", type=int, required=True, help="genes to enumerate (max 5)")

    return parser


def cmd_design(args) -> int:
    site, catalog, site_path, catalog_path = _load_inputs(args)
    config = _energy_config(args)
    poses = _poses(args, site)
    objective = ligand_objective(site, catalog, config, poses=poses)

    if args.algo == "pso":
        result = pso_run(
            PsoConfig(
                dimensions=GENOME_LENGTH,
                population=args.pop,
                max_generations=args.gens,
                stall_generations=args.gens,
                seed=args.seed,
            ),
            objective,
        )
    elif args.algo == "ga":
        result = ga_run(
            GaConfig(population=args.pop, generations=args.gens, seed=args.seed),
            objective,
            dimensions=GENOME_LENGTH,
        )
    else:
        result = random_search(
            args.pop * (args.gens + 1), objective, dimensions=GENOME_LENGTH, seed=args.seed
        )

    tree = decode(result.best_position, catalog)
    report = best_over_poses(tree, site, catalog, config, poses=poses)

    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    (out_dir / "report.txt").write_text(report_to_text(report), encoding="utf-8")
    (out_dir / "structure.txt").write_text(to_structure_text(tree, catalog), encoding="utf-8")
    (out_dir / "genome.txt").write_text(_genome_to_line(result.best_position) + "\n", encoding="utf-8")

    manifest = {
        "algo": args.algo,
        "seed": args.seed,
        "population": args.pop,
        "generations": args.gens,
        "evaluations": result.evaluations,
        "site_file": site_path,
        "site_sha256": _sha256(site_path),
        "catalog_file": catalog_path,
        "catalog_sha256": _sha256(catalog_path),
        "best_e_total": repr(report.e_total),
        "outputs": "report.txt,structure.txt,genome.txt,manifest.txt",
    }
    for key, value in sorted(asdict(config).items()):
        manifest[f"energy.{key}"] = value
    _write_manifest(out_dir, manifest)

    print(f"algo={args.algo} seed={args.seed} evaluations={result.evaluations}")
    print(f"e_total={report.e_total!r} kcal/mol")
    if report.fitness is None:
        print("fitness=undefined (e_total <= 0)")
    else:
        print(f"fitness={report.fitness!r}")
    print(f"wrote report.txt structure.txt genome.txt manifest.txt in {out_dir}")
    return 0


def cmd_evaluate(args) -> int:
    site, catalog, _, _ = _load_inputs(args)
    genome = _parse_genome_file(_resolve_input(args.genome))
    report = best_over_poses(decode(genome, catalog), site, catalog, _energy_config(args), poses=_poses(args, site))
    sys.stdout.write(report_to_text(report))
    return 0


def cmd_render(args) -> int:
    site, catalog, _, _ = _load_inputs(args)
    genome = _parse_genome_file(_resolve_input(args.genome))
    tree = decode(genome, catalog)
    if tree.is_empty:
        placed = None
    else:
        report = best_over_poses(tree, site, catalog, _energy_config(args), poses=_poses(args, site))
        placed = embed(tree, site, report.pose, catalog)
    svg = render_svg(placed, site, catalog)
    out = Path(args.out)
    out.write_text(svg, encoding="utf-8")
    print(f"wrote {out}")
    return 0


def cmd_compare(args) -> int:
    site, catalog, _, _ = _load_inputs(args)
    algorithms = [a for a in args.algos.split(",") if a]
    seeds = [int(s) for s in args.seeds.split(",") if s]
    table = compare(
        site,
        catalog,
        algorithms,
        seeds,
        budget=args.budget,
        population=args.pop,
        energy_config=_energy_config(args),
    )
    text = table_to_text(table)
    sys.stdout.write(text)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    return 0


def cmd_oracle(args) -> int:
    site, catalog, _, _ = _load_inputs(args)
    subset = [int(g) for g in args.subset.split(",") if g]
    genome, report = enumerate_exact(site, catalog, subset, args.depth, _energy_config(args))
    print(f"genome={_genome_to_line(genome)}")
    sys.stdout.write(report_to_text(report))
    return 0


_COMMANDS = {
    "design": cmd_design,
    "evaluate": cmd_evaluate,
    "render": cmd_render,
    "compare": cmd_compare,
    "oracle": cmd_oracle,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 3
    try:
        return _COMMANDS[args.command](args)
    except (PocketSwarmError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:  # bad flag values/combinations
        print(f"usage error: {exc}", file=sys.stderr)
        return 3


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
