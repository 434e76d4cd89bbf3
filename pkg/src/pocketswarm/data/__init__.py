"""Shipped sample data: a default group catalog and three synthetic sites."""

from importlib import resources
from pathlib import Path

SAMPLE_SITES = ("rhinovirus", "falciparum", "hiv1")


def default_catalog_path() -> Path:
    return Path(resources.files(__name__) / "default.cat")


def sample_site_path(name: str) -> Path:
    if name not in SAMPLE_SITES:
        raise KeyError(f"unknown sample site {name!r}; available: {', '.join(SAMPLE_SITES)}")
    return Path(resources.files(__name__) / f"{name}.site")
