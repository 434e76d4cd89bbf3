import pytest

from pocketswarm import data, load_catalog, parse_site


@pytest.fixture(scope="session")
def catalog():
    return load_catalog(data.default_catalog_path().read_text(encoding="utf-8"))


@pytest.fixture(scope="session")
def catalog_text():
    return data.default_catalog_path().read_text(encoding="utf-8")


@pytest.fixture(scope="session")
def rhino_site():
    return parse_site(data.sample_site_path("rhinovirus").read_text(encoding="utf-8"))


@pytest.fixture(scope="session")
def all_sites():
    return {
        name: parse_site(data.sample_site_path(name).read_text(encoding="utf-8"))
        for name in data.SAMPLE_SITES
    }


def make_catalog_text(overrides=None):
    """45-line catalog where every non-NULL group is `G<i>`, valency 1,
    length 1.0, uncharged, vdw 1.0/1.0; `overrides` replaces whole rows by
    index with (label, valency, length, charge, vdw_a, vdw_b) tuples."""
    overrides = overrides or {}
    lines = []
    for i in range(44):
        label, val, length, charge, a, b = overrides.get(i, (f"G{i}", 1, 1.0, 0, 1.0, 1.0))
        lines.append(f"{i};{label};{val};{length};{charge};{a};{b}")
    lines.append("44;NULL;0;0;0;0;0")
    return "\n".join(lines) + "\n"


def make_site_text(axis=(0.0, 0.0, 10.0, 0.0), poses=((0.0, 0.0, 1),), residues=None):
    residues = residues or [("R1", 1.0, 1.0, 0, "nonpolar"), ("R2", 8.0, -1.0, 0, "nonpolar")]
    lines = ["site;toy", "axis;" + ";".join(str(v) for v in axis)]
    for ax, ay, d in poses:
        lines.append(f"pose;{ax};{ay};{d}")
    for rid, x, y, q, pol in residues:
        lines.append(f"residue;{rid};{x};{y};{q};{pol}")
    return "\n".join(lines) + "\n"


@pytest.fixture
def toy_catalog():
    # group 0: 3-way branch point; 1/2: unit/long terminals; 3: linker;
    # 4/5: charged terminals; 6: 4-way branch point
    text = make_catalog_text({
        0: ("A3", 3, 1.0, 0, 1.0, 1.0),
        1: ("B1", 1, 1.0, 0, 1.0, 1.0),
        2: ("C1", 1, 2.0, 0, 1.0, 1.0),
        3: ("L2", 2, 1.0, 0, 1.0, 1.0),
        4: ("P+", 1, 1.0, 1, 1.0, 1.0),
        5: ("M-", 1, 1.0, -1, 1.0, 1.0),
        6: ("X4", 4, 1.0, 0, 1.0, 1.0),
    })
    return load_catalog(text)


@pytest.fixture
def toy_site():
    # +x axis with a forward and a mirrored pose at the origin
    return parse_site(make_site_text(poses=((0.0, 0.0, 1), (0.0, 0.0, -1))))
