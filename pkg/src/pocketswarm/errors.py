"""Exception hierarchy shared across the package.

Everything raised on bad input derives from :class:`PocketSwarmError`,
so callers (notably the CLI) can distinguish "your files/arguments are
wrong" from genuine bugs.
"""


class PocketSwarmError(Exception):
    """Base class for all input and domain errors raised by pocketswarm."""


# --- catalog files ---------------------------------------------------------

class CatalogError(PocketSwarmError):
    """A functional-group catalog file failed validation."""


class BadCatalogLine(CatalogError):
    """A catalog line does not match `index;label;valency;length;charge;vdw_a;vdw_b`."""


class MissingEntry(CatalogError):
    """The catalog does not contain exactly 45 entries with dense indices."""


class DuplicateIndex(CatalogError):
    """Two catalog lines claim the same group index."""


class NullGroupViolation(CatalogError):
    """Entry 44 is not the all-zero NULL group."""


class NegativeParameter(CatalogError):
    """A valency, length or Van der Waals parameter is negative."""


# --- site files ------------------------------------------------------------

class SiteError(PocketSwarmError):
    """An active-site file failed validation."""


class BadHeader(SiteError):
    """The `site;` or `axis;` header lines are missing or malformed."""


class BadResidueLine(SiteError):
    """A `residue;` line is malformed."""


class BadPoseLine(SiteError):
    """A `pose;` line is malformed."""


class PolarityChargeMismatch(SiteError):
    """A residue's polarity tag contradicts the sign of its charge."""


class DegenerateAxis(SiteError):
    """The two axis endpoints coincide."""


class NoResidues(SiteError):
    """The site declares no residues."""


class NoPoses(SiteError):
    """The site declares no poses."""


class PoseOutOfBounds(SiteError):
    """A pose anchor lies outside the residue bounding box expanded by 3 A."""


# --- ligands and energies --------------------------------------------------

class EmptyLigand(PocketSwarmError):
    """An operation that needs at least one placed node got an empty ligand."""


class NonpositiveDistance(PocketSwarmError):
    """Pair energies are undefined at distance <= 0."""


# --- harness / CLI ---------------------------------------------------------

class BudgetExceeded(PocketSwarmError):
    """An exhaustive enumeration would exceed its evaluation budget."""


class BadGenome(PocketSwarmError):
    """A genome file does not hold exactly 15 reals inside [0, 45)."""
