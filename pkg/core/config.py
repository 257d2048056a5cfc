# Central configuration for all alpharank modules.
import os
from dataclasses import dataclass, field


def _default_data_dir() -> str:
    project_root = os.path.abspath(
        os.path.join(os.path.dirname(__file__), "..")
    )
    return os.path.join(project_root, "data")


DEFAULT_CITATION_WHITELIST: tuple[str, ...] = (
    "[GK] Prop 6.2",
    "[BGK] Table 9",
    "[HS]",
    "[KMS]/[K]",
    "[S]",
    "[RZ2] Thm 2",
    "[LW] Thm 1.1",
)

# Directory layout of a data bundle: kind -> (subdirectory, file suffix).
DATA_LAYOUT: dict[str, tuple[str, str]] = {
    "tables": ("tables", ".ctab.json"),
    "fusions": ("fusions", ".fus.json"),
    "groups": ("groups", ".grp"),
    "claims": ("claims", ".claim.json"),
    "maxdata": ("maxdata", ".max.json"),
}


# Tables every complete bundle carries.
REQUIRED_TABLES: tuple[str, ...] = ("s3", "d8", "a4", "a5", "s5", "m11", "hs2", "mcl2", "suz2")

EXTENDED_BOUND = 10**12


@dataclass
class AlphaRankConfig:
    # Data bundle root (tables/, fusions/, groups/, claims/, maxdata/)
    data_dir: str = field(default_factory=_default_data_dir)

    # Brute-force oracles
    enumeration_bound: int = 10**7
    subgroup_enumeration_bound: int = 10**5
    max_alpha_k: int = 5

    # Certificates
    citation_whitelist: tuple[str, ...] = DEFAULT_CITATION_WHITELIST
    enforce_citation_whitelist: bool = True

    # Loader
    load_workers: int = 4

    # Full-scale runs (Suz class 3A) lift both oracle bounds; hours of CPU time
    extended: bool = False

    def oracle_bounds(self) -> tuple[int, int]:
        """(enumeration bound, subgroup enumeration bound) in effect."""
        if not self.extended:
            return self.enumeration_bound, self.subgroup_enumeration_bound
        return (
            max(self.enumeration_bound, EXTENDED_BOUND),
            max(self.subgroup_enumeration_bound, EXTENDED_BOUND),
        )

    def get_data_path(self, kind: str, name: str) -> str:
        subdir, suffix = DATA_LAYOUT[kind]
        filename = name if name.endswith(suffix) else f"{name}{suffix}"
        return os.path.join(self.data_dir, subdir, filename)


# Bundle discovery helpers, co-located to avoid circular imports.


def data_name(path: str, kind: str) -> str:
    """Strip directory and layout suffix: 'fusions/hs2_z2.fus.json' -> 'hs2_z2'."""
    _, suffix = DATA_LAYOUT[kind]
    base = os.path.basename(path)
    return base[: -len(suffix)] if base.endswith(suffix) else base


def list_data_files(kind: str, config: AlphaRankConfig | None = None) -> list[str]:
    """Return the files of one layout kind, sorted by name for determinism."""
    cfg = config or AlphaRankConfig()
    subdir, suffix = DATA_LAYOUT[kind]
    directory = os.path.join(cfg.data_dir, subdir)
    if not os.path.isdir(directory):
        return []
    return sorted(
        os.path.join(directory, name)
        for name in os.listdir(directory)
        if name.endswith(suffix) and os.path.isfile(os.path.join(directory, name))
    )
