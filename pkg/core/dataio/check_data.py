"""Data bundle diagnostic script.

Usage:
    python -m core.dataio.check_data [data_dir]
"""

from __future__ import annotations

import sys

from core.config import REQUIRED_TABLES, AlphaRankConfig
from core.dataio.errors import DataLoadError
from core.dataio.loader import DataBundle, load_bundle


def missing_required_tables(bundle: DataBundle) -> list[str]:
    return [name for name in REQUIRED_TABLES if name not in bundle.tables]


def check_data(root: str | None = None) -> tuple[DataBundle | None, list[str]]:
    """Load the bundle and return it with a printable report (bundle is None on failure)."""
    config = AlphaRankConfig() if root is None else AlphaRankConfig(data_dir=root)
    lines = [f"=== Bundle: {config.data_dir} ==="]
    try:
        bundle = load_bundle(config=config)
    except DataLoadError as e:
        lines.append(f"    FAILED: {len(e.errors)} error(s)")
        lines.extend(f"        {err}" for err in e.errors)
        return None, lines

    lines.append(
        f"    tables {len(bundle.tables)}, fusions {len(bundle.fusions)}, groups {len(bundle.groups)}, "
        f"max data {len(bundle.max_data)}, claims {len(bundle.claims)}"
    )
    for name, table in sorted(bundle.tables.items()):
        report = bundle.reports.get(name)
        warnings = len(report.warnings) if report else 0
        lines.append(
            f"    table {name}: {table.group_name}, {len(table.classes)} classes, "
            f"{'consistent' if not warnings else f'consistent, {warnings} warning(s)'}"
        )
    for name in missing_required_tables(bundle):
        lines.append(f"    MISSING required table {name} (run scripts/export_ctbllib.g)")
    for (kind, name), missing in sorted(bundle.unavailable.items()):
        lines.append(f"    {kind} {name}: skipped, needs {', '.join(sorted(set(missing)))}")
    return bundle, lines


def check_exit_code(bundle: DataBundle | None) -> int:
    """0 for a complete bundle, 2 if it failed to load or lacks a required table."""
    return 0 if bundle is not None and not missing_required_tables(bundle) else 2


if __name__ == "__main__":
    bundle, report = check_data(sys.argv[1] if len(sys.argv) > 1 else None)
    print("\n".join(report))
    sys.exit(check_exit_code(bundle))
