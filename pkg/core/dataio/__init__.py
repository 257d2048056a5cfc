# Loading and cross-referencing of tables, fusions, groups, claims and max data.

from core.dataio.errors import DataLoadError, LocatedError
from core.dataio.groups import GroupFile, load_group_file, parse_group_text
from core.dataio.loader import DataBundle, load_bundle, load_document, load_table, missing_tables
from core.dataio.trace import dump_verdict, export_trace, read_trace, replay_trace

__all__ = [
    "DataBundle",
    "DataLoadError",
    "GroupFile",
    "LocatedError",
    "dump_verdict",
    "export_trace",
    "load_bundle",
    "load_document",
    "load_group_file",
    "load_table",
    "missing_tables",
    "parse_group_text",
    "read_trace",
    "replay_trace",
]
