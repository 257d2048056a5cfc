"""Shared fixtures: the shipped bundle, single tables and group files."""

import os

import pytest

from core.config import AlphaRankConfig
from core.dataio import load_bundle, load_document, load_group_file, load_table
from core.domain import CharacterTable

DATA_DIR = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), "data")

SHIPPED_TABLES = ("s3", "d8", "a4", "a5", "s5", "m11")


def pytest_addoption(parser):
    parser.addoption("--extended", action="store_true", default=False, help="run full-scale tests")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--extended"):
        return
    skip = pytest.mark.skip(reason="full-scale run, needs --extended")
    for item in items:
        if "extended" in item.keywords:
            item.add_marker(skip)


def data_path(kind: str, name: str) -> str:
    return AlphaRankConfig(data_dir=DATA_DIR).get_data_path(kind, name)


@pytest.fixture(scope="session")
def config() -> AlphaRankConfig:
    return AlphaRankConfig(data_dir=DATA_DIR)


@pytest.fixture(scope="session")
def bundle(config):
    return load_bundle(config=config)


@pytest.fixture(scope="session")
def tables() -> dict[str, CharacterTable]:
    return {name: load_table(data_path("tables", name)) for name in SHIPPED_TABLES}


@pytest.fixture(scope="session")
def groups():
    names = ("s3", "d8", "a4", "a5", "s5", "m11", "z3xz3")
    return {name: load_group_file(data_path("groups", name)) for name in names}


@pytest.fixture(scope="session")
def require_table(bundle):
    """Look up a bundle table, or skip naming the missing export."""

    def require(name: str) -> CharacterTable:
        if name not in bundle.tables:
            pytest.skip(f"external table {name!r} not present (run scripts/export_ctbllib.g)")
        return bundle.tables[name]

    return require


# HS.2 restricted to the classes the 2C Brauer argument touches, with the
# degree-22 character that is positive on 2C.
HS2_FRAGMENT = {
    "schema": 1,
    "group_name": "HS.2 (fragment)",
    "group_order": "88704000",
    "socle_index": 2,
    "classes": [
        {"name": "1A", "element_order": 1, "centralizer_order": "88704000"},
        {"name": "2A", "element_order": 2, "centralizer_order": "15360"},
        {"name": "2B", "element_order": 2, "centralizer_order": "5760"},
        {"name": "3A", "element_order": 3, "centralizer_order": "720"},
        {"name": "4B", "element_order": 4, "centralizer_order": "512"},
        {"name": "2C", "element_order": 2, "centralizer_order": "80640", "outer": True},
    ],
    "characters": [[22, 6, -2, 4, 2, 8]],
}


@pytest.fixture(scope="session")
def hs2_fragment() -> CharacterTable:
    return CharacterTable.model_validate(HS2_FRAGMENT)


@pytest.fixture(scope="session")
def hs2_fusions():
    names = ("hs2_z2", "hs2_v4_2a", "hs2_v4_2b", "hs2_s3", "hs2_d8")
    return {name: load_document("fusions", data_path("fusions", name)) for name in names}
