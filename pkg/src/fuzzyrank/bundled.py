"""Access to the data files shipped inside the package.

Two ready-made schemes ("academic", "non-academic") and one example
dataset of 15 candidates. The service seeds an empty store with these so a
fresh `fuzzyrank serve --store <new dir>` has something to rank.
"""
from __future__ import annotations

from importlib.resources import files
from pathlib import Path

SCHEME_FILES = {"academic": "academic.json", "non-academic": "nonacademic.json"}
DATASET_NAME = "table3"


def data_dir() -> Path:
    """Filesystem path of the bundled data directory."""
    return Path(str(files("fuzzyrank").joinpath("data")))


def scheme_path(name: str) -> Path:
    return data_dir() / SCHEME_FILES[name]


def dataset_path() -> Path:
    return data_dir() / "table3.csv"
