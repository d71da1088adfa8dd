"""Registry of the six real-world networks and count-validated loading.

Only Zachary's karate club ships with the package. The other files must be
placed in a directory passed as ``dataset_dir`` (or named by the
``CLIQUEDIST_DATASETS`` environment variable) under the file names below.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .graph import Graph
from .graph_io import parse

ENV_VAR = "CLIQUEDIST_DATASETS"


class DatasetError(RuntimeError):
    pass


@dataclass(frozen=True)
class DatasetDescriptor:
    name: str
    title: str
    filename: str
    format: str
    expected_n: int
    expected_m: int


DATASETS: dict[str, DatasetDescriptor] = {
    d.name: d
    for d in (
        DatasetDescriptor("karate", "Zachary's Karate Club", "karate.gml", "gml", 34, 78),
        DatasetDescriptor("dolphins", "Dolphins' Social Network", "dolphins.gml", "gml", 62, 159),
        DatasetDescriptor("polbooks", "US Politics Books Network", "polbooks.gml", "gml", 105, 441),
        DatasetDescriptor("adjnoun", "Word Adjacencies Network", "adjnoun.gml", "gml", 112, 425),
        DatasetDescriptor("football", "US College Football Network", "football.gml", "gml", 115, 613),
        DatasetDescriptor("usair97", "US Airports 1997 Network", "USAir97.net", "pajek", 332, 2126),
    )
}


def _candidates(desc: DatasetDescriptor, dataset_dir: str | Path | None):
    dirs = [dataset_dir, os.environ.get(ENV_VAR)]
    for d in dirs:
        if d:
            yield Path(d) / desc.filename
    bundled = resources.files("cliquedist") / "data" / desc.filename
    if bundled.is_file():
        yield bundled


def find_dataset(name: str, dataset_dir: str | Path | None = None):
    desc = DATASETS[name]
    for path in _candidates(desc, dataset_dir):
        if path.is_file():
            return path
    return None


def load_dataset(name: str, dataset_dir: str | Path | None = None) -> Graph:
    """Parse a registered dataset and check it against its expected counts."""
    if name not in DATASETS:
        raise DatasetError(f"unknown dataset {name!r}; known: {', '.join(DATASETS)}")
    desc = DATASETS[name]
    path = find_dataset(name, dataset_dir)
    if path is None:
        searched = [str(d) for d in (dataset_dir, os.environ.get(ENV_VAR)) if d] + ["bundled data"]
        raise DatasetError(
            f"{desc.title}: {desc.filename} not found (searched {', '.join(searched)}; "
            f"pass a dataset directory or set {ENV_VAR})"
        )
    g = parse(path.read_text(encoding="utf-8", errors="replace"), desc.format)
    if (g.n, g.m) != (desc.expected_n, desc.expected_m):
        raise DatasetError(
            f"{desc.title}: {path} has n={g.n}, m={g.m}; "
            f"expected n={desc.expected_n}, m={desc.expected_m}"
        )
    return g
