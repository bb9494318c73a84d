"""Upstream source registry: archives, member files, and published statistics.

Each dataset is parsed out of one pinned snapshot archive of its standard
distribution repository.  Expected statistics are (nodes, undirected edges,
features, classes) as published for these benchmarks; node, feature, and
class counts are enforced strictly while edge counts depend on the counting
convention and are only reported.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import ConverterError


@dataclass(frozen=True)
class Archive:
    key: str
    url: str
    sha256: str
    filename: str


@dataclass(frozen=True)
class SourceSpec:
    name: str
    archive: Archive
    kind: str  # "planetoid" or "npz"
    members: tuple[str, ...]
    expected: tuple[int, int, int, int]  # nodes, undirected edges, features, classes


ARCHIVES = {
    "planetoid": Archive(
        key="planetoid",
        url="https://codeload.github.com/kimiyoung/planetoid/tar.gz/refs/heads/master",
        sha256="ef1c90fe81b2a69335caee3c857c71c30664a99738c52cfbabf8d9a7409182f7",
        filename="planetoid.tar.gz",
    ),
    "gnn-benchmark": Archive(
        key="gnn-benchmark",
        url="https://codeload.github.com/shchur/gnn-benchmark/tar.gz/refs/heads/master",
        sha256="4fb8f95bd191a5e936bc61d7501ac1f4f4d75f6bb930d3f4d3cc1329552ef04d",
        filename="gnn-benchmark.tar.gz",
    ),
    "graph2gauss": Archive(
        key="graph2gauss",
        url="https://codeload.github.com/abojchevski/graph2gauss/tar.gz/refs/heads/master",
        sha256="e2c6e1b4a05a0d048088a65454eacb1ef0a5010f63844e18dc64d91e1e07183b",
        filename="graph2gauss.tar.gz",
    ),
}

_PLANETOID_SUFFIXES = ("x", "y", "tx", "ty", "allx", "ally", "graph", "test.index")


def _planetoid_members(name: str) -> tuple[str, ...]:
    return tuple(f"planetoid-master/data/ind.{name}.{s}" for s in _PLANETOID_SUFFIXES)


SOURCES = {
    "cora": SourceSpec(
        name="cora",
        archive=ARCHIVES["planetoid"],
        kind="planetoid",
        members=_planetoid_members("cora"),
        expected=(2708, 5278, 1433, 7),
    ),
    "citeseer": SourceSpec(
        name="citeseer",
        archive=ARCHIVES["planetoid"],
        kind="planetoid",
        members=_planetoid_members("citeseer"),
        expected=(3327, 4552, 3703, 6),
    ),
    "pubmed": SourceSpec(
        name="pubmed",
        archive=ARCHIVES["planetoid"],
        kind="planetoid",
        members=_planetoid_members("pubmed"),
        expected=(19717, 44324, 500, 3),
    ),
    "cora-full": SourceSpec(
        name="cora-full",
        archive=ARCHIVES["graph2gauss"],
        kind="npz",
        members=("graph2gauss-master/data/cora.npz",),
        expected=(19793, 63421, 8710, 70),
    ),
    "coauthor-cs": SourceSpec(
        name="coauthor-cs",
        archive=ARCHIVES["gnn-benchmark"],
        kind="npz",
        members=("gnn-benchmark-master/data/npz/ms_academic_cs.npz",),
        expected=(18333, 81894, 6805, 15),
    ),
    "coauthor-physics": SourceSpec(
        name="coauthor-physics",
        archive=ARCHIVES["gnn-benchmark"],
        kind="npz",
        members=("gnn-benchmark-master/data/npz/ms_academic_phy.npz",),
        expected=(34493, 247962, 8415, 5),
    ),
    "amazon-computers": SourceSpec(
        name="amazon-computers",
        archive=ARCHIVES["gnn-benchmark"],
        kind="npz",
        members=("gnn-benchmark-master/data/npz/amazon_electronics_computers.npz",),
        expected=(13752, 245861, 767, 10),
    ),
    "amazon-photo": SourceSpec(
        name="amazon-photo",
        archive=ARCHIVES["gnn-benchmark"],
        kind="npz",
        members=("gnn-benchmark-master/data/npz/amazon_electronics_photo.npz",),
        expected=(7650, 119081, 745, 8),
    ),
}


def get_source(name: str) -> SourceSpec:
    spec = SOURCES.get(name)
    if spec is None:
        known = ", ".join(sorted(SOURCES))
        raise ConverterError(f"unknown dataset '{name}'; supported: {known}")
    return spec
