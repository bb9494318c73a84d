"""Shared fixtures: archive cache discovery and one session-wide conversion.

Tests never download.  The cache directory comes from
DATASET_CONVERTER_CACHE, falling back to /tmp where the development sandbox
stages the snapshot archives; missing archives skip the suite with a message
naming what to seed.
"""

import os
from pathlib import Path

import pytest

from dataset_converter.sources import ARCHIVES


def _cache_root() -> Path:
    env = os.environ.get("DATASET_CONVERTER_CACHE")
    return Path(env) if env else Path("/tmp")


@pytest.fixture(scope="session")
def cache_dir() -> Path:
    root = _cache_root()
    missing = [a.filename for a in ARCHIVES.values() if not (root / a.filename).is_file()]
    if missing:
        pytest.skip(
            f"archive cache {root} lacks {missing}; set DATASET_CONVERTER_CACHE "
            "to a directory holding the pinned snapshots"
        )
    return root


@pytest.fixture(scope="session")
def converted_cora(cache_dir, tmp_path_factory) -> Path:
    from dataset_converter import convert

    out = tmp_path_factory.mktemp("canon") / "cora"
    convert("cora", out, cache_dir=cache_dir)
    return out
