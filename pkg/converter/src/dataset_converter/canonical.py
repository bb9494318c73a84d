"""Canonical dataset directory writer and low-level reader.

A directory holds exactly four files:

- ``meta.json``: UTF-8 JSON with keys name, num_nodes, num_edges,
  num_features, num_classes.
- ``edges.bin``: little-endian uint32 (src, dst) pairs, one per undirected
  edge, src < dst, lexicographically sorted, no duplicates, no self-loops.
- ``features.bin``: little-endian float64, row-major N x F.
- ``labels.bin``: little-endian uint32, length N.

The writer is deterministic: identical inputs produce byte-identical files.
"""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np

from .errors import ConverterError

FILES = ("meta.json", "edges.bin", "features.bin", "labels.bin")
META_KEYS = ("name", "num_nodes", "num_edges", "num_features", "num_classes")


def canonical_edges(num_nodes: int, edges: np.ndarray) -> np.ndarray:
    """Undirected edge set as sorted unique (src, dst) pairs with src < dst."""
    edges = np.asarray(edges, dtype=np.int64).reshape(-1, 2)
    if edges.size and (edges.min() < 0 or edges.max() >= num_nodes):
        bad = int(np.nonzero((edges < 0).any(axis=1) | (edges >= num_nodes).any(axis=1))[0][0])
        raise ConverterError(
            f"edge {bad} = ({edges[bad, 0]}, {edges[bad, 1]}) is out of range for {num_nodes} nodes"
        )
    lo = edges.min(axis=1)
    hi = edges.max(axis=1)
    keep = lo != hi
    # joint key keeps dedup + lexicographic sort a single unique() pass
    keys = np.unique(lo[keep] * np.int64(num_nodes) + hi[keep])
    return np.stack([keys // num_nodes, keys % num_nodes], axis=1)


def write_canonical(
    out_dir, name: str, edges: np.ndarray, features: np.ndarray, labels: np.ndarray
) -> dict:
    """Write the four files; returns the metadata that went into meta.json."""
    if features.ndim != 2 or features.shape[1] == 0:
        raise ConverterError(f"features must be a non-empty 2-D matrix, got shape {features.shape}")
    if labels.shape != (features.shape[0],):
        raise ConverterError(
            f"labels shape {labels.shape} does not cover {features.shape[0]} nodes"
        )
    if labels.size and labels.min() < 0:
        raise ConverterError(f"negative label {labels.min()}")
    root = Path(out_dir)
    root.mkdir(parents=True, exist_ok=True)
    meta = {
        "name": name,
        "num_nodes": int(features.shape[0]),
        "num_edges": int(edges.shape[0]),
        "num_features": int(features.shape[1]),
        "num_classes": int(labels.max()) + 1 if labels.size else 0,
    }
    (root / "meta.json").write_text(json.dumps(meta, sort_keys=True, indent=2) + "\n", encoding="utf-8")
    np.ascontiguousarray(edges).astype("<u4").tofile(root / "edges.bin")
    np.ascontiguousarray(features, dtype="<f8").tofile(root / "features.bin")
    np.ascontiguousarray(labels).astype("<u4").tofile(root / "labels.bin")
    return meta


def read_meta(dir_path) -> dict:
    path = Path(dir_path) / "meta.json"
    try:
        meta = json.loads(path.read_text(encoding="utf-8"))
    except (OSError, ValueError) as e:
        raise ConverterError(f"cannot read {path}: {e}") from e
    missing = [k for k in META_KEYS if k not in meta]
    if missing:
        raise ConverterError(f"{path} is missing keys {missing}")
    return meta
