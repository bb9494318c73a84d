"""Independent re-parse and invariant check of a canonical directory.

Reads the four files from scratch (no shared state with the writer) and
fails with the location of the first violation, down to the byte offset for
binary files.  Known dataset names are additionally checked against the
published node/feature/class counts; edge counts are reported under both
counting conventions but never fail verification.
"""

from __future__ import annotations

from pathlib import Path

import numpy as np

from .canonical import FILES, read_meta
from .errors import VerificationError
from .fetch import sha256_file
from .sources import SOURCES


def _fail(msg: str):
    raise VerificationError(msg)


def verify(dir_path, expected_name: str | None = None) -> dict:
    """Check every format invariant; returns a report on success."""
    root = Path(dir_path)
    for fname in FILES:
        if not (root / fname).is_file():
            _fail(f"missing file: {root / fname}")
    meta = read_meta(root)
    try:
        n, e, f, c = (int(meta[k]) for k in ("num_nodes", "num_edges", "num_features", "num_classes"))
    except (TypeError, ValueError):
        _fail(f"meta.json counts are not integers: {meta}")
    name = str(meta["name"])
    if expected_name is not None and name != expected_name:
        _fail(f"meta.json names the dataset '{name}', expected '{expected_name}'")
    if min(n, e, f, c) < 0:
        _fail(f"meta.json counts must be non-negative: {meta}")

    edges_path, features_path, labels_path = root / "edges.bin", root / "features.bin", root / "labels.bin"
    if edges_path.stat().st_size != 8 * e:
        _fail(f"edges.bin holds {edges_path.stat().st_size} bytes, meta implies {8 * e}")
    if features_path.stat().st_size != 8 * n * f:
        _fail(f"features.bin holds {features_path.stat().st_size} bytes, meta implies {8 * n * f}")
    if labels_path.stat().st_size != 4 * n:
        _fail(f"labels.bin holds {labels_path.stat().st_size} bytes, meta implies {4 * n}")

    edges = np.fromfile(edges_path, dtype="<u4").astype(np.int64).reshape(-1, 2)
    if edges.size:
        src, dst = edges[:, 0], edges[:, 1]
        bad = np.nonzero(src >= dst)[0]
        if bad.size:
            k = int(bad[0])
            _fail(
                f"edges.bin pair {k} = ({src[k]}, {dst[k]}) violates src < dst (byte offset {8 * k})"
            )
        if dst.max() >= n:
            k = int(np.argmax(dst >= n))
            _fail(f"edges.bin pair {k} references node {dst[k]} of {n} (byte offset {8 * k})")
        keys = src * np.int64(n) + dst
        unsorted = np.nonzero(np.diff(keys) <= 0)[0]
        if unsorted.size:
            k = int(unsorted[0]) + 1
            _fail(f"edges.bin pair {k} breaks sorted/unique order (byte offset {8 * k})")

    features = np.fromfile(features_path, dtype="<f8")
    finite = np.isfinite(features)
    if not finite.all():
        flat = int(np.argmin(finite))
        _fail(
            f"features.bin value at node {flat // f}, column {flat % f} is non-finite "
            f"(byte offset {8 * flat})"
        )

    labels = np.fromfile(labels_path, dtype="<u4").astype(np.int64)
    if labels.size and labels.max() >= c:
        k = int(np.argmax(labels >= c))
        _fail(f"labels.bin label {labels[k]} at node {k} is outside [0, {c}) (byte offset {4 * k})")
    report = {
        "name": name,
        "num_nodes": n,
        "num_edges": e,
        "num_features": f,
        "num_classes": c,
        "checksums": {fname: sha256_file(root / fname) for fname in FILES},
    }
    spec = SOURCES.get(name)
    if spec is not None:
        exp_n, exp_e, exp_f, exp_c = spec.expected
        if (n, f, c) != (exp_n, exp_f, exp_c):
            _fail(
                f"'{name}' should have {exp_n} nodes, {exp_f} features, {exp_c} classes; "
                f"directory holds {n}, {f}, {c}"
            )
        report["expected_edges"] = exp_e
        report["edges_undirected"] = e
        report["edges_directed"] = 2 * e
        report["edges_match_published"] = e == exp_e or 2 * e == exp_e
    return report
