"""Parsers for the two upstream serialization families.

Both return raw ingredients (node count, directed edge pairs as found,
float64 features, int64 labels); edge canonicalization happens later so the
same invariants apply to every source.
"""

from __future__ import annotations

import io
import pickle
import warnings

import numpy as np
import scipy.sparse as sp

from .errors import ConverterError


def _dense64(matrix) -> np.ndarray:
    if sp.issparse(matrix):
        matrix = matrix.toarray()
    return np.ascontiguousarray(np.asarray(matrix), dtype=np.float64)


def parse_planetoid(members: dict[str, bytes], name: str):
    """Assemble the pickled graph/feature shards of one citation network.

    Shards: allx/ally cover training+unlabeled nodes, tx/ty the test nodes,
    test.index their positions in the full ordering, graph the adjacency
    dict.  Test indices may have gaps (isolated ids never materialized);
    those rows stay zero and their one-hot rows decode to label 0.
    """
    def shard(suffix: str):
        blob = members[f"planetoid-master/data/ind.{name}.{suffix}"]
        with warnings.catch_warnings():
            # the pickles reference pre-1.8 scipy module paths; harmless here
            warnings.filterwarnings(
                "ignore", message=".*scipy\\.sparse.* namespace is deprecated.*"
            )
            return pickle.loads(blob, encoding="latin1")

    allx, ally = shard("allx"), np.asarray(shard("ally"))
    tx, ty = shard("tx"), np.asarray(shard("ty"))
    graph = shard("graph")
    test_idx = np.loadtxt(
        io.BytesIO(members[f"planetoid-master/data/ind.{name}.test.index"]), dtype=np.int64
    )

    allx = _dense64(allx)
    tx = _dense64(tx)
    full_range = np.arange(test_idx.min(), test_idx.max() + 1)
    tx_full = np.zeros((full_range.size, tx.shape[1]))
    ty_full = np.zeros((full_range.size, ty.shape[1]))
    tx_full[test_idx - test_idx.min()] = tx
    ty_full[test_idx - test_idx.min()] = ty

    features = np.vstack([allx, tx_full])
    onehot = np.vstack([ally, ty_full])
    labels = onehot.argmax(axis=1).astype(np.int64)
    num_nodes = features.shape[0]
    if test_idx.max() + 1 != num_nodes:
        raise ConverterError(
            f"{name}: test indices end at {test_idx.max()} but {num_nodes} feature rows exist"
        )

    edges = np.array(
        [(v, w) for v, nbrs in graph.items() for w in nbrs], dtype=np.int64
    ).reshape(-1, 2)
    return num_nodes, edges, features, labels


def parse_npz(data: bytes):
    """Decode one CSR-adjacency npz container (adj_*, attr_*, labels keys).

    Only the needed arrays are materialized: these containers often carry
    extra object-typed metadata that cannot load with pickling disabled.
    """
    with np.load(io.BytesIO(data), allow_pickle=False) as loader:
        present = set(loader.files)
        for key in ("adj_data", "adj_indices", "adj_indptr", "adj_shape", "labels"):
            if key not in present:
                raise ConverterError(f"npz container lacks required key '{key}'")
        adj = sp.csr_matrix(
            (loader["adj_data"], loader["adj_indices"], loader["adj_indptr"]),
            shape=tuple(loader["adj_shape"]),
        )
        if "attr_data" in present:
            attr = sp.csr_matrix(
                (loader["attr_data"], loader["attr_indices"], loader["attr_indptr"]),
                shape=tuple(loader["attr_shape"]),
            )
        elif "attr_matrix" in present:
            attr = loader["attr_matrix"]
        else:
            raise ConverterError("npz container holds neither attr_data nor attr_matrix")
        labels_raw = loader["labels"]
    coo = adj.tocoo()
    edges = np.stack([coo.row.astype(np.int64), coo.col.astype(np.int64)], axis=1)
    features = _dense64(attr)
    labels = np.asarray(labels_raw, dtype=np.int64)
    num_nodes = int(adj.shape[0])
    if features.shape[0] != num_nodes or labels.shape[0] != num_nodes:
        raise ConverterError(
            f"inconsistent node counts: adjacency {num_nodes}, "
            f"features {features.shape[0]}, labels {labels.shape[0]}"
        )
    return num_nodes, edges, features, labels
