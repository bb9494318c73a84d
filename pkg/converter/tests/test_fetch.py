import hashlib

import pytest

from dataset_converter.errors import ChecksumError, ConverterError, FetchError
from dataset_converter.fetch import fetch_archive, read_members, resolve_cache_dir, sha256_file
from dataset_converter.sources import ARCHIVES, Archive


def test_cache_resolution_order(tmp_path, monkeypatch):
    monkeypatch.setenv("DATASET_CONVERTER_CACHE", str(tmp_path / "env"))
    assert resolve_cache_dir(tmp_path / "arg") == tmp_path / "arg"
    assert resolve_cache_dir(None) == tmp_path / "env"
    monkeypatch.delenv("DATASET_CONVERTER_CACHE")
    assert resolve_cache_dir(None).name == "dataset-converter"


def test_sha256_file_matches_hashlib(tmp_path):
    p = tmp_path / "blob"
    p.write_bytes(b"graph bytes" * 1000)
    assert sha256_file(p) == hashlib.sha256(b"graph bytes" * 1000).hexdigest()


def test_cached_archive_with_wrong_digest_is_a_hard_error(tmp_path):
    archive = ARCHIVES["planetoid"]
    (tmp_path / archive.filename).write_bytes(b"not the archive")
    with pytest.raises(ChecksumError, match="delete the file"):
        fetch_archive(archive, tmp_path)


def test_unreachable_url_is_retryable(tmp_path):
    bogus = Archive(
        key="bogus",
        url="https://localhost:1/never.tar.gz",
        sha256="0" * 64,
        filename="never.tar.gz",
    )
    with pytest.raises(FetchError, match="retry or pre-seed"):
        fetch_archive(bogus, tmp_path)
    assert not (tmp_path / "never.tar.gz").exists()


def test_read_members_reports_missing_files(cache_dir):
    archive = ARCHIVES["planetoid"]
    path = fetch_archive(archive, cache_dir)
    with pytest.raises(ConverterError, match="lacks expected members"):
        read_members(path, ("planetoid-master/data/ind.cora.x", "planetoid-master/no-such"))


def test_read_members_returns_all_requested_bytes(cache_dir):
    archive = ARCHIVES["planetoid"]
    path = fetch_archive(archive, cache_dir)
    names = (
        "planetoid-master/data/ind.cora.x",
        "planetoid-master/data/ind.cora.test.index",
    )
    members = read_members(path, names)
    assert set(members) == set(names)
    assert all(len(v) > 0 for v in members.values())
