"""Archive download, checksum pinning, and member extraction.

Archives land in a cache directory and are verified against their pinned
sha256 before any byte is parsed, so a conversion is reproducible offline
once the cache is seeded.  Cache resolution order: explicit argument, the
DATASET_CONVERTER_CACHE environment variable, ~/.cache/dataset-converter.
A per-archive URL override (DATASET_CONVERTER_URL_<KEY>, key upper-cased
with '-' as '_') exists for mirrors.
"""

from __future__ import annotations

import hashlib
import os
import tarfile
import urllib.error
import urllib.request
from pathlib import Path

from .errors import ChecksumError, ConverterError, FetchError
from .sources import Archive

_CHUNK = 1 << 20


def resolve_cache_dir(cache_dir: str | os.PathLike | None = None) -> Path:
    if cache_dir is not None:
        return Path(cache_dir)
    env = os.environ.get("DATASET_CONVERTER_CACHE")
    if env:
        return Path(env)
    return Path.home() / ".cache" / "dataset-converter"


def sha256_file(path: Path) -> str:
    digest = hashlib.sha256()
    with open(path, "rb") as f:
        while chunk := f.read(_CHUNK):
            digest.update(chunk)
    return digest.hexdigest()


def _archive_url(archive: Archive) -> str:
    env_key = "DATASET_CONVERTER_URL_" + archive.key.upper().replace("-", "_")
    return os.environ.get(env_key, archive.url)


def fetch_archive(archive: Archive, cache_dir: str | os.PathLike | None = None) -> Path:
    """Return a verified local copy of the archive, downloading on a miss."""
    root = resolve_cache_dir(cache_dir)
    path = root / archive.filename
    if path.is_file():
        actual = sha256_file(path)
        if actual != archive.sha256:
            raise ChecksumError(
                f"cached {path} has sha256 {actual}, pinned {archive.sha256}; "
                "delete the file to re-download"
            )
        return path
    root.mkdir(parents=True, exist_ok=True)
    url = _archive_url(archive)
    tmp = path.with_suffix(path.suffix + ".part")
    try:
        with urllib.request.urlopen(url, timeout=60) as resp, open(tmp, "wb") as out:
            while chunk := resp.read(_CHUNK):
                out.write(chunk)
    except (urllib.error.URLError, TimeoutError, OSError) as e:
        tmp.unlink(missing_ok=True)
        raise FetchError(f"download of {url} failed: {e}; retry or pre-seed {path}") from e
    actual = sha256_file(tmp)
    if actual != archive.sha256:
        tmp.unlink(missing_ok=True)
        raise ChecksumError(f"download from {url} has sha256 {actual}, pinned {archive.sha256}")
    tmp.replace(path)
    return path


def read_members(tar_path: Path, names: tuple[str, ...]) -> dict[str, bytes]:
    """Read the named members in one sequential pass over a .tar.gz."""
    wanted = set(names)
    out: dict[str, bytes] = {}
    with tarfile.open(tar_path, "r:gz") as tar:
        for member in tar:
            if member.name in wanted:
                stream = tar.extractfile(member)
                if stream is None:
                    raise ConverterError(f"{member.name} in {tar_path} is not a regular file")
                out[member.name] = stream.read()
                if len(out) == len(wanted):
                    break
    missing = wanted - out.keys()
    if missing:
        raise ConverterError(f"{tar_path} lacks expected members: {sorted(missing)}")
    return out
