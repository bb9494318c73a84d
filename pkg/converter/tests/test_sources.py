import pytest

from dataset_converter.errors import ConverterError
from dataset_converter.sources import ARCHIVES, SOURCES, get_source


def test_every_source_resolves_to_exactly_one_spec():
    for name, spec in SOURCES.items():
        assert get_source(name) is spec
        assert spec.name == name


def test_unknown_name_lists_supported_datasets():
    with pytest.raises(ConverterError, match="amazon-photo.*pubmed|pubmed.*amazon-photo"):
        get_source("reddit")


def test_expected_statistics_are_positive_and_complete():
    assert len(SOURCES) == 8
    for spec in SOURCES.values():
        n, e, f, c = spec.expected
        assert n > 0 and e > 0 and f > 0 and c >= 2
        assert e <= n * (n - 1) // 2


def test_archives_pin_full_checksums_and_real_urls():
    for archive in ARCHIVES.values():
        assert len(archive.sha256) == 64
        assert int(archive.sha256, 16) >= 0
        assert archive.url.startswith("https://")
        assert archive.filename.endswith(".tar.gz")


def test_members_name_files_inside_their_archive():
    for spec in SOURCES.values():
        assert spec.kind in ("planetoid", "npz")
        assert len(spec.members) == (8 if spec.kind == "planetoid" else 1)
        for member in spec.members:
            assert not member.startswith("/") and ".." not in member
