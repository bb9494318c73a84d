"""Converters from public graph benchmark distributions to the canonical
dataset directory format (meta.json, edges.bin, features.bin, labels.bin)."""

from .canonical import FILES, META_KEYS, canonical_edges, write_canonical
from .convert import convert
from .errors import (
    ChecksumError,
    ConverterError,
    FetchError,
    StatValidationError,
    VerificationError,
)
from .sources import ARCHIVES, SOURCES, get_source
from .verify import verify

__all__ = [
    "ARCHIVES",
    "FILES",
    "META_KEYS",
    "SOURCES",
    "ChecksumError",
    "ConverterError",
    "FetchError",
    "StatValidationError",
    "VerificationError",
    "canonical_edges",
    "convert",
    "get_source",
    "verify",
    "write_canonical",
]
