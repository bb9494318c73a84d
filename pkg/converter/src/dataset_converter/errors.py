"""Error taxonomy: transient fetch problems vs permanent data problems."""


class ConverterError(Exception):
    """Base class for every failure this package raises on purpose."""


class FetchError(ConverterError):
    """Download failed; retrying later (or pre-seeding the cache) may succeed."""


class ChecksumError(ConverterError):
    """An archive's bytes do not match the pinned digest; never retried."""


class StatValidationError(ConverterError):
    """Converted node/feature/class counts disagree with published statistics."""


class VerificationError(ConverterError):
    """A canonical directory violates a format invariant."""
