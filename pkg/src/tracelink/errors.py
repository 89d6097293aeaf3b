"""Exception types shared across the package."""

from __future__ import annotations


class TracelinkError(Exception):
    """Base class for all errors raised by this package."""


class BadParameter(TracelinkError):
    """An argument violates a documented precondition."""


# -- corpus ------------------------------------------------------------------

class ManifestMissing(TracelinkError):
    pass


class ManifestMalformed(TracelinkError):
    pass


class ReferencedFileMissing(TracelinkError):
    pass


class DuplicateId(TracelinkError):
    pass


# -- IR baselines ------------------------------------------------------------

class EmptyCorpus(TracelinkError):
    pass


class NoCoverage(TracelinkError):
    """No query term is covered by the embedding table."""


class SizeLimit(TracelinkError):
    """Exact transport solving refused: too many distinct terms on one side."""


# -- gateway -----------------------------------------------------------------

class ProviderUnreachable(TracelinkError):
    pass


class RateLimited(TracelinkError):
    pass


class SchemaViolation(TracelinkError):
    """Provider output failed schema validation after all retries.

    Carries the cache key of the failing request when known, for replay.
    """

    def __init__(self, message: str, cache_key: str | None = None):
        super().__init__(message)
        self.cache_key = cache_key


# -- decomposition -----------------------------------------------------------

class EmptyRequirement(TracelinkError):
    pass


class EmptyEntity(TracelinkError):
    pass


# -- evaluation --------------------------------------------------------------

class MissingGold(TracelinkError):
    pass


class EmptyInput(TracelinkError):
    pass


class DatasetMismatch(TracelinkError):
    pass


# -- configuration -----------------------------------------------------------

class ConfigError(TracelinkError):
    """Configuration file or flag rejected (unknown key, bad value)."""
