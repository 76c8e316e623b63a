"""Exception types shared across the package."""


class ValidationError(ValueError):
    """Bad user input: malformed partitions, invalid states, weight mismatches."""


class CapExceededError(ValidationError):
    """A size cap (degree, tensor dimension) was exceeded."""


class CacheError(ValidationError):
    """An on-disk character table failed verification."""


class InternalConsistencyError(RuntimeError):
    """An exact identity that must hold did not (e.g. k! does not divide a class sum)."""
