"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the supported combinatorial domain."""


class VerificationError(RuntimeError):
    """A machine-checked structural claim failed.

    Raised when two routes that must agree (e.g. a closed form and its
    search oracle, or a shape tag and its defining predicate) disagree.
    """
