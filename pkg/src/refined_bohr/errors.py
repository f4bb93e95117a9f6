"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the region where a quantity is defined."""


class NoRootError(RuntimeError):
    """The characteristic equation has no sign change on the scanned interval."""


class SpecError(ValueError):
    """A weight or function specification string could not be parsed."""
