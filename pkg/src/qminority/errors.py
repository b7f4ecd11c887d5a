"""Shared exception types; the CLI maps these onto its exit codes."""


class DomainError(ValueError):
    """A numeric input lies outside its allowed domain."""


class DimensionError(ValueError):
    """Vector or matrix sizes do not line up."""


class InvalidSpecError(ValueError):
    """A game specification violates a structural requirement."""


class BoundaryProfileError(DomainError):
    """Gradient requested at a profile touching the [0, 1] boundary.

    Boundary candidates should go through the best-response audit instead.
    """


class ConfigError(ValueError):
    """A scenario config or CLI argument set cannot be interpreted."""
