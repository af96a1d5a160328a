"""Exception types shared across the package.

The CLI maps these onto exit codes: configuration/validation problems exit
with 2, evaluation failures with 3.
"""


class ValidationError(ValueError):
    """A domain object violates one of its invariants."""


class ConfigError(ValidationError):
    """A scenario config file cannot be parsed or resolved."""


class UnknownFieldError(ConfigError):
    """A config or sweep axis names a field that does not exist."""


class EvaluationError(ValueError):
    """A scenario is valid but the requested quantity is undefined for it."""


class EvanescentFrequencyError(EvaluationError):
    """Operation requires a propagating mode but the frequency is at or below cutoff."""


class PlacementError(ValidationError):
    """Antenna positions fall outside the waveguide or are not strictly increasing."""


class NoPropagatingSubcarriersError(EvaluationError):
    """Every subcarrier of the grid lies at or below the waveguide cutoff."""
