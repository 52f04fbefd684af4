"""Exception types shared across the pipeline."""


class BiaslexError(Exception):
    """Base class for all pipeline errors."""


class DataError(BiaslexError):
    """Malformed input data: bad records, unknown categories, schema violations."""


class ConfigError(BiaslexError):
    """Invalid configuration or unsatisfiable operation preconditions."""
