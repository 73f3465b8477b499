"""Exception types shared across the package."""


class ConfigError(ValueError):
    """Invalid or inconsistent configuration parameters."""


class UnsupportedError(ValueError):
    """Request for a size or scheme that is out of supported range."""
