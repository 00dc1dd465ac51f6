"""Exception types shared across the package."""


class ParameterError(ValueError):
    """Invalid or inconsistent public parameters (CLI exit code 1)."""


class CapacityError(RuntimeError):
    """A brute-force search space exceeds its configured bound (CLI exit code 2)."""
