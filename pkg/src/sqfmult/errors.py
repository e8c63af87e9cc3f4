"""Exception types shared across the package."""


class InputError(ValueError):
    """Malformed or out-of-range input."""


class ResourceError(RuntimeError):
    """A configured size cap (generators, recursion nodes, enumeration) was exceeded."""
