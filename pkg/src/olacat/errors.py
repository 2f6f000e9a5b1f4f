"""Exception hierarchy shared by the library and the command line."""


class OlaError(Exception):
    """Base class for every error raised on purpose by this package."""


class DomainError(OlaError, ValueError):
    """An input lies outside the domain of the requested operation."""


class WeightParseError(DomainError):
    """Malformed weight text. ``position`` is the 0-based offending column."""

    def __init__(self, message, position):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class WeightIndexError(DomainError):
    """A weight index (i, k) with i == 0 or k outside 1..n."""


class ResourceLimitError(OlaError, RuntimeError):
    """A configured computational cap was exceeded."""

    def __init__(self, limit, value, cap):
        super().__init__(f"{limit} limit exceeded: {value} > {cap}")
        self.limit = limit
        self.value = value
        self.cap = cap
