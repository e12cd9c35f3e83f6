"""Exception types shared across the package."""


class MatulaError(Exception):
    """Base class for all errors raised by this package."""


class CapExceeded(MatulaError):
    """A prime beyond the table's hard cap would be required.

    The computation is not wrong, merely out of the configured range;
    retry with a table built with a larger ``cap``.
    """

    def __init__(self, needed: int, cap: int):
        self.needed = needed
        self.cap = cap
        super().__init__(
            f"operation needs primes up to ~{needed}, beyond the cap {cap}"
        )


class NotPrime(MatulaError):
    """An argument that must be prime is not."""

    def __init__(self, value: int):
        self.value = value
        super().__init__(f"{value} is not prime")


class ParseError(MatulaError):
    """Malformed bracket string; ``offset`` is the byte position."""

    def __init__(self, message: str, offset: int):
        self.offset = offset
        super().__init__(f"{message} (at offset {offset})")
