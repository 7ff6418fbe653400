class LatinError(ValueError):
    """A table fails the Latin-square conditions (duplicate in a row or column)."""


class FormatError(ValueError):
    """A serialized document is malformed or has a missing/unreadable field."""
