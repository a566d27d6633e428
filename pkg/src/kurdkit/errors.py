"""Exception types shared across the toolkit."""

from __future__ import annotations


class KurdkitError(Exception):
    """Base class for all toolkit errors."""


class TableError(KurdkitError):
    """A mapping or equivalence table could not be loaded."""


class MalformedRow(TableError):
    """A table row has the wrong shape, encoding, or field values."""

    def __init__(self, source: str, lineno: int, message: str):
        super().__init__(f"{source}:{lineno}: {message}")
        self.source = source
        self.lineno = lineno


class DuplicateVariant(TableError):
    """Two equivalence classes claim the same variant codepoint sequence."""

    def __init__(self, source: str, lineno: int, message: str):
        super().__init__(f"{source}:{lineno}: {message}")
        self.source = source
        self.lineno = lineno


class NonTotal(TableError):
    """A letter of either alphabet has no mapping row and no absent marker."""

    def __init__(self, missing: list[str]):
        shown = ", ".join(missing)
        super().__init__(f"{len(missing)} letter(s) without any mapping entry: {shown}")
        self.missing = tuple(missing)


class UnknownGrapheme(KurdkitError):
    """Transliteration hit an unmapped letter while on_unknown=error."""

    def __init__(self, char: str, offset: int):
        super().__init__(f"unmapped letter {char!r} (U+{ord(char):04X}) at offset {offset}")
        self.char = char
        self.offset = offset


class InconsistentSpans(KurdkitError):
    """Tokens handed to reconstruct() do not originate from the given text."""
