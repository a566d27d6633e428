"""Sentence and word segmentation for bi-standard Kurdish text.

Arabic script has no capitalization, so sentence boundaries there rest on
terminator punctuation alone; in Latin text a following capital is also
required after a period. ZWNJ is intra-word glue and never splits a word;
zero-width space is whitespace. Tokens are spans into the source text, so
segmentation is lossless and reversible.
"""

from __future__ import annotations

import unicodedata
from dataclasses import dataclass
from enum import Enum
from pathlib import Path

from .alphabet import ZWNJ
from .errors import InconsistentSpans

ZWSP = "​"

#: Sentence terminators; the Arabic question mark and full stop included.
DEFAULT_TERMINATORS = frozenset({".", "!", "?", "؟", "۔", "…"})

_APOSTROPHES = ("'", "’")


class TokenKind(Enum):
    WORD = "word"
    NUMBER = "number"
    PUNCT = "punct"
    SYMBOL = "symbol"


@dataclass(frozen=True)
class Span:
    """Half-open character-offset interval into the source text."""

    start: int
    end: int

    def __post_init__(self):
        if not 0 <= self.start < self.end:
            raise ValueError(f"bad span [{self.start}, {self.end})")


@dataclass(frozen=True)
class Token:
    span: Span
    kind: TokenKind
    text: str


def _is_space(ch: str) -> bool:
    return ch.isspace() or ch == ZWSP


def _is_letterish(ch: str) -> bool:
    return unicodedata.category(ch)[0] in ("L", "M") or ch == ZWNJ


def words(text: str) -> list[Token]:
    """Split ``text`` into word, number, punctuation and symbol tokens.

    Word tokens may contain ZWNJ and word-internal apostrophes but never
    whitespace; digit runs of either digit system become number tokens;
    every non-whitespace character lands in exactly one token.
    """
    tokens = []
    n = len(text)
    i = 0
    while i < n:
        ch = text[i]
        if _is_space(ch):
            i += 1
            continue
        start = i
        if unicodedata.category(ch) == "Nd":
            while i < n and unicodedata.category(text[i]) == "Nd":
                i += 1
            kind = TokenKind.NUMBER
        elif _is_letterish(ch):
            has_letter = False
            while i < n:
                c = text[i]
                if _is_letterish(c):
                    has_letter = has_letter or unicodedata.category(c)[0] == "L"
                    i += 1
                elif c in _APOSTROPHES and i > start and i + 1 < n and _is_letterish(text[i + 1]):
                    i += 1  # word-internal apostrophe glues
                else:
                    break
            kind = TokenKind.WORD if has_letter else TokenKind.SYMBOL
        elif unicodedata.category(ch)[0] == "P":
            i += 1
            kind = TokenKind.PUNCT
        else:
            i += 1
            kind = TokenKind.SYMBOL
        tokens.append(Token(span=Span(start, i), kind=kind, text=text[start:i]))
    return tokens


def _preceding_letter(text: str, i: int) -> str:
    return text[i - 1] if i > 0 else ""


def _preceding_word(text: str, i: int) -> str:
    j = i
    while j > 0 and _is_letterish(text[j - 1]):
        j -= 1
    return text[j:i]


def _is_latin_letter(ch: str) -> bool:
    if len(ch) != 1:
        return False
    try:
        return unicodedata.category(ch)[0] == "L" and "LATIN" in unicodedata.name(ch)
    except ValueError:
        return False


def load_abbreviations(path: str | Path) -> frozenset[str]:
    """Read an abbreviation list, one entry per line, # comments ignored."""
    entries = []
    for line in Path(path).read_text(encoding="utf-8-sig").splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            entries.append(line.casefold())
    return frozenset(entries)


def sentences(
    text: str,
    *,
    terminators: frozenset[str] = DEFAULT_TERMINATORS,
    abbreviations: frozenset[str] = frozenset(),
    case_signal: bool = True,
) -> list[Span]:
    """Sentence spans, trimmed to their non-whitespace extent.

    A boundary falls after a terminator followed by whitespace or end of
    text. After a period in Latin context the next sentence must open with
    something other than a lowercase letter; Arabic context has no case
    signal, so the terminator decides alone. ``abbreviations`` suppresses
    boundaries after listed words; ``case_signal=False`` disables the
    Latin capital check (for caseless or generated text).
    """
    n = len(text)
    breaks = []
    for i, ch in enumerate(text):
        if ch not in terminators:
            continue
        j = i + 1
        if j < n and not _is_space(text[j]):
            continue
        if ch == ".":
            word = _preceding_word(text, i)
            if word and word.casefold() in abbreviations:
                continue
            k = j
            while k < n and _is_space(text[k]):
                k += 1
            nxt = text[k] if k < n else ""
            if (
                case_signal
                and _is_latin_letter(_preceding_letter(text, i))
                and nxt
                and _is_latin_letter(nxt)
                and nxt.islower()
            ):
                continue
        breaks.append(j)

    spans = []
    chunk_start = 0
    for b in breaks + [n]:
        if b <= chunk_start:
            continue
        lo, hi = chunk_start, b
        while lo < hi and _is_space(text[lo]):
            lo += 1
        while hi > lo and _is_space(text[hi - 1]):
            hi -= 1
        if lo < hi:
            spans.append(Span(lo, hi))
        chunk_start = b
    return spans


def reconstruct(text: str, tokens: list[Token]) -> str:
    """Rebuild ``text`` from its tokens and inter-token gaps.

    Raises :class:`InconsistentSpans` if the tokens do not originate from
    ``text`` (mismatched slices, overlaps, or non-whitespace gaps).
    """
    parts = []
    pos = 0
    for tok in tokens:
        span = tok.span
        if span.start < pos or span.end > len(text):
            raise InconsistentSpans(f"span [{span.start}, {span.end}) out of order or range")
        gap = text[pos : span.start]
        if any(not _is_space(c) for c in gap):
            raise InconsistentSpans(f"non-whitespace between tokens at offset {pos}")
        if text[span.start : span.end] != tok.text:
            raise InconsistentSpans(f"token text mismatch at offset {span.start}")
        parts.append(gap)
        parts.append(tok.text)
        pos = span.end
    tail = text[pos:]
    if any(not _is_space(c) for c in tail):
        raise InconsistentSpans(f"non-whitespace after last token at offset {pos}")
    parts.append(tail)
    return "".join(parts)
