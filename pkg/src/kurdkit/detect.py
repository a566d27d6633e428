"""Script detection for bi-standard Kurdish text, with shallow dialect cues."""

from __future__ import annotations

from dataclasses import dataclass

from .alphabet import AlphabetTable, ScriptKind, default_table
from .segment import TokenKind, words

#: Sorani definite-suffix family, longest first; pure substring matching.
_SORANI_SUFFIXES_LATIN = ("ekanî", "ekan", "ekey", "eke")
_SORANI_SUFFIXES_ARABIC = ("ەکانی", "ەکان", "ەکەی", "ەکە")


@dataclass(frozen=True)
class DialectCue:
    id: str
    text: str
    offset: int


@dataclass(frozen=True)
class ScriptReport:
    kind: ScriptKind
    arabic_ratio: float
    latin_ratio: float
    dialect_cues: tuple[DialectCue, ...] = ()

    @property
    def ratios(self) -> dict[ScriptKind, float]:
        return {
            ScriptKind.ARABIC_KURDISH: self.arabic_ratio,
            ScriptKind.LATIN_KURDISH: self.latin_ratio,
        }


def _suffix_cues(text: str) -> tuple[DialectCue, ...]:
    cues = []
    for tok in words(text):
        if tok.kind is not TokenKind.WORD:
            continue
        lowered = tok.text.lower()
        for suffix in _SORANI_SUFFIXES_LATIN + _SORANI_SUFFIXES_ARABIC:
            if len(lowered) > len(suffix) and lowered.endswith(suffix):
                cues.append(DialectCue("sorani-definite-suffix", tok.text, tok.span.start))
                break
    return tuple(cues)


def detect_script(
    text: str,
    *,
    table: AlphabetTable | None = None,
    mixed_threshold: float = 0.10,
) -> ScriptReport:
    """Classify ``text`` by the fraction of letters in each Kurdish script.

    Mixed is reported only when both scripts exceed ``mixed_threshold`` of
    the letter characters; text without letters of either alphabet is
    Other. Pure function of its inputs.
    """
    table = table or default_table()
    letters = arabic = latin = 0
    for ch in text:
        info = table.classify_char(ch)
        if not info.is_letter:
            continue
        letters += 1
        if info.script is ScriptKind.ARABIC_KURDISH:
            arabic += 1
        elif info.script is ScriptKind.LATIN_KURDISH:
            latin += 1
    if letters == 0:
        return ScriptReport(ScriptKind.OTHER, 0.0, 0.0)
    arabic_ratio = arabic / letters
    latin_ratio = latin / letters
    if arabic_ratio > mixed_threshold and latin_ratio > mixed_threshold:
        kind = ScriptKind.MIXED
    elif arabic_ratio > mixed_threshold and arabic_ratio >= latin_ratio:
        kind = ScriptKind.ARABIC_KURDISH
    elif latin_ratio > mixed_threshold:
        kind = ScriptKind.LATIN_KURDISH
    else:
        kind = ScriptKind.OTHER
    return ScriptReport(kind, arabic_ratio, latin_ratio, _suffix_cues(text))
