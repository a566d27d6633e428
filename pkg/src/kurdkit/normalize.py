"""Canonical-encoding normalization for Arabic-script Kurdish text.

Two families of rewrites: legacy codepoint variants are unified onto the
canonical letters (the equivalence table), and the heh-plus-ZWNJ spelling
of the e vowel is rewritten to the dedicated vowel letter. Arabic
presentation forms (U+FB50-FDFF, U+FE70-FEFF) are folded to base letters
first so both rule families can reach them. Everything else, including
Latin text and ZWNJ that is not glued to a heh, passes through untouched.

Idempotent by construction: every replacement consists of characters that
no rule rewrites again.
"""

from __future__ import annotations

import re
import unicodedata
from dataclasses import dataclass
from functools import lru_cache

from .alphabet import ZWNJ, AlphabetTable, SoundClass, default_table

HEH = "ه"
AE = "ە"

_PRESENTATION = "ﭐ-﷿ﹰ-﻿"
_EASTERN_DIGITS = "٠-٩۰-۹"

#: Eastern Arabic-Indic and Arabic-Indic digits to ASCII.
DIGIT_FOLD = {chr(0x0660 + i): str(i) for i in range(10)}
DIGIT_FOLD.update({chr(0x06F0 + i): str(i) for i in range(10)})


@dataclass(frozen=True)
class NormalizationRule:
    """A literal rewrite with an optional positional predicate."""

    id: str
    pattern: str
    replacement: str
    word_final: bool = False
    after_consonant: bool = False


@dataclass(frozen=True)
class Rewrite:
    rule: str
    offset: int
    before: str
    after: str


@dataclass(frozen=True)
class NormalizationReport:
    output: str
    rewrites: tuple[Rewrite, ...]


def replay_rewrites(text: str, rewrites: tuple[Rewrite, ...] | list[Rewrite]) -> str:
    """Apply a rewrite log to its original input; reproduces the output."""
    parts = []
    pos = 0
    for rw in rewrites:
        if rw.offset < pos:
            raise ValueError(f"overlapping rewrite at offset {rw.offset}")
        if text[rw.offset : rw.offset + len(rw.before)] != rw.before:
            raise ValueError(f"rewrite at offset {rw.offset} does not match the input")
        parts.append(text[pos : rw.offset])
        parts.append(rw.after)
        pos = rw.offset + len(rw.before)
    parts.append(text[pos:])
    return "".join(parts)


class Normalizer:
    """Reusable normalizer bound to one table and one option set."""

    def __init__(
        self,
        table: AlphabetTable | None = None,
        *,
        aggressive_heh: bool = False,
        fold_digits: bool = False,
    ):
        self.table = table or default_table()
        self.aggressive_heh = aggressive_heh
        self.fold_digits = fold_digits
        self._variants = self.table.variant_to_canonical
        self._char_variants = {k: v for k, v in self._variants.items() if len(k) == 1}
        self.rules = self._build_rules()
        self._hot = re.compile(self._build_pattern())

    def _build_rules(self) -> tuple[NormalizationRule, ...]:
        rules = [
            NormalizationRule(
                id=f"unify-{'-'.join(f'{ord(c):04X}' for c in variant)}",
                pattern=variant,
                replacement=canonical,
            )
            for variant, canonical in sorted(self._variants.items())
        ]
        rules.append(NormalizationRule(id="heh-zwnj-vowel", pattern=HEH + ZWNJ, replacement=AE))
        if self.aggressive_heh:
            rules.append(
                NormalizationRule(
                    id="final-heh-vowel",
                    pattern=HEH,
                    replacement=AE,
                    word_final=True,
                    after_consonant=True,
                )
            )
        return tuple(rules)

    def _build_pattern(self) -> str:
        alts = [re.escape(HEH + ZWNJ)]
        for variant in sorted(self._variants, key=len, reverse=True):
            alts.append(re.escape(variant))
        alts.append(f"[{_PRESENTATION}]")
        if self.aggressive_heh:
            alts.append(re.escape(HEH))
        if self.fold_digits:
            alts.append(f"[{_EASTERN_DIGITS}]")
        return "|".join(alts)

    def _fold_char(self, ch: str) -> str:
        """Variant/presentation folding of one character, no context rules."""
        folded = self._char_variants.get(ch)
        if folded is not None:
            return folded
        if "ﭐ" <= ch <= "﷿" or "ﹰ" <= ch <= "﻿":
            out = unicodedata.normalize("NFKC", ch)
            return "".join(self._char_variants.get(c, c) for c in out)
        return ch

    def _word_final(self, text: str, j: int) -> bool:
        if j >= len(text):
            return True
        nxt = self._fold_char(text[j])
        return not (nxt and unicodedata.category(nxt[0]).startswith("L"))

    def _after_consonant(self, text: str, i: int) -> bool:
        if i == 0:
            return False
        prev = self._fold_char(text[i - 1])
        if not prev:
            return False
        info = self.table.classify_char(prev[-1])
        return info.grapheme is not None and info.grapheme.sound_class in (
            SoundClass.CONSONANT,
            SoundClass.SEMIVOWEL,
        )

    def _resolve(self, text: str, i: int, matched: str) -> tuple[str, int, str]:
        """Replacement, input chars consumed, and rule id for one hit."""
        if matched == HEH + ZWNJ:
            return AE, 2, "heh-zwnj-vowel"
        if matched in self._variants:
            rep = self._variants[matched]
            consumed = len(matched)
            rule = f"unify-{'-'.join(f'{ord(c):04X}' for c in matched)}"
        elif matched == HEH:  # aggressive_heh alternative
            rep = matched
            consumed = 1
            rule = ""
        elif matched in DIGIT_FOLD and self.fold_digits:
            return DIGIT_FOLD[matched], 1, "digit-fold"
        else:  # presentation form
            rep = self._fold_char(matched)
            consumed = 1
            rule = "fold-presentation"
        # a fold that ends in heh re-enters the heh rules
        if rep.endswith(HEH):
            j = i + consumed
            if j < len(text) and text[j] == ZWNJ:
                return rep[:-1] + AE, consumed + 1, "heh-zwnj-vowel"
            if (
                self.aggressive_heh
                and self._word_final(text, j)
                and self._after_consonant(text, i)
            ):
                return rep[:-1] + AE, consumed, "final-heh-vowel"
        return rep, consumed, rule

    def normalize(self, text: str) -> NormalizationReport:
        """Rewrite ``text`` into the canonical encoding, logging every change."""
        out_parts = []
        rewrites = []
        pos = 0
        for m in self._hot.finditer(text):
            i = m.start()
            if i < pos:
                continue
            rep, consumed, rule = self._resolve(text, i, m.group())
            before = text[i : i + consumed]
            if rep == before:
                continue
            out_parts.append(text[pos:i])
            out_parts.append(rep)
            rewrites.append(Rewrite(rule=rule, offset=i, before=before, after=rep))
            pos = i + consumed
        if not rewrites:
            return NormalizationReport(output=text, rewrites=())
        out_parts.append(text[pos:])
        return NormalizationReport(output="".join(out_parts), rewrites=tuple(rewrites))

    def is_normalized(self, text: str) -> bool:
        return self.normalize(text).output == text


@lru_cache(maxsize=16)
def _cached(table: AlphabetTable | None, aggressive_heh: bool, fold_digits: bool) -> Normalizer:
    return Normalizer(table, aggressive_heh=aggressive_heh, fold_digits=fold_digits)


def normalize(
    text: str,
    *,
    table: AlphabetTable | None = None,
    aggressive_heh: bool = False,
    fold_digits: bool = False,
) -> NormalizationReport:
    """Normalize Arabic-script Kurdish text; see :class:`Normalizer`."""
    return _cached(table, aggressive_heh, fold_digits).normalize(text)


def is_normalized(
    text: str,
    *,
    table: AlphabetTable | None = None,
    aggressive_heh: bool = False,
    fold_digits: bool = False,
) -> bool:
    """True iff normalization would leave ``text`` unchanged."""
    return _cached(table, aggressive_heh, fold_digits).is_normalized(text)
