"""Bidirectional Latin/Arabic-script transliteration with loss accounting.

Strictly graphemic: letters are converted one table entry at a time with a
small set of positional rules (waw/yeh disambiguation, trilled r, the
vowel carrier), and everything the mapping cannot carry across is recorded
in a loss report instead of being silently discarded. No lexicon, no
guessing of the unwritten short i.
"""

from __future__ import annotations

import difflib
import unicodedata
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

from .alphabet import (
    ARABIC_VOWELS,
    CARRIER,
    LATIN_VOWELS,
    ZWNJ,
    AlphabetTable,
    MappingClass,
    ScriptKind,
    default_table,
)
from .errors import UnknownGrapheme
from .normalize import NormalizationReport, Normalizer
from .segment import sentences

WAW = "و"
YEH = "ی"
TRILLED_R = "ڕ"

#: Bijective punctuation counterparts, converted in both directions.
PUNCT_LATIN_TO_ARABIC = {",": "،", ";": "؛", "?": "؟"}
PUNCT_ARABIC_TO_LATIN = {v: k for k, v in PUNCT_LATIN_TO_ARABIC.items()}

#: Latin letters that only exist as spelling variants of Hawar letters.
_LATIN_FOLD = {"ș": "ş"}  # s with comma below -> s with cedilla


class TranslitMode(Enum):
    STRICT = "strict"
    EXTENDED = "extended"


class UnknownPolicy(Enum):
    PASS_THROUGH = "pass"
    ERROR = "error"


class LossAction(Enum):
    DROPPED = "dropped"
    APPROXIMATED = "approximated"
    PASSED_THROUGH = "passed_through"


@dataclass(frozen=True)
class TranslitOptions:
    mode: TranslitMode = TranslitMode.STRICT
    capitalize_sentences: bool = False
    on_unknown: UnknownPolicy = UnknownPolicy.PASS_THROUGH


@dataclass(frozen=True)
class LossEvent:
    offset: int
    grapheme: str
    action: LossAction
    substitute: str = ""


@dataclass(frozen=True)
class LossReport:
    events: tuple[LossEvent, ...] = ()

    def dropped_offsets(self, grapheme: str | None = None) -> tuple[int, ...]:
        return tuple(
            e.offset
            for e in self.events
            if e.action is LossAction.DROPPED and (grapheme is None or e.grapheme == grapheme)
        )


@dataclass(frozen=True)
class TranslitResult:
    output: str
    loss: LossReport
    #: set when arabic_to_latin had to normalize its input first
    normalization: NormalizationReport | None = None


@dataclass(frozen=True)
class RoundTripDiff:
    offset: int
    expected: str
    got: str


@dataclass(frozen=True)
class RoundTripReport:
    identical: bool
    diffs: tuple[RoundTripDiff, ...]
    forward_loss: LossReport


class Transliterator:
    """Conversion engine bound to one immutable table."""

    def __init__(self, table: AlphabetTable | None = None):
        self.table = table or default_table()
        self._normalizer = Normalizer(self.table)
        self._latin_map = {
            key: entry.arabic.text if entry.arabic is not None else ""
            for key, entry in self.table.latin_to_entry.items()
        }
        self._max_latin_key = self.table.max_latin_key

        # arabic char -> (latin in extended mode, latin in strict mode, klass);
        # letters with positional handlers are resolved in the scanner instead
        self._arabic_map: dict[str, tuple[str, str, MappingClass]] = {}
        for char, entries in self.table.arabic_to_entries.items():
            if len(char) != 1 or char in (WAW, YEH, CARRIER, TRILLED_R):
                continue
            entry = entries[0]
            latin = entry.latin.text if entry.latin is not None else ""
            if entry.klass is MappingClass.APPROXIMATE:
                strict = {"'": "", "ḧ": "h", "ẍ": "x"}.get(latin, latin)
                self._arabic_map[char] = (latin, strict, entry.klass)
            else:
                self._arabic_map[char] = (latin, latin, entry.klass)

        # waw/yeh readings come from the table rows sharing the letter
        self._waw_vowel, self._waw_consonant = self._readings(WAW)
        self._yeh_vowel, self._yeh_consonant = self._readings(YEH)

    def _readings(self, char: str) -> tuple[str, str]:
        vowel = consonant = ""
        for entry in self.table.arabic_to_entries[char]:
            latin = entry.latin.text
            if latin in LATIN_VOWELS:
                vowel = latin
            else:
                consonant = latin
        return vowel, consonant

    # ----------------------------------------------------------------- latin→arabic

    def latin_to_arabic(self, text: str, opts: TranslitOptions | None = None) -> TranslitResult:
        """Convert Latin-script Kurdish to the Arabic script.

        Case folds (the Arabic script has no case), consumes every
        character exactly once, writes the carrier before word-initial
        vowels, and drops the unwritten short i with a loss event. Offsets
        refer to the NFC form of the input.
        """
        opts = opts or TranslitOptions()
        text = unicodedata.normalize("NFC", text)

        # per-character lowering that keeps an offset map even when a
        # character lowercases to more than one codepoint
        lowered_chars: list[str] = []
        origin: list[int] = []
        for idx, ch in enumerate(text):
            low = ch.lower()
            low = "".join(_LATIN_FOLD.get(c, c) for c in low)
            for c in low:
                lowered_chars.append(c)
                origin.append(idx)
        lowered = "".join(lowered_chars)

        out: list[str] = []
        events: list[LossEvent] = []
        n = len(lowered)
        j = 0
        word_initial = True
        while j < n:
            key = None
            if self._max_latin_key > 1:
                cand = lowered[j : j + 2]
                if len(cand) == 2 and cand in self._latin_map:
                    key = cand
            if key is None and lowered[j] in self._latin_map:
                key = lowered[j]
            if key is not None:
                offset = origin[j]
                if key == "i":
                    if word_initial:
                        out.append(CARRIER)
                    events.append(LossEvent(offset, "i", LossAction.DROPPED))
                elif key in LATIN_VOWELS:
                    if word_initial:
                        out.append(CARRIER)
                    out.append(self._latin_map[key])
                elif key == "r" and word_initial:
                    out.append(TRILLED_R)
                else:
                    out.append(self._latin_map[key])
                word_initial = False
                j += len(key)
                continue
            ch = lowered[j]
            if ch == ZWNJ:
                out.append(ch)  # intra-word glue carries over
                j += 1
                continue
            if ch in PUNCT_LATIN_TO_ARABIC:
                out.append(PUNCT_LATIN_TO_ARABIC[ch])
            elif unicodedata.category(ch).startswith("L"):
                if opts.on_unknown is UnknownPolicy.ERROR:
                    raise UnknownGrapheme(ch, origin[j])
                out.append(ch)
                events.append(LossEvent(origin[j], ch, LossAction.PASSED_THROUGH, substitute=ch))
            else:
                out.append(ch)
            word_initial = True
            j += 1

        # passthrough may have injected non-canonical codepoints
        output = self._normalizer.normalize("".join(out)).output
        return TranslitResult(output=output, loss=LossReport(tuple(events)))

    # ----------------------------------------------------------------- arabic→latin

    def arabic_to_latin(self, text: str, opts: TranslitOptions | None = None) -> TranslitResult:
        """Convert Arabic-script Kurdish to the Latin (Hawar) alphabet.

        Expects normalized input and normalizes (with a report) when it is
        not. Doubled waw becomes û; single waw and yeh resolve on local
        context; the carrier is elided with a loss event; the approximate
        class maps to the extended letters or, in strict mode, to their
        nearest plain rendering. Offsets refer to the normalized input.
        """
        opts = opts or TranslitOptions()
        norm = self._normalizer.normalize(text)
        s = norm.output
        extended = opts.mode is TranslitMode.EXTENDED

        out: list[str] = []
        events: list[LossEvent] = []
        n = len(s)
        i = 0
        word_initial = True
        last_vowel = False
        while i < n:
            ch = s[i]
            if ch == WAW:
                if i + 1 < n and s[i + 1] == WAW:
                    out.append("û")
                    last_vowel = True
                    word_initial = False
                    i += 2
                    continue
                as_consonant = last_vowel or self._vowel_follows(s, i + 1) or word_initial
                out.append(self._waw_consonant if as_consonant else self._waw_vowel)
                last_vowel = not as_consonant
                word_initial = False
                i += 1
                continue
            if ch == YEH:
                as_consonant = last_vowel or self._vowel_follows(s, i + 1) or word_initial
                out.append(self._yeh_consonant if as_consonant else self._yeh_vowel)
                last_vowel = not as_consonant
                word_initial = False
                i += 1
                continue
            if ch == TRILLED_R:
                out.append("r" if word_initial else "rr")
                last_vowel = False
                word_initial = False
                i += 1
                continue
            if ch == CARRIER:
                events.append(LossEvent(i, ch, LossAction.DROPPED))
                last_vowel = False
                word_initial = False
                i += 1
                continue
            if ch == ZWNJ:
                out.append(ch)  # glue carries over, word context continues
                i += 1
                continue
            mapped = self._arabic_map.get(ch)
            if mapped is not None:
                latin_ext, latin_strict, klass = mapped
                latin = latin_ext if extended else latin_strict
                if klass is MappingClass.APPROXIMATE:
                    events.append(LossEvent(i, ch, LossAction.APPROXIMATED, substitute=latin))
                out.append(latin)
                last_vowel = latin in LATIN_VOWELS
                word_initial = False
                i += 1
                continue
            if ch in PUNCT_ARABIC_TO_LATIN:
                out.append(PUNCT_ARABIC_TO_LATIN[ch])
            elif unicodedata.category(ch).startswith("L"):
                if opts.on_unknown is UnknownPolicy.ERROR:
                    raise UnknownGrapheme(ch, i)
                out.append(ch)
                events.append(LossEvent(i, ch, LossAction.PASSED_THROUGH, substitute=ch))
            else:
                out.append(ch)
            last_vowel = False
            word_initial = True
            i += 1

        output = "".join(out)
        if opts.capitalize_sentences:
            output = _capitalize_sentences(output)
        return TranslitResult(
            output=output,
            loss=LossReport(tuple(events)),
            normalization=norm if norm.rewrites else None,
        )

    def _vowel_follows(self, s: str, j: int) -> bool:
        if j >= len(s):
            return False
        if s[j] in ARABIC_VOWELS:
            return True
        return s[j] == WAW and j + 1 < len(s) and s[j + 1] == WAW

    # ----------------------------------------------------------------- round trip

    def round_trip_report(
        self,
        text: str,
        direction: ScriptKind | str,
        opts: TranslitOptions | None = None,
    ) -> RoundTripReport:
        """Convert there and back, and diff against the (normalized) original."""
        start = ScriptKind(direction) if isinstance(direction, str) else direction
        if start is ScriptKind.ARABIC_KURDISH:
            reference = self._normalizer.normalize(text).output
            forward = self.arabic_to_latin(reference, opts)
            got = self.latin_to_arabic(forward.output, opts).output
        elif start is ScriptKind.LATIN_KURDISH:
            reference = unicodedata.normalize("NFC", text)
            forward = self.latin_to_arabic(reference, opts)
            got = self.arabic_to_latin(forward.output, opts).output
        else:
            raise ValueError(f"round trip needs a concrete script, not {direction!r}")

        diffs = []
        matcher = difflib.SequenceMatcher(None, reference, got, autojunk=False)
        for op, i1, i2, j1, j2 in matcher.get_opcodes():
            if op != "equal":
                diffs.append(RoundTripDiff(offset=i1, expected=reference[i1:i2], got=got[j1:j2]))
        return RoundTripReport(
            identical=reference == got,
            diffs=tuple(diffs),
            forward_loss=forward.loss,
        )


def _capitalize_sentences(text: str) -> str:
    # the freshly transliterated text is all-lowercase, so segment without
    # the Latin capital signal
    chars = list(text)
    for span in sentences(text, case_signal=False):
        for k in range(span.start, span.end):
            if chars[k].isalpha():
                chars[k] = chars[k].upper()
                break
    return "".join(chars)


@lru_cache(maxsize=4)
def _engine(table: AlphabetTable | None) -> Transliterator:
    return Transliterator(table)


def latin_to_arabic(
    text: str,
    opts: TranslitOptions | None = None,
    *,
    table: AlphabetTable | None = None,
) -> TranslitResult:
    return _engine(table).latin_to_arabic(text, opts)


def arabic_to_latin(
    text: str,
    opts: TranslitOptions | None = None,
    *,
    table: AlphabetTable | None = None,
) -> TranslitResult:
    return _engine(table).arabic_to_latin(text, opts)


def round_trip_report(
    text: str,
    direction: ScriptKind | str,
    opts: TranslitOptions | None = None,
    *,
    table: AlphabetTable | None = None,
) -> RoundTripReport:
    return _engine(table).round_trip_report(text, direction, opts)
