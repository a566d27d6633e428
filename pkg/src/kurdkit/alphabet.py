"""Alphabet inventories, Unicode equivalences, and the Latin/Arabic mapping table.

The correspondence between the Latin (Hawar) and Arabic-script (Sorani)
Kurdish alphabets ships as two TSV files under ``data/``: one row per
mapping with an ambiguity class, and one row per canonical letter with its
legacy codepoint variants. An :class:`AlphabetTable` is immutable after
load and safe to share between threads.
"""

from __future__ import annotations

import unicodedata
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from importlib import resources
from pathlib import Path

from .errors import DuplicateVariant, MalformedRow, NonTotal, TableError

ZWNJ = "‌"

#: Hamza seat written before word-initial vowels in the Arabic script.
CARRIER = "ئ"


class ScriptKind(Enum):
    ARABIC_KURDISH = "arabic"
    LATIN_KURDISH = "latin"
    MIXED = "mixed"
    OTHER = "other"


class SoundClass(Enum):
    VOWEL = "vowel"
    CONSONANT = "consonant"
    SEMIVOWEL = "semivowel"
    CARRIER = "carrier"
    OTHER = "other"


class MappingClass(Enum):
    BIJECTIVE = "bijective"
    ONE_TO_MANY = "one_to_many"
    APPROXIMATE = "approximate"
    ABSENT = "absent"


class Direction(Enum):
    BOTH = "both"
    LATIN_TO_ARABIC = "latin_to_arabic"
    ARABIC_TO_LATIN = "arabic_to_latin"


#: The 31 letters of the Hawar alphabet (lowercase).
HAWAR_LETTERS = tuple("abcçdeêfghiîjklmnopqrsştuûvwxyz")

#: Extended Latin letters used for the approximate class only.
EXTENDED_LATIN_LETTERS = ("ḧ", "ẍ", "'")

#: The 33 letters of the Arabic-script Sorani alphabet, canonical codepoints.
SORANI_LETTERS = tuple("ئابپتجچحخدرڕزژسشعغفڤقکگلڵمنهەوۆیێ")

LATIN_VOWELS = frozenset("aeêiîouû")
LATIN_SEMIVOWELS = frozenset("wy")

#: Arabic-script letters that are always vowels (waw/yeh are ambiguous).
ARABIC_VOWELS = frozenset("اەۆێ")
ARABIC_SEMIVOWELS = frozenset("وی")

#: Positional handlers the transliteration engine implements; the
#: context_rule column may only name one of these.
CONTEXT_RULES = frozenset({"", "waw", "yeh", "trilled_r", "bizroke", "carrier", "approximate"})

_MAPPINGS_FILE = "mappings.tsv"
_EQUIVALENCES_FILE = "equivalences.tsv"


def _latin_sound_class(text: str) -> SoundClass:
    if text in LATIN_VOWELS:
        return SoundClass.VOWEL
    if text in LATIN_SEMIVOWELS:
        return SoundClass.SEMIVOWEL
    return SoundClass.CONSONANT


def _arabic_sound_class(text: str) -> SoundClass:
    if text == CARRIER:
        return SoundClass.CARRIER
    if len(text) > 1:
        # composite sequences (doubled waw, carrier+alef) carry the sound
        # of their final letter
        return _arabic_sound_class(text[-1])
    if text in ARABIC_VOWELS:
        return SoundClass.VOWEL
    if text in ARABIC_SEMIVOWELS:
        return SoundClass.SEMIVOWEL
    return SoundClass.CONSONANT


@dataclass(frozen=True)
class Grapheme:
    """One logical letter of either alphabet; may span several codepoints."""

    codepoints: tuple[int, ...]
    script: ScriptKind
    sound_class: SoundClass
    canonical: bool = True

    def __post_init__(self):
        if not self.codepoints:
            raise ValueError("a grapheme needs at least one codepoint")

    @property
    def text(self) -> str:
        return "".join(chr(cp) for cp in self.codepoints)


@dataclass(frozen=True)
class EquivalenceClass:
    """A canonical letter plus the legacy codepoint sequences that denote it."""

    canonical: Grapheme
    variants: frozenset[str]


@dataclass(frozen=True)
class MappingEntry:
    """One row of the Latin/Arabic correspondence."""

    latin: Grapheme | None
    arabic: Grapheme | None
    klass: MappingClass
    direction: Direction = Direction.BOTH
    context_rule: str = ""
    comment: str = ""


@dataclass(frozen=True)
class CharInfo:
    """Script membership of a single character."""

    script: ScriptKind
    is_letter: bool
    grapheme: Grapheme | None = None


def _latin_grapheme(text: str, canonical: bool = True) -> Grapheme:
    return Grapheme(
        codepoints=tuple(ord(c) for c in text),
        script=ScriptKind.LATIN_KURDISH,
        sound_class=_latin_sound_class(text),
        canonical=canonical,
    )


def _arabic_grapheme(text: str, canonical: bool = True, sound: SoundClass | None = None) -> Grapheme:
    return Grapheme(
        codepoints=tuple(ord(c) for c in text),
        script=ScriptKind.ARABIC_KURDISH,
        sound_class=sound if sound is not None else _arabic_sound_class(text),
        canonical=canonical,
    )


class AlphabetTable:
    """Immutable bundle of mapping entries and equivalence classes.

    All lookup structures are built once here; operations elsewhere treat
    the table as read-only, so concurrent shared use is safe.
    """

    def __init__(
        self,
        mappings: list[MappingEntry] | tuple[MappingEntry, ...],
        equivalences: list[EquivalenceClass] | tuple[EquivalenceClass, ...],
        source: str = "<memory>",
    ):
        self.mappings: tuple[MappingEntry, ...] = tuple(mappings)
        self.equivalences: tuple[EquivalenceClass, ...] = tuple(equivalences)
        self.source = source

        # variant codepoint sequence -> canonical string
        self.variant_to_canonical: dict[str, str] = {}
        for eq in self.equivalences:
            for variant in eq.variants:
                self.variant_to_canonical[variant] = eq.canonical.text

        # Latin grapheme text -> entry, for the latin→arabic direction.
        self.latin_to_entry: dict[str, MappingEntry] = {}
        # Arabic grapheme text -> entries, for the arabic→latin direction
        # (waw and yeh legitimately carry several rows).
        self.arabic_to_entries: dict[str, list[MappingEntry]] = {}
        for entry in self.mappings:
            if entry.latin is not None and entry.direction is not Direction.ARABIC_TO_LATIN:
                self.latin_to_entry[entry.latin.text] = entry
            if entry.arabic is not None and entry.direction is not Direction.LATIN_TO_ARABIC:
                self.arabic_to_entries.setdefault(entry.arabic.text, []).append(entry)

        self.max_latin_key = max((len(k) for k in self.latin_to_entry), default=1)

        # single-character classification maps
        self._latin_chars: dict[str, Grapheme] = {}
        self._arabic_chars: dict[str, Grapheme] = {}
        for entry in self.mappings:
            if entry.latin is not None and len(entry.latin.text) == 1 and entry.latin.text != "'":
                self._latin_chars.setdefault(entry.latin.text, entry.latin)
            if entry.arabic is not None and len(entry.arabic.text) == 1:
                self._arabic_chars.setdefault(entry.arabic.text, entry.arabic)
        for eq in self.equivalences:
            for variant in eq.variants:
                if len(variant) == 1:
                    self._arabic_chars.setdefault(
                        variant,
                        _arabic_grapheme(variant, canonical=False, sound=eq.canonical.sound_class),
                    )

        self.graphemes: tuple[Grapheme, ...] = tuple(
            dict.fromkeys(
                [e.latin for e in self.mappings if e.latin is not None]
                + [e.arabic for e in self.mappings if e.arabic is not None]
                + [eq.canonical for eq in self.equivalences]
                + list(self._arabic_chars.values())
            )
        )

        self._check_invariants()

    def _check_invariants(self) -> None:
        canonicals = {eq.canonical.text for eq in self.equivalences}
        seen_variants: dict[str, str] = {}
        for eq in self.equivalences:
            if eq.canonical.text in eq.variants:
                raise DuplicateVariant(self.source, 0, f"class {eq.canonical.text!r} lists itself as a variant")
            for variant in eq.variants:
                if variant in seen_variants:
                    raise DuplicateVariant(
                        self.source, 0,
                        f"variant {variant!r} claimed by both {seen_variants[variant]!r} and {eq.canonical.text!r}",
                    )
                if variant in canonicals:
                    raise DuplicateVariant(
                        self.source, 0,
                        f"variant {variant!r} is the canonical form of another class",
                    )
                seen_variants[variant] = eq.canonical.text

        latin_sides: dict[str, int] = {}
        arabic_sides: dict[str, int] = {}
        for entry in self.mappings:
            if (entry.latin is None) == (entry.arabic is None):
                both = "both" if entry.latin is not None else "neither"
                if entry.klass is MappingClass.ABSENT and entry.latin is not None:
                    raise TableError(f"{self.source}: absent-class row has {both} sides")
                if entry.latin is None:
                    raise TableError(f"{self.source}: mapping row with {both} sides")
            elif entry.klass is not MappingClass.ABSENT:
                raise TableError(f"{self.source}: one-sided row must be marked absent")
            if entry.latin is not None:
                latin_sides[entry.latin.text] = latin_sides.get(entry.latin.text, 0) + 1
            if entry.arabic is not None:
                arabic_sides[entry.arabic.text] = arabic_sides.get(entry.arabic.text, 0) + 1
        for entry in self.mappings:
            if entry.klass is not MappingClass.BIJECTIVE:
                continue
            if latin_sides[entry.latin.text] > 1 or arabic_sides[entry.arabic.text] > 1:
                raise TableError(
                    f"{self.source}: bijective row {entry.latin.text!r}/{entry.arabic.text!r} shares a side"
                )

        missing = []
        latin_texts = [e.latin.text for e in self.mappings if e.latin is not None]
        arabic_texts = [e.arabic.text for e in self.mappings if e.arabic is not None]
        for letter in HAWAR_LETTERS + EXTENDED_LATIN_LETTERS:
            if not any(letter in text for text in latin_texts):
                missing.append(letter)
        for letter in SORANI_LETTERS:
            if not any(letter in text for text in arabic_texts):
                missing.append(letter)
        if missing:
            raise NonTotal(missing)

    def classify_char(self, ch: str) -> CharInfo:
        """Script membership of one character. Total and deterministic."""
        if len(ch) != 1:
            raise ValueError("classify_char takes exactly one character")
        grapheme = self._latin_chars.get(ch) or self._latin_chars.get(ch.lower())
        if grapheme is not None:
            return CharInfo(ScriptKind.LATIN_KURDISH, True, grapheme)
        grapheme = self._arabic_chars.get(ch)
        if grapheme is not None:
            return CharInfo(ScriptKind.ARABIC_KURDISH, True, grapheme)
        return CharInfo(ScriptKind.OTHER, unicodedata.category(ch).startswith("L"), None)

    def is_arabic_letter(self, ch: str) -> bool:
        return ch in self._arabic_chars

    def is_latin_letter(self, ch: str) -> bool:
        return ch in self._latin_chars or ch.lower() in self._latin_chars


def _decode_lines(path: Path) -> list[str]:
    try:
        raw = path.read_bytes()
    except FileNotFoundError:
        raise TableError(f"table file not found: {path}") from None
    lines = []
    for lineno, blob in enumerate(raw.split(b"\n"), start=1):
        try:
            lines.append(blob.decode("utf-8"))
        except UnicodeDecodeError as exc:
            raise MalformedRow(str(path), lineno, f"not valid UTF-8: {exc}") from None
    return lines


def _parse_hex_seq(field: str, source: str, lineno: int) -> str:
    chars = []
    for part in field.split():
        try:
            chars.append(chr(int(part, 16)))
        except ValueError:
            raise MalformedRow(source, lineno, f"bad codepoint {part!r}") from None
    return "".join(chars)


def _load_equivalences(path: Path) -> list[EquivalenceClass]:
    classes = []
    source = str(path)
    for lineno, line in enumerate(_decode_lines(path), start=1):
        if not line.strip() or line.startswith("#"):
            continue
        cols = line.rstrip("\n").split("\t")
        if len(cols) != 2:
            raise MalformedRow(source, lineno, f"expected 2 columns, got {len(cols)}")
        canonical = _parse_hex_seq(cols[0], source, lineno)
        if not canonical:
            raise MalformedRow(source, lineno, "empty canonical sequence")
        variants = []
        for var_field in cols[1].split(","):
            variant = _parse_hex_seq(var_field, source, lineno)
            if not variant:
                raise MalformedRow(source, lineno, "empty variant sequence")
            if variant == canonical:
                raise DuplicateVariant(source, lineno, f"variant equals canonical {canonical!r}")
            variants.append(variant)
        classes.append(
            EquivalenceClass(canonical=_arabic_grapheme(canonical), variants=frozenset(variants))
        )
    return classes


def _load_mappings(path: Path) -> list[MappingEntry]:
    entries = []
    source = str(path)
    for lineno, line in enumerate(_decode_lines(path), start=1):
        if not line.strip() or line.startswith("#"):
            continue
        cols = line.rstrip("\n").split("\t")
        if len(cols) != 6:
            raise MalformedRow(source, lineno, f"expected 6 columns, got {len(cols)}")
        latin_text, arabic_hex, klass_name, direction_name, context_rule, comment = cols
        latin_text = unicodedata.normalize("NFC", latin_text.strip())
        arabic_text = _parse_hex_seq(arabic_hex, source, lineno)
        if not latin_text and not arabic_text:
            raise MalformedRow(source, lineno, "both sides empty")
        try:
            klass = MappingClass(klass_name.strip())
        except ValueError:
            raise MalformedRow(source, lineno, f"unknown klass {klass_name!r}") from None
        try:
            direction = Direction(direction_name.strip())
        except ValueError:
            raise MalformedRow(source, lineno, f"unknown direction {direction_name!r}") from None
        context = context_rule.strip()
        if context not in CONTEXT_RULES:
            raise MalformedRow(source, lineno, f"unknown context_rule {context!r}")
        one_sided = bool(latin_text) != bool(arabic_text)
        if one_sided != (klass is MappingClass.ABSENT):
            raise MalformedRow(source, lineno, "klass=absent row must have exactly one empty side")
        entries.append(
            MappingEntry(
                latin=_latin_grapheme(latin_text) if latin_text else None,
                arabic=_arabic_grapheme(arabic_text) if arabic_text else None,
                klass=klass,
                direction=direction,
                context_rule=context,
                comment=comment,
            )
        )
    return entries


def _default_data_dir() -> Path:
    return Path(str(resources.files(__package__) / "data"))


def load_tables(path: str | Path | None = None) -> AlphabetTable:
    """Load an :class:`AlphabetTable` from a directory of TSV files.

    ``path`` names a directory holding ``mappings.tsv`` and
    ``equivalences.tsv``; ``None`` loads the tables shipped with the
    package. Violations are reported with file and row numbers.
    """
    directory = Path(path) if path is not None else _default_data_dir()
    mappings = _load_mappings(directory / _MAPPINGS_FILE)
    equivalences = _load_equivalences(directory / _EQUIVALENCES_FILE)
    return AlphabetTable(mappings, equivalences, source=str(directory))


def save_tables(table: AlphabetTable, path: str | Path) -> None:
    """Write ``table`` back out as the two-file TSV form read by load_tables."""
    directory = Path(path)
    directory.mkdir(parents=True, exist_ok=True)

    def hex_seq(text: str) -> str:
        return " ".join(f"{ord(c):04X}" for c in text)

    lines = ["# latin\tarabic\tklass\tdirection\tcontext_rule\tcomment"]
    for e in table.mappings:
        lines.append(
            "\t".join(
                [
                    e.latin.text if e.latin else "",
                    hex_seq(e.arabic.text) if e.arabic else "",
                    e.klass.value,
                    e.direction.value,
                    e.context_rule,
                    e.comment,
                ]
            )
        )
    (directory / _MAPPINGS_FILE).write_text("\n".join(lines) + "\n", encoding="utf-8")

    lines = ["# canonical_hex\tvariant_hex_list"]
    for eq in table.equivalences:
        variants = ",".join(hex_seq(v) for v in sorted(eq.variants))
        lines.append(f"{hex_seq(eq.canonical.text)}\t{variants}")
    (directory / _EQUIVALENCES_FILE).write_text("\n".join(lines) + "\n", encoding="utf-8")


@lru_cache(maxsize=1)
def default_table() -> AlphabetTable:
    """The table shipped with the package, loaded once."""
    return load_tables(None)


def classify_char(ch: str, table: AlphabetTable | None = None) -> CharInfo:
    return (table or default_table()).classify_char(ch)
