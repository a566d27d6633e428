"""kurdkit: toolkit for bi-standard Kurdish text.

Normalization of Arabic-script (Sorani) text, bidirectional Latin/Arabic
transliteration with explicit loss accounting, script detection, sentence
and word segmentation, and corpus frequency statistics.
"""

from .alphabet import (
    AlphabetTable,
    CharInfo,
    Direction,
    EquivalenceClass,
    Grapheme,
    MappingClass,
    MappingEntry,
    ScriptKind,
    SoundClass,
    classify_char,
    default_table,
    load_tables,
    save_tables,
)
from .detect import DialectCue, ScriptReport, detect_script
from .errors import (
    DuplicateVariant,
    InconsistentSpans,
    KurdkitError,
    MalformedRow,
    NonTotal,
    TableError,
    UnknownGrapheme,
)
from .normalize import (
    NormalizationReport,
    NormalizationRule,
    Normalizer,
    Rewrite,
    is_normalized,
    normalize,
    replay_rewrites,
)
from .segment import Span, Token, TokenKind, load_abbreviations, reconstruct, sentences, words
from .stats import FrequencyTable, accumulate, iter_word_tokens, merge, render_report_figure
from .translit import (
    LossAction,
    LossEvent,
    LossReport,
    RoundTripDiff,
    RoundTripReport,
    Transliterator,
    TranslitMode,
    TranslitOptions,
    TranslitResult,
    UnknownPolicy,
    arabic_to_latin,
    latin_to_arabic,
    round_trip_report,
)

__version__ = "0.1.0"

__all__ = [
    "AlphabetTable",
    "CharInfo",
    "DialectCue",
    "Direction",
    "DuplicateVariant",
    "EquivalenceClass",
    "FrequencyTable",
    "Grapheme",
    "InconsistentSpans",
    "KurdkitError",
    "LossAction",
    "LossEvent",
    "LossReport",
    "MalformedRow",
    "MappingClass",
    "MappingEntry",
    "NonTotal",
    "NormalizationReport",
    "NormalizationRule",
    "Normalizer",
    "Rewrite",
    "RoundTripDiff",
    "RoundTripReport",
    "ScriptKind",
    "ScriptReport",
    "SoundClass",
    "Span",
    "TableError",
    "Token",
    "TokenKind",
    "Transliterator",
    "TranslitMode",
    "TranslitOptions",
    "TranslitResult",
    "UnknownGrapheme",
    "UnknownPolicy",
    "accumulate",
    "arabic_to_latin",
    "classify_char",
    "default_table",
    "detect_script",
    "is_normalized",
    "iter_word_tokens",
    "latin_to_arabic",
    "load_abbreviations",
    "load_tables",
    "merge",
    "normalize",
    "reconstruct",
    "render_report_figure",
    "replay_rewrites",
    "round_trip_report",
    "save_tables",
    "sentences",
    "words",
    "__version__",
]
