"""Streaming command-line front-end.

Primary output stays clean for piping; loss and rewrite diagnostics go to
a side channel (stderr or --report FILE) as line-delimited JSON records.
Exit codes: 0 success, 1 usage error, 2 data error, 3 I/O error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from contextlib import ExitStack
from pathlib import Path

from .alphabet import AlphabetTable, ScriptKind, default_table, load_tables
from .detect import detect_script
from .errors import KurdkitError
from .normalize import Normalizer
from .segment import load_abbreviations, sentences, words
from .stats import FrequencyTable, iter_word_tokens, render_report_figure
from .translit import Transliterator, TranslitMode, TranslitOptions, UnknownPolicy

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2
EXIT_IO = 3

TABLE_DIR_ENV = "KURDKIT_TABLE_DIR"

_SCRIPTS = {"arabic": ScriptKind.ARABIC_KURDISH, "latin": ScriptKind.LATIN_KURDISH}


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse would exit(2); the contract wants 1
        raise _UsageError(message)


def _add_io_arguments(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("inputs", nargs="*", metavar="FILE", help="input files; '-' or none reads stdin")
    sub.add_argument("-o", "--output", metavar="FILE", help="primary output (default stdout)")
    sub.add_argument("--report", metavar="FILE", help="side channel for JSON diagnostics (default stderr)")
    sub.add_argument("--table", metavar="DIR", help=f"mapping-table directory (default ${TABLE_DIR_ENV} or built-in)")
    sub.add_argument("--whole-file", action="store_true", help="process whole documents instead of line-by-line")


def build_parser() -> _Parser:
    parser = _Parser(prog="kurdkit", description="Kurdish bi-standard text toolkit")
    commands = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = commands.add_parser("normalize", help="rewrite Arabic-script text to the canonical encoding")
    _add_io_arguments(p)
    p.add_argument("--aggressive-heh", action="store_true", help="also rewrite word-final heh after a consonant")
    p.add_argument("--digits", action="store_true", help="fold Arabic-Indic digits to ASCII")

    p = commands.add_parser("translit", help="convert between the Latin and Arabic scripts")
    _add_io_arguments(p)
    p.add_argument("--from", dest="from_script", required=True, choices=sorted(_SCRIPTS))
    p.add_argument("--to", dest="to_script", required=True, choices=sorted(_SCRIPTS))
    p.add_argument("--mode", choices=[m.value for m in TranslitMode], default=TranslitMode.STRICT.value)
    p.add_argument("--capitalize", action="store_true", help="capitalize sentences (arabic→latin only)")
    p.add_argument("--on-unknown", choices=[u.value for u in UnknownPolicy], default=UnknownPolicy.PASS_THROUGH.value)

    p = commands.add_parser("tokenize", help="split text into tokens or sentences")
    _add_io_arguments(p)
    p.add_argument("--json", action="store_true", help="line-delimited JSON records instead of plain text")
    p.add_argument("--sentences", action="store_true", help="emit sentence spans instead of word tokens")
    p.add_argument("--abbrev", metavar="FILE", help="abbreviation list suppressing sentence boundaries")

    p = commands.add_parser("detect", help="report the script of the input")
    _add_io_arguments(p)
    p.add_argument("--json", action="store_true", help="line-delimited JSON records instead of plain text")
    p.add_argument("--threshold", type=float, default=0.10, help="presence threshold for Mixed (default 0.10)")

    p = commands.add_parser("stats", help="accumulate a token frequency table")
    _add_io_arguments(p)
    p.add_argument("--json", action="store_true", help="line-delimited JSON rows instead of TSV")
    p.add_argument("--normalize", action="store_true", help="normalize before tokenizing")
    p.add_argument("--script-filter", choices=sorted(_SCRIPTS), help="count only tokens of one script")
    p.add_argument("--plot", metavar="FILE", help="render a rank/frequency figure to FILE")
    p.add_argument("--top", type=int, default=30, help="tokens shown in the figure's bar panel")

    return parser


def _load_table(args) -> AlphabetTable:
    path = args.table or os.environ.get(TABLE_DIR_ENV)
    return load_tables(path) if path else default_table()


def _check_inputs(args) -> None:
    for name in args.inputs:
        if name != "-" and not Path(name).is_file():
            raise FileNotFoundError(f"input file not found: {name}")


def _sources(args, stack: ExitStack):
    if not args.inputs:
        yield "<stdin>", sys.stdin
        return
    for name in args.inputs:
        if name == "-":
            yield "<stdin>", sys.stdin
        else:
            yield name, stack.enter_context(open(name, encoding="utf-8-sig"))


def _units(stream, whole: bool):
    """(text, line_ending) units: whole document or one line at a time."""
    if whole:
        yield stream.read(), ""
        return
    for line in stream:
        if line.endswith("\n"):
            yield line[:-1], "\n"
        else:
            yield line, ""


class _Reporter:
    def __init__(self, stream):
        self.stream = stream

    def emit(self, record: dict) -> None:
        self.stream.write(json.dumps(record, ensure_ascii=False) + "\n")


def _run_normalize(args, out, reporter) -> int:
    normalizer = Normalizer(_load_table(args), aggressive_heh=args.aggressive_heh, fold_digits=args.digits)
    for name, stream in _sources(args, args.stack):
        for lineno, (text, ending) in enumerate(_units(stream, args.whole_file), start=1):
            report = normalizer.normalize(text)
            out.write(report.output + ending)
            for rw in report.rewrites:
                reporter.emit(
                    {
                        "type": "rewrite",
                        "source": name,
                        "line": lineno,
                        "rule": rw.rule,
                        "offset": rw.offset,
                        "before": rw.before,
                        "after": rw.after,
                    }
                )
    return EXIT_OK


def _run_translit(args, out, reporter) -> int:
    if args.from_script == args.to_script:
        raise _UsageError("--from and --to must name different scripts")
    engine = Transliterator(_load_table(args))
    opts = TranslitOptions(
        mode=TranslitMode(args.mode),
        capitalize_sentences=args.capitalize,
        on_unknown=UnknownPolicy(args.on_unknown),
    )
    convert = engine.arabic_to_latin if args.from_script == "arabic" else engine.latin_to_arabic
    for name, stream in _sources(args, args.stack):
        for lineno, (text, ending) in enumerate(_units(stream, args.whole_file), start=1):
            result = convert(text, opts)
            out.write(result.output + ending)
            if result.normalization is not None:
                for rw in result.normalization.rewrites:
                    reporter.emit(
                        {
                            "type": "rewrite",
                            "source": name,
                            "line": lineno,
                            "rule": rw.rule,
                            "offset": rw.offset,
                            "before": rw.before,
                            "after": rw.after,
                        }
                    )
            for event in result.loss.events:
                reporter.emit(
                    {
                        "type": "loss",
                        "source": name,
                        "line": lineno,
                        "offset": event.offset,
                        "grapheme": event.grapheme,
                        "action": event.action.value,
                        "substitute": event.substitute,
                    }
                )
    return EXIT_OK


def _run_tokenize(args, out, reporter) -> int:
    abbreviations = load_abbreviations(args.abbrev) if args.abbrev else frozenset()
    for name, stream in _sources(args, args.stack):
        for text, _ending in _units(stream, args.whole_file):
            if args.sentences:
                for span in sentences(text, abbreviations=abbreviations):
                    if args.json:
                        out.write(
                            json.dumps(
                                {"text": text[span.start : span.end], "start": span.start, "end": span.end},
                                ensure_ascii=False,
                            )
                            + "\n"
                        )
                    else:
                        out.write(text[span.start : span.end].replace("\n", " ") + "\n")
            else:
                for tok in words(text):
                    if args.json:
                        out.write(
                            json.dumps(
                                {
                                    "text": tok.text,
                                    "start": tok.span.start,
                                    "end": tok.span.end,
                                    "kind": tok.kind.value,
                                },
                                ensure_ascii=False,
                            )
                            + "\n"
                        )
                    else:
                        out.write(tok.text + "\n")
    return EXIT_OK


def _run_detect(args, out, reporter) -> int:
    table = _load_table(args)

    def emit(text: str) -> None:
        report = detect_script(text, table=table, mixed_threshold=args.threshold)
        if args.json:
            out.write(
                json.dumps(
                    {
                        "kind": report.kind.value,
                        "arabic_ratio": report.arabic_ratio,
                        "latin_ratio": report.latin_ratio,
                        "cues": [
                            {"id": c.id, "text": c.text, "offset": c.offset}
                            for c in report.dialect_cues
                        ],
                    },
                    ensure_ascii=False,
                )
                + "\n"
            )
        else:
            out.write(f"{report.kind.value}\t{report.arabic_ratio:.4f}\t{report.latin_ratio:.4f}\n")

    for name, stream in _sources(args, args.stack):
        seen = False
        for text, _ending in _units(stream, args.whole_file):
            seen = True
            emit(text)
        if not seen:
            emit("")  # empty input still gets a verdict
    return EXIT_OK


def _run_stats(args, out, reporter) -> int:
    table = _load_table(args)
    script_filter = _SCRIPTS[args.script_filter] if args.script_filter else None
    freq = FrequencyTable()
    for name, stream in _sources(args, args.stack):
        # one document per input source, streamed line by line
        freq.accumulate_tokens(
            token
            for text, _ending in _units(stream, args.whole_file)
            for token in iter_word_tokens(
                text, normalize=args.normalize, script_filter=script_filter, table=table
            )
        )
    if args.json:
        for token, stats in freq.sorted_items():
            out.write(
                json.dumps(
                    {"token": token, "count": stats.count, "doc_count": stats.doc_count},
                    ensure_ascii=False,
                )
                + "\n"
            )
    else:
        freq.to_tsv(out)
    reporter.emit(
        {
            "type": "summary",
            "total_tokens": freq.total_tokens,
            "total_types": freq.total_types,
            "documents": freq.documents,
            "type_token_ratio": freq.type_token_ratio,
        }
    )
    if args.plot:
        render_report_figure(freq, args.plot, top=args.top)
    return EXIT_OK


_RUNNERS = {
    "normalize": _run_normalize,
    "translit": _run_translit,
    "tokenize": _run_tokenize,
    "detect": _run_detect,
    "stats": _run_stats,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"kurdkit: usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE

    try:
        with ExitStack() as stack:
            args.stack = stack
            _check_inputs(args)
            out = (
                stack.enter_context(open(args.output, "w", encoding="utf-8"))
                if args.output
                else sys.stdout
            )
            report_stream = (
                stack.enter_context(open(args.report, "w", encoding="utf-8"))
                if args.report
                else sys.stderr
            )
            return _RUNNERS[args.command](args, out, _Reporter(report_stream))
    except _UsageError as exc:
        print(f"kurdkit: usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except KurdkitError as exc:
        print(f"kurdkit: {exc}", file=sys.stderr)
        return EXIT_DATA
    except UnicodeDecodeError as exc:
        print(f"kurdkit: input is not valid UTF-8: {exc}", file=sys.stderr)
        return EXIT_IO
    except OSError as exc:
        print(f"kurdkit: {exc}", file=sys.stderr)
        return EXIT_IO


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
