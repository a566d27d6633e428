"""Frequency and type/token statistics over normalized, tokenized text.

Counting is over raw surface forms: no stemming or case folding exists
for Kurdish, so the honest baseline is the normalized token itself.
Tables merge associatively and commutatively, so document shards can be
counted in parallel and combined. A small report renderer writes a
rank/frequency figure next to the delimited output.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from pathlib import Path
from typing import IO, Iterable

from .alphabet import AlphabetTable, ScriptKind, default_table
from .normalize import normalize as _normalize_text
from .segment import TokenKind, words

_HEADER = "token\tcount\tdoc_count"


@dataclass
class TokenStats:
    count: int = 0
    doc_count: int = 0


class FrequencyTable:
    """Token frequency table with per-document occurrence counts."""

    def __init__(self):
        self.entries: dict[str, TokenStats] = {}
        self.total_tokens = 0
        self.documents = 0

    @property
    def total_types(self) -> int:
        return len(self.entries)

    @property
    def type_token_ratio(self) -> float:
        return self.total_types / self.total_tokens if self.total_tokens else 0.0

    def __eq__(self, other: object) -> bool:
        # document count is bookkeeping, not part of the exported schema
        if not isinstance(other, FrequencyTable):
            return NotImplemented
        return (
            self.total_tokens == other.total_tokens
            and {k: (v.count, v.doc_count) for k, v in self.entries.items()}
            == {k: (v.count, v.doc_count) for k, v in other.entries.items()}
        )

    def accumulate(
        self,
        doc: str,
        *,
        normalize: bool = False,
        script_filter: ScriptKind | None = None,
        table: AlphabetTable | None = None,
    ) -> "FrequencyTable":
        """Count the word tokens of one document into this table.

        ``normalize`` runs the canonical-encoding pass first;
        ``script_filter`` keeps only tokens whose letters all belong to the
        given Kurdish script. Returns self.
        """
        return self.accumulate_tokens(
            iter_word_tokens(doc, normalize=normalize, script_filter=script_filter, table=table)
        )

    def accumulate_tokens(self, tokens: Iterable[str]) -> "FrequencyTable":
        """Count a token stream as one document. Returns self."""
        counts = Counter(tokens)
        for token, count in counts.items():
            stats = self.entries.setdefault(token, TokenStats())
            stats.count += count
            stats.doc_count += 1
        self.total_tokens += sum(counts.values())
        self.documents += 1
        return self

    def merge(self, other: "FrequencyTable") -> "FrequencyTable":
        """Fold another table into this one. Returns self."""
        for token, stats in other.entries.items():
            mine = self.entries.setdefault(token, TokenStats())
            mine.count += stats.count
            mine.doc_count += stats.doc_count
        self.total_tokens += other.total_tokens
        self.documents += other.documents
        return self

    def sorted_items(self) -> list[tuple[str, TokenStats]]:
        """Entries by descending count, ties broken lexicographically."""
        return sorted(self.entries.items(), key=lambda kv: (-kv[1].count, kv[0]))

    def to_tsv(self, destination: str | Path | IO[str]) -> None:
        """Write token/count/doc_count rows, sorted, losslessly re-importable."""
        lines = [_HEADER]
        lines.extend(
            f"{token}\t{stats.count}\t{stats.doc_count}" for token, stats in self.sorted_items()
        )
        payload = "\n".join(lines) + "\n"
        if hasattr(destination, "write"):
            destination.write(payload)
        else:
            Path(destination).write_text(payload, encoding="utf-8")

    @classmethod
    def from_tsv(cls, source: str | Path | IO[str]) -> "FrequencyTable":
        text = source.read() if hasattr(source, "read") else Path(source).read_text(encoding="utf-8")
        table = cls()
        lines = text.splitlines()
        if not lines or lines[0] != _HEADER:
            raise ValueError("not a frequency-table TSV (missing header)")
        for line in lines[1:]:
            if not line:
                continue
            token, count, doc_count = line.split("\t")
            table.entries[token] = TokenStats(count=int(count), doc_count=int(doc_count))
            table.total_tokens += int(count)
        return table


def iter_word_tokens(
    text: str,
    *,
    normalize: bool = False,
    script_filter: ScriptKind | None = None,
    table: AlphabetTable | None = None,
):
    """Word-token texts of ``text`` after the optional pipeline steps."""
    table = table or default_table()
    if normalize:
        text = _normalize_text(text, table=table).output
    for tok in words(text):
        if tok.kind is not TokenKind.WORD:
            continue
        if script_filter is not None and not _all_letters_in(tok.text, script_filter, table):
            continue
        yield tok.text


def _all_letters_in(token: str, script: ScriptKind, table: AlphabetTable) -> bool:
    saw_letter = False
    for ch in token:
        info = table.classify_char(ch)
        if info.is_letter:
            saw_letter = True
            if info.script is not script:
                return False
    return saw_letter


def accumulate(
    table: FrequencyTable,
    doc: str,
    *,
    normalize: bool = False,
    script_filter: ScriptKind | None = None,
    alphabet: AlphabetTable | None = None,
) -> FrequencyTable:
    """Functional spelling of :meth:`FrequencyTable.accumulate`."""
    return table.accumulate(doc, normalize=normalize, script_filter=script_filter, table=alphabet)


def merge(tables: Iterable[FrequencyTable]) -> FrequencyTable:
    out = FrequencyTable()
    for t in tables:
        out.merge(t)
    return out


def render_report_figure(
    table: FrequencyTable,
    destination: str | Path,
    *,
    top: int = 30,
    title: str | None = None,
) -> None:
    """Render a rank/frequency report figure (format chosen by extension)."""
    from matplotlib.figure import Figure  # imported lazily; Agg-free, no global state

    items = table.sorted_items()
    fig = Figure(figsize=(11, 4.5))
    ax_zipf, ax_top = fig.subplots(1, 2)

    if items:
        counts = [stats.count for _, stats in items]
        ax_zipf.loglog(range(1, len(counts) + 1), counts, drawstyle="steps-post", lw=1.2)
    ax_zipf.set_xlabel("rank")
    ax_zipf.set_ylabel("frequency")
    ax_zipf.set_title("rank/frequency")
    ax_zipf.grid(True, which="both", alpha=0.25)

    head = items[:top]
    if head:
        labels = [token for token, _ in reversed(head)]
        values = [stats.count for _, stats in reversed(head)]
        ax_top.barh(range(len(head)), values)
        ax_top.set_yticks(range(len(head)))
        ax_top.set_yticklabels(labels, fontsize=7)
    ax_top.set_xlabel("count")
    ax_top.set_title(f"top {min(top, len(items))} tokens")

    summary = (
        f"tokens={table.total_tokens}  types={table.total_types}  "
        f"TTR={table.type_token_ratio:.4f}  documents={table.documents}"
    )
    fig.suptitle(title or "corpus frequency report")
    fig.text(0.5, 0.01, summary, ha="center", fontsize=8)
    fig.tight_layout(rect=(0, 0.04, 1, 1))
    fig.savefig(str(destination))
