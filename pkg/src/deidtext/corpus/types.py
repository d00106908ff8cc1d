"""Document model: categories, tokens, spans, documents, corpora.

All types are immutable value objects. Invariants are checked at
construction so downstream code (tagging, evaluation, redaction) can rely
on well-formed inputs without re-validating.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterable, Iterator


class PiiCategory(enum.Enum):
    """The five PII categories. Declaration order is the canonical order."""

    ADDRESS = "address"
    DATE = "date"
    NAME = "name"
    NUMBER = "number"
    PLACE = "place"

    @classmethod
    def parse(cls, name: str) -> "PiiCategory":
        """Case-insensitive lookup; raises ValueError for unknown names."""
        try:
            return cls(name.lower())
        except ValueError:
            valid = ", ".join(c.value for c in cls)
            raise ValueError(f"unknown PII category {name!r} (expected one of: {valid})") from None


CATEGORIES: tuple[PiiCategory, ...] = tuple(PiiCategory)


@dataclass(frozen=True, slots=True)
class Token:
    """One token with character offsets into its document's text."""

    text: str
    start: int  # inclusive
    end: int  # exclusive

    def __post_init__(self) -> None:
        if not self.text:
            raise ValueError("token text must be non-empty")
        if not (0 <= self.start < self.end):
            raise ValueError(f"bad token offsets [{self.start}, {self.end})")
        if self.end - self.start != len(self.text):
            raise ValueError(f"token text {self.text!r} does not fit [{self.start}, {self.end})")


@dataclass(frozen=True, slots=True)
class Span:
    """One PII instance: a category over a character range and a token range.

    The character range must exactly cover whole tokens; ``token_start`` /
    ``token_end`` index into the owning document's token list.
    """

    category: PiiCategory
    char_start: int
    char_end: int
    token_start: int
    token_end: int

    def __post_init__(self) -> None:
        if not isinstance(self.category, PiiCategory):
            raise TypeError("span category must be a PiiCategory")
        if not (self.char_start < self.char_end):
            raise ValueError(f"bad span char range [{self.char_start}, {self.char_end})")
        if not (0 <= self.token_start < self.token_end):
            raise ValueError(f"bad span token range [{self.token_start}, {self.token_end})")


@dataclass(frozen=True, slots=True)
class Document:
    """Raw text plus its tokenization and sentence segmentation.

    ``sentences`` is a list of (start, end) token-index ranges that
    partitions the token list.
    """

    id: str
    text: str
    tokens: tuple[Token, ...]
    sentences: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        prev_end = 0
        for tok in self.tokens:
            if tok.start < prev_end:
                raise ValueError(f"tokens overlap or are unsorted at {tok!r}")
            if tok.end > len(self.text):
                raise ValueError(f"token {tok!r} exceeds text length {len(self.text)}")
            if self.text[tok.start : tok.end] != tok.text:
                raise ValueError(f"token {tok!r} does not match document text")
            prev_end = tok.end
        cursor = 0
        for s, e in self.sentences:
            if s != cursor or s >= e:
                raise ValueError("sentences must be contiguous non-empty token ranges")
            cursor = e
        if cursor != len(self.tokens):
            raise ValueError("sentences must cover all tokens")

    def sentence_tokens(self, index: int) -> tuple[Token, ...]:
        s, e = self.sentences[index]
        return self.tokens[s:e]


@dataclass(frozen=True, slots=True)
class AnnotatedDocument:
    """A document plus non-overlapping, token-aligned PII spans (gold or predicted)."""

    doc: Document
    spans: tuple[Span, ...]

    def __post_init__(self) -> None:
        tokens = self.doc.tokens
        prev_end = 0
        for span in self.spans:
            if span.char_start < prev_end:
                raise ValueError(f"spans overlap or are unsorted at {span!r}")
            if span.token_end > len(tokens):
                raise ValueError(f"span {span!r} exceeds token count")
            if tokens[span.token_start].start != span.char_start or tokens[span.token_end - 1].end != span.char_end:
                raise ValueError(f"span {span!r} is not token-aligned")
            prev_end = span.char_end

    @property
    def id(self) -> str:
        return self.doc.id

    @property
    def text(self) -> str:
        return self.doc.text


@dataclass(frozen=True, slots=True)
class Corpus:
    """An ordered collection of annotated documents with unique ids."""

    docs: tuple[AnnotatedDocument, ...]

    def __post_init__(self) -> None:
        seen: set[str] = set()
        for adoc in self.docs:
            if adoc.id in seen:
                raise ValueError(f"duplicate document id {adoc.id!r}")
            seen.add(adoc.id)

    def __len__(self) -> int:
        return len(self.docs)

    def __iter__(self) -> Iterator[AnnotatedDocument]:
        return iter(self.docs)

    def ids(self) -> tuple[str, ...]:
        return tuple(adoc.id for adoc in self.docs)

    def subset(self, ids: Iterable[str]) -> "Corpus":
        by_id = {adoc.id: adoc for adoc in self.docs}
        return Corpus(tuple(by_id[i] for i in ids))


PARSE_STATS_VERSION = 1


@dataclass(slots=True)
class ParseStats:
    """Accumulator for annotation-parsing statistics across a corpus."""

    documents: int = 0
    snapped_spans: int = 0
    crlf_normalized: int = 0
    span_counts: dict[str, int] = field(
        default_factory=lambda: {c.value: 0 for c in PiiCategory}
    )

    def record_span(self, category: PiiCategory, snapped: bool) -> None:
        self.span_counts[category.value] += 1
        if snapped:
            self.snapped_spans += 1

    @property
    def total_spans(self) -> int:
        return sum(self.span_counts.values())

    def to_json_dict(self) -> dict:
        return {
            "version": PARSE_STATS_VERSION,
            "documents": self.documents,
            "snapped_spans": self.snapped_spans,
            "crlf_normalized": self.crlf_normalized,
            "span_counts": dict(self.span_counts),
            "total_spans": self.total_spans,
        }
