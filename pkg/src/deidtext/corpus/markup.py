"""Inline-annotation markup: ``<START:category>content<END>``.

Parsing strips the markers, tokenizes the cleaned text, and turns each
marker pair into a token-aligned span. Markers may not nest or overlap;
category names are matched case-insensitively and stored lowercase.

A span whose trimmed boundaries fall inside a token is expanded outward to
whole-token boundaries rather than silently truncated; every such event is
counted in the parse statistics. Sentence boundaries that would cut
through a span are suppressed so that each span lies within one sentence.
"""

from __future__ import annotations

import re

from .tokenizer import split_sentences, tokenize
from .types import AnnotatedDocument, Document, ParseStats, PiiCategory, Span, Token

_START_RE = re.compile(r"<START:([A-Za-z]+)>")
_END = "<END>"

_CATEGORY_NAMES = {c.value for c in PiiCategory}


class MarkupError(ValueError):
    """Malformed inline annotation. ``position`` indexes the marked-up text."""

    def __init__(self, message: str, position: int) -> None:
        super().__init__(f"{message} (at offset {position})")
        self.position = position


class UnclosedMarkerError(MarkupError):
    pass


class NestedMarkerError(MarkupError):
    pass


class StrayEndError(MarkupError):
    pass


class UnknownCategoryError(MarkupError):
    pass


class EmptySpanError(MarkupError):
    pass


class OverlappingSpansError(ValueError):
    pass


class MisalignedSpanError(ValueError):
    pass


def parse_annotated(
    marked_text: str,
    doc_id: str = "",
    stats: ParseStats | None = None,
) -> AnnotatedDocument:
    """Parse marked-up text into a document with gold spans.

    The returned document's text is the input with all marker substrings
    deleted; no other character changes. When ``stats`` is given, span
    counts and snap events are accumulated into it.
    """
    clean_parts: list[str] = []
    clean_len = 0
    raw_spans: list[tuple[PiiCategory, int, int]] = []
    open_marker: tuple[PiiCategory, int, int] | None = None  # (cat, clean_start, raw_pos)

    pos = 0
    while True:
        m = _START_RE.search(marked_text, pos)
        end_idx = marked_text.find(_END, pos)
        start_idx = m.start() if m else -1
        if start_idx < 0 and end_idx < 0:
            break
        if end_idx < 0 or (0 <= start_idx < end_idx):
            assert m is not None
            if open_marker is not None:
                raise NestedMarkerError("nested <START:...> marker", start_idx)
            name = m.group(1)
            if name.lower() not in _CATEGORY_NAMES:
                raise UnknownCategoryError(f"unknown category {name!r}", start_idx)
            clean_parts.append(marked_text[pos:start_idx])
            clean_len += start_idx - pos
            open_marker = (PiiCategory.parse(name), clean_len, start_idx)
            pos = m.end()
        else:
            if open_marker is None:
                raise StrayEndError("<END> without matching <START:...>", end_idx)
            clean_parts.append(marked_text[pos:end_idx])
            clean_len += end_idx - pos
            cat, span_start, _ = open_marker
            raw_spans.append((cat, span_start, clean_len))
            open_marker = None
            pos = end_idx + len(_END)
    if open_marker is not None:
        raise UnclosedMarkerError(
            f"<START:{open_marker[0].value}> marker is never closed", open_marker[2]
        )
    clean_parts.append(marked_text[pos:])
    text = "".join(clean_parts)

    trimmed: list[tuple[PiiCategory, int, int]] = []
    for cat, cs, ce in raw_spans:
        content = text[cs:ce]
        stripped = content.strip()
        if not stripped:
            raise EmptySpanError(f"<START:{cat.value}> encloses only whitespace", cs)
        lead = len(content) - len(content.lstrip())
        trimmed.append((cat, cs + lead, cs + lead + len(stripped)))

    return _assemble(doc_id, text, trimmed, stats)


def _assemble(
    doc_id: str,
    text: str,
    char_spans: list[tuple[PiiCategory, int, int]],
    stats: ParseStats | None,
) -> AnnotatedDocument:
    """Tokenize, snap spans outward to token boundaries, build the document."""
    tokens = tokenize(text)
    spans: list[Span] = []
    for cat, cs, ce in sorted(char_spans, key=lambda t: t[1]):
        ts, te = _covering_tokens(tokens, cs, ce)
        snapped_cs = tokens[ts].start
        snapped_ce = tokens[te - 1].end
        snapped = (snapped_cs, snapped_ce) != (cs, ce)
        if stats is not None:
            stats.record_span(cat, snapped)
        spans.append(Span(cat, snapped_cs, snapped_ce, ts, te))

    for prev, cur in zip(spans, spans[1:]):
        if cur.char_start < prev.char_end:
            raise OverlappingSpansError(
                f"spans overlap after token alignment: "
                f"{prev.category.value}@[{prev.char_start},{prev.char_end}) and "
                f"{cur.category.value}@[{cur.char_start},{cur.char_end})"
            )

    sentences = _merge_span_straddles(split_sentences(tokens), spans)
    doc = Document(doc_id, text, tuple(tokens), tuple(sentences))
    return AnnotatedDocument(doc, tuple(spans))


def _covering_tokens(tokens: list[Token], cs: int, ce: int) -> tuple[int, int]:
    """Indices of the token run overlapping [cs, ce)."""
    ts = None
    te = None
    for i, tok in enumerate(tokens):
        if tok.end > cs and ts is None:
            ts = i
        if tok.start < ce:
            te = i + 1
    if ts is None or te is None or ts >= te:
        raise MisalignedSpanError(f"span [{cs},{ce}) covers no token")
    return ts, te


def _merge_span_straddles(
    sentences: list[tuple[int, int]], spans: list[Span]
) -> list[tuple[int, int]]:
    """Drop sentence boundaries that fall strictly inside a span."""
    if not spans or len(sentences) <= 1:
        return sentences
    cuts = [e for _, e in sentences[:-1]]
    kept = [c for c in cuts if not any(s.token_start < c < s.token_end for s in spans)]
    merged: list[tuple[int, int]] = []
    start = 0
    for c in kept:
        merged.append((start, c))
        start = c
    merged.append((start, sentences[-1][1]))
    return merged


def serialize_annotated(adoc: AnnotatedDocument) -> str:
    """Insert marker pairs around each span; inverse of ``parse_annotated``."""
    text = adoc.doc.text
    pieces: list[str] = []
    cursor = 0
    for span in adoc.spans:
        pieces.append(text[cursor : span.char_start])
        pieces.append(f"<START:{span.category.value}>")
        pieces.append(text[span.char_start : span.char_end])
        pieces.append(_END)
        cursor = span.char_end
    pieces.append(text[cursor:])
    return "".join(pieces)


def build_document(doc_id: str, text: str) -> Document:
    """Tokenize and sentence-split plain (unannotated) text."""
    tokens = tuple(tokenize(text))
    return Document(doc_id, text, tokens, tuple(split_sentences(tokens)))
