"""BIO tag encoding/decoding for token-aligned spans.

The label alphabet has exactly 11 tags: O first, then B-/I- pairs in
category order (address, date, name, number, place). That order is also
the decoder's tie-break order, so an all-zero model tags everything O.
"""

from __future__ import annotations

from typing import Sequence

from .markup import MisalignedSpanError
from .types import PiiCategory, Span, Token

OUTSIDE = "O"

LABELS: tuple[str, ...] = (OUTSIDE,) + tuple(
    tag for cat in PiiCategory for tag in (f"B-{cat.value}", f"I-{cat.value}")
)

LABEL_INDEX: dict[str, int] = {label: i for i, label in enumerate(LABELS)}


def spans_to_bio(tokens: Sequence[Token], spans: Sequence[Span]) -> list[str]:
    """One tag per token: B-<cat> at each span's first token, I-<cat> after.

    ``tokens`` is one sentence; spans are selected by character overlap.
    A span whose boundary falls inside a token, or which only partly
    overlaps the token window, raises MisalignedSpanError.
    """
    tags = [OUTSIDE] * len(tokens)
    if not tokens:
        return tags
    window_start = tokens[0].start
    window_end = tokens[-1].end
    starts = {tok.start: i for i, tok in enumerate(tokens)}
    ends = {tok.end: i for i, tok in enumerate(tokens)}
    for span in spans:
        if span.char_end <= window_start or span.char_start >= window_end:
            continue
        first = starts.get(span.char_start)
        last = ends.get(span.char_end)
        if first is None or last is None:
            raise MisalignedSpanError(
                f"span [{span.char_start},{span.char_end}) does not align with "
                f"token boundaries in window [{window_start},{window_end})"
            )
        tags[first] = f"B-{span.category.value}"
        for i in range(first + 1, last + 1):
            tags[i] = f"I-{span.category.value}"
    return tags


def bio_to_spans(tags: Sequence[str], tokens: Sequence[Token]) -> list[Span]:
    """Decode maximal B-X (I-X)* runs into spans.

    Token indices in the result are relative to ``tokens``. An I-X without
    a preceding B-X/I-X of the same category starts a new span (the
    standard repair rule), so every tag sequence decodes.
    """
    if len(tags) != len(tokens):
        raise ValueError(f"{len(tags)} tags for {len(tokens)} tokens")
    spans: list[Span] = []
    open_start: int | None = None
    open_cat: PiiCategory | None = None

    def close(upto: int) -> None:
        nonlocal open_start, open_cat
        if open_start is not None and open_cat is not None:
            spans.append(
                Span(
                    open_cat,
                    tokens[open_start].start,
                    tokens[upto - 1].end,
                    open_start,
                    upto,
                )
            )
        open_start = None
        open_cat = None

    for i, tag in enumerate(tags):
        if tag not in LABEL_INDEX:
            raise ValueError(f"unknown tag {tag!r}")
        if tag == OUTSIDE:
            close(i)
            continue
        prefix, cat_name = tag.split("-", 1)
        cat = PiiCategory(cat_name)
        if prefix == "B" or cat is not open_cat:
            close(i)
            open_start = i
            open_cat = cat
    close(len(tags))
    return spans


def shift_span(span: Span, token_offset: int) -> Span:
    """Rebase a sentence-relative span onto document token indices."""
    return Span(
        span.category,
        span.char_start,
        span.char_end,
        span.token_start + token_offset,
        span.token_end + token_offset,
    )
