"""Rule-based tokenizer and sentence splitter with character offsets.

Tokens are maximal non-whitespace runs with the punctuation characters
. , ; : ! ? ( ) " split off as single-character tokens at run edges.
Internal punctuation stays put, so dates ("5/3/2000"), identifiers
("AL-12345"), decimals ("2.5") and dotted credentials ("M.D.") survive as
single tokens. A trailing period is kept when the remaining run is a
dotted-letter sequence like "M.D." or "A.".
"""

from __future__ import annotations

import re
from typing import Sequence

from .types import Token

EDGE_PUNCT = frozenset('.,;:!?()"')

# letters each followed by a period: M.D., D.O., U.S., A.
_DOTTED_LETTERS_RE = re.compile(r"^(?:[A-Za-z]\.)+$")

_TERMINATORS = frozenset(".!?")

# Tokens that keep a following "." from ending a sentence. Dense in
# medical-style reports; versioned together with the tokenizer rules.
ABBREVIATIONS = frozenset(
    {"Dr.", "Mr.", "Mrs.", "Ms.", "M.D.", "D.O.", "St.", "No.", "Inc.", "Jr.", "Sr.", "vs."}
)

TOKENIZER_VERSION = 1


def tokenize(text: str) -> list[Token]:
    """Split text into tokens with exact character offsets."""
    tokens: list[Token] = []
    i = 0
    n = len(text)
    while i < n:
        if text[i].isspace():
            i += 1
            continue
        j = i
        while j < n and not text[j].isspace():
            j += 1
        _split_run(text, i, j, tokens)
        i = j
    return tokens


def _split_run(text: str, start: int, end: int, out: list[Token]) -> None:
    back: list[Token] = []
    while start < end:
        run = text[start:end]
        first = text[start]
        if first in EDGE_PUNCT and not (first == "." and _DOTTED_LETTERS_RE.match(run)):
            out.append(Token(first, start, start + 1))
            start += 1
            continue
        last = text[end - 1]
        if last in EDGE_PUNCT and not (last == "." and _DOTTED_LETTERS_RE.match(run)):
            back.append(Token(last, end - 1, end))
            end -= 1
            continue
        break
    if start < end:
        out.append(Token(text[start:end], start, end))
    out.extend(reversed(back))


def split_sentences(tokens: Sequence[Token]) -> list[tuple[int, int]]:
    """Sentence boundaries as token-index ranges.

    A boundary follows a "." "!" or "?" token whose successor starts with
    an uppercase letter or digit, unless the preceding token plus "." is a
    known abbreviation. The final partial sentence is always closed.
    """
    if not tokens:
        return []
    ranges: list[tuple[int, int]] = []
    start = 0
    for k, tok in enumerate(tokens[:-1]):
        if tok.text not in _TERMINATORS:
            continue
        nxt = tokens[k + 1].text[0]
        if not (nxt.isupper() or nxt.isdigit()):
            continue
        if tok.text == "." and k > 0 and (tokens[k - 1].text + ".") in ABBREVIATIONS:
            continue
        ranges.append((start, k + 1))
        start = k + 1
    ranges.append((start, len(tokens)))
    return ranges
