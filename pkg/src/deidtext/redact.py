"""Turn a tagged document into a de-identified one.

Three modes: remove span text, replace it with an "[CATEGORY]"
placeholder, or substitute a deterministic same-category pseudonym.
Redaction operates on whatever spans the document carries (gold or
predicted); it never re-runs the tagger.
"""

from __future__ import annotations

import enum
import hashlib
from dataclasses import dataclass, field

from ._jsonutil import dumps as canonical_dumps
from .corpus.markup import OverlappingSpansError
from .corpus.types import AnnotatedDocument, PiiCategory
from .lexicon import (
    CITIES,
    FACILITY_PATTERNS,
    GIVEN_NAMES,
    STATE_ABBREVIATIONS,
    STREET_NAMES,
    STREET_SUFFIXES,
    SURNAMES,
)


class RedactionMode(enum.Enum):
    REMOVE = "remove"
    PLACEHOLDER = "placeholder"
    PSEUDONYM = "pseudonym"

    @classmethod
    def parse(cls, name: str) -> "RedactionMode":
        try:
            return cls(name.lower())
        except ValueError:
            valid = ", ".join(m.value for m in cls)
            raise ValueError(f"unknown redaction mode {name!r} (expected: {valid})") from None


@dataclass(frozen=True)
class PseudonymMap:
    """Per-document mapping original span text -> surrogate, by category."""

    seed: int
    entries: dict[str, dict[str, str]] = field(default_factory=dict)

    def to_json(self) -> str:
        return canonical_dumps({"seed": self.seed, "entries": self.entries})


@dataclass(frozen=True)
class RedactionResult:
    text: str
    pseudonyms: PseudonymMap | None


def redact(adoc: AnnotatedDocument, mode: RedactionMode, seed: int = 0) -> RedactionResult:
    """Replace every span right-to-left so earlier offsets stay valid."""
    spans = sorted(adoc.spans, key=lambda s: s.char_start)
    for prev, cur in zip(spans, spans[1:]):
        if cur.char_start < prev.char_end:
            raise OverlappingSpansError("cannot redact overlapping spans")

    pseudonyms = PseudonymMap(seed=seed) if mode is RedactionMode.PSEUDONYM else None
    text = adoc.doc.text
    for span in reversed(spans):
        original = text[span.char_start : span.char_end]
        if mode is RedactionMode.REMOVE:
            text = _remove_at(text, span.char_start, span.char_end)
        elif mode is RedactionMode.PLACEHOLDER:
            replacement = f"[{span.category.value.upper()}]"
            text = text[: span.char_start] + replacement + text[span.char_end :]
        else:
            assert pseudonyms is not None
            surrogate = _surrogate(seed, span.category, original)
            pseudonyms.entries.setdefault(span.category.value, {})[original] = surrogate
            text = text[: span.char_start] + surrogate + text[span.char_end :]
    return RedactionResult(text=text, pseudonyms=pseudonyms)


def _remove_at(text: str, start: int, end: int) -> str:
    out = text[:start] + text[end:]
    # deleting between two whitespace characters doubles them up; collapse
    # the space/tab run at the join to a single space
    if 0 < start < len(out) and out[start - 1] in " \t" and out[start] in " \t":
        a = start
        while a > 0 and out[a - 1] in " \t":
            a -= 1
        b = start
        while b < len(out) and out[b] in " \t":
            b += 1
        out = out[:a] + " " + out[b:]
    return out


def _keyed_hash(seed: int, category: PiiCategory, original: str, salt: int = 0) -> int:
    h = hashlib.sha256()
    h.update(seed.to_bytes(8, "big"))
    h.update(salt.to_bytes(8, "big"))
    h.update(category.value.encode("utf-8"))
    h.update(b"\x00")
    h.update(original.encode("utf-8"))
    return int.from_bytes(h.digest()[:8], "big")


def _surrogate(seed: int, category: PiiCategory, original: str) -> str:
    salt = 0
    while True:
        h = _keyed_hash(seed, category, original, salt)
        value = _draw(category, h)
        if value != original:
            return value
        salt += 1  # surrogates must never equal their originals


def _draw(category: PiiCategory, h: int) -> str:
    if category is PiiCategory.NAME:
        return f"{GIVEN_NAMES[h % len(GIVEN_NAMES)]} {SURNAMES[(h >> 16) % len(SURNAMES)]}"
    if category is PiiCategory.DATE:
        month = 1 + h % 12
        day = 1 + (h >> 8) % 28
        year = 1990 + (h >> 16) % 34
        return f"{month}/{day}/{year}"
    if category is PiiCategory.PLACE:
        pattern = FACILITY_PATTERNS[h % len(FACILITY_PATTERNS)]
        return pattern.format(
            city=CITIES[(h >> 12) % len(CITIES)],
            surname=SURNAMES[(h >> 24) % len(SURNAMES)],
        )
    if category is PiiCategory.ADDRESS:
        number = 100 + h % 9900
        street = STREET_NAMES[(h >> 16) % len(STREET_NAMES)]
        suffix = STREET_SUFFIXES[(h >> 24) % len(STREET_SUFFIXES)]
        city = CITIES[(h >> 32) % len(CITIES)]
        state = STATE_ABBREVIATIONS[(h >> 40) % len(STATE_ABBREVIATIONS)]
        zip_code = 10000 + (h >> 44) % 89999
        return f"{number} {street} {suffix}, {city}, {state} {zip_code}"
    state = STATE_ABBREVIATIONS[h % len(STATE_ABBREVIATIONS)]
    return f"{state}-{10000 + (h >> 16) % 89999}"
