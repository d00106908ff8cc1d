"""Document model, inline-annotation parsing, tokenization, and BIO tags."""

from .bio import LABEL_INDEX, LABELS, OUTSIDE, bio_to_spans, shift_span, spans_to_bio
from .markup import (
    EmptySpanError,
    MarkupError,
    MisalignedSpanError,
    NestedMarkerError,
    OverlappingSpansError,
    StrayEndError,
    UnclosedMarkerError,
    UnknownCategoryError,
    build_document,
    parse_annotated,
    serialize_annotated,
)
from .store import CorpusError, load_corpus, save_corpus
from .tokenizer import ABBREVIATIONS, split_sentences, tokenize
from .types import (
    CATEGORIES,
    AnnotatedDocument,
    Corpus,
    Document,
    ParseStats,
    PiiCategory,
    Span,
    Token,
)

__all__ = [
    "ABBREVIATIONS",
    "AnnotatedDocument",
    "CATEGORIES",
    "Corpus",
    "CorpusError",
    "Document",
    "EmptySpanError",
    "LABELS",
    "LABEL_INDEX",
    "MarkupError",
    "MisalignedSpanError",
    "NestedMarkerError",
    "OUTSIDE",
    "OverlappingSpansError",
    "ParseStats",
    "PiiCategory",
    "Span",
    "StrayEndError",
    "Token",
    "UnclosedMarkerError",
    "UnknownCategoryError",
    "bio_to_spans",
    "build_document",
    "load_corpus",
    "parse_annotated",
    "save_corpus",
    "serialize_annotated",
    "shift_span",
    "spans_to_bio",
    "split_sentences",
    "tokenize",
]
