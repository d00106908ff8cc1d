"""deidtext: train, evaluate, and apply a PII tagger that de-identifies
medical-style text reports."""

from .corpus import (
    AnnotatedDocument,
    Corpus,
    Document,
    ParseStats,
    PiiCategory,
    Span,
    Token,
    bio_to_spans,
    build_document,
    load_corpus,
    parse_annotated,
    save_corpus,
    serialize_annotated,
    spans_to_bio,
    split_sentences,
    tokenize,
)
from .evaluation import (
    BenchmarkReport,
    EvalCounts,
    EvalReport,
    SplitPlan,
    SplitRatio,
    compute_metrics,
    evaluate_model,
    make_splits,
    match_spans,
    render_table,
    run_benchmark,
)
from .redact import PseudonymMap, RedactionMode, redact
from .synth import SynthConfig, generate_corpus, write_corpus
from .tagger import (
    Model,
    TrainConfig,
    decode_greedy,
    extract_features,
    load_model,
    save_model,
    score,
    tag_document,
    train,
)

__version__ = "0.1.0"

__all__ = [
    "AnnotatedDocument",
    "BenchmarkReport",
    "Corpus",
    "Document",
    "EvalCounts",
    "EvalReport",
    "Model",
    "ParseStats",
    "PiiCategory",
    "PseudonymMap",
    "RedactionMode",
    "Span",
    "SplitPlan",
    "SplitRatio",
    "SynthConfig",
    "Token",
    "TrainConfig",
    "__version__",
    "bio_to_spans",
    "build_document",
    "compute_metrics",
    "decode_greedy",
    "evaluate_model",
    "extract_features",
    "generate_corpus",
    "load_corpus",
    "load_model",
    "make_splits",
    "match_spans",
    "parse_annotated",
    "redact",
    "render_table",
    "run_benchmark",
    "save_corpus",
    "save_model",
    "score",
    "serialize_annotated",
    "spans_to_bio",
    "split_sentences",
    "tag_document",
    "tokenize",
    "train",
    "write_corpus",
]
