"""Averaged-perceptron training and greedy constrained decoding.

Training is the classic online update: decode each sentence with the
current weights, and on a mistake add the gold feature vector and subtract
the predicted one (learning rate 1, no regularization). The returned
model holds the average of the weight vector after every sentence visit,
maintained with the timestamp trick. Everything is deterministic given
(corpus, config): epoch shuffles come from a SplitMix64 stream keyed by
seed XOR epoch index, so retraining reproduces byte-identical models.
"""

from __future__ import annotations

from array import array
from dataclasses import dataclass, field
from typing import Sequence

from .._rng import MASK64, SplitMix64
from ..corpus.bio import LABEL_INDEX, LABELS, bio_to_spans, shift_span, spans_to_bio
from ..corpus.types import AnnotatedDocument, Corpus, Document
from .backend import active_kernel
from .features import BOUNDARY_TAG, TEMPLATE_VERSION, static_features
from .model import Model, TrainMeta, build_legal_table


class EmptyCorpusError(ValueError):
    pass


@dataclass(frozen=True, slots=True)
class TrainConfig:
    epochs: int = 10
    seed: int = 0
    shuffle: bool = True

    def __post_init__(self) -> None:
        if self.epochs < 1:
            raise ValueError("epochs must be >= 1")
        if not (0 <= self.seed <= MASK64):
            raise ValueError("seed must be an unsigned 64-bit integer")


@dataclass(slots=True)
class TrainStats:
    """Per-epoch mistake counts (sentences whose decode differed from gold)."""

    mistakes_per_epoch: list[int] = field(default_factory=list)
    sentence_count: int = 0
    feature_count: int = 0

    @property
    def converged_epoch(self) -> int | None:
        """First epoch index with zero mistakes, if any."""
        for i, m in enumerate(self.mistakes_per_epoch):
            if m == 0:
                return i
        return None


def score(model: Model, features: Sequence[str], label: str) -> float:
    """Sum of the model's weights for (feature, label); missing entries are 0."""
    if label not in model.labels:
        raise ValueError(f"unknown label {label!r}")
    weights = model.weights
    total = 0.0
    for feat in features:
        total += weights.get((feat, label), 0.0)
    return total


def decode_greedy(model: Model, words: Sequence[str]) -> list[str]:
    """Tag one sentence left to right.

    At each position the highest-scoring legal tag wins (I-X is legal only
    after B-X or I-X); ties keep the earliest label in ``model.labels``.
    """
    return model.scorer().decode(list(words))


def tag_document(model: Model, doc: Document) -> AnnotatedDocument:
    """Predict spans for every sentence of ``doc``; the text is untouched."""
    scorer = model.scorer()
    spans = []
    for s, e in doc.sentences:
        sent_tokens = doc.tokens[s:e]
        tags = scorer.decode([t.text for t in sent_tokens])
        for span in bio_to_spans(tags, sent_tokens):
            spans.append(shift_span(span, s))
    return AnnotatedDocument(doc, tuple(spans))


def train(corpus: Corpus, config: TrainConfig = TrainConfig()) -> Model:
    model, _stats = train_with_stats(corpus, config)
    return model


def train_with_stats(corpus: Corpus, config: TrainConfig = TrainConfig()) -> tuple[Model, TrainStats]:
    return _train_impl(corpus, config, active_kernel())


def _train_impl(corpus: Corpus, config: TrainConfig, kernel) -> tuple[Model, TrainStats]:
    if not corpus.docs:
        raise EmptyCorpusError("cannot train on an empty corpus")

    n_labels = len(LABELS)
    feat_index: dict[str, int] = {}

    def intern(feature: str) -> int:
        fid = feat_index.get(feature)
        if fid is None:
            fid = len(feat_index)
            feat_index[feature] = fid
        return fid

    # prev_tag features first so the table below is complete up front
    prev_values = list(LABELS) + [BOUNDARY_TAG]
    prev_fid = array("i", (intern(f"prev_tag={v}") for v in prev_values))

    sentences: list[tuple[array, array, array]] = []
    max_len = 0
    for adoc in corpus:
        doc = adoc.doc
        for s, e in doc.sentences:
            sent_tokens = doc.tokens[s:e]
            words = [t.text for t in sent_tokens]
            gold_tags = spans_to_bio(sent_tokens, adoc.spans)
            offsets = array("i", [0])
            fids = array("i")
            for i in range(len(words)):
                for feat in static_features(words, i):
                    fids.append(intern(feat))
                offsets.append(len(fids))
            gold = array("i", (LABEL_INDEX[t] for t in gold_tags))
            sentences.append((offsets, fids, gold))
            max_len = max(max_len, len(words))
    if not sentences:
        raise EmptyCorpusError("corpus has no sentences")

    size = len(feat_index) * n_labels
    w = array("d", bytes(8 * size))
    acc = array("d", bytes(8 * size))
    stamp = array("q", bytes(8 * size))
    scratch = array("i", bytes(4 * max_len))
    legal = build_legal_table(LABELS)

    stats = TrainStats(sentence_count=len(sentences), feature_count=len(feat_index))
    t = 0
    for epoch in range(config.epochs):
        indices = list(range(len(sentences)))
        if config.shuffle:
            SplitMix64((config.seed ^ epoch) & MASK64).shuffle(indices)
        order = array("i", indices)
        t, mistakes = kernel.train_pass(
            w, acc, stamp, n_labels, sentences, prev_fid, legal, order, t, scratch
        )
        stats.mistakes_per_epoch.append(mistakes)

    avg = kernel.averaged(w, acc, stamp, t)
    weights: dict[tuple[str, str], float] = {}
    for feature, fid in feat_index.items():
        base = fid * n_labels
        for j in range(n_labels):
            value = avg[base + j]
            if value != 0.0:
                weights[(feature, LABELS[j])] = value

    model = Model(
        LABELS,
        weights,
        template_version=TEMPLATE_VERSION,
        train_meta=TrainMeta(epochs=config.epochs, seed=config.seed, doc_count=len(corpus)),
    )
    return model, stats
