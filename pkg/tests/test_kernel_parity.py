"""Compiled and pure-Python kernels must agree bit-for-bit."""

from array import array

import pytest

from deidtext import SynthConfig, TrainConfig, generate_corpus
from deidtext.tagger import available_kernels, model_bytes
from deidtext.tagger.perceptron import _train_impl

kernels = available_kernels()

needs_compiled = pytest.mark.skipif(
    "compiled" not in kernels, reason="compiled extension not built"
)


@needs_compiled
def test_both_kernels_train_byte_identical_models():
    corpus = generate_corpus(SynthConfig(doc_count=10, seed=13))
    config = TrainConfig(epochs=4, seed=13)
    pure_model, pure_stats = _train_impl(corpus, config, kernels["pure"])
    fast_model, fast_stats = _train_impl(corpus, config, kernels["compiled"])
    assert pure_stats.mistakes_per_epoch == fast_stats.mistakes_per_epoch
    assert model_bytes(pure_model) == model_bytes(fast_model)


@needs_compiled
def test_both_kernels_decode_identically():
    corpus = generate_corpus(SynthConfig(doc_count=6, seed=21))
    model, _ = _train_impl(corpus, TrainConfig(epochs=3, seed=21), kernels["pure"])
    scorer = model.scorer()
    n = len(scorer.labels)
    for adoc in corpus:
        for s, e in adoc.doc.sentences:
            words = [t.text for t in adoc.doc.tokens[s:e]]
            offsets = array("i", [0])
            fids = array("i")
            for i in range(len(words)):
                from deidtext.tagger.features import static_features

                for feat in static_features(words, i):
                    fids.append(scorer.feat_index.get(feat, -1))
                offsets.append(len(fids))
            out_pure = array("i", bytes(4 * len(words)))
            out_fast = array("i", bytes(4 * len(words)))
            kernels["pure"].decode(
                scorer.w, n, offsets, fids, scorer.prev_fid, scorer.legal, out_pure
            )
            kernels["compiled"].decode(
                scorer.w, n, offsets, fids, scorer.prev_fid, scorer.legal, out_fast
            )
            assert list(out_pure) == list(out_fast)


@needs_compiled
def test_averaging_identical_across_kernels():
    w = array("d", [2.0, -1.0, 0.0, 3.0])
    acc = array("d", [10.0, 0.0, 0.0, -6.0])
    stamp = array("q", [3, 0, 0, 5])
    t_total = 7
    a = kernels["pure"].averaged(w, acc, stamp, t_total)
    b = kernels["compiled"].averaged(w, acc, stamp, t_total)
    assert list(a) == list(b)
