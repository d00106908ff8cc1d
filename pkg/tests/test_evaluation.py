"""Span matching and the Eq.-style metrics."""

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from deidtext import compute_metrics, match_spans
from deidtext.corpus import PiiCategory, Span
from deidtext.evaluation import (
    CategoryCounts,
    DocumentMismatchError,
    EvalCounts,
    evaluate_documents,
)


def span(cat, start, end):
    return Span(PiiCategory(cat), start, end, start, end)


def counts_of(**kwargs):
    per = {c.value: CategoryCounts() for c in PiiCategory}
    for cat, (tp, fp, fn) in kwargs.items():
        per[cat] = CategoryCounts(tp, fp, fn)
    return EvalCounts(per)


def test_identical_spans_are_true_positives():
    gold = [span("date", 28, 36)]
    counts = match_spans(gold, list(gold))
    assert (counts.overall.tp, counts.overall.fp, counts.overall.fn) == (1, 0, 0)


def test_boundary_mismatch_is_double_error():
    gold = [span("name", 8, 24)]
    pred = [span("name", 8, 22)]
    counts = match_spans(gold, pred)
    assert (counts.overall.tp, counts.overall.fp, counts.overall.fn) == (0, 1, 1)


def test_category_mismatch_is_double_error():
    gold = [span("name", 8, 24)]
    pred = [span("place", 8, 24)]
    counts = match_spans(gold, pred)
    assert counts.overall.tp == 0
    assert counts.per_category["place"].fp == 1
    assert counts.per_category["name"].fn == 1


def test_partial_prediction():
    gold = [span("name", 0, 4), span("date", 10, 14)]
    pred = [span("date", 10, 14)]
    counts = match_spans(gold, pred)
    assert (counts.overall.tp, counts.overall.fp, counts.overall.fn) == (1, 0, 1)


def test_document_length_check():
    with pytest.raises(DocumentMismatchError):
        match_spans([span("date", 0, 50)], [], text_length=10)


def test_per_category_partitions_totals():
    gold = [span("name", 0, 4), span("date", 10, 14), span("place", 20, 24)]
    pred = [span("name", 0, 4), span("date", 10, 13), span("number", 30, 34)]
    counts = match_spans(gold, pred)
    overall = counts.overall
    assert overall.tp == sum(c.tp for c in counts.per_category.values())
    assert overall.fp == sum(c.fp for c in counts.per_category.values())
    assert overall.fn == sum(c.fn for c in counts.per_category.values())
    assert overall.tp + overall.fp == len(pred)
    assert overall.tp + overall.fn == len(gold)


def brute_force_match(gold, pred):
    """O(|A| x |B|) oracle: literal set-intersection by pairwise comparison."""
    tp = 0
    used = set()
    for g in gold:
        for j, p in enumerate(pred):
            if j in used:
                continue
            if (
                g.char_start == p.char_start
                and g.char_end == p.char_end
                and g.category is p.category
            ):
                tp += 1
                used.add(j)
                break
    return tp, len(pred) - tp, len(gold) - tp


def random_span_set(rng, max_spans=8):
    spans = []
    cursor = 0
    for _ in range(rng.below(max_spans + 1)):
        cursor += rng.below(5)
        start = cursor
        end = start + 1 + rng.below(4)
        cursor = end
        cat = rng.choice(list(PiiCategory))
        spans.append(Span(cat, start, end, start, end))
    return spans


def test_match_spans_agrees_with_brute_force_on_random_pairs():
    from deidtext._rng import SplitMix64

    rng = SplitMix64(99)
    for _ in range(300):
        gold = random_span_set(rng)
        pred = random_span_set(rng)
        counts = match_spans(gold, pred)
        overall = counts.overall
        assert (overall.tp, overall.fp, overall.fn) == brute_force_match(gold, pred)


def test_metrics_worked_example():
    report = compute_metrics(counts_of(name=(9, 1, 2)))
    # hand arithmetic: p = 9/10, r = 9/11, f = 2pr/(p+r) = 6/7
    assert abs(report.precision - 0.9) < 1e-12
    assert abs(report.recall - Fraction(9, 11)) < 1e-12
    assert abs(report.f_measure - Fraction(6, 7)) < 1e-12


def test_vacuous_perfection_convention():
    report = compute_metrics(counts_of())
    assert (report.precision, report.recall, report.f_measure) == (1.0, 1.0, 1.0)


def test_zero_denominator_conventions():
    report = compute_metrics(counts_of(name=(0, 0, 5)))
    assert (report.precision, report.recall, report.f_measure) == (0.0, 0.0, 0.0)
    report = compute_metrics(counts_of(name=(0, 5, 0)))
    assert (report.precision, report.recall, report.f_measure) == (0.0, 0.0, 0.0)


@given(
    tp=st.integers(min_value=0, max_value=50),
    fp=st.integers(min_value=0, max_value=50),
    fn=st.integers(min_value=0, max_value=50),
)
def test_metric_bounds_and_identities(tp, fp, fn):
    report = compute_metrics(counts_of(name=(tp, fp, fn)))
    p, r, f = report.precision, report.recall, report.f_measure
    assert 0.0 <= p <= 1.0 and 0.0 <= r <= 1.0 and 0.0 <= f <= 1.0
    assert f <= max(p, r) + 1e-12
    if p == r:
        assert abs(f - p) < 1e-12
    if (tp, fp, fn) != (0, 0, 0):
        assert (f == 0.0) == (p == 0.0 or r == 0.0)


def test_per_category_reported_alongside_overall():
    report = compute_metrics(counts_of(name=(1, 0, 0), date=(0, 1, 1)))
    assert report.per_category["name"].f_measure == 1.0
    assert report.per_category["date"].f_measure == 0.0
    assert set(report.per_category) == {c.value for c in PiiCategory}


def test_evaluate_documents_requires_same_text(corpus8):
    a, b = corpus8.docs[0], corpus8.docs[1]
    with pytest.raises(DocumentMismatchError):
        evaluate_documents(a, b)
    counts = evaluate_documents(a, a)
    assert counts.overall.fp == 0 and counts.overall.fn == 0


def test_thread_cap_does_not_change_results(corpus8, model50, monkeypatch):
    from deidtext.evaluation import evaluate_model

    monkeypatch.setenv("DEID_THREADS", "1")
    serial = evaluate_model(model50, corpus8)
    monkeypatch.setenv("DEID_THREADS", "4")
    threaded = evaluate_model(model50, corpus8)
    assert serial.to_json_dict() == threaded.to_json_dict()


def test_bad_thread_setting_rejected(monkeypatch):
    from deidtext._parallel import ThreadConfigError, thread_count

    monkeypatch.setenv("DEID_THREADS", "many")
    with pytest.raises(ThreadConfigError):
        thread_count()
    monkeypatch.setenv("DEID_THREADS", "0")
    with pytest.raises(ThreadConfigError):
        thread_count()
