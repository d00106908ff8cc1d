"""Exact-span matching, precision/recall/f-measure, splits, and the
trial benchmark.

A predicted span counts as correct only when its character boundaries and
category both equal a gold span (no partial credit). Headline metrics are
micro-averaged from pooled counts; per-category metrics are reported
alongside because performance differs sharply by category.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from ._jsonutil import dumps as canonical_dumps
from ._parallel import map_ordered
from ._rng import MASK64, SplitMix64, derive_seed
from .corpus.types import AnnotatedDocument, Corpus, PiiCategory, Span
from .tagger.model import Model
from .tagger.perceptron import TrainConfig, tag_document, train


class DocumentMismatchError(ValueError):
    pass


class DegenerateSplitError(ValueError):
    pass


@dataclass(frozen=True, slots=True)
class CategoryCounts:
    tp: int = 0
    fp: int = 0
    fn: int = 0

    def __add__(self, other: "CategoryCounts") -> "CategoryCounts":
        return CategoryCounts(self.tp + other.tp, self.fp + other.fp, self.fn + other.fn)


@dataclass(frozen=True)
class EvalCounts:
    """Per-category and pooled tp/fp/fn. Overall counts are the sums."""

    per_category: dict[str, CategoryCounts]

    @classmethod
    def empty(cls) -> "EvalCounts":
        return cls({c.value: CategoryCounts() for c in PiiCategory})

    @property
    def overall(self) -> CategoryCounts:
        total = CategoryCounts()
        for counts in self.per_category.values():
            total = total + counts
        return total

    def __add__(self, other: "EvalCounts") -> "EvalCounts":
        keys = set(self.per_category) | set(other.per_category)
        return EvalCounts(
            {
                k: self.per_category.get(k, CategoryCounts())
                + other.per_category.get(k, CategoryCounts())
                for k in keys
            }
        )

    def to_json_dict(self) -> dict:
        overall = self.overall
        return {
            "overall": {"tp": overall.tp, "fp": overall.fp, "fn": overall.fn},
            "per_category": {
                cat: {"tp": c.tp, "fp": c.fp, "fn": c.fn}
                for cat, c in sorted(self.per_category.items())
            },
        }


@dataclass(frozen=True, slots=True)
class Prf:
    precision: float
    recall: float
    f_measure: float

    def to_json_dict(self) -> dict:
        return {"p": self.precision, "r": self.recall, "f": self.f_measure}


@dataclass(frozen=True)
class EvalReport:
    counts: EvalCounts
    overall: Prf
    per_category: dict[str, Prf]

    @property
    def precision(self) -> float:
        return self.overall.precision

    @property
    def recall(self) -> float:
        return self.overall.recall

    @property
    def f_measure(self) -> float:
        return self.overall.f_measure

    def to_json_dict(self) -> dict:
        return {
            "counts": self.counts.to_json_dict(),
            "precision": self.overall.precision,
            "recall": self.overall.recall,
            "f_measure": self.overall.f_measure,
            "per_category": {
                cat: {
                    "precision": prf.precision,
                    "recall": prf.recall,
                    "f_measure": prf.f_measure,
                }
                for cat, prf in sorted(self.per_category.items())
            },
        }


def _prf(c: CategoryCounts) -> Prf:
    # conventions for empty denominators: nothing to find and nothing
    # predicted is vacuous perfection; otherwise an empty side scores 0
    if c.tp == 0 and c.fp == 0 and c.fn == 0:
        return Prf(1.0, 1.0, 1.0)
    p = c.tp / (c.tp + c.fp) if (c.tp + c.fp) else 0.0
    r = c.tp / (c.tp + c.fn) if (c.tp + c.fn) else 0.0
    f = 0.0 if (p + r) == 0.0 else 2.0 * p * r / (p + r)
    return Prf(p, r, f)


def compute_metrics(counts: EvalCounts) -> EvalReport:
    """Precision = tp/(tp+fp), recall = tp/(tp+fn), f = 2pr/(p+r)."""
    return EvalReport(
        counts=counts,
        overall=_prf(counts.overall),
        per_category={cat: _prf(c) for cat, c in counts.per_category.items()},
    )


def match_spans(
    gold: Sequence[Span],
    predicted: Sequence[Span],
    text_length: int | None = None,
) -> EvalCounts:
    """Exact-match counting: tp iff (char_start, char_end, category) agree."""
    if text_length is not None:
        for span in list(gold) + list(predicted):
            if span.char_end > text_length:
                raise DocumentMismatchError(
                    f"span [{span.char_start},{span.char_end}) exceeds document "
                    f"length {text_length}"
                )
    gold_keys = {(s.char_start, s.char_end, s.category) for s in gold}
    pred_keys = {(s.char_start, s.char_end, s.category) for s in predicted}
    counts = {c.value: CategoryCounts() for c in PiiCategory}
    for key in gold_keys & pred_keys:
        cat = key[2].value
        counts[cat] = counts[cat] + CategoryCounts(tp=1)
    for key in pred_keys - gold_keys:
        cat = key[2].value
        counts[cat] = counts[cat] + CategoryCounts(fp=1)
    for key in gold_keys - pred_keys:
        cat = key[2].value
        counts[cat] = counts[cat] + CategoryCounts(fn=1)
    return EvalCounts(counts)


def evaluate_documents(gold: AnnotatedDocument, predicted: AnnotatedDocument) -> EvalCounts:
    if gold.doc.text != predicted.doc.text:
        raise DocumentMismatchError(
            f"document {gold.id!r}: gold and predicted texts differ"
        )
    return match_spans(gold.spans, predicted.spans, text_length=len(gold.doc.text))


def evaluate_model(model: Model, corpus: Corpus | Iterable[AnnotatedDocument]) -> EvalReport:
    """Tag each document's text and score predictions against its gold spans."""
    docs = list(corpus)
    predicted = map_ordered(lambda adoc: tag_document(model, adoc.doc), docs)
    counts = EvalCounts.empty()
    for gold, pred in zip(docs, predicted):
        counts = counts + evaluate_documents(gold, pred)
    return compute_metrics(counts)


@dataclass(frozen=True, slots=True)
class SplitRatio:
    train_pct: int
    test_pct: int

    def __post_init__(self) -> None:
        if self.train_pct + self.test_pct != 100 or self.train_pct <= 0 or self.test_pct <= 0:
            raise ValueError(f"split percentages must be positive and sum to 100: {self}")

    @classmethod
    def parse(cls, text: str) -> "SplitRatio":
        """Accepts "70:30" or "70-30"."""
        sep = ":" if ":" in text else "-"
        try:
            a, b = (int(part) for part in text.split(sep))
        except ValueError:
            raise ValueError(f"bad split ratio {text!r} (expected e.g. 70:30)") from None
        return cls(a, b)

    def __str__(self) -> str:
        return f"{self.train_pct}-{self.test_pct}"

    def train_size(self, n: int) -> int:
        # half-up rounding of n * train_pct / 100, in exact integers
        return (n * self.train_pct + 50) // 100


DEFAULT_RATIOS = (SplitRatio(70, 30), SplitRatio(66, 34), SplitRatio(50, 50))


@dataclass(frozen=True)
class SplitPlan:
    ratio: SplitRatio
    trial_index: int
    seed: int
    train_ids: tuple[str, ...]
    test_ids: tuple[str, ...]


def make_splits(
    corpus: Corpus, ratio: SplitRatio, trials: int, seed: int
) -> list[SplitPlan]:
    """Document-level random splits, one plan per trial.

    Trial t shuffles the ids with a stream seeded seed XOR t*golden-ratio
    and takes the first round(N * train_pct / 100) as the training set.
    """
    if len(corpus) < 2:
        raise DegenerateSplitError("need at least 2 documents to split")
    if trials < 1:
        raise ValueError("trials must be >= 1")
    ids = list(corpus.ids())
    n_train = ratio.train_size(len(ids))
    if n_train == 0 or n_train == len(ids):
        raise DegenerateSplitError(
            f"ratio {ratio} leaves an empty side for {len(ids)} documents"
        )
    plans = []
    for trial in range(trials):
        trial_seed = derive_seed(seed, trial)
        shuffled = list(ids)
        SplitMix64(trial_seed).shuffle(shuffled)
        plans.append(
            SplitPlan(
                ratio=ratio,
                trial_index=trial,
                seed=trial_seed,
                train_ids=tuple(shuffled[:n_train]),
                test_ids=tuple(shuffled[n_train:]),
            )
        )
    return plans


@dataclass(frozen=True)
class BenchmarkRun:
    ratio: SplitRatio
    trial: int
    train_eval: EvalReport
    test_eval: EvalReport


@dataclass(frozen=True)
class BenchmarkReport:
    ratios: tuple[SplitRatio, ...]
    trials: int
    seed: int
    epochs: int
    runs: tuple[BenchmarkRun, ...]
    averages: dict[str, dict[str, Prf]] = field(default_factory=dict)

    def to_json_dict(self) -> dict:
        return {
            "config": {
                "ratios": [str(r) for r in self.ratios],
                "trials": self.trials,
                "seed": self.seed,
                "epochs": self.epochs,
            },
            "runs": [
                {
                    "ratio": str(run.ratio),
                    "trial": run.trial,
                    "train_eval": run.train_eval.to_json_dict(),
                    "test_eval": run.test_eval.to_json_dict(),
                }
                for run in self.runs
            ],
            "averages": {
                ratio: {
                    "train": prfs["train"].to_json_dict(),
                    "test": prfs["test"].to_json_dict(),
                }
                for ratio, prfs in self.averages.items()
            },
        }

    def to_json(self) -> str:
        return canonical_dumps(self.to_json_dict())


def run_benchmark(
    corpus: Corpus,
    ratios: Sequence[SplitRatio] = DEFAULT_RATIOS,
    trials: int = 5,
    seed: int = 0,
    epochs: int = 10,
) -> BenchmarkReport:
    """Train and evaluate one model per (ratio, trial).

    Each run scores the model on its own training documents ("Train
    Data") and on the held-out documents ("Test Data"); per-ratio averages
    are arithmetic means over the trials.
    """
    if not ratios:
        raise ValueError("at least one split ratio is required")
    if not (0 <= seed <= MASK64):
        raise ValueError("seed must be an unsigned 64-bit integer")
    runs: list[BenchmarkRun] = []
    train_config = TrainConfig(epochs=epochs, seed=seed)
    for ratio in ratios:
        for plan in make_splits(corpus, ratio, trials, seed):
            try:
                model = train(corpus.subset(plan.train_ids), train_config)
                train_eval = evaluate_model(model, corpus.subset(plan.train_ids))
                test_eval = evaluate_model(model, corpus.subset(plan.test_ids))
            except Exception as err:
                raise type(err)(
                    f"benchmark run (ratio {ratio}, trial {plan.trial_index}) failed: {err}"
                ) from err
            runs.append(BenchmarkRun(ratio, plan.trial_index, train_eval, test_eval))

    averages: dict[str, dict[str, Prf]] = {}
    for ratio in ratios:
        ratio_runs = [r for r in runs if r.ratio == ratio]
        averages[str(ratio)] = {
            "train": _mean_prf([r.train_eval.overall for r in ratio_runs]),
            "test": _mean_prf([r.test_eval.overall for r in ratio_runs]),
        }
    return BenchmarkReport(
        ratios=tuple(ratios),
        trials=trials,
        seed=seed,
        epochs=epochs,
        runs=tuple(runs),
        averages=averages,
    )


def _mean_prf(values: Sequence[Prf]) -> Prf:
    n = len(values)
    return Prf(
        sum(v.precision for v in values) / n,
        sum(v.recall for v in values) / n,
        sum(v.f_measure for v in values) / n,
    )


_METRIC_FIELDS = ("precision", "recall", "f_measure")


def render_table(report: BenchmarkReport, metric: str) -> str:
    """One row per ratio with Train Data / Test Data columns, 4 decimals."""
    if metric not in _METRIC_FIELDS:
        raise ValueError(f"metric must be one of {_METRIC_FIELDS}, not {metric!r}")
    lines = [f"{'Data Split':<12}{'Train Data':>12}{'Test Data':>12}"]
    for ratio in report.ratios:
        entry = report.averages[str(ratio)]
        train_v = getattr(entry["train"], metric)
        test_v = getattr(entry["test"], metric)
        lines.append(f"{str(ratio):<12}{train_v:>12.4f}{test_v:>12.4f}")
    return "\n".join(lines)


def render_table_json(report: BenchmarkReport, metric: str) -> str:
    if metric not in _METRIC_FIELDS:
        raise ValueError(f"metric must be one of {_METRIC_FIELDS}, not {metric!r}")
    rows = [
        {
            "split": str(ratio),
            "train": getattr(report.averages[str(ratio)]["train"], metric),
            "test": getattr(report.averages[str(ratio)]["test"], metric),
        }
        for ratio in report.ratios
    ]
    return canonical_dumps({"metric": metric, "rows": rows})


def print_tables(report: BenchmarkReport, file=None) -> None:
    out = file if file is not None else sys.stdout
    captions = {
        "precision": "Average model precision",
        "recall": "Average model recall",
        "f_measure": "Average model f-measure",
    }
    for metric in _METRIC_FIELDS:
        print(captions[metric], file=out)
        print(render_table(report, metric), file=out)
        print(file=out)
