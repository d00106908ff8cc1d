"""Command-line interface: generate, train, tag, evaluate, benchmark, redact.

Exit statuses: 0 success, 1 input/format error, 2 usage error, 3 internal
error. All randomness flows from --seed, so every subcommand is
deterministic given its flags.
"""

from __future__ import annotations

import argparse
import sys
import time
from pathlib import Path

from ._jsonutil import dumps as canonical_dumps
from ._parallel import ThreadConfigError
from .corpus.markup import MarkupError, build_document, serialize_annotated
from .corpus.store import CorpusError, load_corpus
from .evaluation import (
    DegenerateSplitError,
    SplitRatio,
    evaluate_model,
    print_tables,
    run_benchmark,
)
from .redact import RedactionMode, redact
from .synth import SynthConfig, write_corpus
from .tagger.model import ModelFileError, load_model, save_model
from .tagger.perceptron import EmptyCorpusError, TrainConfig, tag_document, train

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_USAGE = 2
EXIT_INTERNAL = 3

_INPUT_ERRORS = (
    CorpusError,
    MarkupError,
    ModelFileError,
    EmptyCorpusError,
    DegenerateSplitError,
    ThreadConfigError,
    FileNotFoundError,
    IsADirectoryError,
    NotADirectoryError,
    PermissionError,
)


def _seed_type(value: str) -> int:
    seed = int(value)
    if not (0 <= seed < 2**64):
        raise argparse.ArgumentTypeError("seed must fit in an unsigned 64-bit integer")
    return seed


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="deidtext",
        description="Train, evaluate, and apply a PII tagger for text de-identification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("synth", help="generate a synthetic annotated corpus")
    p.add_argument("--docs", type=int, required=True, help="number of documents (>= 2)")
    p.add_argument("--seed", type=_seed_type, default=0)
    p.add_argument("--out", required=True, help="output corpus directory")
    p.add_argument("--variants", type=int, default=3, help="distinct report templates")
    p.set_defaults(func=cmd_synth)

    p = sub.add_parser("train", help="train a tagger on an annotated corpus")
    p.add_argument("--corpus", required=True)
    p.add_argument("--out", required=True, help="model file path")
    p.add_argument("--epochs", type=int, default=10)
    p.add_argument("--seed", type=_seed_type, default=0)
    p.add_argument("--stats", help="also write the parse-statistics JSON record here")
    p.set_defaults(func=cmd_train)

    p = sub.add_parser("tag", help="annotate a plain-text report with predicted PII")
    p.add_argument("--model", required=True)
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_tag)

    p = sub.add_parser("eval", help="score a model against a gold corpus")
    p.add_argument("--model")
    p.add_argument("--corpus", required=True)
    p.add_argument("--format", choices=("table", "json"), default="table")
    p.add_argument("--identity-tagger", action="store_true", help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("benchmark", help="run the split/trial benchmark")
    p.add_argument("--corpus", required=True)
    p.add_argument("--splits", default="70:30,66:34,50:50", help="comma-separated A:B percentages")
    p.add_argument("--trials", type=int, default=5)
    p.add_argument("--seed", type=_seed_type, default=0)
    p.add_argument("--epochs", type=int, default=10)
    p.add_argument("--report", help="also write the full JSON report to this path")
    p.set_defaults(func=cmd_benchmark)

    p = sub.add_parser("redact", help="tag a report and remove or encode its PII")
    p.add_argument("--model", required=True)
    p.add_argument("--mode", required=True, choices=[m.value for m in RedactionMode])
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--seed", type=_seed_type, default=0)
    p.add_argument("--map", dest="map_path", help="pseudonym map output (pseudonym mode only)")
    p.set_defaults(func=cmd_redact)

    return parser


def cmd_synth(args, parser: argparse.ArgumentParser) -> int:
    if args.docs < 2:
        parser.error("--docs must be >= 2 (a 1-document corpus cannot be split)")
    if args.variants < 1:
        parser.error("--variants must be >= 1")
    config = SynthConfig(doc_count=args.docs, seed=args.seed, structural_variants=args.variants)
    manifest = write_corpus(config, args.out)
    print(f"wrote {manifest['doc_count']} documents to {args.out}")
    print(f"seed: {manifest['seed']}  variants: {manifest['structural_variants']}")
    counts = "  ".join(f"{cat}: {n}" for cat, n in sorted(manifest["span_counts"].items()))
    print(f"spans: {manifest['total_spans']}  ({counts})")
    return EXIT_OK


def cmd_train(args, parser: argparse.ArgumentParser) -> int:
    if args.epochs < 1:
        parser.error("--epochs must be >= 1")
    corpus, stats = load_corpus(args.corpus)
    started = time.perf_counter()
    model = train(corpus, TrainConfig(epochs=args.epochs, seed=args.seed))
    elapsed = time.perf_counter() - started
    save_model(model, args.out)
    tokens = sum(len(adoc.doc.tokens) for adoc in corpus)
    print(f"documents: {len(corpus)}  tokens: {tokens}  spans: {stats.total_spans}")
    if stats.snapped_spans:
        print(f"note: {stats.snapped_spans} spans were snapped to token boundaries")
    if stats.crlf_normalized:
        print(f"note: {stats.crlf_normalized} documents had CRLF line endings normalized")
    print(f"trained {args.epochs} epochs in {elapsed:.2f} s; model written to {args.out}")
    if args.stats:
        Path(args.stats).write_text(
            canonical_dumps(stats.to_json_dict()) + "\n", encoding="utf-8"
        )
        print(f"parse statistics written to {args.stats}")
    return EXIT_OK


def cmd_tag(args, parser: argparse.ArgumentParser) -> int:
    model = load_model(args.model)
    text = _read_text(args.infile)
    started = time.perf_counter()
    doc = build_document(Path(args.infile).stem, text)
    tagged = tag_document(model, doc)
    elapsed = time.perf_counter() - started
    Path(args.out).write_text(serialize_annotated(tagged), encoding="utf-8")
    print(f"tagged {len(tagged.spans)} spans in {elapsed:.3f} s; output written to {args.out}")
    return EXIT_OK


def cmd_eval(args, parser: argparse.ArgumentParser) -> int:
    if not args.identity_tagger and not args.model:
        parser.error("--model is required")
    corpus, _stats = load_corpus(args.corpus)
    if args.identity_tagger:
        from .evaluation import EvalCounts, compute_metrics, evaluate_documents

        counts = EvalCounts.empty()
        for adoc in corpus:
            counts = counts + evaluate_documents(adoc, adoc)
        report = compute_metrics(counts)
    else:
        model = load_model(args.model)
        report = evaluate_model(model, corpus)
    if args.format == "json":
        print(canonical_dumps(report.to_json_dict()))
    else:
        print(f"{'category':<12}{'precision':>12}{'recall':>12}{'f-measure':>12}")
        for cat, prf in sorted(report.per_category.items()):
            print(f"{cat:<12}{prf.precision:>12.4f}{prf.recall:>12.4f}{prf.f_measure:>12.4f}")
        print(
            f"{'overall':<12}{report.precision:>12.4f}{report.recall:>12.4f}"
            f"{report.f_measure:>12.4f}"
        )
    return EXIT_OK


def cmd_benchmark(args, parser: argparse.ArgumentParser) -> int:
    try:
        ratios = tuple(SplitRatio.parse(part) for part in args.splits.split(",") if part)
    except ValueError as err:
        parser.error(str(err))
    if not ratios:
        parser.error("--splits must name at least one ratio")
    if args.trials < 1:
        parser.error("--trials must be >= 1")
    if args.epochs < 1:
        parser.error("--epochs must be >= 1")
    corpus, _stats = load_corpus(args.corpus)
    report = run_benchmark(
        corpus, ratios=ratios, trials=args.trials, seed=args.seed, epochs=args.epochs
    )
    print_tables(report)
    if args.report:
        Path(args.report).write_text(report.to_json() + "\n", encoding="utf-8")
        print(f"report written to {args.report}")
    return EXIT_OK


def cmd_redact(args, parser: argparse.ArgumentParser) -> int:
    mode = RedactionMode.parse(args.mode)
    if args.map_path and mode is not RedactionMode.PSEUDONYM:
        parser.error("--map is only valid with --mode pseudonym")
    model = load_model(args.model)
    text = _read_text(args.infile)
    doc = build_document(Path(args.infile).stem, text)
    tagged = tag_document(model, doc)
    result = redact(tagged, mode, seed=args.seed)
    Path(args.out).write_text(result.text, encoding="utf-8")
    print(f"redacted {len(tagged.spans)} spans ({mode.value}); output written to {args.out}")
    if args.map_path:
        assert result.pseudonyms is not None
        Path(args.map_path).write_text(result.pseudonyms.to_json() + "\n", encoding="utf-8")
        print(f"pseudonym map written to {args.map_path}")
    return EXIT_OK


def _read_text(path: str) -> str:
    raw = Path(path).read_text(encoding="utf-8")
    return raw.replace("\r\n", "\n")


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args, parser)
    except SystemExit as exc:  # parser.error inside a command
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    except _INPUT_ERRORS as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_INPUT
    except Exception as err:  # pragma: no cover - defensive
        print(f"internal error: {err!r}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
