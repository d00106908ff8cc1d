"""Corpus directory I/O.

An annotated corpus on disk is a directory of UTF-8 ``.txt`` files, one
document per file, file stem = document id, inline markers in the text.
CRLF line endings are normalized to LF at ingestion and counted in the
parse statistics.
"""

from __future__ import annotations

from pathlib import Path

from .markup import MarkupError, parse_annotated, serialize_annotated
from .types import AnnotatedDocument, Corpus, ParseStats


class CorpusError(ValueError):
    pass


def load_corpus(directory: str | Path) -> tuple[Corpus, ParseStats]:
    """Load every ``*.txt`` file (sorted by id) and parse its annotations."""
    root = Path(directory)
    if not root.is_dir():
        raise CorpusError(f"corpus directory not found: {root}")
    stats = ParseStats()
    docs: list[AnnotatedDocument] = []
    for path in sorted(root.glob("*.txt")):
        try:
            raw = path.read_text(encoding="utf-8")
        except UnicodeDecodeError as err:
            raise CorpusError(f"{path}: not valid UTF-8 ({err})") from err
        if "\r\n" in raw:
            raw = raw.replace("\r\n", "\n")
            stats.crlf_normalized += 1
        try:
            docs.append(parse_annotated(raw, doc_id=path.stem, stats=stats))
        except (MarkupError, ValueError) as err:
            raise CorpusError(f"{path}: {err}") from err
        stats.documents += 1
    if not docs:
        raise CorpusError(f"no .txt documents in {root}")
    return Corpus(tuple(docs)), stats


def save_corpus(corpus: Corpus, directory: str | Path) -> None:
    """Write each document as ``<id>.txt`` with inline markers."""
    root = Path(directory)
    root.mkdir(parents=True, exist_ok=True)
    for adoc in corpus:
        (root / f"{adoc.id}.txt").write_text(serialize_annotated(adoc), encoding="utf-8")
