"""Trained model: label set, sparse weights, canonical file format.

The file is one line of canonical JSON (sorted keys, 17-significant-digit
floats, weight entries sorted by (feature, label)) followed by one line
``#sha256:<hex>`` over the JSON bytes. Equal models serialize to
byte-identical files.
"""

from __future__ import annotations

import hashlib
import json
from array import array
from dataclasses import dataclass
from pathlib import Path
from types import MappingProxyType
from typing import Mapping, Sequence

from .._jsonutil import dumps as canonical_dumps
from ..corpus.bio import LABELS, OUTSIDE
from .backend import active_kernel
from .features import BOUNDARY_TAG, TEMPLATE_VERSION, static_features

MODEL_FORMAT_VERSION = 1


class ModelFileError(ValueError):
    pass


class VersionMismatchError(ModelFileError):
    pass


class CorruptFileError(ModelFileError):
    pass


@dataclass(frozen=True, slots=True)
class TrainMeta:
    epochs: int
    seed: int
    doc_count: int


class Model:
    """Immutable trained model.

    ``weights`` maps (feature string, label) to a real weight; missing
    entries are zero. The decoding tables derived from the weights are
    built lazily and cached, so one model can tag many documents cheaply.
    """

    def __init__(
        self,
        labels: Sequence[str],
        weights: Mapping[tuple[str, str], float],
        template_version: str = TEMPLATE_VERSION,
        train_meta: TrainMeta = TrainMeta(0, 0, 0),
    ) -> None:
        self.labels: tuple[str, ...] = tuple(labels)
        if len(set(self.labels)) != len(self.labels):
            raise ValueError("duplicate labels")
        label_set = set(self.labels)
        for feature, label in weights:
            if label not in label_set:
                raise ValueError(f"weight for unknown label {label!r} on {feature!r}")
        self.weights: Mapping[tuple[str, str], float] = MappingProxyType(dict(weights))
        self.template_version = template_version
        self.train_meta = train_meta
        self._scorer: _Scorer | None = None

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Model):
            return NotImplemented
        return (
            self.labels == other.labels
            and dict(self.weights) == dict(other.weights)
            and self.template_version == other.template_version
            and self.train_meta == other.train_meta
        )

    def scorer(self) -> "_Scorer":
        if self._scorer is None:
            self._scorer = _Scorer(self)
        return self._scorer


def build_legal_table(labels: Sequence[str]) -> bytearray:
    """(n_labels + 1) x n_labels flags: I-X only after B-X or I-X.

    Row index is the previous label; the extra last row is the sentence
    boundary. B-* and O are always legal.
    """
    n = len(labels)
    table = bytearray(n * (n + 1))
    for prev in range(n + 1):
        prev_label = labels[prev] if prev < n else None
        for j, label in enumerate(labels):
            if label == OUTSIDE or label.startswith("B-"):
                ok = True
            else:
                cat = label[2:]
                ok = prev_label in (f"B-{cat}", f"I-{cat}")
            table[prev * n + j] = 1 if ok else 0
    return table


class _Scorer:
    """Flat-array view of a model's weights for the decode kernel."""

    def __init__(self, model: Model) -> None:
        self.labels = model.labels
        n = len(self.labels)
        label_index = {label: j for j, label in enumerate(self.labels)}
        feat_index: dict[str, int] = {}
        for feature, _label in sorted(model.weights):
            if feature not in feat_index:
                feat_index[feature] = len(feat_index)
        w = array("d", bytes(8 * max(1, len(feat_index) * n)))
        for (feature, label), value in model.weights.items():
            w[feat_index[feature] * n + label_index[label]] = value
        self.feat_index = feat_index
        self.w = w
        self.legal = build_legal_table(self.labels)
        prev_values = list(self.labels) + [BOUNDARY_TAG]
        self.prev_fid = array(
            "i", (feat_index.get(f"prev_tag={v}", -1) for v in prev_values)
        )
        self._kernel = active_kernel()

    def decode(self, words: Sequence[str]) -> list[str]:
        if not words:
            return []
        n = len(self.labels)
        offsets = array("i", [0])
        fids = array("i")
        get = self.feat_index.get
        for i in range(len(words)):
            for feat in static_features(words, i):
                fids.append(get(feat, -1))
            offsets.append(len(fids))
        out = array("i", bytes(4 * len(words)))
        self._kernel.decode(self.w, n, offsets, fids, self.prev_fid, self.legal, out)
        return [self.labels[j] for j in out]


def _payload_dict(model: Model) -> dict:
    return {
        "version": MODEL_FORMAT_VERSION,
        "labels": list(model.labels),
        "template_version": model.template_version,
        "train_meta": {
            "epochs": model.train_meta.epochs,
            "seed": model.train_meta.seed,
            "doc_count": model.train_meta.doc_count,
        },
        "weights": [
            [feature, label, float(value)]
            for (feature, label), value in sorted(model.weights.items())
        ],
    }


def model_bytes(model: Model) -> bytes:
    payload = (canonical_dumps(_payload_dict(model)) + "\n").encode("utf-8")
    digest = hashlib.sha256(payload).hexdigest()
    return payload + f"#sha256:{digest}\n".encode("ascii")


def save_model(model: Model, path: str | Path) -> None:
    Path(path).write_bytes(model_bytes(model))


def load_model(path: str | Path) -> Model:
    path = Path(path)
    data = path.read_bytes()
    head, sep, tail = data.rpartition(b"#sha256:")
    if not sep:
        raise CorruptFileError(f"{path}: missing checksum line")
    digest = tail.strip().decode("ascii", errors="replace")
    if hashlib.sha256(head).hexdigest() != digest:
        raise CorruptFileError(f"{path}: checksum mismatch")
    try:
        doc = json.loads(head.decode("utf-8"))
    except (UnicodeDecodeError, json.JSONDecodeError) as err:
        raise CorruptFileError(f"{path}: invalid JSON payload ({err})") from err
    if not isinstance(doc, dict) or doc.get("version") != MODEL_FORMAT_VERSION:
        raise VersionMismatchError(
            f"{path}: unsupported model format version {doc.get('version')!r}"
        )
    if doc.get("template_version") != TEMPLATE_VERSION:
        raise VersionMismatchError(
            f"{path}: model built with feature templates "
            f"{doc.get('template_version')!r}, this build uses {TEMPLATE_VERSION!r}"
        )
    try:
        meta = doc["train_meta"]
        model = Model(
            labels=doc["labels"],
            weights={
                (feature, label): float(value) for feature, label, value in doc["weights"]
            },
            template_version=doc["template_version"],
            train_meta=TrainMeta(
                epochs=int(meta["epochs"]),
                seed=int(meta["seed"]),
                doc_count=int(meta["doc_count"]),
            ),
        )
    except (KeyError, TypeError, ValueError) as err:
        raise CorruptFileError(f"{path}: malformed model payload ({err})") from err
    return model


def zero_model(labels: Sequence[str] = LABELS) -> Model:
    """Model with no weights; decodes everything as O."""
    return Model(labels, {})
