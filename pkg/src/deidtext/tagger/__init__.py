"""Feature extraction, averaged-perceptron training, decoding, model I/O."""

from .backend import BACKEND_NAME, available_kernels
from .features import TEMPLATE_VERSION, extract_features, static_features, word_shape
from .model import (
    CorruptFileError,
    Model,
    ModelFileError,
    TrainMeta,
    VersionMismatchError,
    load_model,
    model_bytes,
    save_model,
    zero_model,
)
from .perceptron import (
    EmptyCorpusError,
    TrainConfig,
    TrainStats,
    decode_greedy,
    score,
    tag_document,
    train,
    train_with_stats,
)

__all__ = [
    "BACKEND_NAME",
    "CorruptFileError",
    "EmptyCorpusError",
    "Model",
    "ModelFileError",
    "TEMPLATE_VERSION",
    "TrainConfig",
    "TrainMeta",
    "TrainStats",
    "VersionMismatchError",
    "available_kernels",
    "decode_greedy",
    "extract_features",
    "load_model",
    "model_bytes",
    "save_model",
    "score",
    "static_features",
    "tag_document",
    "train",
    "train_with_stats",
    "word_shape",
    "zero_model",
]
