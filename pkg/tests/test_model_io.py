"""Model serialization: canonical bytes, checksum, round trip."""

import pytest

from deidtext import SynthConfig, TrainConfig, generate_corpus, train
from deidtext.corpus import LABELS
from deidtext.tagger import (
    CorruptFileError,
    Model,
    TrainMeta,
    VersionMismatchError,
    load_model,
    model_bytes,
    save_model,
    zero_model,
)


def small_model():
    return Model(
        LABELS,
        {
            ("bias", "O"): 1.5,
            ("w0=8/31", "B-date"): 10.0,
            ("prev_tag=O", "B-name"): -0.25,
        },
        train_meta=TrainMeta(epochs=3, seed=9, doc_count=2),
    )


def test_round_trip_exact(tmp_path):
    model = small_model()
    path = tmp_path / "m.json"
    save_model(model, path)
    loaded = load_model(path)
    assert loaded == model
    assert dict(loaded.weights) == dict(model.weights)


def test_empty_model_round_trip(tmp_path):
    path = tmp_path / "m.json"
    save_model(zero_model(), path)
    assert load_model(path) == zero_model()


def test_trained_model_round_trip(tmp_path, corpus8):
    model = train(corpus8, TrainConfig(epochs=2, seed=1))
    path = tmp_path / "m.json"
    save_model(model, path)
    loaded = load_model(path)
    assert loaded == model
    # save again: byte-identical file
    path2 = tmp_path / "m2.json"
    save_model(loaded, path2)
    assert path.read_bytes() == path2.read_bytes()


def test_corrupt_checksum_rejected(tmp_path):
    path = tmp_path / "m.json"
    save_model(small_model(), path)
    data = path.read_bytes()
    broken = data.replace(b'"bias"', b'"bis a"')
    path.write_bytes(broken)
    with pytest.raises(CorruptFileError):
        load_model(path)


def test_missing_checksum_rejected(tmp_path):
    path = tmp_path / "m.json"
    path.write_text("{}\n")
    with pytest.raises(CorruptFileError):
        load_model(path)


def test_version_mismatch_rejected(tmp_path):
    import hashlib

    payload = b'{"version":99}\n'
    digest = hashlib.sha256(payload).hexdigest()
    path = tmp_path / "m.json"
    path.write_bytes(payload + f"#sha256:{digest}\n".encode())
    with pytest.raises(VersionMismatchError):
        load_model(path)


def test_weights_sorted_in_file():
    data = model_bytes(small_model()).decode()
    assert data.index('"bias"') < data.index('"prev_tag=O"') < data.index('"w0=8/31"')


def test_checksum_line_format():
    data = model_bytes(small_model())
    payload, checksum_line = data.rsplit(b"\n", 2)[0:2]
    assert checksum_line.startswith(b"#sha256:")
    assert len(checksum_line) == len(b"#sha256:") + 64


def test_training_twice_is_byte_identical(corpus8):
    config = TrainConfig(epochs=3, seed=5)
    a = train(corpus8, config)
    b = train(corpus8, config)
    assert model_bytes(a) == model_bytes(b)


def test_different_seed_changes_model():
    corpus = generate_corpus(SynthConfig(doc_count=6, seed=3))
    a = train(corpus, TrainConfig(epochs=2, seed=1))
    b = train(corpus, TrainConfig(epochs=2, seed=2))
    assert model_bytes(a) != model_bytes(b)
