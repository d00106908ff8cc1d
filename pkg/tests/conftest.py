import pytest

from deidtext import SynthConfig, TrainConfig, generate_corpus, train


@pytest.fixture(scope="session")
def corpus50():
    """The standard desk-scale corpus: 50 documents, seed 42."""
    return generate_corpus(SynthConfig(doc_count=50, seed=42))


@pytest.fixture(scope="session")
def model50(corpus50):
    return train(corpus50, TrainConfig(epochs=10, seed=42))


@pytest.fixture(scope="session")
def corpus8():
    return generate_corpus(SynthConfig(doc_count=8, seed=7))
