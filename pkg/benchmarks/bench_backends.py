"""Compare the compiled kernel against the pure-Python fallback.

Runs training and tagging workloads in a subprocess per backend (the
backend is fixed at import time via DEIDTEXT_BACKEND) and prints wall
times plus the speedup. Both backends produce byte-identical models, so
only speed differs.

Usage: python3 benchmarks/bench_backends.py [--docs 50] [--epochs 10]
"""

from __future__ import annotations

import argparse
import json
import os
import subprocess
import sys

_WORKLOAD = r"""
import json, time
from deidtext import SynthConfig, TrainConfig, generate_corpus, tag_document, train
from deidtext.tagger import BACKEND_NAME, model_bytes
import hashlib

docs, epochs, seed = {docs}, {epochs}, {seed}
corpus = generate_corpus(SynthConfig(doc_count=docs, seed=seed))

t0 = time.perf_counter()
model = train(corpus, TrainConfig(epochs=epochs, seed=seed))
train_s = time.perf_counter() - t0

t0 = time.perf_counter()
for adoc in corpus:
    tag_document(model, adoc.doc)
tag_s = time.perf_counter() - t0

print(json.dumps({{
    "backend": BACKEND_NAME,
    "train_s": train_s,
    "tag_s": tag_s,
    "model_sha": hashlib.sha256(model_bytes(model)).hexdigest(),
}}))
"""


def run_backend(name: str, docs: int, epochs: int, seed: int) -> dict:
    env = dict(os.environ, DEIDTEXT_BACKEND=name)
    code = _WORKLOAD.format(docs=docs, epochs=epochs, seed=seed)
    proc = subprocess.run(
        [sys.executable, "-c", code], env=env, capture_output=True, text=True
    )
    if proc.returncode != 0:
        raise RuntimeError(f"{name} backend failed:\n{proc.stderr}")
    return json.loads(proc.stdout.strip().splitlines()[-1])


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--docs", type=int, default=50)
    parser.add_argument("--epochs", type=int, default=10)
    parser.add_argument("--seed", type=int, default=42)
    args = parser.parse_args()

    results = {}
    for name in ("pure", "compiled"):
        try:
            results[name] = run_backend(name, args.docs, args.epochs, args.seed)
        except RuntimeError as err:
            if name == "compiled":
                print("compiled backend unavailable; build it with `pip install -e .`")
                print(str(err).splitlines()[-1])
            else:
                raise

    print(f"workload: train {args.docs} docs x {args.epochs} epochs, then tag all docs")
    print(f"{'backend':<10}{'train (s)':>12}{'tag (s)':>12}")
    for name, r in results.items():
        print(f"{name:<10}{r['train_s']:>12.3f}{r['tag_s']:>12.3f}")

    if len(results) == 2:
        pure, fast = results["pure"], results["compiled"]
        assert pure["model_sha"] == fast["model_sha"], "backends disagree!"
        print(f"models byte-identical (sha256 {fast['model_sha'][:12]}...)")
        print(
            f"speedup: train x{pure['train_s'] / fast['train_s']:.1f}, "
            f"tag x{pure['tag_s'] / fast['tag_s']:.1f}"
        )
    return 0


if __name__ == "__main__":
    sys.exit(main())
