"""Pure-Python decode/train kernel.

Mirror of ``_kernel.pyx`` kept loop-for-loop identical: both accumulate
scores left to right in double precision and update weights in the same
order, so the two backends produce bit-identical models and tags.

Weight storage is a flat array indexed ``feature_id * n_labels + label``.
Feature id -1 means "unseen at training time" and scores 0.
"""

from __future__ import annotations

from array import array

BACKEND_NAME = "pure"


def decode(w, n_labels, offsets, fids, prev_fid, legal, out):
    """Greedy left-to-right decode under the legality table.

    ``legal`` has shape (n_labels + 1) x n_labels flattened; row n_labels
    is the sentence-boundary row. Ties keep the lowest label index.
    """
    n = len(offsets) - 1
    prev = n_labels
    for i in range(n):
        lo = offsets[i]
        hi = offsets[i + 1]
        pf = prev_fid[prev]
        row = prev * n_labels
        best = -1
        best_s = 0.0
        for j in range(n_labels):
            if not legal[row + j]:
                continue
            s = 0.0
            for q in range(lo, hi):
                f = fids[q]
                if f >= 0:
                    s += w[f * n_labels + j]
            if pf >= 0:
                s += w[pf * n_labels + j]
            if best < 0 or s > best_s:
                best = j
                best_s = s
        out[i] = best
        prev = best


def _update(w, acc, stamp, t, k, delta):
    # timestamp trick: flush this weight's pending contribution to the
    # running sum before changing it
    acc[k] += (t - stamp[k]) * w[k]
    stamp[k] = t
    w[k] += delta


def train_pass(w, acc, stamp, n_labels, sentences, prev_fid, legal, order, t, scratch):
    """One pass over ``sentences`` in ``order``; returns (t, mistakes).

    ``t`` counts completed sentence visits across all passes. A sentence
    whose decode differs from gold triggers a perceptron update: +1 for
    every gold (feature, label) pair, -1 for every predicted pair, with
    prev_tag features taken along the respective tag sequences.
    """
    mistakes = 0
    for si in order:
        offsets, fids, gold = sentences[si]
        n = len(offsets) - 1
        decode(w, n_labels, offsets, fids, prev_fid, legal, scratch)
        mismatch = False
        for i in range(n):
            if scratch[i] != gold[i]:
                mismatch = True
                break
        if mismatch:
            mistakes += 1
            gprev = n_labels
            pprev = n_labels
            for i in range(n):
                g = gold[i]
                p = scratch[i]
                if g != p:
                    for q in range(offsets[i], offsets[i + 1]):
                        f = fids[q]
                        _update(w, acc, stamp, t, f * n_labels + g, 1.0)
                        _update(w, acc, stamp, t, f * n_labels + p, -1.0)
                    _update(w, acc, stamp, t, prev_fid[gprev] * n_labels + g, 1.0)
                    _update(w, acc, stamp, t, prev_fid[pprev] * n_labels + p, -1.0)
                elif gprev != pprev:
                    # label agrees but context differs: static features
                    # cancel exactly, only prev_tag features move
                    _update(w, acc, stamp, t, prev_fid[gprev] * n_labels + g, 1.0)
                    _update(w, acc, stamp, t, prev_fid[pprev] * n_labels + p, -1.0)
                gprev = g
                pprev = p
        t += 1
    return t, mistakes


def averaged(w, acc, stamp, t_total):
    """Mean of the weight snapshots after each of ``t_total`` visits."""
    out = array("d", bytes(8 * len(w)))
    for k in range(len(w)):
        out[k] = (acc[k] + (t_total - stamp[k]) * w[k]) / t_total
    return out
