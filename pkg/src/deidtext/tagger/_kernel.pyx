# cython: language_level=3, boundscheck=False, wraparound=False, initializedcheck=False, cdivision=True
"""Compiled decode/train kernel; semantics identical to ``_kernel_py``.

All arithmetic is double precision in the same evaluation order as the
pure-Python fallback, so both backends yield bit-identical models.
"""

from array import array

BACKEND_NAME = "compiled"


cdef inline void _dec(const double[::1] w, int n_labels,
                      const int[::1] offsets, const int[::1] fids,
                      const int[::1] prev_fid, const unsigned char[::1] legal,
                      int[::1] out) noexcept:
    cdef Py_ssize_t n = offsets.shape[0] - 1
    cdef Py_ssize_t i, q
    cdef int j, prev, best, f, pf
    cdef Py_ssize_t row
    cdef double s, best_s
    prev = n_labels
    for i in range(n):
        pf = prev_fid[prev]
        row = <Py_ssize_t> prev * n_labels
        best = -1
        best_s = 0.0
        for j in range(n_labels):
            if not legal[row + j]:
                continue
            s = 0.0
            for q in range(offsets[i], offsets[i + 1]):
                f = fids[q]
                if f >= 0:
                    s += w[<Py_ssize_t> f * n_labels + j]
            if pf >= 0:
                s += w[<Py_ssize_t> pf * n_labels + j]
            if best < 0 or s > best_s:
                best = j
                best_s = s
        out[i] = best
        prev = best


def decode(const double[::1] w, int n_labels, const int[::1] offsets,
           const int[::1] fids, const int[::1] prev_fid,
           const unsigned char[::1] legal, int[::1] out):
    _dec(w, n_labels, offsets, fids, prev_fid, legal, out)


cdef inline void _update(double[::1] w, double[::1] acc, long long[::1] stamp,
                         long long t, Py_ssize_t k, double delta) noexcept:
    acc[k] += <double> (t - stamp[k]) * w[k]
    stamp[k] = t
    w[k] += delta


def train_pass(double[::1] w, double[::1] acc, long long[::1] stamp,
               int n_labels, list sentences, const int[::1] prev_fid,
               const unsigned char[::1] legal, const int[::1] order,
               long long t, int[::1] scratch):
    cdef Py_ssize_t idx, i, q
    cdef int si, n, g, p, gprev, pprev, f
    cdef long long mistakes = 0
    cdef const int[::1] offsets
    cdef const int[::1] fids
    cdef const int[::1] gold
    cdef bint mismatch
    for idx in range(order.shape[0]):
        si = order[idx]
        sent = <tuple> sentences[si]
        offsets = sent[0]
        fids = sent[1]
        gold = sent[2]
        n = <int> (offsets.shape[0] - 1)
        _dec(w, n_labels, offsets, fids, prev_fid, legal, scratch)
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
                        _update(w, acc, stamp, t, <Py_ssize_t> f * n_labels + g, 1.0)
                        _update(w, acc, stamp, t, <Py_ssize_t> f * n_labels + p, -1.0)
                    _update(w, acc, stamp, t, <Py_ssize_t> prev_fid[gprev] * n_labels + g, 1.0)
                    _update(w, acc, stamp, t, <Py_ssize_t> prev_fid[pprev] * n_labels + p, -1.0)
                elif gprev != pprev:
                    _update(w, acc, stamp, t, <Py_ssize_t> prev_fid[gprev] * n_labels + g, 1.0)
                    _update(w, acc, stamp, t, <Py_ssize_t> prev_fid[pprev] * n_labels + p, -1.0)
                gprev = g
                pprev = p
        t += 1
    return t, mistakes


def averaged(const double[::1] w, const double[::1] acc,
             const long long[::1] stamp, long long t_total):
    out = array("d", bytes(8 * w.shape[0]))
    cdef double[::1] view = out
    cdef Py_ssize_t k
    for k in range(w.shape[0]):
        view[k] = (acc[k] + <double> (t_total - stamp[k]) * w[k]) / t_total
    return out
