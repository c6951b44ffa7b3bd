# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled counterparts of the functions in ``_pykernels``.

Same signatures and results; graphs are limited to 64 nodes (one machine word
per bitmask).
"""

from libc.stdint cimport uint64_t
from libc.stdlib cimport free, malloc

MAX_NODES = 64


cdef int _lcs(const int* a, int m, const int* b, int n, int* row) noexcept nogil:
    cdef int i, j, prev, cur
    for j in range(n + 1):
        row[j] = 0
    for i in range(m):
        prev = 0
        for j in range(n):
            cur = row[j + 1]
            if a[i] == b[j]:
                row[j + 1] = prev + 1
            elif row[j] > cur:
                row[j + 1] = row[j]
            prev = cur
    return row[n]


cdef int* _int_array(values, Py_ssize_t size) except NULL:
    cdef int* out = <int*> malloc((size if size > 0 else 1) * sizeof(int))
    if out == NULL:
        raise MemoryError()
    cdef Py_ssize_t i
    for i in range(size):
        out[i] = values[i]
    return out


def lcs_length(a, b):
    cdef Py_ssize_t m = len(a), n = len(b)
    cdef int* ca = _int_array(a, m)
    cdef int* cb = NULL
    cdef int* row = NULL
    cdef int result
    try:
        cb = _int_array(b, n)
        row = <int*> malloc((n + 1) * sizeof(int))
        if row == NULL:
            raise MemoryError()
        with nogil:
            result = _lcs(ca, <int> m, cb, <int> n, row)
        return result
    finally:
        free(ca)
        free(cb)
        free(row)


def best_lcs_over_extensions(pred_masks, seq, long long cap):
    cdef int n = len(pred_masks)
    cdef int m = len(seq)
    if n > MAX_NODES:
        raise ValueError(f"at most {MAX_NODES} nodes supported")
    cdef uint64_t preds[64]
    cdef int order[64]
    cdef int cand[65]
    cdef int i
    for i in range(n):
        preds[i] = <uint64_t> pred_masks[i]
    cdef int* cseq = _int_array(seq, m)
    cdef int* row = <int*> malloc((n + 1) * sizeof(int))
    if row == NULL:
        free(cseq)
        raise MemoryError()

    cdef long long count = 0
    cdef int best = -1, length, depth = 0, v
    cdef uint64_t placed = 0
    cdef bint found
    with nogil:
        cand[0] = 0
        while depth >= 0:
            if depth == n:
                count += 1
                if count > cap:
                    break
                length = _lcs(cseq, m, order, n, row)
                if length > best:
                    best = length
                depth -= 1
                if depth >= 0:
                    placed &= ~((<uint64_t> 1) << order[depth])
                    cand[depth] = order[depth] + 1
                continue
            found = False
            v = cand[depth]
            while v < n:
                if not (placed >> v) & 1 and (preds[v] & ~placed) == 0:
                    found = True
                    break
                v += 1
            if found:
                order[depth] = v
                placed |= (<uint64_t> 1) << v
                depth += 1
                cand[depth] = 0
            else:
                depth -= 1
                if depth >= 0:
                    placed &= ~((<uint64_t> 1) << order[depth])
                    cand[depth] = order[depth] + 1
    free(cseq)
    free(row)
    return best, count


def mvc_mask(int n, edges):
    if n > MAX_NODES:
        raise ValueError(f"at most {MAX_NODES} nodes supported")
    cdef Py_ssize_t n_edges = len(edges)
    cdef uint64_t* emask = <uint64_t*> malloc((n_edges if n_edges > 0 else 1) * sizeof(uint64_t))
    if emask == NULL:
        raise MemoryError()
    cdef Py_ssize_t e
    for e in range(n_edges):
        u, v = edges[e]
        emask[e] = ((<uint64_t> 1) << <int> u) | ((<uint64_t> 1) << <int> v)

    cdef int idx[64]
    cdef int k, i, j
    cdef uint64_t mask
    cdef bint ok
    cdef uint64_t result = 0
    cdef bint done = False
    with nogil:
        for k in range(n + 1):
            for i in range(k):
                idx[i] = i
            while True:
                mask = 0
                for i in range(k):
                    mask |= (<uint64_t> 1) << idx[i]
                ok = True
                for e in range(n_edges):
                    if (mask & emask[e]) == 0:
                        ok = False
                        break
                if ok:
                    result = mask
                    done = True
                    break
                # advance to the next k-combination in lexicographic order
                i = k - 1
                while i >= 0 and idx[i] == n - k + i:
                    i -= 1
                if i < 0:
                    break
                idx[i] += 1
                for j in range(i + 1, k):
                    idx[j] = idx[j - 1] + 1
            if done:
                break
    free(emask)
    return int(result)
