# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled ideal counter for posets of at most 64 elements."""
from libc.stdint cimport uint64_t, int64_t

cdef enum:
    MAXN = 64


def count_ideals(int n, lower, long long limit):
    if n > MAXN:
        raise ValueError("compiled kernel handles at most 64 elements")
    cdef uint64_t low[MAXN]
    cdef int64_t counts[MAXN + 1]
    # depth-first stack; each pop pushes at most two frames, so n + 2 suffices
    cdef int st_i[MAXN + 2]
    cdef uint64_t st_mask[MAXN + 2]
    cdef int st_size[MAXN + 2]
    cdef int top = 0
    cdef int i, size
    cdef uint64_t mask
    cdef long long total = 0
    for i in range(n):
        low[i] = <uint64_t>lower[i]
    for i in range(n + 1):
        counts[i] = 0
    st_i[0] = 0
    st_mask[0] = 0
    st_size[0] = 0
    top = 1
    while top > 0:
        top -= 1
        i = st_i[top]
        mask = st_mask[top]
        size = st_size[top]
        # walk the exclude branch in place, pushing include branches
        while i < n:
            if (low[i] & ~mask) == 0:
                st_i[top] = i + 1
                st_mask[top] = mask | ((<uint64_t>1) << i)
                st_size[top] = size + 1
                top += 1
            i += 1
        counts[size] += 1
        total += 1
        if total > limit:
            return None
    return [counts[i] for i in range(n + 1)]
