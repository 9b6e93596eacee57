# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled integer kernels; see _pykernels.py for the reference versions."""

from libc.stdlib cimport malloc, free

ctypedef long long i64
ctypedef unsigned long long u64


cdef bint _search(int i, int k, int d, i64* periods, i64* rem, u64* support) nogil:
    cdef int j
    cdef i64 bound, q, x
    cdef bint ok
    if i == k:
        for j in range(d):
            if rem[j] != 0:
                return False
        return True
    for j in range(d):
        if rem[j] != 0 and not (support[i] >> j) & 1:
            return False
    bound = -1
    for j in range(d):
        if periods[i * d + j] > 0:
            q = rem[j] // periods[i * d + j]
            if bound < 0 or q < bound:
                bound = q
    if bound < 0:
        bound = 0
    # rem is updated in place and restored before returning
    for j in range(d):
        rem[j] -= bound * periods[i * d + j]
    x = bound
    while True:
        ok = _search(i + 1, k, d, periods, rem, support)
        if ok or x == 0:
            break
        for j in range(d):
            rem[j] += periods[i * d + j]
        x -= 1
    for j in range(d):
        rem[j] += x * periods[i * d + j]
    return ok


def linear_member(base, periods, target):
    cdef int d = len(base)
    cdef int k = len(periods)
    cdef int i, j
    cdef i64 r
    cdef bint result
    if d > 64:
        raise ValueError("compiled kernel supports at most 64 coordinates")
    for j in range(d):
        if target[j] - base[j] < 0:
            return False
    cdef i64* P = <i64*> malloc(max(k * d, 1) * sizeof(i64))
    cdef i64* rem = <i64*> malloc(max(d, 1) * sizeof(i64))
    cdef u64* support = <u64*> malloc((k + 1) * sizeof(u64))
    if P == NULL or rem == NULL or support == NULL:
        free(P); free(rem); free(support)
        raise MemoryError()
    try:
        for i in range(k):
            row = periods[i]
            for j in range(d):
                P[i * d + j] = row[j]
        for j in range(d):
            rem[j] = target[j] - base[j]
        support[k] = 0
        for i in range(k - 1, -1, -1):
            support[i] = support[i + 1]
            for j in range(d):
                if P[i * d + j] != 0:
                    support[i] |= (<u64> 1) << j
        with nogil:
            result = _search(0, k, d, P, rem, support)
        return result
    finally:
        free(P)
        free(rem)
        free(support)


def closure_covers(available, roots, intros):
    cdef u64 avail = available
    cdef int n = len(roots)
    cdef int i, remaining = n
    cdef bint changed = True
    cdef u64* R = <u64*> malloc(max(n, 1) * sizeof(u64))
    cdef u64* I = <u64*> malloc(max(n, 1) * sizeof(u64))
    cdef char* used = <char*> malloc(max(n, 1))
    if R == NULL or I == NULL or used == NULL:
        free(R); free(I); free(used)
        raise MemoryError()
    try:
        for i in range(n):
            R[i] = roots[i]
            I[i] = intros[i]
            used[i] = 0
        while changed and remaining:
            changed = False
            for i in range(n):
                if not used[i] and (avail & R[i]):
                    used[i] = 1
                    remaining -= 1
                    avail |= I[i]
                    changed = True
        return remaining == 0
    finally:
        free(R)
        free(I)
        free(used)
