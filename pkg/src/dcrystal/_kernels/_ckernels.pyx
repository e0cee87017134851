# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled versions of the hot loops in ``_pykernels``."""

import numpy as np
cimport numpy as cnp
from libc.stdlib cimport malloc, free

cnp.import_array()

cdef enum:
    MAXLEN = 256


def reduce_runs(signs, counts):
    cdef Py_ssize_t nruns = len(signs)
    cdef Py_ssize_t *stack_idx = <Py_ssize_t *> malloc(nruns * sizeof(Py_ssize_t) + 1)
    cdef long *stack_rem = <long *> malloc(nruns * sizeof(long) + 1)
    cdef Py_ssize_t top = 0, idx
    cdef long k, take, minus_left = 0, plus_left = 0
    cdef Py_ssize_t last_minus = -1
    try:
        for idx in range(nruns):
            k = counts[idx]
            if k <= 0:
                continue
            if signs[idx] > 0:
                stack_idx[top] = idx
                stack_rem[top] = k
                top += 1
                continue
            while k and top:
                take = k if k < stack_rem[top - 1] else stack_rem[top - 1]
                stack_rem[top - 1] -= take
                k -= take
                if stack_rem[top - 1] == 0:
                    top -= 1
            if k:
                minus_left += k
                last_minus = idx
        for idx in range(top):
            plus_left += stack_rem[idx]
        return minus_left, plus_left, last_minus, (stack_idx[0] if top else -1)
    finally:
        free(stack_idx)
        free(stack_rem)


def transit(values, moves):
    cdef long v[MAXLEN]
    cdef Py_ssize_t n = len(values), i, k
    cdef long a, b, c, m
    if n > MAXLEN:
        raise ValueError("datum too long")
    for i in range(n):
        v[i] = values[i]
    for mv in moves:
        k = mv[0]
        if mv[1] == 2:
            a = v[k]
            v[k] = v[k + 1]
            v[k + 1] = a
        else:
            a = v[k]
            b = v[k + 1]
            c = v[k + 2]
            m = a if a < c else c
            v[k] = b + c - m
            v[k + 1] = m
            v[k + 2] = a + b - m
    return tuple([v[i] for i in range(n)])


def transit_batch(cnp.int64_t[:, ::1] data, moves):
    cdef Py_ssize_t rows = data.shape[0], r, k, nm = len(moves), j
    cdef cnp.int64_t a, b, c, m
    cdef Py_ssize_t *pos = <Py_ssize_t *> malloc(nm * sizeof(Py_ssize_t) + 1)
    cdef int *ar = <int *> malloc(nm * sizeof(int) + 1)
    try:
        for j in range(nm):
            pos[j] = moves[j][0]
            ar[j] = moves[j][1]
        with nogil:
            for r in range(rows):
                for j in range(nm):
                    k = pos[j]
                    if ar[j] == 2:
                        a = data[r, k]
                        data[r, k] = data[r, k + 1]
                        data[r, k + 1] = a
                    else:
                        a = data[r, k]
                        b = data[r, k + 1]
                        c = data[r, k + 2]
                        m = a if a < c else c
                        data[r, k] = b + c - m
                        data[r, k + 1] = m
                        data[r, k + 2] = a + b - m
    finally:
        free(pos)
        free(ar)
    return np.asarray(data)


def max_subset_sum(values, flat, offsets):
    cdef long v[MAXLEN]
    cdef Py_ssize_t n = len(values), i, g, p, nf = len(flat), ng = len(offsets) - 1
    cdef long s, best = 0
    cdef Py_ssize_t arg = -1
    if n > MAXLEN:
        raise ValueError("datum too long")
    for i in range(n):
        v[i] = values[i]
    cdef Py_ssize_t *fl = <Py_ssize_t *> malloc((nf + 1) * sizeof(Py_ssize_t))
    cdef Py_ssize_t *off = <Py_ssize_t *> malloc((ng + 2) * sizeof(Py_ssize_t))
    try:
        for p in range(nf):
            fl[p] = flat[p]
        for g in range(ng + 1):
            off[g] = offsets[g]
        for g in range(ng):
            s = 0
            for p in range(off[g], off[g + 1]):
                s += v[fl[p]]
            if arg < 0 or s > best:
                best = s
                arg = g
    finally:
        free(fl)
        free(off)
    return best, arg


def max_subset_sum_batch(cnp.int64_t[:, ::1] data, flat, offsets):
    cdef Py_ssize_t rows = data.shape[0], r, g, p, ng = len(offsets) - 1
    cdef cnp.int64_t[::1] fl = np.asarray(flat, dtype=np.int64)
    cdef cnp.int64_t[::1] off = np.asarray(offsets, dtype=np.int64)
    out_arr = np.zeros(rows, dtype=np.int64)
    cdef cnp.int64_t[::1] out = out_arr
    cdef cnp.int64_t s, best
    with nogil:
        for r in range(rows):
            best = 0
            for g in range(ng):
                s = 0
                for p in range(off[g], off[g + 1]):
                    s += data[r, fl[p]]
                if g == 0 or s > best:
                    best = s
            out[r] = best
    return out_arr


def column_insert(cols, x):
    cdef Py_ssize_t j, lo, hi, mid
    for j in range(len(cols)):
        col = cols[j]
        lo = 0
        hi = len(col)
        while lo < hi:
            mid = (lo + hi) // 2
            if col[mid] < x:
                lo = mid + 1
            else:
                hi = mid
        if lo == len(col):
            col.append(x)
            return j
        col[lo], x = x, col[lo]
    cols.append([x])
    return len(cols) - 1


def domino_insert(pairs):
    cols = []
    cdef Py_ssize_t j
    for x, y in pairs:
        j = column_insert(cols, x)
        col = cols[j]
        bottom = col[len(col) - 1]  # wraparound is off: no negative indices
        if y <= bottom:
            raise ValueError("stacked entry %r does not exceed %r" % (y, bottom))
        if j > 0:
            left = cols[j - 1]
            if len(left) < len(col) + 1 or left[len(col)] > y:
                raise ValueError("stacked entry %r breaks row order" % (y,))
        col.append(y)
    return cols
