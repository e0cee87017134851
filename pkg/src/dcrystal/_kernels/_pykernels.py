"""Reference implementations of the hot loops.

Every function here has a twin with the same signature in ``_ckernels.pyx``.
The two are interchangeable and are tested against each other.
"""

import numpy as np

PLUS = 1
MINUS = -1


def reduce_runs(signs, counts):
    """Cancel ``+ ... -`` pairs in a run-length encoded signature.

    ``signs`` holds +1/-1 per run and ``counts`` the run lengths.  Returns
    ``(minus_left, plus_left, last_minus_run, first_plus_run)`` where the run
    indices are -1 when nothing of that sign survives.
    """
    stack = []  # [run index, remaining] for unmatched plus runs
    minus_left = 0
    last_minus = -1
    for idx in range(len(signs)):
        k = counts[idx]
        if k <= 0:
            continue
        if signs[idx] > 0:
            stack.append([idx, k])
            continue
        while k and stack:
            top = stack[-1]
            take = k if k < top[1] else top[1]
            top[1] -= take
            k -= take
            if top[1] == 0:
                stack.pop()
        if k:
            minus_left += k
            last_minus = idx
    plus_left = 0
    for _, rem in stack:
        plus_left += rem
    first_plus = stack[0][0] if stack else -1
    return minus_left, plus_left, last_minus, first_plus


def transit(values, moves):
    """Push Lusztig data through braid moves.

    ``moves`` is a sequence of ``(position, arity)`` with 0-based positions.
    """
    v = list(values)
    for k, arity in moves:
        if arity == 2:
            v[k], v[k + 1] = v[k + 1], v[k]
        else:
            a, b, c = v[k], v[k + 1], v[k + 2]
            m = a if a < c else c
            v[k], v[k + 1], v[k + 2] = b + c - m, m, a + b - m
    return tuple(v)


def transit_batch(data, moves):
    """Vectorized ``transit`` over the rows of an int64 array (in place)."""
    for k, arity in moves:
        if arity == 2:
            data[:, [k, k + 1]] = data[:, [k + 1, k]]
        else:
            a = data[:, k].copy()
            b = data[:, k + 1].copy()
            c = data[:, k + 2]
            m = np.minimum(a, c)
            data[:, k] = b + c - m
            data[:, k + 1] = m
            data[:, k + 2] = a + b - m
    return data


def max_subset_sum(values, flat, offsets):
    """Maximum over index groups of the sum of ``values`` at those indices.

    Group ``g`` consists of ``flat[offsets[g]:offsets[g + 1]]``.  Returns
    ``(best, argbest)``; an empty family gives ``(0, -1)``.
    """
    best = 0
    arg = -1
    for g in range(len(offsets) - 1):
        s = 0
        for p in range(offsets[g], offsets[g + 1]):
            s += values[flat[p]]
        if arg < 0 or s > best:
            best = s
            arg = g
    return best, arg


def max_subset_sum_batch(data, flat, offsets):
    """Row-wise ``max_subset_sum`` values for a 2-d int64 array."""
    out = np.zeros(data.shape[0], dtype=np.int64)
    first = True
    for g in range(len(offsets) - 1):
        idx = flat[offsets[g]:offsets[g + 1]]
        s = data[:, idx].sum(axis=1)
        if first:
            out[:] = s
            first = False
        else:
            np.maximum(out, s, out=out)
    return out


def column_insert(cols, x):
    """Schensted column insertion of ``x`` into a list of columns (in place).

    Each column is a strictly increasing list read top to bottom.  Returns
    the index of the column that grew.
    """
    for j, col in enumerate(cols):
        pos = _first_geq(col, x)
        if pos == len(col):
            col.append(x)
            return j
        col[pos], x = x, col[pos]
    cols.append([x])
    return len(cols) - 1


def _first_geq(col, x):
    lo, hi = 0, len(col)
    while lo < hi:
        mid = (lo + hi) // 2
        if col[mid] < x:
            lo = mid + 1
        else:
            hi = mid
    return lo


def domino_insert(pairs):
    """Column-insert ``x`` then stack ``y`` right below the new cell, per pair.

    Returns the resulting columns.  Raises ``ValueError`` if a placed ``y``
    breaks semistandardness, which would mean the input order is wrong.
    """
    cols = []
    for x, y in pairs:
        j = column_insert(cols, x)
        col = cols[j]
        if y <= col[-1]:
            raise ValueError("stacked entry %r does not exceed %r" % (y, col[-1]))
        if j > 0:
            left = cols[j - 1]
            if len(left) < len(col) + 1 or left[len(col)] > y:
                raise ValueError("stacked entry %r breaks row order" % (y,))
        col.append(y)
    return cols
