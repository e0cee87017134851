"""Operators computed by moving the reduced word with braid moves.

This route is independent of the signature rule: to apply f_i, move the
word until it starts with ``i``, add one to the first coordinate and move
back.  The braid search is only cheap for small rank, so these functions are
meant for n = 4.
"""

import numpy as np

from dcrystal import _kernels
from dcrystal.pbw import LusztigDatum
from dcrystal.roots import (
    apply_moves, inverse_moves, path_to_first_letter, path_to_last_letter, reduced_word_i0,
    star, transition,
)


def _first_letter_op(c, i, delta):
    n = c.n
    word = reduced_word_i0(n)
    moves = path_to_first_letter(word, i, n)
    moved = list(transition(c.values, word, moves, n))
    moved[0] += delta
    if moved[0] < 0:
        return None
    target = apply_moves(word, moves, n)
    back = transition(moved, target, inverse_moves(moves), n)
    return LusztigDatum(n, tuple(back))


def f_transition(c, i):
    return _first_letter_op(c, i, +1)


def e_transition(c, i):
    return _first_letter_op(c, i, -1)


def epsilon_star_transition(c):
    """Last coordinate after moving the word to end in n*."""
    n = c.n
    word = reduced_word_i0(n)
    moves = path_to_last_letter(word, star(n, n), n)
    return transition(c.values, word, moves, n)[-1]


def first_letter_op_batch(data, i, delta):
    """Batched first-letter operator on the rows of a 2D int64 array.

    Returns the result rows and a mask of rows where the operator is
    defined (a lowering step never fails on the full crystal).
    """
    n = _rank_from_length(data.shape[1])
    word = reduced_word_i0(n)
    moves = [tuple(mv) for mv in path_to_first_letter(word, i, n)]
    work = np.ascontiguousarray(data, dtype=np.int64).copy()
    _kernels.transit_batch(work, moves)
    work[:, 0] += delta
    defined = work[:, 0] >= 0
    work[:, 0] = np.maximum(work[:, 0], 0)
    _kernels.transit_batch(work, [tuple(mv) for mv in inverse_moves(moves)])
    return work, defined


def epsilon_star_transition_batch(data):
    """Star epsilon at node n for a list of data via one batched transition."""
    if not data:
        return []
    n = data[0].n
    arr = np.array([c.values for c in data], dtype=np.int64)
    word = reduced_word_i0(n)
    moves = [tuple(mv) for mv in path_to_last_letter(word, star(n, n), n)]
    _kernels.transit_batch(arr, moves)
    return [int(x) for x in arr[:, -1]]


def _rank_from_length(N):
    n = 1
    while n * (n - 1) < N:
        n += 1
    if n * (n - 1) != N:
        raise ValueError("%d is not the number of positive roots of a D_n" % N)
    return n
