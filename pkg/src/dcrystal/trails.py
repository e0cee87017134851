"""Trails in the spin representations and the string formulas built on them.

Spin elements are sign tuples of +1/-1; the weight of ``tau`` is
``tau / 2``.  The crystal operators are

* f_n: (+, +) -> (-, -) in the last two places,
* f_i (i < n): (+, -) -> (-, +) in places i, i + 1.

Both half-spin crystals are covered: elements with an even number of minus
signs have highest element (+, ..., +), the odd ones (+, ..., +, -).
Because the representations are minuscule, a trail along a word is just a
crystal path that applies f_{i_k} (d_k = 1) or waits (d_k = 0) at step k.
"""

import itertools
from functools import lru_cache

from dcrystal.paths import Cell, cell_positions, enumerate_double_paths
from dcrystal.pbw import LusztigDatum, e_full, epsilon_full
from dcrystal.roots import build_root_system, reduced_word_i0, star_op_word, weyl_act

PLUS, MINUS = 1, -1


def spin_f(tau, i):
    n = len(tau)
    t = list(tau)
    if i == n:
        if t[n - 2] == PLUS and t[n - 1] == PLUS:
            t[n - 2] = t[n - 1] = MINUS
            return tuple(t)
        return None
    if t[i - 1] == PLUS and t[i] == MINUS:
        t[i - 1], t[i] = MINUS, PLUS
        return tuple(t)
    return None


def spin_e(tau, i):
    n = len(tau)
    t = list(tau)
    if i == n:
        if t[n - 2] == MINUS and t[n - 1] == MINUS:
            t[n - 2] = t[n - 1] = PLUS
            return tuple(t)
        return None
    if t[i - 1] == MINUS and t[i] == PLUS:
        t[i - 1], t[i] = PLUS, MINUS
        return tuple(t)
    return None


def is_even_spin(tau):
    return sum(1 for x in tau if x == MINUS) % 2 == 0


def spin_orbit(n, start=None):
    """All elements reachable from ``start`` (default the highest element)."""
    start = start or (PLUS,) * n
    seen = {start}
    stack = [start]
    while stack:
        tau = stack.pop()
        for i in range(1, n + 1):
            for op in (spin_f, spin_e):
                nxt = op(tau, i)
                if nxt is not None and nxt not in seen:
                    seen.add(nxt)
                    stack.append(nxt)
    return seen


def fundamental_spin(n, node):
    """Sign vector of the fundamental weight at a spin node."""
    if node == n:
        return (PLUS,) * n
    if node == n - 1:
        return (PLUS,) * (n - 1) + (MINUS,)
    raise ValueError("only the spin nodes %d and %d are supported" % (n - 1, n))


def act_on_spin(word, tau):
    """Weyl group element s_{w_1} ... s_{w_L} applied to the weight of tau."""
    return tuple(weyl_act(tuple(word), tuple(tau), len(tau)))


def lowest_spin(n, node):
    return act_on_spin(reduced_word_i0(n), fundamental_spin(n, node))


def signs_weight(minus_count, n):
    """(-, ..., -, +, ..., +) with ``minus_count`` leading minus signs."""
    return (MINUS,) * minus_count + (PLUS,) * (n - minus_count)


# --- trail enumeration -----------------------------------------------------------

def _dp_table(word, end):
    """For each step k and element tau, the minimal-cost machinery needs the
    set of elements from which ``end`` is reachable using word[k:]."""
    L = len(word)
    reach = [None] * (L + 1)
    reach[L] = {end}
    for k in range(L - 1, -1, -1):
        nxt = reach[k + 1]
        here = set()
        for tau in nxt:
            here.add(tau)
            prev = spin_e(tau, word[k])
            if prev is not None:
                here.add(prev)
        reach[k] = here
    return reach


@lru_cache(maxsize=None)
def _reach(word, end):
    return _dp_table(word, end)


def enumerate_trails(word, start, end):
    """All 0/1 exponent vectors of trails from ``start`` to ``end``."""
    word = tuple(word)
    reach = _reach(word, tuple(end))
    out = []

    def walk(k, tau, bits):
        if k == len(word):
            if tau == end:
                out.append(tuple(bits))
            return
        if tau in reach[k + 1]:
            bits.append(0)
            walk(k + 1, tau, bits)
            bits.pop()
        nxt = spin_f(tau, word[k])
        if nxt is not None and nxt in reach[k + 1]:
            bits.append(1)
            walk(k + 1, nxt, bits)
            bits.pop()

    if tuple(start) in reach[0]:
        walk(0, tuple(start), [])
    return out


def count_trails(word, start, end):
    word = tuple(word)
    reach = _reach(word, tuple(end))
    counts = {tuple(end): 1}
    for k in range(len(word) - 1, -1, -1):
        new = {}
        for tau in reach[k]:
            total = counts.get(tau, 0)
            nxt = spin_f(tau, word[k])
            if nxt is not None:
                total += counts.get(nxt, 0)
            if total:
                new[tau] = total
        counts = new
    return counts.get(tuple(start), 0)


def trail_vertices(word, start, bits):
    verts = [tuple(start)]
    for i, d in zip(word, bits):
        if d:
            nxt = spin_f(verts[-1], i)
            if nxt is None:
                raise ValueError("exponents do not describe a trail")
            verts.append(nxt)
        else:
            verts.append(verts[-1])
    return verts


def min_trail_cost(values, word, start, end):
    """min over trails of sum d_k * values[k], or None when no trail exists."""
    word = tuple(word)
    reach = _reach(word, tuple(end))
    best = {tuple(end): 0}
    for k in range(len(word) - 1, -1, -1):
        new = {}
        for tau in reach[k]:
            cands = []
            if tau in best:
                cands.append(best[tau])
            nxt = spin_f(tau, word[k])
            if nxt is not None and nxt in best:
                cands.append(values[k] + best[nxt])
            if cands:
                new[tau] = min(cands)
        best = new
    return best.get(tuple(start))


# --- the string formula ----------------------------------------------------------

def bz_string_entry(values, string_word, lusztig_word, k):
    """Entry ``k`` (1-based) of the string parametrization along
    ``string_word`` of the element with Lusztig data ``values`` along
    ``lusztig_word``, for a spin node ``string_word[k - 1]``."""
    n = _rank_of(string_word)
    node = string_word[k - 1]
    if node not in (n - 1, n):
        raise ValueError("entry %d sits at node %d, which is not a spin node" % (k, node))
    top = fundamental_spin(n, node)
    start1 = act_on_spin(string_word[:k - 1], top)
    start2 = act_on_spin(string_word[:k], top)
    end = act_on_spin(reduced_word_i0(n), top)
    m1 = min_trail_cost(values, lusztig_word, start1, end)
    m2 = min_trail_cost(values, lusztig_word, start2, end)
    if m1 is None or m2 is None:
        raise ValueError("no trail between the required weights")
    return m1 - m2


def _rank_of(word):
    n = max(word)
    if n < 4:
        raise ValueError("word does not look like a D_n word")
    return n


def star_datum(values, word, n):
    """(c^op, word^{*op}): reverse the data and apply the diagram
    involution to the reversed word."""
    return tuple(reversed(values)), star_op_word(word, n)


def j0_word(n):
    return star_op_word(reduced_word_i0(n), n)


def epsilon_star_bz(c):
    """t_1 of the string formula; equals the star epsilon at node n."""
    n = c.n
    values_op, word = star_datum(c.values, reduced_word_i0(n), n)
    return bz_string_entry(values_op, reduced_word_i0(n), word, 1)


# --- the trail set T and its norm ----------------------------------------------

def trail_set(n):
    """j_0-trails from s_n(varpi_n) to w_0(varpi_n)."""
    start = spin_f((PLUS,) * n, n)
    return enumerate_trails(j0_word(n), start, lowest_spin(n, n))


def levi_restricted_trails(n):
    """Trails in ``trail_set`` whose first half ends at (-, -, +, ..., +)."""
    M = build_root_system(n).M
    word = j0_word(n)
    start = spin_f((PLUS,) * n, n)
    target = (MINUS, MINUS) + (PLUS,) * (n - 2)
    out = []
    for bits in trail_set(n):
        if trail_vertices(word, start, bits)[M] == target:
            out.append(bits)
    return out


def trail_norm(c, bits):
    """sum_{k <= M} (1 - d_{N-k+1}) c_k for a j_0-trail."""
    rs = build_root_system(c.n)
    N, M = rs.N, rs.M
    if len(bits) != N:
        raise ValueError("trail length %d does not match %d" % (len(bits), N))
    return sum((1 - bits[N - k]) * c.values[k - 1] for k in range(1, M + 1))


def max_trail_norm(c, trails=None):
    trails = trail_set(c.n) if trails is None else trails
    return max(trail_norm(c, bits) for bits in trails)


# --- 0/1 arrays on the triangle --------------------------------------------

@lru_cache(maxsize=None)
def _beta_cells(n):
    """cell of beta_p for p = 1..M (index p - 1)."""
    pos = cell_positions(n)
    inv = {p: cell for cell, p in pos.items()}
    return [inv[p] for p in range(build_root_system(n).M)]


def trail_to_darray(bits, n):
    """Place d_k (k > M) of a j_0-trail at the cell of beta_{N-k+1}."""
    rs = build_root_system(n)
    N, M = rs.N, rs.M
    cells = _beta_cells(n)
    return {cells[N - k]: bits[k - 1] for k in range(M + 1, N + 1)}


def i0_trail_to_darray(bits, n):
    """Place d_k (k <= M) of an i_0-trail at the cell of beta_k."""
    cells = _beta_cells(n)
    return {cells[k]: bits[k] for k in range(build_root_system(n).M)}


def paths_to_darray(paths, n):
    """0 on cells covered by the given cell sets, 1 elsewhere."""
    covered = set()
    for cells in paths:
        covered |= set(cells)
    return {cell: 0 if cell in covered else 1 for cell in cell_positions(n)}


def letter_array(n, kind="j"):
    """Letters attached to cells: ``j`` puts j_{N-p+1} at beta_p, ``i`` puts
    i_p at beta_p."""
    rs = build_root_system(n)
    N = rs.N
    cells = _beta_cells(n)
    if kind == "j":
        word = j0_word(n)
        return {cells[p - 1]: word[N - p] for p in range(1, rs.M + 1)}
    word = reduced_word_i0(n)
    return {cells[p - 1]: word[p - 1] for p in range(1, rs.M + 1)}


def satisfies_darray_conditions(arr, n, l=1, orientation="rtl", letters="j"):
    """The four defining conditions of the level-l arrays.

    ``orientation`` says whether the bottom-row pattern n, n-1, n, ... is
    read right to left (``"rtl"``) or left to right (``"ltr"``).
    """
    rows = {r: [arr[Cell(r, m)] for m in range(1, r + 1)] for r in range(1, n)}
    for r in range(1, min(2 * l, n - 1) + 1):
        if any(rows[r]):
            return False
    for r in range(2 * l + 1, n):
        if sum(rows[r]) != r - 2 * l:
            return False
    for r in range(2 * l + 1, n):
        ones = [m for m in range(1, r + 1) if rows[r][m - 1]]
        for m1, m2 in zip(ones, ones[1:]):
            if r > 2 * l + 1:
                above = sum(rows[r - 1][mm - 1] for mm in range(m1, m2))
                if above != 1:
                    return False
            if r < n - 1:
                below = sum(rows[r + 1][mm - 1] for mm in range(m1 + 1, m2 + 1))
                if below != 1:
                    return False
    lets = letter_array(n, letters)
    bottom = [lets[Cell(n - 1, m)] for m in range(1, n) if rows[n - 1][m - 1]]
    if orientation == "rtl":
        bottom = bottom[::-1]
    elif orientation != "ltr":
        raise ValueError("orientation must be 'rtl' or 'ltr'")
    expected = [n if k % 2 == 0 else n - 1 for k in range(len(bottom))]
    return bottom == expected


def enumerate_darrays(n, l=1, orientation="rtl", letters="j"):
    if not 1 <= l <= n // 2:
        raise ValueError("l must lie in 1..%d" % (n // 2))
    per_row = []
    for r in range(1, n):
        k = max(r - 2 * l, 0)
        per_row.append([tuple(1 if m in chosen else 0 for m in range(1, r + 1))
                        for chosen in itertools.combinations(range(1, r + 1), k)])
    out = []
    for choice in itertools.product(*per_row):
        arr = {Cell(r, m): choice[r - 1][m - 1] for r in range(1, n) for m in range(1, r + 1)}
        if satisfies_darray_conditions(arr, n, l, orientation, letters):
            out.append(arr)
    return out


def freeze(arr):
    return tuple(sorted(arr.items()))


def double_path_darrays(n):
    return [paths_to_darray([p.cells()], n) for p in enumerate_double_paths(n, (1, 1))]


# --- level-l trails and the shape formula ------------------------------------

def level_trails(n, l):
    """i_0-trails from (-^{2l}, +^{n-2l}) to the lowest element."""
    return enumerate_trails(reduced_word_i0(n), signs_weight(2 * l, n), lowest_spin(n, n))


def spin_positions(n):
    """Positions k (1-based) of j_0 with j_k = n that lie past the Levi part,
    keyed by l, found from the weights they start at."""
    word = j0_word(n)
    M = build_root_system(n).M
    out = {}
    for l in range(1, n // 2 + 1):
        want = signs_weight(2 * l - 2, n)
        for k in range(M + 1, len(word) + 1):
            if word[k - 1] == n and act_on_spin(word[:k - 1], (PLUS,) * n) == want:
                out[l] = k
                break
    return out


def shape_part_bz(c, l):
    """lambda_{2l-1} from the string formula along j_0 with data along i_0."""
    n = c.n
    k = spin_positions(n)[l]
    return bz_string_entry(c.values, j0_word(n), reduced_word_i0(n), k)


def shape_part_chain(c, l):
    """lambda_{2l-1} as epsilon_n after maximal raising along j_1..j_{k-1}."""
    n = c.n
    word = j0_word(n)
    k = spin_positions(n)[l]
    cur = LusztigDatum(n, c.values)
    for i in word[:k - 1]:
        while True:
            nxt = e_full(cur, i)
            if nxt is None:
                break
            cur = nxt
    return epsilon_full(cur, word[k - 1])
