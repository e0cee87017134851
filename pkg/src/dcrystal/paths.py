"""Paths in the triangle of sum roots.

Cell ``(r, m)`` (row ``r`` from the top, column ``m`` from the left, both
1-based) holds eps_i + eps_j with ``j = n - m + 1`` and ``i = r - m + 1``.
Its children are ``(r + 1, m)`` and ``(r + 1, m + 1)``.
"""

from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple

from dcrystal import _kernels
from dcrystal.roots import Root, build_root_system


class Cell(NamedTuple):
    r: int
    m: int


def cell_to_root(n, cell):
    r, m = cell
    if not (1 <= r <= n - 1 and 1 <= m <= r):
        raise ValueError("cell %r outside the triangle of rank %d" % (tuple(cell), n))
    return Root("sum", r - m + 1, n - m + 1)


def root_to_cell(n, root):
    if root.kind != "sum":
        raise ValueError("only sum roots live in the triangle")
    return Cell(n - root.j + root.i, n - root.j + 1)


@lru_cache(maxsize=None)
def cell_positions(n):
    """Map cell -> coordinate index in the convex order."""
    idx = build_root_system(n).index
    return {Cell(r, m): idx[cell_to_root(n, (r, m))]
            for r in range(1, n) for m in range(1, r + 1)}


def all_cells(n):
    return [Cell(r, m) for r in range(1, n) for m in range(1, r + 1)]


def triangle_rows(c):
    """Upper datum as rows of the triangle, top to bottom."""
    pos = cell_positions(c.n)
    return [[c.values[pos[Cell(r, m)]] for m in range(1, r + 1)]
            for r in range(1, c.n)]


def from_triangle_rows(rows):
    from dcrystal.pbw import LusztigDatum

    n = len(rows) + 1
    if n < 4:
        raise ValueError("a triangle needs at least 3 rows")
    pos = cell_positions(n)
    M = build_root_system(n).M
    vals = [0] * (2 * M)
    for r, row in enumerate(rows, start=1):
        if len(row) != r:
            raise ValueError("row %d has %d entries, expected %d" % (r, len(row), r))
        for m, x in enumerate(row, start=1):
            if int(x) != x or x < 0:
                raise ValueError("entry at row %d, column %d is not a nonnegative integer"
                                 % (r, m))
            vals[pos[Cell(r, m)]] = int(x)
    return LusztigDatum(n, tuple(vals), "upper")


# --- double paths ------------------------------------------------------------

@dataclass(frozen=True)
class DoublePath:
    left: tuple
    right: tuple

    @property
    def start(self):
        return self.left[0]

    def cells(self):
        return frozenset(self.left) | frozenset(self.right)

    def to_json(self):
        return {"left": [list(c) for c in self.left],
                "right": [list(c) for c in self.right]}


def _is_valid_double_path(n, p):
    a, b = p.left, p.right
    if len(a) != len(b) or len(a) < 2 or a[0] != b[0]:
        return False
    for k in range(1, len(a)):
        if a[k].r != b[k].r or a[k].m >= b[k].m:
            return False
        for path in (a, b):
            if path[k].r != path[k - 1].r + 1 or path[k].m - path[k - 1].m not in (0, 1):
                return False
    return a[-1].r == n - 1 and b[-1].m == a[-1].m + 1


@lru_cache(maxsize=None)
def _double_paths_from(n, start):
    r0, m0 = start
    out = []

    def grow(left, right):
        last_l, last_r = left[-1], right[-1]
        if last_l.r == n - 1:
            if last_r.m == last_l.m + 1:
                out.append(DoublePath(tuple(left), tuple(right)))
            return
        for dl in (0, 1):
            for dr in (0, 1):
                nl = Cell(last_l.r + 1, last_l.m + dl)
                nr = Cell(last_r.r + 1, last_r.m + dr)
                if nl.m < nr.m:
                    grow(left + [nl], right + [nr])

    if r0 <= n - 2:
        s = Cell(r0, m0)
        grow([s, Cell(r0 + 1, m0)], [s, Cell(r0 + 1, m0 + 1)])
    return tuple(out)


def enumerate_double_paths(n, start=None):
    """Double paths from ``start``, or from every cell when ``start`` is None."""
    if start is None:
        return [p for cell in all_cells(n) for p in _double_paths_from(n, Cell(*cell))]
    start = Cell(*start)
    cell_to_root(n, start)
    return list(_double_paths_from(n, start))


def path_weight(c, path):
    pos = cell_positions(c.n)
    return sum(c.values[pos[cell]] for cell in path.cells())


def _pack(groups):
    flat, offsets = [], [0]
    for g in groups:
        flat.extend(g)
        offsets.append(len(flat))
    return tuple(flat), tuple(offsets)


@lru_cache(maxsize=None)
def top_path_index_sets(n):
    """Coordinate groups for the double paths at the top cell."""
    pos = cell_positions(n)
    groups = [sorted(pos[x] for x in p.cells())
              for p in _double_paths_from(n, Cell(1, 1))]
    return _pack(groups)


@lru_cache(maxsize=None)
def all_path_index_sets(n):
    pos = cell_positions(n)
    groups = [sorted(pos[x] for x in p.cells()) for p in enumerate_double_paths(n)]
    return _pack(groups)


def epsilon_star_n(c):
    """Maximum double-path weight; equals the star epsilon for node n."""
    flat, offsets = top_path_index_sets(c.n)
    return _kernels.max_subset_sum(c.values, flat, offsets)[0]


def epsilon_star_n_all_starts(c):
    flat, offsets = all_path_index_sets(c.n)
    return _kernels.max_subset_sum(c.values, flat, offsets)[0]


def maximizing_double_path(c):
    flat, offsets = top_path_index_sets(c.n)
    best, arg = _kernels.max_subset_sum(c.values, flat, offsets)
    return best, _double_paths_from(c.n, Cell(1, 1))[arg]


# --- tuples of disjoint double paths ---------------------------------------

def _path_or_cell(n, row):
    if row == n - 1:
        # a double path started on the bottom row degenerates to one cell
        return [frozenset([Cell(row, m)]) for m in range(1, row + 1)]
    return [p.cells() for m in range(1, row + 1)
            for p in _double_paths_from(n, Cell(row, m))]


@lru_cache(maxsize=None)
def disjoint_tuples(n, l):
    """Cell sets of l-tuples of pairwise disjoint double paths, the k-th one
    starting in row 2k - 1."""
    if not 1 <= l <= n // 2:
        raise ValueError("l must lie in 1..%d" % (n // 2))
    options = [_path_or_cell(n, 2 * k - 1) for k in range(1, l + 1)]
    found = set()

    def extend(k, used):
        if k == l:
            found.add(used)
            return
        for cells in options[k]:
            if not used & cells:
                extend(k + 1, used | cells)

    extend(0, frozenset())
    return tuple(sorted(found, key=lambda s: sorted(s)))


@lru_cache(maxsize=None)
def disjoint_index_sets(n, l):
    pos = cell_positions(n)
    return _pack([sorted(pos[x] for x in cells) for cells in disjoint_tuples(n, l)])


def max_nonintersecting(c, l):
    if l == 0:
        return 0
    flat, offsets = disjoint_index_sets(c.n, l)
    return _kernels.max_subset_sum(c.values, flat, offsets)[0]


def shape_from_paths(c):
    """Partition read off from successive maxima over disjoint tuples."""
    parts = []
    prev = 0
    for l in range(1, c.n // 2 + 1):
        cur = max_nonintersecting(c, l)
        parts += [cur - prev] * 2
        prev = cur
    return tuple(p for p in parts if p)


def polytope_inequalities(n):
    """Cell sets whose weights bound the star epsilon; one per double path."""
    return [p.cells() for p in enumerate_double_paths(n)]


def in_BJs(c, s):
    return epsilon_star_n(c) <= s
