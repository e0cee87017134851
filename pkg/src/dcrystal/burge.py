"""Burge correspondences between upper Lusztig data and tableaux with even
columns.

A datum unit at eps_i + eps_j (i < j) is the biletter ``(a, b) = (j, i)``
in bar notation.  ``kappa_se`` builds an anti-normal tableau by reverse
insertion, ``kappa_nw`` a normal one by column insertion.  Both run on the
shared kernel "column-insert x, then stack y under the new cell": the
anti-normal case in the 180-degree rotated frame, the normal case in the
ordinal frame.
"""

from dataclasses import dataclass, field

from dcrystal import _kernels
from dcrystal.pbw import LusztigDatum
from dcrystal.roots import Root, build_root_system
from dcrystal.tableaux import (
    EMPTY, Tableau, _from_ordinal_columns, _from_rotated_columns,
    _rotate_to_normal_columns, rectify, reverse_insert,
)

OMEGA = "omega"
OMEGA_PRIME = "omega_prime"


def _key(flag):
    if flag == OMEGA:
        return lambda p: (-p[0], p[1])
    if flag == OMEGA_PRIME:
        # equal bottoms run with the top letter decreasing in the alphabet,
        # the only tie order under which stacked dominoes stay strict
        return lambda p: (-p[1], p[0])
    raise ValueError("unknown biword order %r" % (flag,))


@dataclass(frozen=True)
class Biword:
    pairs: tuple
    order: str = OMEGA

    def __post_init__(self):
        pairs = tuple((int(a), int(b)) for a, b in self.pairs)
        object.__setattr__(self, "pairs", pairs)
        for a, b in pairs:
            if not a > b >= 1:
                raise ValueError("biletter (%d, %d) is not a pair a < b" % (a, b))
        key = _key(self.order)
        if any(key(p) > key(q) for p, q in zip(pairs, pairs[1:])):
            raise ValueError("biword is not sorted for the %s order" % self.order)

    def top(self):
        return tuple(a for a, _ in self.pairs)

    def bottom(self):
        return tuple(b for _, b in self.pairs)

    def __len__(self):
        return len(self.pairs)


def datum_to_biword(c, order=OMEGA):
    if any(c.values[c.roots.M:]):
        raise ValueError("datum is not supported on the sum roots")
    pairs = []
    for root, mult in zip(c.roots.positive_roots, c.values):
        if mult and root.kind == "sum":
            pairs += [(root.j, root.i)] * mult
    pairs.sort(key=_key(order))
    return Biword(tuple(pairs), order)


def biword_to_datum(biword, n):
    rs = build_root_system(n)
    vals = [0] * rs.N
    for a, b in biword.pairs:
        if a > n:
            raise ValueError("letter %d exceeds the rank %d" % (a, n))
        vals[rs.position(Root("sum", b, a))] += 1
    return LusztigDatum(n, tuple(vals), "upper")


# --- forward maps ------------------------------------------------------------

def _se_pairs(c):
    # rotated frame: insert b, stack a below; pairs consumed right to left
    return [(b, a) for a, b in reversed(datum_to_biword(c, OMEGA).pairs)]


def _nw_pairs(c):
    return [(-a, -b) for a, b in datum_to_biword(c, OMEGA_PRIME).pairs]


def kappa_se(c):
    cols = _kernels.domino_insert(_se_pairs(c))
    return _from_rotated_columns(cols)


def kappa_se_trace(c):
    """Intermediate anti-normal tableaux P_r, P_{r-1}, ..., P_1."""
    steps = []
    cols = []
    for x, y in _se_pairs(c):
        j = _kernels.column_insert(cols, x)
        cols[j].append(y)
        steps.append(_from_rotated_columns([list(col) for col in cols]))
    return steps


def kappa_nw_trace(c):
    """Intermediate normal tableaux after each inserted pair."""
    steps = []
    cols = []
    for x, y in _nw_pairs(c):
        j = _kernels.column_insert(cols, x)
        cols[j].append(y)
        steps.append(_from_ordinal_columns([list(col) for col in cols]))
    return steps


def kappa_nw(c):
    cols = _kernels.domino_insert(_nw_pairs(c))
    return _from_ordinal_columns(cols)


def lambda_of(c):
    return kappa_nw(c).shape()


# --- inverse maps --------------------------------------------------------------

def _undo_domino(cols, j):
    """Remove the bottom domino of column ``j`` and reverse the bumping.

    Returns ``(x, y, new_cols)``.
    """
    cols = [list(col) for col in cols]
    y = cols[j].pop()
    z = cols[j].pop()
    if not cols[j]:
        cols.pop(j)
    for k in range(j - 1, -1, -1):
        col = cols[k]
        p = max(q for q in range(len(col)) if col[q] <= z)
        col[p], z = z, col[p]
    return z, y, cols


def _removable(cols):
    out = []
    for j, col in enumerate(cols):
        if len(col) < 2:
            continue
        nxt = len(cols[j + 1]) if j + 1 < len(cols) else 0
        if len(col) - 2 >= nxt:
            out.append(j)
    return out


def _peel(cols, pick):
    """Undo every domino step; ``pick`` orders candidate pairs so that the
    most recently inserted one is the maximum."""
    pairs = []
    while cols:
        best = None
        for j in _removable(cols):
            x, y, rest = _undo_domino(cols, j)
            cand = (pick(x, y), j, x, y, rest)
            if best is None or cand[:2] > best[:2]:
                best = cand
        if best is None:
            raise ValueError("tableau is not in the image of the correspondence")
        _, _, x, y, cols = best
        pairs.append((x, y))
    return pairs[::-1]


def kappa_se_inv(t, n):
    if not (t.is_empty() or t.is_anti_normal()):
        raise ValueError("expected an anti-normal tableau")
    if not t.has_even_columns():
        raise ValueError("tableau has a column of odd length")
    cols = _rotate_to_normal_columns(t)
    pairs = _peel(cols, lambda x, y: (y, -x))
    biword = Biword(tuple(sorted(((y, x) for x, y in pairs), key=_key(OMEGA))), OMEGA)
    c = biword_to_datum(biword, n)
    if kappa_se(c) != t:
        raise ValueError("tableau is not in the image of the correspondence")
    return c


def kappa_nw_inv(t, n):
    if not (t.is_empty() or t.is_normal()):
        raise ValueError("expected a normal tableau")
    if not t.has_even_columns():
        raise ValueError("tableau has a column of odd length")
    cols = [[-x for x in col] for col in t.columns()]
    pairs = _peel(cols, lambda x, y: (y, -x))
    biword = Biword(tuple(sorted(((-x, -y) for x, y in pairs), key=_key(OMEGA_PRIME))),
                    OMEGA_PRIME)
    c = biword_to_datum(biword, n)
    if kappa_nw(c) != t:
        raise ValueError("tableau is not in the image of the correspondence")
    return c


# --- skew insertion and gluing ---------------------------------------------------

@dataclass(frozen=True)
class GlueResult:
    tableau: Tableau
    P: Tableau
    Q: Tableau
    T: Tableau
    moved: tuple = field(default=())


def _rows_from_bottom(t):
    """Anti-normal tableau rows, bottom first, each read left to right."""
    return [list(r) for r in reversed(t.rows)]


def _support_max_index(c):
    top = 0
    for root, mult in zip(c.roots.positive_roots, c.values):
        if mult:
            top = max(top, root.j)
    return top


def glue_T(c, i):
    """Assemble the tableau of a datum on the triangle of roots with indices
    at most i + 1 from the part below i and the bands recorded while
    inserting the rest."""
    n = c.n
    if not 1 <= i <= n - 1:
        raise ValueError("i must lie in 1..%d" % (n - 1))
    if any(c.values[c.roots.M:]) or _support_max_index(c) > i + 1:
        raise ValueError("datum is not supported on roots with indices <= %d" % (i + 1))
    pairs = datum_to_biword(c, OMEGA).pairs
    head = [p for p in pairs if p[0] >= i]
    tail = [p for p in pairs if p[0] < i]
    rs = build_root_system(n)
    vals = [0] * rs.N
    for a, b in tail:
        vals[rs.position(Root("sum", b, a))] += 1
    T = kappa_se(LusztigDatum(n, tuple(vals), "upper"))

    # reverse-insert b_s, ..., b_1 and record a_k in each new cell
    P = T
    q_cells = {}
    for a, b in reversed(head):
        before = _anchored_cells(P)
        P = reverse_insert(P, b)
        (new,) = set(_anchored_cells(P)) - set(before)
        q_cells[new] = a

    lam = [len(r) for r in _rows_from_bottom(P)]
    mu = [len(r) for r in _rows_from_bottom(T)]
    mu += [0] * (len(lam) - len(mu) + 2)
    width = lam[0] if lam else 0
    Q = _cells_to_tableau(q_cells, width)
    P_rows = _rows_from_bottom(P)

    m = (len(lam) + 1) // 2
    bands = []
    for l in range(1, m + 1):
        lo, hi = 2 * l - 2, 2 * l - 1
        v_rows = []
        for r in (hi, lo):
            row = [q_cells[(r, k)] for k in range(width) if (r, k) in q_cells]
            v_rows.append(list(reversed(row)))  # left to right
        v_top, v_bot = v_rows
        V = Tableau((tuple(v_top), tuple(v_bot)),
                    tuple(width - (lam[r] if r < len(lam) else 0) for r in (hi, lo)))
        rect = rectify(V) if V.size() else EMPTY
        r_rows = [list(r) for r in rect.rows] + [[], []]
        top = r_rows[0] + (P_rows[hi] if hi < len(P_rows) else [])
        bot = r_rows[1] + (P_rows[lo] if lo < len(P_rows) else [])
        if len(top) != len(bot):
            raise ValueError("band %d is not a rectangle" % l)
        bands.append([top, bot])

    moved = []
    for l in range(m, 1, -1):
        band = bands[l - 1]
        room = mu[2 * l - 4] - mu[2 * l - 2]
        excess = (len(band[0]) - mu[2 * l - 2]) - room
        if excess > 0:
            dominoes = list(zip(band[0][:excess], band[1][:excess]))
            if any(d != (i + 1, i) for d in dominoes):
                raise ValueError("band %d cannot shed %d dominoes" % (l, excess))
            band[0] = band[0][excess:]
            band[1] = band[1][excess:]
            lower = bands[l - 2]
            lower[0] = [i + 1] * excess + lower[0]
            lower[1] = [i] * excess + lower[1]
            moved.append((l, excess))

    rows = []
    for band in reversed(bands):
        rows += [band[0], band[1]]
    glued = Tableau.anti_normal([r for r in rows if r])
    return GlueResult(glued, P, Q, T, tuple(moved))


def _anchored_cells(t):
    """Cells of an anti-normal tableau as (row from bottom, column from right)."""
    rows = _rows_from_bottom(t)
    return [(r, k) for r, row in enumerate(rows) for k in range(len(row))]


def _cells_to_tableau(cells, width):
    if not cells:
        return EMPTY
    height = max(r for r, _ in cells) + 1
    rows, offsets = [], []
    for r in range(height - 1, -1, -1):
        ks = sorted((k for (rr, k) in cells if rr == r), reverse=True)
        rows.append(tuple(cells[(r, k)] for k in ks))
        offsets.append(width - 1 - ks[0] if ks else width)
    return Tableau(tuple(rows), tuple(offsets))
