"""Semistandard tableaux over the alphabet n-bar < ... < 1-bar.

Entries are stored as the integer ``k`` for the letter k-bar, so the
alphabet order is the reverse of the integer order: rows weakly decrease
and columns strictly decrease as integers.  Internally the insertion and
sliding code works in the *ordinal* frame ``-k`` where the order is the
usual one.

A ``Tableau`` is a skew shape given by row contents and the column offset
at which each row starts.  Normal tableaux are left-justified; anti-normal
ones are right-justified with row lengths weakly increasing downward.
"""

from dataclasses import dataclass

from dcrystal import _kernels


class NotSemistandard(ValueError):
    pass


@dataclass(frozen=True)
class Tableau:
    rows: tuple
    offsets: tuple

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in row) for row in self.rows)
        offsets = tuple(int(x) for x in self.offsets)
        if len(rows) != len(offsets):
            raise ValueError("rows and offsets differ in length")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "offsets", offsets)

    # construction ---------------------------------------------------------
    @classmethod
    def normal(cls, rows):
        rows = [tuple(r) for r in rows if len(r)]
        return cls(tuple(rows), (0,) * len(rows))

    @classmethod
    def anti_normal(cls, rows):
        rows = [tuple(r) for r in rows if len(r)]
        width = max((len(r) for r in rows), default=0)
        return cls(tuple(rows), tuple(width - len(r) for r in rows))

    @classmethod
    def from_cells(cls, cells):
        if not cells:
            return cls((), ())
        r0 = min(r for r, _ in cells)
        r1 = max(r for r, _ in cells)
        rows, offsets = [], []
        for r in range(r0, r1 + 1):
            cs = sorted(c for rr, c in cells if rr == r)
            if cs and cs[-1] - cs[0] + 1 != len(cs):
                raise ValueError("row %d is not contiguous" % r)
            rows.append(tuple(cells[(r, c)] for c in cs))
            offsets.append(cs[0] if cs else 0)
        return cls(tuple(rows), tuple(offsets))

    # views ----------------------------------------------------------------
    def cells(self):
        return {(r, off + k): x
                for r, (row, off) in enumerate(zip(self.rows, self.offsets))
                for k, x in enumerate(row)}

    def size(self):
        return sum(len(r) for r in self.rows)

    def is_empty(self):
        return self.size() == 0

    def width(self):
        return max((o + len(r) for r, o in zip(self.rows, self.offsets)), default=0)

    def row_lengths(self):
        return tuple(len(r) for r in self.rows)

    def is_normal(self):
        lens = self.row_lengths()
        return all(o == 0 for o in self.offsets) and all(
            a >= b for a, b in zip(lens, lens[1:])) and all(lens)

    def is_anti_normal(self):
        lens = self.row_lengths()
        w = self.width()
        return all(o + len(r) == w for r, o in zip(self.rows, self.offsets)) and all(
            a <= b for a, b in zip(lens, lens[1:])) and all(lens)

    def shape(self):
        """Partition of the straight shape (sorted row lengths)."""
        return tuple(sorted((len(r) for r in self.rows if r), reverse=True))

    def columns(self):
        """Columns left to right, each listed top to bottom."""
        cols = {}
        for (r, c), x in sorted(self.cells().items()):
            cols.setdefault(c, []).append(x)
        return [cols[c] for c in sorted(cols)]

    def num_columns(self):
        return len({c for _, c in self.cells()})

    def column_lengths(self):
        return [len(col) for col in self.columns()]

    def weight(self, n):
        w = [0] * n
        for row in self.rows:
            for x in row:
                w[x - 1] -= 1
        return tuple(w)

    def is_semistandard(self):
        cells = self.cells()
        for (r, c), x in cells.items():
            right = cells.get((r, c + 1))
            if right is not None and right > x:
                return False
            below = cells.get((r + 1, c))
            if below is not None and below >= x:
                return False
        return True

    def is_skew_shape(self):
        """Whether the cells form a skew diagram (normal or rotated)."""
        cells = self.cells()
        for (r, c) in cells:
            for (r2, c2) in cells:
                if r2 >= r and c2 >= c:
                    for rr in range(r, r2 + 1):
                        for cc in range(c, c2 + 1):
                            if (rr, cc) not in cells:
                                return False
        return True

    def has_even_columns(self):
        return all(h % 2 == 0 for h in self.column_lengths())

    def to_json(self):
        orient = "normal" if self.is_normal() else (
            "anti-normal" if self.is_anti_normal() else "skew")
        return {"orientation": orient,
                "rows": [list(r) for r in self.rows],
                "offsets": list(self.offsets),
                "shape": list(self.shape())}

    @classmethod
    def from_json(cls, obj):
        rows = obj["rows"]
        if "offsets" in obj:
            return cls(tuple(tuple(r) for r in rows), tuple(obj["offsets"]))
        if obj.get("orientation") == "anti-normal":
            return cls.anti_normal(rows)
        return cls.normal(rows)

    def pretty(self):
        w = self.width()
        size = max((len(str(x)) for r in self.rows for x in r), default=1)
        lines = []
        for row, off in zip(self.rows, self.offsets):
            cells = ["." * size] * off + [str(x).rjust(size) for x in row]
            cells += ["." * size] * (w - off - len(row))
            lines.append(" ".join(cells))
        return "\n".join(lines)


EMPTY = Tableau((), ())


def row_word(t):
    """Rows top to bottom, each read right to left."""
    return tuple(x for row in t.rows for x in reversed(row))


def _refill(t, word):
    """Same cells as ``t`` filled by ``word`` in row-reading order."""
    it = iter(word)
    rows = []
    for row in t.rows:
        vals = [next(it) for _ in row]
        rows.append(tuple(reversed(vals)))
    return Tableau(tuple(rows), t.offsets)


# --- normal-frame column insertion ---------------------------------------

def _to_ordinal_columns(t):
    return [[-x for x in col] for col in t.columns()]


def _from_ordinal_columns(cols):
    height = max((len(c) for c in cols), default=0)
    rows = [[-cols[j][r] for j in range(len(cols)) if len(cols[j]) > r]
            for r in range(height)]
    return Tableau.normal(rows)


def column_insert(t, a):
    """Column-insert the letter ``a`` into a normal tableau."""
    if not (t.is_empty() or t.is_normal()):
        raise ValueError("column insertion needs a normal tableau")
    cols = _to_ordinal_columns(t)
    _kernels.column_insert(cols, -a)
    return _from_ordinal_columns(cols)


def insertion_tableau(word):
    """Insert ``word[0]`` first, then ``word[1]``, and so on."""
    cols = []
    for a in word:
        _kernels.column_insert(cols, -a)
    return _from_ordinal_columns(cols)


# --- rotated frame ------------------------------------------------------------

def _rotate_to_normal_columns(t):
    """Anti-normal tableau turned 180 degrees; entries keep the value k,
    which is increasing in the rotated frame."""
    return [list(reversed(col)) for col in reversed(t.columns())]


def _from_rotated_columns(cols):
    height = max((len(c) for c in cols), default=0)
    rows = [[cols[j][r] for j in range(len(cols)) if len(cols[j]) > r]
            for r in range(height)]
    rows = [list(reversed(r)) for r in reversed(rows)]
    return Tableau.anti_normal(rows)


def reverse_insert(t, b):
    """Insert ``b`` into an anti-normal tableau from the right."""
    if not (t.is_empty() or t.is_anti_normal()):
        raise ValueError("reverse insertion needs an anti-normal tableau")
    cols = _rotate_to_normal_columns(t)
    _kernels.column_insert(cols, b)
    return _from_rotated_columns(cols)


def reverse_insertion_tableau(word):
    """((w_r <- w_{r-1}) <- ...) <- w_1."""
    cols = []
    for b in reversed(word):
        _kernels.column_insert(cols, b)
    return _from_rotated_columns(cols)


# --- jeu de taquin --------------------------------------------------------------

def _jdt(rows, offsets, order):
    """Rectify a skew filling given in the ordinal frame.

    Row ``r`` occupies columns ``offsets[r] .. offsets[r] + len(rows[r]) - 1``;
    both the offsets and the row ends must weakly decrease downward.
    """
    H = len(rows)
    inner = list(offsets)
    outer = [o + len(r) for o, r in zip(offsets, rows)]
    if any(a < b for a, b in zip(inner, inner[1:])) or any(
            a < b for a, b in zip(outer, outer[1:])):
        raise ValueError("not a skew shape")
    cells = {(r, inner[r] + k): x for r in range(H) for k, x in enumerate(rows[r])}
    while any(inner):
        corners = [r for r in range(H)
                   if inner[r] > 0 and (r + 1 == H or inner[r + 1] < inner[r])]
        r = corners[0] if order == "first" else corners[-1]
        inner[r] -= 1
        hr, hc = r, inner[r]
        while True:
            below = cells.get((hr + 1, hc))
            right = cells.get((hr, hc + 1))
            if below is None and right is None:
                break
            if right is None or (below is not None and below <= right):
                cells[(hr, hc)] = cells.pop((hr + 1, hc))
                hr += 1
            else:
                cells[(hr, hc)] = cells.pop((hr, hc + 1))
                hc += 1
        outer[hr] -= 1
    return [[cells[(r, c)] for c in range(outer[r])] for r in range(H) if outer[r]]


def rectify(t, order="first"):
    """Jeu de taquin to a normal tableau; ``order`` picks which inner corner
    is vacated first."""
    if t.is_empty():
        return EMPTY
    rows = _jdt([[-x for x in row] for row in t.rows], t.offsets, order)
    return Tableau.normal([[-x for x in row] for row in rows])


def anti_rectify(t, order="first"):
    """Jeu de taquin to an anti-normal tableau."""
    if t.is_empty():
        return EMPTY
    W = t.width()
    rows = [list(reversed(row)) for row in reversed(t.rows)]
    offsets = [W - o - len(row) for row, o in zip(reversed(t.rows), reversed(t.offsets))]
    # in the rotated frame the integer k already runs in increasing order
    rect = _jdt(rows, offsets, order)
    return Tableau.anti_normal([list(reversed(row)) for row in reversed(rect)])


def knuth_equivalent(u, v):
    return insertion_tableau(u) == insertion_tableau(v)


# --- type A crystal on words -----------------------------------------------

def _word_bracket(word, i):
    """Indices of unmatched i+1 letters (plus) and unmatched i letters
    (minus) under the tensor rule."""
    open_plus = []
    minus = []
    for k, x in enumerate(word):
        if x == i + 1:
            open_plus.append(k)
        elif x == i:
            if open_plus:
                open_plus.pop()
            else:
                minus.append(k)
    return open_plus, minus


def word_f(word, i):
    plus, _ = _word_bracket(word, i)
    if not plus:
        return None
    w = list(word)
    w[plus[0]] = i
    return tuple(w)


def word_e(word, i):
    _, minus = _word_bracket(word, i)
    if not minus:
        return None
    w = list(word)
    w[minus[-1]] = i + 1
    return tuple(w)


def word_epsilon(word, i):
    return len(_word_bracket(word, i)[1])


def word_phi(word, i):
    return len(_word_bracket(word, i)[0])


def tableau_f(t, i):
    w = word_f(row_word(t), i)
    return None if w is None else _refill(t, w)


def tableau_e(t, i):
    w = word_e(row_word(t), i)
    return None if w is None else _refill(t, w)


# --- the spin-node operator on anti-normal tableaux -------------------------

def _columns_from_right(t):
    return list(reversed(t.columns()))


def _anti_normal_from_right_columns(cols):
    cols = [c for c in cols if c]
    height = max((len(c) for c in cols), default=0)
    rows = []
    for r in range(height):
        # row r from the top; column q has its entries in its bottom rows
        row = []
        for col in reversed(cols):
            k = r - (height - len(col))
            if k >= 0:
                row.append(col[k])
        rows.append(row)
    t = Tableau.anti_normal(rows)
    if not (t.is_empty() or t.is_anti_normal()) or not t.is_semistandard():
        raise NotSemistandard("operator left the anti-normal tableaux")
    return t


def _se_signature(t, n):
    signs, counts = [], []
    for col in _columns_from_right(t):
        if col[0] < n - 1:
            signs.append(1)
            counts.append(1)
        elif len(col) >= 2 and col[0] == n and col[1] == n - 1:
            signs.append(-1)
            counts.append(1)
        else:
            signs.append(1)
            counts.append(0)
    return signs, counts


def _require_anti_normal(t):
    if not (t.is_empty() or t.is_anti_normal()):
        raise ValueError("expected an anti-normal tableau")


def f_n_se(t, n):
    _require_anti_normal(t)
    signs, counts = _se_signature(t, n)
    _, _, _, first_plus = _kernels.reduce_runs(signs, counts)
    cols = [list(c) for c in _columns_from_right(t)]
    if first_plus < 0:
        cols.append([n, n - 1])
    else:
        cols[first_plus] = [n, n - 1] + cols[first_plus]
    return _anti_normal_from_right_columns(cols)


def e_n_se(t, n):
    _require_anti_normal(t)
    signs, counts = _se_signature(t, n)
    _, _, last_minus, _ = _kernels.reduce_runs(signs, counts)
    if last_minus < 0:
        return None
    cols = [list(c) for c in _columns_from_right(t)]
    cols[last_minus] = cols[last_minus][2:]
    return _anti_normal_from_right_columns(cols)


def epsilon_n_se(t, n):
    _require_anti_normal(t)
    return _kernels.reduce_runs(*_se_signature(t, n))[0]


# --- the affine-node operator on normal tableaux ------------------------------

def _nw_signature(t):
    # listed as (sigma_W, ..., sigma_1): the first column sits rightmost
    signs, counts = [], []
    for col in reversed(t.columns()):
        if col[-1] > 2:
            signs.append(-1)
            counts.append(1)
        elif len(col) >= 2 and col[-2] == 2 and col[-1] == 1:
            signs.append(1)
            counts.append(1)
        else:
            signs.append(1)
            counts.append(0)
    return signs, counts


def _normal_from_columns(cols):
    cols = [c for c in cols if c]
    height = max((len(c) for c in cols), default=0)
    rows = [[col[r] for col in cols if len(col) > r] for r in range(height)]
    t = Tableau.normal(rows)
    if not (t.is_empty() or t.is_normal()) or not t.is_semistandard():
        raise NotSemistandard("operator left the normal tableaux")
    # rows must be left-justified without gaps
    if any(len(cols[j]) > len(cols[j - 1]) for j in range(1, len(cols))):
        raise NotSemistandard("operator broke the normal shape")
    return t


def _require_normal(t):
    if not (t.is_empty() or t.is_normal()):
        raise ValueError("expected a normal tableau")


def e_0_nw(t):
    _require_normal(t)
    signs, counts = _nw_signature(t)
    _, _, last_minus, _ = _kernels.reduce_runs(signs, counts)
    cols = [list(c) for c in t.columns()]
    if last_minus < 0:
        cols.append([2, 1])
    else:
        k = len(cols) - 1 - last_minus
        cols[k] = cols[k] + [2, 1]
    return _normal_from_columns(cols)


def f_0_nw(t):
    _require_normal(t)
    signs, counts = _nw_signature(t)
    _, _, _, first_plus = _kernels.reduce_runs(signs, counts)
    if first_plus < 0:
        return None
    cols = [list(c) for c in t.columns()]
    k = len(cols) - 1 - first_plus
    cols[k] = cols[k][:-2]
    return _normal_from_columns(cols)


def phi_0_nw(t):
    _require_normal(t)
    return _kernels.reduce_runs(*_nw_signature(t))[1]
