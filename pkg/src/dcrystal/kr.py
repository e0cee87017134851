"""The level-s affine crystal on upper Lusztig data and its tableau model.

Vertices on the Lusztig side are upper data with star epsilon at most ``s``.
The Levi nodes act by the regular signature rule, node ``n`` adds or removes
a unit at alpha_n and node ``0`` removes or adds a unit at eps_1 + eps_2.
Results that leave the level-s set are cut off (``None``).

The tableau side uses normal tableaux with even columns, at most ``n`` rows
and at most ``s`` columns.
"""

import itertools
import json
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from dcrystal import _kernels
from dcrystal.burge import kappa_nw
from dcrystal.paths import epsilon_star_n, top_path_index_sets
from dcrystal.pbw import (
    LusztigDatum, e_J, epsilon_J, f_J, pairing, phi_J, weight,
)
from dcrystal.roots import Root, build_root_system, simple_root
from dcrystal.tableaux import (
    Tableau, anti_rectify, e_0_nw, e_n_se, f_0_nw, f_n_se, rectify,
    tableau_e, tableau_f, word_epsilon, word_phi, row_word,
)


class NotInLevel(ValueError):
    pass


def _theta_root():
    return Root("sum", 1, 2)


def _level_ok(c, s):
    return epsilon_star_n(c) <= s


def _require_level(c, s):
    if any(c.values[c.roots.M:]) or not _level_ok(c, s):
        raise NotInLevel("datum does not lie in the level-%d set" % s)


def f_affine(c, i, s):
    _require_level(c, s)
    n = c.n
    if 1 <= i < n:
        return f_J(c, i)
    if i == n:
        out = c.add(simple_root(n, n), 1)
        return out if _level_ok(out, s) else None
    if i == 0:
        return c.add(_theta_root(), -1)
    raise ValueError("node %r outside 0..%d" % (i, n))


def e_affine(c, i, s):
    _require_level(c, s)
    n = c.n
    if 1 <= i < n:
        return e_J(c, i)
    if i == n:
        return c.add(simple_root(n, n), -1)
    if i == 0:
        out = c.add(_theta_root(), 1)
        return out if _level_ok(out, s) else None
    raise ValueError("node %r outside 0..%d" % (i, n))


def affine_weight(c, s):
    """wt(c) + s * varpi_n, doubled to stay integral."""
    return tuple(2 * w + s for w in weight(c))


def _pair2(wt2, i, n):
    val = pairing(wt2, i, n)
    if val % 2:
        raise ValueError("weight is not integral at node %d" % i)
    return val // 2


def epsilon_affine(c, i, s):
    n = c.n
    if 1 <= i < n:
        return epsilon_J(c, i)
    if i == n:
        return c[simple_root(n, n)]
    return c[_theta_root()] - _pair2(affine_weight(c, s), 0, n)


def phi_affine(c, i, s):
    n = c.n
    if 1 <= i < n:
        return phi_J(c, i)
    if i == 0:
        return c[_theta_root()]
    return epsilon_affine(c, i, s) + _pair2(affine_weight(c, s), i, n)


# --- enumeration ---------------------------------------------------------------

def enumerate_BJs(n, s):
    """All upper data with star epsilon at most s, in lexicographic order of
    their upper coordinates."""
    M = build_root_system(n).M
    flat, offsets = top_path_index_sets(n)
    grid = np.array(list(itertools.product(range(s + 1), repeat=M)), dtype=np.int64)
    full = np.zeros((grid.shape[0], 2 * M), dtype=np.int64)
    full[:, :M] = grid
    full = np.ascontiguousarray(full)
    eps = _kernels.max_subset_sum_batch(full, flat, offsets)
    keep = grid[eps <= s]
    return [LusztigDatum.from_upper(n, tuple(int(x) for x in row)) for row in keep]


def weyl_dimension(n, highest):
    """Dimension of the irreducible D_n module with the given highest weight
    (eps-coordinates, possibly half-integral)."""
    rho = [Fraction(n - k) for k in range(1, n + 1)]
    lam = [Fraction(x) for x in highest]
    num = Fraction(1)
    den = Fraction(1)
    for i in range(n):
        for j in range(i + 1, n):
            for sgn in (1, -1):
                num *= (lam[i] + rho[i]) + sgn * (lam[j] + rho[j])
                den *= rho[i] + sgn * rho[j]
    value = num / den
    if value.denominator != 1:
        raise ArithmeticError("non-integral dimension")
    return int(value)


def spin_multiple(n, s):
    return tuple(Fraction(s, 2) for _ in range(n))


def even_column_tableaux(n, s):
    """Normal semistandard tableaux with entries 1..n (as bar letters), all
    column lengths even, at most ``s`` columns."""
    columns_by_height = {h: [tuple(sorted(comb, reverse=True))
                             for comb in itertools.combinations(range(1, n + 1), h)]
                         for h in range(2, n + 1, 2)}
    out = []

    def extend(cols):
        out.append(_tableau_from_columns(cols))
        if len(cols) == s:
            return
        max_h = len(cols[-1]) if cols else n
        for h in range(2, max_h + 1, 2):
            for col in columns_by_height[h]:
                if cols and any(col[r] > cols[-1][r] for r in range(h)):
                    continue
                extend(cols + [col])

    extend([])
    return out


def _tableau_from_columns(cols):
    height = max((len(c) for c in cols), default=0)
    rows = [[c[r] for c in cols if len(c) > r] for r in range(height)]
    return Tableau.normal(rows)


# --- tableau-side operators ----------------------------------------------------

def tableau_f_affine(t, i, n, s):
    if 1 <= i < n:
        return tableau_f(t, i)
    if i == 0:
        return f_0_nw(t)
    if i == n:
        out = f_n_se(anti_rectify(t) if not t.is_empty() else t, n)
        out = rectify(out)
        return out if out.num_columns() <= s else None
    raise ValueError("node %r outside 0..%d" % (i, n))


def tableau_e_affine(t, i, n, s):
    if 1 <= i < n:
        return tableau_e(t, i)
    if i == 0:
        out = e_0_nw(t)
        return out if out.num_columns() <= s else None
    if i == n:
        out = e_n_se(anti_rectify(t) if not t.is_empty() else t, n)
        return None if out is None else rectify(out)
    raise ValueError("node %r outside 0..%d" % (i, n))


# --- graphs --------------------------------------------------------------------------

@dataclass
class AffineCrystalGraph:
    n: int
    s: int
    side: str
    vertices: list
    edges: list = field(default_factory=list)   # (source index, node, target index)

    def index(self):
        return {v: k for k, v in enumerate(self.vertices)}

    def edge_set(self):
        return set(self.edges)

    def label(self, k):
        v = self.vertices[k]
        if self.side == "lusztig":
            from dcrystal.paths import triangle_rows
            return json.dumps(triangle_rows(v), separators=(",", ":"))
        return json.dumps([list(r) for r in v.rows], separators=(",", ":"))

    def to_dot(self):
        lines = ["digraph kr_%d_%d {" % (self.n, self.s)]
        for k in range(len(self.vertices)):
            lines.append('  v%d [label="%s"];' % (k, self.label(k).replace('"', '\\"')))
        for a, i, b in sorted(self.edges):
            lines.append('  v%d -> v%d [label="%d"];' % (a, b, i))
        lines.append("}")
        return "\n".join(lines)

    def to_json(self):
        return {"n": self.n, "s": self.s, "side": self.side,
                "vertices": [self.label(k) for k in range(len(self.vertices))],
                "edges": [list(e) for e in sorted(self.edges)]}


def crystal_graph(n, s, side="lusztig"):
    if side == "lusztig":
        verts = enumerate_BJs(n, s)
        op = lambda v, i: f_affine(v, i, s)
    elif side == "tableau":
        verts = sorted(even_column_tableaux(n, s), key=_tableau_sort_key)
        op = lambda v, i: tableau_f_affine(v, i, n, s)
    else:
        raise ValueError("side must be 'lusztig' or 'tableau'")
    g = AffineCrystalGraph(n, s, side, verts)
    idx = g.index()
    for k, v in enumerate(verts):
        for i in range(n + 1):
            w = op(v, i)
            if w is None:
                continue
            if w not in idx:
                raise AssertionError("operator %d left the vertex set" % i)
            g.edges.append((k, i, idx[w]))
    return g


def _tableau_sort_key(t):
    return (t.size(), t.rows)


def isomorphic_under(g, h, mapping):
    """Whether ``mapping`` (vertex of g -> vertex of h) is a bijection that
    carries labeled edges onto labeled edges."""
    hidx = h.index()
    images = []
    for v in g.vertices:
        w = mapping(v)
        if w not in hidx:
            return False
        images.append(hidx[w])
    if len(set(images)) != len(h.vertices) or len(images) != len(h.vertices):
        return False
    mapped = {(images[a], i, images[b]) for a, i, b in g.edges}
    return mapped == h.edge_set()


def kr_isomorphism(n, s):
    g = crystal_graph(n, s, "lusztig")
    h = crystal_graph(n, s, "tableau")
    return isomorphic_under(g, h, kappa_nw), g, h


def string_lengths(v, i, f, e):
    up = 0
    cur = v
    while True:
        cur = e(cur, i)
        if cur is None:
            break
        up += 1
    down = 0
    cur = v
    while True:
        cur = f(cur, i)
        if cur is None:
            break
        down += 1
    return up, down


def regularity_failures(n, s):
    """Vertices and nodes where string lengths disagree with epsilon/phi."""
    bad = []
    for c in enumerate_BJs(n, s):
        for i in range(n + 1):
            up, down = string_lengths(c, i, lambda v, j: f_affine(v, j, s),
                                      lambda v, j: e_affine(v, j, s))
            if (up, down) != (epsilon_affine(c, i, s), phi_affine(c, i, s)):
                bad.append((c, i))
    return bad


def tableau_regularity_failures(n, s):
    bad = []
    for t in even_column_tableaux(n, s):
        for i in range(n + 1):
            up, down = string_lengths(t, i, lambda v, j: tableau_f_affine(v, j, n, s),
                                      lambda v, j: tableau_e_affine(v, j, n, s))
            if 1 <= i < n:
                w = row_word(t)
                if (up, down) != (word_epsilon(w, i), word_phi(w, i)):
                    bad.append((t, i))
            elif up < 0 or down < 0:
                bad.append((t, i))
    return bad


def check_embedding(n, s, t):
    """The level-s set sits inside the level-t set as a full subcrystal:
    operators agree wherever the level-s operator is defined, and the
    level-s operator is defined whenever the level-t result stays at level s."""
    if s > t:
        raise ValueError("need s <= t")
    small = enumerate_BJs(n, s)
    for c in small:
        for i in range(n + 1):
            for op in (f_affine, e_affine):
                a = op(c, i, s)
                b = op(c, i, t)
                if a is not None and a != b:
                    return False
                if a is None and b is not None and _level_ok(b, s):
                    return False
    return True


def cap_fire_counts(n, s):
    """How often each capped operator is cut off on the level-s set."""
    e0 = fn = 0
    for c in enumerate_BJs(n, s):
        if e_affine(c, 0, s) is None:
            e0 += 1
        if f_affine(c, n, s) is None:
            fn += 1
    return {"e0": e0, "fn": fn}


def classical_component(n, s):
    """Vertices reachable from the zero datum using nodes 1..n only."""
    start = LusztigDatum.zero(n, "upper")
    seen = {start}
    stack = [start]
    while stack:
        c = stack.pop()
        for i in range(1, n + 1):
            for op in (f_affine, e_affine):
                d = op(c, i, s)
                if d is not None and d not in seen:
                    seen.add(d)
                    stack.append(d)
    return seen
