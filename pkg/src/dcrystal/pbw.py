"""Crystal of Lusztig data for the convex order of ``reduced_word_i0``.

A datum assigns a multiplicity to each positive root.  Full data live in
B(infinity); data supported on the sum roots form the subcrystal ``B^J`` and
data on the difference roots form ``B_J``.  Operators for i < n follow a
signature rule whose runs are listed by :func:`signature_layout`.
"""

import itertools
from dataclasses import dataclass
from functools import lru_cache

from dcrystal import _kernels
from dcrystal.roots import Root, build_root_system, simple_root

FULL = "full"
UPPER = "upper"
LOWER = "lower"
_SUPPORTS = (FULL, UPPER, LOWER)


@dataclass(frozen=True)
class LusztigDatum:
    n: int
    values: tuple
    support: str = FULL

    def __post_init__(self):
        rs = build_root_system(self.n)
        vals = tuple(int(v) for v in self.values)
        object.__setattr__(self, "values", vals)
        if self.support not in _SUPPORTS:
            raise ValueError("unknown support %r" % (self.support,))
        if len(vals) != rs.N:
            raise ValueError("expected %d values, got %d" % (rs.N, len(vals)))
        if any(v < 0 for v in vals):
            raise ValueError("multiplicities must be nonnegative")
        M = rs.M
        if self.support == UPPER and any(vals[M:]):
            raise ValueError("upper datum has weight on difference roots")
        if self.support == LOWER and any(vals[:M]):
            raise ValueError("lower datum has weight on sum roots")

    @classmethod
    def zero(cls, n, support=FULL):
        return cls(n, (0,) * build_root_system(n).N, support)

    @classmethod
    def unit(cls, n, root, support=None):
        rs = build_root_system(n)
        vals = [0] * rs.N
        vals[rs.position(root)] = 1
        if support is None:
            support = UPPER if root.kind == "sum" else LOWER
        return cls(n, tuple(vals), support)

    @classmethod
    def from_upper(cls, n, upper_values):
        """Build an upper datum from its first ``M`` coordinates."""
        M = build_root_system(n).M
        upper_values = tuple(upper_values)
        if len(upper_values) != M:
            raise ValueError("expected %d upper values" % M)
        return cls(n, upper_values + (0,) * M, UPPER)

    @property
    def roots(self):
        return build_root_system(self.n)

    def __getitem__(self, root):
        return self.values[self.roots.position(root)]

    def sum_entry(self, i, j):
        """Multiplicity of eps_i + eps_j."""
        if i > j:
            i, j = j, i
        return self[Root("sum", i, j)]

    def upper_values(self):
        return self.values[:self.roots.M]

    def total(self):
        return sum(self.values)

    def max_entry(self):
        return max(self.values) if self.values else 0

    def with_support(self, support):
        return LusztigDatum(self.n, self.values, support)

    def add(self, root, amount=1):
        """New datum with ``amount`` added at ``root``; ``None`` if negative."""
        pos = self.roots.position(root)
        v = list(self.values)
        v[pos] += amount
        if v[pos] < 0:
            return None
        return LusztigDatum(self.n, tuple(v), self.support)


# --- weights ---------------------------------------------------------------

def weight(c):
    """-sum_beta c_beta * beta as an eps-vector."""
    n = c.n
    w = [0] * n
    for root, mult in zip(c.roots.positive_roots, c.values):
        if mult:
            w[root.i - 1] -= mult
            w[root.j - 1] -= mult if root.kind == "sum" else -mult
    return tuple(w)


def pairing(vec, i, n):
    """<vec, h_i> for i in 0..n (i = 0 is the affine node)."""
    if i == 0:
        return -(vec[0] + vec[1])
    if i == n:
        return vec[n - 2] + vec[n - 1]
    return vec[i - 1] - vec[i]


def alpha_vector(n, i):
    if i == 0:
        v = [0] * n
        v[0] = v[1] = -1
        return tuple(v)
    return simple_root(n, i).vector(n)


# --- signature layouts -------------------------------------------------------

@dataclass(frozen=True)
class Run:
    sign: int          # +1 or -1
    coord: int         # position holding the run length
    target: int        # position gaining a unit when the run is used; -1: none
    block: int         # 1, 2 or 3


@lru_cache(maxsize=None)
def signature_layout(n, i):
    """Annotated runs of the signature for node ``i`` (1 <= i < n)."""
    if not 1 <= i < n:
        raise ValueError("signature rule needs 1 <= i < n, got %r" % (i,))
    pos = build_root_system(n).index
    S = lambda a, b: pos[Root("sum", min(a, b), max(a, b))]
    D = lambda a, b: pos[Root("diff", a, b)]
    runs = []
    for j in range(n, i + 1, -1):
        runs.append(Run(-1, S(i, j), S(i + 1, j), 1))
        runs.append(Run(+1, S(i + 1, j), S(i, j), 1))
    for s in range(i - 1, 0, -1):
        runs.append(Run(-1, S(s, i), S(s, i + 1), 2))
        runs.append(Run(+1, S(s, i + 1), S(s, i), 2))
    for s in range(1, i):
        runs.append(Run(-1, D(s, i + 1), D(s, i), 3))
        runs.append(Run(+1, D(s, i), D(s, i + 1), 3))
    runs.append(Run(-1, D(i, i + 1), -1, 3))
    return tuple(runs)


@lru_cache(maxsize=None)
def _layout_arrays(n, i, upper_only):
    runs = [r for r in signature_layout(n, i) if not upper_only or r.block < 3]
    return tuple(runs), tuple(r.sign for r in runs), tuple(r.coord for r in runs)


def sigma(c, i):
    """Signature as a list of ``(sign, count, run)``, zero runs dropped."""
    runs = signature_layout(c.n, i)
    return [(r.sign, c.values[r.coord], r) for r in runs if c.values[r.coord]]


def sigma_string(c, i):
    return "".join(("+" if s > 0 else "-") * k for s, k, _ in sigma(c, i))


def _reduce(c, i, upper_only):
    runs, signs, coords = _layout_arrays(c.n, i, upper_only)
    counts = [c.values[p] for p in coords]
    return runs, _kernels.reduce_runs(signs, counts)


def _move(c, source, target):
    v = list(c.values)
    v[source] -= 1
    if target >= 0:
        v[target] += 1
    return LusztigDatum(c.n, tuple(v), c.support)


def _check_node(c, i):
    if not 1 <= i <= c.n:
        raise ValueError("node %r outside 1..%d" % (i, c.n))


# --- operators on B(infinity) ----------------------------------------------

def f_full(c, i):
    _check_node(c, i)
    n = c.n
    if i == n:
        return _bump(c, 0, +1)
    runs, (_, _, _, first_plus) = _reduce(c, i, False)
    if first_plus >= 0:
        r = runs[first_plus]
        return _move(c.with_support(FULL), r.coord, r.target)
    return _bump(c, build_root_system(n).position(simple_root(n, i)), +1)


def e_full(c, i):
    _check_node(c, i)
    n = c.n
    if i == n:
        return _bump(c, 0, -1) if c.values[0] else None
    runs, (_, _, last_minus, _) = _reduce(c, i, False)
    if last_minus < 0:
        return None
    r = runs[last_minus]
    return _move(c.with_support(FULL), r.coord, r.target)


def epsilon_full(c, i):
    _check_node(c, i)
    if i == c.n:
        return c.values[0]
    return _reduce(c, i, False)[1][0]


def phi_full(c, i):
    return epsilon_full(c, i) + pairing(weight(c), i, c.n)


def _bump(c, pos, delta):
    v = list(c.values)
    v[pos] += delta
    return LusztigDatum(c.n, tuple(v), FULL)


# --- the subcrystals -------------------------------------------------------

def _require_upper(c):
    if any(c.values[c.roots.M:]):
        raise ValueError("datum is not supported on the sum roots")


def f_J(c, i):
    """Regular-crystal lowering on upper data; ``None`` past the string end."""
    _require_upper(c)
    if not 1 <= i < c.n:
        raise ValueError("node %r outside 1..%d" % (i, c.n - 1))
    runs, (_, _, _, first_plus) = _reduce(c, i, True)
    if first_plus < 0:
        return None
    r = runs[first_plus]
    return _move(c, r.coord, r.target)


def e_J(c, i):
    _require_upper(c)
    if not 1 <= i < c.n:
        raise ValueError("node %r outside 1..%d" % (i, c.n - 1))
    runs, (_, _, last_minus, _) = _reduce(c, i, True)
    if last_minus < 0:
        return None
    r = runs[last_minus]
    return _move(c, r.coord, r.target)


def epsilon_J(c, i):
    _require_upper(c)
    return _reduce(c, i, True)[1][0]


def phi_J(c, i):
    _require_upper(c)
    return _reduce(c, i, True)[1][1]


def split(c):
    """Separate a full datum into its upper and lower parts."""
    M = c.roots.M
    upper = LusztigDatum(c.n, c.values[:M] + (0,) * M, UPPER)
    lower = LusztigDatum(c.n, (0,) * M + c.values[M:], LOWER)
    return upper, lower


def combine(upper, lower):
    M = upper.roots.M
    return LusztigDatum(upper.n, upper.values[:M] + lower.values[M:], FULL)


def is_l_highest(c):
    """Highest weight for the Levi part: support on the chain
    eps_{n-1}+eps_n, eps_{n-3}+eps_{n-2}, ... with values weakly decreasing
    along it."""
    _require_upper(c)
    n = c.n
    chain = [Root("sum", n - 1 - 2 * t, n - 2 * t) for t in range(n // 2)]
    allowed = set(chain)
    for root, mult in zip(c.roots.positive_roots, c.values):
        if mult and root not in allowed:
            return False
    vals = [c[r] for r in chain]
    return all(a >= b for a, b in zip(vals, vals[1:]))


# --- enumeration -------------------------------------------------------------

def iter_upper(n, bound):
    """All upper data with entries in 0..bound, in lexicographic order."""
    M = build_root_system(n).M
    for vals in itertools.product(range(bound + 1), repeat=M):
        yield LusztigDatum.from_upper(n, vals)


def iter_full(n, bound):
    N = build_root_system(n).N
    for vals in itertools.product(range(bound + 1), repeat=N):
        yield LusztigDatum(n, vals)


def random_upper(n, bound, rng):
    M = build_root_system(n).M
    return LusztigDatum.from_upper(n, [rng.randint(0, bound) for _ in range(M)])
