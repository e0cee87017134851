"""Type D_n roots, the Weyl group as signed permutations, reduced words and
braid moves with their piecewise-linear transition maps.

Roots are ``Root(kind, i, j)`` with ``kind`` either ``"sum"`` (eps_i + eps_j)
or ``"diff"`` (eps_i - eps_j) and ``1 <= i < j <= n``.  Word letters are
1-based node labels; move positions are 0-based indices into the word.
"""

from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, NamedTuple

from dcrystal import _kernels


class Root(NamedTuple):
    kind: str
    i: int
    j: int

    def vector(self, n):
        v = [0] * n
        v[self.i - 1] = 1
        v[self.j - 1] = 1 if self.kind == "sum" else -1
        return tuple(v)

    def to_str(self):
        return "%s%d,%d" % ("+" if self.kind == "sum" else "-", self.i, self.j)

    @classmethod
    def from_str(cls, text):
        text = text.strip()
        if not text or text[0] not in "+-":
            raise ValueError("bad root string %r" % text)
        i, j = (int(part) for part in text[1:].split(","))
        if not 1 <= i < j:
            raise ValueError("bad root string %r" % text)
        return cls("sum" if text[0] == "+" else "diff", i, j)

    def __str__(self):
        return self.to_str()


def simple_root(n, i):
    if not 1 <= i <= n:
        raise ValueError("node %d outside 1..%d" % (i, n))
    if i == n:
        return Root("sum", n - 1, n)
    return Root("diff", i, i + 1)


def vector_to_root(v):
    """The positive root with coordinate vector ``v``; ``ValueError`` if none."""
    nz = [(k, x) for k, x in enumerate(v) if x]
    if len(nz) != 2 or any(abs(x) != 1 for _, x in nz):
        raise ValueError("not a root: %r" % (v,))
    (p, a), (q, b) = nz
    if a != 1:
        raise ValueError("negative root: %r" % (v,))
    return Root("sum" if b == 1 else "diff", p + 1, q + 1)


def _order_key(root):
    # sums first (largest j, then largest i); then differences lexicographically
    if root.kind == "sum":
        return (0, -root.j, -root.i)
    return (1, root.i, root.j)


@dataclass(frozen=True)
class RootSystemD:
    n: int
    positive_roots: tuple
    index: dict = field(compare=False, repr=False)

    @property
    def N(self):
        return len(self.positive_roots)

    @property
    def M(self):
        return len(self.positive_roots) // 2

    def position(self, root):
        return self.index[root]

    def vectors(self):
        return [r.vector(self.n) for r in self.positive_roots]


@lru_cache(maxsize=None)
def build_root_system(n):
    if n < 4:
        raise ValueError("rank must be at least 4, got %r" % (n,))
    roots = [Root("sum", i, j) for j in range(2, n + 1) for i in range(1, j)]
    roots += [Root("diff", i, j) for j in range(2, n + 1) for i in range(1, j)]
    roots.sort(key=_order_key)
    return RootSystemD(n, tuple(roots), {r: k for k, r in enumerate(roots)})


def is_convex(roots, n):
    """True when every sum of two listed roots sits strictly between them."""
    vecs = [r.vector(n) for r in roots]
    where = {v: k for k, v in enumerate(vecs)}
    for a in range(len(vecs)):
        for b in range(a + 1, len(vecs)):
            s = tuple(x + y for x, y in zip(vecs[a], vecs[b]))
            k = where.get(s)
            if k is not None and not a < k < b:
                return False
    return True


# --- reduced words -------------------------------------------------------

def _block_upper(n, k):
    if n % 2 == 0 and k == n - 1:
        return [n]
    if k % 2 == 1:
        return [n] + list(range(n - 2, k - 1, -1))
    return list(range(n - 1, k - 1, -1))


def _block_lower(n, k):
    if n % 2 == 0:
        return list(range(n - 1, k - 1, -1))
    if k == n - 1:
        return [n]
    return [n] + list(range(n - 2, k - 1, -1))


def upper_word(n):
    return tuple(x for k in range(1, n) for x in _block_upper(n, k))


def lower_word(n):
    return tuple(x for k in range(1, n) for x in _block_lower(n, k))


@lru_cache(maxsize=None)
def reduced_word_i0(n):
    if n < 4:
        raise ValueError("rank must be at least 4, got %r" % (n,))
    return upper_word(n) + lower_word(n)


def star(n, i):
    """The diagram involution induced by -w_0."""
    if n % 2 == 1 and i in (n - 1, n):
        return 2 * n - 1 - i
    return i


def star_op_word(word, n):
    """Reverse a word and apply the diagram involution letterwise."""
    return tuple(star(n, i) for i in reversed(word))


def _apply_reflection(images, i, n):
    # images[a] = (sign, index) describes w(eps_{a+1}); returns w * s_i
    out = list(images)
    if i < n:
        out[i - 1], out[i] = images[i], images[i - 1]
    else:
        (s1, p1), (s2, p2) = images[n - 2], images[n - 1]
        out[n - 2] = (-s2, p2)
        out[n - 1] = (-s1, p1)
    return out


def _act(images, vec):
    out = [0] * len(vec)
    for a, x in enumerate(vec):
        if x:
            s, p = images[a]
            out[p] += s * x
    return tuple(out)


def word_to_roots(word, n):
    """The roots beta_k = s_{i_1}...s_{i_{k-1}}(alpha_{i_k}).

    Raises ``ValueError`` when the word is not reduced.
    """
    images = [(1, a) for a in range(n)]
    seen = set()
    roots = []
    for i in word:
        beta = vector_to_root(_act(images, simple_root(n, i).vector(n)))
        if beta in seen:
            raise ValueError("word %r is not reduced" % (tuple(word),))
        seen.add(beta)
        roots.append(beta)
        images = _apply_reflection(images, i, n)
    return roots


def is_reduced(word, n):
    try:
        word_to_roots(word, n)
    except ValueError:
        return False
    return True


def weyl_act(word, vec, n):
    """Apply s_{i_1} ... s_{i_L} (rightmost first) to an eps-vector."""
    images = [(1, a) for a in range(n)]
    for i in word:
        images = _apply_reflection(images, i, n)
    return _act(images, vec)


# --- braid moves ---------------------------------------------------------

def adjacent(n, a, b):
    """Whether nodes ``a`` and ``b`` are joined in the D_n diagram."""
    if a == b:
        return False
    lo, hi = min(a, b), max(a, b)
    if hi == n:
        return lo == n - 2
    return hi == lo + 1


class BraidMove(NamedTuple):
    position: int
    arity: int


def move_applies(word, move, n):
    k, arity = move
    if arity == 2:
        if k < 0 or k + 1 >= len(word):
            return False
        a, b = word[k], word[k + 1]
        return a != b and not adjacent(n, a, b)
    if arity == 3:
        if k < 0 or k + 2 >= len(word):
            return False
        return word[k] == word[k + 2] and adjacent(n, word[k], word[k + 1])
    return False


def apply_move(word, move, n):
    if not move_applies(word, move, n):
        raise ValueError("move %r does not apply to %r" % (tuple(move), tuple(word)))
    k, arity = move
    w = list(word)
    if arity == 2:
        w[k], w[k + 1] = w[k + 1], w[k]
    else:
        w[k], w[k + 1], w[k + 2] = w[k + 1], w[k], w[k + 1]
    return tuple(w)


def apply_moves(word, moves, n):
    for mv in moves:
        word = apply_move(word, mv, n)
    return word


def inverse_moves(moves):
    """Moves undoing ``moves``: every braid move is its own inverse."""
    return [BraidMove(*mv) for mv in reversed(moves)]


def transition(values, word, moves, n):
    """Re-express Lusztig data along braid moves.

    ``values`` is aligned with ``word``.  Returns the data aligned with the
    target word.
    """
    if len(values) != len(word):
        raise ValueError("datum and word lengths differ")
    apply_moves(word, moves, n)  # validates every site
    return _kernels.transit(tuple(values), [tuple(mv) for mv in moves])


def neighbors(word, n):
    for k in range(len(word) - 1):
        for arity in (2, 3):
            mv = BraidMove(k, arity)
            if move_applies(word, mv, n):
                yield mv, apply_move(word, mv, n)


class SearchBudgetExceeded(RuntimeError):
    pass


def find_word_path(start, predicate: Callable, n, node_cap=5_000_000):
    """Shortest braid-move sequence from ``start`` to a word satisfying
    ``predicate``, by breadth-first search."""
    start = tuple(start)
    if predicate(start):
        return []
    parent = {start: None}
    queue = deque([start])
    while queue:
        word = queue.popleft()
        for mv, nxt in neighbors(word, n):
            if nxt in parent:
                continue
            parent[nxt] = (word, mv)
            if predicate(nxt):
                path = []
                node = nxt
                while parent[node] is not None:
                    prev, m = parent[node]
                    path.append(m)
                    node = prev
                return path[::-1]
            if len(parent) >= node_cap:
                raise SearchBudgetExceeded(
                    "braid search exceeded %d words" % node_cap)
            queue.append(nxt)
    raise SearchBudgetExceeded("no word satisfies the predicate")


@lru_cache(maxsize=None)
def path_to_first_letter(word, letter, n):
    return tuple(find_word_path(word, lambda w: w[0] == letter, n))


@lru_cache(maxsize=None)
def path_to_last_letter(word, letter, n):
    return tuple(find_word_path(word, lambda w: w[-1] == letter, n))
