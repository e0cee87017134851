import random

import pytest

from dcrystal.burge import (
    Biword, OMEGA, OMEGA_PRIME, biword_to_datum, datum_to_biword, glue_T,
    kappa_nw, kappa_nw_inv, kappa_nw_trace, kappa_se, kappa_se_inv,
    kappa_se_trace, lambda_of,
)
from dcrystal.paths import from_triangle_rows
from dcrystal.pbw import LusztigDatum, iter_upper, random_upper
from dcrystal.tableaux import Tableau, rectify
from dcrystal.verify import equivariance_failures

GOLDEN5 = [[2], [1, 0], [1, 2, 1], [2, 1, 0, 1]]
GOLDEN6 = [[1], [2, 3], [2, 1, 1], [1, 3, 2, 1], [2, 3, 2, 0, 3]]
EXAMPLE_GLUE = [[0], [0, 3], [0, 1, 1], [0, 3, 2, 1], [0, 3, 2, 0, 3]]

# P_r, ..., P_1 for the rank-5 example, rows top to bottom, right-justified
GOLDEN5_TRACE = [
    [[2], [1]],
    [[3, 2], [1, 1]],
    [[4], [3], [3, 2], [1, 1]],
    [[4], [3], [4, 2, 2], [3, 1, 1]],
    [[4], [3], [4, 4, 2, 2], [3, 2, 1, 1]],
    [[5, 4], [4, 3], [4, 4, 2, 2], [3, 2, 1, 1]],
    [[5, 4], [4, 3], [5, 4, 4, 2, 2], [4, 3, 2, 1, 1]],
    [[5, 4], [3, 3], [5, 5, 4, 4, 2, 2], [4, 4, 3, 2, 1, 1]],
    [[5, 4], [3, 3], [5, 5, 5, 4, 4, 2, 2], [4, 4, 3, 2, 2, 1, 1]],
    [[5, 4], [3, 3], [5, 5, 5, 5, 4, 4, 2, 2], [4, 4, 3, 2, 2, 1, 1, 1]],
    [[5, 4], [3, 3], [5, 5, 5, 5, 5, 4, 4, 2, 2], [4, 4, 3, 2, 2, 1, 1, 1, 1]],
]

GOLDEN6_SE = [
    [6, 6],
    [5, 5],
    [6, 6, 5, 4, 4, 4],
    [5, 3, 3, 3, 3, 3],
    [6, 6, 6, 6, 5, 5, 5, 5, 5, 4, 3, 3, 2, 2, 2, 2, 2, 2, 2],
    [5, 5, 5, 4, 4, 4, 4, 4, 3, 2, 1, 1, 1, 1, 1, 1, 1, 1, 1],
]


def test_golden_biword():
    c = from_triangle_rows(GOLDEN5)
    assert list(datum_to_biword(c).pairs) == [
        (5, 1), (5, 1), (5, 2), (5, 3), (5, 4), (5, 4),
        (4, 2), (4, 2), (4, 3), (3, 1), (2, 1)]
    assert biword_to_datum(datum_to_biword(c), 5) == c


def test_empty_biword():
    z = LusztigDatum.zero(4, "upper")
    assert len(datum_to_biword(z)) == 0
    assert kappa_se(z).is_empty() and kappa_nw(z).is_empty()


def test_biword_validation():
    with pytest.raises(ValueError):
        Biword(((1, 2),))
    with pytest.raises(ValueError):
        Biword(((4, 1), (5, 1)), OMEGA)
    Biword(((4, 1), (5, 1)), OMEGA_PRIME)
    with pytest.raises(ValueError):
        biword_to_datum(Biword(((6, 1),)), 5)


def test_golden_trace_rank5():
    steps = kappa_se_trace(from_triangle_rows(GOLDEN5))
    assert list(steps) == [Tableau.anti_normal(rows) for rows in GOLDEN5_TRACE]


def test_golden_tableau_rank5():
    t = kappa_se(from_triangle_rows(GOLDEN5))
    assert t == Tableau.anti_normal(GOLDEN5_TRACE[-1])
    assert t.shape() == (9, 9, 2, 2)


def test_golden_tableau_rank6():
    c = from_triangle_rows(GOLDEN6)
    assert kappa_se(c) == Tableau.anti_normal(GOLDEN6_SE)
    assert lambda_of(c) == (19, 19, 6, 6, 2, 2)


def test_nw_trace_ends_at_kappa_nw():
    c = from_triangle_rows(GOLDEN6)
    steps = kappa_nw_trace(c)
    assert steps[-1] == kappa_nw(c)
    assert [s.size() for s in steps] == list(range(2, 2 * len(steps) + 1, 2))


@pytest.mark.parametrize("n,bound", [(4, 2), (5, 1)])
def test_maps_are_inverse_and_related_by_rectification(n, bound):
    seen_se, seen_nw = set(), set()
    for c in iter_upper(n, bound):
        se, nw = kappa_se(c), kappa_nw(c)
        assert se.is_empty() or (se.is_anti_normal() and se.is_semistandard())
        assert nw.is_empty() or (nw.is_normal() and nw.is_semistandard())
        assert se.has_even_columns() and nw.has_even_columns()
        assert rectify(se) == nw
        assert kappa_se_inv(se, n) == c
        assert kappa_nw_inv(nw, n) == c
        seen_se.add(se)
        seen_nw.add(nw)
    count = (bound + 1) ** (n * (n - 1) // 2)
    assert len(seen_se) == len(seen_nw) == count


def test_inverse_random_rank6():
    rng = random.Random(4)
    for _ in range(200):
        c = random_upper(6, 3, rng)
        assert kappa_se_inv(kappa_se(c), 6) == c
        assert kappa_nw_inv(kappa_nw(c), 6) == c


def test_inverse_rejects_foreign_tableaux():
    with pytest.raises(ValueError):
        kappa_nw_inv(Tableau.normal([[3], [2], [1]]), 4)
    with pytest.raises(ValueError):
        kappa_se_inv(Tableau.normal([[3, 3], [1]]), 4)


def test_glue_example():
    c = from_triangle_rows(EXAMPLE_GLUE)
    res = glue_T(c, 4)
    assert res.T == Tableau.anti_normal([[3, 2, 2, 2], [1, 1, 1, 1]])
    assert res.P == Tableau.anti_normal([
        [4, 4], [3, 3, 3, 3], [4, 3, 2, 2, 2, 2, 2], [3, 2, 1, 1, 1, 1, 1, 1, 1, 1]])
    assert res.Q == Tableau(((5, 5), (5, 5, 4, 4), (5, 5, 5), (5, 5, 5, 4, 4, 4)),
                            (8, 6, 3, 0))
    assert res.tableau == Tableau.anti_normal([
        [5, 5, 4, 4], [3, 3, 3, 3],
        [5, 5, 5, 5, 5, 5, 5, 5, 4, 3, 2, 2, 2, 2, 2],
        [4, 4, 4, 4, 4, 3, 2, 1, 1, 1, 1, 1, 1, 1, 1]])
    assert res.tableau == kappa_se(c)


@pytest.mark.parametrize("i", [1, 2, 3])
def test_glue_equals_kappa_rank4(i):
    n = 4
    for c in iter_upper(n, 2):
        if any(c.sum_entry(a, b) for a in range(1, n) for b in range(a + 1, n + 1) if b > i + 1):
            continue
        assert glue_T(c, i).tableau == kappa_se(c)


def test_glue_rejects_wide_support():
    c = from_triangle_rows([[1], [0, 0], [0, 0, 0]])
    with pytest.raises(ValueError):
        glue_T(c, 2)


def test_equivariance_rank4_entries_le_1():
    for c in iter_upper(4, 1):
        assert equivariance_failures(c) == []


def test_equivariance_random_rank5():
    rng = random.Random(8)
    for _ in range(200):
        assert equivariance_failures(random_upper(5, 3, rng)) == []
