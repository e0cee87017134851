import itertools
import random

import pytest

from dcrystal.paths import disjoint_tuples, enumerate_double_paths, from_triangle_rows
from dcrystal.pbw import iter_upper, random_upper
from dcrystal.roots import build_root_system, reduced_word_i0
from dcrystal.trails import (
    MINUS, PLUS, count_trails, double_path_darrays, enumerate_darrays,
    enumerate_trails, freeze, fundamental_spin, i0_trail_to_darray, is_even_spin,
    j0_word, level_trails, levi_restricted_trails, lowest_spin, max_trail_norm,
    min_trail_cost, paths_to_darray, shape_part_bz, shape_part_chain, spin_e,
    spin_f, spin_orbit, star_datum, trail_set, trail_to_darray, trail_vertices,
)
from dcrystal.burge import lambda_of
from dcrystal.paths import epsilon_star_n

GOLDEN6 = [[1], [2, 3], [2, 1, 1], [1, 3, 2, 1], [2, 3, 2, 0, 3]]


@pytest.mark.parametrize("n", [4, 5, 6])
def test_spin_orbits(n):
    even = spin_orbit(n)
    odd = spin_orbit(n, fundamental_spin(n, n - 1))
    assert len(even) == len(odd) == 2 ** (n - 1)
    assert all(is_even_spin(t) for t in even)
    assert not any(is_even_spin(t) for t in odd)
    for tau in even:
        for i in range(1, n + 1):
            up = spin_f(tau, i)
            assert up is None or spin_e(up, i) == tau


def test_lowest_spin_is_negated_highest_for_even_rank():
    assert lowest_spin(4, 4) == (MINUS,) * 4
    assert lowest_spin(5, 5) == (MINUS,) * 4 + (PLUS,)


def brute_trails(word, start, end):
    out = []
    for bits in itertools.product((0, 1), repeat=len(word)):
        try:
            verts = trail_vertices(word, start, bits)
        except ValueError:
            continue
        if verts[-1] == end:
            out.append(bits)
    return out


def test_trails_match_exhaustive_search():
    n = 4
    word = j0_word(n)
    end = lowest_spin(n, n)
    for start in spin_orbit(n):
        got = sorted(enumerate_trails(word, start, end))
        assert got == sorted(brute_trails(word, start, end))
        assert count_trails(word, start, end) == len(got)


def test_min_cost_matches_enumeration():
    n = 5
    rng = random.Random(1)
    word = reduced_word_i0(n)
    end = lowest_spin(n, n)
    for _ in range(20):
        vals = [rng.randint(0, 5) for _ in word]
        for start in list(spin_orbit(n))[:6]:
            trails = enumerate_trails(word, start, end)
            expect = min((sum(v * d for v, d in zip(vals, b)) for b in trails), default=None)
            assert min_trail_cost(vals, word, start, end) == expect


def test_top_level_trail_is_unique():
    for n in (4, 5, 6):
        assert len(level_trails(n, n // 2)) == 1


@pytest.mark.parametrize("n", [4, 5, 6, 7])
def test_levi_part_trail_is_unique(n):
    word = j0_word(n)[:build_root_system(n).M]
    start = (PLUS,) * (n - 2) + (MINUS, MINUS)
    end = (MINUS, MINUS) + (PLUS,) * (n - 2)
    assert len(enumerate_trails(word, start, end)) == 1
    assert enumerate_trails(word, start, start) == [(0,) * len(word)]


@pytest.mark.parametrize("n,count", [(4, 2), (5, 5), (6, 14)])
def test_restricted_trails_arrays_and_double_paths_agree(n, count):
    restricted = levi_restricted_trails(n)
    arrays = {freeze(a) for a in enumerate_darrays(n, 1)}
    paths = enumerate_double_paths(n, (1, 1))
    assert len(restricted) == len(arrays) == len(paths) == count
    assert {freeze(trail_to_darray(b, n)) for b in restricted} == arrays
    assert {freeze(a) for a in double_path_darrays(n)} == arrays


@pytest.mark.parametrize("n", [4, 5, 6])
def test_level_bijections(n):
    for l in range(1, n // 2 + 1):
        arrays = {freeze(a) for a in enumerate_darrays(n, l)}
        trails = level_trails(n, l)
        assert {freeze(i0_trail_to_darray(b, n)) for b in trails} == arrays
        tuples = disjoint_tuples(n, l)
        assert {freeze(paths_to_darray([t], n)) for t in tuples} == arrays
        assert len(trails) == len(tuples) == len(arrays)


@pytest.mark.parametrize("n", [4, 5, 6, 7])
def test_bottom_row_orientation(n):
    # the two readings differ only at odd rank, where star swaps the spin nodes
    paths = {freeze(a) for a in double_path_darrays(n)}
    assert {freeze(a) for a in enumerate_darrays(n, 1, "rtl", "j")} == paths
    assert {freeze(a) for a in enumerate_darrays(n, 1, "ltr", "i")} == paths
    swapped = {freeze(a) for a in enumerate_darrays(n, 1, "ltr", "j")}
    assert (swapped == paths) == (n % 2 == 0)
    with pytest.raises(ValueError):
        enumerate_darrays(n, n // 2 + 1)


def test_trail_norm_maximum_is_epsilon_star():
    rng = random.Random(6)
    trails = trail_set(5)
    for _ in range(100):
        c = random_upper(5, 4, rng)
        assert max_trail_norm(c, trails) == epsilon_star_n(c)


def test_star_datum_is_involutive():
    n = 5
    rng = random.Random(2)
    vals = tuple(rng.randint(0, 4) for _ in range(build_root_system(n).N))
    word = reduced_word_i0(n)
    assert star_datum(*star_datum(vals, word, n), n) == (vals, word)


def test_odd_shape_parts_golden():
    c = from_triangle_rows(GOLDEN6)
    got = [shape_part_bz(c, l) for l in (1, 2, 3)]
    assert got == [19, 6, 2]
    assert [shape_part_chain(c, l) for l in (1, 2, 3)] == got


def test_odd_shape_parts_two_routes_rank4():
    for c in iter_upper(4, 2):
        lam = lambda_of(c) + (0,) * 4
        for l in (1, 2):
            assert shape_part_bz(c, l) == shape_part_chain(c, l) == lam[2 * l - 2]
