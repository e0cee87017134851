import itertools

import pytest
from hypothesis import given, settings, strategies as st

from dcrystal.roots import (
    BraidMove, Root, SearchBudgetExceeded, apply_move, apply_moves,
    build_root_system, find_word_path, inverse_moves, is_convex, is_reduced,
    move_applies, neighbors, path_to_first_letter, path_to_last_letter,
    reduced_word_i0, simple_root, star, star_op_word, transition, vector_to_root,
    weyl_act, word_to_roots,
)


@pytest.mark.parametrize("n", [4, 5, 6, 7])
def test_root_counts(n):
    rs = build_root_system(n)
    assert rs.N == n * (n - 1)
    assert rs.M == n * (n - 1) // 2
    assert all(r.kind == "sum" for r in rs.positive_roots[:rs.M])
    assert all(r.kind == "diff" for r in rs.positive_roots[rs.M:])


def test_small_rank_rejected():
    with pytest.raises(ValueError):
        build_root_system(3)


@pytest.mark.parametrize("n", [4, 5, 6, 7])
def test_i0_is_reduced_and_matches_convex_order(n):
    word = reduced_word_i0(n)
    assert len(word) == n * (n - 1)
    assert is_reduced(word, n)
    roots = word_to_roots(word, n)
    assert tuple(roots) == build_root_system(n).positive_roots
    assert is_convex(build_root_system(n).positive_roots, n)


def test_vector_to_root():
    assert vector_to_root((0, 0, 1, 1)) == Root("sum", 3, 4)
    assert vector_to_root((1, 0, -1, 0)) == Root("diff", 1, 3)
    with pytest.raises(ValueError):
        vector_to_root((1, 1, 1, 0))


def test_first_root_is_alpha_n():
    for n in (4, 5, 6):
        assert build_root_system(n).positive_roots[0] == simple_root(n, n)


def test_nonreduced_word_rejected():
    with pytest.raises(ValueError):
        word_to_roots((1, 1), 4)
    assert not is_reduced((2, 3, 2, 3, 2, 3, 2), 4)


@pytest.mark.parametrize("n", [4, 5, 6, 7])
def test_star(n):
    for i in range(1, n + 1):
        assert star(n, star(n, i)) == i
    if n % 2 == 0:
        assert all(star(n, i) == i for i in range(1, n + 1))
    else:
        assert star(n, n) == n - 1 and star(n, n - 1) == n
        assert all(star(n, i) == i for i in range(1, n - 1))


def test_star_op_word_is_involutive_and_reduced():
    for n in (4, 5):
        w = reduced_word_i0(n)
        assert star_op_word(star_op_word(w, n), n) == w
        assert is_reduced(star_op_word(w, n), n)


def test_longest_element_negates_for_even_rank():
    n = 4
    v = (3, 2, 1, 0)
    assert weyl_act(reduced_word_i0(n), v, n) == tuple(-x for x in v)


@given(st.sampled_from(["sum", "diff"]), st.integers(1, 9), st.integers(1, 9))
def test_root_string_round_trip(kind, i, j):
    if i >= j:
        i, j = j, i + j
    r = Root(kind, i, j)
    assert Root.from_str(r.to_str()) == r


def test_root_string_format():
    assert Root("sum", 1, 2).to_str() == "+1,2"
    assert Root("diff", 3, 5).to_str() == "-3,5"
    with pytest.raises(ValueError):
        Root.from_str("*1,2")


def test_braid_moves_are_involutions():
    n = 5
    w = reduced_word_i0(n)
    for mv, nxt in neighbors(w, n):
        assert apply_move(nxt, mv, n) == w
        assert is_reduced(nxt, n)


def test_move_validation():
    assert not move_applies((1, 2, 1), BraidMove(0, 2), 4)
    assert move_applies((1, 2, 1), BraidMove(0, 3), 4)
    assert move_applies((1, 3), BraidMove(0, 2), 4)
    with pytest.raises(ValueError):
        apply_move((1, 2), BraidMove(0, 2), 4)


def _weight(values, word, n):
    roots = [r.vector(n) for r in word_to_roots(word, n)]
    return tuple(sum(c * r[k] for c, r in zip(values, roots)) for k in range(n))


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(0, 4), min_size=12, max_size=12),
       st.sampled_from([1, 2, 3, 4]))
def test_transition_preserves_weight_and_inverts(values, letter):
    n = 4
    word = reduced_word_i0(n)
    moves = path_to_first_letter(word, letter, n)
    target = apply_moves(word, moves, n)
    assert target[0] == letter
    moved = transition(values, word, moves, n)
    assert _weight(moved, target, n) == _weight(values, word, n)
    assert list(transition(moved, target, inverse_moves(moves), n)) == values


def test_paths_reach_their_targets():
    w = reduced_word_i0(4)
    assert path_to_first_letter(w, 4, 4) == ()  # i_0 already starts with n
    for i in (1, 2, 3):
        assert apply_moves(w, path_to_first_letter(w, i, 4), 4)[0] == i
    assert apply_moves(w, path_to_last_letter(w, 4, 4), 4)[-1] == 4


def test_search_budget():
    with pytest.raises(SearchBudgetExceeded):
        find_word_path(reduced_word_i0(5), lambda w: w[0] == 1 and w[1] == 1, 5, node_cap=50)


def test_search_start_satisfies():
    assert find_word_path((4, 2, 4), lambda w: True, 4) == []


def test_all_reduced_words_of_small_prefix_have_n_roots():
    # every neighbor of i_0 yields the same root set
    n = 4
    base = set(word_to_roots(reduced_word_i0(n), n))
    for _, w in itertools.islice(neighbors(reduced_word_i0(n), n), 10):
        assert set(word_to_roots(w, n)) == base
