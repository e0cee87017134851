import random

import pytest
from hypothesis import given, settings, strategies as st

from dcrystal.tableaux import (
    EMPTY, Tableau, anti_rectify, column_insert, e_0_nw,
    e_n_se, epsilon_n_se, f_0_nw, f_n_se, insertion_tableau, knuth_equivalent,
    phi_0_nw, rectify, reverse_insert, reverse_insertion_tableau, row_word,
    tableau_e, tableau_f, word_e, word_epsilon, word_f, word_phi,
)

words = st.integers(4, 6).flatmap(
    lambda n: st.lists(st.integers(1, n), min_size=0, max_size=12))


def schensted_row_insert(word):
    """Textbook row insertion in the ordinal frame (-k), as a reference."""
    rows = []
    for a in word:
        x = -a
        for row in rows:
            bump = next((k for k, y in enumerate(row) if y > x), None)
            if bump is None:
                row.append(x)
                x = None
                break
            row[bump], x = x, row[bump]
        if x is not None:
            rows.append([x])
    return Tableau.normal([[-y for y in row] for row in rows])


@settings(max_examples=200)
@given(words)
def test_column_insertion_matches_row_insertion(w):
    # column-inserting w from the right equals row-inserting w from the left
    assert insertion_tableau(tuple(reversed(w))) == schensted_row_insert(w)


@settings(max_examples=200)
@given(words)
def test_insertion_is_normal_and_semistandard(w):
    t = insertion_tableau(w)
    assert t.is_empty() or (t.is_normal() and t.is_semistandard())
    assert sorted(x for r in t.rows for x in r) == sorted(w)
    assert insertion_tableau(row_word(t)) == t


@settings(max_examples=200)
@given(words)
def test_reverse_insertion_is_anti_normal_and_knuth_equivalent(w):
    t = reverse_insertion_tableau(w)
    assert t.is_empty() or (t.is_anti_normal() and t.is_semistandard())
    assert knuth_equivalent(row_word(t), w)
    assert rectify(t) == insertion_tableau(w)


def test_single_step_insertions():
    # 3-bar precedes 2-bar, so it bumps
    assert column_insert(column_insert(EMPTY, 2), 3).rows == ((3, 2),)
    t = column_insert(column_insert(EMPTY, 3), 2)
    assert t.rows == ((3,), (2,))
    assert column_insert(t, 1).rows == ((3,), (2,), (1,))
    assert reverse_insert(reverse_insert(EMPTY, 2), 1).rows == ((2, 1),)
    a = reverse_insert(reverse_insert(EMPTY, 1), 2)
    assert a.is_anti_normal() and a.rows == ((2,), (1,))
    with pytest.raises(ValueError):
        column_insert(Tableau.anti_normal([[2], [1, 1]]), 3)


def random_skew(rng, n):
    w = [rng.randint(1, n) for _ in range(rng.randint(1, 14))]
    t = insertion_tableau(w)
    # drop a random order ideal of cells from the top-left corner
    inner = []
    prev = t.width()
    for row in t.rows:
        k = rng.randint(0, min(prev, len(row) - 1))
        inner.append(k)
        prev = k
    rows = [row[k:] for row, k in zip(t.rows, inner)]
    return Tableau(tuple(rows), tuple(inner))


def test_rectification_agrees_with_insertion_of_reading_word():
    rng = random.Random(2)
    for _ in range(300):
        s = random_skew(rng, 5)
        assert s.is_skew_shape() and s.is_semistandard()
        expect = insertion_tableau(row_word(s))
        assert rectify(s) == expect == rectify(s, order="last")
        a = anti_rectify(s)
        assert a.is_anti_normal() and a.is_semistandard()
        assert anti_rectify(s, order="last") == a
        assert rectify(a) == expect


def bracket_reference(word, i):
    """Tensor-rule signature by repeated '+-' cancellation."""
    marks = [(k, "+" if x == i + 1 else "-") for k, x in enumerate(word) if x in (i, i + 1)]
    changed = True
    while changed:
        changed = False
        for p in range(len(marks) - 1):
            if marks[p][1] == "+" and marks[p + 1][1] == "-":
                del marks[p:p + 2]
                changed = True
                break
    plus = [k for k, s in marks if s == "+"]
    minus = [k for k, s in marks if s == "-"]
    return plus, minus


@settings(max_examples=300)
@given(st.lists(st.integers(1, 5), max_size=8), st.integers(1, 4))
def test_word_operators_match_bracket_reference(w, i):
    plus, minus = bracket_reference(w, i)
    assert word_phi(w, i) == len(plus) and word_epsilon(w, i) == len(minus)
    f = word_f(w, i)
    e = word_e(w, i)
    if plus:
        expect = list(w)
        expect[plus[0]] = i
        assert f == tuple(expect)
        assert word_e(f, i) == tuple(w)
    else:
        assert f is None
    if minus:
        expect = list(w)
        expect[minus[-1]] = i + 1
        assert e == tuple(expect)
    else:
        assert e is None


@settings(max_examples=200)
@given(st.lists(st.integers(1, 5), max_size=10), st.integers(1, 4))
def test_crystal_operators_commute_with_insertion(w, i):
    t = insertion_tableau(w)
    f = word_f(tuple(w), i)
    got = tableau_f(t, i)
    assert got == (None if f is None else insertion_tableau(f))
    e = word_e(tuple(w), i)
    got = tableau_e(t, i)
    assert got == (None if e is None else insertion_tableau(e))


def test_spin_node_on_anti_normal():
    n = 4
    t = f_n_se(EMPTY, n)
    assert t.rows == ((4,), (3,))
    assert epsilon_n_se(t, n) == 1
    assert e_n_se(t, n) == EMPTY
    assert e_n_se(EMPTY, n) is None
    t2 = f_n_se(t, n)
    assert list(t2.column_lengths()) == [2, 2] and t2.is_anti_normal()
    with pytest.raises(ValueError):
        f_n_se(Tableau.normal([[2, 1], [1]]), n)


def test_affine_node_on_normal():
    t = e_0_nw(EMPTY)
    assert t.rows == ((2,), (1,))
    assert phi_0_nw(t) == 1
    assert f_0_nw(t) == EMPTY
    assert f_0_nw(EMPTY) is None
    assert f_0_nw(e_0_nw(t)) == t


def test_tableau_json_round_trip():
    t = Tableau.anti_normal([[5, 4], [3, 3], [5, 5, 4, 2], [4, 3, 1, 1]])
    obj = t.to_json()
    assert obj["orientation"] == "anti-normal" and obj["shape"] == [4, 4, 2, 2]
    assert Tableau.from_json(obj) == t
    assert Tableau.from_json({"rows": [[2, 1], [1]]}) == Tableau.normal([[2, 1], [1]])


def test_pretty_pads_anti_normal_rows():
    t = Tableau.anti_normal([[2], [1, 1]])
    assert t.pretty().splitlines() == [". 2", "1 1"]


def test_semistandard_predicates():
    assert Tableau.normal([[3, 3, 1], [2, 1]]).is_semistandard()
    assert not Tableau.normal([[3, 1], [3]]).is_semistandard()
    assert not Tableau.normal([[1, 3]]).is_semistandard()
    assert Tableau.normal([[4, 3], [2, 1]]).has_even_columns()
    assert not Tableau.normal([[4, 3], [2]]).has_even_columns()
