from collections import deque

import pytest
from flint import fmpq
from hypothesis import given
from hypothesis import strategies as st

from hecke.weyl import (ParabolicShape, WeylElem, all_signed_permutations,
                        coset_decompose, double_coset_reps, group_elements,
                        longest_double_rep, min_coset_reps, shape)


def bfs_lengths(n):
    """Word length of every element by breadth-first search on the Cayley graph."""
    start = WeylElem.identity(n)
    dist = {start: 0}
    queue = deque([start])
    while queue:
        w = queue.popleft()
        for i in range(n):
            v = w.rmul_simple(i)
            if v not in dist:
                dist[v] = dist[w] + 1
                queue.append(v)
    return dist


def test_words_and_windows():
    assert WeylElem.from_word([], 2).is_identity()
    assert WeylElem.from_word([0], 2).window == (-1, 2)
    # s_1 s_0 s_1 negates the second coordinate
    assert WeylElem.from_word([1, 0, 1], 2).window == (1, -2)


def test_parse_and_str():
    w = WeylElem.parse("[-2,1,3]")
    assert str(w) == "[-2,1,3]"
    with pytest.raises(ValueError):
        WeylElem((1, 1))


@pytest.mark.parametrize("n,size", [(1, 2), (2, 8), (3, 48)])
def test_group_sizes(n, size):
    assert len(group_elements(n)) == size
    assert set(group_elements(n)) == set(all_signed_permutations(n))


@pytest.mark.parametrize("n", [1, 2, 3])
def test_length_formula_matches_bfs(n):
    dist = bfs_lengths(n)
    for w, d in dist.items():
        assert w.length() == d
        word = w.reduced_word()
        assert len(word) == d
        assert WeylElem.from_word(word, n) == w


def test_weight_action_examples():
    s1 = WeylElem.simple(1, 2)
    assert s1.act_on_weight((4, 5, 6)) == (4, 6, 5)
    s0 = WeylElem.simple(0, 2)
    assert s0.act_on_weight((0, 1, 0)) == (0, -1, 0)
    assert WeylElem.simple(0, 1).act_on_weight((1, 0)) == (1, 1)


weights = st.tuples(*[st.integers(-3, 3)] * 4)


@given(st.integers(0, 47), weights)
def test_weight_action_inverts(k, c):
    w = group_elements(3)[k]
    assert w.act_on_weight(w.inverse().act_on_weight(c)) == c
    v = group_elements(3)[(k * 7) % 48]
    assert (w * v).act_on_weight(c) == w.act_on_weight(v.act_on_weight(c))


def test_coset_reps_example():
    reps = min_coset_reps(shape(1, 1).indices, 2)
    words = [d.reduced_word() for d in reps]
    assert words == [(), (1,), (0, 1), (1, 0, 1)]


def test_coset_reps_of_0_n():
    n = 3
    reps = min_coset_reps(shape(0, n).indices, n)
    assert len(reps) == 2 ** n
    # one representative per sign pattern, each with an increasing window
    for d in reps:
        assert list(d.window) == sorted(d.window)
    assert len({d.negated() for d in reps}) == 2 ** n


@pytest.mark.parametrize("I", [frozenset(), frozenset({0}), frozenset({1}), frozenset({0, 2}), frozenset({1, 2})])
def test_unique_factorization(I):
    n = 3
    D = set(min_coset_reps(I, n))
    W_I = set(group_elements(n, I))
    for w in group_elements(n):
        d, u = coset_decompose(w, I)
        assert d in D and u in W_I
        assert d * u == w
        assert d.length() + u.length() == w.length()
        hits = [(e, v) for e in D for v in W_I if e * v == w]
        assert hits == [(d, u)]


def test_double_cosets():
    assert set(double_coset_reps([], [], 2)) == set(group_elements(2))
    I = shape(1, 1).indices  # (n-1, 1) with n = 2
    reps = double_coset_reps(I, I, 2)
    assert [d.reduced_word() for d in reps] == [(), (1,), (1, 0, 1)]
    brute = set(min_coset_reps(I, 2)) & {w.inverse() for w in min_coset_reps(I, 2)}
    assert set(reps) == brute
    assert min(reps, key=lambda w: w.length()).is_identity()


def test_longest_double_rep():
    assert longest_double_rep(range(3), 3).is_identity()
    assert longest_double_rep([], 1) == WeylElem.simple(0, 1)
    for n, I in [(2, {1}), (3, {0, 1}), (3, {0}), (3, {1, 2})]:
        d = longest_double_rep(I, n)
        brute = max(double_coset_reps(I, I, n), key=lambda w: w.length())
        assert d.length() == brute.length()
        assert (d * d).is_identity()
        conj = set()
        for i in I:
            c = d * WeylElem.simple(i, n) * d
            assert len(c.reduced_word()) == 1
            conj.add(c.reduced_word()[0])
        assert conj == set(I)


def test_shapes():
    assert shape(1, 1).indices == {0}
    assert shape(2, 1).indices == {0, 1}
    assert shape(1, 2).indices == {0, 2}
    assert shape(0, 3).indices == {1, 2}
    assert ParabolicShape.parse("(0;1,1)") == shape(0, 1, 1)
    assert str(shape(2, 1)) == "(2;1)"
    with pytest.raises(ValueError):
        shape(1, 0)


def test_tuple_action_generators():
    s0 = WeylElem.simple(0, 2)
    assert s0.act_on_tuple((5, 7, 11)) == (35, fmpq(1, 7), 11)
    s1 = WeylElem.simple(1, 2)
    assert s1.act_on_tuple((5, 7, 11)) == (5, 11, 7)
