import itertools

import pytest
from flint import fmpq
from hypothesis import given, settings
from hypothesis import strategies as st

from hecke import corpus
from hecke.algebra import AlgebraDesc
from hecke.characters import (FormalCharacter, block_decompose, central_orbit,
                              char_linearly_independent, character,
                              eps_from_character, induced_character,
                              shuffle_character, shuffle_tuples)
from hecke.functors import (box, f_raise, induce, principal_series_induced,
                            segment_module)
from hecke.modrep import direct_sum, one_dim
from hecke.weyl import WeylElem, min_coset_reps, shape

P, Q = fmpq(2), fmpq(3)


def F(*tuples, has_x0=True):
    return FormalCharacter(list(tuples), has_x0)


def test_point_character():
    M = one_dim(AlgebraDesc.lattice(1), {"X0": 5, "X1": 7})
    assert character(M) == F((5, 7))


def test_kato_character():
    assert character(corpus.load("katoA3")) == FormalCharacter({(7, 7, 7): 6}, False)


def test_first_printed_induced_character():
    a0, c, p2 = fmpq(5), fmpq(11), P ** 2
    expected = F((a0, p2, c), (a0, c, p2), (a0 * c, 1 / c, p2), (a0 * c, p2, 1 / c))
    assert character(corpus.load("shuffle-ex-1")) == expected
    assert shuffle_character(F((a0, p2)), F((c,), has_x0=False)) == expected


def test_second_printed_induced_character():
    a0, q2 = fmpq(5), Q ** 2
    expected = F(
        (a0, -1 / q2, -1, -q2),
        (-a0 / q2, -q2, -1, -q2),
        (-a0 / q2, -1, -q2, -q2),
        (-a0 / q2, -1, -q2, -q2),
        (a0 / q2, -1, -q2, -q2),
        (a0 / q2, -1, -q2, -q2),
        (a0 / q2, -q2, -1, -q2),
        (-a0, -1 / q2, -1, -q2),
    )
    assert character(corpus.load("shuffle-ex-2")) == expected
    assert shuffle_character(F((a0,)), F((-1 / q2, -1, -q2), has_x0=False)) == expected


def test_shuffle_with_empty_right_factor():
    ch = F((5, 7), (35, fmpq(1, 7)))
    assert shuffle_character(ch, F((), has_x0=False)) == ch


def test_shuffle_matches_coset_sum():
    """The three-word interleaving rule equals the sum over x in D_I of x.(t, s)."""
    t, s = (fmpq(5), fmpq(3)), (fmpq(7), fmpq(11))
    by_rule = FormalCharacter(shuffle_tuples(t, s))
    by_cosets = induced_character(F(t + s), 3, shape(1, 2).indices)
    assert by_rule == by_cosets


def test_principal_series_character_formula():
    """Full principal series: sum over W_n of w.(a0, a)."""
    t = (fmpq(5), fmpq(7), fmpq(11))
    full = induced_character(F(t), 2, [])
    brute = F(*[w.act_on_tuple(t) for w in itertools.chain.from_iterable([min_coset_reps([], 2)])])
    assert full == brute
    assert full.degree() == 8


points = st.sampled_from([fmpq(x) for x in (3, 5, 7, -2, "1/3", "11/2")])


@settings(max_examples=15, deadline=None)
@given(points, points, points)
def test_shuffle_against_real_induction(a0, b, c):
    left = principal_series_induced([a0, b])
    right = one_dim(AlgebraDesc.lattice(1, x0=False), {"X1": c})
    M = induce(box([left, right]), AlgebraDesc.B(2))
    assert character(M) == shuffle_character(character(left), character(right))


def test_shuffle_for_fixture_pairs():
    L = corpus.load("L-a0-q2")
    K = segment_module([7, 63])
    M = induce(box([L, K]), AlgebraDesc.B(3))
    assert character(M) == shuffle_character(character(L), character(K))


def test_orbits():
    assert central_orbit((5, 7)) == {(5, 7), (35, fmpq(1, 7))}
    assert len(central_orbit((5, 7, 11))) == 8
    assert 48 % len(central_orbit((5, 7, 7, 11))) == 0


def test_blocks():
    assert len(block_decompose(corpus.load("katoB1"))) == 1
    M = f_raise(corpus.load("L-a0-q2"), 1)
    blocks = block_decompose(M)
    assert len(blocks) == 1 and blocks[0][1].dim == 8
    S = direct_sum(corpus.load("katoB1"), corpus.load("smallcounterex-1"))
    parts = block_decompose(S)
    assert len(parts) == 2
    assert sum((character(B) for _, B in parts), F()) == character(S)


def test_linear_independence():
    a = F((5, 7))
    assert char_linearly_independent([a])
    assert not char_linearly_independent([a, a])
    assert char_linearly_independent([a, F((5, 9))])


def test_eps_from_character():
    assert eps_from_character(character(corpus.load("katoA3")), 7) == 3
    assert eps_from_character(character(corpus.load("katoA3")), 5) == 0


def test_serialization():
    ch = character(corpus.load("shuffle-ex-2"))
    assert FormalCharacter.from_json(ch.to_json()) == ch
    assert ch.to_csv().count("\n") == 6
