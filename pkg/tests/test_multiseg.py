import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hecke.multiseg import (Multisegment, Segment, all_multisegments, e_A,
                            e_star_A, eps_A, eps_star_A, f_A, f_star_A,
                            crystal_A, reduced_signature, signature_string)


def M(*segs):
    return Multisegment(segs)


def test_normalize():
    assert M().normalize() == []
    assert M((0, 0), (-1, -1)).normalize("right") == [Segment(0, 0), Segment(-1, -1)]
    G = M((0, 1), (0, 0), (-1, 2))
    once = G.normalize("left")
    assert Multisegment(once).normalize("left") == once


def test_eps_examples():
    assert eps_A(M((0, 0)), 0) == 1
    G = M((-1, -1), (0, 0))
    assert signature_string(G, 0) == "-+"
    assert reduced_signature(G, 0) == ""
    assert eps_A(M(), 0) == 0
    H = M((-1, -1), (0, 0), (0, 0))
    assert eps_A(H, 0) == 1


def test_f_on_empty_adds_a_point():
    assert f_A(M(), 0) == M((0, 0))
    assert f_star_A(M(), 2) == M((2, 2))


def test_e_on_eps_zero_is_none():
    assert e_A(M((1, 1)), 0) is None
    assert crystal_A(M(), 0, "e*") is None
    with pytest.raises(ValueError):
        crystal_A(M(), 0, "g")


def test_parse_round_trip():
    G = Multisegment.parse("[(0..1),(−2), (3..3)]")
    assert Multisegment.parse(str(G)) == G
    assert G.size() == 4
    with pytest.raises(ValueError):
        Multisegment.parse("(0..1)")


seg = st.tuples(st.integers(-2, 2), st.integers(0, 2)).map(lambda t: (t[0], t[0] + t[1]))
msegs = st.lists(seg, max_size=4).map(lambda s: Multisegment(s))


@settings(max_examples=200)
@given(msegs, st.integers(-3, 3))
def test_e_inverts_f(G, k):
    F = f_A(G, k)
    assert eps_A(F, k) == eps_A(G, k) + 1
    assert e_A(F, k) == G
    Fs = f_star_A(G, k)
    assert eps_star_A(Fs, k) == eps_star_A(G, k) + 1
    assert e_star_A(Fs, k) == G


@settings(max_examples=200)
@given(msegs, st.integers(-3, 3))
def test_f_inverts_e(G, k):
    E = e_A(G, k)
    if E is None:
        assert eps_A(G, k) == 0
    else:
        assert eps_A(E, k) == eps_A(G, k) - 1
        assert f_A(E, k) == G
    Es = e_star_A(G, k)
    if Es is not None:
        assert f_star_A(Es, k) == G


def test_bijection_on_small_box():
    Gs = all_multisegments(5, -1, 1)
    for k in (-1, 0, 1):
        image = {}
        for G in Gs:
            F = f_A(G, k)
            assert F not in image
            image[F] = G


def test_bar_swaps_ends_and_starts():
    for G in all_multisegments(3, -1, 1):
        for k in (-1, 0, 1):
            assert eps_star_A(G, k) == eps_A(G.bar(), -k)
