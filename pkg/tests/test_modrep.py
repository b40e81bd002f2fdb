import pytest
from flint import fmpq

from hecke import corpus
from hecke import linalg as la
from hecke.algebra import AlgebraDesc
from hecke.characters import character
from hecke.functors import (crystal_f, principal_series,
                            principal_series_induced, restrict_to_rank)
from hecke.modrep import (InvalidModule, ModuleRep, cosocle, direct_sum,
                          end_dim, hom_space, is_homomorphism, is_irreducible,
                          is_isomorphic, one_dim, outer_tensor, psi_twist,
                          quotient_module, radical, restrict, sigma_twist,
                          socle, socle_module, spin, sub_module, tau_dual,
                          verify_module, weyl_twist)
from hecke.weyl import WeylElem

Q = fmpq(3)


@pytest.fixture(scope="module")
def split_pair():
    r = crystal_f(corpus.load("L-a0-q2"), 1)
    assert r.tag == "SplitPair"
    return r


@pytest.mark.parametrize("name", corpus.names())
def test_fixtures_are_modules(name):
    M = corpus.load(name)
    assert all(verify_module(M).values())
    assert sum(k for _, k in character(M)) == M.dim


def test_perturbed_x1_breaks_a_relation():
    M = corpus.load("h1-example")
    X1 = la.from_rows([[0, 1], [0, 0]]) + M.X(1)
    bad = ModuleRep(M.desc, dict(M.mats, X1=X1), 2)
    report = verify_module(bad)
    assert report["invertible-X1"]
    assert not all(report.values())


def test_json_round_trip_and_bad_input():
    M = corpus.load("katoB1")
    assert ModuleRep.from_json(M.to_json()).mats == M.mats
    d = M.to_json()
    del d["mats"]["X0"]
    with pytest.raises(InvalidModule):
        ModuleRep.from_json(d)


def test_outer_tensor_of_points():
    L = one_dim(AlgebraDesc.B(1), {"T0": 2, "X0": 5, "X1": 4})
    c = one_dim(AlgebraDesc.A(1), {"X1": 11})
    T = outer_tensor(L, c)
    assert T.dim == 1 and T.desc.tgens == {0}
    assert character(T).tuples() == [(5, 4, 11)]
    K = outer_tensor(corpus.load("katoB1"), corpus.load("katoA2"))
    assert K.dim == 16 and all(verify_module(K).values())


def test_twists():
    M = corpus.load("h2-example")
    assert sigma_twist(sigma_twist(M)).mats == M.mats
    assert weyl_twist(M, WeylElem.identity(2)).mats == M.mats
    assert all(verify_module(psi_twist(restrict(M, AlgebraDesc.R(2)))).values())


def test_tau_dual():
    one = one_dim(AlgebraDesc.B(1), {"T0": 2, "X0": 5, "X1": 4})
    assert tau_dual(one).mats == one.mats
    for name in ("katoA3", "katoB1", "L-a0-q2", "shuffle-ex-2"):
        M = corpus.load(name)
        assert character(tau_dual(M)) == character(M)
    M = corpus.load("katoB1")
    assert is_isomorphic(M, tau_dual(M))


def test_spin():
    K = corpus.load("katoA2")
    assert spin(K, la.zeros(2, 1)).ncols() == 0
    v = la.eigenspace(K.X(1), 7)
    assert spin(K, la.column(v, 0)).ncols() == 2


def test_spin_of_intertwined_vector():
    """(T_1 + q^-1) w_1 generates a 4-dim submodule of f_1 L(a0, q^2)."""
    from hecke.functors import f_raise
    M = f_raise(corpus.load("L-a0-q2"), 1)
    w1 = la.zeros(M.dim, 1)
    w1[0, 0] = 1  # T_1 (x) w_1 basis order starts with 1 (x) w_1
    v1 = (M.T(1) + la.identity(M.dim) * (1 / Q)) * w1
    assert spin(M, v1).ncols() == 4


def test_hom_and_isomorphism(split_pair):
    A, B = split_pair.parts
    assert hom_space(A, B) == []
    assert not is_isomorphic(A, B)
    assert is_isomorphic(A, A)
    assert end_dim(A) == 1


def test_sigma_intertwiner_over_finite_part():
    R = restrict(corpus.load("h1-example"), AlgebraDesc.R(1))
    homs = hom_space(R, sigma_twist(corpus.load("h1-example")).with_desc(AlgebraDesc.R(1)))
    assert len(homs) == 2  # R is split, so Hom is bigger than 1
    M = corpus.load("h1-example")
    homs = hom_space(M, sigma_twist(M))
    assert len(homs) == 1
    S = homs[0]
    assert S * (1 / S[0, 0]) == la.diag([1, -1])
    assert is_homomorphism(M, sigma_twist(M), S)


def test_irreducibility():
    assert is_irreducible(one_dim(AlgebraDesc.B(0), {"X0": 5}))
    M = corpus.load("h1-example")
    assert is_irreducible(M)
    assert not is_irreducible(restrict(M, AlgebraDesc.R(1)))
    assert is_irreducible(corpus.load("katoA3"))


def test_socle_and_cosocle():
    K = corpus.load("katoA3")
    assert socle(K).ncols() == K.dim
    res = restrict_to_rank(K, 2)
    assert is_isomorphic(socle_module(res), principal_series("A", 7, 2))


def test_socle_of_split_pair_is_everything():
    from hecke.functors import f_raise
    M = f_raise(corpus.load("L-a0-q2"), 1)
    assert socle(M).ncols() == M.dim


def test_quotients():
    M = corpus.load("L-a0-q2")
    assert quotient_module(M, la.zeros(2, 0)).mats == M.mats
    assert quotient_module(M, la.identity(2)).dim == 0


def test_radical_quotient_of_type_b_principal_series():
    P = principal_series_induced([5, 7, 7])
    top = quotient_module(P, radical(P))
    assert is_irreducible(top)
    assert character(top)[(5, 7, 7)] == 2
    assert is_isomorphic(top, cosocle(P))


def test_duality_of_socle_and_cosocle():
    P = principal_series_induced([5, 7, 7])
    S = socle_module(tau_dual(P))
    assert is_isomorphic(tau_dual(S), cosocle(P))


def test_direct_sum_and_submodule():
    A, B = corpus.load("smallcounterex-1"), corpus.load("smallcounterex-2")
    S = direct_sum(A, B)
    assert S.dim == 8
    sub = sub_module(S, la.columns(la.identity(8), range(4)))
    assert is_isomorphic(sub, A)
