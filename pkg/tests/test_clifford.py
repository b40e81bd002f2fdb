from hecke import corpus
from hecke import linalg as la
from hecke.algebra import NormalFormElem, central_elements
from hecke.characters import character
from hecke.clifford import (central_scalar, clifford_restrict,
                            minus_one_present, psi_orbit,
                            restriction_to_finite)
from hecke.modrep import is_isomorphic, one_dim, sigma_twist
from hecke.algebra import AlgebraDesc


def test_rank_one_example_splits():
    M = corpus.load("h1-example")
    r = clifford_restrict(M)
    assert r.outcome == "Splits" and r.sigma_selfiso
    assert [P.dim for P in r.parts] == [1, 1]
    assert all(r.checks.values())
    S = r.intertwiner
    assert S * (1 / S[1, 1]) == la.diag([-1, 1]) or S * (1 / S[0, 0]) == la.diag([1, -1])
    assert r.mu == -25
    assert sum((character(P) for P in r.parts), character(r.parts[0]).__class__({}, False)) == \
        character(restriction_to_finite(M))


def test_rank_two_example_stays_irreducible():
    r = clifford_restrict(corpus.load("h2-example"))
    assert r.outcome == "Irreducible" and not r.sigma_selfiso
    assert r.checks["restriction_irreducible"]


def test_no_minus_one_means_irreducible():
    for name in ("katoB1", "L-a0-q2"):
        M = corpus.load(name)
        assert not minus_one_present(M)
        r = clifford_restrict(M)
        assert r.outcome == "Irreducible"


def test_second_central_element_changes_sign_under_sigma():
    M = corpus.load("katoB1")
    z = central_elements(M.desc)["X0*prod(1+Xi)"]
    Z = M.act(z)
    assert la.is_scalar(Z)
    assert sigma_twist(M).act(z) == -Z
    assert central_scalar(M) is not None


def test_psi_orbits():
    r = clifford_restrict(corpus.load("h1-example"))
    A, B = r.parts
    orbit = psi_orbit(A)
    assert len(orbit) == 2 and is_isomorphic(orbit[1], B)
    fixed = one_dim(AlgebraDesc.R(1), {"T0": 2, "X1": 4})
    assert len(psi_orbit(fixed)) in (1, 2)
    assert 2 % len(psi_orbit(restriction_to_finite(corpus.load("katoB1")))) == 0
