"""Restriction from H_n to the finite type B part H_n^R.

H_n is generated over H_n^R by X_0, and X_0^2 is central up to a unit of
H_n^R, so restriction behaves like restriction to an index two subgroup:
an irreducible M stays irreducible unless M is isomorphic to its twist by
X_0 -> -X_0. In that case an intertwiner S with S^2 = 1 splits M into two
non-isomorphic irreducibles exchanged by conjugation with X_0.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Optional

from flint import fmpq, fmpq_mat

from . import linalg as la
from .algebra import AlgebraDesc
from .modrep import (ModuleRep, hom_space, is_irreducible, is_isomorphic,
                     psi_twist, restrict, sigma_twist, sub_module)


@dataclass
class CliffordReport:
    outcome: str  # "Irreducible" or "Splits"
    parts: List[ModuleRep]
    mu: Optional[fmpq] = None
    sigma_selfiso: bool = False
    minus_one_present: bool = False
    intertwiner: Optional[fmpq_mat] = None
    checks: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        out = {"outcome": self.outcome, "parts": [P.to_json() for P in self.parts],
               "sigma_selfiso": self.sigma_selfiso,
               "minus_one_present": self.minus_one_present, "checks": self.checks}
        if self.mu is not None:
            out["mu"] = str(self.mu)
        if self.intertwiner is not None:
            out["intertwiner"] = la.mat_to_strings(self.intertwiner)
        return out


def central_scalar(M: ModuleRep) -> Optional[fmpq]:
    """The scalar by which X_0^2 X_1 ... X_n acts, or None if not scalar."""
    Z = M.X(0) * M.X(0)
    for j in range(1, M.desc.n + 1):
        Z = Z * M.X(j)
    return Z[0, 0] if la.is_scalar(Z) else None


def minus_one_present(M: ModuleRep) -> bool:
    """Whether -1 is an eigenvalue of some X_j with j >= 1."""
    from .modrep import weight_multiplicities
    off = 1 if M.desc.x0 else 0
    return any(x == -1 for t in weight_multiplicities(M) for x in t[off:])


def restriction_to_finite(M: ModuleRep) -> ModuleRep:
    n = M.desc.n
    return restrict(M, AlgebraDesc.R(n, M.desc.p, M.desc.q))


def clifford_restrict(M: ModuleRep) -> CliffordReport:
    """Restrict an irreducible H_n-module to H_n^R and describe the result."""
    if not M.desc.x0 or M.desc.variant != "B":
        raise ValueError("need a module over the full algebra H_n")
    mu = central_scalar(M)
    has_minus = minus_one_present(M)
    R = restriction_to_finite(M)
    homs = hom_space(M, sigma_twist(M))
    if not homs:
        return CliffordReport("Irreducible", [R], mu, False, has_minus, None,
                              {"restriction_irreducible": is_irreducible(R)})
    if len(homs) != 1:
        raise ValueError("M is not irreducible (Hom(M, M^sigma) has dimension > 1)")
    S = homs[0]
    S2 = S * S
    if not la.is_scalar(S2):
        raise ValueError("intertwiner does not square to a scalar")
    s = S2[0, 0]
    root = _rational_sqrt(s)
    if root is None:
        raise ValueError(f"S^2 = {s} is not a rational square; the split is not defined over Q")
    S = S * (1 / root)
    d = M.dim
    plus = la.nullspace(S - la.identity(d))
    minus = la.nullspace(S + la.identity(d))
    P1, P2 = sub_module(R, plus), sub_module(R, minus)
    checks = {
        "parts_irreducible": is_irreducible(P1) and is_irreducible(P2),
        "parts_non_isomorphic": not is_isomorphic(P1, P2),
        "psi_conjugate": is_isomorphic(psi_twist(P1), P2),
        "dims_add_up": P1.dim + P2.dim == d,
    }
    return CliffordReport("Splits", [P1, P2], mu, True, has_minus, S, checks)


def _rational_sqrt(x: fmpq) -> Optional[fmpq]:
    if x < 0:
        return None
    try:
        r = x.sqrt()
    except Exception:
        return None
    return r if r * r == x else None


def psi_orbit(N: ModuleRep) -> List[ModuleRep]:
    """Iterate the twist by conjugation with X_0 until it returns to N."""
    orbit = [N]
    cur = psi_twist(N)
    while not is_isomorphic(cur, N):
        orbit.append(cur)
        if len(orbit) > 2:
            raise ValueError("psi orbit longer than 2; the twist should be an involution")
        cur = psi_twist(cur)
    return orbit
