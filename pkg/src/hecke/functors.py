"""Induction, restriction and the i-restriction / i-induction functors.

The induced module ind_I^J M has basis T_d (x) m for d running over the
shortest coset representatives D_I inside W_J, ordered by (length, reduced
word), with the module index varying fastest.  A generator g acts on
T_d (x) m by straightening g T_d to a sum of T_w f(X), splitting each
w = d' u with d' in D_I and u in W_I, and letting T_u f(X) act on m.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from flint import fmpq, fmpq_mat

from . import linalg as la
from .algebra import AlgebraDesc, engine_for
from .characters import (FormalCharacter, character, eps_from_character,
                         eps_star_from_character, family_of)
from .modrep import (ModuleRep, composition_factors, cosocle, is_irreducible,
                     is_isomorphic, lattice_character, one_dim, outer_tensor,
                     restrict, simple_summands, socle, socle_components,
                     sub_module, tau_dual, weight_spaces, weyl_twist,
                     hom_space)
from .scalars import ONE, to_scalar
from .weyl import WeylElem, coset_decompose, min_coset_reps

_XT_CACHE: Dict[tuple, dict] = {}
_DECOMP_CACHE: Dict[tuple, tuple] = {}


def _x_times_T(desc: AlgebraDesc, j: int, d: WeylElem) -> dict:
    key = (desc.n, desc.p, desc.q, j, d)
    hit = _XT_CACHE.get(key)
    if hit is None:
        hit = engine_for(desc.n, desc.p, desc.q).x_times_T(j, d)
        _XT_CACHE[key] = hit
    return hit


def _decompose(w: WeylElem, I: frozenset) -> Tuple[WeylElem, WeylElem]:
    key = (w, I)
    hit = _DECOMP_CACHE.get(key)
    if hit is None:
        hit = coset_decompose(w, I)
        _DECOMP_CACHE[key] = hit
    return hit


def induce(M: ModuleRep, target: AlgebraDesc, name: str | None = None) -> ModuleRep:
    """ind from M's algebra (a parabolic of ``target``) up to ``target``."""
    src = M.desc
    if not (target.contains(src) and target.x0 == src.x0):
        raise ValueError(f"cannot induce from {src.label()} to {target.label()}")
    I = src.tgens
    reps = min_coset_reps(I, src.n, target.tgens)
    index = {d: k for k, d in enumerate(reps)}
    m = M.dim
    D = len(reps) * m
    c = {i: target.cparam(i) for i in target.tgens}
    mats = {}
    for g in target.generator_names():
        kind, idx = g[0], int(g[1:])
        blocks: Dict[Tuple[int, int], fmpq_mat] = {}

        def add(row_d, col, mat):
            key = (index[row_d], col)
            if key in blocks:
                blocks[key] = blocks[key] + mat
            else:
                blocks[key] = mat

        for col, d in enumerate(reps):
            if kind == "T":
                sd = d.lmul_simple(idx)
                terms = [(sd, ONE)]
                if d.has_left_descent(idx):
                    terms.append((d, c[idx]))
                for w, coeff in terms:
                    d2, u = _decompose(w, I)
                    add(d2, col, M.T_elem(u) * coeff)
            else:
                for w, f in _x_times_T(src, idx, d).items():
                    d2, u = _decompose(w, I)
                    add(d2, col, M.T_elem(u) * M.poly(f))
        out = la.zeros(D, D)
        for (r, col), mat in blocks.items():
            for i in range(m):
                for j in range(m):
                    v = mat[i, j]
                    if v != 0:
                        out[r * m + i, col * m + j] = v
        mats[g] = out
    return ModuleRep(target, mats, D, name)


def full_algebra(desc: AlgebraDesc, family: str | None = None) -> AlgebraDesc:
    fam = family or family_of(desc)
    n = desc.n
    if fam == "B":
        return AlgebraDesc.B(n, desc.p, desc.q)
    if fam == "R":
        return AlgebraDesc.R(n, desc.p, desc.q)
    return AlgebraDesc.A(n, desc.p, desc.q)


def induce_full(M: ModuleRep, family: str | None = None, name=None) -> ModuleRep:
    return induce(M, full_algebra(M.desc, family), name)


def restrict_to_rank(M: ModuleRep, n: int) -> ModuleRep:
    """Restriction to the rank-n algebra of the same family (drops X_k and
    T_{k-1} for k > n)."""
    return restrict(M, M.desc.with_rank(n))


def type_a_point(a, p=2, q=3) -> ModuleRep:
    """The one dimensional module (a) of H_1^A = F[X_1^{+-1}]."""
    return one_dim(AlgebraDesc.A(1, p, q), {"X1": a})


def segment_module(values: Sequence, p=2, q=3) -> ModuleRep:
    """One dimensional H_k^A-module with X_j acting by values[j-1] and every
    T_i acting by q; this needs values[i] = q^2 values[i-1]."""
    k = len(values)
    desc = AlgebraDesc.A(k, p, q)
    vals = {f"X{j + 1}": v for j, v in enumerate(values)}
    for i in range(1, k):
        vals[f"T{i}"] = desc.q
    return one_dim(desc, vals)


def box(mods: Sequence[ModuleRep]) -> ModuleRep:
    out = mods[0]
    for N in mods[1:]:
        out = outer_tensor(out, N)
    return out


# ---------------------------------------------------------------- Delta, e, f

def delta(M: ModuleRep, a, m: int = 1) -> ModuleRep:
    """The generalized eigenspace of X_{n-m+1}, ..., X_n at a, as a module
    over the parabolic obtained by dropping T_{n-m}."""
    a = to_scalar(a)
    n = M.desc.n
    if m == 0:
        return M
    if not 1 <= m <= n:
        raise ValueError("need 1 <= m <= n")
    Bs = [B for t, B in weight_spaces(M) if all(x == a for x in t[len(t) - m:])]
    desc = M.desc.with_tgens(M.desc.tgens - {n - m})
    basis = la.hstack(Bs, M.dim) if Bs else la.zeros(M.dim, 0)
    return sub_module(M.with_desc(desc), basis) if Bs else \
        ModuleRep(desc, {g: la.zeros(0, 0) for g in desc.generator_names()}, 0)


def e_lower(M: ModuleRep, a) -> ModuleRep:
    """res to H_{n-1} of the a-generalized eigenspace of X_n."""
    D = delta(M, a, 1)
    return restrict_to_rank(D, M.desc.n - 1)


def _grow(desc: AlgebraDesc, family: str) -> AlgebraDesc:
    n = desc.n
    if family == "A":
        tg = set(desc.tgens) | ({n} if n >= 1 else set())
    else:
        tg = set(desc.tgens) | {n}
    return AlgebraDesc(n + 1, desc.p, desc.q, desc.x0, frozenset(tg))


def f_raise(M: ModuleRep, a, family: str | None = None) -> ModuleRep:
    """ind from the (n,1) parabolic of M boxed (a)."""
    fam = family or family_of(M.desc)
    T = outer_tensor(M, type_a_point(a, M.desc.p, M.desc.q))
    return induce(T, _grow(M.desc, fam))


def shift_down(M: ModuleRep) -> ModuleRep:
    """Reindex a module whose generators avoid X_1 and T_1 (and X_0, T_0)
    as a module of rank n-1."""
    desc = M.desc
    if desc.x0 or 0 in desc.tgens or 1 in desc.tgens:
        raise ValueError("shift_down needs a type A module without T_1")
    nd = AlgebraDesc(desc.n - 1, desc.p, desc.q, False, frozenset(i - 1 for i in desc.tgens))
    mats = {}
    for g in nd.generator_names():
        kind, idx = g[0], int(g[1:])
        mats[g] = M.mats[f"{kind}{idx + 1}"]
    return ModuleRep(nd, mats, M.dim)


def delta_star(M: ModuleRep, a) -> ModuleRep:
    """Type A: the generalized eigenspace of X_1 at a, over the (1, n-1)
    parabolic."""
    a = to_scalar(a)
    desc = M.desc
    if desc.x0 or 0 in desc.tgens:
        raise ValueError("the left-hand functors are for type A modules")
    Bs = [B for t, B in weight_spaces(M) if t[0] == a]
    nd = desc.with_tgens(desc.tgens - {1})
    if not Bs:
        return ModuleRep(nd, {g: la.zeros(0, 0) for g in nd.generator_names()}, 0)
    return sub_module(M.with_desc(nd), la.hstack(Bs, M.dim))


def e_star(M: ModuleRep, a) -> ModuleRep:
    """res of delta_star to the copy of H_{n-1}^A on X_2..X_n, reindexed."""
    D = delta_star(M, a)
    keep = AlgebraDesc(D.desc.n, D.desc.p, D.desc.q, False, D.desc.tgens)
    out_desc = AlgebraDesc(D.desc.n - 1, D.desc.p, D.desc.q, False,
                           frozenset(i - 1 for i in keep.tgens))
    mats = {}
    for g in out_desc.generator_names():
        kind, idx = g[0], int(g[1:])
        mats[g] = D.mats[f"{kind}{idx + 1}"]
    return ModuleRep(out_desc, mats, D.dim)


def f_star(M: ModuleRep, a) -> ModuleRep:
    """Type A: ind from the (1, n) parabolic of (a) boxed M."""
    T = outer_tensor(type_a_point(a, M.desc.p, M.desc.q), M)
    return induce(T, AlgebraDesc.A(M.desc.n + 1, M.desc.p, M.desc.q))


def eps(M: ModuleRep, a) -> int:
    return eps_from_character(character(M), a)


def eps_star(M: ModuleRep, a) -> int:
    return eps_star_from_character(character(M), a)


# ---------------------------------------------------------------- crystal

@dataclass
class CrystalResult:
    """Outcome of a crystal operator.

    tag is one of Zero, Irreducible, SplitPair (two non-isomorphic simple
    summands making up the whole head) or ReducibleCosocle."""

    tag: str
    parts: List[ModuleRep] = field(default_factory=list)
    diagnostics: dict = field(default_factory=dict)

    @property
    def module(self) -> Optional[ModuleRep]:
        return self.parts[0] if self.tag == "Irreducible" else None

    def to_json(self) -> dict:
        out = {"tag": self.tag, "parts": [P.to_json() for P in self.parts]}
        if self.diagnostics:
            out["diagnostics"] = self.diagnostics
        return out


def _classify(Q: ModuleRep, whole: ModuleRep, diagnostics: dict) -> CrystalResult:
    """Q is a semisimple module (a socle or cosocle of ``whole``)."""
    if Q.dim == 0:
        return CrystalResult("Zero", [], diagnostics)
    comps = socle_components(Q)
    summands = [L for L, B in comps for _ in range(B.ncols() // L.dim)]
    if len(summands) == 1:
        return CrystalResult("Irreducible", [summands[0]], diagnostics)
    if len(summands) == 2 and len(comps) == 2 and Q.dim == whole.dim:
        return CrystalResult("SplitPair", summands, diagnostics)
    diagnostics = dict(diagnostics, head_dims=[L.dim for L in summands],
                       distinct_types=len(comps))
    return CrystalResult("ReducibleCosocle", [Q], diagnostics)


def crystal_e(M: ModuleRep, a) -> CrystalResult:
    """soc of e_a M."""
    E = e_lower(M, a)
    if E.dim == 0:
        return CrystalResult("Zero")
    S = sub_module(E, socle(E))
    return _classify(S, S, {"e_dim": E.dim})


def crystal_f(M: ModuleRep, a, family: str | None = None) -> CrystalResult:
    """cosoc of f_a M.  At a = +-1 the head may split; the diagnostics then
    record whether M is tau-self-dual and the dimension of End(f_a M)."""
    a = to_scalar(a)
    F = f_raise(M, a, family)
    Q = cosocle(F)
    diag = {"f_dim": F.dim}
    if a in (1, -1):
        diag["seed_self_dual"] = is_isomorphic(M, tau_dual(M))
        diag["end_dim"] = len(hom_space(F, F))
    return _classify(Q, F, diag)


def crystal_e_star(M: ModuleRep, a) -> CrystalResult:
    E = e_star(M, a)
    if E.dim == 0:
        return CrystalResult("Zero")
    S = sub_module(E, socle(E))
    return _classify(S, S, {})


def crystal_f_star(M: ModuleRep, a) -> CrystalResult:
    F = f_star(M, a)
    return _classify(cosocle(F), F, {"f_dim": F.dim})


# ---------------------------------------------------------------- named modules

def principal_series(kind: str, a, n: int, a0=None, p=2, q=3) -> ModuleRep:
    """kind "A": ind from the lattice of (a, ..., a), the type A Kato module.
    kind "B": the cosocle of ind from the lattice of (a0, a, ..., a)."""
    a = to_scalar(a)
    if kind == "A":
        L = lattice_character(AlgebraDesc.lattice(n, p, q, x0=False), [a] * n)
        return induce(L, AlgebraDesc.A(n, p, q), name=f"LA({a}^{n})")
    if kind == "B":
        if a0 is None:
            raise ValueError("type B needs a0")
        L = lattice_character(AlgebraDesc.lattice(n, p, q), [a0] + [a] * n)
        Q = cosocle(induce(L, AlgebraDesc.B(n, p, q)))
        Q.name = f"L({to_scalar(a0)},{a}^{n})"
        return Q
    raise ValueError("kind must be 'A' or 'B'")


def principal_series_induced(t: Sequence, p=2, q=3, family: str = "B") -> ModuleRep:
    """ind from the lattice of the character t (X_0 entry first for B)."""
    n = len(t) - (1 if family == "B" else 0)
    L = lattice_character(AlgebraDesc.lattice(n, p, q, x0=(family == "B")), t)
    return induce_full(L, family)


def h0_module(a0, p=2, q=3) -> ModuleRep:
    return one_dim(AlgebraDesc.B(0, p, q), {"X0": a0}, name=f"({to_scalar(a0)})")


def trivial_r0(p=2, q=3) -> ModuleRep:
    return ModuleRep(AlgebraDesc.R(0, p, q), {}, 1, name="F")


def build_from_path(seed: ModuleRep, path: Sequence, family: str | None = None) -> ModuleRep:
    """Apply crystal_f along a path of eigenvalues; every step must be
    irreducible."""
    M = seed
    for a in path:
        r = crystal_f(M, a, family)
        if r.tag != "Irreducible":
            raise ValueError(f"step {a} gave {r.tag}")
        M = r.parts[0]
    return M


def jordan_sizes_Xn(M: ModuleRep, a) -> List[int]:
    return la.jordan_block_sizes(M.X(M.desc.n), to_scalar(a))


def frobenius_dims(M: ModuleRep, N: ModuleRep) -> Tuple[int, int]:
    """(dim Hom(ind M, N), dim Hom(M, res N)) for M over a parabolic of N's
    algebra."""
    left = len(hom_space(induce(M, N.desc), N))
    right = len(hom_space(M, restrict(N, M.desc)))
    return left, right


# ---------------------------------------------------------------- Mackey, duality

def mackey_sides(M: ModuleRep, I, n: int | None = None) -> Tuple[FormalCharacter, FormalCharacter]:
    """Both sides of the Mackey formula at the level of characters.

    M lives over the parabolic H_J.  The left side is ch res_I ind^n_J M, the
    right side the sum over x in D_{I,J} of ch ind^I_{I n xJ} ^x(res^J_{x^-1 I n J} M)."""
    from .weyl import as_index_set, conjugate_index_set, double_coset_reps
    n = M.desc.n if n is None else n
    I = as_index_set(I)
    J = M.desc.tgens
    full = full_algebra(M.desc)
    left = character(restrict(induce(M, full), full.with_tgens(I)))
    right = FormalCharacter({}, M.desc.x0)
    for x in double_coset_reps(I, J, n):
        K = conjugate_index_set(x.inverse(), I, J)
        IxJ = conjugate_index_set(x, J, I)
        piece = weyl_twist(restrict(M, M.desc.with_tgens(K)), x, IxJ)
        right = right + character(induce(piece, full.with_tgens(I)))
    return left, right


def duality_sides(M: ModuleRep) -> Tuple[ModuleRep, ModuleRep]:
    """(ind M)^tau and ind(^d(M^tau)) with d the longest element of D_{I,I}."""
    from .weyl import longest_double_rep
    I = M.desc.tgens
    d = longest_double_rep(I, M.desc.n)
    full = full_algebra(M.desc)
    return tau_dual(induce(M, full)), induce(weyl_twist(tau_dual(M), d, I), full)
