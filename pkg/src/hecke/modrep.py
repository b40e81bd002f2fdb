"""Finite dimensional modules given by exact generator matrices.

A module stores one matrix per generator of its algebra (``T{i}`` and
``X{j}``), acting on column vectors.  Everything structural (submodules,
homomorphisms, irreducibility, composition factors, socles) is computed from
those matrices by exact linear algebra.

Irreducibility uses the Norton/Holt-Rees criterion.  The cheap route picks an
X-weight t whose simultaneous eigenspace is one dimensional in both the
module and its transpose; any proper submodule U has either U[t] or (M/U)[t]
nonzero, so spinning the two eigenvectors decides.  Otherwise a random
algebra element theta and an irreducible factor f of its characteristic
polynomial with nullity(f(theta)) = deg f play the same role.
"""

from __future__ import annotations

import random
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from flint import fmpq, fmpq_mat, fmpq_poly

from . import linalg as la
from .algebra import AlgebraDesc, NormalFormElem, defining_relations
from .scalars import Weight, to_scalar
from .weyl import WeylElem, simple_index

DEFAULT_SEED = 0xB00B5
_seed = [DEFAULT_SEED]


def set_seed(seed: int) -> None:
    """Seed used by the randomized tests when no seed is passed."""
    _seed[0] = int(seed)


def _resolve(seed: int | None) -> int:
    return _seed[0] if seed is None else seed


class InvalidModule(ValueError):
    pass


class NonRationalSpectrum(ValueError):
    """Some X_j has eigenvalues outside Q, so weights cannot be listed."""


class Undecided(RuntimeError):
    """A randomized test ran out of retries; the message says what was tried."""


class ModuleRep:
    __slots__ = ("desc", "dim", "mats", "_cache", "name")

    def __init__(self, desc: AlgebraDesc, mats: Mapping[str, fmpq_mat], dim: int | None = None,
                 name: str | None = None):
        self.desc = desc
        names = desc.generator_names()
        missing = [g for g in names if g not in mats]
        if missing:
            raise InvalidModule(f"missing matrices for {missing}")
        if dim is None:
            dim = mats[names[0]].nrows() if names else 0
        for g in names:
            m = mats[g]
            if m.nrows() != dim or m.ncols() != dim:
                raise InvalidModule(f"{g} is {m.nrows()}x{m.ncols()}, expected {dim}x{dim}")
        self.dim = dim
        self.mats = {g: mats[g] for g in names}
        self._cache: Dict = {}
        self.name = name

    def __repr__(self) -> str:
        tag = f" {self.name}" if self.name else ""
        return f"<ModuleRep{tag} {self.desc.label()} dim={self.dim}>"

    def gens(self) -> List[Tuple[str, fmpq_mat]]:
        return list(self.mats.items())

    def mat(self, name: str) -> fmpq_mat:
        return self.mats[name]

    def T(self, i: int) -> fmpq_mat:
        return self.mats[f"T{i}"]

    def X(self, j: int) -> fmpq_mat:
        return self.mats[f"X{j}"]

    def x_matrices(self) -> List[fmpq_mat]:
        return [self.mats[f"X{j}"] for j in self.desc.x_indices()]

    def X_pow(self, j: int, e: int) -> fmpq_mat:
        key = ("xpow", j, e)
        hit = self._cache.get(key)
        if hit is None:
            if e == 0:
                hit = la.identity(self.dim)
            elif e > 0:
                hit = self.X_pow(j, e - 1) * self.X(j) if e > 1 else self.X(j)
            else:
                inv = self._cache.get(("xinv", j))
                if inv is None:
                    inv = self.X(j).inv()
                    self._cache[("xinv", j)] = inv
                hit = self.X_pow(j, e + 1) * inv if e < -1 else inv
            self._cache[key] = hit
        return hit

    def monomial(self, c: Sequence[int]) -> fmpq_mat:
        out = None
        for j, e in enumerate(c):
            if e:
                m = self.X_pow(j, e)
                out = m if out is None else out * m
        return out if out is not None else la.identity(self.dim)

    def poly(self, f: Mapping[Weight, fmpq]) -> fmpq_mat:
        out = la.zeros(self.dim, self.dim)
        for mono, c in f.items():
            out += self.monomial(mono) * c
        return out

    def T_elem(self, w: WeylElem) -> fmpq_mat:
        key = ("tw", w)
        hit = self._cache.get(key)
        if hit is None:
            hit = la.identity(self.dim)
            for i in w.reduced_word():
                hit = hit * self.T(i)
            self._cache[key] = hit
        return hit

    def act(self, elem: NormalFormElem) -> fmpq_mat:
        out = la.zeros(self.dim, self.dim)
        for w, f in elem.terms.items():
            out += self.T_elem(w) * self.poly(f)
        return out

    def with_desc(self, desc: AlgebraDesc, name=None) -> "ModuleRep":
        return ModuleRep(desc, {g: self.mats[g] for g in desc.generator_names()}, self.dim, name)

    def to_json(self) -> dict:
        out = self.desc.to_json()
        out["dim"] = self.dim
        out["mats"] = {g: la.mat_to_strings(m) for g, m in self.mats.items()}
        if self.name:
            out["name"] = self.name
        return out

    @classmethod
    def from_json(cls, d: Mapping) -> "ModuleRep":
        desc = AlgebraDesc.from_json(d)
        dim = int(d["dim"])
        mats = {}
        for g in desc.generator_names():
            if g not in d["mats"]:
                raise InvalidModule(f"missing matrix {g}")
            m = la.mat_from_strings(d["mats"][g], dim)
            mats[g] = m
        return cls(desc, mats, dim, d.get("name"))


def module_from_rows(desc: AlgebraDesc, rows: Mapping[str, Sequence[Sequence]], name=None) -> ModuleRep:
    return ModuleRep(desc, {g: la.from_rows(r) for g, r in rows.items()}, name=name)


def one_dim(desc: AlgebraDesc, values: Mapping[str, object], name=None) -> ModuleRep:
    mats = {g: la.from_rows([[values[g]]]) for g in desc.generator_names()}
    return ModuleRep(desc, mats, 1, name)


def lattice_character(desc: AlgebraDesc, t: Sequence, name=None) -> ModuleRep:
    """The one dimensional module of a commutative subalgebra (no T's)
    where X_j acts by the j-th entry of t (t starts at X_0 if present)."""
    if desc.tgens:
        raise ValueError("lattice characters need an algebra without T generators")
    xs = desc.x_indices()
    if len(t) != len(xs):
        raise ValueError(f"need {len(xs)} eigenvalues, got {len(t)}")
    return one_dim(desc, {f"X{j}": v for j, v in zip(xs, t)}, name)


# ---------------------------------------------------------------- validation

def _word_matrix(M: ModuleRep, word) -> fmpq_mat:
    out = la.identity(M.dim)
    for kind, idx, e in word:
        out = out * (M.T(idx) if kind == "T" else M.X_pow(idx, e))
    return out


def verify_module(M: ModuleRep) -> Dict[str, bool]:
    """Check invertibility and every defining relation on the matrices."""
    report = {}
    for g, m in M.mats.items():
        report[f"invertible-{g}"] = M.dim == 0 or m.det() != 0
    if not all(report.values()):
        return report
    for label, terms in defining_relations(M.desc):
        total = la.zeros(M.dim, M.dim)
        for c, word in terms:
            total += _word_matrix(M, word) * c
        report[label] = la.is_zero(total)
    return report


def is_valid_module(M: ModuleRep) -> bool:
    return all(verify_module(M).values())


# ---------------------------------------------------------------- constructions

def direct_sum(*mods: ModuleRep) -> ModuleRep:
    desc = mods[0].desc
    dim = sum(m.dim for m in mods)
    mats = {}
    for g in desc.generator_names():
        out = la.zeros(dim, dim)
        off = 0
        for m in mods:
            a = m.mats[g]
            for i in range(m.dim):
                for j in range(m.dim):
                    if a[i, j] != 0:
                        out[off + i, off + j] = a[i, j]
            off += m.dim
        mats[g] = out
    return ModuleRep(desc, mats, dim)


def outer_tensor(M: ModuleRep, N: ModuleRep) -> ModuleRep:
    """M (rank m) boxed with N (a type A style module of rank k, no X_0 and
    no T_0) as a module over the parabolic of rank m+k."""
    if N.desc.x0 or 0 in N.desc.tgens:
        raise ValueError("the right factor must not involve X_0 or T_0")
    if not M.desc.same_params(N.desc):
        raise ValueError("parameter mismatch")
    m, k = M.desc.n, N.desc.n
    tg = set(M.desc.tgens) | {i + m for i in N.desc.tgens}
    desc = AlgebraDesc(m + k, M.desc.p, M.desc.q, M.desc.x0, frozenset(tg))
    IM, IN = la.identity(M.dim), la.identity(N.dim)
    mats = {}
    for g in desc.generator_names():
        kind, idx = g[0], int(g[1:])
        if (kind == "T" and idx < m) or (kind == "X" and idx <= m):
            mats[g] = la.kron(M.mats[g], IN)
        else:
            mats[g] = la.kron(IM, N.mats[f"{kind}{idx - m}"])
    return ModuleRep(desc, mats, M.dim * N.dim)


def tau_dual(M: ModuleRep) -> ModuleRep:
    """Dual module twisted by the anti-automorphism fixing the generators:
    every generator acts by the transpose."""
    return ModuleRep(M.desc, {g: m.transpose() for g, m in M.mats.items()}, M.dim)


def sigma_twist(M: ModuleRep) -> ModuleRep:
    """Twist by X_0 -> -X_0 (identity on the other generators)."""
    mats = dict(M.mats)
    mats["X0"] = -mats["X0"]
    return ModuleRep(M.desc, mats, M.dim)


def psi_twist(M: ModuleRep) -> ModuleRep:
    """Twist by conjugation with X_0, which sends T_0 to X_1 T_0^{-1} and
    fixes the other generators."""
    mats = dict(M.mats)
    mats["T0"] = M.X(1) * M.T(0).inv()
    return ModuleRep(M.desc, mats, M.dim)


def weyl_twist(M: ModuleRep, x: WeylElem, target_tgens: Iterable[int] | None = None) -> ModuleRep:
    """The module ^xM: a generator h of the target acts as phi_{x^{-1}}(h)
    acts on M, where T_i -> T_{x^{-1} s_i x} and X_j -> x^{-1}(X_j)."""
    xinv = x.inverse()
    n = M.desc.n
    tg = []
    tmap = {}
    for i in range(n):
        k = simple_index(xinv * WeylElem.simple(i, n) * x)
        if k is not None and k in M.desc.tgens:
            tg.append(i)
            tmap[i] = k
    if target_tgens is not None and frozenset(target_tgens) != frozenset(tg):
        raise ValueError("twisting element does not carry the parabolic as expected")
    desc = M.desc.with_tgens(tg)
    mats = {}
    for g in desc.generator_names():
        kind, idx = g[0], int(g[1:])
        if kind == "T":
            mats[g] = M.T(tmap[idx])
        else:
            e = [0] * (n + 1)
            e[idx] = 1
            img = xinv.act_on_weight(e)
            if not M.desc.x0 and img[0]:
                raise ValueError("twist needs X_0")
            mats[g] = M.monomial(img)
    return ModuleRep(desc, mats, M.dim)


def restrict(M: ModuleRep, target: AlgebraDesc) -> ModuleRep:
    """Restriction along an inclusion given by generator names (works for
    parabolic subalgebras and for H_{n-1} inside H_n)."""
    names = target.generator_names()
    missing = [g for g in names if g not in M.mats]
    if missing or not M.desc.same_params(target):
        raise ValueError(f"{target.label()} is not a subalgebra of {M.desc.label()}")
    return ModuleRep(target, {g: M.mats[g] for g in names}, M.dim)


# ---------------------------------------------------------------- subspaces

def _change_of_basis(M: ModuleRep, basis: fmpq_mat):
    comp = la.complement_columns(basis)
    P = la.hstack([basis, comp], M.dim)
    return P, P.inv(), basis.ncols()


def is_submodule(M: ModuleRep, basis: fmpq_mat) -> bool:
    return all(la.in_span(basis, g * basis) for g in M.mats.values()) if basis.ncols() else True


def sub_module(M: ModuleRep, basis: fmpq_mat) -> ModuleRep:
    if basis.ncols() == 0:
        return ModuleRep(M.desc, {g: la.zeros(0, 0) for g in M.mats}, 0)
    mats = {g: la.restricted_action(m, basis) for g, m in M.mats.items()}
    return ModuleRep(M.desc, mats, basis.ncols())


def quotient_module(M: ModuleRep, basis: fmpq_mat) -> ModuleRep:
    P, Pinv, k = _change_of_basis(M, basis)
    d = M.dim
    mats = {g: la.block(Pinv * m * P, k, d, k, d) for g, m in M.mats.items()}
    return ModuleRep(M.desc, mats, d - k)


def quotient_map(M: ModuleRep, basis: fmpq_mat) -> fmpq_mat:
    """Matrix of M -> M/U in the basis used by ``quotient_module``."""
    P, Pinv, k = _change_of_basis(M, basis)
    return la.block(Pinv, k, M.dim, 0, M.dim)


def annihilator(basis: fmpq_mat) -> fmpq_mat:
    """{v : u^T v = 0 for all columns u}; pairs dual submodules."""
    return la.nullspace(basis.transpose()) if basis.ncols() else la.identity(basis.nrows())


def _spin(mats: Sequence[fmpq_mat], dim: int, start: fmpq_mat, existing: fmpq_mat | None = None,
          record: list | None = None, gen_names: Sequence[str] | None = None) -> fmpq_mat:
    """Column basis of the smallest invariant subspace containing ``start``
    (and ``existing``, assumed invariant).  With ``record``, appends for each
    new basis vector either ("gen", k) or (generator index, parent index)."""
    B = existing if existing is not None else la.zeros(dim, 0)
    base = B.ncols()
    cand = start
    labels = [("gen", k) for k in range(start.ncols())]
    while cand.ncols():
        r, rk = la.hstack([B, cand], dim).rref()
        piv = la._pivots(r, rk)
        new = [p - B.ncols() for p in piv if p >= B.ncols()]
        if not new:
            break
        F = la.columns(cand, new)
        if record is not None:
            record.extend(labels[k] for k in new)
        first = B.ncols()
        B = la.hstack([B, F], dim)
        imgs = []
        labels = []
        for gi, g in enumerate(mats):
            imgs.append(g * F)
            labels.extend((gi, first + k) for k in range(F.ncols()))
        cand = la.hstack(imgs, dim)
        if B.ncols() == dim:
            break
    return B


def _echelon_spin(mats: Sequence[fmpq_mat], dim: int, start: fmpq_mat) -> fmpq_mat:
    """Invariant closure of the column span of ``start``, kept as reduced
    echelon rows so that entries stay small.  Returns a column basis."""
    tmats = [g.transpose() for g in mats]
    E = la.zeros(0, dim)
    piv: List[int] = []
    cand = start.transpose()
    while cand.nrows():
        if piv:
            R = cand - la.columns(cand, piv) * E
        else:
            R = cand
        F = la.echelon_rows(R)
        if F.nrows() == 0:
            break
        fpiv = la._pivots(F, F.nrows())
        if piv:
            E = E - la.columns(E, fpiv) * F
        rows = la.to_rows(E) + la.to_rows(F)
        allpiv = piv + fpiv
        order = sorted(range(len(allpiv)), key=lambda k: allpiv[k])
        E = la.from_rows([rows[k] for k in order]) if rows else E
        piv = [allpiv[k] for k in order]
        if len(piv) == dim:
            break
        cand = la.vstack([F * g for g in tmats], dim)
    return E.transpose() if E.nrows() else la.zeros(dim, 0)


def spin(M: ModuleRep, vectors: fmpq_mat) -> fmpq_mat:
    return _echelon_spin(list(M.mats.values()), M.dim, vectors)


def spin_transpose(M: ModuleRep, vectors: fmpq_mat) -> fmpq_mat:
    return _echelon_spin([m.transpose() for m in M.mats.values()], M.dim, vectors)


# ---------------------------------------------------------------- weights

def weight_spaces(M: ModuleRep) -> List[Tuple[tuple, fmpq_mat]]:
    """Generalized simultaneous eigenspaces of the X's, sorted by weight.

    Raises NonRationalSpectrum when the rational eigenvalues do not
    exhaust the dimension."""
    hit = M._cache.get("weights")
    if hit is not None:
        return hit
    spaces = [((), la.identity(M.dim))] if M.dim else []
    for X in M.x_matrices():
        nxt = []
        for t, B in spaces:
            R = la.restricted_action(X, B)
            roots, missing = la.rational_eigenvalues(R)
            if missing:
                raise NonRationalSpectrum(f"{M!r}: {missing} eigenvalue(s) of an X are not rational")
            for lam, mult in roots:
                K = la.generalized_eigenspace(R, lam, mult)
                nxt.append((t + (lam,), B * K))
        spaces = nxt
    spaces.sort(key=lambda item: item[0])
    M._cache["weights"] = spaces
    return spaces


def weight_multiplicities(M: ModuleRep) -> Dict[tuple, int]:
    return {t: B.ncols() for t, B in weight_spaces(M)}


def weight_space(M: ModuleRep, t: Sequence) -> fmpq_mat:
    t = tuple(to_scalar(x) for x in t)
    for s, B in weight_spaces(M):
        if s == t:
            return B
    return la.zeros(M.dim, 0)


def eigen_space(M: ModuleRep, t: Sequence, transpose: bool = False) -> fmpq_mat:
    """Simultaneous eigenspace of the X's (or of their transposes) at t."""
    t = tuple(to_scalar(x) for x in t)
    key = ("eig", t, transpose)
    hit = M._cache.get(key)
    if hit is not None:
        return hit
    xs = M.x_matrices()
    if transpose:
        xs = [x.transpose() for x in xs]
    stacked = la.vstack([x - la.scalar_matrix(M.dim, v) for x, v in zip(xs, t)], M.dim)
    out = la.nullspace(stacked)
    M._cache[key] = out
    return out


# ---------------------------------------------------------------- homomorphisms

def _generators_by_weight(M: ModuleRep):
    """Weight-vector generators of M with the spin record of M's basis."""
    mats = list(M.mats.values())
    gens: List[Tuple[fmpq_mat, tuple, bool]] = []
    record: list = []
    B = la.zeros(M.dim, 0)
    cands = []
    for t, W in weight_spaces(M):
        E = eigen_space(M, t)
        for k in range(E.ncols()):
            cands.append((la.column(E, k), t, True))
    for t, W in weight_spaces(M):
        for k in range(W.ncols()):
            cands.append((la.column(W, k), t, False))
    for v, t, is_eig in cands:
        if B.ncols() == M.dim:
            break
        if la.in_span(B, v):
            continue
        rec: list = []
        B = _spin(mats, M.dim, v, B, rec)
        gidx = len(gens)
        gens.append((v, t, is_eig))
        record.extend(("gen", gidx) if r[0] == "gen" else r for r in rec)
    return gens, record, B


def hom_space(M: ModuleRep, N: ModuleRep) -> List[fmpq_mat]:
    """A basis of Hom_H(M, N) as dim N x dim M matrices."""
    if M.desc.generator_names() != N.desc.generator_names():
        raise ValueError("modules over different algebras")
    if M.dim == 0 or N.dim == 0:
        return []
    gens, record, B = _generators_by_weight(M)
    # unknown block for each generator: where its image may live in N
    targets = []
    for v, t, is_eig in gens:
        T = eigen_space(N, t) if is_eig else weight_space(N, t)
        targets.append(T)
    nunk = sum(T.ncols() for T in targets)
    if nunk == 0:
        return []
    names = list(M.mats)
    nmats = [N.mats[g] for g in names]
    phis: List[fmpq_mat] = []
    off = 0
    offsets = []
    for T in targets:
        offsets.append(off)
        off += T.ncols()
    for r in record:
        if r[0] == "gen":
            k = r[1]
            T = targets[k]
            P = la.zeros(N.dim, nunk)
            for i in range(N.dim):
                for j in range(T.ncols()):
                    if T[i, j] != 0:
                        P[i, offsets[k] + j] = T[i, j]
            phis.append(P)
        else:
            gi, parent = r
            phis.append(nmats[gi] * phis[parent])
    d = M.dim
    Binv = B.inv()
    # Psi_u: images of the basis vectors under the u-th unknown direction
    flat = [P.entries() for P in phis]
    psis = []
    for u in range(nunk):
        Psi = fmpq_mat(N.dim, d, [flat[k][i * nunk + u] for i in range(N.dim) for k in range(d)])
        psis.append(Psi)
    eqs = la.zeros(0, nunk)
    for gname, gm in M.mats.items():
        C = Binv * gm * B
        gn = N.mats[gname]
        cols = []
        for Psi in psis:
            Z = gn * Psi - Psi * C
            cols.append(Z.entries())
        rows = len(cols[0])
        E = fmpq_mat(nunk, rows, [x for col in cols for x in col]).transpose()
        eqs = la.echelon_rows(la.vstack([eqs, la.echelon_rows(E)], nunk))
        if eqs.nrows() == nunk:
            return []
    sol = la.nullspace(eqs)
    out = []
    for s in range(sol.ncols()):
        Psi = la.zeros(N.dim, d)
        for u in range(nunk):
            c = sol[u, s]
            if c != 0:
                Psi += psis[u] * c
        out.append(Psi * Binv)
    return out


def is_homomorphism(M: ModuleRep, N: ModuleRep, phi: fmpq_mat) -> bool:
    return all(phi * M.mats[g] == N.mats[g] * phi for g in M.mats)


def end_dim(M: ModuleRep) -> int:
    return len(hom_space(M, M))


def is_isomorphic(M: ModuleRep, N: ModuleRep, seed: int | None = None, tries: int = 8) -> bool:
    seed = _resolve(seed)
    if M.dim != N.dim or M.desc.generator_names() != N.desc.generator_names():
        return False
    if M.dim == 0:
        return True
    if weight_multiplicities(M) != weight_multiplicities(N):
        return False
    homs = hom_space(M, N)
    if not homs:
        return False
    if len(homs) == 1:
        return homs[0].det() != 0
    rng = random.Random(seed)
    for _ in range(tries):
        phi = la.zeros(N.dim, M.dim)
        for h in homs:
            phi += h * rng.randint(-10 ** 6, 10 ** 6)
        if phi.det() != 0:
            return True
    if len(homs) <= 3:
        return _det_identically_nonzero(homs, M.dim)
    raise Undecided(f"isomorphism test: {tries} random combinations of a {len(homs)}-dimensional "
                    f"Hom space were all singular")


def _det_identically_nonzero(homs: List[fmpq_mat], d: int) -> bool:
    """Exact test whether det(sum x_i h_i) is a nonzero polynomial, by
    evaluating the homogeneous degree-d form on enough points."""
    k = len(homs)
    if k == 1:
        return homs[0].det() != 0
    # dehomogenize x_0 = 1 on a grid of side d+1, then recurse on x_0 = 0
    import itertools
    for pt in itertools.product(range(d + 1), repeat=k - 1):
        phi = homs[0]
        for h, c in zip(homs[1:], pt):
            if c:
                phi = phi + h * c
        if phi.det() != 0:
            return True
    return _det_identically_nonzero(homs[1:], d)


# ---------------------------------------------------------------- irreducibility

def _random_algebra_element(M: ModuleRep, rng: random.Random) -> fmpq_mat:
    mats = list(M.mats.values())
    theta = la.zeros(M.dim, M.dim)
    for g in mats:
        theta += g * rng.randint(-5, 5)
    for _ in range(3):
        a, b = rng.choice(mats), rng.choice(mats)
        theta += (a * b) * rng.randint(-5, 5)
    return theta


def find_proper_submodule(M: ModuleRep, seed: int | None = None, retries: int = 24) -> Optional[fmpq_mat]:
    """A column basis of a proper nonzero submodule, or None if M is
    irreducible.  Raises Undecided if no certificate is found."""
    seed = _resolve(seed)
    key = ("split", seed)
    if key in M._cache:
        return M._cache[key]
    res = _find_proper_submodule(M, seed, retries)
    M._cache[key] = res
    return res


def _find_proper_submodule(M: ModuleRep, seed: int, retries: int) -> Optional[fmpq_mat]:
    d = M.dim
    if d <= 1:
        return None
    mats = list(M.mats.values())
    tmats = [m.transpose() for m in mats]
    spaces = weight_spaces(M)
    # certified route: a weight with one dimensional eigenspaces on both sides
    for t, W in spaces:
        E = eigen_space(M, t)
        if E.ncols() != 1:
            continue
        Et = eigen_space(M, t, transpose=True)
        if Et.ncols() != 1:
            continue
        U = _echelon_spin(mats, d, E)
        if U.ncols() < d:
            return U
        V = _echelon_spin(tmats, d, Et)
        if V.ncols() < d:
            return annihilator(V)
        return None
    # look for an obvious split among weight vectors
    for t, W in spaces:
        E = eigen_space(M, t)
        for k in range(min(E.ncols(), 2)):
            U = _echelon_spin(mats, d, la.column(E, k))
            if U.ncols() < d:
                return U
        Et = eigen_space(M, t, transpose=True)
        for k in range(min(Et.ncols(), 2)):
            V = _echelon_spin(tmats, d, la.column(Et, k))
            if V.ncols() < d:
                return annihilator(V)
    rng = random.Random(seed)
    for _ in range(retries):
        theta = _random_algebra_element(M, rng)
        cp = theta.charpoly()
        _, factors = cp.factor()
        for f, _e in sorted(factors, key=lambda fe: fe[0].degree()):
            ft = la.poly_of_matrix(f, theta)
            K = la.nullspace(ft)
            if K.ncols() != f.degree():
                continue
            U = _echelon_spin(mats, d, la.column(K, 0))
            if U.ncols() < d:
                return U
            Kt = la.nullspace(ft.transpose())
            V = _echelon_spin(tmats, d, la.column(Kt, 0))
            if V.ncols() < d:
                return annihilator(V)
            return None
    raise Undecided(f"irreducibility of {M!r}: no weight with one-dimensional eigenspaces and "
                    f"{retries} random elements gave no usable characteristic polynomial factor")


def is_irreducible(M: ModuleRep, seed: int | None = None) -> bool:
    return M.dim > 0 and find_proper_submodule(M, seed) is None


def composition_series_factors(M: ModuleRep, seed: int | None = None) -> List[ModuleRep]:
    """All composition factors (with repetition) found by recursive splitting."""
    seed = _resolve(seed)
    key = ("factors", seed)
    if key in M._cache:
        return M._cache[key]
    if M.dim == 0:
        return []
    U = find_proper_submodule(M, seed)
    if U is None:
        out = [M]
    else:
        out = composition_series_factors(sub_module(M, U), seed) + \
            composition_series_factors(quotient_module(M, U), seed)
    M._cache[key] = out
    return out


def group_isomorphic(mods: Iterable[ModuleRep]) -> List[Tuple[ModuleRep, int]]:
    classes: List[List] = []
    for L in mods:
        for entry in classes:
            if is_isomorphic(entry[0], L):
                entry[1] += 1
                break
        else:
            classes.append([L, 1])
    return [(L, k) for L, k in classes]


def composition_factors(M: ModuleRep, seed: int | None = None) -> List[Tuple[ModuleRep, int]]:
    """Composition factors up to isomorphism, with multiplicities."""
    return group_isomorphic(composition_series_factors(M, seed))


def multiplicity(L: ModuleRep, M: ModuleRep) -> int:
    return sum(k for S, k in composition_factors(M) if is_isomorphic(S, L))


# ---------------------------------------------------------------- socle, cosocle

def socle_components(M: ModuleRep) -> List[Tuple[ModuleRep, fmpq_mat]]:
    """Isotypic components of the socle: (simple type, column basis)."""
    hit = M._cache.get("socle")
    if hit is not None:
        return hit
    out = []
    for L, _k in composition_factors(M):
        homs = hom_space(L, M)
        if homs:
            out.append((L, la.column_basis(la.hstack(homs, M.dim))))
    M._cache["socle"] = out
    return out


def socle(M: ModuleRep) -> fmpq_mat:
    comps = socle_components(M)
    if not comps:
        return la.zeros(M.dim, 0)
    return la.column_basis(la.hstack([B for _, B in comps], M.dim))


def radical(M: ModuleRep) -> fmpq_mat:
    S = socle(tau_dual(M))
    return annihilator(S)


def cosocle(M: ModuleRep) -> ModuleRep:
    return quotient_module(M, radical(M))


def socle_module(M: ModuleRep) -> ModuleRep:
    return sub_module(M, socle(M))


def simple_summands(M: ModuleRep) -> List[ModuleRep]:
    """Simple summands of a semisimple module (with repetition)."""
    out = []
    for L, B in socle_components(M):
        out.extend([L] * (B.ncols() // L.dim))
    return out
