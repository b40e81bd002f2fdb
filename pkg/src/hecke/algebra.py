"""Affine Hecke algebras of type B and the straightening engine.

Every element is written uniquely as a sum of T_w f_w(X) with w in W_n and
f_w a Laurent polynomial in X_0, ..., X_n.  Products are brought to this form
by pushing Laurent monomials to the right through one T_i at a time, using
the crossing rules below (c_0 = p - 1/p, c_i = q - 1/q for i >= 1):

    X_0 T_0       = T_0 X_0 X_1 - c_0 X_0 X_1
    X_0^{-1} T_0  = T_0 X_0^{-1} X_1^{-1} + c_0 X_0^{-1}
    X_1 T_0       = T_0 X_1^{-1} + c_0 (X_1 + 1)
    X_1^{-1} T_0  = T_0 X_1 - c_0 (X_1 + 1)
    X_i T_i       = T_i X_{i+1} - c_i X_{i+1}
    X_{i+1} T_i   = T_i X_i + c_i X_{i+1}
    X_i^{-1} T_i  = T_i X_{i+1}^{-1} + c_i X_i^{-1}
    X_{i+1}^{-1} T_i = T_i X_i^{-1} - c_i X_i^{-1}

All other X_j commute with T_i.  The subalgebras without X_0 (the finite
type B part times the lattice in X_1..X_n, the type A algebra, parabolics)
use the same engine with X_0 never appearing.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, List, Mapping, Sequence, Tuple

from flint import fmpq

from .scalars import (ONE, ZERO, LaurentPoly, Weight, poly_iadd, poly_mul,
                      to_scalar)
from .weyl import WeylElem, as_index_set

Poly = Dict[Weight, fmpq]


@dataclass(frozen=True)
class AlgebraDesc:
    """Which (sub)algebra of the type B affine Hecke algebra H_n.

    ``tgens`` is the set of i with T_i present; ``x0`` says whether X_0 is
    present.  X_1, ..., X_n are always present.
    """

    n: int
    p: fmpq
    q: fmpq
    x0: bool
    tgens: FrozenSet[int]

    def __post_init__(self):
        object.__setattr__(self, "p", to_scalar(self.p))
        object.__setattr__(self, "q", to_scalar(self.q))
        object.__setattr__(self, "tgens", frozenset(self.tgens))
        if self.n < 0:
            raise ValueError("rank must be nonnegative")
        if not self.tgens <= set(range(self.n)):
            raise ValueError(f"T-generators {sorted(self.tgens)} out of range for n={self.n}")
        for name, v in (("p", self.p), ("q", self.q)):
            if v == 0 or v == 1 or v == -1:
                raise ValueError(f"parameter {name}={v} must not be 0 or a root of unity")

    @classmethod
    def B(cls, n, p=2, q=3):
        return cls(n, p, q, True, frozenset(range(n)))

    @classmethod
    def R(cls, n, p=2, q=3):
        return cls(n, p, q, False, frozenset(range(n)))

    @classmethod
    def A(cls, n, p=2, q=3):
        return cls(n, p, q, False, frozenset(range(1, n)))

    @classmethod
    def lattice(cls, n, p=2, q=3, x0=True):
        return cls(n, p, q, x0, frozenset())

    @classmethod
    def parabolic(cls, n, I, p=2, q=3, x0=True):
        return cls(n, p, q, x0, as_index_set(I))

    @property
    def variant(self) -> str:
        full = frozenset(range(self.n))
        if self.x0 and self.tgens == full:
            return "B"
        if not self.x0 and self.tgens == full and self.n >= 1 and 0 in self.tgens:
            return "R"
        if not self.x0 and self.tgens == frozenset(range(1, self.n)):
            return "A"
        if self.x0 and not self.tgens:
            return "P"
        return "ParabolicB" if self.x0 else "ParabolicA"

    def param(self, i: int) -> fmpq:
        return self.p if i == 0 else self.q

    def cparam(self, i: int) -> fmpq:
        t = self.param(i)
        return t - 1 / t

    def x_indices(self) -> List[int]:
        return list(range(0 if self.x0 else 1, self.n + 1))

    def generator_names(self) -> List[str]:
        return [f"T{i}" for i in sorted(self.tgens)] + [f"X{j}" for j in self.x_indices()]

    def with_tgens(self, I) -> "AlgebraDesc":
        return AlgebraDesc(self.n, self.p, self.q, self.x0, as_index_set(I))

    def with_rank(self, n: int, tgens=None) -> "AlgebraDesc":
        if tgens is None:
            tgens = [i for i in self.tgens if i < n]
        return AlgebraDesc(n, self.p, self.q, self.x0, frozenset(tgens))

    def same_params(self, other: "AlgebraDesc") -> bool:
        return self.p == other.p and self.q == other.q

    def contains(self, other: "AlgebraDesc") -> bool:
        """True when ``other`` is a subalgebra of the same rank generated by
        a subset of our generators."""
        return (self.n == other.n and self.same_params(other)
                and other.tgens <= self.tgens and (self.x0 or not other.x0))

    def label(self) -> str:
        v = self.variant
        if v.startswith("Parabolic"):
            return f"{v}(n={self.n}, I={sorted(self.tgens)})"
        return f"{v}(n={self.n})"

    def to_json(self) -> dict:
        out = {"variant": self.variant, "n": self.n, "p": str(self.p), "q": str(self.q)}
        if self.variant.startswith("Parabolic") or self.variant == "P":
            out["I"] = sorted(self.tgens)
            out["x0"] = self.x0
        return out

    @classmethod
    def from_json(cls, d: Mapping) -> "AlgebraDesc":
        n, p, q = int(d["n"]), d.get("p", "2"), d.get("q", "3")
        v = d.get("variant", "B")
        if v == "B":
            return cls.B(n, p, q)
        if v == "R":
            return cls.R(n, p, q)
        if v == "A":
            return cls.A(n, p, q)
        if v == "P":
            return cls.lattice(n, p, q, d.get("x0", True))
        if v in ("ParabolicB", "ParabolicA"):
            return cls(n, p, q, v == "ParabolicB", frozenset(d.get("I", [])))
        raise ValueError(f"unknown algebra variant {v!r}")


class CrossingRules:
    """Unit crossing rules X_j^{u} T_i = T_i alpha + beta (u = +-1).

    Returns (alpha, beta) as polynomial dicts, or None if X_j commutes
    with T_i.  Subclass to perturb a rule in tests.
    """

    def __init__(self, n: int, p, q):
        self.n = n
        self.p = to_scalar(p)
        self.q = to_scalar(q)

    def c(self, i: int) -> fmpq:
        t = self.p if i == 0 else self.q
        return t - 1 / t

    def _mono(self, **exps) -> Weight:
        e = [0] * (self.n + 1)
        for k, v in exps.items():
            e[int(k[1:])] += v
        return tuple(e)

    def unit(self, i: int, j: int, u: int):
        c = self.c(i)
        m = self._mono
        if i == 0:
            if j == 0 and u == 1:
                return {m(x0=1, x1=1): ONE}, {m(x0=1, x1=1): -c}
            if j == 0 and u == -1:
                return {m(x0=-1, x1=-1): ONE}, {m(x0=-1): c}
            if j == 1 and u == 1:
                return {m(x1=-1): ONE}, {m(x1=1): c, m(): c}
            if j == 1 and u == -1:
                return {m(x1=1): ONE}, {m(x1=1): -c, m(): -c}
            return None
        a, b = f"x{i}", f"x{i + 1}"
        if j == i and u == 1:
            return {m(**{b: 1}): ONE}, {m(**{b: 1}): -c}
        if j == i + 1 and u == 1:
            return {m(**{a: 1}): ONE}, {m(**{b: 1}): c}
        if j == i and u == -1:
            return {m(**{b: -1}): ONE}, {m(**{a: -1}): c}
        if j == i + 1 and u == -1:
            return {m(**{a: -1}): ONE}, {m(**{a: -1}): -c}
        return None


def _involved(i: int) -> Tuple[int, int]:
    return (0, 1) if i == 0 else (i, i + 1)


class Straightener:
    """Normal-form arithmetic in H_n for fixed (n, p, q) and crossing rules."""

    def __init__(self, n: int, p, q, rules: CrossingRules | None = None):
        self.n = n
        self.p = to_scalar(p)
        self.q = to_scalar(q)
        self.rules = rules or CrossingRules(n, p, q)
        self._cross_cache: Dict[Tuple[int, int, int], Tuple[Poly, Poly]] = {}

    def c(self, i: int) -> fmpq:
        return self.rules.c(i)

    def _cross_core(self, i: int, e1: int, e2: int) -> Tuple[Poly, Poly]:
        """X_a^{e1} X_b^{e2} T_i = T_i A + B for the two variables a, b that
        interact with T_i."""
        key = (i, e1, e2)
        hit = self._cross_cache.get(key)
        if hit is not None:
            return hit
        a, b = _involved(i)
        zero = (0,) * (self.n + 1)
        if e1 == 0 and e2 == 0:
            res = ({zero: ONE}, {})
        else:
            if e1 != 0:
                j, u = a, (1 if e1 > 0 else -1)
                rest = (i, e1 - u, e2)
            else:
                j, u = b, (1 if e2 > 0 else -1)
                rest = (i, e1, e2 - u)
            A1, B1 = self._cross_core(*rest)
            rule = self.rules.unit(i, j, u)
            xj = [0] * (self.n + 1)
            xj[j] = u
            xj = {tuple(xj): ONE}
            if rule is None:
                res = (poly_mul(xj, A1), poly_mul(xj, B1))
            else:
                alpha, beta = rule
                A = poly_mul(alpha, A1)
                B = poly_mul(beta, A1)
                poly_iadd(B, poly_mul(xj, B1))
                res = (A, B)
        self._cross_cache[key] = res
        return res

    def cross(self, mono: Weight, i: int) -> Tuple[Poly, Poly]:
        """X^mono T_i = T_i A + B."""
        a, b = _involved(i)
        A0, B0 = self._cross_core(i, mono[a], mono[b])
        rest = list(mono)
        rest[a] = 0
        rest[b] = 0
        if not any(rest):
            return A0, B0
        shift = lambda d: {tuple(x + y for x, y in zip(m, rest)): c for m, c in d.items()}
        return shift(A0), shift(B0)

    def cross_poly(self, f: Mapping[Weight, fmpq], i: int) -> Tuple[Poly, Poly]:
        A: Poly = {}
        B: Poly = {}
        for mono, c in f.items():
            a, b = self.cross(mono, i)
            poly_iadd(A, a, c)
            poly_iadd(B, b, c)
        return A, B

    def hecke_rmul(self, w: WeylElem, i: int) -> List[Tuple[WeylElem, fmpq]]:
        """T_w T_i in the finite Hecke algebra."""
        ws = w.rmul_simple(i)
        if w.has_right_descent(i):
            return [(w, self.c(i)), (ws, ONE)]
        return [(ws, ONE)]

    def hecke_lmul(self, i: int, w: WeylElem) -> List[Tuple[WeylElem, fmpq]]:
        """T_i T_w in the finite Hecke algebra."""
        sw = w.lmul_simple(i)
        if w.has_left_descent(i):
            return [(w, self.c(i)), (sw, ONE)]
        return [(sw, ONE)]

    def rmul_T(self, elem: Mapping[WeylElem, Poly], i: int) -> Dict[WeylElem, Poly]:
        out: Dict[WeylElem, Poly] = {}
        for w, f in elem.items():
            A, B = self.cross_poly(f, i)
            if A:
                for w2, c in self.hecke_rmul(w, i):
                    poly_iadd(out.setdefault(w2, {}), A, c)
            if B:
                poly_iadd(out.setdefault(w, {}), B)
        return {w: f for w, f in out.items() if f}

    def lmul_T(self, i: int, elem: Mapping[WeylElem, Poly]) -> Dict[WeylElem, Poly]:
        out: Dict[WeylElem, Poly] = {}
        for w, f in elem.items():
            for w2, c in self.hecke_lmul(i, w):
                poly_iadd(out.setdefault(w2, {}), f, c)
        return {w: f for w, f in out.items() if f}

    def rmul_poly(self, elem: Mapping[WeylElem, Poly], g: Mapping[Weight, fmpq]) -> Dict[WeylElem, Poly]:
        out = {w: poly_mul(f, g) for w, f in elem.items()}
        return {w: f for w, f in out.items() if f}

    def mul(self, a: Mapping[WeylElem, Poly], b: Mapping[WeylElem, Poly]) -> Dict[WeylElem, Poly]:
        out: Dict[WeylElem, Poly] = {}
        for v, g in b.items():
            e = dict(a)
            for i in v.reduced_word():
                e = self.rmul_T(e, i)
            e = self.rmul_poly(e, g)
            for w, f in e.items():
                poly_iadd(out.setdefault(w, {}), f)
        return {w: f for w, f in out.items() if f}

    def x_times_T(self, j: int, d: WeylElem) -> Dict[WeylElem, Poly]:
        """Normal form of X_j T_d."""
        e = [0] * (self.n + 1)
        e[j] = 1
        elem = {WeylElem.identity(self.n): {tuple(e): ONE}}
        for i in d.reduced_word():
            elem = self.rmul_T(elem, i)
        return elem


_ENGINES: Dict[tuple, Straightener] = {}


def engine_for(n: int, p, q) -> Straightener:
    key = (n, to_scalar(p), to_scalar(q))
    eng = _ENGINES.get(key)
    if eng is None:
        eng = Straightener(n, p, q)
        _ENGINES[key] = eng
    return eng


class NormalFormElem:
    """An element sum_w T_w f_w(X) of H_n, kept in normal form."""

    __slots__ = ("desc", "terms", "engine")

    def __init__(self, desc: AlgebraDesc, terms: Mapping[WeylElem, Mapping[Weight, object]] | None = None,
                 engine: Straightener | None = None):
        self.desc = desc
        self.engine = engine or engine_for(desc.n, desc.p, desc.q)
        clean: Dict[WeylElem, Poly] = {}
        for w, f in (terms or {}).items():
            f2 = {tuple(m): to_scalar(c) for m, c in f.items() if to_scalar(c) != 0}
            if f2:
                clean[w] = f2
        self.terms = clean

    def _new(self, terms) -> "NormalFormElem":
        out = NormalFormElem.__new__(NormalFormElem)
        out.desc = self.desc
        out.engine = self.engine
        out.terms = {w: f for w, f in terms.items() if f}
        return out

    @classmethod
    def one(cls, desc: AlgebraDesc, engine=None) -> "NormalFormElem":
        return cls(desc, {WeylElem.identity(desc.n): {(0,) * (desc.n + 1): ONE}}, engine)

    @classmethod
    def scalar(cls, desc: AlgebraDesc, c, engine=None) -> "NormalFormElem":
        return cls.one(desc, engine) * to_scalar(c)

    @classmethod
    def T(cls, desc: AlgebraDesc, i: int, engine=None) -> "NormalFormElem":
        if i not in desc.tgens:
            raise ValueError(f"T{i} is not a generator of {desc.label()}")
        return cls(desc, {WeylElem.simple(i, desc.n): {(0,) * (desc.n + 1): ONE}}, engine)

    @classmethod
    def Tw(cls, desc: AlgebraDesc, w: WeylElem, engine=None) -> "NormalFormElem":
        return cls(desc, {w: {(0,) * (desc.n + 1): ONE}}, engine)

    @classmethod
    def X(cls, desc: AlgebraDesc, j: int, power: int = 1, engine=None) -> "NormalFormElem":
        if j not in desc.x_indices():
            raise ValueError(f"X{j} is not a generator of {desc.label()}")
        e = [0] * (desc.n + 1)
        e[j] = power
        return cls(desc, {WeylElem.identity(desc.n): {tuple(e): ONE}}, engine)

    @classmethod
    def poly(cls, desc: AlgebraDesc, f: LaurentPoly, engine=None) -> "NormalFormElem":
        return cls(desc, {WeylElem.identity(desc.n): f.terms}, engine)

    @classmethod
    def generator(cls, desc: AlgebraDesc, name: str, engine=None) -> "NormalFormElem":
        kind, idx = name[0], int(name[1:])
        if kind == "T":
            return cls.T(desc, idx, engine)
        if kind == "X":
            return cls.X(desc, idx, 1, engine)
        raise ValueError(f"unknown generator {name!r}")

    def T_inverse(self, i: int) -> "NormalFormElem":
        return NormalFormElem.T(self.desc, i, self.engine) - self.desc.cparam(i)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, fmpq)):
            other = NormalFormElem.scalar(self.desc, other, self.engine)
        if not isinstance(other, NormalFormElem):
            return NotImplemented
        return (self - other).is_zero()

    def __hash__(self):
        return hash(frozenset((w, frozenset(f.items())) for w, f in self.terms.items()))

    def __add__(self, other) -> "NormalFormElem":
        if not isinstance(other, NormalFormElem):
            other = NormalFormElem.scalar(self.desc, other, self.engine)
        out = {w: dict(f) for w, f in self.terms.items()}
        for w, f in other.terms.items():
            poly_iadd(out.setdefault(w, {}), f)
        return self._new(out)

    __radd__ = __add__

    def __neg__(self) -> "NormalFormElem":
        return self._new({w: {m: -c for m, c in f.items()} for w, f in self.terms.items()})

    def __sub__(self, other) -> "NormalFormElem":
        if not isinstance(other, NormalFormElem):
            other = NormalFormElem.scalar(self.desc, other, self.engine)
        return self + (-other)

    def __rsub__(self, other) -> "NormalFormElem":
        return (-self) + other

    def __mul__(self, other) -> "NormalFormElem":
        if isinstance(other, NormalFormElem):
            return self._new(self.engine.mul(self.terms, other.terms))
        c = to_scalar(other)
        return self._new({w: {m: v * c for m, v in f.items()} for w, f in self.terms.items()})

    def __rmul__(self, other) -> "NormalFormElem":
        c = to_scalar(other)
        return self * c

    def __pow__(self, k: int) -> "NormalFormElem":
        out = NormalFormElem.one(self.desc, self.engine)
        for _ in range(k):
            out = out * self
        return out

    def sorted_terms(self):
        key = lambda item: (item[0].length(), item[0].reduced_word())
        return sorted(self.terms.items(), key=key)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for w, f in self.sorted_terms():
            poly = str(LaurentPoly(self.desc.n + 1, f))
            word = ",".join(str(i) for i in w.reduced_word())
            parts.append(f"T[{word}] * ({poly})")
        return " + ".join(parts)

    __repr__ = __str__

    def to_json(self) -> list:
        return [{"word": list(w.reduced_word()),
                 "poly": LaurentPoly(self.desc.n + 1, f).to_json()}
                for w, f in self.sorted_terms()]

    @classmethod
    def from_json(cls, desc: AlgebraDesc, data) -> "NormalFormElem":
        terms = {}
        for t in data:
            w = WeylElem.from_word(t["word"], desc.n)
            terms[w] = LaurentPoly.from_json(desc.n + 1, t["poly"]).terms
        return cls(desc, terms)


# Relations are lists of (coefficient, word) pairs whose sum must vanish.
# A word is a tuple of letters ("T", i, 1) or ("X", j, +-1).

Relation = Tuple[str, List[Tuple[fmpq, Tuple[Tuple[str, int, int], ...]]]]


def defining_relations(desc: AlgebraDesc, include_derived: bool = True) -> List[Relation]:
    """The defining relations among the generators present in ``desc``.

    Labels: quadratic-T0, quadratic-Ti, braid, commute, braid-B (the length
    four relation between T_0 and T_1), T0X0T0, TiXj (commuting), TiXiTi,
    X1T0 (needed when X_0 is absent, derived otherwise) and XX.
    """
    rels: List[Relation] = []
    I = sorted(desc.tgens)
    xs = desc.x_indices()
    one = ONE
    T = lambda i: ("T", i, 1)
    X = lambda j, e=1: ("X", j, e)
    for i in I:
        c = desc.cparam(i)
        name = "quadratic-T0" if i == 0 else f"quadratic-T{i}"
        rels.append((name, [(one, (T(i), T(i))), (-c, (T(i),)), (-one, ())]))
    for i in I:
        for j in I:
            if i < j and i >= 1 and j == i + 1:
                rels.append((f"braid-{i}{j}", [(one, (T(i), T(j), T(i))), (-one, (T(j), T(i), T(j)))]))
            elif i < j and j - i > 1:
                rels.append((f"commute-{i}{j}", [(one, (T(i), T(j))), (-one, (T(j), T(i)))]))
    if 0 in desc.tgens and 1 in desc.tgens:
        rels.append(("braid-B", [(one, (T(1), T(0), T(1), T(0))), (-one, (T(0), T(1), T(0), T(1)))]))
    if desc.x0 and 0 in desc.tgens:
        rels.append(("T0X0T0", [(one, (T(0), X(0), T(0))), (-one, (X(0), X(1)))]))
    for i in I:
        for j in xs:
            if j not in (i, i + 1):
                rels.append((f"T{i}X{j}", [(one, (T(i), X(j))), (-one, (X(j), T(i)))]))
    for i in I:
        if i >= 1:
            rels.append((f"T{i}X{i}T{i}", [(one, (T(i), X(i), T(i))), (-one, (X(i + 1),))]))
    if 0 in desc.tgens and (include_derived or not desc.x0):
        c = desc.cparam(0)
        rels.append(("X1T0", [(one, (X(1), T(0))), (-one, (T(0), X(1, -1))),
                              (-c, (X(1),)), (-c, ())]))
    for a in xs:
        for b in xs:
            if a < b:
                rels.append((f"X{a}X{b}", [(one, (X(a), X(b))), (-one, (X(b), X(a)))]))
    return rels


def relation_group(label: str) -> str:
    """Coarse relation family: one of quadratic, braid, commute, braid-B,
    T0X0T0, TiXj, TiXiTi, X1T0, XX."""
    if label.startswith("quadratic"):
        return "quadratic"
    if label == "braid-B":
        return "braid-B"
    if label.startswith("braid"):
        return "braid"
    if label.startswith("commute"):
        return "commute"
    if label == "T0X0T0":
        return "T0X0T0"
    if label == "X1T0":
        return "X1T0"
    if label.startswith("X"):
        return "XX"
    if label.count("T") == 2:
        return "TiXiTi"
    return "TiXj"


def word_element(desc: AlgebraDesc, word, engine: Straightener | None = None) -> NormalFormElem:
    out = NormalFormElem.one(desc, engine)
    for kind, idx, e in word:
        if kind == "T":
            g = NormalFormElem.T(desc, idx, out.engine)
        else:
            g = NormalFormElem.X(desc, idx, e, out.engine)
        out = out * g
    return out


def check_defining_relations(desc: AlgebraDesc, rules: CrossingRules | None = None) -> Dict[str, bool]:
    """Straighten every defining relation and report which vanish.

    A fresh engine is built when ``rules`` is given, so a perturbed rule set
    can be checked without touching the shared engine cache.
    """
    engine = Straightener(desc.n, desc.p, desc.q, rules) if rules is not None else engine_for(desc.n, desc.p, desc.q)
    out = {}
    for label, terms in defining_relations(desc):
        total = NormalFormElem(desc, {}, engine)
        for c, word in terms:
            total = total + word_element(desc, word, engine) * c
        out[label] = total.is_zero()
    return out


def central_elements(desc: AlgebraDesc) -> Dict[str, NormalFormElem]:
    """X_0^2 X_1...X_n and X_0 (1+X_1)...(1+X_n) (requires X_0)."""
    if not desc.x0:
        raise ValueError("the central elements involve X_0")
    n = desc.n
    z = [2] + [1] * n
    out = {"X0^2*X1...Xn": NormalFormElem(desc, {WeylElem.identity(n): {tuple(z): ONE}})}
    f = LaurentPoly.var(n + 1, 0)
    for j in range(1, n + 1):
        f = f * (LaurentPoly.var(n + 1, j) + 1)
    out["X0*prod(1+Xi)"] = NormalFormElem.poly(desc, f)
    return out
