"""Exact rational scalars and Laurent polynomials in X_0, ..., X_n.

Scalars are flint ``fmpq`` values.  They hash like Python ints, print as
``"-5/3"`` and parse from the same strings, which is all the serialization
layer needs.  Do not mix them with ``fractions.Fraction``: the two compare
unequal even when they denote the same number.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterable, Iterator, Mapping, Sequence, Tuple

from flint import fmpq, fmpz

Scalar = fmpq
Weight = Tuple[int, ...]

ZERO = fmpq(0)
ONE = fmpq(1)


def to_scalar(x) -> fmpq:
    """Coerce ints, strings like ``"-1/2"``, Fractions and fmpz to fmpq."""
    if isinstance(x, fmpq):
        return x
    if isinstance(x, (int, fmpz)):
        return fmpq(x)
    if isinstance(x, Fraction):
        return fmpq(x.numerator, x.denominator)
    if isinstance(x, str):
        s = x.strip().replace("−", "-")
        if not s:
            raise ValueError("empty scalar")
        try:
            if "/" in s:
                num, den = s.split("/")
                return fmpq(int(num), int(den))
            return fmpq(int(s))
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"cannot parse scalar {x!r}") from exc
    raise TypeError(f"cannot coerce {type(x).__name__} to a scalar")


def fmt(x) -> str:
    return str(to_scalar(x))


def is_integer(x: fmpq) -> bool:
    return x.q == 1


def scalar_pow(x: fmpq, k: int) -> fmpq:
    if k >= 0:
        return x ** k
    return (1 / x) ** (-k)


class LaurentPoly:
    """Sparse Laurent polynomial over Q in the variables X_0, ..., X_n.

    Terms are stored as ``{exponent tuple: coefficient}``; zero coefficients
    are never stored.  Instances are treated as immutable.
    """

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[Weight, object] | None = None):
        self.nvars = nvars
        clean: Dict[Weight, fmpq] = {}
        if terms:
            for mono, c in terms.items():
                c = to_scalar(c)
                if c != 0:
                    if len(mono) != nvars:
                        raise ValueError(f"exponent {mono} has wrong length for {nvars} variables")
                    clean[tuple(mono)] = c
        self.terms = clean

    @classmethod
    def constant(cls, nvars: int, c=1) -> "LaurentPoly":
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def monomial(cls, exps: Sequence[int], c=1) -> "LaurentPoly":
        return cls(len(exps), {tuple(exps): c})

    @classmethod
    def var(cls, nvars: int, j: int, power: int = 1) -> "LaurentPoly":
        e = [0] * nvars
        e[j] = power
        return cls(nvars, {tuple(e): 1})

    def __iter__(self) -> Iterator[Tuple[Weight, fmpq]]:
        return iter(self.terms.items())

    def __len__(self) -> int:
        return len(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        if isinstance(other, LaurentPoly):
            return self.nvars == other.nvars and self.terms == other.terms
        if isinstance(other, (int, fmpq)):
            return self == LaurentPoly.constant(self.nvars, other)
        return NotImplemented

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __add__(self, other) -> "LaurentPoly":
        other = self._coerce(other)
        return LaurentPoly(self.nvars, poly_add(self.terms, other.terms))

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(self.nvars, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other) -> "LaurentPoly":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "LaurentPoly":
        return self._coerce(other) - self

    def __mul__(self, other) -> "LaurentPoly":
        if isinstance(other, (int, fmpq, str, Fraction)):
            c = to_scalar(other)
            return LaurentPoly(self.nvars, {m: v * c for m, v in self.terms.items()})
        other = self._coerce(other)
        return LaurentPoly(self.nvars, poly_mul(self.terms, other.terms))

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "LaurentPoly":
        if k < 0:
            if len(self.terms) != 1:
                raise ValueError("only monomials have Laurent inverses")
            (m, c), = self.terms.items()
            return LaurentPoly(self.nvars, {tuple(-e for e in m): 1 / c}) ** (-k)
        out = LaurentPoly.constant(self.nvars)
        for _ in range(k):
            out = out * self
        return out

    def _coerce(self, other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            if other.nvars != self.nvars:
                raise ValueError("variable count mismatch")
            return other
        return LaurentPoly.constant(self.nvars, other)

    def evaluate(self, point: Sequence) -> fmpq:
        """Evaluate at a tuple of nonzero scalars (one per variable)."""
        point = [to_scalar(v) for v in point]
        total = ZERO
        for mono, c in self.terms.items():
            term = c
            for v, e in zip(point, mono):
                if e:
                    term = term * scalar_pow(v, e)
            total += term
        return total

    def map_exponents(self, f) -> "LaurentPoly":
        """Apply an additive map on exponent vectors (a lattice automorphism)."""
        out: Dict[Weight, fmpq] = {}
        for mono, c in self.terms.items():
            m2 = tuple(f(mono))
            out[m2] = out.get(m2, ZERO) + c
        return LaurentPoly(self.nvars, out)

    def sorted_terms(self):
        return sorted(self.terms.items())

    def __repr__(self) -> str:
        return f"LaurentPoly({self})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for mono, c in self.sorted_terms():
            factors = []
            for j, e in enumerate(mono):
                if e == 1:
                    factors.append(f"X{j}")
                elif e:
                    factors.append(f"X{j}^{e}")
            if not factors:
                parts.append(str(c))
            elif c == 1:
                parts.append("*".join(factors))
            elif c == -1:
                parts.append("-" + "*".join(factors))
            else:
                parts.append(f"({c})*" + "*".join(factors))
        return " + ".join(parts)

    def to_json(self):
        return [{"exp": list(m), "coeff": str(c)} for m, c in self.sorted_terms()]

    @classmethod
    def from_json(cls, nvars: int, data) -> "LaurentPoly":
        return cls(nvars, {tuple(t["exp"]): to_scalar(t["coeff"]) for t in data})


# Dict-level helpers; the straightening engine works on raw dicts for speed.

def poly_add(a: Mapping[Weight, fmpq], b: Mapping[Weight, fmpq]) -> Dict[Weight, fmpq]:
    out = dict(a)
    for m, c in b.items():
        v = out.get(m, ZERO) + c
        if v == 0:
            out.pop(m, None)
        else:
            out[m] = v
    return out


def poly_iadd(acc: Dict[Weight, fmpq], b: Mapping[Weight, fmpq], scale: fmpq = ONE) -> None:
    for m, c in b.items():
        v = acc.get(m, ZERO) + c * scale
        if v == 0:
            acc.pop(m, None)
        else:
            acc[m] = v


def poly_mul(a: Mapping[Weight, fmpq], b: Mapping[Weight, fmpq]) -> Dict[Weight, fmpq]:
    out: Dict[Weight, fmpq] = {}
    for m1, c1 in a.items():
        for m2, c2 in b.items():
            m = tuple(x + y for x, y in zip(m1, m2))
            v = out.get(m, ZERO) + c1 * c2
            if v == 0:
                out.pop(m, None)
            else:
                out[m] = v
    return out


def tuple_str(t: Iterable) -> str:
    return "(" + ",".join(fmt(x) for x in t) + ")"
