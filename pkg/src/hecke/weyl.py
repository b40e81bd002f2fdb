"""The hyperoctahedral group W_n as signed permutations.

An element is stored by its window (w(1), ..., w(n)), extended to negative
arguments by w(-j) = -w(j).  Products compose as functions, so (uv)(j) =
u(v(j)).  Right multiplication by s_0 negates window position 1 and right
multiplication by s_i (i >= 1) swaps positions i and i+1.

Parabolic subgroups are indexed by sets I of simple reflections; a shape
(m0; m1, ..., ml) names the set {0..m0-1} u {m0+1..m0+m1-1} u ... .
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import FrozenSet, Iterable, List, Sequence, Tuple

from .scalars import scalar_pow, to_scalar

IndexSet = FrozenSet[int]


@dataclass(frozen=True, order=True)
class WeylElem:
    window: Tuple[int, ...]

    def __post_init__(self):
        n = len(self.window)
        if sorted(abs(x) for x in self.window) != list(range(1, n + 1)):
            raise ValueError(f"{self.window} is not a signed permutation")

    @property
    def n(self) -> int:
        return len(self.window)

    @classmethod
    def identity(cls, n: int) -> "WeylElem":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def simple(cls, i: int, n: int) -> "WeylElem":
        return cls.from_word([i], n)

    @classmethod
    def from_word(cls, word: Iterable[int], n: int) -> "WeylElem":
        w = list(range(1, n + 1))
        for i in word:
            _apply_right(w, i)
        return cls(tuple(w))

    def __call__(self, j: int) -> int:
        if j == 0:
            raise ValueError("signed permutations act on nonzero integers")
        v = self.window[abs(j) - 1]
        return v if j > 0 else -v

    def __mul__(self, other: "WeylElem") -> "WeylElem":
        if self.n != other.n:
            raise ValueError("rank mismatch")
        return WeylElem(tuple(self(other(j)) for j in range(1, self.n + 1)))

    def inverse(self) -> "WeylElem":
        inv = [0] * self.n
        for j, v in enumerate(self.window, start=1):
            inv[abs(v) - 1] = j if v > 0 else -j
        return WeylElem(tuple(inv))

    def rmul_simple(self, i: int) -> "WeylElem":
        w = list(self.window)
        _apply_right(w, i)
        return WeylElem(tuple(w))

    def lmul_simple(self, i: int) -> "WeylElem":
        return WeylElem.simple(i, self.n) * self

    def length(self) -> int:
        return _length(self.window)

    def has_right_descent(self, i: int) -> bool:
        w = self.window
        if i == 0:
            return w[0] < 0
        return w[i - 1] > w[i]

    def has_left_descent(self, i: int) -> bool:
        return self.inverse().has_right_descent(i)

    def right_descents(self) -> FrozenSet[int]:
        return frozenset(i for i in range(self.n) if self.has_right_descent(i))

    def left_descents(self) -> FrozenSet[int]:
        return self.inverse().right_descents()

    def reduced_word(self) -> Tuple[int, ...]:
        """The lexicographically smallest reduced word."""
        return _reduced_word(self.window)

    def is_identity(self) -> bool:
        return self.window == tuple(range(1, self.n + 1))

    def negated(self) -> FrozenSet[int]:
        """The set {|w(j)| : w(j) < 0}."""
        return frozenset(-v for v in self.window if v < 0)

    def act_on_weight(self, c: Sequence[int]) -> Tuple[int, ...]:
        """Image of the exponent vector c = (c_0, ..., c_n) of X^c.

        X_i maps to X_{w(i)} with X_{-k} meaning X_k^{-1}, and X_0 maps to
        X_0 times the product of X_k over the negated values k.
        """
        n = self.n
        if len(c) != n + 1:
            raise ValueError("weight must have length n+1")
        out = [0] * (n + 1)
        out[0] = c[0]
        for i in range(1, n + 1):
            v = self.window[i - 1]
            out[abs(v)] += c[i] if v > 0 else -c[i]
        if c[0]:
            for k in self.negated():
                out[k] += c[0]
        return tuple(out)

    def act_on_tuple(self, a: Sequence, has_x0: bool = True) -> tuple:
        """Action on eigenvalue tuples: (w.a)_j is w^{-1}(X_j) evaluated at a.

        For the generators this is s_i swapping a_i, a_{i+1} and
        s_0 (a_0, a_1, ...) = (a_0 a_1, a_1^{-1}, ...).
        """
        a = [to_scalar(x) for x in a]
        winv = self.inverse()
        if has_x0:
            a0, rest = a[0], a[1:]
        else:
            a0, rest = None, a
        if len(rest) != self.n:
            raise ValueError("tuple length does not match rank")
        out = []
        for j in range(1, self.n + 1):
            v = winv.window[j - 1]
            x = rest[abs(v) - 1]
            out.append(x if v > 0 else 1 / x)
        if has_x0:
            head = a0
            for k in winv.negated():
                head = head * rest[k - 1]
            return tuple([head] + out)
        return tuple(out)

    def __str__(self) -> str:
        return "[" + ",".join(str(x) for x in self.window) + "]"

    def to_json(self) -> str:
        return str(self)

    @classmethod
    def parse(cls, s: str) -> "WeylElem":
        s = s.strip().replace("−", "-")
        if not (s.startswith("[") and s.endswith("]")):
            raise ValueError(f"cannot parse Weyl element {s!r}")
        body = s[1:-1].strip()
        if not body:
            return cls(())
        return cls(tuple(int(x) for x in body.split(",")))


def _apply_right(w: List[int], i: int) -> None:
    n = len(w)
    if not 0 <= i < n:
        raise ValueError(f"s_{i} is not a generator of W_{n}")
    if i == 0:
        w[0] = -w[0]
    else:
        w[i - 1], w[i] = w[i], w[i - 1]


@lru_cache(maxsize=None)
def _length(window: Tuple[int, ...]) -> int:
    n = len(window)
    inv = sum(1 for i in range(n) for j in range(i + 1, n) if window[i] > window[j])
    return inv - sum(v for v in window if v < 0)


@lru_cache(maxsize=None)
def _reduced_word(window: Tuple[int, ...]) -> Tuple[int, ...]:
    w = WeylElem(window)
    if w.is_identity():
        return ()
    winv = w.inverse()
    for i in range(w.n):
        if winv.has_right_descent(i):  # left descent of w
            return (i,) + _reduced_word(w.lmul_simple(i).window)
    raise AssertionError("non-identity element without descents")


def sort_key(w: WeylElem):
    return (w.length(), w.reduced_word())


@lru_cache(maxsize=None)
def group_elements(n: int, gens: FrozenSet[int] | None = None) -> Tuple[WeylElem, ...]:
    """All elements of the parabolic subgroup W_gens (default all of W_n),
    sorted by (length, reduced word)."""
    if gens is None:
        gens = frozenset(range(n))
    seen = {WeylElem.identity(n)}
    frontier = list(seen)
    while frontier:
        nxt = []
        for w in frontier:
            for i in gens:
                u = w.rmul_simple(i)
                if u not in seen:
                    seen.add(u)
                    nxt.append(u)
        frontier = nxt
    return tuple(sorted(seen, key=sort_key))


def min_coset_reps(I: Iterable[int], n: int, within: Iterable[int] | None = None) -> Tuple[WeylElem, ...]:
    """D_I: minimal length representatives of the left cosets w W_I,
    taken inside W_within (default all of W_n)."""
    I = frozenset(I)
    within = frozenset(range(n)) if within is None else frozenset(within)
    if not I <= within:
        raise ValueError("I must be contained in the ambient generating set")
    return tuple(w for w in group_elements(n, within) if not (w.right_descents() & I))


def min_right_coset_reps(I: Iterable[int], n: int) -> Tuple[WeylElem, ...]:
    """D_I^{-1}: minimal representatives of the right cosets W_I w."""
    I = frozenset(I)
    return tuple(w for w in group_elements(n) if not (w.left_descents() & I))


def double_coset_reps(I: Iterable[int], J: Iterable[int], n: int) -> Tuple[WeylElem, ...]:
    """D_{I,J}: minimal representatives of the double cosets W_I w W_J."""
    I, J = frozenset(I), frozenset(J)
    return tuple(w for w in group_elements(n)
                 if not (w.left_descents() & I) and not (w.right_descents() & J))


def longest_element(n: int, gens: Iterable[int] | None = None) -> WeylElem:
    g = None if gens is None else frozenset(gens)
    return group_elements(n, g)[-1]


def longest_double_rep(I: Iterable[int], n: int) -> WeylElem:
    reps = double_coset_reps(I, I, n)
    return max(reps, key=sort_key)


def coset_decompose(w: WeylElem, I: Iterable[int]) -> Tuple[WeylElem, WeylElem]:
    """Write w = d u with d in D_I and u in W_I (lengths add)."""
    I = frozenset(I)
    d = w
    u = WeylElem.identity(w.n)
    moved = True
    while moved:
        moved = False
        for i in sorted(I):
            if d.has_right_descent(i):
                d = d.rmul_simple(i)
                u = u.lmul_simple(i)
                moved = True
                break
    return d, u


def conjugate_index_set(x: WeylElem, J: Iterable[int], I: Iterable[int]) -> FrozenSet[int]:
    """I n xJ: the simple reflections s_i, i in I, with x^{-1} s_i x simple in J."""
    J = frozenset(J)
    out = []
    xinv = x.inverse()
    for i in I:
        c = xinv * WeylElem.simple(i, x.n) * x
        k = simple_index(c)
        if k is not None and k in J:
            out.append(i)
    return frozenset(out)


def simple_index(w: WeylElem) -> int | None:
    word = w.reduced_word()
    return word[0] if len(word) == 1 else None


def evaluate_monomial(c: Sequence[int], point: Sequence) -> object:
    out = to_scalar(1)
    for v, e in zip(point, c):
        if e:
            out = out * scalar_pow(to_scalar(v), e)
    return out


@dataclass(frozen=True)
class ParabolicShape:
    """A composition (m0; m1, ..., ml) with m0 >= 0 and the other parts > 0."""

    parts: Tuple[int, ...]

    def __post_init__(self):
        if not self.parts:
            raise ValueError("a shape needs at least the m0 part")
        if self.parts[0] < 0 or any(m <= 0 for m in self.parts[1:]):
            raise ValueError(f"invalid shape {self.parts}")

    @property
    def m0(self) -> int:
        return self.parts[0]

    @property
    def n(self) -> int:
        return sum(self.parts)

    @property
    def contains_zero(self) -> bool:
        return self.m0 > 0

    @property
    def indices(self) -> FrozenSet[int]:
        out = set(range(self.m0))
        start = self.m0
        for m in self.parts[1:]:
            out.update(range(start + 1, start + m))
            start += m
        return frozenset(out)

    @classmethod
    def parse(cls, s: str) -> "ParabolicShape":
        s = s.strip().strip("()")
        if ";" in s:
            head, tail = s.split(";", 1)
            parts = [int(head)] + [int(x) for x in tail.split(",") if x.strip()]
        else:
            parts = [int(x) for x in s.split(",") if x.strip()]
        return cls(tuple(parts))

    def __str__(self) -> str:
        return f"({self.m0};" + ",".join(str(m) for m in self.parts[1:]) + ")"


def shape(*parts: int) -> ParabolicShape:
    return ParabolicShape(tuple(parts))


def as_index_set(I) -> FrozenSet[int]:
    if isinstance(I, ParabolicShape):
        return I.indices
    return frozenset(I)


def all_signed_permutations(n: int) -> List[WeylElem]:
    out = []
    for perm in itertools.permutations(range(1, n + 1)):
        for signs in itertools.product((1, -1), repeat=n):
            out.append(WeylElem(tuple(s * v for s, v in zip(signs, perm))))
    return out
