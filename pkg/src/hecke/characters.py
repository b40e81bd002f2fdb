"""Formal characters: multisets of X-eigenvalue tuples.

A character records, for each tuple t, the dimension of the generalized
weight space M[t].  Tuples start with the X_0 eigenvalue when X_0 is part of
the algebra.

The shuffle rule computes the character of ind(M boxed N) from ch M and
ch N without building the module.  Inducing from the parabolic of shape
(m; k) sums x.(t, s) over the shortest coset representatives x.  Those sums reorganize as follows: pick a prefix length
r of s, invert and reverse it, then interleave three words (t, the reversed
inverted prefix, the remaining suffix of s) keeping each in order; the X_0
entry picks up the product of the prefix.  For type A (no T_0) only the
plain two-word interleavings occur.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field
from typing import Dict, Iterable, Iterator, List, Mapping, Sequence, Tuple

from flint import fmpq, fmpq_mat

from . import linalg as la
from .scalars import fmt, to_scalar
from .weyl import WeylElem, min_coset_reps

Tup = Tuple[fmpq, ...]


def family_of(desc) -> str:
    if desc.x0:
        return "B"
    if 0 in desc.tgens:
        return "R"
    return "A"


class FormalCharacter:
    """Immutable multiset of eigenvalue tuples with integer multiplicities."""

    __slots__ = ("counts", "has_x0")

    def __init__(self, counts: Mapping[Sequence, int] | Iterable[Sequence] = (), has_x0: bool = True):
        c: Counter = Counter()
        if isinstance(counts, Mapping):
            for t, k in counts.items():
                c[tuple(to_scalar(x) for x in t)] += int(k)
        else:
            for t in counts:
                c[tuple(to_scalar(x) for x in t)] += 1
        self.counts: Dict[Tup, int] = {t: k for t, k in c.items() if k != 0}
        self.has_x0 = has_x0

    def __iter__(self) -> Iterator[Tuple[Tup, int]]:
        return iter(sorted(self.counts.items()))

    def tuples(self) -> List[Tup]:
        return sorted(self.counts)

    def degree(self) -> int:
        return sum(self.counts.values())

    def __getitem__(self, t) -> int:
        return self.counts.get(tuple(to_scalar(x) for x in t), 0)

    def __contains__(self, t) -> bool:
        return self[t] > 0

    def __eq__(self, other) -> bool:
        if not isinstance(other, FormalCharacter):
            return NotImplemented
        return self.counts == other.counts

    def __hash__(self):
        return hash(frozenset(self.counts.items()))

    def __add__(self, other: "FormalCharacter") -> "FormalCharacter":
        c = Counter(self.counts)
        c.update(other.counts)
        return FormalCharacter(c, self.has_x0)

    def __sub__(self, other: "FormalCharacter") -> "FormalCharacter":
        c = Counter(self.counts)
        c.subtract(other.counts)
        return FormalCharacter(c, self.has_x0)

    def scale(self, k: int) -> "FormalCharacter":
        return FormalCharacter({t: v * k for t, v in self.counts.items()}, self.has_x0)

    def is_effective(self) -> bool:
        return all(k > 0 for k in self.counts.values())

    def __repr__(self) -> str:
        return f"FormalCharacter({self})"

    def __str__(self) -> str:
        parts = []
        for t, k in self:
            s = "[(" + ",".join(fmt(x) for x in t) + ")]"
            parts.append(s if k == 1 else f"{k}{s}")
        return " + ".join(parts) if parts else "0"

    def to_json(self) -> list:
        return [{"tuple": [fmt(x) for x in t], "mult": k} for t, k in self]

    @classmethod
    def from_json(cls, data, has_x0: bool = True) -> "FormalCharacter":
        return cls({tuple(d["tuple"]): d["mult"] for d in data}, has_x0)

    def to_csv(self) -> str:
        lines = []
        for t, k in self:
            lines.append(",".join(fmt(x) for x in t) + f",{k}")
        return "\n".join(lines) + ("\n" if lines else "")

    def act(self, w: WeylElem) -> "FormalCharacter":
        return FormalCharacter({w.act_on_tuple(t, self.has_x0): k for t, k in self.counts.items()},
                               self.has_x0)


def character(M) -> FormalCharacter:
    from .modrep import weight_multiplicities
    return FormalCharacter(weight_multiplicities(M), M.desc.x0)


def _interleavings(words: Sequence[Sequence]) -> Iterator[tuple]:
    """All interleavings of the given words keeping each word's order."""
    lengths = [len(w) for w in words]
    total = sum(lengths)
    if total == 0:
        yield ()
        return
    labels = [i for i, L in enumerate(lengths) for _ in range(L)]
    for perm in _multiset_permutations(labels):
        pos = [0] * len(words)
        out = []
        for i in perm:
            out.append(words[i][pos[i]])
            pos[i] += 1
        yield tuple(out)


def _multiset_permutations(items: Sequence[int]) -> Iterator[tuple]:
    counts = Counter(items)
    keys = sorted(counts)
    n = len(items)
    out: List[int] = []

    def rec():
        if len(out) == n:
            yield tuple(out)
            return
        for k in keys:
            if counts[k]:
                counts[k] -= 1
                out.append(k)
                yield from rec()
                out.pop()
                counts[k] += 1

    yield from rec()


def shuffle_tuples(t: Sequence, s: Sequence, family: str = "B") -> List[Tup]:
    """Tuples (with repetition) of ind(L_t boxed L_s) for one dimensional
    pieces with weights t and s.  For family B, t includes the X_0 entry."""
    t = tuple(to_scalar(x) for x in t)
    s = tuple(to_scalar(x) for x in s)
    if family == "A":
        return list(_interleavings([t, s]))
    if family == "B":
        head, body = t[:1], t[1:]
    else:
        head, body = (), t
    out = []
    for r in range(len(s) + 1):
        pre = tuple(1 / x for x in reversed(s[:r]))
        suf = s[r:]
        h = head
        if head:
            c0 = head[0]
            for x in s[:r]:
                c0 = c0 * x
            h = (c0,)
        for mix in _interleavings([body, pre, suf]):
            out.append(h + mix)
    return out


def shuffle_character(chM: FormalCharacter, chN: FormalCharacter, family: str | None = None) -> FormalCharacter:
    """ch ind(M boxed N) computed from the characters alone."""
    if family is None:
        family = "B" if chM.has_x0 else "R"
    c: Counter = Counter()
    for t, k in chM.counts.items():
        for s, l in chN.counts.items():
            for u in shuffle_tuples(t, s, family):
                c[u] += k * l
    return FormalCharacter(c, chM.has_x0)


def induced_character(chM: FormalCharacter, n: int, I, J=None) -> FormalCharacter:
    """Sum over shortest coset representatives x of x.ch M (M over the
    parabolic I, induced up to J)."""
    out = FormalCharacter({}, chM.has_x0)
    for x in min_coset_reps(I, n, J):
        out = out + chM.act(x)
    return out


def central_orbit(t: Sequence, has_x0: bool = True, family: str | None = None) -> frozenset:
    """Orbit of a tuple under the group action (W_n for B and R, the
    symmetric group for A)."""
    t = tuple(to_scalar(x) for x in t)
    if family is None:
        family = "B" if has_x0 else "R"
    n = len(t) - (1 if has_x0 else 0)
    gens = range(1, n) if family == "A" else range(n)
    seen = {t}
    stack = [t]
    while stack:
        u = stack.pop()
        for i in gens:
            v = WeylElem.simple(i, n).act_on_tuple(u, has_x0)
            if v not in seen:
                seen.add(v)
                stack.append(v)
    return frozenset(seen)


def block_decompose(M) -> list:
    """Split M into its blocks M[gamma] (sums of weight spaces over one
    central orbit), returned as (orbit, ModuleRep) pairs."""
    from .modrep import sub_module, weight_spaces
    fam = family_of(M.desc)
    groups: Dict[frozenset, list] = {}
    for t, B in weight_spaces(M):
        orb = central_orbit(t, M.desc.x0, fam)
        groups.setdefault(orb, []).append(B)
    out = []
    for orb, Bs in sorted(groups.items(), key=lambda kv: min(kv[0])):
        basis = la.hstack(Bs, M.dim)
        out.append((orb, sub_module(M, basis)))
    return out


def char_matrix(chars: Sequence[FormalCharacter]) -> fmpq_mat:
    keys = sorted({t for ch in chars for t in ch.counts})
    idx = {t: i for i, t in enumerate(keys)}
    m = fmpq_mat(len(chars), max(len(keys), 1))
    for r, ch in enumerate(chars):
        for t, k in ch.counts.items():
            m[r, idx[t]] = k
    return m


def char_linearly_independent(chars: Sequence[FormalCharacter]) -> bool:
    if not chars:
        return True
    return la.rank(char_matrix(chars)) == len(chars)


def tail_length(t: Sequence, a) -> int:
    a = to_scalar(a)
    k = 0
    for x in reversed(t):
        if x != a:
            break
        k += 1
    return k


def head_length(t: Sequence, a) -> int:
    a = to_scalar(a)
    k = 0
    for x in t:
        if x != a:
            break
        k += 1
    return k


def eps_from_character(ch: FormalCharacter, a) -> int:
    """Largest k with a tuple ending in k copies of a (never counting X_0)."""
    best = 0
    for t in ch.counts:
        body = t[1:] if ch.has_x0 else t
        best = max(best, tail_length(body, a))
    return best


def eps_star_from_character(ch: FormalCharacter, a) -> int:
    best = 0
    for t in ch.counts:
        body = t[1:] if ch.has_x0 else t
        best = max(best, head_length(body, a))
    return best
