"""Multisegments on one q^2-line and their crystal operators.

A segment (i..j) with i <= j stands for the values lam q^{2i}, ..., lam q^{2j}
of a formal line lam q^{2Z}; an eigenvalue a = lam q^{2k} is named by its
exponent k.  The irreducible type A module N_G attached to a multisegment G
is the head of the module induced from the one dimensional segment modules,
taken largest segment first.

Two total orders are used when reading signatures:

* right order: (i..i+k) > (j..j+l) when i > j, or i = j and l > k;
* left order:  (i..i+k) > (j..j+l) when i+k > j+l, or i+k = j+l and j > i.

Segments are always listed from the largest to the smallest.  Reading the
ends (right order) gives '+' for a segment ending at k-1 and '-' for one
ending at k; pairs "-+" cancel and eps is the number of surviving '-'.
Reading the starts (left order) gives '+' for a segment starting at k+1 and
'-' for one starting at k; pairs "+-" cancel.

The operators act where the surviving '+' and '-' blocks meet: on ends,
e removes from the leftmost surviving '-' and f extends the rightmost
surviving '+'; on starts (survivors read "-...-+...+"), e* shortens the
rightmost surviving '-' and f* extends the leftmost surviving '+'.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple


@dataclass(frozen=True, order=True)
class Segment:
    lo: int
    hi: int

    def __post_init__(self):
        if self.hi < self.lo:
            raise ValueError(f"empty segment ({self.lo}..{self.hi})")

    def __len__(self) -> int:
        return self.hi - self.lo + 1

    def exponents(self) -> List[int]:
        return list(range(self.lo, self.hi + 1))

    def __str__(self) -> str:
        return f"({self.lo}..{self.hi})"


def right_key(s: Segment):
    """Sorting key that lists segments from largest to smallest in the
    right order."""
    return (-s.lo, len(s))


def left_key(s: Segment):
    return (-s.hi, s.lo)


class Multisegment:
    """A finite multiset of segments on one line (``base`` names the line)."""

    __slots__ = ("segments", "base")

    def __init__(self, segments: Iterable = (), base: object = 0):
        segs = []
        for s in segments:
            if isinstance(s, Segment):
                segs.append(s)
            else:
                lo, hi = s
                segs.append(Segment(int(lo), int(hi)))
        self.segments: Tuple[Segment, ...] = tuple(sorted(segs, key=right_key))
        self.base = base

    def __iter__(self) -> Iterator[Segment]:
        return iter(self.segments)

    def __len__(self) -> int:
        return len(self.segments)

    def size(self) -> int:
        """Total number of entries, the rank n of the module N_G."""
        return sum(len(s) for s in self.segments)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Multisegment):
            return NotImplemented
        return self.segments == other.segments and self.base == other.base

    def __hash__(self):
        return hash((self.segments, self.base))

    def normalize(self, order: str = "right") -> List[Segment]:
        key = right_key if order == "right" else left_key
        return sorted(self.segments, key=key)

    def bar(self) -> "Multisegment":
        """Reflect every segment through 0: (i..j) -> (-j..-i)."""
        return Multisegment([Segment(-s.hi, -s.lo) for s in self.segments], self.base)

    def shifted(self, k: int) -> "Multisegment":
        return Multisegment([Segment(s.lo + k, s.hi + k) for s in self.segments], self.base)

    def __str__(self) -> str:
        return "[" + ",".join(str(s) for s in self.segments) + "]"

    def __repr__(self) -> str:
        return f"Multisegment({self})"

    @classmethod
    def parse(cls, text: str, base: object = 0) -> "Multisegment":
        text = text.strip().replace("−", "-")
        if not (text.startswith("[") and text.endswith("]")):
            raise ValueError(f"cannot parse multisegment {text!r}")
        body = text[1:-1].strip()
        if not body:
            return cls([], base)
        segs = []
        pos = 0
        pat = re.compile(r"\s*\(\s*(-?\d+)\s*(?:\.\.\s*(-?\d+)\s*)?\)\s*(,|$)")
        while pos < len(body):
            m = pat.match(body, pos)
            if not m:
                raise ValueError(f"cannot parse multisegment {text!r}")
            lo = int(m.group(1))
            hi = int(m.group(2)) if m.group(2) is not None else lo
            segs.append(Segment(lo, hi))
            pos = m.end()
        return cls(segs, base)


def _signature(G: Multisegment, a: int, side: str) -> List[Tuple[str, int]]:
    """Signs with segment positions (indices into the ordered list)."""
    out = []
    if side == "end":
        for k, s in enumerate(G.normalize("right")):
            if s.hi == a - 1:
                out.append(("+", k))
            elif s.hi == a:
                out.append(("-", k))
    else:
        for k, s in enumerate(G.normalize("left")):
            if s.lo == a + 1:
                out.append(("+", k))
            elif s.lo == a:
                out.append(("-", k))
    return out


def _reduce(signs: List[Tuple[str, int]], opener: str) -> List[Tuple[str, int]]:
    """Cancel adjacent pairs (opener, closer) repeatedly; returns survivors."""
    stack: List[Tuple[str, int]] = []
    survivors: List[Tuple[str, int]] = []
    for sgn, k in signs:
        if sgn == opener:
            stack.append((sgn, k))
        elif stack:
            stack.pop()
        else:
            survivors.append((sgn, k))
    # survivors of the closer kind come first, unmatched openers after
    return survivors + stack


def signature_string(G: Multisegment, a: int, side: str = "end") -> str:
    return "".join(s for s, _ in _signature(G, a, side))


def reduced_signature(G: Multisegment, a: int, side: str = "end") -> str:
    opener = "-" if side == "end" else "+"
    return "".join(s for s, _ in _reduce(_signature(G, a, side), opener))


def eps_A(G: Multisegment, a: int) -> int:
    red = _reduce(_signature(G, a, "end"), "-")
    return sum(1 for s, _ in red if s == "-")


def phi_A(G: Multisegment, a: int) -> int:
    red = _reduce(_signature(G, a, "end"), "-")
    return sum(1 for s, _ in red if s == "+")


def eps_star_A(G: Multisegment, a: int) -> int:
    red = _reduce(_signature(G, a, "start"), "+")
    return sum(1 for s, _ in red if s == "-")


def _replace(G: Multisegment, order: str, k: int, new: Optional[Segment]) -> Multisegment:
    segs = G.normalize(order)
    if new is None:
        segs = segs[:k] + segs[k + 1:]
    else:
        segs = segs[:k] + [new] + segs[k + 1:]
    return Multisegment(segs, G.base)


def e_A(G: Multisegment, a: int) -> Optional[Multisegment]:
    """Remove the last entry of the segment giving the leftmost surviving
    '-'; None when eps is zero."""
    red = _reduce(_signature(G, a, "end"), "-")
    minus = [k for s, k in red if s == "-"]
    if not minus:
        return None
    k = min(minus)
    s = G.normalize("right")[k]
    return _replace(G, "right", k, Segment(s.lo, s.hi - 1) if len(s) > 1 else None)


def f_A(G: Multisegment, a: int) -> Multisegment:
    """Extend the segment giving the rightmost surviving '+', or add (a)."""
    red = _reduce(_signature(G, a, "end"), "-")
    plus = [k for s, k in red if s == "+"]
    if not plus:
        return Multisegment(list(G.segments) + [Segment(a, a)], G.base)
    k = max(plus)
    s = G.normalize("right")[k]
    return _replace(G, "right", k, Segment(s.lo, s.hi + 1))


def e_star_A(G: Multisegment, a: int) -> Optional[Multisegment]:
    red = _reduce(_signature(G, a, "start"), "+")
    minus = [k for s, k in red if s == "-"]
    if not minus:
        return None
    k = max(minus)
    s = G.normalize("left")[k]
    return _replace(G, "left", k, Segment(s.lo + 1, s.hi) if len(s) > 1 else None)


def f_star_A(G: Multisegment, a: int) -> Multisegment:
    red = _reduce(_signature(G, a, "start"), "+")
    plus = [k for s, k in red if s == "+"]
    if not plus:
        return Multisegment(list(G.segments) + [Segment(a, a)], G.base)
    k = min(plus)
    s = G.normalize("left")[k]
    return _replace(G, "left", k, Segment(s.lo - 1, s.hi))


def crystal_A(G: Multisegment, a: int, op: str) -> Optional[Multisegment]:
    """op is one of 'e', 'f', 'e*', 'f*'."""
    table = {"e": e_A, "f": f_A, "e*": e_star_A, "f*": f_star_A}
    if op not in table:
        raise ValueError(f"unknown operator {op!r}")
    return table[op](G, a)


def all_segments(lo: int, hi: int) -> List[Segment]:
    return [Segment(i, j) for i in range(lo, hi + 1) for j in range(i, hi + 1)]


def all_multisegments(max_size: int, lo: int, hi: int) -> List[Multisegment]:
    """Every multisegment of total size <= max_size with entries in [lo, hi]."""
    segs = sorted(all_segments(lo, hi))
    out: List[Multisegment] = []

    def rec(start: int, chosen: List[Segment], size: int):
        out.append(Multisegment(chosen))
        for k in range(start, len(segs)):
            s = segs[k]
            if size + len(s) <= max_size:
                rec(k, chosen + [s], size + len(s))

    rec(0, [], 0)
    return out


# ---------------------------------------------------------------- modules

def segment_values(s: Segment, lam, q) -> list:
    from .scalars import scalar_pow, to_scalar
    lam, q = to_scalar(lam), to_scalar(q)
    return [lam * scalar_pow(q, 2 * k) for k in s.exponents()]


def induced_standard(G: Multisegment, lam, p=2, q=3, order: str = "right"):
    """ind of the boxed segment modules, largest segment first."""
    from .algebra import AlgebraDesc
    from .functors import box, induce, segment_module
    from .modrep import ModuleRep
    n = G.size()
    if n == 0:
        return ModuleRep(AlgebraDesc.A(0, p, q), {}, 1)
    pieces = [segment_module(segment_values(s, lam, q), p, q) for s in G.normalize(order)]
    return induce(box(pieces), AlgebraDesc.A(n, p, q))


def realize(G: Multisegment, lam, p=2, q=3, order: str = "right"):
    """The irreducible H_n^A-module N_G (head of the standard module)."""
    from .modrep import cosocle
    std = induced_standard(G, lam, p, q, order)
    if G.size() == 0:
        return std
    N = cosocle(std)
    N.name = f"N{G}"
    return N


def eigenvalue(k: int, lam, q):
    from .scalars import scalar_pow, to_scalar
    return to_scalar(lam) * scalar_pow(to_scalar(q), 2 * k)
