"""Crystal graphs of irreducibles and the type A to type B dictionary.

For a line lam q^{2Z} with lam generic (p^2, +-q and +-1 avoid both
I+ = lam q^{2Z} and I- = lam^{-1} q^{2Z}), an irreducible N_G of H_n^A
with eigenvalues in I- induces to an irreducible M_G of the finite type B
part H_n^R.  Crystal data transfers as follows:

* a in I-:  eps_a(M_G) = eps_a(N_G)          and f_a M_G = M_{f_a G}
* a in I+:  eps_a(M_G) = eps*_{1/a}(N_G)     and f_a M_G = M_{f*_{1/a} G}
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from flint import fmpq

from .algebra import AlgebraDesc
from .characters import FormalCharacter, character
from .functors import (crystal_e, crystal_f, eps, h0_module,
                       induce, trivial_r0)
from .modrep import ModuleRep, is_irreducible, is_isomorphic
from .multiseg import (Multisegment, eps_A, eps_star_A, f_A, f_star_A,
                       realize)
from .scalars import fmt, scalar_pow, to_scalar


@dataclass(frozen=True)
class LambdaLine:
    lam: fmpq
    p: fmpq = fmpq(2)
    q: fmpq = fmpq(3)
    window: int = 2

    def __post_init__(self):
        for k in ("lam", "p", "q"):
            object.__setattr__(self, k, to_scalar(getattr(self, k)))

    def plus(self, i: int) -> fmpq:
        return self.lam * scalar_pow(self.q, 2 * i)

    def minus(self, i: int) -> fmpq:
        return scalar_pow(self.q, 2 * i) / self.lam

    def window_values(self) -> List[fmpq]:
        r = range(-self.window, self.window + 1)
        return [self.plus(i) for i in r] + [self.minus(i) for i in r]

    def classify(self, a) -> Tuple[str, int]:
        """('+', i) if a = lam q^{2i}, ('-', i) if a = lam^{-1} q^{2i}."""
        a = to_scalar(a)
        r = range(-self.window - 4, self.window + 5)
        for i in r:
            if a == self.minus(i):
                return "-", i
            if a == self.plus(i):
                return "+", i
        raise ValueError(f"{a} is not on the line through {self.lam} near the window")


def genericity_check(line: LambdaLine, span: int | None = None) -> Tuple[bool, List[str]]:
    """Check that p^2, +-q, +-1 avoid I+ and I- and that I+, I- are disjoint
    on exponents |i| <= span (default: window + 4)."""
    span = line.window + 4 if span is None else span
    r = range(-span, span + 1)
    plus = {line.plus(i) for i in r}
    minus = {line.minus(i) for i in r}
    bad = []
    for name, v in (("p^2", line.p ** 2), ("q", line.q), ("-q", -line.q), ("1", fmpq(1)), ("-1", fmpq(-1))):
        if v in plus:
            bad.append(f"{name} lies on lam q^(2Z)")
        if v in minus:
            bad.append(f"{name} lies on lam^(-1) q^(2Z)")
    if plus & minus:
        bad.append("lam q^(2Z) meets lam^(-1) q^(2Z)")
    return (not bad), bad


def module_for_multisegment(G: Multisegment, line: LambdaLine) -> ModuleRep:
    """M_G = ind from H_n^A to H_n^R of N_G, with G read on lam^{-1} q^{2Z}."""
    n = G.size()
    if n == 0:
        return trivial_r0(line.p, line.q)
    N = realize(G, 1 / line.lam, line.p, line.q)
    M = induce(N, AlgebraDesc.R(n, line.p, line.q))
    M.name = f"M{G}"
    return M


def dict_A_to_B(G: Multisegment, line: LambdaLine) -> ModuleRep:
    ok, why = genericity_check(line)
    if not ok:
        raise ValueError("line is not generic: " + "; ".join(why))
    M = module_for_multisegment(G, line)
    if G.size() and not is_irreducible(M):
        raise ValueError(f"induced module of {G} is reducible")
    return M


def predicted_eps(G: Multisegment, a, line: LambdaLine) -> int:
    side, i = line.classify(a)
    return eps_A(G, i) if side == "-" else eps_star_A(G, -i)


def predicted_f(G: Multisegment, a, line: LambdaLine) -> Multisegment:
    side, i = line.classify(a)
    return f_A(G, i) if side == "-" else f_star_A(G, -i)


def dictionary_check(G: Multisegment, a, line: LambdaLine, cache: Dict | None = None) -> Dict[str, bool]:
    """Compare eps_a and f_a of M_G with the multisegment predictions."""
    cache = {} if cache is None else cache

    def M(H):
        if H not in cache:
            cache[H] = module_for_multisegment(H, line)
        return cache[H]

    MG = M(G)
    out = {}
    if G.size():
        out["irreducible"] = is_irreducible(MG)
        out["eps"] = eps(MG, a) == predicted_eps(G, a, line)
    r = crystal_f(MG, a, family="R")
    target = predicted_f(G, a, line)
    out["f"] = r.tag == "Irreducible" and is_isomorphic(r.parts[0], M(target))
    return out


def crystal_edge_check(M: ModuleRep, a, family: str | None = None) -> Dict[str, object]:
    """Local crystal properties at M for a not in {1, -1}."""
    a = to_scalar(a)
    r = crystal_f(M, a, family)
    out: Dict[str, object] = {"f_tag": r.tag}
    if r.tag != "Irreducible":
        return out
    F = r.parts[0]
    out["eps_increment"] = eps(F, a) == eps(M, a) + 1
    back = crystal_e(F, a)
    out["ef_identity"] = back.tag == "Irreducible" and is_isomorphic(back.parts[0], M)
    return out


# ---------------------------------------------------------------- graphs

@dataclass
class CrystalNode:
    key: int
    module: ModuleRep
    path: Tuple[fmpq, ...]
    char: FormalCharacter

    @property
    def label(self) -> str:
        return "L(" + ",".join(fmt(a) for a in self.path) + ")"


@dataclass
class CrystalGraph:
    nodes: List[CrystalNode] = field(default_factory=list)
    edges: List[Tuple[int, int, fmpq]] = field(default_factory=list)
    # (node, a, tag) for f_a outcomes that are not irreducible
    marks: List[Tuple[int, fmpq, str]] = field(default_factory=list)

    def find(self, M: ModuleRep) -> Optional[int]:
        """Node isomorphic to M.  Away from the eigenvalues +-1 the character
        decides; otherwise fall back to an explicit isomorphism test."""
        ch = character(M)
        off = 1 if ch.has_x0 else 0
        regular = all(x not in (1, -1) for t in ch.counts for x in t[off:])
        for node in self.nodes:
            if node.module.desc != M.desc or node.char != ch:
                continue
            if regular or is_isomorphic(node.module, M):
                return node.key
        return None

    def rank(self, key: int) -> int:
        return self.nodes[key].module.desc.n

    def to_dot(self) -> str:
        lines = ["digraph crystal {", "  rankdir=LR;"]
        for node in self.nodes:
            lines.append(f'  n{node.key} [label="{node.label}\\ndim {node.module.dim}"];')
        for s, t, a in self.edges:
            lines.append(f'  n{s} -> n{t} [label="{fmt(a)}"];')
        for s, a, tag in self.marks:
            lines.append(f'  m{s}_{_dot_id(a)} [shape=plaintext,label="{tag}"];')
            lines.append(f'  n{s} -> m{s}_{_dot_id(a)} [style=dotted,label="{fmt(a)}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"

    def to_json(self) -> dict:
        return {
            "nodes": [{"id": n.key, "label": n.label, "rank": n.module.desc.n,
                       "dim": n.module.dim, "character": n.char.to_json()} for n in self.nodes],
            "edges": [{"source": s, "target": t, "a": fmt(a)} for s, t, a in self.edges],
            "marks": [{"node": s, "a": fmt(a), "tag": tag} for s, a, tag in self.marks],
        }


def _dot_id(a: fmpq) -> str:
    return fmt(a).replace("-", "m").replace("/", "_")


def build_graph(line: LambdaLine, n_max: int, family: str = "B", a0=7,
                values: Sequence | None = None, seed: ModuleRep | None = None) -> CrystalGraph:
    """Breadth-first search from the rank 0 seed applying f_a for every a in
    the window of ``line`` (or ``values``) until rank n_max.

    For family B the seed is the H_0-module with X_0 acting by a0 and node
    labels read L(a0, a_1, ..., a_n); for family R it is the trivial module
    of H_0^R.  Outcomes other than Irreducible become marks, not edges."""
    if n_max > 3:
        raise ValueError("n_max is limited to 3")
    if seed is None:
        seed = h0_module(a0, line.p, line.q) if family == "B" else trivial_r0(line.p, line.q)
    vals = sorted(to_scalar(a) for a in (line.window_values() if values is None else values))
    start = (to_scalar(a0),) if family == "B" and seed.desc.x0 else ()
    g = CrystalGraph()
    g.nodes.append(CrystalNode(0, seed, start, character(seed)))
    frontier = [0]
    for _level in range(seed.desc.n, n_max):
        nxt = []
        for key in frontier:
            node = g.nodes[key]
            for a in vals:
                r = crystal_f(node.module, a, family)
                if r.tag != "Irreducible":
                    if r.tag != "Zero":
                        g.marks.append((key, a, r.tag))
                    continue
                F = r.parts[0]
                tgt = g.find(F)
                if tgt is None:
                    tgt = len(g.nodes)
                    g.nodes.append(CrystalNode(tgt, F, node.path + (a,), character(F)))
                    nxt.append(tgt)
                g.edges.append((key, tgt, a))
        frontier = nxt
    return g
