"""Named example modules, stored as JSON under hecke/fixtures.

Every fixture is rebuilt from its recipe with the default parameters
p = 2, q = 3, so rebuilding gives identical bytes.
"""

from __future__ import annotations

import json
from importlib import resources
from pathlib import Path
from typing import Callable, Dict, List, Tuple

from flint import fmpq

from .algebra import AlgebraDesc
from .functors import (box, crystal_f, induce, principal_series,
                       principal_series_induced, segment_module)
from .modrep import ModuleRep, module_from_rows, one_dim

P, Q = fmpq(2), fmpq(3)
A0 = fmpq(5)


def h1_example() -> ModuleRep:
    """2-dim H_1-module: T_0 diagonal, X_0 swapping, X_1 = -1."""
    p, a0 = P, A0
    return module_from_rows(AlgebraDesc.B(1), {
        "T0": [[p, 0], [0, -1 / p]],
        "X0": [[0, a0], [a0, 0]],
        "X1": [[-1, 0], [0, -1]],
    }, name="h1-example")


def h2_example() -> ModuleRep:
    p, q, a0 = P, Q, A0
    c = p - 1 / p
    q2 = q ** 2
    t0 = [[c * q2 / (q2 + 1), (p ** 4 * q2 + q2 ** 2 * p ** 2 + p ** 2 + q2) / (p * q2 * (p ** 2 - 1) * (1 + q2))],
          [q2 * c / (q2 + 1), c / (q2 + 1)]]
    return module_from_rows(AlgebraDesc.B(2), {
        "T0": t0,
        "T1": [[-1 / q, 0], [0, q]],
        "X0": [[a0, 0], [0, -a0 * q2]],
        "X1": [[-q2, 0], [0, -1 / q2]],
        "X2": [[-1, 0], [0, -1]],
    }, name="h2-example")


def shuffle_ex_1(a0=A0, c=11) -> ModuleRep:
    """ind from H_{1,1} to H_2 of L(a0, p^2) boxed (c)."""
    left = one_dim(AlgebraDesc.B(1), {"T0": P, "X0": a0, "X1": P ** 2})
    right = one_dim(AlgebraDesc.A(1), {"X1": c})
    return induce(box([left, right]), AlgebraDesc.B(2), name="shuffle-ex-1")


def shuffle_ex_2(a0=A0) -> ModuleRep:
    """ind from P_0 x H_3^A to H_3 of (a0) boxed L^A(-q^-2, -1, -q^2)."""
    left = one_dim(AlgebraDesc.B(0), {"X0": a0})
    right = segment_module([-1 / Q ** 2, fmpq(-1), -Q ** 2])
    return induce(box([left, right]), AlgebraDesc.B(3), name="shuffle-ex-2")


def L_a0_q2() -> ModuleRep:
    M = principal_series_induced([A0, Q ** 2])
    M.name = "L-a0-q2"
    return M


def _split_part(k: int) -> ModuleRep:
    r = crystal_f(L_a0_q2(), 1)
    if r.tag != "SplitPair":
        raise RuntimeError(f"expected a split, got {r.tag}")
    M = r.parts[k]
    M.name = f"smallcounterex-{k + 1}"
    return M


def _named(M: ModuleRep, name: str) -> ModuleRep:
    M.name = name
    return M


FIXTURES: Dict[str, Tuple[str, Callable[[], ModuleRep]]] = {
    "h1-example": ("2-dim H_1-module splitting over H_1^R", h1_example),
    "h2-example": ("2-dim H_2-module staying irreducible over H_2^R", h2_example),
    "shuffle-ex-1": ("ind of L(a0,p^2) boxed (11), a0 = 5", shuffle_ex_1),
    "shuffle-ex-2": ("ind of (a0) boxed L^A(-q^-2,-1,-q^2), a0 = 5", shuffle_ex_2),
    "katoA2": ("type A Kato module L^A(7,7)", lambda: _named(principal_series("A", 7, 2), "katoA2")),
    "katoA3": ("type A Kato module L^A(7,7,7)", lambda: _named(principal_series("A", 7, 3), "katoA3")),
    "katoB1": ("type B Kato module, cosocle of ind (5,7,7)", lambda: _named(principal_series("B", 7, 2, a0=5), "katoB1")),
    "L-a0-q2": ("principal series L(a0,q^2), a0 = 5", L_a0_q2),
    "smallcounterex-1": ("first summand of f_1 L(a0,q^2)", lambda: _split_part(0)),
    "smallcounterex-2": ("second summand of f_1 L(a0,q^2)", lambda: _split_part(1)),
}


def names() -> List[str]:
    return list(FIXTURES)


def build(name: str) -> ModuleRep:
    if name not in FIXTURES:
        raise KeyError(f"unknown fixture {name!r}")
    return FIXTURES[name][1]()


def dumps(M: ModuleRep) -> str:
    return json.dumps(M.to_json(), indent=1, sort_keys=True) + "\n"


def write(name: str, directory: str | Path) -> Path:
    path = Path(directory) / f"{name}.json"
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(dumps(build(name)))
    return path


def load(name: str) -> ModuleRep:
    """Load a shipped fixture (falls back to rebuilding it)."""
    try:
        text = resources.files("hecke").joinpath("fixtures").joinpath(f"{name}.json").read_text()
    except (FileNotFoundError, OSError):
        return build(name)
    return ModuleRep.from_json(json.loads(text))
