"""Command line front end: ``hecke <command> ...``.

Exit codes: 0 success, 1 a semantic check failed, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import List, Optional

from . import corpus
from .characters import character
from .clifford import clifford_restrict
from .crystal import LambdaLine, build_graph, genericity_check
from .functors import (crystal_e, crystal_f, eps, eps_star, full_algebra,
                       induce)
from .modrep import InvalidModule, ModuleRep, set_seed, verify_module
from .multiseg import Multisegment, crystal_A, eps_A, eps_star_A
from .scalars import fmt, to_scalar


class UsageError(Exception):
    pass


def _scalar(text: str):
    try:
        return to_scalar(text)
    except (ValueError, TypeError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from exc


def _load(path: str) -> ModuleRep:
    try:
        data = json.loads(Path(path).read_text())
        return ModuleRep.from_json(data)
    except (OSError, json.JSONDecodeError, KeyError, ValueError, TypeError) as exc:
        raise UsageError(f"cannot read module from {path}: {exc}") from exc


def _emit(args, text: str) -> None:
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)


def _emit_json(args, obj) -> None:
    _emit(args, json.dumps(obj, indent=1, sort_keys=True) + "\n")


def _read_config(path: str) -> dict:
    """key = value lines; '#' starts a comment."""
    out = {}
    for line in Path(path).read_text().splitlines():
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise UsageError(f"bad config line: {line!r}")
        k, v = (x.strip() for x in line.split("=", 1))
        out[k.replace("-", "_")] = v
    return out


# ---------------------------------------------------------------- commands

def cmd_verify(args) -> int:
    M = _load(args.module)
    report = verify_module(M)
    ok = all(report.values())
    if args.format == "json":
        _emit_json(args, {"ok": ok, "relations": report})
    else:
        lines = [f"{'ok  ' if v else 'FAIL'} {k}" for k, v in report.items()]
        lines.append("module OK" if ok else "module INVALID")
        _emit(args, "\n".join(lines) + "\n")
    return 0 if ok else 1


def cmd_char(args) -> int:
    ch = character(_load(args.module))
    if args.format == "json":
        _emit_json(args, ch.to_json())
    elif args.format == "csv":
        _emit(args, ch.to_csv())
    else:
        _emit(args, "".join(f"{k}\t({','.join(fmt(x) for x in t)})\n" for t, k in ch))
    return 0


def cmd_induce(args) -> int:
    """Induce a module over a parabolic (or lattice) subalgebra to the full
    algebra of the same rank; --to picks the family."""
    M = _load(args.module)
    _emit_json(args, induce(M, full_algebra(M.desc, args.to)).to_json())
    return 0


def cmd_eps(args) -> int:
    M = _load(args.module)
    _emit_json(args, {"a": fmt(args.a), "eps": eps(M, args.a), "eps_star": eps_star(M, args.a)})
    return 0


def cmd_crystal(args) -> int:
    M = _load(args.module)
    if args.op == "e":
        r = crystal_e(M, args.a)
    else:
        r = crystal_f(M, args.a, args.family)
    out = r.to_json()
    out["dims"] = [P.dim for P in r.parts]
    out["characters"] = [str(character(P)) for P in r.parts]
    _emit_json(args, out)
    return 0


def cmd_mseg(args) -> int:
    try:
        G = Multisegment.parse(args.multisegment)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    k = args.k
    out = {"multisegment": str(G), "k": k, "eps": eps_A(G, k), "eps_star": eps_star_A(G, k)}
    if args.op:
        H = crystal_A(G, k, args.op)
        out[args.op] = None if H is None else str(H)
    _emit_json(args, out)
    return 0


def cmd_clifford(args) -> int:
    M = _load(args.module)
    r = clifford_restrict(M)
    out = r.to_json()
    out["dims"] = [P.dim for P in r.parts]
    _emit_json(args, out)
    return 0 if all(r.checks.values()) else 1


def cmd_graph(args) -> int:
    lam = args.lam if args.lam is not None else to_scalar(5)
    line = LambdaLine(lam, args.p, args.q, args.window)
    ok, why = genericity_check(line)
    if not ok:
        sys.stderr.write("warning: line is not generic: " + "; ".join(why) + "\n")
    n = 2 if args.n is None else args.n
    a0 = args.a0 if args.a0 is not None else to_scalar(7)
    g = build_graph(line, n, family=args.family or "B", a0=a0)
    if args.dot:
        _emit(args, g.to_dot())
    else:
        _emit_json(args, g.to_json())
    return 0


def cmd_fixtures(args) -> int:
    if args.action == "list":
        _emit(args, "".join(f"{name}\t{corpus.FIXTURES[name][0]}\n" for name in corpus.names()))
        return 0
    names = args.names or corpus.names()
    unknown = [n for n in names if n not in corpus.FIXTURES]
    if unknown:
        raise UsageError(f"unknown fixtures: {', '.join(unknown)}")
    directory = args.out or "fixtures"
    for name in names:
        print(corpus.write(name, directory))
    return 0


# ---------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--p", type=_scalar, default=to_scalar(2), help="parameter of T_0 (default 2)")
    common.add_argument("--q", type=_scalar, default=to_scalar(3), help="parameter of T_1..T_{n-1} (default 3)")
    common.add_argument("--seed", type=int, default=None, help="seed for randomized tests")
    common.add_argument("--out", default=None, help="write output to this file (directory for fixtures build)")
    common.add_argument("--format", choices=["text", "json", "csv"], default="text")
    common.add_argument("--jobs", type=int, default=1, help="accepted for compatibility; work runs serially")
    common.add_argument("--config", default=None, help="key = value file merged under the flags")

    ap = argparse.ArgumentParser(prog="hecke", description="Modules over affine Hecke algebras of type B.")
    sub = ap.add_subparsers(dest="command", required=True)

    s = sub.add_parser("verify", parents=[common], help="check the defining relations on a module file")
    s.add_argument("module")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("char", parents=[common], help="formal character of a module file")
    s.add_argument("module")
    s.set_defaults(func=cmd_char)

    s = sub.add_parser("induce", parents=[common], help="induce a parabolic module to the full algebra")
    s.add_argument("module")
    s.add_argument("--to", choices=["B", "R", "A"], default=None)
    s.set_defaults(func=cmd_induce)

    s = sub.add_parser("eps", parents=[common], help="eps_a and eps*_a of a module file")
    s.add_argument("module")
    s.add_argument("--a", type=_scalar, required=True)
    s.set_defaults(func=cmd_eps)

    s = sub.add_parser("crystal", parents=[common], help="apply a crystal operator")
    s.add_argument("op", choices=["e", "f"])
    s.add_argument("module")
    s.add_argument("--a", type=_scalar, required=True)
    s.add_argument("--family", choices=["B", "R", "A"], default=None)
    s.set_defaults(func=cmd_crystal)

    s = sub.add_parser("mseg", parents=[common], help="multisegment crystal operators")
    s.add_argument("multisegment", help='e.g. "[(0..1),(0)]"')
    s.add_argument("--k", type=int, required=True, help="exponent of the eigenvalue on the line")
    s.add_argument("--op", choices=["e", "f", "e*", "f*"], default=None)
    s.set_defaults(func=cmd_mseg)

    s = sub.add_parser("clifford", parents=[common], help="restrict an H_n-module to H_n^R")
    s.add_argument("module")
    s.set_defaults(func=cmd_clifford)

    s = sub.add_parser("graph", parents=[common], help="crystal graph on a lambda line")
    s.add_argument("--lambda", dest="lam", type=_scalar, default=None)
    s.add_argument("--n", type=int, default=None)
    s.add_argument("--a0", type=_scalar, default=None)
    s.add_argument("--a", type=_scalar, default=None, help="unused; accepted for symmetry")
    s.add_argument("--window", type=int, default=2)
    s.add_argument("--family", choices=["B", "R"], default=None)
    s.add_argument("--dot", action="store_true")
    s.set_defaults(func=cmd_graph)

    s = sub.add_parser("fixtures", parents=[common], help="list or build the example corpus")
    s.add_argument("action", choices=["list", "build"])
    s.add_argument("names", nargs="*")
    s.set_defaults(func=cmd_fixtures)
    return ap


_SCALAR_KEYS = {"p", "q", "a", "a0", "lam"}


def _apply_config(ap: argparse.ArgumentParser, argv: List[str]) -> argparse.Namespace:
    """Config values fill in every option not given on the command line."""
    args = ap.parse_args(argv)
    if not args.config:
        return args
    for k, v in _read_config(args.config).items():
        k = "lam" if k == "lambda" else k
        if not hasattr(args, k):
            raise UsageError(f"unknown config key {k!r}")
        flag = "--" + ("lambda" if k == "lam" else k.replace("_", "-"))
        if any(a == flag or a.startswith(flag + "=") for a in argv):
            continue
        if k in _SCALAR_KEYS:
            v = _scalar(v)
        elif isinstance(getattr(args, k), bool):
            v = v.lower() in ("1", "true", "yes")
        elif k in ("n", "seed", "window", "jobs"):
            v = int(v)
        setattr(args, k, v)
    return args


def main(argv: Optional[List[str]] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    ap = build_parser()
    try:
        args = _apply_config(ap, argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    except UsageError as exc:
        sys.stderr.write(f"hecke: {exc}\n")
        return 2
    if args.seed is not None:
        set_seed(args.seed)
    try:
        return args.func(args)
    except (UsageError, InvalidModule) as exc:
        sys.stderr.write(f"hecke: {exc}\n")
        return 2
    except ValueError as exc:
        sys.stderr.write(f"hecke: {exc}\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
