"""
Crystal operators
=================

f_a induces M boxed (a) one rank up and takes the cosocle.  e_a takes the
socle of the a-eigenspace of the last X.  Away from a = 1, -1 both give
irreducibles and undo each other.
"""

from hecke.functors import h0_module, crystal_f, crystal_e, eps, build_from_path
from hecke.functors import principal_series_induced
from hecke.characters import character
from hecke.modrep import is_isomorphic

M = build_from_path(h0_module(5), [7])
print(M.dim, character(M), "eps_7 =", eps(M, 7))

r = crystal_f(M, 7)
print(r.tag, r.parts[0].dim, "eps_7 =", eps(r.parts[0], 7))

back = crystal_e(r.parts[0], 7)
print("e f M = M:", is_isomorphic(back.parts[0], M))

# at a = 1 the cosocle can split into two pieces
L = principal_series_induced([5, 9])
r = crystal_f(L, 1)
print(r.tag, [P.dim for P in r.parts])
for P in r.parts:
    print("  ", character(P))
