"""
Modules over the affine Hecke algebra of type B
===============================================

A module is a dict of exact rational matrices, one per generator.
"""

from flint import fmpq

from hecke.algebra import AlgebraDesc, NormalFormElem
from hecke.modrep import module_from_rows, one_dim, verify_module, is_irreducible
from hecke.characters import character, shuffle_character
from hecke.functors import box, induce

p, q = fmpq(2), fmpq(3)

# elements of the algebra are kept in the normal form sum T_w f_w(X)
H2 = AlgebraDesc.B(2, p, q)
T0 = NormalFormElem.generator(H2, "T0")
X1 = NormalFormElem.generator(H2, "X1")
print(X1 * T0)

# a two dimensional module of H_1 where X_1 acts by -1
a0 = fmpq(5)
M = module_from_rows(AlgebraDesc.B(1, p, q), {
    "T0": [[p, 0], [0, -1 / p]],
    "X0": [[0, a0], [a0, 0]],
    "X1": [[-1, 0], [0, -1]],
})
print(verify_module(M))
print("irreducible:", is_irreducible(M))
print("character:", character(M))

# induction from the parabolic H_1 x H_1^A and the shuffle rule for its character
left = one_dim(AlgebraDesc.B(1, p, q), {"T0": p, "X0": a0, "X1": p ** 2})
right = one_dim(AlgebraDesc.A(1, p, q), {"X1": 11})
N = induce(box([left, right]), H2)
print(N.dim, character(N))
print(character(N) == shuffle_character(character(left), character(right)))
