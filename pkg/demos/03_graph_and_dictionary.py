"""
Crystal graph on a line and the type A dictionary
=================================================
"""

from flint import fmpq

from hecke.crystal import LambdaLine, build_graph, genericity_check, dict_A_to_B, predicted_eps
from hecke.functors import eps
from hecke.multiseg import Multisegment, f_A, eps_A

line = LambdaLine(5, window=1)
print(genericity_check(line))

g = build_graph(line, 2)
print(len(g.nodes), "nodes,", len(g.edges), "edges")
for s, t, a in g.edges[:8]:
    print(g.nodes[s].label, "->", g.nodes[t].label)

# the graph as graphviz source
open("crystal.dot", "w").write(g.to_dot())

# multisegments on the line 5^{-1} q^{2Z} give irreducibles of H_n^R
G = Multisegment([(0, 1)])
print(G, "eps_0 =", eps_A(G, 0), "f_0 G =", f_A(G, 0))
M = dict_A_to_B(G, line)
for a in line.window_values():
    print(a, eps(M, a), predicted_eps(G, a, line))
