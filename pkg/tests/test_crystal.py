import pytest
from flint import fmpq

from hecke.crystal import (LambdaLine, build_graph, crystal_edge_check,
                           dict_A_to_B, dictionary_check, genericity_check,
                           predicted_eps)
from hecke.characters import character
from hecke.functors import eps, h0_module
from hecke.modrep import is_irreducible
from hecke.multiseg import Multisegment, eps_A, eps_star_A, realize


def test_genericity():
    assert genericity_check(LambdaLine(5, window=6))[0]
    assert not genericity_check(LambdaLine(9))[0]
    ok, why = genericity_check(LambdaLine(4))
    assert not ok and any("p^2" in w for w in why)


def test_classify_window():
    line = LambdaLine(5)
    assert line.classify(45) == ("+", 1)
    assert line.classify(fmpq(9, 5)) == ("-", 1)
    with pytest.raises(ValueError):
        line.classify(7)


def test_single_point():
    line = LambdaLine(5)
    M = dict_A_to_B(Multisegment([(0, 0)]), line)
    assert M.dim == 2 and is_irreducible(M)


def test_dictionary_on_small_cases():
    line = LambdaLine(5)
    cache = {}
    for G in (Multisegment([(0, 0)]), Multisegment([(0, 1)]), Multisegment([(0, 0), (1, 1)])):
        for a in (fmpq(1, 5), fmpq(9, 5), 5, 45):
            assert all(dictionary_check(G, a, line, cache).values()), (G, a)


def test_eps_bound():
    line = LambdaLine(5)
    G = Multisegment([(0, 1)])
    N = realize(G, fmpq(1, 5))
    M = dict_A_to_B(G, line)
    for a in line.window_values():
        side, i = line.classify(a)
        assert eps(M, a) == predicted_eps(G, a, line)
        assert eps(M, a) <= eps(N, a) + eps(N.__class__(N.desc, N.mats, N.dim), 0) + \
            max(eps_A(G, i) if side == "-" else 0, eps_star_A(G, -i) if side == "+" else 0)


def test_edge_check():
    r = crystal_edge_check(h0_module(7), 5)
    assert r == {"f_tag": "Irreducible", "eps_increment": True, "ef_identity": True}


def test_graph_shapes():
    line = LambdaLine(5, window=1)
    assert len(build_graph(line, 0).nodes) == 1
    g = build_graph(line, 1)
    assert len(g.edges) == 6
    assert len({t for _, t, _ in g.edges}) == 6
    chars = [n.char for n in g.nodes]
    assert len(set(chars)) == len(chars)
    with pytest.raises(ValueError):
        build_graph(line, 4)


def test_graph_depth_two_is_consistent():
    line = LambdaLine(5, window=1)
    g = build_graph(line, 2)
    for s, t, a in g.edges:
        assert eps(g.nodes[t].module, a) == eps(g.nodes[s].module, a) + 1
    for rank in (1, 2):
        chars = [n.char for n in g.nodes if n.module.desc.n == rank]
        assert len(set(chars)) == len(chars)
    assert g.to_dot() == build_graph(line, 2).to_dot()
    assert g.to_json()["nodes"][0]["label"] == "L(7)"


def test_type_r_graph_marks_nothing_generic():
    g = build_graph(LambdaLine(5, window=1), 2, family="R")
    assert not g.marks
    assert g.nodes[0].label == "L()"
