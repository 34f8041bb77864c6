"""Smoke tests for the python bindings: one pass over every exposed surface."""

import pytest

import mcgraph as mg

C6 = (
    "part A a1 a2 a3\npart B b1 b2 b3\n"
    "edge a1 b1\nedge b1 a2\nedge a2 b2\nedge b2 a3\nedge a3 b3\nedge b3 a1\n"
)


def k33():
    edges = [(a, 3 + b) for a in range(3) for b in range(3)]
    return mg.Graph(6, edges)


def test_parse_and_roundtrip():
    g = mg.parse_graph(C6)
    assert g.vertex_count == 6
    assert g.edge_count == 6
    assert g.has_bipartition
    a, b = g.bipartition
    assert len(a) == len(b) == 3
    again = mg.parse_graph(mg.serialize_graph(g))
    assert again.edge_count == 6
    assert g.label(0) == "a1"
    assert g.vertex_of_label("b2") is not None


def test_parse_errors():
    with pytest.raises(ValueError):
        mg.parse_graph("edge a a\n")


def test_matchings():
    g = mg.parse_graph(C6)
    matchings, truncated = mg.perfect_matchings(g)
    assert len(matchings) == 2
    assert not truncated
    assert mg.is_matching_covered(g)
    assert mg.is_matching_covered(k33())
    assert mg.is_k_extendable(k33(), 2)
    assert not mg.is_k_extendable(g, 2)
    assert len(mg.allowed_edges(g)) == 6


def test_feasibility_and_classes():
    g = mg.parse_graph(C6)
    # alternate edges around the cycle form an all-or-none class of size 3
    classes, nontrivial = mg.equivalent_classes(g)
    assert sorted(len(c) for c in nontrivial) == [3, 3]
    cls = nontrivial[0]
    assert mg.is_feasible(g, cls)  # odd size: spectrum {0, 3}
    two = mg.EdgeSet(cls.ids[:2])
    assert not mg.is_feasible(g, two)
    parities, complete = mg.parity_spectrum(g, two)
    assert complete
    assert parities == [0]
    assert mg.edges_equivalent(g, cls.ids[0], cls.ids[1])


def test_switching():
    g = mg.parse_graph(C6)
    star = g.incident_edges(0)
    eq, witness = mg.equivalent_to_empty(g, star)
    assert eq and witness is not None
    # nabla of the recovered set really is the queried set
    assert mg.nabla(g, witness) == star
    eq, _ = mg.are_switching_equivalent(g, star, mg.EdgeSet([]))
    assert eq
    assert len(mg.switch_at(g, mg.EdgeSet([]), 0)) == g.degree(0)


def test_structure():
    rep = mg.classify(k33())
    assert rep.matching_covered
    assert rep.no_equivalent_class
    assert rep.strongly_coverable
    assert rep.two_extendable
    assert rep.brace and not rep.brick
    rep6 = mg.classify(mg.parse_graph(C6))
    assert rep6.matching_covered and not rep6.strongly_coverable
    assert rep6.equivalent_class_witness is not None
    assert len(mg.removable_edges(k33())) == 9


def test_dm_and_augmentation():
    g = mg.parse_graph(C6)
    parts = mg.dm_decomposition(g)
    assert sum(len(p) for p in parts) == 6
    n, arcs = mg.dm_digraph(g)
    assert n == len(parts)
    # a path (not matching covered) decomposes into several parts with cuts
    path = mg.parse_graph("part A a1 a2\npart B b1 b2\nedge a1 b1\nedge b1 a2\nedge a2 b2\n")
    cuts = mg.directed_cuts(path)
    assert cuts
    bigger, new_edges, ell, exact = mg.augment_to_matching_covered(path)
    assert exact
    assert ell == len(new_edges) >= 1
    assert mg.is_matching_covered(bigger)


def test_construction():
    c = mg.build_gkm(3, 2)
    assert c.graph.vertex_count == 12
    assert len(c.link_edges) == 4
    assert len(c.test_set) == 2
    ok, checks = mg.verify_construction(c)
    assert ok, [name for name, passed, _ in checks if not passed]
    assert not mg.is_feasible(c.graph, c.test_set)
    eq, _ = mg.equivalent_to_empty(c.graph, c.test_set)
    assert not eq
    again = mg.parse_construction(mg.serialize_construction(c))
    assert again.k == 3 and again.m == 2


def test_limits_and_preconditions():
    with pytest.raises(ValueError):
        mg.removable_edges(mg.parse_graph("vertex x\nvertex y\n"))
    # enumeration truncates politely ...
    matchings, truncated = mg.perfect_matchings(k33(), limit=2)
    assert truncated and len(matchings) == 2
    # ... but a truncated feasibility verdict refuses to guess
    with pytest.raises(RuntimeError):
        mg.is_feasible(k33(), mg.EdgeSet([0]), limit=2)
