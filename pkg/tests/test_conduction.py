"""Device verdicts, booleanisation, and the three construction routes."""

from fractions import Fraction

import pytest

from condgraph.conduction import (ConductionGraph, Rule, booleanise,
                                  conduction_graph, conduction_graph_nullity1_blocks,
                                  device_verdict, graph_nullity, nullity_signature)
from condgraph.fixtures import fixture
from condgraph.graphs import (Graph, adjacency_matrix, complete_graph, cycle_graph,
                              graph_from_adjacency, path_graph, star_graph)
from condgraph.isomorphism import are_isomorphic, canonical_form
from condgraph.linalg import SingularMatrixError, adjugate, det, inverse


def test_booleanise_examples():
    assert booleanise([[Fraction(1, 2), 0], [0, -2]]) == [[2, 0], [0, 2]]
    assert booleanise(inverse(adjacency_matrix(path_graph(2)))) == [[0, 1], [1, 0]]
    p4c = booleanise(inverse(adjacency_matrix(path_graph(4))))
    assert graph_from_adjacency(p4c) == Graph.from_edges(4, [(0, 1), (0, 3), (2, 3)])
    assert are_isomorphic(graph_from_adjacency(p4c), path_graph(4))
    with pytest.raises(ValueError):
        booleanise([[0, 1], [2, 0]])
    with pytest.raises(ValueError):
        booleanise([[0, 1]])


def test_nullity_signature_examples():
    sig = nullity_signature(path_graph(2), 0, 1)
    assert (sig.eta_g, sig.eta_gu, sig.eta_gv, sig.eta_guv) == (0, 1, 1, 0)
    sig = nullity_signature(path_graph(3), 0, 2)
    assert (sig.eta_g, sig.eta_gu, sig.eta_gv, sig.eta_guv) == (1, 0, 0, 1)
    sig = nullity_signature(cycle_graph(4), 0, 0)
    assert (sig.eta_g, sig.eta_gu, sig.eta_gv, sig.eta_guv) == (2, 1, 1, None)


def test_selection_rule_rows():
    # leaf pair of the star: both single deletions and the double deletion
    # drop the nullity -> insulates
    star = star_graph(3)
    sig = nullity_signature(star, 1, 2)
    assert sig.deltas() == (-1, -1, -2)
    verdict = device_verdict(star, 1, 2)
    assert not verdict.conducts and verdict.rule is Rule.D_DOWN_DOWN_DOWN2
    # ipso device on a middle vertex conducts
    diamond = fixture("diamond")
    verdict = device_verdict(diamond, 0, 0)
    assert verdict.conducts and verdict.rule is Rule.I_SAME
    # ipso on an upper vertex insulates
    verdict = device_verdict(path_graph(3), 1, 1)
    assert not verdict.conducts and verdict.rule is Rule.I_UP


def test_equal_nullity_device_uses_jtest():
    verdict = device_verdict(complete_graph(4), 0, 1)
    assert verdict.rule is Rule.EQUAL_NULLITY_JTEST
    assert verdict.conducts
    inv = inverse(adjacency_matrix(complete_graph(4)))
    assert inv[0][1] != 0


def test_c6_antipodal_pair_agrees_with_inverse():
    c6 = cycle_graph(6)
    verdict = device_verdict(c6, 0, 3)
    inv = inverse(adjacency_matrix(c6))
    assert verdict.conducts == (inv[0][3] != 0)


def test_verdict_symmetry(connected_upto_7, rng):
    for g in rng.sample(connected_upto_7[5], 10) + rng.sample(connected_upto_7[6], 10):
        for u in range(g.n):
            for v in range(u + 1, g.n):
                assert device_verdict(g, u, v) == device_verdict(g, v, u)


def test_device_verdict_rejects_bad_input():
    with pytest.raises(ValueError):
        device_verdict(Graph.from_edges(4, [(0, 1), (2, 3)]), 0, 1)
    with pytest.raises(ValueError):
        device_verdict(Graph.from_edges(2, [(0, 1)], loops=[0]), 0, 1)


# ---------------------------------------------------------------------------
# whole conduction graphs: the 10 connected graphs on at most 4 vertices
# ---------------------------------------------------------------------------

def _expected_small_conduction():
    """Frozen answers, derived once from exact inverses / selection rules."""
    k1 = Graph.from_edges(1, [])
    return [
        (k1, Graph.from_edges(1, [], loops=[0])),
        (path_graph(2), path_graph(2)),
        (path_graph(3), Graph.from_edges(3, [(0, 2)], loops=[0, 2])),
        (cycle_graph(3), Graph.from_edges(3, [(0, 1), (0, 2), (1, 2)],
                                          loops=[0, 1, 2])),
        (path_graph(4), Graph.from_edges(4, [(0, 1), (0, 3), (2, 3)])),
        (star_graph(3), Graph.from_edges(4, [], loops=[1, 2, 3])),
        (fixture("paw"), Graph.from_edges(4, [(0, 1), (0, 3), (1, 3), (2, 3)],
                                          loops=[3])),
        (cycle_graph(4), Graph.from_edges(4, [(0, 2), (1, 3)], loops=[0, 1, 2, 3])),
        (fixture("diamond"), Graph.from_edges(4, [(0, 1), (2, 3)],
                                              loops=[0, 1, 2, 3])),
        (complete_graph(4), Graph.from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2),
                                                 (1, 3), (2, 3)],
                                             loops=[0, 1, 2, 3])),
    ]


def test_conduction_graphs_on_at_most_4_vertices():
    for g, expected in _expected_small_conduction():
        got = conduction_graph(g).graph
        assert got == expected, g
        # and the pure selection-rule route agrees
        assert conduction_graph(g, method="rules").graph == expected


def test_conduction_examples_from_text():
    two_k2_loop = Graph.from_edges(4, [(0, 1), (2, 3)], loops=[0, 1, 2, 3])
    assert are_isomorphic(conduction_graph(cycle_graph(4)).graph, two_k2_loop)
    assert are_isomorphic(conduction_graph(fixture("diamond")).graph, two_k2_loop)
    k2c = conduction_graph(path_graph(2)).graph
    assert k2c == path_graph(2) and k2c.loops == 0


def test_conduction_graph_verdict_consistency():
    cg = conduction_graph(fixture("paw"), method="rules")
    assert isinstance(cg, ConductionGraph)
    for u in range(4):
        assert cg.verdict(u, u).conducts == cg.graph.has_loop(u)
        for v in range(u + 1, 4):
            assert cg.verdict(u, v).conducts == cg.graph.has_edge(u, v)
            assert cg.verdict(v, u) == cg.verdict(u, v)


def test_route_agreement_exhaustive_small(connected_upto_7):
    for n in range(2, 7):
        for g in connected_upto_7[n]:
            eta = graph_nullity(g)
            rules = conduction_graph(g, method="rules").graph
            assert conduction_graph(g).graph == rules
            if eta == 0:
                assert conduction_graph(g, method="inverse").graph == rules
            if eta == 1:
                assert conduction_graph(g, method="blocks").graph == rules


def test_method_preconditions():
    with pytest.raises(SingularMatrixError):
        conduction_graph(cycle_graph(4), method="inverse")
    with pytest.raises(ValueError):
        conduction_graph(path_graph(2), method="blocks")
    with pytest.raises(ValueError):
        conduction_graph(path_graph(2), method="nonsense")
    with pytest.raises(ValueError):
        conduction_graph(Graph.from_edges(4, [(0, 1), (2, 3)]))


# ---------------------------------------------------------------------------
# nullity-1 block structure
# ---------------------------------------------------------------------------

def test_nullity1_blocks_p3():
    classes, cg = conduction_graph_nullity1_blocks(path_graph(3))
    assert classes.core == (0, 2)
    assert classes.middle == ()
    assert classes.upper == (1,)
    assert cg.graph == Graph.from_edges(3, [(0, 2)], loops=[0, 2])


def test_nullity1_blocks_require_nullity_one():
    with pytest.raises(ValueError):
        conduction_graph_nullity1_blocks(path_graph(2))
    with pytest.raises(ValueError):
        conduction_graph_nullity1_blocks(cycle_graph(4))


def test_order7_nut_graphs_have_complete_looped_conduction_graph(connected_upto_7):
    from condgraph.classify import is_nut
    nuts = [g for g in connected_upto_7[7] if is_nut(g)]
    assert nuts, "order 7 must contain nut graphs"
    full = (1 << 7) - 1
    for g in nuts:
        classes, cg = conduction_graph_nullity1_blocks(g)
        assert classes.core == tuple(range(7))
        assert cg.graph.loops == full
        assert cg.graph.edge_count() == 21  # complete graph


def test_adjugate_pattern_reveals_core_block(connected_upto_7):
    # booleanising the adjugate of a nullity-1 graph shows exactly the looped
    # core clique and nothing else
    for n in range(3, 7):
        for g in connected_upto_7[n]:
            if graph_nullity(g) != 1:
                continue
            classes, cg = conduction_graph_nullity1_blocks(g)
            pattern = booleanise(adjugate(adjacency_matrix(g)))
            core = set(classes.core)
            for i in range(n):
                assert pattern[i][i] == (2 if i in core else 0)
                for j in range(i + 1, n):
                    expect = 1 if (i in core and j in core) else 0
                    assert pattern[i][j] == expect


def test_nullity1_core_block_structure(connected_upto_7):
    # core vertices: looped clique, no edges towards the rest
    for n in range(3, 8):
        for g in connected_upto_7[n]:
            if graph_nullity(g) != 1:
                continue
            classes, cg = conduction_graph_nullity1_blocks(g)
            core = set(classes.core)
            for u in core:
                assert cg.graph.has_loop(u)
                for v in range(g.n):
                    if v == u:
                        continue
                    assert cg.graph.has_edge(u, v) == (v in core)


def test_nut_iff_connected_conduction_graph(connected_upto_7):
    from condgraph.classify import is_nut
    from condgraph.graphs import connected_components
    for n in range(2, 8):
        for g in connected_upto_7[n]:
            if graph_nullity(g) != 1:
                continue
            cg = conduction_graph(g)
            connected = len(connected_components(cg.graph)) == 1
            assert connected == is_nut(g)


# ---------------------------------------------------------------------------
# jacobi square
# ---------------------------------------------------------------------------

def test_jsquared_is_perfect_square_small(connected_upto_7):
    from condgraph.conduction import _jsquared
    for n in range(2, 7):
        for g in connected_upto_7[n]:
            for u in range(n):
                for v in range(u + 1, n):
                    assert _jsquared(g, u, v).sqrt() is not None
