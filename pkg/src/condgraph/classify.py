"""Graph-level conduction classes.

Everything here is a view over the conduction graph: omni-insulator and nut
predicates, uniform core graphs, the two- and three-letter conduction class
codes, and conduction-isomorphism with an explicit witness.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import linalg
from .conduction import (ConductionGraph, _sub_nullity, conduction_graph,
                         graph_nullity, inverse_conduction_pattern)
from .graphs import (Graph, adjacency_matrix, bfs_distances, connected_components,
                     is_bipartite, is_connected)
from .isomorphism import find_isomorphism


def is_ipso_omni_insulator(g: Graph) -> bool:
    """True when every ipso device insulates, i.e. the conduction graph is
    loopless.  Only nullity-0 graphs can qualify; that is asserted."""
    cg = conduction_graph(g)
    if cg.graph.loops:
        return False
    assert graph_nullity(g) == 0, "loopless conduction graph on a singular graph"
    return True


def is_nut(g: Graph, include_trivial: bool = False) -> bool:
    """Nullity one with a nowhere-zero kernel vector (exact).

    K1 satisfies the letter of the definition; it is excluded unless
    ``include_trivial`` is set.
    """
    if not g.is_simple() or not is_connected(g):
        return False
    if g.n == 1:
        return include_trivial
    a = adjacency_matrix(g)
    basis = linalg.kernel_basis(a)
    if len(basis) != 1:
        return False
    return all(x != 0 for x in basis[0])


def is_uniform_core_graph(g: Graph) -> bool:
    """All vertices core and every distinct device drops both single-deletion
    nullities by one and the double deletion by two.

    Such graphs have a conduction graph of isolated looped vertices; that
    consequence is asserted whenever the predicate holds.
    """
    eta = graph_nullity(g)
    if eta < 2:
        return False
    for v in range(g.n):
        if _sub_nullity(g, 1 << v) != eta - 1:
            return False
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if _sub_nullity(g, 1 << u | 1 << v) != eta - 2:
                return False
    cg = conduction_graph(g)
    assert cg.graph.loops == (1 << g.n) - 1 and cg.graph.edge_count() == 0, \
        "uniform core graph without the nK1-loop conduction graph"
    return True


# ---------------------------------------------------------------------------
# class codes
# ---------------------------------------------------------------------------

def _letter(any_yes: bool, any_no: bool) -> str:
    if not any_yes and not any_no:
        return "X"
    if any_yes and any_no:
        return "X"
    return "C" if any_yes else "I"


@dataclass(frozen=True)
class ClassCode:
    """Conduction class letters over {C, I, X} plus the nullity digit.

    ``distinct_odd``/``distinct_even`` split the distinct devices by the
    parity of the connection distance in the base graph; for connected
    bipartite graphs this coincides with the inter/intra partite reading,
    recorded by ``bipartite_interpretation``.  ``empty_classes`` tells which
    X letters stand for an empty class rather than mixed behaviour.
    """

    distinct_all: str
    distinct_odd: str
    distinct_even: str
    ipso: str
    nullity_digit: int
    bipartite_interpretation: bool
    empty_classes: tuple[str, ...]

    @property
    def two_letter(self) -> str:
        return f"{self.distinct_all}{self.ipso}{self.nullity_digit}"

    @property
    def three_letter(self) -> str:
        return f"{self.distinct_odd}{self.distinct_even}{self.ipso}{self.nullity_digit}"


def class_code(g: Graph, cg: ConductionGraph | None = None) -> ClassCode:
    """Two- and three-letter conduction class of a connected simple graph."""
    if cg is None:
        cg = conduction_graph(g)
    tallies = {"odd": [False, False], "even": [False, False],
               "ipso": [False, False]}
    for u in range(g.n):
        dist = bfs_distances(g, u)
        loop = cg.graph.has_loop(u)
        tallies["ipso"][0 if loop else 1] = True
        for v in range(u + 1, g.n):
            kind = "odd" if dist[v] % 2 else "even"
            tallies[kind][0 if cg.graph.has_edge(u, v) else 1] = True
    any_edge = any(tallies[k][0] for k in ("odd", "even"))
    any_gap = any(tallies[k][1] for k in ("odd", "even"))
    empty = tuple(k for k in ("odd", "even", "ipso")
                  if not tallies[k][0] and not tallies[k][1])
    return ClassCode(
        distinct_all=_letter(any_edge, any_gap),
        distinct_odd=_letter(*tallies["odd"]),
        distinct_even=_letter(*tallies["even"]),
        ipso=_letter(*tallies["ipso"]),
        nullity_digit=min(graph_nullity(g), 2),
        bipartite_interpretation=is_bipartite(g),
        empty_classes=empty,
    )


# ---------------------------------------------------------------------------
# conduction-isomorphism
# ---------------------------------------------------------------------------

def conduction_isomorphism(g: Graph) -> list[int] | None:
    """Witness bijection from g onto its conduction graph, or None.

    Cheap screens run first: a conduction-isomorphic graph must be
    nonsingular, its conduction graph loopless and connected with the same
    degree sequence; only survivors pay for a canonical-form comparison.
    """
    if not g.is_simple() or not is_connected(g):
        return None
    try:
        rows, loops = inverse_conduction_pattern(g)
    except linalg.SingularMatrixError:
        return None
    if loops:
        return None
    if sorted(r.bit_count() for r in rows) != sorted(r.bit_count() for r in g.rows):
        return None
    cg = Graph(g.n, rows)
    if len(connected_components(cg)) != 1:
        return None
    return find_isomorphism(g, cg)


def is_conduction_isomorphic(g: Graph) -> bool:
    return conduction_isomorphism(g) is not None


def cubic_degree_theorem_check(g: Graph) -> bool:
    """Every conduction-graph vertex of a nonsingular cubic graph should have
    at least 4 neighbours; False would contradict the theorem.

    A looped vertex counts as its own neighbour, matching the nonzero count
    of the inverse column the theorem argues about.
    """
    if not g.is_simple() or not is_connected(g):
        raise ValueError("expected a connected simple graph")
    if any(r.bit_count() != 3 for r in g.rows):
        raise ValueError("expected a 3-regular graph")
    rows, loops = inverse_conduction_pattern(g)  # raises if singular
    return all(r.bit_count() + (loops >> v & 1) >= 4
               for v, r in enumerate(rows))


# ---------------------------------------------------------------------------
# one-stop report
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ClassificationReport:
    nullity: int
    is_ipso_omni_insulator: bool
    is_nut: bool
    is_ucg: bool
    is_conduction_isomorphic: bool
    code: ClassCode
    component_count: int
    loop_count: int


def classification_report(g: Graph) -> ClassificationReport:
    cg = conduction_graph(g)
    eta = graph_nullity(g)
    loopless = cg.graph.loops == 0
    cond_iso = is_conduction_isomorphic(g)
    if cond_iso:
        # Corollary chain: conduction-isomorphic forces nullity 0 and an
        # ipso omni-insulator; a violation here is a bug, not data.
        assert eta == 0 and loopless
    return ClassificationReport(
        nullity=eta,
        is_ipso_omni_insulator=loopless,
        is_nut=is_nut(g),
        is_ucg=is_uniform_core_graph(g) if eta >= 2 else False,
        is_conduction_isomorphic=cond_iso,
        code=class_code(g, cg),
        component_count=cg.component_count(),
        loop_count=cg.loop_count(),
    )
