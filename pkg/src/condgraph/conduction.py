"""Fermi-level device verdicts and conduction-graph construction.

A device is a graph with two lead attachment vertices (equal for ipso
devices).  Whether it conducts at the Fermi level is decided by interlacing
selection rules keyed on the nullity signature, the quadruple of kernel
dimensions of the graph and its one- and two-vertex deletions.  Exactly one
signature, all four nullities equal, is not settled by the table; there the
verdict is decided exactly through the square numerator polynomial of the
transmission function: the device conducts if and only if the zero-root count
of u*t - s*v equals twice the graph's nullity.

The conduction graph collects every verdict: an edge per conducting distinct
device, a loop per conducting ipso device.  Three construction routes exist
and must agree:

* nullity 0: booleanise the exact inverse (equivalently, the adjugate, which
  shares its zero pattern and never leaves the integers);
* nullity 1: forced block structure around the core vertices, with only
  non-core pairs needing individual verdicts;
* any nullity: the generic per-device selection-rule path.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from . import linalg
from .graphs import Graph, adjacency_matrix, is_connected
from .linalg import IntPolynomial, SingularMatrixError


class SignatureError(RuntimeError):
    """A nullity signature violated interlacing; indicates an internal bug."""


class Rule(enum.Enum):
    """Which selection-rule row (or fast path) produced a verdict.

    Distinct-device members are keyed by the nullity shifts of the deletions
    (G-u, G-v, G-u-v) relative to G, with the two single deletions sorted
    descending; ipso members by the shift of G-u.
    """

    D_UP_UP_UP2 = (1, 1, 2)
    D_UP_UP_SAME = (1, 1, 0)
    D_UP_SAME_UP = (1, 0, 1)
    D_UP_SAME_SAME = (1, 0, 0)
    D_UP_DOWN_SAME = (1, -1, 0)
    D_SAME_SAME_UP = (0, 0, 1)
    EQUAL_NULLITY_JTEST = (0, 0, 0)
    D_SAME_DOWN_DOWN = (0, -1, -1)
    D_DOWN_DOWN_SAME = (-1, -1, 0)
    D_DOWN_DOWN_DOWN = (-1, -1, -1)
    D_DOWN_DOWN_DOWN2 = (-1, -1, -2)
    I_UP = (1,)
    I_SAME = (0,)
    I_DOWN = (-1,)
    # fast-path provenance (not selection-rule rows)
    INVERSE_PATTERN = "inverse"
    NULLITY1_BLOCKS = "blocks"


# verdicts for the determinate rows; the all-equal row maps to None (j-test)
_DISTINCT_VERDICT = {
    (1, 1, 2): False,
    (1, 1, 0): True,
    (1, 0, 1): False,
    (1, 0, 0): True,
    (1, -1, 0): False,
    (0, 0, 1): True,
    (0, 0, 0): None,
    (0, -1, -1): False,
    (-1, -1, 0): True,
    (-1, -1, -1): True,
    (-1, -1, -2): False,
}

_IPSO_VERDICT = {(1,): False, (0,): True, (-1,): True}


@dataclass(frozen=True)
class NullitySignature:
    """(eta(G), eta(G-u), eta(G-v), eta(G-u-v)); the last is None for ipso."""

    eta_g: int
    eta_gu: int
    eta_gv: int
    eta_guv: int | None

    def deltas(self):
        if self.eta_guv is None:
            return (self.eta_gu - self.eta_g,)
        du = self.eta_gu - self.eta_g
        dv = self.eta_gv - self.eta_g
        if du < dv:
            du, dv = dv, du
        return (du, dv, self.eta_guv - self.eta_g)


@dataclass(frozen=True)
class DeviceVerdict:
    conducts: bool
    rule: Rule


@dataclass(frozen=True)
class ConductionGraph:
    """The conduction graph plus the per-device provenance that built it."""

    graph: Graph
    verdicts: dict

    def verdict(self, u: int, v: int) -> DeviceVerdict:
        return self.verdicts[(u, v) if u <= v else (v, u)]

    def loop_count(self) -> int:
        return self.graph.loops.bit_count()

    def component_count(self) -> int:
        from .graphs import connected_components
        return len(connected_components(self.graph))


# ---------------------------------------------------------------------------
# booleanisation
# ---------------------------------------------------------------------------

def booleanise(m) -> list[list[int]]:
    """Entrywise 0 -> 0, nonzero off-diagonal -> 1, nonzero diagonal -> 2.

    The input must be square and symmetric; the result is an adjacency
    matrix of a (possibly looped) graph.
    """
    n = len(m)
    for i in range(n):
        if len(m[i]) != n:
            raise ValueError("booleanise needs a square matrix")
        for j in range(i + 1, n):
            if m[i][j] != m[j][i]:
                raise ValueError(f"matrix not symmetric at ({i},{j})")
    return [[(2 if i == j else 1) if m[i][j] else 0 for j in range(n)]
            for i in range(n)]


# ---------------------------------------------------------------------------
# nullity helpers on vertex-deleted subgraphs
# ---------------------------------------------------------------------------

def _sub_nullity(g: Graph, dropped: int) -> int:
    """Nullity of the adjacency matrix of g minus the vertices in ``dropped``.

    The empty graph has nullity 0 (rank of a 0x0 matrix is 0).
    """
    keep = [v for v in range(g.n) if not dropped >> v & 1]
    if not keep:
        return 0
    m = [[(g.rows[v] >> u) & 1 for u in keep] for v in keep]
    return len(keep) - linalg.rank(m)


def _sub_char_poly(g: Graph, dropped: int) -> IntPolynomial:
    keep = [v for v in range(g.n) if not dropped >> v & 1]
    m = [[(g.rows[v] >> u) & 1 for u in keep] for v in keep]
    return linalg.char_poly(m)


def graph_nullity(g: Graph) -> int:
    return _sub_nullity(g, 0)


# ---------------------------------------------------------------------------
# per-device verdicts
# ---------------------------------------------------------------------------

def nullity_signature(g: Graph, u: int, v: int) -> NullitySignature:
    """Exact nullity signature of the device (g, u, v); u == v means ipso."""
    eta = _sub_nullity(g, 0)
    eta_u = _sub_nullity(g, 1 << u)
    if u == v:
        return NullitySignature(eta, eta_u, eta_u, None)
    eta_v = _sub_nullity(g, 1 << v)
    eta_uv = _sub_nullity(g, 1 << u | 1 << v)
    return NullitySignature(eta, eta_u, eta_v, eta_uv)


def _jsquared(g: Graph, u: int, v: int) -> IntPolynomial:
    """The numerator polynomial u*t - s*v of the device (square by Jacobi)."""
    s = _sub_char_poly(g, 0)
    t = _sub_char_poly(g, 1 << u)
    uu = _sub_char_poly(g, 1 << v)
    vv = _sub_char_poly(g, 1 << u | 1 << v)
    return uu * t - s * vv


def _jtest_conducts(g: Graph, u: int, v: int, eta: int) -> bool:
    # conducts iff the forced zero roots of u*t - s*v are not exceeded
    p = _jsquared(g, u, v)
    if p.is_zero():
        return False
    return p.trailing_zero_count() == 2 * eta


def _make_jtester(g: Graph, eta: int):
    """Equal-nullity resolver with lazy per-graph polynomial caching."""
    cache = {}

    def poly(dropped):
        if dropped not in cache:
            cache[dropped] = _sub_char_poly(g, dropped)
        return cache[dropped]

    def jtest(u, v):
        p = poly(1 << v) * poly(1 << u) - poly(0) * _sub_char_poly(
            g, 1 << u | 1 << v)
        if p.is_zero():
            return False
        return p.trailing_zero_count() == 2 * eta

    return jtest


def _verdict_from_signature(g, u, v, sig: NullitySignature,
                            jtester=None) -> DeviceVerdict:
    deltas = sig.deltas()
    if sig.eta_guv is None:
        try:
            conducts = _IPSO_VERDICT[deltas]
        except KeyError:
            raise SignatureError(f"impossible ipso signature {sig}") from None
        return DeviceVerdict(conducts, Rule(deltas))
    try:
        conducts = _DISTINCT_VERDICT[deltas]
    except KeyError:
        raise SignatureError(f"impossible distinct signature {sig}") from None
    if conducts is None:
        if jtester is None:
            conducts = _jtest_conducts(g, u, v, sig.eta_g)
        else:
            conducts = jtester(u, v)
        return DeviceVerdict(conducts, Rule.EQUAL_NULLITY_JTEST)
    return DeviceVerdict(conducts, Rule(deltas))


def device_verdict(g: Graph, u: int, v: int) -> DeviceVerdict:
    """Conducts/insulates at the Fermi level, with the rule that decided it."""
    _require_simple_connected(g)
    return _verdict_from_signature(g, u, v, nullity_signature(g, u, v))


def _require_simple_connected(g: Graph):
    if not g.is_simple():
        raise ValueError("device graphs must be simple (no loops)")
    if not is_connected(g):
        raise ValueError("device graphs must be connected")


# ---------------------------------------------------------------------------
# whole-graph construction
# ---------------------------------------------------------------------------

def conduction_graph(g: Graph, method: str = "auto") -> ConductionGraph:
    """Conduction graph of a connected simple graph.

    ``method`` selects the construction route: "rules" always walks every
    device through the selection rules; "inverse" requires nullity 0 and
    booleanises the inverse; "blocks" requires nullity 1; "auto" picks the
    cheapest valid route.  All routes agree (this is tested exhaustively).
    """
    _require_simple_connected(g)
    if method == "rules":
        return _conduction_by_rules(g)
    eta = graph_nullity(g)
    if method == "inverse" or (method == "auto" and eta == 0):
        if eta != 0:
            raise SingularMatrixError(eta)
        return _conduction_by_inverse(g)
    if method == "blocks" or (method == "auto" and eta == 1):
        if eta != 1:
            raise ValueError(f"block construction needs nullity 1, got {eta}")
        return _conduction_by_blocks(g)
    if method == "auto":
        return _conduction_by_rules(g)
    raise ValueError(f"unknown method {method!r}")


def _conduction_by_rules(g: Graph) -> ConductionGraph:
    n = g.n
    eta = graph_nullity(g)
    eta_minus = [_sub_nullity(g, 1 << v) for v in range(n)]
    jtester = _make_jtester(g, eta)
    verdicts = {}
    rows = [0] * n
    loops = 0
    for u in range(n):
        sig = NullitySignature(eta, eta_minus[u], eta_minus[u], None)
        dv = _verdict_from_signature(g, u, u, sig)
        verdicts[(u, u)] = dv
        if dv.conducts:
            loops |= 1 << u
        for v in range(u + 1, n):
            sig = NullitySignature(eta, eta_minus[u], eta_minus[v],
                                   _sub_nullity(g, 1 << u | 1 << v))
            dv = _verdict_from_signature(g, u, v, sig, jtester)
            verdicts[(u, v)] = dv
            if dv.conducts:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
    return ConductionGraph(Graph(n, rows, loops), verdicts)


def inverse_conduction_pattern(g: Graph) -> tuple[list[int], int]:
    """Adjacency rows and loop mask of the conduction graph, nullity-0 route.

    Works on the adjugate, whose zero pattern equals the inverse's, so the
    whole computation stays in the integers.
    """
    a = adjacency_matrix(g)
    d = linalg.det(a)
    if d == 0:
        raise SingularMatrixError(linalg.nullity(a))
    adj = linalg.adjugate(a)
    n = g.n
    rows = [0] * n
    loops = 0
    for i in range(n):
        if adj[i][i]:
            loops |= 1 << i
        for j in range(i + 1, n):
            if adj[i][j]:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return rows, loops


def _conduction_by_inverse(g: Graph) -> ConductionGraph:
    rows, loops = inverse_conduction_pattern(g)
    verdicts = {}
    for u in range(g.n):
        verdicts[(u, u)] = DeviceVerdict(bool(loops >> u & 1), Rule.INVERSE_PATTERN)
        for v in range(u + 1, g.n):
            verdicts[(u, v)] = DeviceVerdict(bool(rows[u] >> v & 1),
                                             Rule.INVERSE_PATTERN)
    return ConductionGraph(Graph(g.n, rows, loops), verdicts)


def _vertex_classes_nullity1(g: Graph):
    """(core, middle, upper) vertex lists by the nullity shift of G-v."""
    eta = graph_nullity(g)
    if eta != 1:
        raise ValueError(f"expected nullity 1, got {eta}")
    core, middle, upper = [], [], []
    for v in range(g.n):
        shift = _sub_nullity(g, 1 << v) - eta
        if shift == -1:
            core.append(v)
        elif shift == 0:
            middle.append(v)
        else:
            upper.append(v)
    return core, middle, upper


def _conduction_by_blocks(g: Graph) -> ConductionGraph:
    """Nullity-1 route: core vertices form a looped clique, are isolated from
    the rest, and only non-core pairs need individual verdicts."""
    core, middle, upper = _vertex_classes_nullity1(g)
    n = g.n
    eta = 1
    eta_minus = [None] * n
    for v in core:
        eta_minus[v] = 0
    for v in middle:
        eta_minus[v] = 1
    for v in upper:
        eta_minus[v] = 2
    jtester = _make_jtester(g, eta)
    verdicts = {}
    rows = [0] * n
    loops = 0
    core_set = set(core)
    for u in range(n):
        if u in core_set:
            verdicts[(u, u)] = DeviceVerdict(True, Rule.NULLITY1_BLOCKS)
            loops |= 1 << u
        else:
            sig = NullitySignature(eta, eta_minus[u], eta_minus[u], None)
            dv = _verdict_from_signature(g, u, u, sig)
            verdicts[(u, u)] = dv
            if dv.conducts:
                loops |= 1 << u
        for v in range(u + 1, n):
            u_core = u in core_set
            v_core = v in core_set
            if u_core and v_core:
                dv = DeviceVerdict(True, Rule.NULLITY1_BLOCKS)
            elif u_core != v_core:
                dv = DeviceVerdict(False, Rule.NULLITY1_BLOCKS)
            else:
                sig = NullitySignature(eta, eta_minus[u], eta_minus[v],
                                       _sub_nullity(g, 1 << u | 1 << v))
                dv = _verdict_from_signature(g, u, v, sig)
            verdicts[(u, v)] = dv
            if dv.conducts:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
    return ConductionGraph(Graph(n, rows, loops), verdicts)


@dataclass(frozen=True)
class VertexClasses:
    core: tuple[int, ...]
    middle: tuple[int, ...]
    upper: tuple[int, ...]


def conduction_graph_nullity1_blocks(g: Graph):
    """Core/middle/upper partition plus the conduction graph (nullity 1 only)."""
    _require_simple_connected(g)
    core, middle, upper = _vertex_classes_nullity1(g)
    return VertexClasses(tuple(core), tuple(middle), tuple(upper)), \
        _conduction_by_blocks(g)
