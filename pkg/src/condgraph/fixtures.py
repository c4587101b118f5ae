"""Named fixture graphs.

Small standards (paths, cycles, cliques and friends) plus the larger hand
drawn graphs used throughout the test suite, each transcribed once from its
drawing rule.  The two circulant-style drawings are stored as per-residue
offset tables; their transcriptions are unit-tested for symmetric closure and
edge count, and their advertised properties (ipso omni-insulation, the
6-regular degree profile) are re-derived computationally rather than trusted.
"""

from __future__ import annotations

from .families import corona, min_deg2_graph
from .graphs import (Graph, complete_graph, cycle_graph, path_graph, star_graph)

# vertex classes are residues of the 1-based drawing index; offsets wrap mod n
_IPSO15_OFFSETS = {1: (1, 4, 6, 9, 11, 14),
                   2: (1, 3, 11, 12, 14),
                   0: (1, 3, 4, 12, 14)}

_REG24_OFFSETS = {1: (1, 3, 5, 7, 17, 23),
                  2: (1, 3, 7, 9, 11, 23),
                  3: (1, 3, 11, 15, 21, 23),
                  4: (1, 3, 17, 19, 21, 23),
                  5: (1, 7, 13, 19, 21, 23),
                  6: (1, 13, 17, 19, 21, 23),
                  7: (1, 5, 7, 17, 21, 23),
                  0: (1, 3, 5, 7, 17, 23)}


def residue_offset_graph(n: int, modulus: int, offsets: dict) -> Graph:
    """Graph on 0..n-1 where drawing vertex i (1-based) of class i % modulus
    connects to i + o for each listed offset o, all mod n."""
    edges = set()
    for i in range(1, n + 1):
        for o in offsets[i % modulus]:
            j = (i + o - 1) % n + 1
            edges.add((min(i, j) - 1, max(i, j) - 1))
    return Graph.from_edges(n, sorted(edges))


def _ladder(rungs: int, skip_rungs=()) -> Graph:
    rails = [(i, i + 1) for i in range(rungs - 1)]
    rails += [(rungs + i, rungs + i + 1) for i in range(rungs - 1)]
    steps = [(i, rungs + i) for i in range(rungs) if i not in skip_rungs]
    return Graph.from_edges(2 * rungs, rails + steps)


def _build(name: str) -> Graph:
    if name == "p2":
        return path_graph(2)
    if name == "p3":
        return path_graph(3)
    if name == "p4":
        return path_graph(4)
    if name == "c3":
        return cycle_graph(3)
    if name == "c4":
        return cycle_graph(4)
    if name == "k4":
        return complete_graph(4)
    if name == "diamond":
        # K4 minus the edge between the last two vertices
        return Graph.from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])
    if name == "star3":
        return star_graph(3)
    if name == "paw":
        return Graph.from_edges(4, [(0, 1), (0, 2), (1, 2), (2, 3)])
    if name == "ipso15":
        return residue_offset_graph(15, 3, _IPSO15_OFFSETS)
    if name == "fig6reg24":
        return residue_offset_graph(24, 8, _REG24_OFFSETS)
    if name == "ladder_l3":
        return _ladder(3)
    if name == "e8":
        # 5-path and 3-path with two cross edges, closing one square
        return Graph.from_edges(8, [(0, 1), (1, 2), (2, 3), (3, 4),
                                    (5, 6), (6, 7), (1, 6), (2, 7)])
    if name == "ladder5_partial":
        return _ladder(5, skip_rungs=(0, 4))
    if name == "radialene3":
        return corona(cycle_graph(3))
    if name == "comb3":
        return corona(path_graph(3))
    if name == "fig4_k4_base":
        return min_deg2_graph(4)
    raise KeyError(name)


FIXTURE_NAMES = ("p2", "p3", "p4", "c3", "c4", "k4", "diamond", "star3", "paw",
                 "ipso15", "ladder_l3", "e8", "ladder5_partial", "radialene3",
                 "comb3", "fig4_k4_base", "fig6reg24")


def fixture(name: str) -> Graph:
    """Named fixture graph; raises KeyError for unknown names."""
    if name not in FIXTURE_NAMES:
        raise KeyError(f"unknown fixture {name!r}; known: {', '.join(FIXTURE_NAMES)}")
    return _build(name)
