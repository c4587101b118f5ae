"""A first walk through conduction graphs.

Every pair of vertices of a molecular graph defines a two-lead device; the
conduction graph records which devices transmit electrons at the Fermi level.
This script rebuilds the gallery of all connected graphs on up to 4 vertices
and prints each conduction graph next to its parent.
"""

from condgraph import (conduction_graph, enumerate_connected, graph_nullity,
                       is_conduction_isomorphic, to_graph6)


def describe(g):
    cg = conduction_graph(g)
    loops = cg.graph.loop_vertices()
    parts = [f"edges={cg.graph.edges()}"]
    parts.append(f"loops={loops if loops else 'none'}")
    if is_conduction_isomorphic(g):
        parts.append("conduction-isomorphic!")
    return "  ".join(parts)


def main():
    for n in range(1, 5):
        print(f"-- connected graphs on {n} vertices --")
        for g in enumerate_connected(n):
            print(f"{to_graph6(g):>6}  nullity={graph_nullity(g)}  {describe(g)}")
        print()

    print("Highlights:")
    print(" * the 4-cycle and the diamond share one conduction graph")
    print("   (two loop-decorated edges), so a conduction graph does not")
    print("   determine its parent;")
    print(" * the 2-path and the 4-path reproduce themselves.")


if __name__ == "__main__":
    main()
