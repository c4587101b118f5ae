"""Selection rules at work: nullity signatures and the equal-nullity case.

Most devices are settled by how the kernel dimension reacts to deleting the
two contact vertices.  When all four nullities coincide the table is silent
and the decision comes from the zero-root count of the squared numerator
polynomial u*t - s*v; K4 is the classic example.
"""

from condgraph import (Rule, complete_graph, cycle_graph, device_verdict,
                       nullity_signature, path_graph)
from condgraph.fixtures import fixture
from condgraph.transmission import device_polynomials


def show(g, name, u, v):
    sig = nullity_signature(g, u, v)
    verdict = device_verdict(g, u, v)
    word = "conducts" if verdict.conducts else "insulates"
    quad = (sig.eta_g, sig.eta_gu, sig.eta_gv, sig.eta_guv)
    print(f"{name} device ({u},{v}): signature {quad} -> {word}"
          f"   [{verdict.rule.name}]")


def main():
    show(path_graph(4), "4-path", 0, 3)
    show(path_graph(4), "4-path", 0, 2)
    show(cycle_graph(4), "4-cycle", 0, 2)
    show(cycle_graph(4), "4-cycle", 0, 1)
    show(fixture("diamond"), "diamond", 0, 0)
    show(fixture("star3"), "3-star", 1, 2)

    print()
    k4 = complete_graph(4)
    verdict = device_verdict(k4, 0, 1)
    assert verdict.rule is Rule.EQUAL_NULLITY_JTEST
    dp = device_polynomials(k4, 0, 1)
    print("K4 device (0,1) has all four nullities equal;")
    print(f"  u*t - s*v = {dp.jsq}")
    print(f"  zero-root count 0 == 2 * nullity 0, so it conducts: "
          f"{verdict.conducts}")


if __name__ == "__main__":
    main()
