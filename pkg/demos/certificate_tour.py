"""Feedback vertex sets and the LR orders that certify them.

A vertex set is an acyclic FVS when it induces an acyclic subgraph and
its removal leaves one too.  Such a set is exactly the Right side of a
vertex order in which every Right vertex sends arcs only backward and
every Left vertex only forward.  This script finds minimum sets by
exhaustive search and converts them into verified orders, then does the
same starting from an NAE witness of a monotone formula.
"""

from fvsat.fvs import (NoAcyclicFvs, brute_amfvs, brute_mfvs,
                       brute_min_ones, is_acyclic_fvs, is_fvs,
                       lr_order_from_acyclic_fvs, lr_order_from_nae,
                       verify_lr_order)
from fvsat.digraph import Digraph
from fvsat.sat import Assignment, Formula, Mode, clause, representative_graph


def main() -> None:
    two_triangles = Digraph(6, [(1, 2), (2, 3), (3, 1),
                                (4, 5), (5, 6), (6, 4), (3, 4)])
    print("two triangles joined by a bridge:")
    print(f"  {{3, 4}} breaks every cycle: {is_fvs(two_triangles, {3, 4})}")
    print(f"  it is acyclic inside as well: "
          f"{is_acyclic_fvs(two_triangles, {3, 4})}")

    mfvs = brute_mfvs(two_triangles)
    amfvs = brute_amfvs(two_triangles)
    print(f"  minimum FVS: size {mfvs.value}, witness {sorted(mfvs.witness)}")
    print(f"  minimum acyclic FVS: size {amfvs.value}, "
          f"witness {sorted(amfvs.witness)}")

    order = lr_order_from_acyclic_fvs(two_triangles, amfvs.witness)
    print(f"  certifying order: {order.order}, Right side "
          f"{sorted(order.right)}, verified "
          f"{verify_lr_order(two_triangles, order)}")
    print()

    k4 = Digraph(4, [(u, v) for u in range(1, 5)
                     for v in range(1, 5) if u != v])
    res = brute_amfvs(k4)
    print("the bidirected complete graph on four vertices has feedback "
          "sets but no acyclic one:")
    print(f"  minimum FVS size: {brute_mfvs(k4).value}")
    print(f"  acyclic FVS search returns: {res}")
    assert isinstance(res, NoAcyclicFvs)
    print()

    f = Formula(var_count=4, clauses=(clause(1, 2, 3), clause(2, 3, 4)))
    nae = brute_min_ones(f, Mode.NAE)
    print("for a monotone NAE formula, true-variable sets of witnesses "
          "are acyclic feedback sets of its representative graph:")
    print(f"  optimum {nae.value}, witness {sorted(nae.witness)}")
    order = lr_order_from_nae(f, Assignment.from_ones(4, nae.witness))
    g = representative_graph(f)
    print(f"  induced order {order.order} with Right side "
          f"{sorted(order.right)}, verified {verify_lr_order(g, order)}")


if __name__ == "__main__":
    main()
