"""Reducibility analysis of flow graphs, numberings, and LR orders.

A flow graph is reducible when every cycle closes back through a
single-entry region.  The analysis finds the cycle-arc targets (heads),
the vertex sets hanging below them (pockets), and, for reducible
graphs, two numberings whose comparisons classify every arc.  The block
partition they induce always forms a tree, and two-coloring that tree
yields an LR order of the whole graph.
"""

from fvsat.digraph import Digraph
from fvsat.flowgraph import (block_graph, gen_reducible, lr_ordering,
                             reducibility, reduction_order)
from fvsat.fvs import verify_lr_order


def describe(g: Digraph, source: int = 1) -> None:
    fa = reducibility(g, source)
    print(f"  arcs: {sorted(g.arcs)}")
    print(f"  heads (by decreasing preorder): {fa.heads}")
    for w in fa.heads:
        print(f"    pocket of {w}: hangs {sorted(fa.pstar[w])}")
    if not fa.reducible:
        head, vertex = fa.failure
        print(f"  irreducible: vertex {vertex} reaches back to head "
              f"{head} without hanging below it")
        return
    print("  vertex  po  sn  hn")
    for v in g.sorted_vertices():
        print(f"  {v:6}  {fa.dfst.po[v]:2}  {fa.sn[v]:2}  {fa.hn[v]:2}")
    print(f"  reduction order: {reduction_order(fa)}")
    bg = block_graph(g, source)
    print(f"  blocks: {[sorted(b) for b in bg.boxes]}, "
          f"tree edges {list(bg.edges)}")
    order = lr_ordering(g, source)
    print(f"  LR order: {order.order}, Right {sorted(order.right)}, "
          f"verified {verify_lr_order(g, order)}")


def main() -> None:
    nested = Digraph(4, [(1, 2), (2, 3), (3, 4), (4, 3), (4, 2)])
    print("nested loops, one inside the other:")
    describe(nested)
    print()

    star = Digraph(3, [(1, 2), (1, 3), (2, 3), (3, 2)])
    print("two entries into one cycle:")
    describe(star)
    print()

    g = gen_reducible(4, 9, 5)
    print("a seeded reducible graph on nine vertices:")
    describe(g)


if __name__ == "__main__":
    main()
