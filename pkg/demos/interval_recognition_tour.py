"""Interval-point digraphs and consecutive-ones recognition.

Give each vertex an interval and a point outside its own interval, and
draw an arc to every vertex whose interval contains your point.  The
adjacency matrix of such a digraph admits a column order putting the
ones of every row next to each other, and from that order an LR order
of the digraph falls out.  This script builds a seeded family, walks
the recognition, and shows the minimal witness reported for a matrix
that has no good order.
"""

from fvsat.c1p import (BinaryMatrix, NotC1P, adjacency_matrix,
                       c1p_good_order, format_matrix,
                       gen_interval_point_family, interval_point_digraph,
                       lr_order_from_c1p)
from fvsat.fvs import verify_lr_order


def main() -> None:
    fam = gen_interval_point_family(2, 6)
    print("a seeded family of six intervals with marked points:")
    for i, ((lo, hi), t) in enumerate(zip(fam.intervals, fam.points), 1):
        print(f"  vertex {i}: interval [{lo}, {hi}], point {t}")

    g = interval_point_digraph(fam)
    print(f"arcs (point of u inside interval of v): {sorted(g.arcs)}")
    print()

    m = adjacency_matrix(g)
    print("adjacency matrix:")
    print(format_matrix(m))
    order = c1p_good_order(m)
    print(f"column order making every row contiguous: {order}")

    lr = lr_order_from_c1p(g)
    print(f"LR order from the recognition: {lr.order}, Right side "
          f"{sorted(lr.right)}, verified {verify_lr_order(g, lr)}")
    print()

    bad = BinaryMatrix(((1, 1, 0), (0, 1, 1), (1, 0, 1)))
    print("three pairwise-overlapping rows cannot be made contiguous:")
    print(format_matrix(bad))
    try:
        c1p_good_order(bad)
    except NotC1P as exc:
        print(f"recognition reports: {exc}")
        print(f"witness rows: {sorted(exc.rows)}")


if __name__ == "__main__":
    main()
