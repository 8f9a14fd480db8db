"""Consecutive-ones recognition, LR-orders for digraphs whose adjacency
matrix is C1P, and interval-point digraphs.

A 0/1 matrix has the consecutive-ones property for rows when its
columns can be reordered so every row's ones form one contiguous block.
For a loopless digraph whose adjacency matrix is C1P, reordering rows
and columns by one good order yields an LR-order directly: each row's
block misses the zero diagonal entry, so it sits entirely on one side
of it.

Interval-point digraphs pair every vertex with a source interval and a
point; v reaches w when w's point lies in v's interval.  Their
adjacency matrices are always C1P (order columns by point), which makes
them a generator of guaranteed-recognizable inputs.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import _pqtree
from ._rng import SplitMix64
from .digraph import Digraph
from .fvs import LROrder, verify_lr_order


class MatrixError(ValueError):
    """Malformed matrix text or ill-formed matrix contents."""


class LoopError(Exception):
    """A vertex's point lies inside its own source interval."""


class NotC1P(Exception):
    """The matrix admits no column order with consecutive ones.

    ``rows`` identifies a minimal set of rows that is already not C1P:
    removing any one of them makes the rest recognizable.  For matrix
    inputs these are 0-based row indexes; for digraph inputs they are
    vertex ids.
    """

    def __init__(self, rows: tuple[int, ...], *, kind: str = "rows"):
        self.rows = tuple(rows)
        super().__init__(
            f"no column order has consecutive ones; minimal witness "
            f"{kind} {sorted(self.rows)}")


@dataclass(frozen=True)
class BinaryMatrix:
    """Rectangular 0/1 matrix stored as a tuple of row tuples."""

    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(
            self, "entries",
            tuple(tuple(row) for row in self.entries))
        widths = {len(row) for row in self.entries}
        if len(widths) > 1:
            raise MatrixError("rows have differing lengths")
        for row in self.entries:
            for x in row:
                if x not in (0, 1):
                    raise MatrixError(f"matrix entries must be 0 or 1, got {x!r}")

    @property
    def row_count(self) -> int:
        return len(self.entries)

    @property
    def col_count(self) -> int:
        return len(self.entries[0]) if self.entries else 0

    def row_ones(self, i: int) -> frozenset:
        return frozenset(j for j, x in enumerate(self.entries[i]) if x)


def read_matrix(text: str) -> BinaryMatrix:
    """Parse the matrix format: `<rows> <cols>` then one 0/1 string per row."""
    lines = [ln.strip() for ln in text.splitlines()
             if ln.strip() and not ln.lstrip().startswith("#")]
    if not lines:
        raise MatrixError("empty matrix input")
    head = lines[0].split()
    if len(head) != 2:
        raise MatrixError("header must be `<rows> <cols>`")
    try:
        nrows, ncols = int(head[0]), int(head[1])
    except ValueError as exc:
        raise MatrixError("header must hold two integers") from exc
    if nrows < 0 or ncols < 0:
        raise MatrixError("matrix dimensions cannot be negative")
    body = lines[1:]
    if len(body) != nrows:
        raise MatrixError(f"expected {nrows} rows, found {len(body)}")
    rows = []
    for i, ln in enumerate(body):
        if len(ln) != ncols or set(ln) - {"0", "1"}:
            raise MatrixError(f"row {i} is not a 0/1 string of length {ncols}")
        rows.append(tuple(int(ch) for ch in ln))
    return BinaryMatrix(tuple(rows))


def format_matrix(m: BinaryMatrix) -> str:
    lines = [f"{m.row_count} {m.col_count}"]
    lines.extend("".join(str(x) for x in row) for row in m.entries)
    return "\n".join(lines) + "\n"


def _row_sets(m: BinaryMatrix) -> list[frozenset]:
    return [m.row_ones(i) for i in range(m.row_count)]


def _minimal_core(rows: list[frozenset], col_count: int) -> tuple[int, ...]:
    """Minimal index set whose rows are already not C1P, by greedy removal."""
    keep = list(range(len(rows)))
    for i in list(keep):
        trial = [j for j in keep if j != i]
        if _pqtree.recognize(col_count, [rows[j] for j in trial]) is None:
            keep = trial
    return tuple(keep)


def c1p_good_order(m: BinaryMatrix) -> tuple[int, ...]:
    """A column permutation making every row's ones consecutive.

    Returns 0-based column indexes in their new left-to-right order.
    The certificate is re-verified before being returned.  Raises
    NotC1P, carrying a minimal witness row set, when no order exists.
    """
    rows = _row_sets(m)
    order = _pqtree.recognize(m.col_count, rows)
    if order is None:
        raise NotC1P(_minimal_core(rows, m.col_count))
    pos = {c: i for i, c in enumerate(order)}
    for ones in rows:
        spots = sorted(pos[c] for c in ones)
        if spots and spots[-1] - spots[0] != len(spots) - 1:
            raise AssertionError("recognizer produced a bad certificate")
    return order


def adjacency_matrix(g: Digraph) -> BinaryMatrix:
    """Square 0/1 matrix over the graph's vertices in ascending order."""
    verts = g.sorted_vertices()
    idx = {v: i for i, v in enumerate(verts)}
    rows = []
    for v in verts:
        row = [0] * len(verts)
        for w in g.successors(v):
            row[idx[w]] = 1
        rows.append(tuple(row))
    return BinaryMatrix(tuple(rows))


def lr_order_from_c1p(g: Digraph) -> LROrder:
    """LR-order of a digraph whose adjacency matrix is C1P.

    Rows and columns are reordered by one good order; a vertex whose
    reordered successor block lies after its diagonal entry goes Right,
    before it goes Left.  Vertices without successors go Left.  Raises
    NotC1P (witness rows reported as vertex ids) otherwise.
    """
    verts = g.sorted_vertices()
    m = adjacency_matrix(g)
    try:
        order = c1p_good_order(m)
    except NotC1P as exc:
        raise NotC1P(tuple(verts[i] for i in exc.rows),
                     kind="vertices") from None
    arranged = tuple(verts[j] for j in order)
    pos = {v: i for i, v in enumerate(arranged)}
    right = set()
    for v in verts:
        succ = g.successors(v)
        if succ and min(pos[w] for w in succ) > pos[v]:
            right.add(v)
    lro = LROrder(arranged, frozenset(right))
    if not verify_lr_order(g, lro):
        raise AssertionError("derived order failed LR verification")
    return lro


@dataclass(frozen=True)
class IntervalPointFamily:
    """Per vertex: a closed source interval [lo, hi] and a point.

    Vertex i (1-based) owns ``intervals[i-1]`` and ``points[i-1]``.
    Endpoints and points are exact rationals; integers are accepted and
    converted.
    """

    intervals: tuple[tuple[Fraction, Fraction], ...]
    points: tuple[Fraction, ...]

    def __post_init__(self):
        ivs = tuple((Fraction(lo), Fraction(hi)) for lo, hi in self.intervals)
        pts = tuple(Fraction(t) for t in self.points)
        object.__setattr__(self, "intervals", ivs)
        object.__setattr__(self, "points", pts)
        if len(ivs) != len(pts):
            raise ValueError("need one point per interval")
        for i, (lo, hi) in enumerate(ivs):
            if lo > hi:
                raise ValueError(f"interval {i + 1} has lo > hi")

    @property
    def n(self) -> int:
        return len(self.points)


def interval_point_digraph(fam: IntervalPointFamily) -> Digraph:
    """Digraph with an arc v→w whenever w's point lies in v's interval.

    Requires every vertex's own point to avoid its interval (LoopError
    otherwise); the result is therefore loopless, and its adjacency
    matrix is always C1P.
    """
    for v in range(1, fam.n + 1):
        lo, hi = fam.intervals[v - 1]
        if lo <= fam.points[v - 1] <= hi:
            raise LoopError(f"point of vertex {v} lies in its own interval")
    arcs = set()
    for v in range(1, fam.n + 1):
        lo, hi = fam.intervals[v - 1]
        for w in range(1, fam.n + 1):
            if w != v and lo <= fam.points[w - 1] <= hi:
                arcs.add((v, w))
    return Digraph(fam.n, arcs)


def gen_interval_point_family(seed: int, n: int) -> IntervalPointFamily:
    """Seed-deterministic family of n interval-point pairs.

    Endpoints are integers on a grid wide enough that a point outside
    each (deliberately narrow) interval always exists.
    """
    if n < 0:
        raise ValueError("n cannot be negative")
    rng = SplitMix64(seed)
    span = 6 * n + 4
    intervals = []
    points = []
    for _ in range(n):
        lo = rng.below(span)
        hi = min(lo + rng.below(max(1, span // 3)), span - 1)
        t = rng.below(span)
        while lo <= t <= hi:
            t = rng.below(span)
        intervals.append((Fraction(lo), Fraction(hi)))
        points.append(Fraction(t))
    return IntervalPointFamily(tuple(intervals), tuple(points))
