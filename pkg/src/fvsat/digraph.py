"""Directed graphs with the traversal and ordering primitives the rest of
the package builds on: acyclicity, deterministic topological orders,
elementary-cycle enumeration, depth-first spanning trees with arc
classification, and dominance.

Vertices are positive integer ids.  The usual constructor ``Digraph(n,
arcs)`` gives the dense id set 1..n; ``Digraph.on_vertices`` keeps an
explicit id set so collapsed or induced graphs preserve original names.
Graphs are immutable after construction and every function here is pure.

All tie-breaks are by ascending vertex id, so every output is
deterministic for a given input.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Iterator


class CyclicError(Exception):
    """The operation needed an acyclic graph and the input has a cycle."""


class LimitExceeded(Exception):
    """Cycle enumeration found more cycles than the caller's limit."""


class NotFlowGraphError(Exception):
    """Some vertex is unreachable from the requested source."""


class EdgeListError(ValueError):
    """Malformed edge-list text."""


class ArcClass(str, Enum):
    TREE = "tree"
    FORWARD = "forward"
    CYCLE = "cycle"
    CROSS = "cross"


class Digraph:
    """Immutable loopless directed graph without duplicate arcs."""

    __slots__ = ("vertices", "arcs", "_succ", "_pred")

    def __init__(self, n: int, arcs: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be >= 0")
        self._init(frozenset(range(1, n + 1)), arcs)

    @classmethod
    def on_vertices(cls, vertices: Iterable[int],
                    arcs: Iterable[tuple[int, int]] = ()) -> "Digraph":
        g = cls.__new__(cls)
        g._init(frozenset(vertices), arcs)
        return g

    def _init(self, vertices: frozenset, arcs: Iterable[tuple[int, int]]):
        for v in vertices:
            if not isinstance(v, int) or v < 1:
                raise ValueError(f"vertex ids must be positive integers, got {v!r}")
        arcset = set()
        for u, v in arcs:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if u not in vertices or v not in vertices:
                raise ValueError(f"arc ({u}, {v}) leaves the vertex set")
            arcset.add((u, v))
        succ: dict[int, list[int]] = {v: [] for v in vertices}
        pred: dict[int, list[int]] = {v: [] for v in vertices}
        for u, v in sorted(arcset):
            succ[u].append(v)
            pred[v].append(u)
        object.__setattr__(self, "vertices", frozenset(vertices))
        object.__setattr__(self, "arcs", frozenset(arcset))
        object.__setattr__(self, "_succ", {v: tuple(ws) for v, ws in succ.items()})
        object.__setattr__(self, "_pred", {v: tuple(sorted(us)) for v, us in pred.items()})

    def __setattr__(self, name, value):
        raise AttributeError("Digraph is immutable")

    @property
    def n(self) -> int:
        return len(self.vertices)

    def successors(self, v: int) -> tuple[int, ...]:
        return self._succ[v]

    def predecessors(self, v: int) -> tuple[int, ...]:
        return self._pred[v]

    def has_arc(self, u: int, v: int) -> bool:
        return (u, v) in self.arcs

    def sorted_vertices(self) -> tuple[int, ...]:
        return tuple(sorted(self.vertices))

    def induced(self, keep: Iterable[int]) -> "Digraph":
        """Subgraph on ``keep``, original ids preserved."""
        ks = frozenset(keep)
        if not ks <= self.vertices:
            raise ValueError("induced() got vertices outside the graph")
        return Digraph.on_vertices(
            ks, ((u, v) for (u, v) in self.arcs if u in ks and v in ks))

    def __eq__(self, other):
        return (isinstance(other, Digraph)
                and self.vertices == other.vertices and self.arcs == other.arcs)

    def __hash__(self):
        return hash((self.vertices, self.arcs))

    def __repr__(self):
        vs = sorted(self.vertices)
        dense = vs == list(range(1, len(vs) + 1))
        head = f"Digraph({len(vs)}" if dense else f"Digraph.on_vertices({vs}"
        return f"{head}, {sorted(self.arcs)})"


@dataclass(frozen=True)
class DfsTree:
    """Depth-first spanning tree of a flow graph.

    ``po`` is the DFS preorder number (consecutive 1..n, root gets 1),
    ``parent`` maps each non-root vertex to its tree parent, ``size`` is
    the subtree size, and ``arc_class`` classifies every arc of the
    graph.  Successors are visited in ascending id order, so the tree is
    unique for a given graph and root.
    """

    root: int
    parent: dict[int, int]
    po: dict[int, int]
    size: dict[int, int]
    arc_class: dict[tuple[int, int], ArcClass]

    def is_ancestor(self, u: int, v: int) -> bool:
        """True iff u lies on the tree path from the root to v (u = v counts)."""
        return self.po[u] <= self.po[v] < self.po[u] + self.size[u]

    def tree_arcs(self) -> frozenset:
        return frozenset((p, c) for c, p in self.parent.items())


def is_acyclic(g: Digraph) -> bool:
    indeg = {v: len(g.predecessors(v)) for v in g.vertices}
    queue = [v for v, d in indeg.items() if d == 0]
    seen = 0
    while queue:
        v = queue.pop()
        seen += 1
        for w in g.successors(v):
            indeg[w] -= 1
            if indeg[w] == 0:
                queue.append(w)
    return seen == g.n


def topological_order(g: Digraph) -> tuple[int, ...]:
    """Topological order with ties broken by ascending vertex id.

    This is the lexicographically smallest topological order.  Raises
    CyclicError if the graph has a cycle.
    """
    import heapq

    indeg = {v: len(g.predecessors(v)) for v in g.vertices}
    ready = [v for v, d in indeg.items() if d == 0]
    heapq.heapify(ready)
    out = []
    while ready:
        v = heapq.heappop(ready)
        out.append(v)
        for w in g.successors(v):
            indeg[w] -= 1
            if indeg[w] == 0:
                heapq.heappush(ready, w)
    if len(out) != g.n:
        raise CyclicError("graph has a cycle")
    return tuple(out)


def _sccs(g: Digraph, allowed: frozenset) -> list[frozenset]:
    """Strongly connected components of the induced subgraph, iteratively."""
    order: list[int] = []
    seen: set[int] = set()
    for start in sorted(allowed):
        if start in seen:
            continue
        stack = [(start, iter(g.successors(start)))]
        seen.add(start)
        while stack:
            v, it = stack[-1]
            advanced = False
            for w in it:
                if w in allowed and w not in seen:
                    seen.add(w)
                    stack.append((w, iter(g.successors(w))))
                    advanced = True
                    break
            if not advanced:
                order.append(v)
                stack.pop()
    comp: dict[int, int] = {}
    comps: list[set[int]] = []
    for start in reversed(order):
        if start in comp:
            continue
        comps.append({start})
        comp[start] = len(comps) - 1
        stack2 = [start]
        while stack2:
            v = stack2.pop()
            for u in g.predecessors(v):
                if u in allowed and u not in comp:
                    comp[u] = comp[start]
                    comps[-1].add(u)
                    stack2.append(u)
    return [frozenset(c) for c in comps]


def enumerate_cycles(g: Digraph, limit: int) -> list[tuple[int, ...]]:
    """All elementary directed cycles, each reported once.

    Johnson's algorithm.  A cycle is reported as the tuple of its
    vertices starting from the smallest one, and cycles appear in a
    deterministic order (ascending smallest vertex, then DFS order).
    Raises LimitExceeded as soon as more than ``limit`` cycles exist.
    """
    if limit < 0:
        raise ValueError("limit must be >= 0")
    cycles: list[tuple[int, ...]] = []

    for root in g.sorted_vertices():
        allowed = frozenset(v for v in g.vertices if v >= root)
        scc = None
        for c in _sccs(g, allowed):
            if root in c:
                scc = c
                break
        if scc is None or len(scc) < 2:
            continue

        blocked: set[int] = set()
        blist: dict[int, set[int]] = {v: set() for v in scc}
        path: list[int] = []

        def unblock(v: int):
            stack = [v]
            while stack:
                u = stack.pop()
                if u in blocked:
                    blocked.discard(u)
                    stack.extend(blist[u])
                    blist[u].clear()

        def circuit(v: int) -> bool:
            found = False
            path.append(v)
            blocked.add(v)
            for w in g.successors(v):
                if w not in scc:
                    continue
                if w == root:
                    if len(cycles) >= limit:
                        raise LimitExceeded(f"more than {limit} cycles")
                    cycles.append(tuple(path))
                    found = True
                elif w not in blocked:
                    if circuit(w):
                        found = True
            if found:
                unblock(v)
            else:
                for w in g.successors(v):
                    if w in scc:
                        blist[w].add(v)
            path.pop()
            return found

        circuit(root)
    return cycles


def dfs_tree(g: Digraph, s: int) -> DfsTree:
    """Depth-first spanning tree from ``s`` with every arc classified.

    Successors are visited in ascending id order and preorder numbers
    are consecutive, 1 at the root.  Raises NotFlowGraphError when some
    vertex is unreachable from ``s``.
    """
    if s not in g.vertices:
        raise ValueError(f"source {s} is not a vertex")
    po: dict[int, int] = {s: 1}
    parent: dict[int, int] = {}
    counter = 1
    stack: list[tuple[int, Iterator[int]]] = [(s, iter(g.successors(s)))]
    finish_order: list[int] = []
    while stack:
        v, it = stack[-1]
        advanced = False
        for w in it:
            if w not in po:
                counter += 1
                po[w] = counter
                parent[w] = v
                stack.append((w, iter(g.successors(w))))
                advanced = True
                break
        if not advanced:
            finish_order.append(v)
            stack.pop()

    if len(po) != g.n:
        missing = sorted(v for v in g.vertices if v not in po)
        raise NotFlowGraphError(
            f"vertices unreachable from {s}: {missing}")

    size = {v: 1 for v in g.vertices}
    for v in finish_order:
        p = parent.get(v)
        if p is not None:
            size[p] += size[v]

    def ancestor(u: int, v: int) -> bool:
        return po[u] <= po[v] < po[u] + size[u]

    tree = frozenset((p, c) for c, p in parent.items())
    arc_class: dict[tuple[int, int], ArcClass] = {}
    for (u, v) in g.arcs:
        if (u, v) in tree:
            arc_class[(u, v)] = ArcClass.TREE
        elif ancestor(v, u):
            arc_class[(u, v)] = ArcClass.CYCLE
        elif ancestor(u, v):
            arc_class[(u, v)] = ArcClass.FORWARD
        else:
            # cross arcs always point to an earlier preorder number
            assert po[v] < po[u]
            arc_class[(u, v)] = ArcClass.CROSS
    return DfsTree(root=s, parent=parent, po=po, size=size, arc_class=arc_class)


def dominates(g: Digraph, s: int, w: int, v: int) -> bool:
    """True iff removing ``w`` leaves no path from ``s`` to ``v`` (v != s)."""
    if w == v:
        raise ValueError("dominates() expects distinct w and v")
    if v == s:
        return False
    if w == s:
        return True
    seen = {s}
    stack = [s]
    while stack:
        u = stack.pop()
        for x in g.successors(u):
            if x == w or x in seen:
                continue
            if x == v:
                return False
            seen.add(x)
            stack.append(x)
    return True


def read_edge_list(text: str) -> Digraph:
    """Parse the edge-list format.

    First non-comment line ``p dg <n> <m>``, then m lines ``<u> <v>``.
    Lines starting with ``c`` are comments.  Vertex ids are 1..n.
    """
    n = m = None
    arcs: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if n is None:
            if len(parts) != 4 or parts[0] != "p" or parts[1] != "dg":
                raise EdgeListError(f"line {lineno}: expected 'p dg <n> <m>'")
            try:
                n, m = int(parts[2]), int(parts[3])
            except ValueError:
                raise EdgeListError(f"line {lineno}: bad counts") from None
            if n < 0 or m < 0:
                raise EdgeListError(f"line {lineno}: negative counts")
            continue
        if len(parts) != 2:
            raise EdgeListError(f"line {lineno}: expected '<u> <v>'")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise EdgeListError(f"line {lineno}: bad arc") from None
        if not (1 <= u <= n) or not (1 <= v <= n):
            raise EdgeListError(f"line {lineno}: arc ({u}, {v}) out of range 1..{n}")
        if u == v:
            raise EdgeListError(f"line {lineno}: loop at {u}")
        arcs.append((u, v))
    if n is None:
        raise EdgeListError("missing 'p dg <n> <m>' header")
    if len(arcs) != m:
        raise EdgeListError(f"header promised {m} arcs, found {len(arcs)}")
    return Digraph(n, arcs)


def format_edge_list(g: Digraph) -> str:
    """Render a graph in the edge-list format (dense 1..n ids required)."""
    vs = g.sorted_vertices()
    if list(vs) != list(range(1, len(vs) + 1)):
        raise ValueError("edge-list format needs dense ids 1..n")
    lines = [f"p dg {g.n} {len(g.arcs)}"]
    lines.extend(f"{u} {v}" for (u, v) in sorted(g.arcs))
    return "\n".join(lines) + "\n"


_DOT_STYLE = {
    ArcClass.TREE: "",
    ArcClass.FORWARD: ' [color=gray50]',
    ArcClass.CYCLE: ' [style=dashed, penwidth=2]',
    ArcClass.CROSS: ' [style=dotted]',
}


def to_dot(g: Digraph, dfst: DfsTree | None = None, name: str = "G") -> str:
    """DOT text for visualization.

    With a DfsTree, arcs are styled by class: tree plain, forward gray,
    cycle bold dashed, cross dotted.
    """
    lines = [f"digraph {name} {{"]
    for v in g.sorted_vertices():
        label = f' [label="{v}\\npo={dfst.po[v]}"]' if dfst else ""
        lines.append(f"  {v}{label};")
    for (u, v) in sorted(g.arcs):
        style = _DOT_STYLE[dfst.arc_class[(u, v)]] if dfst else ""
        lines.append(f"  {u} -> {v}{style};")
    lines.append("}")
    return "\n".join(lines) + "\n"
