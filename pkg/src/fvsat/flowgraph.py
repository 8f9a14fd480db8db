"""Reducible flow graphs: heads, collapse-based reducibility testing,
the hn/sn numberings, and the block-tree LR-ordering.

A flow graph is a digraph with a source from which every vertex is
reachable.  DFS from the source classifies arcs; targets of cycle arcs
(other than the source) are the heads.  The reducibility test collapses
each head's pocket of the graph in decreasing-preorder order, checking
that every pocket hangs below its head in the (quotient) DFS tree; the
numbering produced along the way drives both the reduction order and
the block-tree construction that yields an LR-order.
"""

from __future__ import annotations

from dataclasses import dataclass

from ._rng import SplitMix64
from .digraph import (ArcClass, DfsTree, Digraph, dfs_tree,
                      topological_order)
from .fvs import LROrder


class NotReducibleError(Exception):
    """The flow graph is not reducible.

    ``failure`` names the (head, vertex) pair whose containment test
    failed.
    """

    def __init__(self, failure: tuple[int, int]):
        self.failure = failure
        super().__init__(
            f"not reducible: vertex {failure[1]} reaches back to head "
            f"{failure[0]} without hanging below it")


@dataclass(frozen=True)
class FlowAnalysis:
    """Everything the reducibility machinery learns about a flow graph.

    ``heads_and_psets`` fills the structural half (dfst, heads, cw, pw);
    ``reducibility`` fills the rest.  ``cw[w]`` holds the sources of
    cycle arcs into w and ``pw[w]`` the vertices with a path to cw[w]
    avoiding w, both in the original graph (a zero-length path counts,
    so cw[w] is a subset of pw[w]).  ``pstar`` maps each head, and
    finally the source, to the set collapsed into it; its elements are
    collapse representatives.  ``hn[v]`` is 1 unless v was collapsed
    into a head w, in which case it is po(w); ``sn`` is the tie-break
    numbering (filled only for reducible graphs).  ``failure`` names
    (head, vertex) for the first failed containment test.
    """

    graph: Digraph
    source: int
    dfst: DfsTree
    heads: tuple[int, ...]
    cw: dict[int, frozenset]
    pw: dict[int, frozenset]
    pstar: dict[int, frozenset] | None = None
    hn: dict[int, int] | None = None
    sn: dict[int, int] | None = None
    reducible: bool | None = None
    failure: tuple[int, int] | None = None


@dataclass(frozen=True)
class BlockGraph:
    """The undirected box graph of a reducible flow graph.

    ``boxes`` partition the vertices; ``edges`` are index pairs (i < j).
    For reducible inputs this graph is a tree.
    """

    boxes: tuple[frozenset, ...]
    edges: tuple[tuple[int, int], ...]

    def box_of(self, v: int) -> int:
        for i, box in enumerate(self.boxes):
            if v in box:
                return i
        raise ValueError(f"vertex {v} is in no box")


def _cycle_arcs(dfst: DfsTree) -> list[tuple[int, int]]:
    return sorted(a for a, c in dfst.arc_class.items() if c is ArcClass.CYCLE)


def _backward_closure(targets, avoid: int,
                      preds: dict[int, set]) -> frozenset:
    seen = set(targets)
    queue = sorted(seen)
    while queue:
        x = queue.pop()
        for u in preds.get(x, ()):
            if u != avoid and u not in seen:
                seen.add(u)
                queue.append(u)
    return frozenset(seen)


def heads_and_psets(g: Digraph, s: int) -> FlowAnalysis:
    """Structural half of the analysis: DFS tree, heads, and their
    cycle-arc sources and reach-back sets in the original graph."""
    dfst = dfs_tree(g, s)
    po = dfst.po
    cyc = _cycle_arcs(dfst)
    cw: dict[int, set] = {}
    for v, w in cyc:
        if w != s:
            cw.setdefault(w, set()).add(v)
    heads = tuple(sorted(cw, key=lambda w: -po[w]))
    preds = {}
    for u, v in g.arcs:
        preds.setdefault(v, set()).add(u)
    pw = {w: _backward_closure(cw[w], w, preds) for w in heads}
    return FlowAnalysis(graph=g, source=s, dfst=dfst, heads=heads,
                        cw={w: frozenset(cw[w]) for w in heads}, pw=pw)


def _sn_map(dfst: DfsTree) -> dict[int, int]:
    """Preorder of the DFS tree visiting children by decreasing po."""
    children: dict[int, list] = {}
    for v, p in dfst.parent.items():
        if p is not None:
            children.setdefault(p, []).append(v)
    for kids in children.values():
        kids.sort(key=lambda v: dfst.po[v])
    sn = {}
    stack = [dfst.root]
    while stack:
        v = stack.pop()
        sn[v] = len(sn) + 1
        stack.extend(children.get(v, ()))
    return sn


def reducibility(g: Digraph, s: int) -> FlowAnalysis:
    """Collapse-based reducibility test.

    Heads are processed by decreasing po.  For each head, the vertices
    that can reach one of its in-coming cycle arcs without passing
    through it are gathered in the current (collapsed) graph; the graph
    is reducible iff every such vertex hangs below the head in the
    quotient DFS tree.  Each gathered set is then collapsed into its
    head and stamped with the head's po as its hn value; what remains at
    the end belongs to the source.
    """
    fa = heads_and_psets(g, s)
    po, parent = fa.dfst.po, fa.dfst.parent
    rep = {v: v for v in g.vertices}

    def find(v: int) -> int:
        root = v
        while rep[root] != root:
            root = rep[root]
        while rep[v] != root:
            rep[v], v = root, rep[v]
        return root

    def hangs_below(w: int, x: int) -> bool:
        limit = po[w]
        while po[x] > limit:
            x = find(parent[x])
        return x == w

    hn = {v: 1 for v in g.vertices}
    pstar: dict[int, frozenset] = {}
    for w in fa.heads:
        arcs = {(find(u), find(v)) for u, v in g.arcs}
        preds: dict[int, set] = {}
        cstar = set()
        for u, v in arcs:
            if u == v:
                continue
            preds.setdefault(v, set()).add(u)
            if v == w and hangs_below(w, u):
                cstar.add(u)
        pocket = _backward_closure(cstar, w, preds)
        pstar[w] = pocket
        for v in sorted(pocket):
            if not hangs_below(w, v):
                return FlowAnalysis(
                    graph=g, source=s, dfst=fa.dfst, heads=fa.heads,
                    cw=fa.cw, pw=fa.pw, pstar=pstar, hn=hn,
                    reducible=False, failure=(w, v))
        for v in pocket:
            hn[v] = po[w]
            rep[v] = w
    pstar[s] = frozenset(v for v in g.vertices if find(v) == v and v != s)
    return FlowAnalysis(graph=g, source=s, dfst=fa.dfst, heads=fa.heads,
                        cw=fa.cw, pw=fa.pw, pstar=pstar, hn=hn,
                        sn=_sn_map(fa.dfst), reducible=True)


def collapse(g: Digraph, targets, w: int) -> Digraph:
    """Merge each target vertex into w, successor side only.

    Every target's successors outside the targets become successors of
    w (loops and duplicates dropped); arcs into the targets from
    elsewhere disappear with them.  This is the merge step the
    reducibility test applies to each gathered set.
    """
    targets = frozenset(targets)
    if w in targets:
        raise ValueError("w cannot be one of the collapsed vertices")
    extra = targets - g.vertices
    if extra or w not in g.vertices:
        raise ValueError("collapse of vertices outside the graph")
    keep = g.vertices - targets
    arcs = set()
    for u, v in g.arcs:
        u2 = w if u in targets else u
        if u2 == w and (v in targets or v == w):
            continue
        if u in targets:
            arcs.add((w, v))
        elif v not in targets:
            arcs.add((u, v))
    return Digraph.on_vertices(keep, arcs)


def sn_numbering(fa: FlowAnalysis) -> dict[int, int]:
    """Tie-break numbering: DFS-tree preorder with children visited by
    decreasing po.  Defined for reducible analyses."""
    if fa.reducible is not True:
        raise ValueError("sn numbering is defined for reducible analyses")
    return fa.sn if fa.sn is not None else _sn_map(fa.dfst)


def reduction_order(fa: FlowAnalysis) -> tuple[int, ...]:
    """All vertices sorted by (hn descending, sn ascending), source last."""
    if fa.reducible is not True or fa.hn is None or fa.sn is None:
        raise ValueError("reduction order needs a reducible analysis")
    rest = sorted((v for v in fa.graph.vertices if v != fa.source),
                  key=lambda v: (-fa.hn[v], fa.sn[v]))
    return tuple(rest) + (fa.source,)


def _build_blocks(fa: FlowAnalysis) -> BlockGraph:
    w_set = set(fa.heads) | {fa.source}
    order = fa.heads + (fa.source,)
    boxes: list[frozenset] = []
    index: dict[frozenset, int] = {}
    for w in order:
        box = frozenset((w,))
        index[box] = len(boxes)
        boxes.append(box)
    rest_of: dict[int, frozenset] = {}
    for w in order:
        rest = fa.pstar[w] - w_set
        if rest:
            rest_of[w] = rest
            index[rest] = len(boxes)
            boxes.append(rest)
    edges = set()
    for w in order:
        wi = index[frozenset((w,))]
        if w in rest_of:
            edges.add(tuple(sorted((wi, index[rest_of[w]]))))
        for w2 in sorted(fa.pstar[w] & w_set):
            edges.add(tuple(sorted((wi, index[frozenset((w2,))]))))
    return BlockGraph(boxes=tuple(boxes), edges=tuple(sorted(edges)))


def block_graph(g: Digraph, s: int) -> BlockGraph:
    """Box graph of a reducible flow graph: one singleton box per head
    and for the source, one box per leftover gathered set; boxes are
    joined to the head (or source) they collapsed into."""
    fa = reducibility(g, s)
    if not fa.reducible:
        raise NotReducibleError(fa.failure)
    return _build_blocks(fa)


def lr_ordering(g: Digraph, s: int) -> LROrder:
    """LR-order of a reducible flow graph via two-coloring the box tree.

    The box tree is two-colored with the source's box on the Left; Right
    is the union of the other color class.  The order is a topological
    order of the Right side followed by a reversed topological order of
    the Left side (both sides are acyclic for reducible inputs).
    """
    fa = reducibility(g, s)
    if not fa.reducible:
        raise NotReducibleError(fa.failure)
    blocks = _build_blocks(fa)
    adj: dict[int, list] = {i: [] for i in range(len(blocks.boxes))}
    for i, j in blocks.edges:
        adj[i].append(j)
        adj[j].append(i)
    s_box = blocks.boxes.index(frozenset((s,)))
    color = {s_box: False}
    queue = [s_box]
    while queue:
        i = queue.pop()
        for j in adj[i]:
            if j not in color:
                color[j] = not color[i]
                queue.append(j)
    if len(color) != len(blocks.boxes):
        raise AssertionError("box graph is not connected")
    right = set()
    left = set()
    for i, box in enumerate(blocks.boxes):
        (right if color[i] else left).update(box)
    first = topological_order(g.induced(right))
    second = topological_order(g.induced(left))
    return LROrder(tuple(first + second[::-1]), frozenset(right))


def gen_reducible(seed: int, n: int, extra_arcs: int = 0) -> Digraph:
    """Seed-deterministic reducible flow graph with source 1.

    Grows a random arborescence by splitting new vertices out of
    existing ones (always reducible), then tries ``extra_arcs`` random
    arcs, keeping each only if the graph stays reducible.
    """
    if n < 1:
        raise ValueError("need at least the source vertex")
    rng = SplitMix64(seed)
    arcs = set()
    for v in range(2, n + 1):
        arcs.add((rng.below(v - 1) + 1, v))
    g = Digraph(n, arcs)
    for _ in range(extra_arcs):
        u = rng.below(n) + 1
        v = rng.below(n) + 1
        if u == v or (u, v) in arcs:
            continue
        candidate = Digraph(n, arcs | {(u, v)})
        if reducibility(candidate, 1).reducible:
            arcs.add((u, v))
            g = candidate
    return g
