"""Independent oracles the test suite checks the package against.

Everything here recomputes answers from first principles, deliberately
avoiding the package's own algorithms: plain bitmask sweeps, Kahn-style
peeling written from scratch, permutation search, and a breadth-first
dominance test.  Slow is fine; these run on small inputs only.
"""

from __future__ import annotations

from itertools import combinations, permutations


def clause_bits(formula):
    """Per clause: (positive-literal mask, negative-literal mask)."""
    out = []
    for cl in formula.clauses:
        pos = neg = 0
        for lit in cl.literals:
            if lit.positive:
                pos |= 1 << (lit.var - 1)
            else:
                neg |= 1 << (lit.var - 1)
        out.append((pos, neg))
    return out


def satisfies(formula, mask: int, nae: bool) -> bool:
    """Does the assignment encoded by ``mask`` satisfy the formula?"""
    n = formula.var_count
    inv = ((1 << n) - 1) & ~mask
    for pos, neg in clause_bits(formula):
        if not (pos & mask) | (neg & inv):
            return False
        if nae and pos & inv == 0 and neg & mask == 0:
            return False
    return True


def min_ones_exhaustive(formula, nae: bool):
    """(min true count, lexicographically smallest ones set), or
    (var_count + 1, None) when nothing satisfies.  Pure 2^n sweep."""
    n = formula.var_count
    best = None
    for mask in range(1 << n):
        if not satisfies(formula, mask, nae):
            continue
        ones = tuple(i + 1 for i in range(n) if mask >> i & 1)
        key = (len(ones), ones)
        if best is None or key < best:
            best = key
    if best is None:
        return n + 1, None
    return best[0], frozenset(best[1])


def subset_acyclic(g, subset) -> bool:
    """Is the subgraph induced by ``subset`` acyclic?  Iterative
    three-color DFS, independent of the package's peeling."""
    subset = set(subset)
    color = {v: 0 for v in subset}        # 0 white, 1 gray, 2 black
    for start in subset:
        if color[start]:
            continue
        stack = [(start, iter(g.successors(start)))]
        color[start] = 1
        while stack:
            v, it = stack[-1]
            for w in it:
                if w not in subset:
                    continue
                if color[w] == 1:
                    return False
                if color[w] == 0:
                    color[w] = 1
                    stack.append((w, iter(g.successors(w))))
                    break
            else:
                color[v] = 2
                stack.pop()
    return True


def fvs_exhaustive(g, need_acyclic: bool):
    """(size, lexicographically smallest witness) over proper subsets,
    or None when no proper subset qualifies."""
    vs = sorted(g.vertices)
    for k in range(len(vs)):
        for combo in combinations(vs, k):
            s = set(combo)
            if not subset_acyclic(g, set(vs) - s):
                continue
            if need_acyclic and not subset_acyclic(g, s):
                continue
            return k, frozenset(combo)
    return None


def lr_holds(g, order, right) -> bool:
    """Plain arc-by-arc check of the Left/Right ordering property."""
    pos = {v: i for i, v in enumerate(order)}
    for u, v in g.arcs:
        if (pos[v] > pos[u]) != (u in right):
            return False
    return True


def c1p_bruteforce(col_count: int, rows):
    """A column order making every row contiguous, by trying all
    permutations; None when none works."""
    rows = [frozenset(r) for r in rows]
    for perm in permutations(range(col_count)):
        pos = {c: i for i, c in enumerate(perm)}
        for ones in rows:
            spots = sorted(pos[c] for c in ones)
            if spots and spots[-1] - spots[0] != len(spots) - 1:
                break
        else:
            return perm
    return None


def cycle_arcs_descending_dfs(g, s):
    """Cycle arcs of a DFS that explores successors in descending id
    order (the package traverses ascending; reducible graphs must give
    the same cycle-arc set either way)."""
    on_stack = set()
    visited = set()
    cyc = set()
    stack = [(s, iter(sorted(g.successors(s), reverse=True)))]
    visited.add(s)
    on_stack.add(s)
    while stack:
        v, it = stack[-1]
        for w in it:
            if w in on_stack:
                cyc.add((v, w))
            elif w not in visited:
                visited.add(w)
                on_stack.add(w)
                stack.append((w, iter(sorted(g.successors(w), reverse=True))))
                break
        else:
            on_stack.discard(v)
            stack.pop()
    return cyc


def dominates_bfs(g, s, w, v) -> bool:
    """Every path from s to v passes through w; breadth-first search
    that simply never enters w."""
    if v == s:
        return False
    if w == s:
        return True
    frontier = [s]
    seen = {s}
    while frontier:
        nxt = []
        for u in frontier:
            for x in g.successors(u):
                if x == w or x in seen:
                    continue
                if x == v:
                    return False
                seen.add(x)
                nxt.append(x)
        frontier = nxt
    return True


def reducible_by_dominance(g, s) -> bool:
    """Reducibility via the classic characterization: every cycle arc's target
    must dominate its source.  Uses its own DFS and its own dominance
    test, so nothing is shared with the package's collapse machinery."""
    for v, w in cycle_arcs_descending_dfs(g, s):
        if w != s and not dominates_bfs(g, s, w, v):
            return False
    return True


def contiguous(spots) -> bool:
    spots = sorted(spots)
    return not spots or spots[-1] - spots[0] == len(spots) - 1
