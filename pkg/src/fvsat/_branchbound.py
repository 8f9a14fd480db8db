"""Branch-and-bound engines behind the exact brute-force oracles.

Both engines run a depth-first search over partial decisions, pruned by
an admissible lower bound: the instance is carved into variable-disjoint
local clusters (clauses sharing variables, or overlapping triangles) and
each cluster's exact local optimum, given the current partial decisions,
is computed by tiny enumeration and memoized.  Bounds from disjoint
clusters add up, so pruning never cuts an optimal branch and results
stay exact.

Determinism: branching orders are fixed up front and the cheap decision
(false / keep) and expensive decision (true / delete) are always tried
in the same sequence, so repeated runs explore identical trees.
"""

from __future__ import annotations

from itertools import combinations

from .digraph import Digraph, _sccs
from .sat import Formula, Mode

INF = 10 ** 9

_CLUSTER_CAP = 6


def _build_clusters(groups: list[list[int]], cap: int):
    """Greedy variable-disjoint clustering of index groups.

    Groups are processed by ascending id span so tight local structures
    merge before long-range ones can steal their members; a group whose
    merge would exceed ``cap`` is left over.  Returns (clusters,
    leftovers) where each cluster is (sorted member tuple, group index
    list) and leftovers are group indices outside every cluster.
    """
    order = sorted(range(len(groups)),
                   key=lambda i: (max(groups[i]) - min(groups[i]), i))
    owner: dict[int, int] = {}
    var_sets: list[set[int] | None] = []
    members: list[list[int] | None] = []
    leftovers = []
    for gi in order:
        vs = set(groups[gi])
        touched = sorted({owner[v] for v in vs if v in owner})
        merged = set(vs)
        for u in touched:
            merged |= var_sets[u]
        if len(merged) > cap:
            leftovers.append(gi)
            continue
        mem = [gi]
        for u in touched:
            mem.extend(members[u])
            var_sets[u] = None
            members[u] = None
        new = len(var_sets)
        var_sets.append(merged)
        members.append(mem)
        for v in merged:
            owner[v] = new
    clusters = [(tuple(sorted(vs)), sorted(mem))
                for vs, mem in zip(var_sets, members) if vs is not None]
    return clusters, sorted(leftovers)


class _SatCluster:
    """A block of clauses whose variables are private to the block."""

    __slots__ = ("vars", "clauses", "nae", "memo")

    def __init__(self, vars_, clauses, nae):
        self.vars = vars_                 # sorted variable ids
        self.clauses = clauses            # ((local index, positive), ...) triples
        self.nae = nae
        self.memo: dict[tuple, int] = {}

    def local_min(self, state: tuple) -> int:
        """Fewest extra true variables completing ``state`` so that no
        block clause is violated; INF when no completion works."""
        hit = self.memo.get(state)
        if hit is not None:
            return hit
        free = [i for i, s in enumerate(state) if s is None]
        best = INF
        for bits in range(1 << len(free)):
            ones = bits.bit_count()
            if ones >= best:
                continue
            vals = list(state)
            for j, i in enumerate(free):
                vals[i] = bool(bits >> j & 1)
            for cl in self.clauses:
                lits = [vals[i] == pos for i, pos in cl]
                if not any(lits) or (self.nae and all(lits)):
                    break
            else:
                best = ones
        self.memo[state] = best
        return best


class MinOnesSearch:
    """Reusable exact minimum-ones search over one formula and mode.

    ``run`` may be called many times with different forced values (the
    lexicographic witness pass does exactly that); cluster memo tables
    persist across calls.
    """

    def __init__(self, formula: Formula, mode: Mode | str):
        self.n = formula.var_count
        self.nae = Mode(mode) is Mode.NAE
        self.cl = [tuple((l.var, l.positive) for l in c.literals)
                   for c in formula.clauses]
        groups = [sorted({v for v, _ in c}) for c in self.cl]
        raw, leftover = _build_clusters(groups, _CLUSTER_CAP)
        self.clusters: list[_SatCluster] = []
        self.cluster_of: dict[int, int] = {}
        for vs, mem in raw:
            at = {v: i for i, v in enumerate(vs)}
            local = [tuple((at[v], pos) for v, pos in self.cl[ci])
                     for ci in mem]
            for v in vs:
                self.cluster_of[v] = len(self.clusters)
            self.clusters.append(_SatCluster(vs, local, self.nae))
        # Branch high-degree variables first: shared variables resolve
        # cross-cluster clauses early, private padding churns last.
        deg = [0] * (self.n + 1)
        for c in self.cl:
            for v, _ in c:
                deg[v] += 1
        self.order = sorted(range(1, self.n + 1), key=lambda v: (-deg[v], v))
        pos = {v: i for i, v in enumerate(self.order)}
        self.schedule: list[list[int]] = [[] for _ in range(self.n + 1)]
        for ci in leftover:
            last = max((v for v, _ in self.cl[ci]), key=pos.__getitem__)
            self.schedule[last].append(ci)

    def run(self, fixed: dict[int, bool] | None = None,
            cap: int | None = None, stop_at_first: bool = False):
        """Best (ones, ones-set) with ones < cap, or None.

        ``fixed`` pins variables; ``stop_at_first`` returns the first
        admissible full assignment instead of the proven best one.
        """
        fixed = fixed or {}
        limit = INF if cap is None else cap
        values: list[bool | None] = [None] * (self.n + 1)
        clb = [c.local_min((None,) * len(c.vars)) for c in self.clusters]
        state = {"total": sum(clb), "ones": 0, "limit": limit, "best": None}
        if state["total"] >= state["limit"]:
            return None
        order, schedule, clusters = self.order, self.schedule, self.clusters

        def clause_ok(ci: int) -> bool:
            any_t = any_f = False
            for v, p in self.cl[ci]:
                if values[v] == p:
                    any_t = True
                else:
                    any_f = True
            return (any_t and any_f) if self.nae else any_t

        def dfs(depth: int) -> bool:
            if depth == self.n:
                ones = state["ones"]
                state["best"] = (ones, frozenset(
                    v for v in range(1, self.n + 1) if values[v]))
                state["limit"] = ones
                return stop_at_first
            v = order[depth]
            pinned = fixed.get(v)
            for val in ((False, True) if pinned is None else (pinned,)):
                values[v] = val
                gain = 1 if val else 0
                ui = self.cluster_of.get(v)
                if ui is None:
                    dlb = 0
                else:
                    c = clusters[ui]
                    dlb = c.local_min(tuple(values[w] for w in c.vars)) - clb[ui]
                if (state["ones"] + gain + state["total"] + dlb
                        < state["limit"]
                        and all(clause_ok(ci) for ci in schedule[v])):
                    state["ones"] += gain
                    state["total"] += dlb
                    if ui is not None:
                        clb[ui] += dlb
                    stop = dfs(depth + 1)
                    state["ones"] -= gain
                    state["total"] -= dlb
                    if ui is not None:
                        clb[ui] -= dlb
                    if stop:
                        values[v] = None
                        return True
                values[v] = None
            return False

        dfs(0)
        return state["best"]


def _peel(mask: int, succ: list[int]) -> int:
    """Strip vertices with no successor inside ``mask`` until stable.

    The residue is 0 exactly when the masked subgraph is acyclic.
    """
    changed = True
    while changed and mask:
        changed = False
        mm = mask
        while mm:
            bit = mm & -mm
            mm ^= bit
            if succ[bit.bit_length() - 1] & mask == 0:
                mask ^= bit
                changed = True
    return mask


class _FvsCluster:
    """A small vertex block: overlapping triangles with private vertices."""

    __slots__ = ("vars", "succ", "need", "memo")

    def __init__(self, vars_, succ, need):
        self.vars = vars_                 # sorted vertex ids
        self.succ = succ                  # block-local successor masks
        self.need = need                  # also keep the deleted side acyclic
        self.memo: dict[tuple, int] = {}

    def local_min(self, state: tuple) -> int:
        """Fewest extra deletions completing ``state`` (None undecided,
        False kept, True deleted) so both block-internal sides stay
        acyclic; INF when impossible."""
        hit = self.memo.get(state)
        if hit is not None:
            return hit
        free = [i for i, s in enumerate(state) if s is None]
        kept = 0
        dele = 0
        for i, s in enumerate(state):
            if s is False:
                kept |= 1 << i
            elif s is True:
                dele |= 1 << i
        best = INF
        for bits in range(1 << len(free)):
            extra = bits.bit_count()
            if extra >= best:
                continue
            add = 0
            for j, i in enumerate(free):
                if bits >> j & 1:
                    add |= 1 << i
            free_kept = kept
            for j, i in enumerate(free):
                if not (bits >> j & 1):
                    free_kept |= 1 << i
            if _peel(free_kept, self.succ):
                continue
            if self.need and _peel(dele | add, self.succ):
                continue
            best = extra
        self.memo[state] = best
        return best


class FvsSearch:
    """Reusable exact search for minimum (acyclic) feedback vertex sets.

    Only vertices inside non-trivial strongly connected components can
    belong to a minimum witness, so decisions range over those; the rest
    of the graph is carried along untouched.
    """

    def __init__(self, g: Digraph, need_acyclic_deleted: bool):
        self.nv = g.n
        self.need = need_acyclic_deleted
        comps = _sccs(g, set(g.vertices))
        comp_of: dict[int, int] = {}
        for ci, comp in enumerate(comps):
            for v in comp:
                comp_of[v] = ci
        big = {ci for ci, comp in enumerate(comps) if len(comp) > 1}
        self.cand = sorted(v for v in g.vertices if comp_of[v] in big)
        self.m = len(self.cand)
        at = {v: i for i, v in enumerate(self.cand)}
        self.succ = [0] * self.m
        for v in self.cand:
            for w in g.successors(v):
                if comp_of[w] == comp_of[v]:
                    self.succ[at[v]] |= 1 << at[w]
        self.full = (1 << self.m) - 1
        triangles = []
        for a, b, c in combinations(range(self.m), 3):
            forward = (self.succ[a] >> b & 1 and self.succ[b] >> c & 1
                       and self.succ[c] >> a & 1)
            backward = (self.succ[a] >> c & 1 and self.succ[c] >> b & 1
                        and self.succ[b] >> a & 1)
            if forward or backward:
                triangles.append([a, b, c])
        raw, _ = _build_clusters(triangles, _CLUSTER_CAP)
        self.clusters: list[_FvsCluster] = []
        self.cluster_of: dict[int, int] = {}
        for vs, _mem in raw:
            lat = {i: j for j, i in enumerate(vs)}
            lsucc = [0] * len(vs)
            for i in vs:
                for j in vs:
                    if self.succ[i] >> j & 1:
                        lsucc[lat[i]] |= 1 << lat[j]
            for i in vs:
                self.cluster_of[i] = len(self.clusters)
            self.clusters.append(_FvsCluster(vs, lsucc, self.need))

    def run(self, fixed: dict[int, bool] | None = None,
            cap: int | None = None, stop_at_first: bool = False):
        """Best (size, vertex set) with size < cap, or None.

        ``fixed`` pins candidate vertices (True = deleted, False = kept).
        """
        fixed = fixed or {}
        at = {v: i for i, v in enumerate(self.cand)}
        dec: list[bool | None] = [None] * self.m
        dele = kept = 0
        for v in sorted(fixed):
            i = at[v]
            dec[i] = fixed[v]
            if fixed[v]:
                dele |= 1 << i
            else:
                kept |= 1 << i
        if self.need and _peel(dele, self.succ):
            return None
        clb = []
        for c in self.clusters:
            clb.append(c.local_min(tuple(dec[i] for i in c.vars)))
        state = {
            "total": sum(clb),
            "ones": dele.bit_count(),
            "limit": INF if cap is None else cap,
            "best": None,
            "dele": dele,
            "kept": kept,
            "und": self.full & ~(dele | kept),
        }
        if state["ones"] + state["total"] >= state["limit"]:
            return None
        succ, clusters = self.succ, self.clusters

        def shift(i: int, to: bool) -> int:
            """Move vertex i from undecided to a side; returns lb delta."""
            dec[i] = to
            ui = self.cluster_of.get(i)
            if ui is None:
                return 0
            c = clusters[ui]
            return c.local_min(tuple(dec[j] for j in c.vars)) - clb[ui]

        def dfs() -> bool:
            resid = _peel(state["kept"] | state["und"], succ)
            if resid == 0:
                size = state["ones"]
                if state["dele"].bit_count() == self.nv:
                    return False
                wit = frozenset(self.cand[i] for i in range(self.m)
                                if state["dele"] >> i & 1)
                state["best"] = (size, wit)
                state["limit"] = size
                return stop_at_first
            start = (resid & -resid).bit_length() - 1
            seen: dict[int, int] = {}
            path: list[int] = []
            x = start
            while x not in seen:
                seen[x] = len(path)
                path.append(x)
                nxt = succ[x] & resid
                x = (nxt & -nxt).bit_length() - 1
            cycle = path[seen[x]:]
            und = [i for i in cycle if state["und"] >> i & 1]
            if not und:
                return False
            i = min(und)
            bit = 1 << i
            # delete i
            if not (self.need and _peel(state["dele"] | bit, succ)):
                dlb = shift(i, True)
                if state["ones"] + 1 + state["total"] + dlb < state["limit"]:
                    state["ones"] += 1
                    state["total"] += dlb
                    ui = self.cluster_of.get(i)
                    if ui is not None:
                        clb[ui] += dlb
                    state["dele"] |= bit
                    state["und"] ^= bit
                    stop = dfs()
                    state["dele"] ^= bit
                    state["und"] |= bit
                    state["ones"] -= 1
                    state["total"] -= dlb
                    if ui is not None:
                        clb[ui] -= dlb
                    if stop:
                        dec[i] = None
                        return True
                dec[i] = None
            # keep i
            dlb = shift(i, False)
            if state["ones"] + state["total"] + dlb < state["limit"]:
                state["total"] += dlb
                ui = self.cluster_of.get(i)
                if ui is not None:
                    clb[ui] += dlb
                state["kept"] |= bit
                state["und"] ^= bit
                stop = dfs()
                state["kept"] ^= bit
                state["und"] |= bit
                state["total"] -= dlb
                if ui is not None:
                    clb[ui] -= dlb
                if stop:
                    dec[i] = None
                    return True
            dec[i] = None
            return False

        dfs()
        return state["best"]


def lex_min_witness(search, k: int, universe) -> frozenset:
    """Lexicographically smallest size-k witness of an exhausted search.

    Greedy membership: walk the universe in ascending order, keep a
    member whenever some size-k witness still contains everything kept
    so far plus it, excluding everything rejected so far.  Exact because
    all witnesses have the same size k.
    """
    chosen: dict[int, bool] = {}
    count = 0
    for v in universe:
        if count == k:
            break
        chosen[v] = True
        if search.run(fixed=chosen, cap=k + 1, stop_at_first=True) is not None:
            count += 1
        else:
            chosen[v] = False
    return frozenset(v for v, picked in chosen.items() if picked)
