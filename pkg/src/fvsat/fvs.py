"""Feedback vertex sets, LR-orders, and the exact optimization oracles.

An LR-order is a vertex order plus a Left/Right tag per vertex such that
every Right vertex has all its successors strictly after it and every
Left vertex has them strictly before.  Right sets of LR-orders, acyclic
feedback vertex sets, and ones-sets of not-all-equal witnesses of the
associated monotone formulas are three faces of the same structure, and
this module holds the conversions between them plus small exact solvers
(full enumeration or exact branch-and-bound) for the four optimization
measures the package relies on.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from typing import Iterable

from ._branchbound import FvsSearch, MinOnesSearch, _peel, lex_min_witness
from .digraph import CyclicError, Digraph, is_acyclic, topological_order
from .sat import Assignment, Formula, Mode, evaluate, representative_graph


class ProperSubsetError(ValueError):
    """The vertex set must be a proper subset of the vertices."""


class NotAcyclicFvsError(ValueError):
    """The given set is not an acyclic feedback vertex set."""


class GammaCyclicError(Exception):
    """The placement digraph came out cyclic.

    This cannot happen when the formula is monotone, in strongly
    3-covered form, and the assignment NAE-satisfies it; seeing this
    error means a precondition was violated.
    """


class SizeGuardError(Exception):
    """The instance exceeds the configured search-size guard."""


class Side(str, Enum):
    LEFT = "left"
    RIGHT = "right"


@dataclass(frozen=True)
class LROrder:
    """A vertex order with a Left/Right tag per vertex."""

    order: tuple[int, ...]
    right: frozenset[int]

    def __post_init__(self):
        if len(set(self.order)) != len(self.order):
            raise ValueError("order repeats a vertex")
        if not self.right <= set(self.order):
            raise ValueError("right set contains vertices outside the order")

    @property
    def left(self) -> frozenset:
        return frozenset(self.order) - self.right

    def side_of(self, v: int) -> Side:
        if v not in set(self.order):
            raise ValueError(f"vertex {v} is not in the order")
        return Side.RIGHT if v in self.right else Side.LEFT

    @property
    def side(self) -> dict[int, Side]:
        return {v: Side.RIGHT if v in self.right else Side.LEFT
                for v in self.order}

    @property
    def is_standard(self) -> bool:
        """True iff every Right vertex precedes every Left vertex."""
        seen_left = False
        for v in self.order:
            if v in self.right:
                if seen_left:
                    return False
            else:
                seen_left = True
        return True


@dataclass(frozen=True)
class OptResult:
    """An exact optimum: value, a witness when one exists, and whether
    the search proved minimality (False only for first-hit runs)."""

    value: int
    witness: frozenset | None
    exhausted: bool


@dataclass(frozen=True)
class NoAcyclicFvs:
    """Marker result: no proper vertex subset is an acyclic FVS."""


def _check_subset(g: Digraph, s: frozenset) -> None:
    extra = s - g.vertices
    if extra:
        raise ValueError(f"not vertices of the graph: {sorted(extra)}")
    if s == g.vertices:
        raise ProperSubsetError("the vertex set must be a proper subset")


def is_fvs(g: Digraph, s: Iterable[int]) -> bool:
    """True iff removing ``s`` leaves the graph acyclic."""
    s = frozenset(s)
    _check_subset(g, s)
    return is_acyclic(g.induced(g.vertices - s))


def is_acyclic_fvs(g: Digraph, s: Iterable[int]) -> bool:
    """True iff ``s`` is an FVS and the subgraph induced by ``s`` is
    itself acyclic."""
    s = frozenset(s)
    _check_subset(g, s)
    return (is_acyclic(g.induced(g.vertices - s))
            and is_acyclic(g.induced(s)))


def verify_lr_order(g: Digraph, o: LROrder) -> bool:
    """Check the LR property of ``o`` against every arc of ``g``."""
    if tuple(sorted(o.order)) != g.sorted_vertices():
        raise ValueError("order is not a permutation of the vertex set")
    pos = {v: i for i, v in enumerate(o.order)}
    for v in o.order:
        after = v in o.right
        for w in g.successors(v):
            if (pos[w] > pos[v]) != after:
                return False
    return True


def lr_order_from_acyclic_fvs(g: Digraph, s: Iterable[int]) -> LROrder:
    """Standard LR-order whose Right set is exactly the acyclic FVS ``s``.

    The order is a topological order of the subgraph induced by ``s``
    followed by a reversed topological order of the rest.  ``s`` may be
    empty, in which case every vertex is Left.
    """
    s = frozenset(s)
    _check_subset(g, s)
    if not is_acyclic_fvs(g, s):
        raise NotAcyclicFvsError(f"{sorted(s)} is not an acyclic FVS")
    inside = topological_order(g.induced(s))
    outside = topological_order(g.induced(g.vertices - s))
    return LROrder(tuple(inside + outside[::-1]), s)


def lr_order_from_nae(f: Formula, a: Assignment) -> LROrder:
    """LR-order of the representative graph read off an NAE witness.

    Each representative arc is turned into a placement constraint: a
    true tail goes before its head, a false tail after.  For monotone
    formulas in strongly 3-covered form the constraints are acyclic and
    any topological order of them is an LR-order whose Right set is the
    witness's true variables.  The 3-covered precondition is not checked
    here (it costs a cycle enumeration); a violation surfaces as
    GammaCyclicError.
    """
    rep = representative_graph(f)
    ok, failing = evaluate(f, a, Mode.NAE)
    if not ok:
        raise ValueError(
            f"assignment does not NAE-satisfy clauses {failing}")
    placement = set()
    for x, y in rep.arcs:
        placement.add((x, y) if a.value(x) else (y, x))
    gamma = Digraph.on_vertices(rep.vertices, placement)
    try:
        order = topological_order(gamma)
    except CyclicError as exc:
        raise GammaCyclicError(
            "placement constraints are cyclic; the formula is not in "
            "strongly 3-covered form") from exc
    return LROrder(tuple(order), frozenset(a.ones()))


def _bit_layout(g: Digraph):
    vs = g.sorted_vertices()
    at = {v: i for i, v in enumerate(vs)}
    succ = [0] * len(vs)
    for v, w in g.arcs:
        succ[at[v]] |= 1 << at[w]
    return vs, succ


def _enumerate_fvs(g: Digraph, need_acyclic: bool):
    """First (smallest, then lexicographic) qualifying subset, or None."""
    vs, succ = _bit_layout(g)
    n = len(vs)
    full = (1 << n) - 1
    for k in range(n):
        for combo in combinations(range(n), k):
            smask = 0
            for i in combo:
                smask |= 1 << i
            if _peel(full & ~smask, succ):
                continue
            if need_acyclic and _peel(smask, succ):
                continue
            return k, frozenset(vs[i] for i in combo)
    return None


_ENUM_VERTICES = 16
_ENUM_VARS = 18


def brute_mfvs(g: Digraph, *, guard: int = 64,
               method: str = "auto") -> OptResult:
    """Exact minimum feedback vertex set.

    ``method`` picks full subset enumeration or branch-and-bound
    ("auto" switches on vertex count); both are exact and return the
    lexicographically smallest minimum witness.  ``guard`` refuses
    graphs with more vertices than the search is prepared to handle.
    """
    return _brute_fvs(g, False, guard, method)


def brute_amfvs(g: Digraph, *, guard: int = 64,
                method: str = "auto") -> OptResult | NoAcyclicFvs:
    """Exact minimum acyclic feedback vertex set, or NoAcyclicFvs."""
    return _brute_fvs(g, True, guard, method)


def _brute_fvs(g: Digraph, need_acyclic: bool, guard: int, method: str):
    if g.n == 0:
        raise ValueError("the graph has no vertices")
    if g.n > guard:
        raise SizeGuardError(f"{g.n} vertices exceeds the guard ({guard})")
    if method == "auto":
        method = "enumerate" if g.n <= _ENUM_VERTICES else "branch"
    if method == "enumerate":
        hit = _enumerate_fvs(g, need_acyclic)
        if hit is None:
            if not need_acyclic:
                raise AssertionError("an FVS always exists on nonempty graphs")
            return NoAcyclicFvs()
        return OptResult(hit[0], hit[1], True)
    if method != "branch":
        raise ValueError(f"unknown method {method!r}")
    search = FvsSearch(g, need_acyclic)
    res = search.run()
    if res is None:
        if not need_acyclic:
            raise AssertionError("an FVS always exists on nonempty graphs")
        return NoAcyclicFvs()
    k = res[0]
    witness = lex_min_witness(search, k, search.cand)
    if need_acyclic:
        assert is_acyclic_fvs(g, witness)
    else:
        assert is_fvs(g, witness)
    return OptResult(k, witness, True)


def _enumerate_min_ones(f: Formula, nae: bool):
    n = f.var_count
    pos = []
    neg = []
    for cl in f.clauses:
        p = q = 0
        for lit in cl.literals:
            if lit.positive:
                p |= 1 << (lit.var - 1)
            else:
                q |= 1 << (lit.var - 1)
        pos.append(p)
        neg.append(q)
    full = (1 << n) - 1
    cn = len(pos)
    for k in range(n + 1):
        for combo in combinations(range(n), k):
            a = 0
            for i in combo:
                a |= 1 << i
            na = full & ~a
            for ci in range(cn):
                if pos[ci] & a == 0 and neg[ci] & na == 0:
                    break
                if nae and pos[ci] & na == 0 and neg[ci] & a == 0:
                    break
            else:
                return k, frozenset(i + 1 for i in combo)
    return None


def brute_min_ones(f: Formula, mode: Mode | str, *, guard: int = 64,
                   method: str = "auto",
                   prove_minimum: bool = True) -> OptResult:
    """Exact minimum number of true variables over satisfying
    assignments in the given mode.

    Unsatisfiable formulas get the sentinel value var_count + 1 with no
    witness.  With ``prove_minimum`` False the branch-and-bound route
    stops at its first satisfying assignment: the value is then only an
    upper bound (exhausted=False), which is enough to decide
    satisfiability.  Witnesses are ones-sets, lexicographically smallest
    among the optima when minimality is proven.
    """
    mode = Mode(mode)
    n = f.var_count
    if n > guard:
        raise SizeGuardError(f"{n} variables exceeds the guard ({guard})")
    if method == "auto":
        method = "enumerate" if n <= _ENUM_VARS else "branch"
    if method == "enumerate":
        hit = _enumerate_min_ones(f, mode is Mode.NAE)
        if hit is None:
            return OptResult(n + 1, None, True)
        return OptResult(hit[0], hit[1], True)
    if method != "branch":
        raise ValueError(f"unknown method {method!r}")
    search = MinOnesSearch(f, mode)
    if not prove_minimum:
        first = search.run(stop_at_first=True)
        if first is None:
            return OptResult(n + 1, None, True)
        return OptResult(first[0], first[1], False)
    res = search.run()
    if res is None:
        return OptResult(n + 1, None, True)
    k = res[0]
    witness = lex_min_witness(search, k, range(1, n + 1))
    ok, _ = evaluate(f, Assignment.from_ones(n, witness), mode)
    assert ok and len(witness) == k
    return OptResult(k, witness, True)
