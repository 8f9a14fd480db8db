"""Reduction from 3-SAT to monotone not-all-equal 3-SAT.

Every original variable and every original clause gets a block of five
fresh variables: ``alpha`` and ``beta`` stand for the positive and
negative form of a hidden truth value, and ``a``/``b``/``c`` are padding
that makes the block's consistency clauses force alpha != beta in NAE
mode.  One extra shared variable (``z``, the pivot) closes the
construction.  Each input clause, with literals sorted by variable id,
turns into two monotone clauses chained through its block's selector;
four consistency clauses per block complete the output.

With n input variables and m input clauses the output has
N = 5*(n+m) + 1 variables and 2*m + 4*(n+m) clauses, and the quantity
D = 2*(N-1)/5 is the benchmark the satisfiability optima are measured
against.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple

from .sat import Assignment, Clause3, Formula, Literal


class LiftFailed(Exception):
    """The given assignment cannot be lifted; it standard-violates a clause."""


class DegenerateError(Exception):
    """Reserved for clause shapes normalization cannot repair.

    The current rules repair every shape (tautologies are dropped,
    duplicated literals are padded away), so this is never raised; it is
    kept so callers can guard against future rule changes.
    """


class ClauseRole(str, Enum):
    """What an output clause does."""

    MAIN_FIRST = "main_first"     # two low literals plus the block selector
    MAIN_SECOND = "main_second"   # selector complement, high literal, pivot
    CONS_A = "cons_a"             # alpha, beta, a
    CONS_B = "cons_b"             # alpha, beta, b
    CONS_C = "cons_c"             # alpha, beta, c
    CONS_ABC = "cons_abc"         # a, b, c


class VariableGroup(NamedTuple):
    """Output variable ids of one five-variable block.

    Field names follow the mapping-file tokens: alpha/beta are the
    complementary pair, a/b/c the padding triple.
    """

    alpha: int
    beta: int
    a: int
    b: int
    c: int


@dataclass(frozen=True)
class VarMap:
    """How output variables and clauses relate to the input formula.

    ``var_groups[u-1]`` is the block of input variable u,
    ``clause_groups[r-1]`` the block of input clause r (1-based), ``z``
    the pivot variable id, and ``clause_pairs[r-1]`` the 0-based output
    indices of clause r's two main clauses.  ``sorted_clauses`` records
    the literal order actually reduced (input clauses sorted by variable
    id); it is None on maps parsed back from a mapping file.
    """

    var_groups: tuple[VariableGroup, ...]
    clause_groups: tuple[VariableGroup, ...]
    z: int
    clause_pairs: tuple[tuple[int, int], ...]
    sorted_clauses: tuple[Clause3, ...] | None = None

    @property
    def var_count(self) -> int:
        return len(self.var_groups)

    @property
    def clause_count(self) -> int:
        return len(self.clause_groups)

    @property
    def output_var_count(self) -> int:
        return self.z

    def groups(self) -> tuple[VariableGroup, ...]:
        return self.var_groups + self.clause_groups

    def clause_roles(self) -> tuple[tuple[ClauseRole, int], ...]:
        """Role of every output clause, as (role, block index) pairs.

        Main clauses carry their 1-based input clause number; consistency
        clauses carry the 1-based block number in group order (variable
        blocks first, then clause blocks).
        """
        roles: list[tuple[ClauseRole, int]] = []
        for r in range(1, self.clause_count + 1):
            roles.append((ClauseRole.MAIN_FIRST, r))
            roles.append((ClauseRole.MAIN_SECOND, r))
        fours = (ClauseRole.CONS_A, ClauseRole.CONS_B,
                 ClauseRole.CONS_C, ClauseRole.CONS_ABC)
        for g in range(1, self.var_count + self.clause_count + 1):
            roles.extend((role, g) for role in fours)
        return tuple(roles)


@dataclass(frozen=True)
class TwoChoiceInstance:
    """A monotone NAE formula whose optima land on d or d+1 (or nowhere)."""

    formula: Formula
    d: int
    map: VarMap


def normalize_clauses(c: Formula) -> Formula:
    """Rewrite clauses so every clause uses three distinct variables.

    Tautological clauses (a variable in both polarities) are dropped.
    A duplicated literal is padded with a fresh variable u, replacing
    (l | l | l') by (l | l' | u) and (l | l' | -u); the degenerate
    (l | l | l) takes two rounds of the same rule.  Fresh variables are
    appended after the original ids.  Standard satisfiability is
    preserved, and any satisfying assignment of the output restricts to
    one of the input.
    """
    fresh = c.var_count
    out: list[Clause3] = []
    for cl in c.clauses:
        pos = {l.var for l in cl.literals if l.positive}
        neg = {l.var for l in cl.literals if not l.positive}
        if pos & neg:
            continue
        uniq: list[Literal] = []
        for lit in cl.literals:
            if lit not in uniq:
                uniq.append(lit)
        if len(uniq) == 3:
            out.append(cl)
        elif len(uniq) == 2:
            fresh += 1
            u = fresh
            out.append(Clause3((uniq[0], uniq[1], Literal(u, True))))
            out.append(Clause3((uniq[0], uniq[1], Literal(u, False))))
        else:
            lit = uniq[0]
            fresh += 3
            u1, u2, u3 = fresh - 2, fresh - 1, fresh
            out.append(Clause3((lit, Literal(u1, True), Literal(u2, True))))
            out.append(Clause3((lit, Literal(u1, True), Literal(u2, False))))
            out.append(Clause3((lit, Literal(u1, False), Literal(u3, True))))
            out.append(Clause3((lit, Literal(u1, False), Literal(u3, False))))
    names = None
    if c.var_names is not None:
        names = c.var_names + tuple(
            f"u{i}" for i in range(c.var_count + 1, fresh + 1))
    return Formula(var_count=fresh, clauses=tuple(out), var_names=names)


def _sorted_clause(cl: Clause3) -> Clause3:
    return Clause3(tuple(sorted(cl.literals, key=lambda l: l.var)))


def _block(base: int) -> VariableGroup:
    return VariableGroup(base + 1, base + 2, base + 3, base + 4, base + 5)


def to_mnae(c: Formula) -> tuple[Formula, VarMap]:
    """Reduce a 3-SAT formula to its monotone NAE twin.

    The input must already have three distinct variables per clause
    (run normalize_clauses first).  Literals are sorted by variable id
    inside each clause before reduction; the sorted clauses are recorded
    in the returned map.
    """
    for cl in c.clauses:
        if cl.has_repeated_variable():
            raise ValueError(
                f"clause {cl} repeats a variable; normalize_clauses first")
    n = c.var_count
    m = len(c.clauses)
    var_groups = tuple(_block(5 * u) for u in range(n))
    clause_groups = tuple(_block(5 * n + 5 * r) for r in range(m))
    z = 5 * (n + m) + 1

    def rep(lit: Literal) -> Literal:
        g = var_groups[lit.var - 1]
        return Literal(g.alpha if lit.positive else g.beta, True)

    sorted_clauses = tuple(_sorted_clause(cl) for cl in c.clauses)
    out: list[Clause3] = []
    pairs: list[tuple[int, int]] = []
    for r, cl in enumerate(sorted_clauses):
        lo, mid, hi = cl.literals
        sel = clause_groups[r]
        pairs.append((len(out), len(out) + 1))
        out.append(Clause3((rep(lo), rep(mid), Literal(sel.alpha, True))))
        out.append(Clause3((Literal(sel.beta, True), rep(hi), Literal(z, True))))
    for g in var_groups + clause_groups:
        al, be = Literal(g.alpha, True), Literal(g.beta, True)
        pa, pb, pc = (Literal(g.a, True), Literal(g.b, True),
                      Literal(g.c, True))
        out.append(Clause3((al, be, pa)))
        out.append(Clause3((al, be, pb)))
        out.append(Clause3((al, be, pc)))
        out.append(Clause3((pa, pb, pc)))
    f = Formula(var_count=z, clauses=tuple(out))
    vm = VarMap(var_groups=var_groups, clause_groups=clause_groups, z=z,
                clause_pairs=tuple(pairs), sorted_clauses=sorted_clauses)
    return f, vm


def _nae3(x: bool, y: bool, w: bool) -> bool:
    return not (x == y == w)


def lift_assignment(c: Formula, vm: VarMap, a: Assignment,
                    z_value: bool) -> Assignment:
    """Lift an assignment of the input formula to one of its NAE twin.

    The hidden value of variable u's block is a(u) xor z_value, so that
    "alpha differs from the pivot" recovers a(u).  Selector values are
    chosen false-first per clause; padding is fixed to a=true, b=c=false.
    The result NAE-satisfies the output formula exactly when ``a``
    standard-satisfies every input clause; otherwise LiftFailed names
    the first clause that cannot be covered.
    """
    if len(a.values) != c.var_count:
        raise ValueError("assignment size does not match the input formula")
    sorted_clauses = vm.sorted_clauses
    if sorted_clauses is None:
        sorted_clauses = tuple(_sorted_clause(cl) for cl in c.clauses)
    values = [False] * vm.z

    def set_block(g: VariableGroup, hidden: bool) -> None:
        values[g.alpha - 1] = hidden
        values[g.beta - 1] = not hidden
        values[g.a - 1] = True

    for u in range(1, vm.var_count + 1):
        set_block(vm.var_groups[u - 1], a.value(u) ^ z_value)

    def hidden_of(lit: Literal) -> bool:
        y = a.value(lit.var) ^ z_value
        return y if lit.positive else not y

    for r, cl in enumerate(sorted_clauses):
        lo, mid, hi = (hidden_of(l) for l in cl.literals)
        for w in (False, True):
            if _nae3(lo, mid, w) and _nae3(not w, hi, z_value):
                break
        else:
            raise LiftFailed(
                f"input clause {r} is not standard-satisfied, cannot lift")
        set_block(vm.clause_groups[r], w)
    values[vm.z - 1] = z_value
    return Assignment(tuple(values))


def project_assignment(vm: VarMap, af: Assignment) -> Assignment:
    """Read the input-formula assignment back out of an NAE witness.

    Variable u is true iff its block's alpha differs from the pivot.
    The blocks of an NAE witness always carry alpha != beta; that much
    is checked here to catch assignments that never satisfied the twin.
    """
    if len(af.values) != vm.z:
        raise ValueError("assignment size does not match the output formula")
    for g in vm.groups():
        if af.value(g.alpha) == af.value(g.beta):
            raise ValueError(
                f"variables {g.alpha} and {g.beta} agree; not an NAE witness")
    zv = af.value(vm.z)
    return Assignment(tuple(
        af.value(vm.var_groups[u].alpha) != zv for u in range(vm.var_count)))


def two_choice_instance(c: Formula) -> TwoChoiceInstance:
    """Reduce and package with the benchmark value d = 2*(N-1)/5."""
    f, vm = to_mnae(c)
    return TwoChoiceInstance(formula=f, d=2 * (vm.z - 1) // 5, map=vm)


def format_mapping(vm: VarMap) -> str:
    """Serialize a VarMap to the line-oriented mapping format.

    One ``var`` line per input variable, one ``clause`` line per input
    clause (0-based output clause indices), and the ``z`` line.
    """
    lines = []
    for u, g in enumerate(vm.var_groups, start=1):
        lines.append(f"var {u} alpha {g.alpha} beta {g.beta} "
                     f"a {g.a} b {g.b} c {g.c}")
    for r, (i, j) in enumerate(vm.clause_pairs, start=1):
        lines.append(f"clause {r} F {i} F' {j}")
    lines.append(f"z {vm.z}")
    return "\n".join(lines) + "\n"


def parse_mapping(text: str) -> VarMap:
    """Parse a mapping file back into a VarMap.

    Mapping files always describe the canonical block layout, so the
    clause blocks are reconstructed from the variable and clause counts.
    The sorted input clauses are not part of the format and come back as
    None.
    """
    var_groups: dict[int, VariableGroup] = {}
    pairs: dict[int, tuple[int, int]] = {}
    z = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if parts[0] == "var":
            if (len(parts) != 12 or parts[2] != "alpha" or parts[4] != "beta"
                    or parts[6] != "a" or parts[8] != "b" or parts[10] != "c"):
                raise ValueError(f"line {lineno}: malformed var line")
            u = int(parts[1])
            var_groups[u] = VariableGroup(*(int(parts[i]) for i in (3, 5, 7, 9, 11)))
        elif parts[0] == "clause":
            if len(parts) != 6 or parts[2] != "F" or parts[4] != "F'":
                raise ValueError(f"line {lineno}: malformed clause line")
            pairs[int(parts[1])] = (int(parts[3]), int(parts[5]))
        elif parts[0] == "z":
            if len(parts) != 2:
                raise ValueError(f"line {lineno}: malformed z line")
            z = int(parts[1])
        else:
            raise ValueError(f"line {lineno}: unknown record {parts[0]!r}")
    if z is None:
        raise ValueError("mapping has no z line")
    n, m = len(var_groups), len(pairs)
    if sorted(var_groups) != list(range(1, n + 1)):
        raise ValueError("var lines must cover 1..n")
    if sorted(pairs) != list(range(1, m + 1)):
        raise ValueError("clause lines must cover 1..m")
    if z != 5 * (n + m) + 1:
        raise ValueError(f"z = {z} does not match 5*({n}+{m})+1")
    vm = VarMap(
        var_groups=tuple(var_groups[u] for u in range(1, n + 1)),
        clause_groups=tuple(_block(5 * n + 5 * r) for r in range(m)),
        z=z,
        clause_pairs=tuple(pairs[r] for r in range(1, m + 1)),
    )
    for u, g in enumerate(vm.var_groups):
        if g != _block(5 * u):
            raise ValueError(f"var {u + 1} block does not follow the layout")
    return vm
