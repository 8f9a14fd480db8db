"""3-literal CNF formulas, standard and not-all-equal evaluation, and the
representative digraph of a monotone formula.

The representative digraph has one vertex per variable and, for each
clause read left to right as (a | b | c), the arcs a->b, b->c, c->a
(duplicates collapsed).  Literal order inside a clause is therefore
significant and is preserved everywhere.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from typing import Iterable, NamedTuple

from .digraph import Digraph, enumerate_cycles
from ._rng import SplitMix64


class NotMonotoneError(Exception):
    """The operation is defined for monotone formulas only."""


class DimacsError(ValueError):
    """Malformed DIMACS CNF text."""


class RepeatedVariableError(DimacsError):
    """A parsed clause uses the same variable more than once."""


class Mode(str, Enum):
    STANDARD = "standard"   # a clause needs at least one true literal
    NAE = "nae"             # ... and at least one false literal


class Literal(NamedTuple):
    var: int
    positive: bool

    def value_under(self, values: tuple[bool, ...]) -> bool:
        v = values[self.var - 1]
        return v if self.positive else not v

    def __str__(self):
        return f"{'' if self.positive else '-'}{self.var}"


@dataclass(frozen=True)
class Clause3:
    """An ordered disjunction of exactly three literals.

    The usual case has three pairwise distinct variables (the parser
    enforces that); clauses with repeated variables can be built
    programmatically so that normalization can repair them.
    """

    literals: tuple[Literal, Literal, Literal]

    def __post_init__(self):
        if len(self.literals) != 3:
            raise ValueError("a clause has exactly three literals")
        for lit in self.literals:
            if lit.var < 1:
                raise ValueError(f"bad variable id {lit.var}")

    def variables(self) -> tuple[int, int, int]:
        return tuple(l.var for l in self.literals)

    def has_repeated_variable(self) -> bool:
        return len(set(self.variables())) < 3

    def __str__(self):
        return "(" + " | ".join(str(l) for l in self.literals) + ")"


def clause(a: int, b: int, c: int) -> Clause3:
    """Build a clause from DIMACS-style signed variable ids."""
    lits = []
    for x in (a, b, c):
        if x == 0:
            raise ValueError("0 is not a literal")
        lits.append(Literal(abs(x), x > 0))
    return Clause3(tuple(lits))


@dataclass(frozen=True)
class Formula:
    """A conjunction of 3-literal clauses over variables 1..var_count."""

    var_count: int
    clauses: tuple[Clause3, ...]
    var_names: tuple[str, ...] | None = None

    def __post_init__(self):
        if self.var_count < 0:
            raise ValueError("var_count must be >= 0")
        for cl in self.clauses:
            for lit in cl.literals:
                if lit.var > self.var_count:
                    raise ValueError(
                        f"literal {lit} exceeds var_count={self.var_count}")
        if self.var_names is not None and len(self.var_names) != self.var_count:
            raise ValueError("var_names must have one entry per variable")

    def name_of(self, v: int) -> str:
        if self.var_names is not None:
            return self.var_names[v - 1]
        return f"x{v}"


@dataclass(frozen=True)
class Assignment:
    """A total truth assignment; values[i] is the value of variable i+1."""

    values: tuple[bool, ...]

    def value(self, v: int) -> bool:
        return self.values[v - 1]

    def ones(self) -> frozenset:
        return frozenset(i + 1 for i, b in enumerate(self.values) if b)

    def popcount(self) -> int:
        return sum(self.values)

    @classmethod
    def from_ones(cls, n: int, ones: Iterable[int]) -> "Assignment":
        s = set(ones)
        return cls(tuple(i + 1 in s for i in range(n)))

    @classmethod
    def all_false(cls, n: int) -> "Assignment":
        return cls((False,) * n)


def evaluate(f: Formula, a: Assignment, mode: Mode | str) -> tuple[bool, list[int]]:
    """Evaluate ``f`` under ``a``; returns (satisfied, failing clause indices).

    Standard mode needs a true literal per clause; NAE mode needs a true
    and a false literal per clause.  Clause indices are 0-based.
    """
    mode = Mode(mode)
    if len(a.values) != f.var_count:
        raise ValueError("assignment size does not match var_count")
    failing = []
    for i, cl in enumerate(f.clauses):
        vals = [lit.value_under(a.values) for lit in cl.literals]
        ok = any(vals) if mode is Mode.STANDARD else any(vals) and not all(vals)
        if not ok:
            failing.append(i)
    return (not failing, failing)


def is_monotone(f: Formula) -> bool:
    return all(lit.positive for cl in f.clauses for lit in cl.literals)


def representative_graph(f: Formula) -> Digraph:
    """Representative digraph of a monotone formula.

    Vertices are all variable ids 1..var_count (isolated ones included).
    Raises NotMonotoneError on negative literals.
    """
    if not is_monotone(f):
        raise NotMonotoneError("representative graph needs a monotone formula")
    arcs = set()
    for cl in f.clauses:
        a, b, c = cl.variables()
        if len({a, b, c}) < 3:
            raise ValueError(f"clause {cl} repeats a variable")
        arcs.add((a, b))
        arcs.add((b, c))
        arcs.add((c, a))
    return Digraph(f.var_count, arcs)


def is_strongly_3_covered_form(f: Formula, cycle_limit: int) -> bool:
    """True iff every elementary cycle of the representative digraph
    contains the three variables of some clause.

    Raises LimitExceeded (via enumerate_cycles) when the graph has more
    than ``cycle_limit`` cycles.
    """
    g = representative_graph(f)
    clause_sets = {frozenset(cl.variables()) for cl in f.clauses}
    for cyc in enumerate_cycles(g, cycle_limit):
        cs = set(cyc)
        if not any(s <= cs for s in clause_sets):
            return False
    return True


def is_3c_digraph(g: Digraph, cycle_limit: int) -> bool:
    """True iff every elementary cycle contains three vertices that induce
    a directed 3-cycle in ``g``."""
    for cyc in enumerate_cycles(g, cycle_limit):
        if len(cyc) < 3:
            return False
        covered = False
        for x, y, z in combinations(sorted(cyc), 3):
            if ((x, y) in g.arcs and (y, z) in g.arcs and (z, x) in g.arcs) or \
               ((x, z) in g.arcs and (z, y) in g.arcs and (y, x) in g.arcs):
                covered = True
                break
        if not covered:
            return False
    return True


def parse_dimacs(text: str, allow_repeated_vars: bool = False) -> Formula:
    """Parse DIMACS CNF restricted to exactly-3-literal clauses.

    Clause literal order is preserved.  Clauses that use one variable
    twice are rejected unless ``allow_repeated_vars`` (normalization can
    repair them later).
    """
    header = None
    lits: list[int] = []
    clauses: list[Clause3] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("p"):
            if header is not None:
                raise DimacsError(f"line {lineno}: duplicate header")
            parts = line.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise DimacsError(f"line {lineno}: expected 'p cnf <n> <m>'")
            try:
                header = (int(parts[2]), int(parts[3]))
            except ValueError:
                raise DimacsError(f"line {lineno}: bad counts") from None
            continue
        if header is None:
            raise DimacsError(f"line {lineno}: clause before header")
        for tok in line.split():
            try:
                x = int(tok)
            except ValueError:
                raise DimacsError(f"line {lineno}: bad literal {tok!r}") from None
            if x == 0:
                if len(lits) != 3:
                    raise DimacsError(
                        f"line {lineno}: clause has {len(lits)} literals, need 3")
                cl = clause(*lits)
                if cl.has_repeated_variable() and not allow_repeated_vars:
                    raise RepeatedVariableError(
                        f"line {lineno}: clause {cl} repeats a variable")
                clauses.append(cl)
                lits = []
            else:
                if abs(x) > header[0]:
                    raise DimacsError(f"line {lineno}: variable {abs(x)} > {header[0]}")
                lits.append(x)
    if header is None:
        raise DimacsError("missing 'p cnf <n> <m>' header")
    if lits:
        raise DimacsError("unterminated clause at end of input")
    if len(clauses) != header[1]:
        raise DimacsError(f"header promised {header[1]} clauses, found {len(clauses)}")
    return Formula(var_count=header[0], clauses=tuple(clauses))


def format_dimacs(f: Formula) -> str:
    lines = [f"p cnf {f.var_count} {len(f.clauses)}"]
    for cl in f.clauses:
        lines.append(" ".join(
            str(l.var if l.positive else -l.var) for l in cl.literals) + " 0")
    return "\n".join(lines) + "\n"


def gen_3sat(seed: int, var_count: int, clause_count: int,
             monotone: bool = False) -> Formula:
    """Seed-deterministic random 3-SAT instance.

    Clauses use three distinct variables, sorted ascending, with random
    polarities (all positive when ``monotone``); duplicate clauses are
    redrawn.  Needs var_count >= 3.
    """
    if var_count < 3:
        raise ValueError("need at least 3 variables")
    if clause_count > math.comb(var_count, 3) * (1 if monotone else 8):
        raise ValueError("more distinct clauses requested than exist")
    rng = SplitMix64(seed)
    seen = set()
    clauses = []
    while len(clauses) < clause_count:
        vs = set()
        while len(vs) < 3:
            vs.add(rng.below(var_count) + 1)
        lits = tuple(Literal(v, True if monotone else rng.flip())
                     for v in sorted(vs))
        if lits in seen:
            continue
        seen.add(lits)
        clauses.append(Clause3(lits))
    return Formula(var_count=var_count, clauses=tuple(clauses))
