"""Generalized stratification with respect to a class of body expressions.

A stratification splits the rules into ordered strata so that each atom is
fully defined (all rules concluding it or its strong negation) in a single
stratum, ordinary body dependencies resolve at the same or a lower stratum,
and dependencies through the designated expression kind -- default literals
(kind ``"D"``) or inspection tests (kind ``"I"``) -- resolve strictly lower.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Optional, Set, Tuple

from .ast import Atom, DefaultLit, Inspect, Program, element_literals
from .graphs import strongly_connected_components

KIND_DEFAULT = "D"
KIND_INSPECT = "I"

_KIND_CLASSES = {KIND_DEFAULT: DefaultLit, KIND_INSPECT: Inspect}


@dataclass
class Stratification:
    strata: List[FrozenSet[int]]  # rule indices per stratum, lowest first
    kind: str

    def stratum_of_rule(self, rule_index: int) -> int:
        for i, stratum in enumerate(self.strata):
            if rule_index in stratum:
                return i
        raise IndexError(f"rule index {rule_index} is in no stratum")


def _dependency_edges(program: Program, kind: str):
    """Edges between head atoms and body atoms, flagged strict when the
    body occurrence sits inside the designated expression kind."""
    strict_class = _KIND_CLASSES[kind]
    edges: Set[Tuple[Atom, Atom, bool]] = set()
    for rule in program:
        head_atom = rule.head.atom
        for element in rule.elements():
            strict = isinstance(element, strict_class)
            for literal in element_literals(element):
                edges.add((head_atom, literal.atom, strict))
    return edges


def find_stratification(program: Program, kind: str) -> Optional[Stratification]:
    """Build the canonical minimal-rank stratification, or None.

    Atoms defined together (an atom with both signs counts as one unit) are
    grouped by strongly connected components of the dependency graph; a
    stratification exists iff no component contains a strict edge.  Each
    component then gets the lowest stratum compatible with its dependencies.
    Atoms with no defining rules constrain nothing and sit below everything.
    """
    if kind not in _KIND_CLASSES:
        raise ValueError(f"unknown stratification kind {kind!r}; use 'D' or 'I'")
    edges = _dependency_edges(program, kind)
    atoms = program.atoms()
    graph: Dict[Atom, Set[Atom]] = {a: set() for a in atoms}
    for src, dst, _ in edges:
        graph[src].add(dst)
    components = strongly_connected_components(graph)
    component_of = {atom: i for i, members in enumerate(components)
                    for atom in members}
    for src, dst, strict in edges:
        if strict and component_of[src] == component_of[dst]:
            return None
    # Components arrive in reverse topological order, so dependencies are
    # ranked before their dependents.
    rank: Dict[int, int] = {}
    strict_out: Dict[int, Set[int]] = {i: set() for i in range(len(components))}
    lax_out: Dict[int, Set[int]] = {i: set() for i in range(len(components))}
    for src, dst, strict in edges:
        cs, cd = component_of[src], component_of[dst]
        if cs != cd:
            (strict_out if strict else lax_out)[cs].add(cd)
    defined_atoms = {rule.head.atom for rule in program}
    for i, members in enumerate(components):
        # Undefined atoms impose no stratum of their own.
        base = 1 if any(a in defined_atoms for a in members) else 0
        for dep in lax_out[i]:
            base = max(base, rank[dep])
        for dep in strict_out[i]:
            base = max(base, rank[dep] + 1)
        rank[i] = base
    by_rank: Dict[int, Set[int]] = {}
    for rule_index, rule in enumerate(program):
        r = rank[component_of[rule.head.atom]]
        by_rank.setdefault(r, set()).add(rule_index)
    strata = [frozenset(by_rank[r]) for r in sorted(by_rank)]
    return Stratification(strata, kind)


def validate_stratification(program: Program, strat: Stratification) -> bool:
    """Check the three stratification conditions for the given split."""
    strict_class = _KIND_CLASSES[strat.kind]
    n = len(program.rules)
    seen: Set[int] = set()
    for stratum in strat.strata:
        for rule_index in stratum:
            if not 0 <= rule_index < n:
                raise IndexError(f"rule index {rule_index} out of range")
            if rule_index in seen:
                return False
            seen.add(rule_index)
    if len(seen) != n:
        return False

    stratum_of_atom: Dict[Atom, int] = {}
    for i, stratum in enumerate(strat.strata):
        for rule_index in stratum:
            atom = program.rules[rule_index].head.atom
            previous = stratum_of_atom.setdefault(atom, i)
            if previous != i:
                return False  # the atom is not fully defined in one stratum

    for i, stratum in enumerate(strat.strata):
        for rule_index in stratum:
            for element in program.rules[rule_index].elements():
                strict = isinstance(element, strict_class)
                for literal in element_literals(element):
                    defined_at = stratum_of_atom.get(literal.atom)
                    if defined_at is None:
                        continue  # never concluded: lies below every stratum
                    if strict and defined_at >= i:
                        return False
                    if not strict and defined_at > i:
                        return False
    return True
