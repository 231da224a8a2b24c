"""Reference semantics for ASP-style programs: least models of pure
programs, reducts, and brute-force answer-set enumeration.

This module is an oracle for desk-scale cross-validation, not a solver.
"""

from __future__ import annotations

from itertools import product
from typing import Dict, FrozenSet, List, Optional, Set, Tuple

from .ast import (Atom, Const, DefaultLit, Inspect, Lit, Literal, Program,
                  Rule)
from .hypotheses import HypothesisSet
from .interpretations import is_consistent, literal_value, valuation
from .reports import EngineStats
from .values import F, T, TruthValue, U, default_neg, strong_neg

BRUTE_FORCE_ATOM_BOUND = 20


class BruteForceBoundError(ValueError):
    pass


def generate_least(program: Program,
                   hypotheses: Optional[HypothesisSet] = None,
                   stats: Optional[EngineStats] = None) -> FrozenSet[Literal]:
    """Least fixpoint of rule application under membership semantics.

    A conjunct fires when every classical literal in it is already derived;
    strong-negated literals count as independent propositions here.  Truth
    constants other than ``#t`` block their conjunct.  Default literals are
    only allowed when ``hypotheses`` supplies their values (they fire only
    on an assumed-true value); inspection tests must have been eliminated.
    """
    derived: Set[Literal] = set()
    # conjuncts compiled to frozensets of required literals; None = blocked
    pending: List[Tuple[int, Set[Literal]]] = []  # (rule_index, missing)
    by_literal: Dict[Literal, List[int]] = {}
    queue: List[Literal] = []
    heads: List[Literal] = []

    def derive(literal: Literal) -> None:
        if literal not in derived:
            derived.add(literal)
            queue.append(literal)

    entry = 0
    for rule in program:
        conjuncts = rule.body if rule.body else ((),)
        for conjunct in conjuncts:
            if stats is not None:
                stats.body_evaluations += 1
            needed: Set[Literal] = set()
            blocked = False
            for element in conjunct:
                if isinstance(element, Lit):
                    needed.add(element.literal)
                elif isinstance(element, Const):
                    blocked |= element.value is not T
                elif isinstance(element, DefaultLit):
                    if hypotheses is None:
                        raise ValueError(
                            f"rule '{rule}' is not pure: default literal "
                            f"'not {element.literal}' needs hypotheses or a reduct")
                    blocked |= hypotheses.value_of(element.literal) is not T
                else:
                    raise ValueError(
                        f"rule '{rule}' contains an inspection test; "
                        "eliminate inspections before bottom-up evaluation")
            if blocked:
                continue
            if not needed:
                derive(rule.head)
                continue
            heads.append(rule.head)
            pending.append((entry, set(needed)))
            for literal in needed:
                by_literal.setdefault(literal, []).append(entry)
            entry += 1

    missing = {idx: miss for idx, miss in pending}
    head_of = {idx: heads[idx] for idx, _ in pending}
    while queue:
        literal = queue.pop()
        for idx in by_literal.get(literal, ()):
            miss = missing.get(idx)
            if miss is None:
                continue
            miss.discard(literal)
            if stats is not None:
                stats.body_evaluations += 1
            if not miss:
                del missing[idx]
                derive(head_of[idx])
    return frozenset(derived)


def reduct(program: Program, interpretation) -> Program:
    """Replace every default literal by the truth constant it evaluates to
    under the (consistent) interpretation."""
    if not is_consistent(interpretation):
        raise ValueError("the reduct is defined for consistent interpretations only")
    return _reduct_by(program,
                      lambda lit: default_neg(literal_value(interpretation, lit)))


def _reduct_by(program: Program, naf_value) -> Program:
    rules = []
    for rule in program:
        body = tuple(
            tuple(Const(naf_value(e.literal)) if isinstance(e, DefaultLit) else e
                  for e in conjunct)
            for conjunct in rule.body)
        rules.append(Rule(rule.head, body))
    return Program(tuple(rules))


def _reject_inspections(program: Program) -> None:
    if any(isinstance(e, Inspect) for r in program for e in r.elements()):
        raise ValueError("inspection tests are outside the answer-set fragment")


def enumerate_answer_sets(program: Program, cap: Optional[int] = None,
                          atom_bound: int = BRUTE_FORCE_ATOM_BOUND
                          ) -> List[FrozenSet[Literal]]:
    """All answer sets, by exhaustive search, in canonical order.

    An answer set is a consistent interpretation equal to the least model
    of its own reduct.  Since the reduct depends only on the values of the
    default-negated atoms, candidates range over three-valued assignments
    of those atoms; each fixpoint is checked against its generating
    assignment.
    """
    _reject_inspections(program)
    atoms = sorted(program.atoms())
    if len(atoms) > atom_bound:
        raise BruteForceBoundError(
            f"{len(atoms)} atoms exceed the brute-force bound of {atom_bound}")
    naf_atoms = sorted({l.atom for l in program.default_literals()})
    results: Set[FrozenSet[Literal]] = set()
    for combo in product((T, U, F), repeat=len(naf_atoms)):
        assignment = dict(zip(naf_atoms, combo))

        def naf_value(literal: Literal) -> TruthValue:
            value = assignment[literal.atom]
            return default_neg(strong_neg(value) if literal.negated else value)

        candidate = generate_least(_reduct_by(program, naf_value))
        if not is_consistent(candidate):
            continue
        if all(valuation(candidate, atom) is assignment[atom] for atom in naf_atoms):
            results.add(candidate)
    ordered = sorted(results, key=lambda m: tuple(sorted(str(l) for l in m)))
    if cap is not None:
        ordered = ordered[:cap]
    return ordered
