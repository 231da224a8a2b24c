"""Interpretations and formula evaluation.

An interpretation is a finite set of ground literals.  It induces a
four-valued assignment: an atom is true if only the positive literal is
present, false if only the negative one, inconsistent if both, unknown if
neither.
"""

from __future__ import annotations

from typing import AbstractSet, Dict, FrozenSet, Iterable, Mapping, Optional

from .ast import (Atom, Body, BodyElement, Const, DefaultLit, Inspect, Lit,
                  Literal, Program)
from .hypotheses import HypothesisSet
from .values import (F, I, Logic, T, TruthValue, U, default_neg, implies,
                     strong_neg)

Interpretation = AbstractSet[Literal]


def is_consistent(interpretation: Interpretation) -> bool:
    return not any(
        literal.negated and Literal(literal.atom) in interpretation
        for literal in interpretation)


def valuation(interpretation: Interpretation, atom: Atom) -> TruthValue:
    """The truth value of a proposition under the membership pattern."""
    pos = Literal(atom) in interpretation
    neg = Literal(atom, True) in interpretation
    if pos and neg:
        return I
    if pos:
        return T
    if neg:
        return F
    return U


def literal_value(interpretation: Interpretation, literal: Literal) -> TruthValue:
    """Valuation of a literal, with strong negation folded in."""
    value = valuation(interpretation, literal.atom)
    return strong_neg(value) if literal.negated else value


def to_interpretation(assignment: Mapping[Atom, TruthValue]) -> FrozenSet[Literal]:
    """The interpretation induced by a truth assignment."""
    literals = set()
    for atom, value in assignment.items():
        if value in (T, I):
            literals.add(Literal(atom))
        if value in (F, I):
            literals.add(Literal(atom, True))
    return frozenset(literals)


def valuation_map(interpretation: Interpretation,
                  atoms: Iterable[Atom]) -> Dict[Atom, TruthValue]:
    return {atom: valuation(interpretation, atom) for atom in atoms}


def eval_element(interpretation: Interpretation, element: BodyElement,
                 logic: Logic,
                 hypotheses: Optional[HypothesisSet] = None) -> TruthValue:
    """Value of a single body element.

    Default literals take their value from ``hypotheses`` when given,
    otherwise truth-functionally from the interpretation.  Inspection tests
    are always two-valued.
    """
    if isinstance(element, Const):
        return element.value
    if isinstance(element, Lit):
        return literal_value(interpretation, element.literal)
    if isinstance(element, Inspect):
        return T if literal_value(interpretation, element.literal) in element.values else F
    if hypotheses is not None:
        return hypotheses.value_of(element.literal)
    return default_neg(literal_value(interpretation, element.literal))


def eval_body(interpretation: Interpretation, body: Body, logic: Logic,
              hypotheses: Optional[HypothesisSet] = None) -> TruthValue:
    """Disjunction over conjuncts of conjunctions over elements; the empty
    body is true."""
    if not body:
        return T
    ordering = logic.ordering
    value = None
    for conjunct in body:
        conj_value = T
        for element in conjunct:
            conj_value = ordering.glb(
                conj_value, eval_element(interpretation, element, logic, hypotheses))
        value = conj_value if value is None else ordering.lub(value, conj_value)
    return value


def is_model(interpretation: Interpretation, program: Program,
             logic: Logic) -> bool:
    """True iff every rule, read as an implication from its body to its
    head, takes a designated value."""
    for rule in program:
        body_value = eval_body(interpretation, rule.body, logic)
        head_value = literal_value(interpretation, rule.head)
        if implies(body_value, head_value) not in logic.designated:
            return False
    return True
