"""Grounding: instantiate rule variables over the program's constants."""

from __future__ import annotations

from itertools import product
from typing import Dict, List

from .ast import (Atom, BodyElement, Const, DefaultLit, Inspect, Lit, Literal,
                  Program, Rule, element_literals, is_variable)


class UnsafeRuleError(ValueError):
    def __init__(self, rule: Rule, reason: str):
        super().__init__(f"unsafe rule '{rule}': {reason}")
        self.rule = rule


def _check_safety(rule: Rule) -> None:
    if not rule.variables():
        return
    head_vars = rule.head.atom.variables()
    if rule.is_fact:
        if head_vars:
            raise UnsafeRuleError(rule, "a fact cannot contain variables")
        return
    for conjunct in rule.body:
        binders = set()
        guarded = set(head_vars)
        for element in conjunct:
            if isinstance(element, Lit) and not element.literal.negated:
                binders |= element.literal.atom.variables()
            elif isinstance(element, (DefaultLit, Inspect)):
                guarded |= element.literal.atom.variables()
        unbound = guarded - binders
        if unbound:
            raise UnsafeRuleError(
                rule,
                "variable(s) " + ", ".join(sorted(unbound))
                + " do not occur in a positive classical literal of the conjunct")


def _substitute_atom(atom: Atom, binding: Dict[str, str]) -> Atom:
    if not atom.args:
        return atom
    return Atom(atom.predicate, tuple(binding.get(a, a) for a in atom.args))


def _substitute_element(element: BodyElement, binding: Dict[str, str]) -> BodyElement:
    if isinstance(element, Const):
        return element
    literal = element.literal
    ground = Literal(_substitute_atom(literal.atom, binding), literal.negated)
    if isinstance(element, Lit):
        return Lit(ground)
    if isinstance(element, DefaultLit):
        return DefaultLit(ground)
    return Inspect(ground, element.values)


def ground(program: Program) -> Program:
    """Substitute every rule's variables with all combinations of constants
    occurring in the program.

    Rules must be safe: variables in a head or under ``not``/``in`` need a
    positive classical literal in the same conjunct to range over.
    """
    if program.is_ground:
        return program
    constants = sorted(program.constants())
    if not constants:
        raise UnsafeRuleError(
            next(r for r in program if r.variables()),
            "the program mentions no constants to ground over")
    rules: List[Rule] = []
    for rule in program:
        variables = sorted(rule.variables())
        if not variables:
            rules.append(rule)
            continue
        _check_safety(rule)
        for combo in product(constants, repeat=len(variables)):
            binding = dict(zip(variables, combo))
            head = Literal(_substitute_atom(rule.head.atom, binding),
                           rule.head.negated)
            body = tuple(
                tuple(_substitute_element(e, binding) for e in conjunct)
                for conjunct in rule.body)
            rules.append(Rule(head, body))
    return Program(tuple(rules))
