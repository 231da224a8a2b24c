"""Abstract syntax for the unified rule language.

A rule has a classical-literal head and a body that is a disjunction of
conjunctions of body elements.  Elements are plain literals, default
literals (``not l``), inspection tests (``l in {u,f}``) or truth constants
(``#t``).  An empty body denotes a fact.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import FrozenSet, Iterator, Set, Tuple, Union

from .values import VALUE_ORDER, TruthValue

Term = str


def is_variable(term: Term) -> bool:
    return term[:1].isupper()


@dataclass(frozen=True, order=True)
class Atom:
    predicate: str
    args: Tuple[Term, ...] = ()

    def __str__(self) -> str:
        if not self.args:
            return self.predicate
        return f"{self.predicate}({','.join(self.args)})"

    @property
    def is_ground(self) -> bool:
        return not any(is_variable(a) for a in self.args)

    def variables(self) -> Set[Term]:
        return {a for a in self.args if is_variable(a)}


@dataclass(frozen=True, order=True)
class Literal:
    atom: Atom
    negated: bool = False

    def __str__(self) -> str:
        return f"-{self.atom}" if self.negated else str(self.atom)

    def negate(self) -> "Literal":
        # Double strong negation collapses structurally: the sign is a bool.
        return Literal(self.atom, not self.negated)

    @property
    def is_ground(self) -> bool:
        return self.atom.is_ground


@dataclass(frozen=True)
class Lit:
    """A classical literal used as a body element."""

    literal: Literal

    def __str__(self) -> str:
        return str(self.literal)


@dataclass(frozen=True)
class DefaultLit:
    """A default-negated literal, ``not l``."""

    literal: Literal

    def __str__(self) -> str:
        return f"not {self.literal}"


@dataclass(frozen=True)
class Inspect:
    """A two-valued test of a literal's truth value, ``l in {u,f}``.

    An empty value set is permitted and always evaluates to false.
    """

    literal: Literal
    values: FrozenSet[TruthValue]

    def __str__(self) -> str:
        inner = ",".join(str(v) for v in sorted(self.values, key=VALUE_ORDER.get))
        return f"{self.literal} in {{{inner}}}"


@dataclass(frozen=True)
class Const:
    """A truth constant used as a body element, written ``#t`` etc."""

    value: TruthValue

    def __str__(self) -> str:
        return f"#{self.value}"


BodyElement = Union[Lit, DefaultLit, Inspect, Const]
Conjunct = Tuple[BodyElement, ...]
Body = Tuple[Conjunct, ...]


def element_literals(element: BodyElement) -> Tuple[Literal, ...]:
    """The classical literals mentioned by a body element."""
    if isinstance(element, Const):
        return ()
    return (element.literal,)


@dataclass(frozen=True)
class Rule:
    head: Literal
    body: Body = ()

    @property
    def is_fact(self) -> bool:
        return not self.body

    def elements(self) -> Iterator[BodyElement]:
        for conjunct in self.body:
            yield from conjunct

    def variables(self) -> Set[Term]:
        out = self.head.atom.variables()
        for element in self.elements():
            for literal in element_literals(element):
                out |= literal.atom.variables()
        return out

    def __str__(self) -> str:
        if not self.body:
            return f"{self.head}."
        rendered = "; ".join(
            ", ".join(str(e) for e in conjunct) for conjunct in self.body)
        return f"{self.head} :- {rendered}."


class Dialect(str, Enum):
    PURE = "pure"
    NORMAL_ASP = "normal-asp"
    FOURQL = "fourql"
    FOURSP = "foursp"
    MIXED = "mixed"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class Program:
    rules: Tuple[Rule, ...]

    def __str__(self) -> str:
        return "\n".join(str(r) for r in self.rules)

    def __iter__(self) -> Iterator[Rule]:
        return iter(self.rules)

    def __len__(self) -> int:
        return len(self.rules)

    @property
    def is_ground(self) -> bool:
        return not any(r.variables() for r in self.rules)

    @property
    def dialect(self) -> Dialect:
        return classify_dialect(self)

    def atoms(self) -> Set[Atom]:
        out = set()
        for rule in self.rules:
            out.add(rule.head.atom)
            for element in rule.elements():
                for literal in element_literals(element):
                    out.add(literal.atom)
        return out

    def constants(self) -> Set[Term]:
        out = set()
        for rule in self.rules:
            for atom in [rule.head.atom] + [
                    lit.atom for e in rule.elements() for lit in element_literals(e)]:
                out.update(a for a in atom.args if not is_variable(a))
        return out

    def default_literals(self) -> Set[Literal]:
        """Literals occurring under default negation."""
        return {e.literal for r in self.rules for e in r.elements()
                if isinstance(e, DefaultLit)}

    def inspected_literals(self) -> Set[Literal]:
        return {e.literal for r in self.rules for e in r.elements()
                if isinstance(e, Inspect)}


def guard_satisfied(rule: Rule) -> bool:
    """True unless the rule has a default literal with no non-default element
    alongside it."""
    if not any(isinstance(e, DefaultLit) for e in rule.elements()):
        return True
    return all(
        any(not isinstance(e, DefaultLit) for e in conjunct)
        for conjunct in rule.body
        if any(isinstance(e, DefaultLit) for e in conjunct))


def classify_dialect(program: Program) -> Dialect:
    """The most specific dialect of a (ground) program.

    ``normal-asp`` requires single-conjunct bodies without the inconsistent
    truth constant and with every default literal guarded by a non-default
    element; programs with default negation that fail those checks are
    ``foursp``.
    """
    has_naf = any(isinstance(e, DefaultLit) for r in program for e in r.elements())
    has_inspect = any(isinstance(e, Inspect) for r in program for e in r.elements())
    if has_naf and has_inspect:
        return Dialect.MIXED
    if has_inspect:
        return Dialect.FOURQL
    if not has_naf:
        return Dialect.PURE
    asp_shaped = all(
        len(r.body) <= 1
        and guard_satisfied(r)
        and not any(isinstance(e, Const) and e.value is TruthValue.INCONSISTENT
                    for e in r.elements())
        for r in program)
    return Dialect.NORMAL_ASP if asp_shaped else Dialect.FOURSP
