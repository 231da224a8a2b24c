"""Hypothesis sets: assumed truth values for default negations.

Each entry maps a ground literal ``l`` to the assumed value(s) of ``not l``
-- true, false, or both.  As parsed from user input every entry holds
exactly one value; the engine's closure may add the second, which marks
the hypothesis as contradicted (the default negation degrades to
inconsistent).
"""

from __future__ import annotations

from typing import Dict, FrozenSet, Iterable, List, Mapping, Set, Tuple

from .ast import Literal, Program
from .values import TruthValue

_ALLOWED = (TruthValue.TRUE, TruthValue.FALSE)


class HypothesisError(ValueError):
    pass


def _canonical_key(literal: Literal) -> Tuple[str, Tuple[str, ...], bool]:
    return (literal.atom.predicate, literal.atom.args, literal.negated)


class HypothesisSet:
    def __init__(self, entries: Mapping[Literal, Iterable[TruthValue]] | None = None):
        self.entries: Dict[Literal, Set[TruthValue]] = {}
        if entries:
            for literal, values in entries.items():
                for value in values:
                    self.assume(literal, value)

    def assume(self, literal: Literal, value: TruthValue) -> bool:
        """Record an assumed value for ``not literal``; returns True if new."""
        if value not in _ALLOWED:
            raise HypothesisError(f"assumed values must be t or f, not {value}")
        values = self.entries.setdefault(literal, set())
        if value in values:
            return False
        values.add(value)
        return True

    def covers(self, literal: Literal) -> bool:
        return literal in self.entries

    def value_of(self, literal: Literal) -> TruthValue:
        """The current value of ``not literal``: t, f, or i when contradicted."""
        try:
            values = self.entries[literal]
        except KeyError:
            raise HypothesisError(
                f"default literal 'not {literal}' is not covered by the hypothesis set")
        if len(values) == 2:
            return TruthValue.INCONSISTENT
        return next(iter(values))

    def contradicted(self) -> List[Literal]:
        """Literals whose hypothesis carries both assumed values."""
        return sorted((l for l, vs in self.entries.items() if len(vs) == 2),
                      key=_canonical_key)

    def restrict(self, literals: Iterable[Literal]) -> "HypothesisSet":
        keep = set(literals)
        return HypothesisSet({l: set(vs) for l, vs in self.entries.items() if l in keep})

    def copy(self) -> "HypothesisSet":
        return HypothesisSet({l: set(vs) for l, vs in self.entries.items()})

    def canonical_items(self) -> List[Tuple[Literal, FrozenSet[TruthValue]]]:
        return [(l, frozenset(self.entries[l]))
                for l in sorted(self.entries, key=_canonical_key)]

    def __eq__(self, other) -> bool:
        if not isinstance(other, HypothesisSet):
            return NotImplemented
        return {l: frozenset(v) for l, v in self.entries.items()} == \
               {l: frozenset(v) for l, v in other.entries.items()}

    def __len__(self) -> int:
        return len(self.entries)

    def __str__(self) -> str:
        parts = []
        for literal, values in self.canonical_items():
            rendered = "/".join(str(v) for v in sorted(values, key=str))
            parts.append(f"not {literal} = {rendered}")
        return "{" + ", ".join(parts) + "}"


def canonical_default_literals(program: Program) -> List[Literal]:
    """The program's default-negated literals in canonical order
    (predicate, arguments, sign)."""
    return sorted(program.default_literals(), key=_canonical_key)


def validate_coverage(hset: HypothesisSet, program: Program) -> None:
    """Check the set covers every and only the program's default literals,
    one assumption each."""
    needed = program.default_literals()
    given = set(hset.entries)
    missing = sorted(needed - given, key=_canonical_key)
    extra = sorted(given - needed, key=_canonical_key)
    if missing:
        raise HypothesisError(
            "missing hypotheses for: " + ", ".join(f"not {l}" for l in missing))
    if extra:
        raise HypothesisError(
            "hypotheses for literals not under default negation in the program: "
            + ", ".join(f"not {l}" for l in extra))
    for literal, values in hset.entries.items():
        if len(values) != 1:
            raise HypothesisError(
                f"hypothesis for 'not {literal}' must assume exactly one value")
